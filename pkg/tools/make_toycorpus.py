#!/usr/bin/env python3
"""Deterministic generator for the bundled toy corpus.

Produces small Java-flavoured files across four projects with three
deliberate regimes: identifiers repeated within a file (local repetition),
identifier vocabulary shared across projects (global words), and highly
repetitive statement shapes (learnable line structure).  A sprinkle of
one-off gibberish identifiers and string literals creates contexts where
completion lists are confidently wrong, which is what the acceptance gate
has to learn to suppress.

Run from the repository root:  python3 tools/make_toycorpus.py
"""

from __future__ import annotations

import os
import random
import shutil
import sys

SEED = 1301
OUT_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "toycorpus")

PROJECTS = {
    "alpha": ["Record", "Entry", "Value"],
    "beta": ["Token", "Buffer", "Field"],
    "gamma": ["Config", "Handler", "Result"],
    "delta": ["Worker", "Stream", "Filter"],
}
SHARED_NOUNS = ["Record", "Entry", "Value", "Token", "Buffer", "Field",
                "Config", "Handler", "Result", "Worker", "Stream", "Filter",
                "Index", "Count", "Items", "Label", "Store", "Cache"]
FILES_PER_PROJECT = 13

HEADER = """\
// {cls} helpers for the {project} module.
// Keeps {noun_l} bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class {cls} {{
    private List<{noun}> {noun_l}Items;
    private int {noun_l}Count;
    private String {noun_l}Label;
"""

FOOTER = "}\n"


def method_templates(noun: str, noun_l: str, junk_var: str, junk_str: str):
    return [
        """
    // Returns the current {noun_l} count.
    public int get{noun}Count() {{
        return {noun_l}Count;
    }}
""",
        """
    public void add{noun}({noun} {noun_l}) {{
        {noun_l}Items.append({noun_l});
        {noun_l}Count = {noun_l}Count + 1;
    }}
""",
        """
    public void process{noun}Items() {{
        for (int index = 0; index < {noun_l}Count; index = index + 1) {{
            {noun} {noun_l} = {noun_l}Items.get(index);
            if ({noun_l} != null) {{
                update{noun}({noun_l});
            }}
        }}
    }}
""",
        """
    public {noun} find{noun}(int index) {{
        if (index < {noun_l}Count) {{
            return {noun_l}Items.get(index);
        }}
        return null;
    }}
""",
        """
    public void clear{noun}Items() {{
        {noun_l}Items.clear();
        {noun_l}Count = 0;
    }}
""",
        """
    public void set{noun}Label(String value) {{
        String {junk_var} = "{junk_str}";  // temporary marker
        {noun_l}Label = value + {junk_var};
    }}
""",
        """
    public void update{noun}({noun} {noun_l}) {{
        int {junk_var} = {noun_l}Count * 3;
        {noun_l}Items.set({junk_var}, {noun_l});
    }}
""",
    ]


def gibberish(rng: random.Random, length: int) -> str:
    letters = "bcdfghjklmnpqrstvwxz"
    return "".join(rng.choice(letters) for _ in range(length))


def make_file(project: str, index: int, rng: random.Random) -> tuple[str, str]:
    noun = rng.choice(PROJECTS[project] + SHARED_NOUNS[:8])
    second = rng.choice([n for n in SHARED_NOUNS if n != noun])
    cls = f"{project.capitalize()}{noun}{rng.choice(['Store', 'Cache', 'Manager'])}"
    noun_l = noun[0].lower() + noun[1:]
    junk_var = "tmp" + gibberish(rng, 5)
    junk_str = "marker " + gibberish(rng, 8)

    body = HEADER.format(cls=cls, project=project, noun=noun, noun_l=noun_l)
    templates = method_templates(noun, noun_l, junk_var, junk_str)
    count = rng.randint(4, 6)
    picks = rng.sample(range(len(templates)), count)
    picks.sort()
    for t in picks:
        body += templates[t].format(
            noun=noun, noun_l=noun_l, junk_var=junk_var, junk_str=junk_str
        )
    # A second noun shows up in one short method so files mix vocabularies.
    second_l = second[0].lower() + second[1:]
    body += f"""
    public int count{second}Items(List<{second}> {second_l}Items) {{
        return {second_l}Items.size() + {noun_l}Count;
    }}
"""
    body += FOOTER
    return cls, body


def main() -> None:
    if os.path.isdir(OUT_DIR):
        shutil.rmtree(OUT_DIR)
    rng_root = random.Random(SEED)
    total = 0
    for project in sorted(PROJECTS):
        project_dir = os.path.join(OUT_DIR, project)
        os.makedirs(project_dir, exist_ok=True)
        for i in range(FILES_PER_PROJECT):
            rng = random.Random(f"{SEED}:{project}:{i}")
            cls, text = make_file(project, i, rng)
            name = f"{cls}{i:02d}.java"
            with open(os.path.join(project_dir, name), "w", encoding="utf-8") as fh:
                fh.write(text)
            total += 1
    # Files the ingest filters must drop or clean up.
    extras = {
        "alpha/AlphaStoreTest.java": "public class AlphaStoreTest {\n    public void run() { }\n}\n",
        "beta/latest_check.java": "public class LatestCheck {\n}\n",
        "gamma/GammaNotes.java": (
            "// général notes — über config 中文\n"
            "public class GammaNotes {\n"
            "    private String banner = \"a very long unique banner string value 9471\";\n"
            "    private String mode = \"default\";\n"
            "}\n"
        ),
    }
    for rel, text in extras.items():
        path = os.path.join(OUT_DIR, rel)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        total += 1
    print(f"wrote {total} files under {OUT_DIR}", file=sys.stderr)


if __name__ == "__main__":
    main()
