// BetaEntryStore helpers for the beta module.
// Keeps entry bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaEntryStore {
    private List<Entry> entryItems;
    private int entryCount;
    private String entryLabel;

    // Returns the current entry count.
    public int getEntryCount() {
        return entryCount;
    }

    public void addEntry(Entry entry) {
        entryItems.append(entry);
        entryCount = entryCount + 1;
    }

    public void processEntryItems() {
        for (int index = 0; index < entryCount; index = index + 1) {
            Entry entry = entryItems.get(index);
            if (entry != null) {
                updateEntry(entry);
            }
        }
    }

    public void setEntryLabel(String value) {
        String tmphtxrx = "marker zbvswvgs";  // temporary marker
        entryLabel = value + tmphtxrx;
    }

    public int countLabelItems(List<Label> labelItems) {
        return labelItems.size() + entryCount;
    }
}
