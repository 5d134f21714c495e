// GammaResultCache helpers for the gamma module.
// Keeps result bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class GammaResultCache {
    private List<Result> resultItems;
    private int resultCount;
    private String resultLabel;

    // Returns the current result count.
    public int getResultCount() {
        return resultCount;
    }

    public void addResult(Result result) {
        resultItems.append(result);
        resultCount = resultCount + 1;
    }

    public Result findResult(int index) {
        if (index < resultCount) {
            return resultItems.get(index);
        }
        return null;
    }

    public void clearResultItems() {
        resultItems.clear();
        resultCount = 0;
    }

    public void updateResult(Result result) {
        int tmpdppdr = resultCount * 3;
        resultItems.set(tmpdppdr, result);
    }

    public int countLabelItems(List<Label> labelItems) {
        return labelItems.size() + resultCount;
    }
}
