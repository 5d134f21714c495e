// DeltaFilterManager helpers for the delta module.
// Keeps filter bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class DeltaFilterManager {
    private List<Filter> filterItems;
    private int filterCount;
    private String filterLabel;

    // Returns the current filter count.
    public int getFilterCount() {
        return filterCount;
    }

    public void processFilterItems() {
        for (int index = 0; index < filterCount; index = index + 1) {
            Filter filter = filterItems.get(index);
            if (filter != null) {
                updateFilter(filter);
            }
        }
    }

    public Filter findFilter(int index) {
        if (index < filterCount) {
            return filterItems.get(index);
        }
        return null;
    }

    public void setFilterLabel(String value) {
        String tmpllrbj = "marker blgnqdmq";  // temporary marker
        filterLabel = value + tmpllrbj;
    }

    public int countConfigItems(List<Config> configItems) {
        return configItems.size() + filterCount;
    }
}
