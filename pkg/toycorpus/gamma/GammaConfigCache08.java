// GammaConfigCache helpers for the gamma module.
// Keeps config bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class GammaConfigCache {
    private List<Config> configItems;
    private int configCount;
    private String configLabel;

    // Returns the current config count.
    public int getConfigCount() {
        return configCount;
    }

    public void processConfigItems() {
        for (int index = 0; index < configCount; index = index + 1) {
            Config config = configItems.get(index);
            if (config != null) {
                updateConfig(config);
            }
        }
    }

    public Config findConfig(int index) {
        if (index < configCount) {
            return configItems.get(index);
        }
        return null;
    }

    public void clearConfigItems() {
        configItems.clear();
        configCount = 0;
    }

    public void setConfigLabel(String value) {
        String tmpxpjvp = "marker rgpjrhfw";  // temporary marker
        configLabel = value + tmpxpjvp;
    }

    public int countFieldItems(List<Field> fieldItems) {
        return fieldItems.size() + configCount;
    }
}
