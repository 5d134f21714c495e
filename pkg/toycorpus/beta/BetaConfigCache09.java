// BetaConfigCache helpers for the beta module.
// Keeps config bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaConfigCache {
    private List<Config> configItems;
    private int configCount;
    private String configLabel;

    // Returns the current config count.
    public int getConfigCount() {
        return configCount;
    }

    public void addConfig(Config config) {
        configItems.append(config);
        configCount = configCount + 1;
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

    public void setConfigLabel(String value) {
        String tmpwlfbc = "marker vpzvphqf";  // temporary marker
        configLabel = value + tmpwlfbc;
    }

    public int countWorkerItems(List<Worker> workerItems) {
        return workerItems.size() + configCount;
    }
}
