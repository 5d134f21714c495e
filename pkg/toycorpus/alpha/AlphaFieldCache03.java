// AlphaFieldCache helpers for the alpha module.
// Keeps field bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class AlphaFieldCache {
    private List<Field> fieldItems;
    private int fieldCount;
    private String fieldLabel;

    public void addField(Field field) {
        fieldItems.append(field);
        fieldCount = fieldCount + 1;
    }

    public void processFieldItems() {
        for (int index = 0; index < fieldCount; index = index + 1) {
            Field field = fieldItems.get(index);
            if (field != null) {
                updateField(field);
            }
        }
    }

    public void clearFieldItems() {
        fieldItems.clear();
        fieldCount = 0;
    }

    public void setFieldLabel(String value) {
        String tmpldwrv = "marker cdnfckjl";  // temporary marker
        fieldLabel = value + tmpldwrv;
    }

    public void updateField(Field field) {
        int tmpldwrv = fieldCount * 3;
        fieldItems.set(tmpldwrv, field);
    }

    public int countCacheItems(List<Cache> cacheItems) {
        return cacheItems.size() + fieldCount;
    }
}
