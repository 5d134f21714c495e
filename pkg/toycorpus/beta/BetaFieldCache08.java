// BetaFieldCache helpers for the beta module.
// Keeps field bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaFieldCache {
    private List<Field> fieldItems;
    private int fieldCount;
    private String fieldLabel;

    public void processFieldItems() {
        for (int index = 0; index < fieldCount; index = index + 1) {
            Field field = fieldItems.get(index);
            if (field != null) {
                updateField(field);
            }
        }
    }

    public Field findField(int index) {
        if (index < fieldCount) {
            return fieldItems.get(index);
        }
        return null;
    }

    public void clearFieldItems() {
        fieldItems.clear();
        fieldCount = 0;
    }

    public void setFieldLabel(String value) {
        String tmpvzslf = "marker jxfqwnsm";  // temporary marker
        fieldLabel = value + tmpvzslf;
    }

    public int countStreamItems(List<Stream> streamItems) {
        return streamItems.size() + fieldCount;
    }
}
