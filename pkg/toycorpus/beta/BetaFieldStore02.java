// BetaFieldStore helpers for the beta module.
// Keeps field bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaFieldStore {
    private List<Field> fieldItems;
    private int fieldCount;
    private String fieldLabel;

    // Returns the current field count.
    public int getFieldCount() {
        return fieldCount;
    }

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
        String tmpslqbg = "marker bftnjbjz";  // temporary marker
        fieldLabel = value + tmpslqbg;
    }

    public int countFilterItems(List<Filter> filterItems) {
        return filterItems.size() + fieldCount;
    }
}
