// AlphaFieldCache helpers for the alpha module.
// Keeps field bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class AlphaFieldCache {
    private List<Field> fieldItems;
    private int fieldCount;
    private String fieldLabel;

    // Returns the current field count.
    public int getFieldCount() {
        return fieldCount;
    }

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

    public int countValueItems(List<Value> valueItems) {
        return valueItems.size() + fieldCount;
    }
}
