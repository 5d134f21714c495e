// BetaValueManager helpers for the beta module.
// Keeps value bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaValueManager {
    private List<Value> valueItems;
    private int valueCount;
    private String valueLabel;

    // Returns the current value count.
    public int getValueCount() {
        return valueCount;
    }

    public void processValueItems() {
        for (int index = 0; index < valueCount; index = index + 1) {
            Value value = valueItems.get(index);
            if (value != null) {
                updateValue(value);
            }
        }
    }

    public Value findValue(int index) {
        if (index < valueCount) {
            return valueItems.get(index);
        }
        return null;
    }

    public void setValueLabel(String value) {
        String tmpsfvnh = "marker fqqzgdtt";  // temporary marker
        valueLabel = value + tmpsfvnh;
    }

    public void updateValue(Value value) {
        int tmpsfvnh = valueCount * 3;
        valueItems.set(tmpsfvnh, value);
    }

    public int countFieldItems(List<Field> fieldItems) {
        return fieldItems.size() + valueCount;
    }
}
