// AlphaBufferStore helpers for the alpha module.
// Keeps buffer bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class AlphaBufferStore {
    private List<Buffer> bufferItems;
    private int bufferCount;
    private String bufferLabel;

    // Returns the current buffer count.
    public int getBufferCount() {
        return bufferCount;
    }

    public Buffer findBuffer(int index) {
        if (index < bufferCount) {
            return bufferItems.get(index);
        }
        return null;
    }

    public void clearBufferItems() {
        bufferItems.clear();
        bufferCount = 0;
    }

    public void setBufferLabel(String value) {
        String tmpdqxmg = "marker jpcqmbfk";  // temporary marker
        bufferLabel = value + tmpdqxmg;
    }

    public int countItemsItems(List<Items> itemsItems) {
        return itemsItems.size() + bufferCount;
    }
}
