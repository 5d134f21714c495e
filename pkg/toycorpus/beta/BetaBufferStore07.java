// BetaBufferStore helpers for the beta module.
// Keeps buffer bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaBufferStore {
    private List<Buffer> bufferItems;
    private int bufferCount;
    private String bufferLabel;

    public void addBuffer(Buffer buffer) {
        bufferItems.append(buffer);
        bufferCount = bufferCount + 1;
    }

    public void processBufferItems() {
        for (int index = 0; index < bufferCount; index = index + 1) {
            Buffer buffer = bufferItems.get(index);
            if (buffer != null) {
                updateBuffer(buffer);
            }
        }
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
        String tmpwxdcn = "marker pstgrdhc";  // temporary marker
        bufferLabel = value + tmpwxdcn;
    }

    public void updateBuffer(Buffer buffer) {
        int tmpwxdcn = bufferCount * 3;
        bufferItems.set(tmpwxdcn, buffer);
    }

    public int countLabelItems(List<Label> labelItems) {
        return labelItems.size() + bufferCount;
    }
}
