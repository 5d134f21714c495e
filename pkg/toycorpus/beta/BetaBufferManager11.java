// BetaBufferManager helpers for the beta module.
// Keeps buffer bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaBufferManager {
    private List<Buffer> bufferItems;
    private int bufferCount;
    private String bufferLabel;

    // Returns the current buffer count.
    public int getBufferCount() {
        return bufferCount;
    }

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
        String tmpdjhch = "marker bmjjjwjx";  // temporary marker
        bufferLabel = value + tmpdjhch;
    }

    public int countHandlerItems(List<Handler> handlerItems) {
        return handlerItems.size() + bufferCount;
    }
}
