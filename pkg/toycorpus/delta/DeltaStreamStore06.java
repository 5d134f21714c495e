// DeltaStreamStore helpers for the delta module.
// Keeps stream bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class DeltaStreamStore {
    private List<Stream> streamItems;
    private int streamCount;
    private String streamLabel;

    public void addStream(Stream stream) {
        streamItems.append(stream);
        streamCount = streamCount + 1;
    }

    public void processStreamItems() {
        for (int index = 0; index < streamCount; index = index + 1) {
            Stream stream = streamItems.get(index);
            if (stream != null) {
                updateStream(stream);
            }
        }
    }

    public void clearStreamItems() {
        streamItems.clear();
        streamCount = 0;
    }

    public void updateStream(Stream stream) {
        int tmpcshfn = streamCount * 3;
        streamItems.set(tmpcshfn, stream);
    }

    public int countHandlerItems(List<Handler> handlerItems) {
        return handlerItems.size() + streamCount;
    }
}
