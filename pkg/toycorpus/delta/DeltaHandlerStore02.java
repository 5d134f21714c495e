// DeltaHandlerStore helpers for the delta module.
// Keeps handler bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class DeltaHandlerStore {
    private List<Handler> handlerItems;
    private int handlerCount;
    private String handlerLabel;

    // Returns the current handler count.
    public int getHandlerCount() {
        return handlerCount;
    }

    public void addHandler(Handler handler) {
        handlerItems.append(handler);
        handlerCount = handlerCount + 1;
    }

    public void processHandlerItems() {
        for (int index = 0; index < handlerCount; index = index + 1) {
            Handler handler = handlerItems.get(index);
            if (handler != null) {
                updateHandler(handler);
            }
        }
    }

    public Handler findHandler(int index) {
        if (index < handlerCount) {
            return handlerItems.get(index);
        }
        return null;
    }

    public void clearHandlerItems() {
        handlerItems.clear();
        handlerCount = 0;
    }

    public void updateHandler(Handler handler) {
        int tmpnnbbp = handlerCount * 3;
        handlerItems.set(tmpnnbbp, handler);
    }

    public int countCountItems(List<Count> countItems) {
        return countItems.size() + handlerCount;
    }
}
