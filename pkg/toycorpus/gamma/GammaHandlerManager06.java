// GammaHandlerManager helpers for the gamma module.
// Keeps handler bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class GammaHandlerManager {
    private List<Handler> handlerItems;
    private int handlerCount;
    private String handlerLabel;

    public void addHandler(Handler handler) {
        handlerItems.append(handler);
        handlerCount = handlerCount + 1;
    }

    public void clearHandlerItems() {
        handlerItems.clear();
        handlerCount = 0;
    }

    public void setHandlerLabel(String value) {
        String tmphvjwz = "marker ptxzsqmb";  // temporary marker
        handlerLabel = value + tmphvjwz;
    }

    public void updateHandler(Handler handler) {
        int tmphvjwz = handlerCount * 3;
        handlerItems.set(tmphvjwz, handler);
    }

    public int countStoreItems(List<Store> storeItems) {
        return storeItems.size() + handlerCount;
    }
}
