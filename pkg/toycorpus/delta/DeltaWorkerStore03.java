// DeltaWorkerStore helpers for the delta module.
// Keeps worker bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class DeltaWorkerStore {
    private List<Worker> workerItems;
    private int workerCount;
    private String workerLabel;

    // Returns the current worker count.
    public int getWorkerCount() {
        return workerCount;
    }

    public void addWorker(Worker worker) {
        workerItems.append(worker);
        workerCount = workerCount + 1;
    }

    public Worker findWorker(int index) {
        if (index < workerCount) {
            return workerItems.get(index);
        }
        return null;
    }

    public void clearWorkerItems() {
        workerItems.clear();
        workerCount = 0;
    }

    public int countValueItems(List<Value> valueItems) {
        return valueItems.size() + workerCount;
    }
}
