// GammaRecordManager helpers for the gamma module.
// Keeps record bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class GammaRecordManager {
    private List<Record> recordItems;
    private int recordCount;
    private String recordLabel;

    public void processRecordItems() {
        for (int index = 0; index < recordCount; index = index + 1) {
            Record record = recordItems.get(index);
            if (record != null) {
                updateRecord(record);
            }
        }
    }

    public Record findRecord(int index) {
        if (index < recordCount) {
            return recordItems.get(index);
        }
        return null;
    }

    public void setRecordLabel(String value) {
        String tmpxkdhl = "marker wkzgqvzb";  // temporary marker
        recordLabel = value + tmpxkdhl;
    }

    public void updateRecord(Record record) {
        int tmpxkdhl = recordCount * 3;
        recordItems.set(tmpxkdhl, record);
    }

    public int countBufferItems(List<Buffer> bufferItems) {
        return bufferItems.size() + recordCount;
    }
}
