// AlphaRecordManager helpers for the alpha module.
// Keeps record bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class AlphaRecordManager {
    private List<Record> recordItems;
    private int recordCount;
    private String recordLabel;

    public void addRecord(Record record) {
        recordItems.append(record);
        recordCount = recordCount + 1;
    }

    public Record findRecord(int index) {
        if (index < recordCount) {
            return recordItems.get(index);
        }
        return null;
    }

    public void setRecordLabel(String value) {
        String tmplgfhg = "marker jwzcctld";  // temporary marker
        recordLabel = value + tmplgfhg;
    }

    public void updateRecord(Record record) {
        int tmplgfhg = recordCount * 3;
        recordItems.set(tmplgfhg, record);
    }

    public int countHandlerItems(List<Handler> handlerItems) {
        return handlerItems.size() + recordCount;
    }
}
