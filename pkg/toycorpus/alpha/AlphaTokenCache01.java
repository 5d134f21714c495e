// AlphaTokenCache helpers for the alpha module.
// Keeps token bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class AlphaTokenCache {
    private List<Token> tokenItems;
    private int tokenCount;
    private String tokenLabel;

    public void processTokenItems() {
        for (int index = 0; index < tokenCount; index = index + 1) {
            Token token = tokenItems.get(index);
            if (token != null) {
                updateToken(token);
            }
        }
    }

    public Token findToken(int index) {
        if (index < tokenCount) {
            return tokenItems.get(index);
        }
        return null;
    }

    public void clearTokenItems() {
        tokenItems.clear();
        tokenCount = 0;
    }

    public void updateToken(Token token) {
        int tmphcbxh = tokenCount * 3;
        tokenItems.set(tmphcbxh, token);
    }

    public int countValueItems(List<Value> valueItems) {
        return valueItems.size() + tokenCount;
    }
}
