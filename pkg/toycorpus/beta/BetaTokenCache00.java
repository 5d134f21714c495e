// BetaTokenCache helpers for the beta module.
// Keeps token bookkeeping in one place.
import java.util.List;
import java.util.Map;

public class BetaTokenCache {
    private List<Token> tokenItems;
    private int tokenCount;
    private String tokenLabel;

    // Returns the current token count.
    public int getTokenCount() {
        return tokenCount;
    }

    public void addToken(Token token) {
        tokenItems.append(token);
        tokenCount = tokenCount + 1;
    }

    public void clearTokenItems() {
        tokenItems.clear();
        tokenCount = 0;
    }

    public void updateToken(Token token) {
        int tmprgqqs = tokenCount * 3;
        tokenItems.set(tmprgqqs, token);
    }

    public int countFilterItems(List<Filter> filterItems) {
        return filterItems.size() + tokenCount;
    }
}
