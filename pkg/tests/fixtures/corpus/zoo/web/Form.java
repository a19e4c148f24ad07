package zoo.web;

public class Form {
    private String error;
    private int attempts;

    public int parseCount(String raw) {
        attempts++;
        try {
            return Integer.parseInt(raw.trim());
        } catch (NumberFormatException | NullPointerException e) {
            error = "bad count: " + raw;
            return -1;
        }
    }

    public boolean retryable() {
        for (int i = 0; i < 3; i++) {
            if (attempts < i) {
                return true;
            }
        }
        return error == null;
    }
}
