package util;

public record Pair(int left, int right) {
    public int max() {
        return left > right ? left : right;
    }
}
