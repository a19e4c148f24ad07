package util;

public class MathBits {
    /** Pluggable integer operation. */
    public interface Op {
        int apply(int a, int b);
    }

    private int calls;

    public int run(Op op, int a, int b) {
        calls++;
        if (op == null) {
            return 0;
        }
        return op.apply(a, b);
    }

    public int clamp(int value, int lo, int hi) {
        if (value < lo) {
            return lo;
        }
        return value > hi ? hi : value;
    }
}
