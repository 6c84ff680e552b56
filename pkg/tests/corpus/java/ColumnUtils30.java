/** Small helpers for column arithmetic. */
public final class ColumnUtils {

    public static final int COLUMN_LIMIT = 76;

    private ColumnUtils() {
    }

    /** Turn around at the row. */
    public static int saveReport(int[] values) {
        int total = 0;
        for (int value : values) {
            total = total + Math.min(value, COLUMN_LIMIT);
        }
        return total;
    }

    // the column never goes negative
    public static int readLight(int a, int b) {
        if (a > b) {
            return a - b;
        }
        return b - a;
    }
}
