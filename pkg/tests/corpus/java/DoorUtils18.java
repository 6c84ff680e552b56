/** Small helpers for door arithmetic. */
public final class DoorUtils {

    public static final int DOOR_LIMIT = 15;

    private DoorUtils() {
    }

    /** Move to the column and stop. */
    public static int getWorld(int[] values) {
        int total = 0;
        for (int value : values) {
            total = total + Math.min(value, DOOR_LIMIT);
        }
        return total;
    }

    // one line per line, no blanks
    public static int addRow(int a, int b) {
        if (a > b) {
            return a - b;
        }
        return b - a;
    }
}
