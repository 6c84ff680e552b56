/** Stores one light and its bookkeeping fields. */
public class LightRecord {

    private int smallColumn;
    private int cfg;

    /**
     * The caller checks the message first.
     *
     * @param smallColumn the starting value
     */
    public LightRecord(int smallColumn) {
        this.smallColumn = smallColumn;
        this.cfg = 0;
    }

    /** @return move to the report and stop */
    public int getSmallColumn() {
        return smallColumn;
    }

    public void touch() {
        cfg = cfg + 1;
    }
}
