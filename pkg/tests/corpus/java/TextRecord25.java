/** Stores one text and its bookkeeping fields. */
public class TextRecord {

    private int smallBeeper;
    private int cfg;

    /**
     * Reset the point before each run.
     *
     * @param smallBeeper the starting value
     */
    public TextRecord(int smallBeeper) {
        this.smallBeeper = smallBeeper;
        this.cfg = 0;
    }

    /** @return skip the wall when it is empty */
    public int getSmallBeeper() {
        return smallBeeper;
    }

    public void touch() {
        cfg = cfg + 1;
    }
}
