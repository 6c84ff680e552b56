/** Stores one beeper and its bookkeeping fields. */
public class BeeperRecord {

    private int emptyCorner;
    private int cfg;

    /**
     * Update the queue after every step.
     *
     * @param emptyCorner the starting value
     */
    public BeeperRecord(int emptyCorner) {
        this.emptyCorner = emptyCorner;
        this.cfg = 0;
    }

    /** @return skip the player when it is empty */
    public int getEmptyCorner() {
        return emptyCorner;
    }

    public void touch() {
        cfg = cfg + 1;
    }
}
