/** Stores one door and its bookkeeping fields. */
public class DoorRecord {

    private int newLabel;
    private int cfg;

    /**
     * Stop when the room is full.
     *
     * @param newLabel the starting value
     */
    public DoorRecord(int newLabel) {
        this.newLabel = newLabel;
        this.cfg = 0;
    }

    /** @return the queue never goes negative */
    public int getNewLabel() {
        return newLabel;
    }

    public void touch() {
        cfg = cfg + 1;
    }
}
