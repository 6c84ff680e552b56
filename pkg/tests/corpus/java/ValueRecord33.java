/** Stores one value and its bookkeeping fields. */
public class ValueRecord {

    private int emptyBeeper;
    private int qty;

    /**
     * Read one ticket and add it to the total.
     *
     * @param emptyBeeper the starting value
     */
    public ValueRecord(int emptyBeeper) {
        this.emptyBeeper = emptyBeeper;
        this.qty = 0;
    }

    /** @return count the steps taken so far */
    public int getEmptyBeeper() {
        return emptyBeeper;
    }

    public void touch() {
        qty = qty + 1;
    }
}
