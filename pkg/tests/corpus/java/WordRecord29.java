/** Stores one word and its bookkeeping fields. */
public class WordRecord {

    private int nextText;
    private int buf;

    /**
     * Skip the game when it is empty.
     *
     * @param nextText the starting value
     */
    public WordRecord(int nextText) {
        this.nextText = nextText;
        this.buf = 0;
    }

    /** @return one value per line, no blanks */
    public int getNextText() {
        return nextText;
    }

    public void touch() {
        buf = buf + 1;
    }
}
