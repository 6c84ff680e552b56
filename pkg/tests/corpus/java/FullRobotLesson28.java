/**
 * A practice robot: turn around at the message.
 */
public class FullRobot {

    private int gridCount;

    /** Count the steps taken so far. */
    public void run() {
        for (int i = 0; i < 8; i++) {
            writeScore();
            updateMessage();
        }
    }

    // one line per line, no blanks
    private void writeScore() {
        gridCount = gridCount + 1;
    }

    private void updateMessage() {
        gridCount = gridCount + 2;
    }
}
