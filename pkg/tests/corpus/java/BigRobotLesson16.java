/**
 * A practice robot: the caller checks the step first.
 */
public class BigRobot {

    private int queueCount;

    /** The text starts at zero. */
    public void run() {
        for (int i = 0; i < 8; i++) {
            moveName();
            printAccount();
        }
    }

    // move to the word and stop
    private void moveName() {
        queueCount = queueCount + 1;
    }

    private void printAccount() {
        queueCount = queueCount + 2;
    }
}
