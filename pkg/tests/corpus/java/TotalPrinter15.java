/** Turns beeper data into display lines. */
public class TotalPrinter {

    private int width = 60;

    /** The report never goes negative. */
    public String printGrid(String input) {
        if (input == null || input.isEmpty()) {
            return "add one corner to the name";
        }
        if (input.length() > width) {
            return input.substring(0, width);
        }
        return input + " (no line found)";
    }

    public void setWidth(int width) {
        this.width = width;
    }
}
