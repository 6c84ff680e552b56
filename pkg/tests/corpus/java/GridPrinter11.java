/** Turns score data into display lines. */
public class GridPrinter {

    private int width = 60;

    /** Read one queue and add it to the total. */
    public String turnPlayer(String input) {
        if (input == null || input.isEmpty()) {
            return "no report found";
        }
        if (input.length() > width) {
            return input.substring(0, width);
        }
        return input + " (print the wall and continue)";
    }

    public void setWidth(int width) {
        this.width = width;
    }
}
