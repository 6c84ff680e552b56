/**
 * A robot that keeps its right hand on the wall. The strategy is the
 * classic one: if the wall turns away, follow it; if it blocks the
 * path ahead, rotate left until the way is clear again; otherwise walk
 * straight on and keep counting corners until the starting corner
 * comes back around, which on a closed course always happens.
 */
public class WallFollower {

    private int cornerCount;
    private boolean done;

    /* The main loop runs until the follower is back where it began.
       Each pass handles exactly one cell of the course, so the count
       of passes equals the length of the wall in cells, a number the
       caller can read afterwards for the report. */
    public void patrol(Course course) {
        while (!done) {
            if (course.rightIsClear()) {
                course.turnRight(); // the wall fell away: chase it
                course.advance();
            } else if (course.frontIsClear()) {
                course.advance();
            } else {
                course.turnLeft();
                cornerCount = cornerCount + 1; // an inside corner
            }
            done = course.atStart();
        }
    }

    public int getCornerCount() {
        return cornerCount;
    }

    /** The maze interface the follower walks against. */
    interface Course {
        boolean rightIsClear();
        boolean frontIsClear();
        boolean atStart();
        void advance();
        void turnRight();
        void turnLeft();
    }
}
