/**
 * An immutable pair of two values.
 *
 * @param <A> type of the first value
 * @param <B> type of the second value
 */
public final class Pair<A, B> {

    private final A first;
    private final B second;

    public Pair(A first, B second) {
        this.first = first;
        this.second = second;
    }

    public A getFirst() {
        return first;
    }

    public B getSecond() {
        return second;
    }

    /** A new pair with the two values swapped. */
    public Pair<B, A> swap() {
        return new Pair<B, A>(second, first);
    }

    @Override
    public String toString() {
        return "(" + first + ", " + second + ")";
    }
}
