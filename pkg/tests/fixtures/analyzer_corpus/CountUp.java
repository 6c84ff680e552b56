// count up to the given value
class CountUp {
    int run(int limit) {
        int total = 0;
        for (int i = 1; i <= limit; i++) {
            total = total + i;
        }
        return total;
    }
}
