// the counter moves up by one
class Counter2 {
    int 计数;
    void up() {
        计数 = 计数 + 1;
    }
}
