//
class Bare {
    int depth;
}
