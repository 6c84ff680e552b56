// see also the run and move steps
class Slashes {
    int runs;
}
