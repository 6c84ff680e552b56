// the first note is here
class TwoNotes {
    // the second note is also here
    int keep;
}
