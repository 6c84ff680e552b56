// 总和对等 والمجموع
class DualNote {
    int mix;
}
