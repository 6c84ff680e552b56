// 循环直到越界
// 然后返回计数
class Loops {
    int count;
}
