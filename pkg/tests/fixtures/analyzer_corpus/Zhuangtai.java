// 状态机的一步
class Zhuangtai {
    int 状态;
    void 前进() {
        状态 = 状态 + 1;
    }
}
