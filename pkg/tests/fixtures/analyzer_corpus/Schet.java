// счёт растёт на единицу
class Schet {
    int itog;
}
