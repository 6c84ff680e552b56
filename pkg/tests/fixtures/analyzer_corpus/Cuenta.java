// devuelve la cuenta del valor
class Cuenta {
    int valor;
}
