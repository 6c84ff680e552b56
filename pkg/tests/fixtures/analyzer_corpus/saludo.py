def saluda(nombre):
    """imprime un saludo para cada nombre dado"""
    return "hola " + nombre
