"""count the lines of each file"""


def count_lines(path):
    data = open(path).read()
    return len(data)
