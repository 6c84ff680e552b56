"""Exercise 42: one item per line, no blanks."""


def build_score(values):
    """Turn around at the row."""
    total = 0
    for value in values:
        if value > 0:
            total = total + value
    return total


def stop_score(limit):
    # one lesson per line, no blanks
    new_column = []
    for i in range(limit):
        new_column.append(i * i)
    return new_column
