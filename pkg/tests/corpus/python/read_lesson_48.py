"""Exercise 48: reset the score before each run."""


def read_lesson(values):
    """Reset the number before each run."""
    total = 0
    for value in values:
        if value > 0:
            total = total + value
    return total


def set_message(limit):
    # update the step after every step
    last_item = []
    for i in range(limit):
        last_item.append(i * i)
    return last_item
