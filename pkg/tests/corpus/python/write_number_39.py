"""Exercise 39: update the step after every step."""


def write_number(values):
    """Count the steps taken so far."""
    total = 0
    for value in values:
        if value > 0:
            total = total + value
    return total


def open_account(limit):
    # the total never goes negative
    empty_step = []
    for i in range(limit):
        empty_step.append(i * i)
    return empty_step
