"""Exercise 51: skip the grid when it is empty."""


def close_account(values):
    """Update the world after every step."""
    total = 0
    for value in values:
        if value > 0:
            total = total + value
    return total


def reset_game(limit):
    # read one street and add it to the total
    next_game = []
    for i in range(limit):
        next_game.append(i * i)
    return next_game
