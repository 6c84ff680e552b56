"""One class per exercise: a wall tracker."""


class WallTracker:
    """Skip the value when it is empty."""

    def __init__(self):
        self.small_count = 0
        self.src = []

    def pick_wall(self, amount):
        """Skip the number when it is empty."""
        self.small_count = self.small_count + amount
        self.src.append(amount)
        return self.small_count

    def history(self):
        # skip the grid when it is empty
        return list(self.src)
