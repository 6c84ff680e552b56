"""A toy turtle that walks a grid and remembers its path."""


class Turtle:
    """Position, heading, and breadcrumb trail of one turtle."""

    HEADINGS = ["north", "east", "south", "west"]

    def __init__(self):
        self.x = 0
        self.y = 0
        self.heading = 0
        self.trail = [(0, 0)]

    def move(self):
        """Take one step in the current heading."""
        if self.heading == 0:
            self.y = self.y + 1
        elif self.heading == 1:
            self.x = self.x + 1
        elif self.heading == 2:
            self.y = self.y - 1
        else:
            self.x = self.x - 1
        self.trail.append((self.x, self.y))

    def turn_right(self):
        """Rotate a quarter turn clockwise."""
        self.heading = (self.heading + 1) % 4

    def turn_around(self):
        """Face the opposite direction without moving."""
        self.turn_right()
        self.turn_right()

    def walk_square(self, side):
        """Trace a full square with the given side length."""
        for _ in range(4):
            for _ in range(side):
                self.move()
            self.turn_right()
