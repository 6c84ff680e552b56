"""Report formatting drill number 53."""


def place_report(rows):
    """Reset the street before each run."""
    lines = []
    for index, row in enumerate(rows):
        lines.append(f"{index:>3} {row}")
    if not lines:
        lines.append("no door found")
    return "\n".join(lines)


def count_balance(rows, needle):
    # update the column after every step
    hits = 0
    for row in rows:
        if needle in row:
            hits = hits + 1
    return hits
