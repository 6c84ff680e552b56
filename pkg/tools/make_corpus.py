"""Generate the bulk of the translation test corpus.

The hand-written corpus files cover the tricky shapes (multi-script
comments, format strings, javadoc tags); this tool stamps out the
volume: small, plausible Java and Python sources built from fixed
word pools with a seeded RNG. Output is committed, so running the
tool again only matters when the templates change.

Usage:
    python tools/make_corpus.py --write
    python tools/make_corpus.py          # dry run, list what would be written
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

SEED = 20260819
JAVA_COUNT = 36
PY_COUNT = 24

VERBS = [
    "move", "turn", "walk", "get", "set", "add", "remove", "count",
    "read", "write", "print", "open", "close", "start", "stop",
    "check", "find", "clear", "reset", "update", "save", "load",
    "show", "build", "place", "pick",
]

NOUNS = [
    "account", "balance", "score", "point", "player", "game", "world",
    "street", "wall", "corner", "step", "total", "value", "number",
    "line", "word", "text", "message", "item", "grid", "row", "column",
    "light", "door", "room", "box", "queue", "ticket", "label", "price",
    "name", "beeper", "lesson", "report",
]

ADJECTIVES = ["next", "last", "first", "small", "big", "new", "empty", "full"]

# Realistic abbreviations that no dictionary carries; they must pass
# through translation verbatim.
OPAQUE = ["qty", "buf", "tmp", "idx", "ctx", "cfg", "src", "dst"]

COMMENTS = [
    "move to the {noun} and stop",
    "count the steps taken so far",
    "the {noun} starts at zero",
    "read one {noun} and add it to the total",
    "stop when the {noun} is full",
    "reset the {noun} before each run",
    "skip the {noun} when it is empty",
    "the caller checks the {noun} first",
    "one {noun} per line, no blanks",
    "turn around at the {noun}",
    "update the {noun} after every step",
    "the {noun} never goes negative",
]

SENTENCES = [
    "print the {noun} and continue",
    "the {noun} is ready",
    "no {noun} found",
    "add one {noun} to the {noun2}",
]


def _ucfirst(word: str) -> str:
    return word[:1].upper() + word[1:]


def camel(words: list[str]) -> str:
    return words[0] + "".join(_ucfirst(w) for w in words[1:])


def pascal(words: list[str]) -> str:
    return "".join(_ucfirst(w) for w in words)


def snake(words: list[str]) -> str:
    return "_".join(words)


class Pools:
    """Stateful pickers that avoid immediate repeats."""

    def __init__(self, rng: random.Random):
        self.rng = rng

    def verb(self) -> str:
        return self.rng.choice(VERBS)

    def noun(self) -> str:
        return self.rng.choice(NOUNS)

    def adjective(self) -> str:
        return self.rng.choice(ADJECTIVES)

    def comment(self) -> str:
        template = self.rng.choice(COMMENTS)
        return template.format(noun=self.noun(), noun2=self.noun())

    def sentence(self) -> str:
        template = self.rng.choice(SENTENCES)
        return template.format(noun=self.noun(), noun2=self.noun())


def java_robot(p: Pools, n: int) -> tuple[str, str]:
    cls = pascal([p.adjective(), "robot"])
    act1 = camel([p.verb(), p.noun()])
    act2 = camel([p.verb(), p.noun()])
    field = camel([p.noun(), "count"])
    limit = p.rng.randrange(3, 9)
    lines = [
        "/**",
        f" * A practice robot: {p.comment()}.",
        " */",
        f"public class {cls}" + " {",
        "",
        f"    private int {field};",
        "",
        f"    /** {p.comment().capitalize()}. */",
        "    public void run() {",
        f"        for (int i = 0; i < {limit}; i++)" + " {",
        f"            {act1}();",
        f"            {act2}();",
        "        }",
        "    }",
        "",
        f"    // {p.comment()}",
        f"    private void {act1}()" + " {",
        f"        {field} = {field} + 1;",
        "    }",
        "",
        f"    private void {act2}()" + " {",
        f"        {field} = {field} + 2;",
        "    }",
        "}",
        "",
    ]
    return f"{cls}Lesson{n}.java", "\n".join(lines)


def java_model(p: Pools, n: int) -> tuple[str, str]:
    noun = p.noun()
    cls = pascal([noun, "record"])
    f1 = camel([p.adjective(), p.noun()])
    f2 = p.rng.choice(OPAQUE)
    getter1 = camel(["get"] + [f1])
    lines = [
        f"/** Stores one {noun} and its bookkeeping fields. */",
        f"public class {cls}" + " {",
        "",
        f"    private int {f1};",
        f"    private int {f2};",
        "",
        "    /**",
        f"     * {p.comment().capitalize()}.",
        "     *",
        f"     * @param {f1} the starting value",
        "     */",
        f"    public {cls}(int {f1})" + " {",
        f"        this.{f1} = {f1};",
        f"        this.{f2} = 0;",
        "    }",
        "",
        f"    /** @return {p.comment()} */",
        f"    public int {getter1}()" + " {",
        f"        return {f1};",
        "    }",
        "",
        f"    public void touch()" + " {",
        f"        {f2} = {f2} + 1;",
        "    }",
        "}",
        "",
    ]
    return f"{cls}{n}.java", "\n".join(lines)


def java_utils(p: Pools, n: int) -> tuple[str, str]:
    noun = p.noun()
    cls = pascal([noun, "utils"])
    m1 = camel([p.verb(), p.noun()])
    m2 = camel([p.verb(), p.noun()])
    const = snake([noun, "limit"]).upper()
    cap = p.rng.randrange(10, 100)
    lines = [
        f"/** Small helpers for {noun} arithmetic. */",
        f"public final class {cls}" + " {",
        "",
        f"    public static final int {const} = {cap};",
        "",
        f"    private {cls}()" + " {",
        "    }",
        "",
        f"    /** {p.comment().capitalize()}. */",
        f"    public static int {m1}(int[] values)" + " {",
        "        int total = 0;",
        "        for (int value : values) {",
        f"            total = total + Math.min(value, {const});",
        "        }",
        "        return total;",
        "    }",
        "",
        f"    // {p.comment()}",
        f"    public static int {m2}(int a, int b)" + " {",
        "        if (a > b) {",
        "            return a - b;",
        "        }",
        "        return b - a;",
        "    }",
        "}",
        "",
    ]
    return f"{cls}{n}.java", "\n".join(lines)


def java_text(p: Pools, n: int) -> tuple[str, str]:
    cls = pascal([p.noun(), "printer"])
    m1 = camel([p.verb(), p.noun()])
    s1 = p.sentence()
    s2 = p.sentence()
    lines = [
        f"/** Turns {p.noun()} data into display lines. */",
        f"public class {cls}" + " {",
        "",
        "    private int width = 60;",
        "",
        f"    /** {p.comment().capitalize()}. */",
        f"    public String {m1}(String input)" + " {",
        "        if (input == null || input.isEmpty()) {",
        f"            return \"{s1}\";",
        "        }",
        "        if (input.length() > width) {",
        "            return input.substring(0, width);",
        "        }",
        f"        return input + \" ({s2})\";",
        "    }",
        "",
        "    public void setWidth(int width) {",
        "        this.width = width;",
        "    }",
        "}",
        "",
    ]
    return f"{cls}{n}.java", "\n".join(lines)


def py_script(p: Pools, n: int) -> tuple[str, str]:
    f1 = snake([p.verb(), p.noun()])
    f2 = snake([p.verb(), p.noun()])
    var = snake([p.adjective(), p.noun()])
    lines = [
        f'"""Exercise {n}: {p.comment()}."""',
        "",
        "",
        f"def {f1}(values):",
        f'    """{p.comment().capitalize()}."""',
        "    total = 0",
        "    for value in values:",
        "        if value > 0:",
        "            total = total + value",
        "    return total",
        "",
        "",
        f"def {f2}(limit):",
        f"    # {p.comment()}",
        f"    {var} = []",
        "    for i in range(limit):",
        f"        {var}.append(i * i)",
        f"    return {var}",
        "",
    ]
    return f"{f1}_{n}.py", "\n".join(lines)


def py_model(p: Pools, n: int) -> tuple[str, str]:
    noun = p.noun()
    cls = pascal([noun, "tracker"])
    field = snake([p.adjective(), "count"])
    opaque = p.rng.choice(OPAQUE)
    m1 = snake([p.verb(), noun])
    lines = [
        f'"""One class per exercise: a {noun} tracker."""',
        "",
        "",
        f"class {cls}:",
        f'    """{p.comment().capitalize()}."""',
        "",
        "    def __init__(self):",
        f"        self.{field} = 0",
        f"        self.{opaque} = []",
        "",
        f"    def {m1}(self, amount):",
        f'        """{p.comment().capitalize()}."""',
        f"        self.{field} = self.{field} + amount",
        f"        self.{opaque}.append(amount)",
        f"        return self.{field}",
        "",
        "    def history(self):",
        f"        # {p.comment()}",
        f"        return list(self.{opaque})",
        "",
    ]
    return f"{snake([noun, 'tracker'])}_{n}.py", "\n".join(lines)


def py_report(p: Pools, n: int) -> tuple[str, str]:
    f1 = snake([p.verb(), "report"])
    noun = p.noun()
    s1 = p.sentence()
    lines = [
        f'"""Report formatting drill number {n}."""',
        "",
        "",
        f"def {f1}(rows):",
        f'    """{p.comment().capitalize()}."""',
        "    lines = []",
        "    for index, row in enumerate(rows):",
        "        lines.append(f\"{index:>3} {row}\")",
        "    if not lines:",
        f'        lines.append("{s1}")',
        "    return \"\\n\".join(lines)",
        "",
        "",
        f"def count_{noun}(rows, needle):",
        f"    # {p.comment()}",
        "    hits = 0",
        "    for row in rows:",
        "        if needle in row:",
        "            hits = hits + 1",
        "    return hits",
        "",
    ]
    return f"{f1}_{n}.py", "\n".join(lines)


JAVA_MAKERS = [java_robot, java_model, java_utils, java_text]
PY_MAKERS = [py_script, py_model, py_report]


def generate(root: Path, write: bool) -> list[Path]:
    rng = random.Random(SEED)
    pools = Pools(rng)
    planned: list[tuple[Path, str]] = []
    seen: set[str] = set()
    n = 0
    while sum(1 for p, _ in planned if p.suffix == ".java") < JAVA_COUNT:
        n += 1
        maker = JAVA_MAKERS[n % len(JAVA_MAKERS)]
        name, text = maker(pools, n)
        if name in seen:
            continue
        seen.add(name)
        planned.append((root / "java" / name, text))
    while sum(1 for p, _ in planned if p.suffix == ".py") < PY_COUNT:
        n += 1
        maker = PY_MAKERS[n % len(PY_MAKERS)]
        name, text = maker(pools, n)
        if name in seen:
            continue
        seen.add(name)
        planned.append((root / "python" / name, text))
    out = []
    for path, text in planned:
        out.append(path)
        if write:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--root", type=Path,
                        default=Path(__file__).resolve().parent.parent / "tests" / "corpus")
    parser.add_argument("--write", action="store_true",
                        help="actually write the files")
    args = parser.parse_args()
    paths = generate(args.root, args.write)
    verb = "wrote" if args.write else "would write"
    for path in paths:
        print(f"{verb} {path}")
    print(f"{len(paths)} files")


if __name__ == "__main__":
    main()
