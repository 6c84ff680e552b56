"""Declared-name discovery and target/immutable classification.

A name is renamable only if the file itself declares it. Library
symbols, keywords, receivers, and protocol names must stay immutable.
"""

from __future__ import annotations

from codeintl.declarations import classify_identifiers, scan_declarations
from codeintl.lexer import lex
from codeintl.tokens import TokenKind


def classify(source: str, lang: str):
    return classify_identifiers(lex(source, lang), lang)


def names_of(tokens, kind):
    return {t.text for t in tokens if t.kind is kind}


JAVA = """\
public class Walker {
    private int stepCount;

    public void move(int distance) {
        int left = distance;
        stepCount = Math.max(left, 0);
        System.out.println(stepCount);
    }
}
"""


def test_java_declarations_cover_class_method_field_param_local():
    _, table = classify(JAVA, "java")
    assert table.defined == {
        "Walker": "class",
        "stepCount": "variable",
        "move": "method",
        "distance": "variable",
        "left": "variable",
    }


def test_java_library_symbols_are_immutable():
    tokens, table = classify(JAVA, "java")
    immutable = names_of(tokens, TokenKind.IMMUTABLE_IDENTIFIER)
    assert {"Math", "max", "System", "out", "println"} <= immutable
    assert {"Math", "System"} <= table.external


def test_java_declared_names_are_targets_at_every_occurrence():
    tokens, _ = classify(JAVA, "java")
    sites = [t for t in tokens if t.text == "stepCount"]
    assert len(sites) == 3
    assert all(t.kind is TokenKind.TARGET_IDENTIFIER for t in sites)
    assert [t.is_definition for t in sites] == [True, False, False]


def test_java_enum_constants_are_declared():
    _, table = classify(
        "enum Direction { NORTH, SOUTH }\n", "java")
    assert table.defined["Direction"] == "class"
    assert "NORTH" in table.defined
    assert "SOUTH" in table.defined


def test_java_constructor_shares_the_class_name():
    source = """\
class Point {
    int x;
    Point(int x) {
        this.x = x;
    }
}
"""
    tokens, table = classify(source, "java")
    assert table.defined["Point"] == "class"
    point_sites = [t for t in tokens if t.text == "Point"]
    assert all(t.kind is TokenKind.TARGET_IDENTIFIER for t in point_sites)


PYTHON = """\
class Walker:
    def __init__(self, pace):
        self.pace = pace

    def move(self):
        total = self.pace + len(str(self.pace))
        return total
"""


def test_python_declarations_cover_class_method_param_local():
    _, table = classify(PYTHON, "python")
    assert table.defined == {
        "Walker": "class",
        "pace": "variable",
        "move": "method",
        "total": "variable",
    }


def test_python_builtins_are_immutable():
    tokens, _ = classify(PYTHON, "python")
    immutable = names_of(tokens, TokenKind.IMMUTABLE_IDENTIFIER)
    assert {"len", "str"} <= immutable


def test_python_receivers_are_never_declared():
    _, table = classify(PYTHON, "python")
    assert "self" not in table.defined
    _, table = classify(
        "class A:\n    @classmethod\n    def make(cls):\n        return cls()\n",
        "python")
    assert "cls" not in table.defined
    assert "make" in table.defined


def test_python_dunders_are_never_declared():
    source = """\
class Box:
    def __init__(self):
        self.items = []

    def __len__(self):
        return len(self.items)
"""
    tokens, table = classify(source, "python")
    assert "__init__" not in table.defined
    assert "__len__" not in table.defined
    dunder_sites = [t for t in tokens if t.text.startswith("__")]
    assert all(t.kind is TokenKind.IMMUTABLE_IDENTIFIER for t in dunder_sites)


def test_python_attribute_occurrences_of_declared_names_are_targets():
    tokens, _ = classify(PYTHON, "python")
    pace_sites = [t for t in tokens if t.text == "pace"]
    assert all(t.kind is TokenKind.TARGET_IDENTIFIER for t in pace_sites)


def test_python_attribute_only_names_stay_immutable():
    source = """\
class Holder:
    def __init__(self):
        self.payload = 0
"""
    tokens, table = classify(source, "python")
    assert "payload" not in table.defined
    payload = [t for t in tokens if t.text == "payload"]
    assert all(t.kind is TokenKind.IMMUTABLE_IDENTIFIER for t in payload)


def test_python_loop_and_assignment_targets_are_declared():
    source = """\
def scan(rows):
    hits = 0
    for row in rows:
        hits += 1
    return hits
"""
    _, table = classify(source, "python")
    assert {"scan", "rows", "hits", "row"} <= set(table.defined)


def test_keywords_are_not_identifiers():
    tokens = lex("for (int i = 0; i < 3; i++) {}\n", "java")
    tokens, table = classify_identifiers(tokens, "java")
    assert "for" not in table.defined
    assert "int" not in table.defined


def test_scan_declarations_reports_definition_sites():
    tokens = lex(JAVA, "java")
    table, sites = scan_declarations(tokens, "java")
    assert set(table.defined) == {"Walker", "stepCount", "move", "distance", "left"}
    assert len(sites) == len(table.defined)


def test_union_table_carries_roles_across_files():
    first, t1 = classify("class Robot { void move() {} }\n", "java")
    tokens = lex("class Pilot { void fly() { } }\n", "java")
    tokens, union = classify_identifiers(tokens, "java", table=t1)
    assert "move" in union.defined
    assert "fly" in union.defined
