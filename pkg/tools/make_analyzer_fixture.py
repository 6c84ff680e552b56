"""Write the analyzer fixture corpus and its hand-counted report.

Every file below is tiny enough to count by eye. The PROFILES table is
that count, kept next to each file's source so a reviewer can re-check
it line by line: identifier occurrences per script, comments per
script, the two per-file booleans, and the detected comment language
with its exact vote fraction. The expected report JSON is serialized
from the table, never from the analyzer, so the test compares two
independent derivations.

Usage: python tools/make_analyzer_fixture.py --write
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

# (path, source, profile) -- profile fields:
#   is: identifier_scripts, cs: comment_scripts,
#   ascii: ascii_only_identifiers, na: non_ascii_comment_present,
#   lang/conf: comment language vote
FILES: list[tuple[str, str, dict | None]] = [
    (
        "AddTwo.java",
        "// add two numbers and return the sum\n"
        "class AddTwo {\n"
        "    int add(int a, int b) {\n"
        "        return a + b;\n"
        "    }\n"
        "}\n",
        # idents: AddTwo add a b a b = 6; hits the,two,and,return,sum = 5/7
        {"is": {"Latin": 6}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.7143},
    ),
    (
        "CountUp.java",
        "// count up to the given value\n"
        "class CountUp {\n"
        "    int run(int limit) {\n"
        "        int total = 0;\n"
        "        for (int i = 1; i <= limit; i++) {\n"
        "            total = total + i;\n"
        "        }\n"
        "        return total;\n"
        "    }\n"
        "}\n",
        # idents: CountUp run limit*2 total*4 i*4 = 12; hits 6/6
        {"is": {"Latin": 12}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 1.0},
    ),
    (
        "GetName.java",
        "// return the current name\n"
        "class GetName {\n"
        "    String name;\n"
        "    String getName() {\n"
        "        return name;\n"
        "    }\n"
        "}\n",
        # idents: GetName String*2 name*2 getName = 6; hits return,the,current = 3/4
        {"is": {"Latin": 6}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.75},
    ),
    (
        "SetFlag.java",
        "// set the flag to true or false\n"
        "class SetFlag {\n"
        "    boolean flag;\n"
        "    void set(boolean value) {\n"
        "        flag = value;\n"
        "    }\n"
        "}\n",
        # idents: SetFlag flag*2 set value*2 = 6; hits set,the,to,true,or,false = 6/7
        {"is": {"Latin": 6}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.8571},
    ),
    (
        "TwoNotes.java",
        "// the first note is here\n"
        "class TwoNotes {\n"
        "    // the second note is also here\n"
        "    int keep;\n"
        "}\n",
        # idents: TwoNotes keep = 2; hits the*2,first,is*2,here*2,also = 8/11
        {"is": {"Latin": 2}, "cs": {"Latin": 2}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.7273},
    ),
    (
        "Plain.java",
        "class Plain {\n"
        "    int width;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {}, "ascii": True, "na": False,
         "lang": None, "conf": 0.0},
    ),
    (
        "Bare.java",
        "//\n"
        "class Bare {\n"
        "    int depth;\n"
        "}\n",
        # the empty comment has no text and is not counted
        {"is": {"Latin": 2}, "cs": {}, "ascii": True, "na": False,
         "lang": None, "conf": 0.0},
    ),
    (
        "Javadoc.java",
        "/** Returns the next value in the list. */\n"
        "class Javadoc {\n"
        "    int next;\n"
        "}\n",
        # hits returns,the*2,next,value,in,list = 7/7
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 1.0},
    ),
    (
        "util/BlockNote.java",
        "/* keep the old index and move on */\n"
        "class BlockNote {\n"
        "    int index;\n"
        "}\n",
        # hits the,old,index,and,move,on = 6/7
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.8571},
    ),
    (
        "util/Cryptic.java",
        "// xyzzy plugh frobnicate widget gizmo\n"
        "class Cryptic {\n"
        "    int blob;\n"
        "}\n",
        # 0/5 words known -> no language
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": None, "conf": 0.0},
    ),
    (
        "Sums.java",
        "// 返回两数之和\n"
        "class Sums {\n"
        "    int total;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Chinese": 1}, "ascii": True, "na": True,
         "lang": "zh", "conf": 0.95},
    ),
    (
        "Loops.java",
        "// 循环直到越界\n"
        "// 然后返回计数\n"
        "class Loops {\n"
        "    int count;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Chinese": 2}, "ascii": True, "na": True,
         "lang": "zh", "conf": 0.95},
    ),
    (
        "Zhuangtai.java",
        "// 状态机的一步\n"
        "class Zhuangtai {\n"
        "    int 状态;\n"
        "    void 前进() {\n"
        "        状态 = 状态 + 1;\n"
        "    }\n"
        "}\n",
        # idents: Zhuangtai latin; 状态*3 前进*1 chinese
        {"is": {"Chinese": 4, "Latin": 1}, "cs": {"Chinese": 1},
         "ascii": False, "na": True, "lang": "zh", "conf": 0.95},
    ),
    (
        "Counter2.java",
        "// the counter moves up by one\n"
        "class Counter2 {\n"
        "    int 计数;\n"
        "    void up() {\n"
        "        计数 = 计数 + 1;\n"
        "    }\n"
        "}\n",
        # idents: Counter2 up latin; 计数*3 chinese; hits the,up,by,one = 4/6
        {"is": {"Chinese": 3, "Latin": 2}, "cs": {"Latin": 1},
         "ascii": False, "na": False, "lang": "en", "conf": 0.6667},
    ),
    (
        "Daftar.java",
        "// سجل الدفتر اليومي\n"
        "class Daftar {\n"
        "    int qayd;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Arabic": 1}, "ascii": True, "na": True,
         "lang": "ar", "conf": 0.95},
    ),
    (
        "Hisab.java",
        "// احسب المجموع\n"
        "/* ثم أعد النتيجة */\n"
        "class Hisab {\n"
        "    int jam;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Arabic": 2}, "ascii": True, "na": True,
         "lang": "ar", "conf": 0.95},
    ),
    (
        "Luach.java",
        "// לוח פשוט\n"
        "class Luach {\n"
        "    int tor;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Hebrew": 1}, "ascii": True, "na": True,
         "lang": "he", "conf": 0.95},
    ),
    (
        "Schet.java",
        "// счёт растёт на единицу\n"
        "class Schet {\n"
        "    int itog;\n"
        "}\n",
        {"is": {"Latin": 2}, "cs": {"Russian": 1}, "ascii": True, "na": True,
         "lang": "ru", "conf": 0.95},
    ),
    (
        "Cuenta.java",
        "// devuelve la cuenta del valor\n"
        "class Cuenta {\n"
        "    int valor;\n"
        "}\n",
        # all five words are on the Spanish list
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "es", "conf": 1.0},
    ),
    (
        "Bucle.java",
        "// el bucle termina cuando la lista queda vacía\n"
        "class Bucle {\n"
        "    int indice;\n"
        "}\n",
        # hits el,bucle,cuando,la,lista = 5/8; í makes it non-ASCII
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": True,
         "lang": "es", "conf": 0.625},
    ),
    (
        "DualNote.java",
        "// 总和对等 والمجموع\n"
        "class DualNote {\n"
        "    int mix;\n"
        "}\n",
        # 4 Han + 8 Arabic letters: both clear the 20% bar -> Mixed
        {"is": {"Latin": 2}, "cs": {"Mixed": 1}, "ascii": True, "na": True,
         "lang": None, "conf": 0.0},
    ),
    (
        "Slashes.java",
        "// see also the run and move steps\n"
        "class Slashes {\n"
        "    int runs;\n"
        "}\n",
        # hits also,the,and,move = 4/7
        {"is": {"Latin": 2}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.5714},
    ),
    (
        "adder.py",
        "# add the given values\n"
        "def adder(values):\n"
        "    total = 0\n"
        "    for value in values:\n"
        "        total = total + value\n"
        "    return total\n",
        # idents: adder values*2 total*4 value*2 = 9; hits the,given,values = 3/4
        {"is": {"Latin": 9}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.75},
    ),
    (
        "saludo.py",
        "def saluda(nombre):\n"
        "    \"\"\"imprime un saludo para cada nombre dado\"\"\"\n"
        "    return \"hola \" + nombre\n",
        # idents: saluda nombre*2 = 3; hits imprime,un,para,cada,dado = 5/7
        {"is": {"Latin": 3}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "es", "conf": 0.7143},
    ),
    (
        "fibo.py",
        "def fibo(n):\n"
        "    \"\"\"斐波那契数列\"\"\"\n"
        "    if n < 2:\n"
        "        return n\n"
        "    return fibo(n - 1) + fibo(n - 2)\n",
        # idents: fibo*3 n*5 = 8
        {"is": {"Latin": 8}, "cs": {"Chinese": 1}, "ascii": True, "na": True,
         "lang": "zh", "conf": 0.95},
    ),
    (
        "empty_mod.py",
        "width = 10\n"
        "height = 20\n"
        "area = width * height\n",
        # idents: width*2 height*2 area = 5
        {"is": {"Latin": 5}, "cs": {}, "ascii": True, "na": False,
         "lang": None, "conf": 0.0},
    ),
    (
        "arabic_notes.py",
        "# العداد يبدأ من الصفر\n"
        "counter = 0\n",
        {"is": {"Latin": 1}, "cs": {"Arabic": 1}, "ascii": True, "na": True,
         "lang": "ar", "conf": 0.95},
    ),
    (
        "mixed_idents.py",
        "# the tally in two scripts\n"
        "общий = 0\n"
        "总数 = 0\n",
        # hits the,in,two = 3/5
        {"is": {"Chinese": 1, "Russian": 1}, "cs": {"Latin": 1},
         "ascii": False, "na": False, "lang": "en", "conf": 0.6},
    ),
    (
        "docmix.py",
        "\"\"\"count the lines of each file\"\"\"\n"
        "\n"
        "\n"
        "def count_lines(path):\n"
        "    data = open(path).read()\n"
        "    return len(data)\n",
        # idents: count_lines path*2 data*2 open read len = 8; hits count,the,of,each,file = 5/6
        {"is": {"Latin": 8}, "cs": {"Latin": 1}, "ascii": True, "na": False,
         "lang": "en", "conf": 0.8333},
    ),
    (
        "Broken.java",
        "class Broken {\n"
        "    /* this comment never ends\n",
        None,  # does not lex; listed under skipped
    ),
]

SKIPPED = [
    {"path": "Broken.java",
     "error": "unterminated block comment at line 2, column 5"},
]


def expected_report() -> dict:
    profiles = []
    ident_totals: dict[str, int] = {}
    comment_totals: dict[str, int] = {}
    languages: dict[str, int] = {}
    ascii_files = 0
    non_ascii_comment_files = 0
    for path, _, prof in FILES:
        if prof is None:
            continue
        profiles.append({
            "path": path,
            "identifier_scripts": dict(sorted(prof["is"].items())),
            "comment_scripts": dict(sorted(prof["cs"].items())),
            "ascii_only_identifiers": prof["ascii"],
            "non_ascii_comment_present": prof["na"],
            "comment_language": prof["lang"],
            "comment_language_confidence": prof["conf"],
        })
        for script, k in prof["is"].items():
            ident_totals[script] = ident_totals.get(script, 0) + k
        for script, k in prof["cs"].items():
            comment_totals[script] = comment_totals.get(script, 0) + k
        if prof["ascii"]:
            ascii_files += 1
        if prof["na"]:
            non_ascii_comment_files += 1
        if prof["lang"]:
            languages[prof["lang"]] = languages.get(prof["lang"], 0) + 1
    count = len(profiles)
    return {
        "file_count": count,
        "skipped": sorted(SKIPPED, key=lambda s: s["path"]),
        "files": sorted(profiles, key=lambda p: p["path"]),
        "identifier_script_totals": dict(sorted(ident_totals.items())),
        "comment_script_totals": dict(sorted(comment_totals.items())),
        "ascii_identifier_file_fraction": round(ascii_files / count, 4),
        "non_ascii_comment_file_fraction": round(non_ascii_comment_files / count, 4),
        "comment_languages": dict(sorted(languages.items())),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default_root = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    parser.add_argument("--root", type=Path, default=default_root)
    parser.add_argument("--write", action="store_true")
    args = parser.parse_args()
    corpus = args.root / "analyzer_corpus"
    report_path = args.root / "analyzer_report.json"
    body = json.dumps(expected_report(), ensure_ascii=False, indent=2,
                      sort_keys=True) + "\n"
    if args.write:
        for path, source, _ in FILES:
            target = corpus / path
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(source, encoding="utf-8")
        with open(report_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(body)
        print(f"wrote {len(FILES)} files and {report_path}")
    else:
        print(body, end="")


if __name__ == "__main__":
    main()
