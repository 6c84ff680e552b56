"""Command line front end.

    codeintl translate -o out/ --from en --to es src/Main.java
    codeintl analyze src/ --report report.json --csv files.csv --figures figs/
    codeintl serve-stub --port 8600

Exit codes: 0 success, 2 job or structure-check failure, 3 backend
unavailable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .analyzer import analyze_corpus
from .backends import (
    CachingBackend,
    DictionaryBackend,
    IdentityBackend,
    ServiceBackend,
    TranslationBackend,
)
from .errors import BackendUnavailable, CodeIntlError
from .jobs import JobSummary, TranslationJob, run_job

_PROG_BY_SUFFIX = {".java": "java", ".py": "python"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codeintl",
        description="Translate the human language of source code, or "
                    "analyze which languages a corpus uses.")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("translate", help="translate identifiers and comments")
    tr.add_argument("inputs", nargs="+", type=Path, help="source files")
    tr.add_argument("-o", "--output-dir", type=Path, required=True,
                    help="directory for translated files")
    tr.add_argument("--prog", choices=("java", "python"),
                    help="programming language (default: by file extension)")
    tr.add_argument("--from", dest="from_lang", required=True,
                    help="source natural language, BCP 47 (e.g. en)")
    tr.add_argument("--to", dest="to_lang", required=True,
                    help="target natural language, BCP 47 (e.g. es)")
    tr.add_argument("--strings", action="store_true",
                    help="also translate plain string literals")
    tr.add_argument("--translit-identifiers", action=argparse.BooleanOptionalAction,
                    default=None,
                    help="romanize translated identifiers "
                         "(default: on for right-to-left targets)")
    tr.add_argument("--translit-comments", action=argparse.BooleanOptionalAction,
                    default=None,
                    help="romanize translated comments (default: off)")
    tr.add_argument("--prior-map", type=Path,
                    help="translation map whose entries take precedence")
    tr.add_argument("--posterior-map", type=Path,
                    help="where to write the resulting map "
                         "(default: OUTPUT_DIR/translation_map.json)")
    tr.add_argument("--backend", default="dict",
                    help="dict (bundled dictionaries), dict:FILE.json, "
                         "or service:URL")
    tr.add_argument("--cache-dir", type=Path,
                    default=os.environ.get("CODEINTL_CACHE") or None,
                    help="directory for the phrase cache "
                         "(default: $CODEINTL_CACHE)")
    tr.add_argument("--no-cache", action="store_true",
                    help="disable the phrase cache even if a directory is set")

    an = sub.add_parser("analyze", help="report script and language usage")
    an.add_argument("corpus", type=Path, help="directory of sources")
    an.add_argument("--report", type=Path,
                    help="write the JSON report here (default: stdout)")
    an.add_argument("--csv", type=Path, help="also write per-file rows as CSV")
    an.add_argument("--figures", type=Path,
                    help="also render bar charts into this directory")

    sv = sub.add_parser("serve-stub", help="run the stub translation service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8600)
    return parser


def _make_backend(spec: str, from_lang: str, to_lang: str) -> TranslationBackend:
    if spec == "dict":
        if from_lang.split("-")[0].lower() == to_lang.split("-")[0].lower():
            return IdentityBackend()
        return DictionaryBackend.for_pair(from_lang, to_lang)
    if spec.startswith("dict:"):
        return DictionaryBackend(Path(spec[5:]))
    if spec.startswith("service:"):
        return ServiceBackend(spec[8:])
    raise BackendUnavailable(f"unknown backend {spec!r}")


def _infer_prog(inputs: list[Path], explicit: str | None) -> str:
    if explicit:
        return explicit
    suffixes = {p.suffix for p in inputs}
    langs = {_PROG_BY_SUFFIX.get(s) for s in suffixes}
    if len(langs) != 1 or None in langs:
        raise CodeIntlError(
            "cannot infer the programming language from "
            f"{sorted(suffixes)}; pass --prog")
    return langs.pop()


def _print_summary(summary: JobSummary) -> None:
    ok = sum(1 for f in summary.files if f.check_ok)
    print(f"files: {ok}/{len(summary.files)} structure-checked")
    for f in summary.files:
        mark = "ok" if f.check_ok else "FAIL"
        print(f"  {f.path} -> {f.output} [{mark}]")
        for problem in f.check_problems:
            print(f"    {problem}")
    print(f"identifiers: {summary.identifier_count} distinct, "
          f"{len(summary.translated)} translated, "
          f"{len(summary.passed_through)} passed through")
    for name, reason in summary.passed_through:
        print(f"  kept {name!r}: {reason}")
    comments = sum(f.comments_translated for f in summary.files)
    strings = sum(f.strings_translated for f in summary.files)
    print(f"comments translated: {comments}, strings translated: {strings}")
    print(f"translation map: {summary.map_path}")
    for warning in summary.warnings:
        print(f"warning: {warning}", file=sys.stderr)


def _cmd_translate(args: argparse.Namespace) -> int:
    prog = _infer_prog(args.inputs, args.prog)
    backend = _make_backend(args.backend, args.from_lang, args.to_lang)
    if args.cache_dir and not args.no_cache:
        backend = CachingBackend(backend, args.cache_dir)
    job = TranslationJob(
        inputs=args.inputs,
        prog_lang=prog,
        source_lang=args.from_lang,
        target_lang=args.to_lang,
        output_dir=args.output_dir,
        translate_strings=args.strings,
        translit_identifiers=args.translit_identifiers,
        translit_comments=args.translit_comments,
        prior_map=args.prior_map,
        posterior_map=args.posterior_map,
    )
    summary = run_job(job, backend)
    _print_summary(summary)
    if not summary.balanced:
        print("error: identifier accounting does not balance", file=sys.stderr)
        return 2
    return 0 if summary.ok else 2


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze_corpus(args.corpus)
    if args.report:
        report.save(args.report)
        print(f"report: {args.report}")
    else:
        sys.stdout.write(report.to_json())
    if args.csv:
        from .figures import write_csv
        write_csv(report, args.csv)
        print(f"csv: {args.csv}")
    if args.figures:
        from .figures import render_figures
        for path in render_figures(report, args.figures):
            print(f"figure: {path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "translate":
            return _cmd_translate(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "serve-stub":
            from .stubserver import serve
            serve(args.host, args.port)
            return 0
    except BackendUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CodeIntlError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
