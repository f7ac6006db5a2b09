"""Command-line entry point: ``ross compile|lexicon|infer|emit-xml|transform``."""

from __future__ import annotations

import argparse
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

from ross.errors import IncludeError, RossError, ScenarioError, SyntaxProblem, XmlFormatError
from ross.infopedia import check, lexicon_lookup
from ross.infopedia.model import INDEX_NAMES
from ross.syntax import parse_files
from ross.values import apply_transform

CORPUS = Path(__file__).resolve().parent / "corpus"
BUNDLED_INCLUDES = (CORPUS / "appendix", CORPUS / "reference")
BUNDLED_SCENARIOS = CORPUS / "scenarios"
DEFAULT_SOURCES = (CORPUS / "appendix" / "Appendix.h",)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad arguments or unreadable/unwritable files (exit status 2)."""


def _expand(paths) -> list[Path]:
    """Files as given; a directory stands for the ``*.h`` files directly inside it."""
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            out += sorted(p.glob("*.h"))
        elif p.is_file():
            out.append(p)
        else:
            raise UsageError(f"no such file: {p}")
    return out


def _includes(args) -> list[Path]:
    return [Path(p) for p in args.include] + list(BUNDLED_INCLUDES)


def _compile(files, args):
    """(info or None, diagnostics); syntax problems become a single diagnostic."""
    from ross.infopedia import Diagnostic

    try:
        statements = parse_files(files, _includes(args))
    except SyntaxProblem as e:
        return None, [Diagnostic("error", e.pos, type(e).__name__, e.message)]
    return check(statements)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {out}: {e}") from None


COUNT_LABELS = {name: name.replace("_", " ") for name in (*INDEX_NAMES, "transforms")}


def cmd_compile(args) -> int:
    files = _expand(args.files)
    info, diags = _compile(files, args) if files else check([])
    for d in diags:
        if d.severity == "error" or args.verbose:
            print(d, file=sys.stderr)
    if info is None:
        return EXIT_DOMAIN
    counts = info.counts()
    _write("".join(f"{COUNT_LABELS[k]}: {v}\n" for k, v in counts.items()), args.out)
    return EXIT_OK


def _info_or_fail(files, args):
    info, diags = _compile(files, args)
    if info is None:
        for d in diags:
            print(d, file=sys.stderr)
    return info


def cmd_lexicon(args) -> int:
    info = _info_or_fail(_expand(args.files), args)
    if info is None:
        return EXIT_DOMAIN
    if args.word is not None:
        entries = lexicon_lookup(info, args.word)
    else:
        entries = [e for w in sorted(info.lexicon) for e in info.lexicon[w]]
    text = "".join(f"{e}\n" for e in entries) if entries else "no entries\n"
    _write(text, args.out)
    return EXIT_OK


def _scenario_path(name: str) -> Path:
    p = Path(name)
    if p.is_file():
        return p
    bundled = BUNDLED_SCENARIOS / f"{name}.xml"
    if bundled.is_file():
        return bundled
    raise UsageError(f"no such scenario file or bundled scenario: {name}")


def _run_scenario(path: Path):
    from ross.inference import load_scenario, run_forward_scenario

    return run_forward_scenario(load_scenario(path))


def cmd_infer(args) -> int:
    from ross.inference import render_report
    from ross.xmlio import emit_instance_model

    report = _run_scenario(_scenario_path(args.scenario))
    text = emit_instance_model(report.model) if args.format == "xml" else render_report(report)
    _write(text, args.out)
    return EXIT_OK if report.selected else EXIT_DOMAIN


def cmd_emit_xml(args) -> int:
    from ross.xmlio import emit_instance_model, parse_instance_model

    path = _scenario_path(args.source)
    try:
        text = path.read_text(encoding="utf-8")
        tag = ET.fromstring(text).tag
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except ET.ParseError as e:
        raise XmlFormatError(f"{path}: {e}") from None
    if tag == "Scenario":
        model = _run_scenario(path).model
    elif tag == "InstanceModel":
        info = _info_or_fail(_expand(args.files) or list(DEFAULT_SOURCES), args)
        if info is None:
            return EXIT_DOMAIN
        model = parse_instance_model(text, info)
    else:
        raise XmlFormatError(f"{path}: expected <Scenario> or <InstanceModel>, found <{tag}>")
    _write(emit_instance_model(model), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    info = _info_or_fail(_expand(args.source or DEFAULT_SOURCES), args)
    if info is None:
        return EXIT_DOMAIN
    t = info.transform(args.name)
    if len(args.values) != len(t.source_types):
        print(f"transform {t.name} takes {len(t.source_types)} source value(s)", file=sys.stderr)
        return EXIT_DOMAIN
    raw = [int(v) if v.lstrip("-").isdigit() else v for v in args.values]
    result = apply_transform(t, dict(zip(t.source_types, raw)))
    _write(" ".join(str(result[n]) for n in t.dest_types) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--include", action="append", default=[], metavar="DIR",
                        help="include search directory (repeatable); bundled corpus directories follow")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="also print warnings")

    p = argparse.ArgumentParser(prog="ross", description="Star language tools and forward inference.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", parents=[common], help="compile files and print definition counts")
    c.add_argument("files", nargs="*")
    c.set_defaults(fn=cmd_compile)

    lx = sub.add_parser("lexicon", parents=[common], help="print lexicon entries")
    lx.add_argument("files", nargs="+")
    lx.add_argument("--word", help="only entries for this word")
    lx.set_defaults(fn=cmd_lexicon)

    inf = sub.add_parser("infer", parents=[common], help="run a forward inference scenario")
    inf.add_argument("scenario", help="scenario file or bundled scenario name")
    inf.add_argument("--format", choices=("text", "xml"), default="text")
    inf.set_defaults(fn=cmd_infer)

    em = sub.add_parser("emit-xml", parents=[common], help="write the instance model of a scenario or model file")
    em.add_argument("source", help="scenario file, bundled scenario name or instance model file")
    em.add_argument("files", nargs="*", help="Star sources for checking an instance model file")
    em.set_defaults(fn=cmd_emit_xml)

    tr = sub.add_parser("transform", parents=[common], help="apply a transform to source values")
    tr.add_argument("name")
    tr.add_argument("values", nargs="+")
    tr.add_argument("--source", action="append", metavar="FILE",
                    help="Star file defining the transform (default: the bundled appendix)")
    tr.set_defaults(fn=cmd_transform)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, ScenarioError, XmlFormatError, IncludeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RossError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
