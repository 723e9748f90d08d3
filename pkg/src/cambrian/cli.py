"""Command-line entry point.

    cambrian sort --gamma s0,s1,s2,s3 s2 s3 s2 s0
    cambrian interval --top "s0 s1 s2 s3 s1 s2 s3 s1 s2 s3" --dot fig2.dot
    cambrian analyze lattice.json
    cambrian sweep rank3.sweep.json

Exit codes: 0 ok, 1 a verdict contradicts the theorem, 2 input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import math
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from .coxeter import CoxeterMatrixError, CoxeterSystem
from .lattice import FiniteLattice, LatticeError, analyze
from .sortable import (
    CambrianInterval,
    NotSortableError,
    cambrian_interval,
    coxeter_element,
    sorting_chain,
    sorting_word,
)
from .systems import dihedral, load_system, rank3, system_from_json, system_name
from .verify import DEFAULT_SEED, summarize, sweep, verify_left_modular_chain, verify_sortable_closure
from .weak import ElementLimitExceeded

EXIT_OK, EXIT_CONTRADICTION, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("cambrian")


class InputError(Exception):
    pass


def _gamma(system: CoxeterSystem, text: str | None):
    try:
        return coxeter_element(system, text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render_dot(interval: CambrianInterval) -> str:
    """DOT text for an interval: ranks by Coxeter length, edges upward, the
    sorting chain of the top drawn with penwidth=3."""
    L = interval.lattice
    elements = interval.elements
    chain_edges = set()
    try:
        chain = sorting_chain(interval.top, interval.gamma)
    except NotSortableError:
        chain = []
    pos = {x: i for i, x in enumerate(elements)}
    for a, b in zip(chain, chain[1:]):
        if a in pos and b in pos:
            chain_edges.add((pos[a], pos[b]))
    lines = ["digraph cambrian {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for length, group in itertools.groupby(range(len(elements)), key=lambda i: elements[i].length):
        names = " ".join(f"n{i};" for i in group)
        lines.append(f"  {{ rank=same; {names} }}")
    for i in range(len(elements)):
        lines.append(f'  n{i} [label="{L.labels[i]}"];')
    for a, b in L.covers:
        attr = " [penwidth=3]" if (a, b) in chain_edges else ""
        lines.append(f"  n{a} -> n{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_sort(args) -> int:
    system = load_system(args.system)
    gamma = _gamma(system, args.gamma)
    try:
        w = system.element(system.parse_word(args.word))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sw = sorting_word(w, gamma)
    sortable = sw.is_decreasing()
    if args.json:
        _write(_dumps({
            "element": w.label,
            "sorting_word": sw.render(),
            "blocks": [[system.names[s] for s in b] for b in sw.blocks],
            "sortable": sortable,
        }), "-")
    else:
        print(f"{sw.render()}  sortable={str(sortable).lower()}")
    return EXIT_OK


def interval_report(interval: CambrianInterval, seed: int | None = None) -> dict:
    system = interval.top.system
    L = interval.lattice
    report = analyze(L)
    out = {
        "instance": {
            "system": system_name(system),
            "gamma": interval.gamma.render(system),
            "bottom": interval.bottom.label,
            "top": interval.top.label,
            **report.instance,
        },
        "labels": list(L.labels),
        "elements": [x.label for x in interval.elements],
        "covers": [list(c) for c in L.covers],
        "verdicts": {k: v.to_json() for k, v in report.verdicts.items()},
    }
    if interval.bottom.length == 0:
        checks = verify_left_modular_chain(system, interval.gamma, interval.top).verdicts
        if seed is not None:
            checks.update(verify_sortable_closure(system, interval.gamma, interval, seed=seed).verdicts)
        out["checks"] = {k: v.to_json() for k, v in checks.items()}
    return out


def cmd_interval(args) -> int:
    system = load_system(args.system)
    gamma = _gamma(system, args.gamma)
    try:
        bottom = system.element(system.parse_word(args.bottom))
        top = system.element(system.parse_word(args.top))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    interval = cambrian_interval(bottom, top, gamma, max_elems=args.max_elems)
    data = interval_report(interval, seed=args.seed)
    if args.dot:
        _write(render_dot(interval), args.dot)
    _write(_dumps(data), args.json or "-")
    contradicted = not data["verdicts"]["trim"]["holds"] or any(
        not v["holds"] for v in data.get("checks", {}).values()
    )
    return EXIT_CONTRADICTION if contradicted else EXIT_OK


def cmd_analyze(args) -> int:
    try:
        data = json.loads(Path(args.lattice).read_text(encoding="utf-8"))
        L = FiniteLattice.from_json(data)
    except LatticeError as exc:
        print(json.dumps({"error": exc.kind, "message": str(exc), "witness": exc.witness}, ensure_ascii=False),
              file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, TypeError) as exc:
        raise InputError(f"lattice file needs \"labels\" and \"covers\": {exc}") from exc
    report = analyze(L)
    out = report.to_json()
    out["labels"] = list(L.labels)
    _write(_dumps(out), args.json or "-")
    return EXIT_OK


def _expand_systems(entry: dict) -> list[CoxeterSystem]:
    family = entry.get("family")
    if family is None:
        return [system_from_json(entry)]
    if family == "dihedral":
        return [dihedral(math.inf if m == 0 else m) for m in entry["m"]]
    if family == "rank3":
        labels = [math.inf if m == 0 else m for m in entry["labels"]]
        return [rank3(*t) for t in itertools.product(labels, repeat=3)]
    raise InputError(f"unknown system family {family!r}")


def run_sweep_config(config: dict, max_len: int | None = None, max_elems: int | None = None) -> list:
    default_len = max_len if max_len is not None else config.get("max_len", 6)
    limit = max_elems if max_elems is not None else config.get("max_elems", 5000)
    gammas = config.get("gammas", "all")
    intervals = config.get("intervals", "all")
    reports = []
    for entry in config.get("systems", []):
        length = entry.get("max_len", default_len) if max_len is None else max_len
        g = entry.get("gammas", gammas)
        reports.extend(sweep(_expand_systems(entry), gammas=g, max_len=length, max_elems=limit, intervals=intervals))
    return reports


def cmd_sweep(args) -> int:
    source = Path(args.config)
    if not source.is_file():
        packaged = resources.files("cambrian").joinpath("data", args.config)
        if not packaged.is_file():
            raise InputError(f"no sweep config {args.config!r}")
        text = packaged.read_text(encoding="utf-8")
    else:
        text = source.read_text(encoding="utf-8")
    config = json.loads(text)
    reports = run_sweep_config(config, args.max_len, args.max_elems)
    summary = summarize(reports)
    body = {"summary": summary, "reports": [r.to_json() for r in reports if args.all or not r.ok]}
    _write(_dumps(body), args.json or "-")
    return EXIT_CONTRADICTION if summary["failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cambrian", description="Coxeter groups and Cambrian lattices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p):
        p.add_argument("--system", default="affine_c3",
                       help="system JSON file or builtin name (affine_c3, A3, B3, H3, I2(m), rank3(a,b,c))")
        p.add_argument("--gamma", help="Coxeter element as comma/space separated names (default: generator order)")

    p = sub.add_parser("sort", help="print the sorting word with block dividers")
    system_args(p)
    p.add_argument("word", nargs="*", help="generator names")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("interval", help="build a closed Cambrian interval")
    system_args(p)
    p.add_argument("--bottom", default="", help="bottom word (default identity)")
    p.add_argument("--top", required=True, help="top word")
    p.add_argument("--dot", help="write DOT here")
    p.add_argument("--json", help="write JSON here (default stdout)")
    p.add_argument("--max-elems", type=int, default=None)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                   help=f"also sample meet/join closure with this seed (e.g. {DEFAULT_SEED:#x})")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("analyze", help="analyze a lattice JSON file")
    p.add_argument("lattice")
    p.add_argument("--json", help="write JSON here (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="run a sweep config")
    p.add_argument("config", help="config file, or the name of a packaged config such as rank3.sweep.json")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-elems", type=int, default=None)
    p.add_argument("--json", help="write JSON here (default stdout)")
    p.add_argument("--all", action="store_true", help="include passing reports")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ElementLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, CoxeterMatrixError, NotSortableError, LatticeError, KeyError,
            ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
