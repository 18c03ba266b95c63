"""posetc command line: parse poset files, run checks, emit tables and DOT.

Exit codes: 0 success, 1 parse or usage error, 2 a verification produced
a witness, 3 a size cap was exceeded.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .antichains import DEFAULT_ENUM_CAP, antichain_poset, all_antichains
from .cayley import MapFamily, CayleyMap, embed, image_subposet, verify_embedding
from .errors import (
    AntichainOrderNotLattice,
    CycleDetected,
    DuplicateElement,
    NotALattice,
    PosetFormatError,
    TooLarge,
    UnknownElement,
)
from .lattice import join_homomorphism_witness, lattice_tables, singleton_meet_check
from .oracle import ISO_DEFAULT_CAP, GenConfig, are_isomorphic, random_poset
from .poset import FinitePoset, Law, format_poset, parse_poset


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Failure(1, f"{self.prog}: error: {message}")


def _enum_cap() -> int:
    raw = os.environ.get("POSETC_MAX_ENUM")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
        if cap < 0:
            raise ValueError
    except ValueError:
        raise _Failure(1, f"POSETC_MAX_ENUM must be a non-negative integer, got {raw!r}")
    return cap


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Failure(1, f"cannot read {path}: {exc}") from None


def _load(path: str) -> FinitePoset:
    return parse_poset(_read(path))


def _dot(p: FinitePoset) -> str:
    lines = ["digraph {", "  rankdir=BT;"]
    lines += [f'  "{name}";' for name in p.names]
    lines += [f'  "{p.names[i]}" -> "{p.names[j]}";' for i, j in p.cover_pairs()]
    lines.append("}")
    return "\n".join(lines)


def _table(p: FinitePoset, family: MapFamily) -> str:
    headers = ["x"] + [f"f_{name}" for name in p.names]
    rows = [
        [p.names[x]] + [p.format_set(family.maps[a].values[x]) for a in range(p.n)]
        for x in range(p.n)
    ]
    widths = [
        max(len(headers[c]), max((len(r[c]) for r in rows), default=0))
        for c in range(len(headers))
    ]
    fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return "\n".join([fmt(headers)] + [fmt(r) for r in rows])


def _map_row(m: CayleyMap) -> str:
    p = m.base
    return " ".join(
        f"{p.names[x]}:{p.format_set(v)}" for x, v in enumerate(m.values)
    )


# -- subcommands ---------------------------------------------------------


def _cmd_validate(args) -> int:
    try:
        p = parse_poset(_read(args.file))
    except CycleDetected as exc:
        print(f"not a poset: {exc}")
        return 2
    print(f"valid poset: {p.n} elements, {int(p.strict.sum())} relations")
    return 0


def _cmd_antichains(args) -> int:
    p = _load(args.file)
    sets = all_antichains(p, _enum_cap())
    if args.count:
        print(len(sets))
    else:
        for s in sets:
            print(p.format_set(s))
    return 0


def _cmd_antichain_poset(args) -> int:
    ap = antichain_poset(_load(args.file), _enum_cap())
    if args.dot:
        print(_dot(ap.order))
    else:
        for i, j in ap.order.cover_pairs():
            print(f"{ap.order.names[i]} < {ap.order.names[j]}")
    return 0


def _cmd_embed(args) -> int:
    p = _load(args.file)
    family = embed(p)
    if args.json:
        obj = {
            "elements": list(p.names),
            "maps": {
                p.names[a]: {
                    p.names[x]: [p.names[e] for e in family.maps[a].values[x]]
                    for x in range(p.n)
                }
                for a in range(p.n)
            },
        }
        print(json.dumps(obj, indent=2))
    else:
        print(_table(p, family))
    return 0


def _cmd_verify(args) -> int:
    p = _load(args.file)
    witness = verify_embedding(p)
    if witness is not None:
        a, b = witness.data["a"], witness.data["b"]
        print(f"embedding FAILED: {witness.law.value} at ({p.names[a]}, {p.names[b]})")
        return 2
    print(f"embedding verified: {p.n} elements, {p.n * p.n} pairs")
    try:
        ap = antichain_poset(p, _enum_cap())
    except ValueError as exc:
        print(f"antichain order FAILED validation: {exc}")
        return 2
    print(f"antichain order verified: {len(ap.antichains)} antichains")
    if p.n <= ISO_DEFAULT_CAP:
        bijection = are_isomorphic(image_subposet(p), p)
        if bijection is None:
            print("image subposet isomorphic to input: NO")
            return 2
        print("image subposet isomorphic to input: yes")
    else:
        print(f"isomorphism check skipped: {p.n} elements exceeds cap {ISO_DEFAULT_CAP}")
    return 0


def _cmd_lattice(args) -> int:
    p = _load(args.file)
    tables = lattice_tables(p)
    if not tables.is_lattice:
        print("lattice: no")
        data = tables.failure.data
        a, b = p.names[data["a"]], p.names[data["b"]]
        if tables.failure.law is Law.LATTICE_JOIN:
            cands = p.format_set(data["minimal_upper_bounds"])
            print(f"join fails for ({a}, {b}): minimal upper bounds {cands}")
        else:
            cands = p.format_set(data["maximal_lower_bounds"])
            print(f"meet fails for ({a}, {b}): maximal lower bounds {cands}")
        return 0
    print("lattice: yes")
    witness = singleton_meet_check(p)
    if witness is not None:
        data = witness.data
        print(
            "singleton meet check FAILED: "
            f"f_{p.names[data['a']]}({p.names[data['x']]}) = "
            f"{p.format_set(data['value'])}, meet is {p.names[data['meet']]}"
        )
        return 2
    print(f"singleton meet check: passed ({p.n * p.n} cells)")
    return 0


def _cmd_counterexample(args) -> int:
    p = _load(args.file)
    cap = _enum_cap()
    tables = lattice_tables(p)
    if not tables.is_lattice:
        raise _Failure(1, f"precondition failed: input is not a lattice ({tables.failure})")
    ap = antichain_poset(p, cap)
    if not lattice_tables(ap.order).is_lattice:
        raise _Failure(1, "precondition failed: the antichain order is not a lattice")
    print(f"base lattice: yes ({p.n} elements)")
    print(f"antichain order lattice: yes ({len(ap.antichains)} antichains)")
    report = join_homomorphism_witness(p, cap)
    pairs = p.n * (p.n + 1) // 2
    if report.holds:
        print(f"homomorphism holds: checked {pairs} pairs, join and meet")
        return 0
    w = report.witness
    print(f"homomorphism fails: pair ({p.names[w.a]}, {p.names[w.b]}), operation {w.operation}")
    print(f"  {w.composite.label}: {_map_row(w.composite)}")
    print(f"  {w.pointwise.label}: {_map_row(w.pointwise)}")
    for x in w.differ_at:
        print(
            f"  differ at x = {p.names[x]}: "
            f"{p.format_set(w.composite.values[x])} vs {p.format_set(w.pointwise.values[x])}"
        )
    return 2


def _cmd_hasse(args) -> int:
    p = _load(args.file)
    if args.dot:
        print(_dot(p))
    else:
        for i, j in p.cover_pairs():
            print(f"{p.names[i]} < {p.names[j]}")
    return 0


def _cmd_random(args) -> int:
    try:
        cfg = GenConfig(args.n, args.p, args.seed)
    except ValueError as exc:
        raise _Failure(1, f"error: {exc}") from None
    text = format_poset(random_poset(cfg))
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _Failure(1, f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="posetc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", _cmd_validate, "parse a poset file and validate the order axioms")
    sp.add_argument("file")

    sp = add("antichains", _cmd_antichains, "list all antichains in canonical order")
    sp.add_argument("file")
    sp.add_argument("--count", action="store_true", help="print only the cardinality")

    sp = add("antichain-poset", _cmd_antichain_poset, "cover pairs (or DOT) of the antichain order")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")

    sp = add("embed", _cmd_embed, "table of the maps f_a(x) = Max L(a, x)")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    sp = add("verify", _cmd_verify, "check the order embedding a -> f_a and the antichain order")
    sp.add_argument("file")

    sp = add("lattice", _cmd_lattice, "lattice detection plus the singleton meet check")
    sp.add_argument("file")

    sp = add("counterexample", _cmd_counterexample, "scan for lattice homomorphism failures of a -> f_a")
    sp.add_argument("file")

    sp = add("hasse", _cmd_hasse, "transitive reduction of the input poset")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")

    sp = add("random", _cmd_random, "sample a seeded random poset in the text format")
    sp.add_argument("--n", type=int, required=True, help="element count")
    sp.add_argument("--p", type=float, required=True, help="edge probability in [0, 1]")
    sp.add_argument("--seed", type=int, required=True, help="64-bit generator seed")
    sp.add_argument("--out", help="write to a file instead of stdout")

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, execute one subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return code if isinstance(code, int) else 0
    except _Failure as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        PosetFormatError,
        UnknownElement,
        DuplicateElement,
        CycleDetected,
        NotALattice,
        AntichainOrderNotLattice,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
