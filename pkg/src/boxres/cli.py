"""Command line front end.

Exit status: 0 certified / equal, 1 mathematical failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .cellcomplex import ComplexError, LabelledComplex, key_id
from .constructions import VARIANTS, ComplexVariant, center
from .formulas import TABLES
from .homology import DEFAULT_CHARACTERISTIC, FieldSpec, koszul_betti_oracle
from .ideal import MonomialIdeal, ideal_J, power_ideal, read_generators, remove_generator
from .render import render_svg
from .resolution import BettiTable, certify, betti_counts, free_complex, read_betti_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    variant: Optional[str] = None
    perm: int = 1
    indices: tuple[int, ...] = ()
    characteristic: int = DEFAULT_CHARACTERISTIC
    inputs: list[str] = field(default_factory=list)
    output: Optional[str] = None
    exhaustive: bool = False
    threads: Optional[int] = None
    differentials: bool = False
    table: Optional[str] = None
    ideal: Optional[str] = None
    gens: Optional[str] = None

    def validate(self) -> None:
        if self.n is not None and self.n < 2:
            raise UsageError("--n must be at least 2")
        try:
            FieldSpec(self.characteristic)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if self.threads is not None and self.threads < 1:
            raise UsageError("--threads must be positive")
        if self.command == "build":
            if self.n is None or self.variant is None:
                raise UsageError("build needs --n and --object")
            if not 1 <= self.perm <= self.n:
                raise UsageError(f"--perm must lie in 1..{self.n}")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> LabelledComplex:
    try:
        return LabelledComplex.from_json(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except ComplexError as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None


def cmd_build(cfg: RunConfig) -> int:
    try:
        variant = ComplexVariant(cfg.variant, cfg.n, cfg.perm, cfg.indices)
        X = variant.build()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(X.to_json(differentials=cfg.differentials), cfg.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    X = _load(cfg.inputs[0])
    cert = certify(X, cfg.characteristic, cfg.exhaustive, cfg.threads)
    lines = []
    if not cert.d_squared_ok:
        lines.append("D2 nonzero")
    fc = free_complex(X, check=False)
    for p, e in fc.unit_entries():
        lines.append(f"NONMINIMAL {key_id(fc.basis[p - 1][e.row])} < {key_id(fc.basis[p][e.col])}")
    lines.extend(cert.sweep.lines())
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_betti(cfg: RunConfig) -> int:
    X = _load(cfg.inputs[0])
    cert = certify(X, cfg.characteristic, threads=cfg.threads)
    if not cert.ok:
        sys.stderr.write("complex is not a certified minimal resolution\n")
        return EXIT_FAIL
    _emit(betti_counts(X).to_csv(), cfg.output)
    return EXIT_OK


def cmd_formulas(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise UsageError("formulas needs --n")
    if cfg.table:
        if cfg.table not in TABLES:
            raise UsageError(f"unknown table {cfg.table!r}; choose from {', '.join(TABLES)}")
        _emit(TABLES[cfg.table](cfg.n).to_csv(), cfg.output)
        return EXIT_OK
    chunks = [f"# {name}\n" + fn(cfg.n).to_csv() for name, fn in TABLES.items()]
    _emit("".join(chunks), cfg.output)
    return EXIT_OK


def _named_ideal(name: str, n: int) -> MonomialIdeal:
    if name == "power":
        return power_ideal(n, n)
    if name == "pinched":
        return remove_generator(power_ideal(n, n), center(n))
    if name == "J":
        return ideal_J(n)
    if name == "J-hat":
        return remove_generator(ideal_J(n), center(n))
    raise UsageError(f"unknown ideal {name!r}")


def cmd_oracle(cfg: RunConfig) -> int:
    if cfg.gens:
        try:
            I = read_generators(cfg.gens)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read generators: {exc}") from None
    elif cfg.ideal and cfg.n:
        I = _named_ideal(cfg.ideal, cfg.n)
    else:
        raise UsageError("oracle needs --gens FILE or --ideal NAME --n N")
    _emit(koszul_betti_oracle(I, cfg.characteristic).to_csv(), cfg.output)
    return EXIT_OK


def cmd_compare(cfg: RunConfig) -> int:
    try:
        expected, actual = (read_betti_csv(p) for p in cfg.inputs[:2])
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    rows = expected.diff(actual)
    lines = ["p,q,expected,actual"] + [f"{p},{q},{e},{a}" for p, q, e, a in rows]
    lines.append(f"mismatches={len(rows)}")
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_FAIL if rows else EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    X = _load(cfg.inputs[0])
    try:
        _emit(render_svg(X), cfg.output)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_fvector(cfg: RunConfig) -> int:
    X = _load(cfg.inputs[0])
    _emit(",".join(str(c) for c in X.f_vector()) + "\n", cfg.output)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "betti": cmd_betti,
    "formulas": cmd_formulas,
    "oracle": cmd_oracle,
    "compare": cmd_compare,
    "render": cmd_render,
    "fvector": cmd_fvector,
}


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxres", description="Symmetric polytopal resolutions of (x1..xn)^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, takes_file=False, char=False):
        if takes_file:
            p.add_argument("file", help="complex JSON")
        p.add_argument("-o", "--output", help="write here instead of stdout")
        if char:
            p.add_argument("--char", type=int, default=DEFAULT_CHARACTERISTIC, help="0 or a prime (default 32003)")
            p.add_argument("--threads", type=int, default=None, help="sweep threads (env BOXRES_THREADS)")

    p = sub.add_parser("build", help="build a complex and write its JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--object", choices=VARIANTS, required=True)
    p.add_argument("--perm", type=int, default=1, help="poset index i for box-complex")
    p.add_argument("--indices", type=_indices, default=(), help="comma separated i_1<...<i_l for product")
    p.add_argument("--differentials", action="store_true", help="include the differential matrices")
    common(p)

    p = sub.add_parser("verify", help="check d^2=0, minimality and acyclicity")
    common(p, True, char=True)
    p.add_argument("--exhaustive", action="store_true", help="sweep all divisors of the label lcm")

    p = sub.add_parser("betti", help="Betti table CSV of a certified complex")
    common(p, True, char=True)

    p = sub.add_parser("formulas", help="closed-form Betti tables as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", choices=list(TABLES), default=None)
    common(p)

    p = sub.add_parser("oracle", help="Betti table from upper Koszul complexes")
    p.add_argument("--gens", help="generator file, one exponent list per line")
    p.add_argument("--ideal", choices=["power", "pinched", "J", "J-hat"])
    p.add_argument("--n", type=int)
    p.add_argument("--char", type=int, default=DEFAULT_CHARACTERISTIC)
    p.add_argument("-o", "--output")

    p = sub.add_parser("compare", help="diff two Betti CSV files")
    p.add_argument("file")
    p.add_argument("file2")
    p.add_argument("-o", "--output")

    p = sub.add_parser("render", help="SVG picture of a three-variable complex")
    common(p, True)

    p = sub.add_parser("fvector", help="face counts by dimension")
    common(p, True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    inputs = [x for x in (getattr(args, "file", None), getattr(args, "file2", None)) if x]
    return RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        variant=getattr(args, "object", None),
        perm=getattr(args, "perm", 1),
        indices=getattr(args, "indices", ()),
        characteristic=getattr(args, "char", DEFAULT_CHARACTERISTIC),
        inputs=inputs,
        output=args.output,
        exhaustive=getattr(args, "exhaustive", False),
        threads=getattr(args, "threads", None),
        differentials=getattr(args, "differentials", False),
        table=getattr(args, "table", None),
        ideal=getattr(args, "ideal", None),
        gens=getattr(args, "gens", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"boxres: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"boxres: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
