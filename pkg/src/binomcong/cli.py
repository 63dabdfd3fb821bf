"""Command-line front end.

Every subcommand prints plain text by default, or a single JSON record with
``--json``. Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, TextIO

from . import __version__
from .arith import ext_gcd
from .congruence import (
    PATH_EULER,
    CoprimeFactorization,
    bezout_silva,
    silva_sum,
    solve_binomial,
    solve_crt,
    solve_linear,
    rsa_roundtrip,
)
from .errors import DomainError, InvariantViolation
from .pie import DivisibleBy, ExplicitSet, PropertyFamily, count_none, count_union, expand
from .totient import BRUTEFORCE_LIMIT, PIE_LIMIT, phi_bruteforce, phi_factored, phi_via_pie

_INT = re.compile(r"(?:0[xX][0-9a-fA-F]+|[0-9]+)\Z")


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    result: Any
    path: str
    checks: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=True)


def parse_natural(text: str) -> int:
    """Decimal, or hexadecimal with a ``0x`` prefix."""
    if not _INT.match(text):
        raise argparse.ArgumentTypeError(f"not a nonnegative integer: {text!r}")
    return int(text, 16) if text[:2].lower() == "0x" else int(text)


def parse_pair(text: str) -> tuple[int, int]:
    residue, sep, modulus = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected r:m, got {text!r}")
    return parse_natural(residue), parse_natural(modulus)


def parse_members(text: str) -> list[int]:
    if text == "":
        return []
    return [parse_natural(part.strip()) for part in text.split(",")]


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def cmd_phi(args) -> tuple[OutputRecord, list[str]]:
    n = args.n
    routes = {"product formula": phi_factored(n)}
    skipped = []
    if n <= PIE_LIMIT:
        routes["inclusion-exclusion"] = phi_via_pie(n)
    else:
        skipped.append("inclusion-exclusion")
    if n <= BRUTEFORCE_LIMIT:
        routes["brute force"] = phi_bruteforce(n)
    else:
        skipped.append("brute force")
    value = routes["product formula"]
    checks = []
    for name, other in routes.items():
        if name == "product formula":
            continue
        if other != value:
            raise InvariantViolation(f"phi({n}): {name} gave {other}, product formula gave {value}")
        checks.append(f"product formula == {name}")
    lines = [f"phi({n}) = {value}"]
    lines += [f"  {name}: {v}" for name, v in routes.items()]
    lines += [f"  {name}: skipped (out of range)" for name in skipped]
    lines.append(f"{len(routes)} method(s) agree")
    path = "+".join(name.replace(" ", "-") for name in routes)
    return OutputRecord("phi", {"n": n}, value, path, checks), lines


def cmd_pie(args) -> tuple[OutputRecord, list[str]]:
    props = [DivisibleBy(d, f"div{d}") for d in args.div]
    props += [ExplicitSet.of(members, f"set{i + 1}") for i, members in enumerate(args.set)]
    if not props:
        raise DomainError("at least one property (--div or --set) is required")
    family = PropertyFamily(args.universe, tuple(props))
    none, union = count_none(family), count_union(family)
    if none + union != args.universe:
        raise InvariantViolation("count_none + count_union != universe size")
    count = none if args.mode == "none" else union
    if all(isinstance(p, DivisibleBy) for p in props):
        path = "floor-division"
    elif all(isinstance(p, ExplicitSet) for p in props):
        path = "bitmap-intersection"
    else:
        path = "mixed-enumeration"
    result: dict[str, Any] = {"count": count}
    lines = [f"{args.mode}: {count}"]
    if args.show_terms:
        terms = expand(family).terms
        result["terms"] = [[t.sign, [props[i].label() for i in t.index_set], t.cardinality] for t in terms]
        lines.append("terms:")
        for t in terms:
            label = "{" + ",".join(props[i].label() for i in t.index_set) + "}"
            lines.append(f"  {'+' if t.sign > 0 else '-'} {label} {t.cardinality}")
    inputs = {
        "universe": args.universe,
        "divisors": list(args.div),
        "sets": [list(s) for s in args.set],
        "mode": args.mode,
    }
    checks = [f"none + union == universe ({none} + {union} == {args.universe})"]
    return OutputRecord("pie", inputs, result, path, checks), lines


def cmd_bezout(args) -> tuple[OutputRecord, list[str]]:
    a, b = args.a, args.b
    pair = bezout_silva(a, b)
    g, ex, ey = ext_gcd(a, b)
    n = a * b
    checks = [
        f"{a}*{pair.x} + {b}*{pair.y} = 1 (mod {n})",
        f"{a}*({ex}) + {b}*({ey}) = {g}",
    ]
    result = {"x": pair.x, "y": pair.y, "modulus": n, "ext_gcd": {"g": g, "x": ex, "y": ey}}
    lines = [
        f"power form: x = {a}^(phi({b})-1) = {pair.x}, y = {b}^(phi({a})-1) = {pair.y}  (mod {n})",
        f"  {a}*{pair.x} + {b}*{pair.y} = {a * pair.x + b * pair.y} = 1 (mod {n})",
        f"euclid: x = {ex}, y = {ey}, gcd = {g}",
    ]
    return OutputRecord("bezout", {"a": a, "b": b}, result, PATH_EULER, checks), lines


def cmd_silva(args) -> tuple[OutputRecord, list[str]]:
    f = CoprimeFactorization(tuple(args.factors))
    total = silva_sum(f)
    n, k = f.n, f.k
    result = {"n": n, "k": k, "sum": total, "k_minus_1": (k - 1) % n}
    lines = [
        "n = " + " * ".join(map(str, f.factors)) + f" = {n}",
        f"sum of a_i^phi(n/a_i) = {total} (mod {n})",
        f"k - 1 = {k - 1}",
    ]
    checks = [f"sum = k - 1 (mod {n})"]
    return OutputRecord("silva", {"factors": list(f.factors)}, result, "euler-power-sum", checks), lines


def _solution_lines(sol, label: str) -> list[str]:
    return [
        f"{label} (mod {sol.modulus})",
        f"solutions: {_fmt_set(sol.residues)}",
        f"count: {len(sol)}",
        f"path: {sol.path}",
    ]


def cmd_solve_linear(args) -> tuple[OutputRecord, list[str]]:
    sol = solve_linear(args.a, args.b, args.n)
    checks = [f"{args.a}*{x} = {args.b} (mod {args.n})" for x in sol]
    inputs = {"a": args.a, "b": args.b, "n": args.n}
    result = {"modulus": sol.modulus, "residues": list(sol.residues)}
    lines = _solution_lines(sol, f"{args.a}*x = {args.b}")
    return OutputRecord("solve linear", inputs, result, sol.path, checks), lines


def cmd_solve_crt(args) -> tuple[OutputRecord, list[str]]:
    x = solve_crt(args.pairs)
    modulus = 1
    for _, m in args.pairs:
        modulus *= m
    checks = [f"{x} = {r} (mod {m})" for r, m in args.pairs]
    inputs = {"pairs": [[r, m] for r, m in args.pairs]}
    return OutputRecord("solve crt", inputs, {"x": x, "modulus": modulus}, PATH_EULER, checks), [
        f"{x} mod {modulus}"
    ]


def cmd_solve_binomial(args) -> tuple[OutputRecord, list[str]]:
    a, e, b, big_n = args.a, args.nexp, args.b, args.N
    sol = solve_binomial(a, e, b, big_n)
    checks = [f"{a}*{x}^{e} = {b} (mod {big_n})" for x in sol]
    inputs = {"a": a, "nexp": e, "b": b, "N": big_n}
    result = {"modulus": sol.modulus, "residues": list(sol.residues)}
    lines = _solution_lines(sol, f"{a}*x^{e} = {b}")
    return OutputRecord("solve binomial", inputs, result, sol.path, checks), lines


def cmd_rsa(args) -> tuple[OutputRecord, list[str]]:
    p, q, e, m = args.p, args.q, args.e, args.msg
    recovered = rsa_roundtrip(p, q, e, m)
    n, phi = p * q, (p - 1) * (q - 1)
    d = pow(e, -1, phi)
    cipher = pow(m, e, n)
    checks = ["recovered == message"] if recovered == m else []
    result = {"n": n, "phi": phi, "d": d, "ciphertext": cipher, "recovered": recovered}
    lines = [
        f"n = {n}, phi(n) = {phi}, e = {e}, d = {d}",
        f"encrypt: {m}^{e} mod {n} = {cipher}",
        f"decrypt: {cipher}^{d} mod {n} = {recovered}",
        "roundtrip ok" if recovered == m else "roundtrip differs (message not coprime to n)",
    ]
    inputs = {"p": p, "q": q, "e": e, "msg": m}
    return OutputRecord("rsa-demo", inputs, result, "euler-inverse-exponent", checks), lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomcong",
        description="Inclusion-exclusion counting, Euler's totient and direct congruence solvers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("phi", parents=[common], help="Euler's totient by three routes")
    p.add_argument("n", type=parse_natural)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("pie", parents=[common], help="inclusion-exclusion counts")
    p.add_argument("--universe", type=parse_natural, required=True)
    p.add_argument("--div", type=parse_natural, nargs="+", action="extend", default=[])
    p.add_argument("--set", type=parse_members, nargs="+", action="extend", default=[])
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--none", dest="mode", action="store_const", const="none")
    mode.add_argument("--union", dest="mode", action="store_const", const="union")
    p.add_argument("--show-terms", action="store_true")
    p.set_defaults(func=cmd_pie)

    p = sub.add_parser("bezout", parents=[common], help="power-form Bezout coefficients")
    p.add_argument("a", type=parse_natural)
    p.add_argument("b", type=parse_natural)
    p.set_defaults(func=cmd_bezout)

    p = sub.add_parser("silva", parents=[common], help="k-factor generalization of Euler's theorem")
    p.add_argument("factors", type=parse_natural, nargs="+")
    p.set_defaults(func=cmd_silva)

    p = sub.add_parser("solve", help="solve a congruence")
    kinds = p.add_subparsers(dest="kind", required=True, metavar="KIND")
    k = kinds.add_parser("linear", parents=[common], help="a*x = b (mod n)")
    for name in ("a", "b", "n"):
        k.add_argument(name, type=parse_natural)
    k.set_defaults(func=cmd_solve_linear)
    k = kinds.add_parser("crt", parents=[common], help="x = r_i (mod m_i), pairwise coprime m_i")
    k.add_argument("pairs", type=parse_pair, nargs="+", metavar="r:m")
    k.set_defaults(func=cmd_solve_crt)
    k = kinds.add_parser("binomial", parents=[common], help="a*x^nexp = b (mod N)")
    for name in ("a", "nexp", "b", "N"):
        k.add_argument(name, type=parse_natural)
    k.set_defaults(func=cmd_solve_binomial)

    p = sub.add_parser("rsa-demo", parents=[common], help="toy RSA roundtrip")
    for name in ("p", "q", "e", "msg"):
        p.add_argument(name, type=parse_natural)
    p.set_defaults(func=cmd_rsa)
    return parser


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse writes usage errors to sys.stderr and exits 2
        saved_err, saved_out = sys.stderr, sys.stdout
        sys.stderr, sys.stdout = stderr, stdout
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr, sys.stdout = saved_err, saved_out
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        record, lines = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=stderr)
        return 1
    if args.json:
        print(record.to_json(), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
