"""Command-line front end.

Subcommands:

  smith       Smith form of f(C_g) from two polynomials, or of an explicit
              matrix given as JSON {"rows", "cols", "entries"}.
  abelianize  Abelianization of a cyclic presentation from its defining word.
  family      Closed-form family computations (fracfib, cocktail, neuwirth,
              hrns, length3, crs).
  bound       Rank lower bound for the eight-parameter family.
  verify      Seeded suites comparing the fast paths with the oracle.

Results go to stdout (human tables by default, --json for machine use,
with big integers always rendered as decimal strings); diagnostics go to
stderr.  Exit codes: 0 success, 1 usage or computation failure, 2 when a
configured limit (factorization budget, minor cap) was hit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from . import families
from .abelian import AbelianGroup
from .companion import element, smith_fast, to_matrix
from .errors import (
    CircsmithError,
    EnumerationLimitError,
    FactorizationLimitError,
)
from .matrices import IntMatrix
from .polynomials import IntPolynomial, parse_polynomial
from .presentations import abelianization, exponent_polynomial, parse_word
from .primes import DEFAULT_FACTOR_BUDGET
from .smith import smith_form
from .verify import SUITE_NAMES, verify_suite


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclasses.dataclass
class ResultEnvelope:
    """What a subcommand reports: the echoed input, the result payload,
    which route produced it, and wall time."""

    input: dict
    result: dict
    method: str
    timing_ms: float

    def to_json(self) -> str:
        payload = {
            "input": _stringify(self.input),
            "result": _stringify(self.result),
            "method": self.method,
            "timing_ms": round(self.timing_ms, 3),
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def human_lines(self) -> list[str]:
        out = []
        for key, value in self.input.items():
            out.append(f"{key}: {value}")
        for key, value in self.result.items():
            out.append(f"{key}: {_human(value)}")
        out.append(f"method: {self.method}   ({self.timing_ms:.1f} ms)")
        return out


def _stringify(value):
    """Big integers as decimal strings, recursively, for JSON output."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


def _human(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return value


def _group_payload(group: AbelianGroup) -> dict:
    return {
        "group": str(group),
        "torsion": list(group.torsion),
        "betti": group.betti,
        "min_generators": group.min_generators,
    }


def build_parser() -> _Parser:
    parser = _Parser(prog="circsmith", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_smith = sub.add_parser("smith", help="Smith form of f(C_g) or of a JSON matrix")
    p_smith.add_argument("--f", help="polynomial f, expression or JSON coefficients")
    p_smith.add_argument("--g", help="monic polynomial g")
    p_smith.add_argument("--matrix", help="matrix JSON (inline, or @path to a file)")
    p_smith.add_argument("--json", action="store_true")
    p_smith.add_argument("--verify", action="store_true", help="run fast and oracle, compare")
    p_smith.add_argument("--factor-budget", type=int, default=DEFAULT_FACTOR_BUDGET)

    p_ab = sub.add_parser("abelianize", help="abelianization of a cyclic presentation")
    p_ab.add_argument("--n", type=int, required=True, help="number of generators")
    p_ab.add_argument("--word", required=True, help='defining word, e.g. "x0 x1^3 x2^-2"')
    p_ab.add_argument("--json", action="store_true")
    p_ab.add_argument("--verify", action="store_true")
    p_ab.add_argument("--factor-budget", type=int, default=DEFAULT_FACTOR_BUDGET)

    p_fam = sub.add_parser("family", help="closed-form family computations")
    p_fam.add_argument(
        "kind", choices=("fracfib", "cocktail", "neuwirth", "hrns", "length3", "crs")
    )
    p_fam.add_argument("--params", help="JSON object with the family parameters")
    for flag in ("n", "k", "m", "q", "r", "s", "h", "ell", "alpha", "beta", "a", "b", "l"):
        p_fam.add_argument(f"--{flag}", type=int)
    p_fam.add_argument("--variant", choices=("half", "quarter", "halfminus1"))
    p_fam.add_argument("--json", action="store_true")
    p_fam.add_argument("--verify", action="store_true")
    p_fam.add_argument("--factor-budget", type=int, default=DEFAULT_FACTOR_BUDGET)

    p_bound = sub.add_parser("bound", help="rank lower bound for the crs family")
    for flag in ("n", "h", "k", "m", "q", "r", "s", "ell"):
        p_bound.add_argument(f"--{flag}", type=int, required=True)
    p_bound.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="seeded oracle-comparison suites")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=100)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _dispatch(args)
    except (FactorizationLimitError, EnumerationLimitError) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return 2
    except CircsmithError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: bad input ({exc})", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


def _dispatch(args) -> int:
    if args.command == "smith":
        return _cmd_smith(args)
    if args.command == "abelianize":
        return _cmd_abelianize(args)
    if args.command == "family":
        return _cmd_family(args)
    if args.command == "bound":
        return _cmd_bound(args)
    if args.command == "verify":
        return _cmd_verify(args)
    raise AssertionError(args.command)


def _emit(envelope: ResultEnvelope, as_json: bool) -> int:
    if as_json:
        print(envelope.to_json())
    else:
        print("\n".join(envelope.human_lines()))
    return 0


def _cmd_smith(args) -> int:
    if args.matrix is not None:
        if args.f or args.g:
            raise _cli_error("--matrix excludes --f/--g")
        text = args.matrix
        if text.startswith("@"):
            with open(text[1:], encoding="utf8") as handle:
                text = handle.read()
        matrix = IntMatrix.from_json(text)
        start = time.perf_counter()
        dec = smith_form(matrix)
        elapsed = (time.perf_counter() - start) * 1000
        envelope = ResultEnvelope(
            input={"matrix": json.loads(matrix.to_json())},
            result={
                "invariant_factors": list(dec.invariant_factors),
                "rank": dec.rank,
            },
            method="oracle",
            timing_ms=elapsed,
        )
        return _emit(envelope, args.json)
    if args.f is None or args.g is None:
        raise _cli_error("need --f and --g (or --matrix)")
    f = parse_polynomial(args.f)
    g = parse_polynomial(args.g)
    start = time.perf_counter()
    dec = smith_fast(f, g, args.factor_budget)
    method = "fast"
    if args.verify:
        oracle = smith_form(to_matrix(element(f, g)))
        if oracle.invariant_factors != dec.invariant_factors:
            print(
                f"MISMATCH: fast {dec.invariant_factors} vs oracle {oracle.invariant_factors}",
                file=sys.stderr,
            )
            return 1
        method = "both-agree"
    elapsed = (time.perf_counter() - start) * 1000
    envelope = ResultEnvelope(
        input={"f": str(f), "g": str(g)},
        result={
            "invariant_factors": list(dec.invariant_factors),
            "rank": dec.rank,
            "group": str(AbelianGroup.from_smith(dec)),
        },
        method=method,
        timing_ms=elapsed,
    )
    return _emit(envelope, args.json)


def _cmd_abelianize(args) -> int:
    word = parse_word(args.word, args.n)
    start = time.perf_counter()
    group = abelianization(word, args.factor_budget)
    method = "fast"
    if args.verify:
        oracle = _oracle_group_of_word(word)
        if oracle != group:
            print(f"MISMATCH: fast {group} vs oracle {oracle}", file=sys.stderr)
            return 1
        method = "both-agree"
    elapsed = (time.perf_counter() - start) * 1000
    envelope = ResultEnvelope(
        input={"n": args.n, "word": str(word)},
        result=_group_payload(group),
        method=method,
        timing_ms=elapsed,
    )
    return _emit(envelope, args.json)


def _oracle_group_of_word(word) -> AbelianGroup:
    f = exponent_polynomial(word)
    g = IntPolynomial.monomial(word.n) - IntPolynomial([1])
    return AbelianGroup.from_smith(smith_form(to_matrix(element(f, g))))


def _param(args, merged, name, required=True):
    value = merged.get(name)
    if value is None:
        if required:
            raise _cli_error(f"family {args.kind} needs --{name}")
        return None
    return int(value)


def _cli_error(message):
    return CircsmithError(message)


def _cmd_family(args) -> int:
    merged = {}
    if args.params:
        merged.update(json.loads(args.params))
    for flag in ("n", "k", "m", "q", "r", "s", "h", "ell", "alpha", "beta", "a", "b", "l"):
        value = getattr(args, flag)
        if value is not None:
            merged[flag] = value

    start = time.perf_counter()
    word = None  # relation word for oracle verification, when available
    verified = False
    if args.kind == "fracfib":
        k, n = _param(args, merged, "k"), _param(args, merged, "n")
        group = families.ff_abelianization(k, n)
        word = families.ff_word(k, n)
        shown = {"k": k, "n": n}
        result = _group_payload(group)
    elif args.kind == "cocktail":
        m = _param(args, merged, "m")
        dec = families.cocktail_smith(m)
        group = AbelianGroup.from_smith(dec)
        if args.verify:
            f, g = families.cocktail_polynomials(m)
            oracle = smith_form(to_matrix(element(f, g)))
            if oracle.invariant_factors != dec.invariant_factors:
                print(
                    f"MISMATCH: formula {dec.invariant_factors} vs oracle "
                    f"{oracle.invariant_factors}",
                    file=sys.stderr,
                )
                return 1
            verified = True
        shown = {"m": m}
        result = {"invariant_factors": list(dec.invariant_factors)}
        result.update(_group_payload(group))
    elif args.kind == "neuwirth":
        n = _param(args, merged, "n")
        if merged.get("alpha") is not None:
            alpha = _param(args, merged, "alpha")
            beta = _param(args, merged, "beta")
            ell = _param(args, merged, "ell")
            group = families.neuwirth_homology(n, alpha, beta, ell)
            word = families.neuwirth_word(n, alpha, beta, ell)
            shown = {"n": n, "alpha": alpha, "beta": beta, "ell": ell}
        else:
            s = _param(args, merged, "s")
            a = _param(args, merged, "a")
            b = _param(args, merged, "b")
            dec = families.two_value_circulant_smith(n, s, a, b)
            group = AbelianGroup.from_smith(dec)
            shown = {"n": n, "s": s, "a": a, "b": b}
        result = _group_payload(group)
    elif args.kind == "hrns":
        r = _param(args, merged, "r")
        n = _param(args, merged, "n")
        s = _param(args, merged, "s")
        group = families.hrns_abelianization(r, n, s, args.factor_budget, verify=args.verify)
        word = families.hrns_word(r, n, s)
        shown = {"r": r, "n": n, "s": s}
        result = _group_payload(group)
    elif args.kind == "length3":
        n = _param(args, merged, "n")
        if args.variant in ("half", "quarter"):
            group = families.length3_power16_ab(n, args.variant)
            word = families.length3_word(n, 1, n // 2 if args.variant == "half" else n // 4)
            shown = {"n": n, "variant": args.variant}
        elif args.variant == "halfminus1":
            group = families.length3_halfminus1_ab(n)
            word = families.length3_word(n, 1, n // 2 - 1)
            shown = {"n": n, "variant": args.variant}
        else:
            k = _param(args, merged, "k")
            l = _param(args, merged, "l")
            word = families.length3_word(n, k, l)
            group = abelianization(word, args.factor_budget)
            shown = {"n": n, "k": k, "l": l}
        result = _group_payload(group)
    elif args.kind == "crs":
        p = families.CrsParams(
            n=_param(args, merged, "n"),
            h=_param(args, merged, "h"),
            k=_param(args, merged, "k"),
            m=_param(args, merged, "m"),
            q=_param(args, merged, "q"),
            r=_param(args, merged, "r"),
            s=_param(args, merged, "s"),
            ell=_param(args, merged, "ell"),
        )
        group = families.crs_abelianization(p, args.factor_budget)
        bound = families.crs_lower_bound(p)
        word = families.crs_word(p)
        shown = dataclasses.asdict(p)
        result = _group_payload(group)
        result["rank_lower_bound"] = bound.value
        result["bound_theorem_applies"] = bound.theorem_applies
    else:
        raise AssertionError(args.kind)

    method = "fast"
    if args.verify:
        if word is not None:
            oracle = _oracle_group_of_word(word)
            if oracle != group:
                print(f"MISMATCH: fast {group} vs oracle {oracle}", file=sys.stderr)
                return 1
            verified = True
        if verified:
            method = "both-agree"
    elapsed = (time.perf_counter() - start) * 1000
    envelope = ResultEnvelope(
        input={"family": args.kind, **shown},
        result=result,
        method=method,
        timing_ms=elapsed,
    )
    return _emit(envelope, args.json)


def _cmd_bound(args) -> int:
    p = families.CrsParams(
        n=args.n, h=args.h, k=args.k, m=args.m, q=args.q, r=args.r, s=args.s, ell=args.ell
    )
    start = time.perf_counter()
    bound = families.crs_lower_bound(p)
    elapsed = (time.perf_counter() - start) * 1000
    result = {"rank_lower_bound": bound.value, "theorem_applies": bound.theorem_applies}
    if not bound.theorem_applies:
        result["note"] = "bound theorem needs |k| != 1; reporting 0"
    envelope = ResultEnvelope(
        input=dataclasses.asdict(p),
        result=result,
        method="fast",
        timing_ms=elapsed,
    )
    return _emit(envelope, args.json)


def _cmd_verify(args) -> int:
    report = verify_suite(args.suite, args.seed, args.cases)
    print("\n".join(report.lines()))
    return 0 if report.passed else 1


if __name__ == "__main__":
    main()
