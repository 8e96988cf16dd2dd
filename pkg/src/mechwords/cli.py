"""Command-line front end: plan, generate, check, verify, discrepancy.

Exit status contract: 0 = affirmative/pass, 2 = well-formed query with a
negative verdict (impossible / not admissible / sweep found a counterexample),
1 = input error. With --format machine each invocation prints one JSON record
with stable field names.
"""

import argparse
import json
import sys
from math import gcd
from typing import Sequence

from .admissibility import (
    AdmissibilityQuery,
    construct_admissible,
    criterion,
    discrepancy,
    is_admissible,
    min_weight_window,
    window_weight_profile,
)
from .constructions import (
    arrange,
    canonical_rotation,
    cf_expansion,
    euclid_trace,
    rotation_equivalent,
    smith_ladder,
    smith_to_mechanical,
    symbol_stages,
)
from .oracle import brute_force_exists
from .words import check_balance, mechanical_word, parse_word, to_bits

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 2

VERIFY_CAP = 200


class InputError(Exception):
    """Bad command-line input; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input, which collides with the
    # "negative verdict" status; route everything through InputError instead
    def error(self, message):
        raise InputError(message)


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.format == "machine":
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def _rendered(word: str, args) -> str:
    if getattr(args, "canonical", False):
        word = canonical_rotation(word)[0]
    if getattr(args, "alphabet", "AB") == "01":
        word = to_bits(word)
    return word


def _query(args) -> AdmissibilityQuery:
    try:
        return AdmissibilityQuery(args.n, args.k, args.s, args.t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_plan(args) -> int:
    query = _query(args)
    nt, ks = query.n * query.t, query.k * query.s
    record = {"command": "plan", "n": query.n, "k": query.k, "s": query.s,
              "t": query.t, "nt": nt, "ks": ks}
    if not criterion(query):
        record.update(verdict="impossible")
        _emit(args, record, [f"IMPOSSIBLE: nt = {nt} > ks = {ks}"])
        return EXIT_NEGATIVE
    word = construct_admissible(query)
    if getattr(args, "canonical", False):
        word = canonical_rotation(word)[0]
    profile = window_weight_profile(word, query.s)
    witness = min_weight_window(word, query.s)
    shown = to_bits(word) if args.alphabet == "01" else word
    record.update(verdict="admissible", word=shown, profile=profile,
                  witness_start=witness.start, witness_weight=witness.weight)
    _emit(args, record, [
        f"ADMISSIBLE: nt = {nt} <= ks = {ks}",
        f"arrangement: {shown}",
        f"window weights (s={query.s}): {' '.join(map(str, profile))}",
        f"min window: start {witness.start}, weight {witness.weight}",
    ])
    return EXIT_OK


def cmd_generate(args) -> int:
    n, k = args.n, args.k
    if n < 1 or not 1 <= k < n:
        raise InputError(f"need 1 <= k < n, got n={n}, k={k}")
    record = {"command": "generate", "n": n, "k": k, "method": args.method}
    lines = []
    if args.method == "mechanical":
        word = mechanical_word(n, k)
    elif args.method == "euclid":
        word = arrange(n, k)
        if args.verbose:
            trace = euclid_trace(n, k)
            divisions = [
                f"{trace.remainder(step.index - 2)} = "
                f"{step.quotient}*{trace.remainder(step.index - 1)} + {step.remainder}"
                for step in trace.steps
            ]
            stages = symbol_stages(n, k)
            record.update(quotients=trace.quotients, remainders=trace.remainders,
                          stages=stages)
            lines.append("trace: " + "; ".join(divisions))
            if stages:
                lines += [f"stage {idx}: [{','.join(seq)}]"
                          for idx, seq in enumerate(stages, 1)]
            else:
                lines.append("no symbol stages (k divides n)")
    else:  # smith
        g = gcd(n, k)
        if g != 1:
            raise InputError(f"n and k not coprime (gcd {g})")
        mu = cf_expansion(n, k)
        # leading-decremented quotients give the length-n arrangement
        ladder = smith_ladder([mu[0] - 1] + mu[1:])
        word = ladder[-1]
        if args.verbose:
            record.update(quotients=[mu[0] - 1] + mu[1:], ladder=ladder)
            lines += [f"S_{idx} = {w}" for idx, w in enumerate(ladder, 1)]
    shown = _rendered(word, args)
    record.update(word=shown)
    lines.append(shown)
    _emit(args, record, lines)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not word:
        raise InputError("word must be non-empty")
    n, s, t = len(word), args.s, args.t
    if not 1 <= s <= n:
        raise InputError(f"s must be in 1..{n}, got {s}")
    if t < 0:
        raise InputError("t must be non-negative")
    verdict = is_admissible(word, s, t)
    witness = verdict.witness
    shown = to_bits(word) if args.alphabet == "01" else word
    record = {"command": "check", "word": shown, "n": n, "k": word.count("A"),
              "s": s, "t": t,
              "verdict": "admissible" if verdict else "not-admissible",
              "witness_start": witness.start, "witness_weight": witness.weight}
    if verdict:
        lines = [f"ADMISSIBLE: every window of {s} spots holds >= {t} letters A"]
    else:
        lines = [f"NOT ADMISSIBLE: window at start {witness.start} "
                 f"holds {witness.weight} < {t} letters A"]
    lines.append(f"min window: start {witness.start}, weight {witness.weight}")
    if args.verbose:
        profile = window_weight_profile(word, s)
        record.update(profile=profile)
        lines.append(f"window weights (s={s}): {' '.join(map(str, profile))}")
    _emit(args, record, lines)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _verify_sweeps(n_max: int) -> tuple[dict, list[str]]:
    counts = {"equivalence_pairs": 0, "oracle_cells": 0, "balance_checks": 0}
    failures = []

    # three-way equivalence over coprime pairs
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if gcd(n, k) != 1:
                continue
            counts["equivalence_pairs"] += 1
            built = arrange(n, k)
            mu = cf_expansion(n, k)
            from_recursion = smith_ladder([mu[0] - 1] + mu[1:])[-1]
            mechanical = mechanical_word(n, k)
            if not (rotation_equivalent(built, from_recursion)
                    and rotation_equivalent(built, mechanical)
                    and smith_to_mechanical(n, k) == mechanical):
                failures.append(
                    f"equivalence n={n} k={k}: arrange={built} "
                    f"recursion={from_recursion} mechanical={mechanical}")

    # criterion versus exhaustive search
    for n in range(2, min(n_max, 12) + 1):
        for k in range(1, n):
            for s in range(1, n):
                for t in range(0, min(k, s) + 1):
                    counts["oracle_cells"] += 1
                    query = AdmissibilityQuery(n, k, s, t)
                    if brute_force_exists(query).exists != criterion(query):
                        failures.append(f"criterion n={n} k={k} s={s} t={t}")

    # balance bounds of every mechanical word, window lengths up to 2n
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            word = mechanical_word(n, k)
            for m in range(1, 2 * n + 1):
                counts["balance_checks"] += 1
                result = check_balance(word, m)
                if not result:
                    failures.append(
                        f"balance n={n} k={k} m={m}: window at start "
                        f"{result.start} has weight {result.weight}, "
                        f"bounds [{result.low}, {result.high}]")
    return counts, failures


def cmd_verify(args) -> int:
    if args.n_max is not None and args.n_max_flag is not None:
        raise InputError("give n_max either positionally or via --n-max, not both")
    n_max = args.n_max_flag if args.n_max is None else args.n_max
    if n_max is None:
        raise InputError("n_max is required")
    if n_max < 1:
        raise InputError(f"n_max must be positive, got {n_max}")
    if n_max > VERIFY_CAP:
        raise InputError(f"n_max above the verification cap {VERIFY_CAP}")
    counts, failures = _verify_sweeps(n_max)
    record = {"command": "verify", "n_max": n_max, **counts,
              "verdict": "pass" if not failures else "fail",
              "failures": failures}
    lines = [
        f"equivalence: {counts['equivalence_pairs']} coprime pairs "
        f"{'OK' if not failures else 'checked'}; "
        f"oracle grid: {counts['oracle_cells']} cells OK; "
        f"balance: {counts['balance_checks']} checks OK"
    ] if not failures else [f"FAIL: {f}" for f in failures]
    _emit(args, record, lines)
    return EXIT_OK if not failures else EXIT_NEGATIVE


def cmd_discrepancy(args) -> int:
    n, k, m = args.n, args.k, args.m
    if n < 1 or not 1 <= k < n:
        raise InputError(f"need 1 <= k < n, got n={n}, k={k}")
    if not 1 <= m <= n:
        raise InputError(f"m must be in 1..{n}, got {m}")
    word = mechanical_word(n, k)
    value = discrepancy(word, m)
    floor_term = (m * k) // n
    bound = m - 2 * floor_term
    applies = 2 * k <= n
    record = {"command": "discrepancy", "n": n, "k": k, "m": m,
              "discrepancy": value, "bound": bound, "bound_applies": applies}
    lines = [
        f"discrepancy: {value}",
        f"bound: m - 2*floor(m*k/n) = {m} - 2*{floor_term} = {bound}",
        "bound applies (k <= n/2)" if applies
        else "bound not asserted for k > n/2",
    ]
    _emit(args, record, lines)
    return EXIT_OK


_HANDLERS = {
    "plan": cmd_plan,
    "generate": cmd_generate,
    "check": cmd_check,
    "verify": cmd_verify,
    "discrepancy": cmd_discrepancy,
}


def build_parser() -> _Parser:
    parser = _Parser(
        prog="mechwords",
        description="Balanced circular two-letter arrangements and their checks.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, *, words: bool = True) -> None:
        p.add_argument("--format", choices=("text", "machine"), default="text",
                       help="machine prints one JSON record per invocation")
        if words:
            p.add_argument("--alphabet", choices=("AB", "01"), default="AB",
                           help="render words as letters or as 1/0 digits (1 = A)")

    plan = sub.add_parser(
        "plan", help="decide an (n, k, s, t) instance and print an arrangement")
    for name in "nkst":
        plan.add_argument(name, type=int)
    plan.add_argument("--canonical", action="store_true",
                      help="print the lexicographically least rotation")
    common(plan)

    gen = sub.add_parser("generate", help="build a balanced arrangement of k As among n spots")
    gen.add_argument("n", type=int)
    gen.add_argument("k", type=int)
    gen.add_argument("--method", choices=("mechanical", "euclid", "smith"),
                     default="mechanical")
    gen.add_argument("--verbose", action="store_true",
                     help="show the Euclid trace and +/- stages, or the S_1..S_t ladder")
    gen.add_argument("--canonical", action="store_true",
                     help="print the lexicographically least rotation")
    common(gen)

    chk = sub.add_parser("check", help="test a given word for (s, t) admissibility")
    chk.add_argument("word")
    chk.add_argument("s", type=int)
    chk.add_argument("t", type=int)
    chk.add_argument("--verbose", action="store_true",
                     help="include the full window-weight profile")
    common(chk)

    ver = sub.add_parser(
        "verify",
        help="run the equivalence, criterion, and balance sweeps up to n_max")
    ver.add_argument("n_max", nargs="?", type=int, default=None)
    ver.add_argument("--n-max", dest="n_max_flag", type=int, default=None,
                     help="alternative to the positional n_max")
    common(ver, words=False)

    disc = sub.add_parser(
        "discrepancy",
        help="discrepancy of the mechanical arrangement for window length m")
    for name in "nkm":
        disc.add_argument(name, type=int)
    common(disc, words=False)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
