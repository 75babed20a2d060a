"""Command-line interface.

One subcommand per library operation; every worked example in the docs
is reproducible from here.  Exit codes: 0 on success, 1 on domain errors
(bad words, unresolved bases, ...), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, automata, bertrand
from . import polynomials as pl
from .errors import NumerationError
from .numsys import parse_system
from .realbase import parse_base, base_from_expansion
from .words import EPWord, format_epword, format_word, parse_epword, parse_word


def _word_or_prefix(result) -> str:
    if isinstance(result, EPWord):
        return format_epword(result)
    return format_word(result)


def _interval_json(iv) -> dict:
    return {
        "lo": str(iv.lo),
        "hi": str(iv.hi),
        "lo_float": float(iv.lo),
        "hi_float": float(iv.hi),
    }


def _base_json(base) -> dict:
    out = {"spec": base.source, "kind": base.kind}
    if base.kind == "algebraic":
        out["polynomial"] = pl.high_first(base.poly)
        enc = base.enclosure(Fraction(1, 10**12))
        out["enclosure"] = _interval_json(enc)
    else:
        out["value"] = str(base.value)
    return out


def cmd_dbeta(args) -> int:
    base = parse_base(args.base)
    cls = base.parry_class(args.depth)
    word = _word_or_prefix(cls.word)
    if args.json:
        print(json.dumps({"word": word, "resolved": cls.resolved, "class": cls.describe()}))
    else:
        print(f"{word} [{cls.describe()}]")
    return 0


def cmd_dstar(args) -> int:
    base = parse_base(args.base)
    cls = base.parry_class(args.depth)
    word = _word_or_prefix(base.quasi_greedy_expansion(args.depth))
    if args.json:
        print(json.dumps({"word": word, "resolved": cls.resolved, "class": cls.describe()}))
    else:
        note = "" if cls.resolved else f" [{cls.describe()}]"
        print(f"{word}{note}")
    return 0


def cmd_beta_of(args) -> int:
    base = base_from_expansion(parse_epword(args.word))
    if args.json:
        print(json.dumps(_base_json(base)))
    elif base.kind == "algebraic":
        lo, hi = base._ival
        print(f"root of {pl.format_poly(base.poly)} in ({lo}, {hi}) ~ {base.approx()}")
    else:
        print(f"{base.value}")
    return 0


def cmd_build(args) -> int:
    base = parse_base(args.beta)
    s = bertrand.build_bertrand(base, args.variant)
    values = s.values(args.count)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(s.to_json(), fh)
            fh.write("\n")
    print(" ".join(str(v) for v in values))
    if s.note:
        print(f"note: {s.note}", file=sys.stderr)
    return 0


def cmd_rep(args) -> int:
    s = parse_system(args.system)
    print(format_word(s.rep(args.n)))
    return 0


def cmd_val(args) -> int:
    s = parse_system(args.system)
    print(s.val(parse_word(args.word)))
    return 0


def cmd_member(args) -> int:
    s = parse_system(args.system)
    print("true" if s.member(parse_word(args.word)) else "false")
    return 0


def cmd_check_bertrand(args) -> int:
    s = parse_system(args.system)
    report = s.check_bertrand(args.max_len)
    if args.json:
        print(
            json.dumps(
                {
                    "holds_up_to": report.holds_up_to,
                    "first_violation": None
                    if report.first_violation is None
                    else {
                        "word": format_word(report.first_violation.word),
                        "kind": report.first_violation.kind,
                    },
                    "violations": [
                        {"word": format_word(v.word), "kind": v.kind}
                        for v in report.violations
                    ],
                }
            )
        )
    elif report.holds:
        print(f"holds up to length {report.holds_up_to}")
    else:
        v = report.first_violation
        print(
            f"violation: {format_word(v.word)} ({v.kind}); "
            f"holds up to length {report.holds_up_to}"
        )
    return 0


def _classify_text(res) -> str:
    tag = "certified" if res.certified else f"consistent up to probe {res.probe_len}"
    if res.case == "case1":
        return f"Case 1: U(i) = i + 1 [{tag}]"
    if res.case in ("case2", "case3"):
        which = "canonical" if res.case == "case2" else "non-canonical"
        b = res.base
        desc = (
            f"root of {pl.format_poly(b.poly)} ~ {b.approx()}"
            if b.kind == "algebraic"
            else str(b.value)
        )
        return f"Case {res.case[-1]}: {which} system of beta = {desc} [{tag}]"
    if res.case == "not_bertrand":
        return (
            f"not Bertrand: {format_word(res.witness.word)} ({res.witness.kind})"
        )
    return f"undetermined: {res.note}"


def cmd_classify(args) -> int:
    s = parse_system(args.system)
    res = bertrand.classify_bertrand(s, args.probe)
    if args.json:
        out = {
            "case": res.case,
            "certified": res.certified,
            "probe_len": res.probe_len,
            "word": format_epword(res.word) if res.word is not None else None,
            "base": _base_json(res.base) if res.base is not None else None,
            "witness": None
            if res.witness is None
            else {"word": format_word(res.witness.word), "kind": res.witness.kind},
            "note": res.note,
        }
        print(json.dumps(out))
    else:
        print(_classify_text(res))
    return 0


def cmd_charpoly(args) -> int:
    p = bertrand.char_poly(parse_epword(args.word), args.variant)
    if args.json:
        print(json.dumps({"coeffs_high_first": pl.high_first(p), "pretty": pl.format_poly(p)}))
    else:
        print(pl.format_poly(p))
    return 0


def cmd_automaton(args) -> int:
    base = parse_base(args.beta)
    dfa = automata.build_shift_dfa(base, args.variant)
    if args.minimize:
        dfa = dfa.minimized()
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dfa.to_dot())
    if args.json:
        print(json.dumps(dfa.to_json()))
    else:
        edges = sorted((q, c, t) for (q, c), t in dfa.transitions.items())
        edge_text = ", ".join(f"{q}-{c}->{t}" for q, c, t in edges)
        note = " (coincides with canonical)" if dfa.meta.get("coincides_with_canonical") else ""
        print(f"{dfa.num_states} states, all final; edges: {edge_text}{note}")
    return 0


def cmd_counting_identity(args) -> int:
    base = parse_base(args.beta)
    report = bertrand.verify_counting_identity(base, args.range)
    if report.holds:
        print(f"U'(i+{report.n}) = U(i+{report.n}) + U'(i) holds for 0 <= i <= {report.range_max}")
        return 0
    print(f"fails at i = {report.first_failure}")
    return 1


def cmd_analyze(args) -> int:
    s = parse_system(args.system)
    base = parse_base(args.beta)
    ratios = analysis.dominant_root_ratios(s, args.imax)
    target = analysis.renewal_target(base, args.variant)
    empirical = analysis.renewal_empirical(s, base, args.imax)
    entropy = analysis.entropy_estimates(s, args.imax)
    out = {
        "ratios": [str(r) for r in ratios],
        "ratio_final": float(ratios[-1]),
        "target_interval": _interval_json(target),
        "empirical_interval": _interval_json(empirical[-1]),
        "entropy": {
            "growth_estimate": entropy.growth_estimate,
            "ratio_estimate": entropy.ratio_estimate,
        },
    }
    if args.ell:
        rep = analysis.lexmax_convergence_probe(s, base, args.ell, args.imax)
        out["hollander"] = {
            "mode": rep.mode,
            "k_per_i": {str(i): k for i, k in rep.rows},
            "stabilized": rep.stabilized,
            "limit": rep.limit,
        }
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("i,ratio,empirical_lo,empirical_hi\n")
            for i, r in enumerate(ratios):
                e = empirical[i + 1] if i + 1 < len(empirical) else empirical[-1]
                fh.write(f"{i},{float(r)},{float(e.lo)},{float(e.hi)}\n")
    if args.json:
        print(json.dumps(out))
    else:
        print(f"dominant root estimate: {out['ratio_final']}")
        print(
            "renewal target in "
            f"[{out['target_interval']['lo_float']}, {out['target_interval']['hi_float']}]"
        )
        print(
            "empirical U(i)/beta^i in "
            f"[{out['empirical_interval']['lo_float']}, {out['empirical_interval']['hi_float']}]"
        )
        print(f"entropy ratio estimate: {entropy.ratio_estimate}")
        if args.ell:
            print(f"lex-max convergence: stabilized={rep.stabilized} limit={rep.limit}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bertrandnum",
        description="Real-base expansions and Bertrand numeration systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dbeta", help="greedy expansion of 1 in a real base")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dbeta)

    p = sub.add_parser("dstar", help="quasi-greedy expansion of 1")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dstar)

    p = sub.add_parser("beta-of", help="recover the base from an expansion of 1")
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_beta_of)

    p = sub.add_parser("build", help="build a Bertrand numeration system")
    p.add_argument("--beta", required=True)
    p.add_argument("--variant", choices=["canonical", "noncanonical"], required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--json", metavar="PATH", help="also write the system as JSON")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rep", help="greedy representation of an integer")
    p.add_argument("--system", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("val", help="value of a digit word")
    p.add_argument("--system", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_val)

    p = sub.add_parser("member", help="membership in the numeration language")
    p.add_argument("--system", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("check-bertrand", help="verify w in L <=> w0 in L up to a length")
    p.add_argument("--system", required=True)
    p.add_argument("--max-len", type=int, default=8, dest="max_len")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_bertrand)

    p = sub.add_parser("classify", help="classify a system against the trichotomy")
    p.add_argument("--system", required=True)
    p.add_argument("--probe", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the recurrence")
    p.add_argument("--word", required=True)
    p.add_argument("--variant", choices=["canonical", "noncanonical"], required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("automaton", help="automaton of the factor language")
    p.add_argument("--beta", required=True)
    p.add_argument("--variant", choices=["canonical", "noncanonical"], required=True)
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("counting-identity", help="U'(i+n) = U(i+n) + U'(i) check")
    p.add_argument("--beta", required=True)
    p.add_argument("--range", type=int, default=20)
    p.set_defaults(func=cmd_counting_identity)

    p = sub.add_parser("analyze", help="dominant root, renewal limit, entropy")
    p.add_argument("--system", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--variant", choices=["canonical", "noncanonical"], default="canonical")
    p.add_argument("--imax", type=int, default=40)
    p.add_argument("--ell", type=int, help="also probe lex-max convergence at this prefix length")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
