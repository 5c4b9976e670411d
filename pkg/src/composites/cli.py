"""Command-line front end.

Every verb takes --ring with a descriptor such as "Z + X*Q[X]" and
renders either human-readable text or, with --json, a stable JSON
document.  Exit codes: 0 success, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gcdengine, ideals, oracle, spectrum
from .elements import divides as element_divides
from .errors import CompositeError, ParseError
from .oracle import PROPERTIES
from .parsing import (
    parse_element,
    parse_ideal,
    parse_prime,
    parse_ring,
    render_element,
    render_ideal,
    render_scalar,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="composites",
        description="Exact arithmetic and deciders for composite rings K + X*L[X].",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add(verb, *positionals, help=None):
        p = sub.add_parser(verb, help=help)
        p.add_argument("--ring", required=True, help="ring descriptor, e.g. 'Z + X*Q[X]'")
        p.add_argument("--json", action="store_true", help="emit JSON")
        for name in positionals:
            p.add_argument(name)
        return p

    add("props", help="decide the five structural properties")
    add("gcd", "a", "b", help="gcd of two elements")
    add("lcm", "a", "b", help="lcm of two elements")
    add("divides", "b", "a", help="does b divide a in R (witness quotient)")
    add("member", "x", "ideal", help="ideal membership with witness")
    add("normalize", "ideal", help="normal form b * J * R of an ideal")
    add("reduce", "ideal", help="regenerate with at most n generators")
    add("intersect", "ideal", "other", help="intersection of two ideals")
    add("class", "ideal", help="ideal class in C(R) = C(K)")
    add("dim", help="Krull dimension with witness chain")
    add("chain", help="witness chain of primes")
    add("classify-prime", "prime", help="classify a prime descriptor")
    add("dichotomy", help="finite-conductor dichotomy branch")
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        pair = parse_ring(args.ring)
        payload = _dispatch(args, pair)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CompositeError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = payload.pop("text")
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


def _dispatch(args, pair) -> dict:
    verb = args.verb
    ring = str(pair)
    if verb == "props":
        verdicts = [oracle.decide_property(pair, p) for p in PROPERTIES]
        lines = [
            f"{v.property:<10} {'yes' if v.holds else 'no':<4} ({v.trace[-1].cite})"
            for v in verdicts
        ]
        return {
            "ring": ring,
            "verdicts": [v.to_json() for v in verdicts],
            "text": "\n".join(lines),
        }
    if verb == "gcd":
        a = parse_element(args.a, pair)
        b = parse_element(args.b, pair)
        res = gcdengine.gcd_composite(a, b)
        qa, qb = res.cofactors
        return {
            "ring": ring,
            "gcd": render_element(res.g),
            "cofactors": [render_element(qa), render_element(qb)],
            "text": render_element(res.g),
        }
    if verb == "lcm":
        a = parse_element(args.a, pair)
        b = parse_element(args.b, pair)
        m = gcdengine.lcm_composite(a, b)
        return {"ring": ring, "lcm": render_element(m), "text": render_element(m)}
    if verb == "divides":
        b = parse_element(args.b, pair)
        a = parse_element(args.a, pair)
        q = element_divides(b, a)
        if q is None:
            return {"ring": ring, "divides": False, "witness": None, "text": "no"}
        return {
            "ring": ring,
            "divides": True,
            "witness": render_element(q),
            "text": f"yes: {render_element(q)}",
        }
    if verb == "member":
        x = parse_element(args.x, pair)
        ideal = parse_ideal(args.ideal, pair)
        res = ideals.membership(x, ideal)
        witness = (
            [render_element(w) for w in res.witness] if res.witness else None
        )
        text = "member: " + ", ".join(witness) if witness else res.status
        return {"ring": ring, "status": res.status, "witness": witness, "text": text}
    if verb == "normalize":
        ideal = parse_ideal(args.ideal, pair)
        nf = ideals.normalize_ideal(ideal)
        lambdas = [render_scalar(l) for l in nf.lambdas]
        return {
            "ring": ring,
            "b": render_element(nf.b),
            "b_witness": [render_element(w) for w in nf.b_witness],
            "lambdas": lambdas,
            "text": f"b = {render_element(nf.b)}; J = ({', '.join(lambdas + ['1'])})",
        }
    if verb == "reduce":
        ideal = parse_ideal(args.ideal, pair)
        out = ideals.reduce_generators(ideal)
        return {"ring": ring, "ideal": render_ideal(out), "text": render_ideal(out)}
    if verb == "intersect":
        left = parse_ideal(args.ideal, pair)
        right = parse_ideal(args.other, pair)
        out = ideals.ideal_intersect(left, right)
        return {"ring": ring, "ideal": render_ideal(out), "text": render_ideal(out)}
    if verb == "class":
        ideal = parse_ideal(args.ideal, pair)
        cls = ideals.ideal_class(ideal)
        return {
            "ring": ring,
            "class": str(cls),
            "group": str(cls.group),
            "text": f"{cls} in C(K) = {cls.group}",
        }
    if verb == "dim":
        n = spectrum.krull_dim(pair)
        chain = spectrum.witness_chain(pair)
        rendered = _render_chain(chain)
        return {
            "ring": ring,
            "dim": n,
            "chain": rendered,
            "text": f"{n}\n" + " < ".join(rendered["links"]),
        }
    if verb == "chain":
        chain = spectrum.witness_chain(pair)
        rendered = _render_chain(chain)
        lines = [" < ".join(rendered["links"])]
        lines.append("separators: " + ", ".join(rendered["separators"]))
        return {"ring": ring, "chain": rendered, "text": "\n".join(lines)}
    if verb == "classify-prime":
        q = parse_prime(args.prime, pair)
        report = spectrum.classify_prime(q)
        text = (
            f"branch: {report.branch}; contains M: {report.contains_m}; "
            f"contraction to K: {report.contraction_to_k}; quotient: {report.quotient}"
        )
        return {
            "ring": ring,
            "prime": str(q),
            "classification": report.to_json(),
            "text": text,
        }
    if verb == "dichotomy":
        v = oracle.decide_dichotomy(pair)
        if v.holds in ("a", "b"):
            text = f"branch ({v.holds})  ({v.trace[-1].cite})"
        else:
            text = str(v.holds)
        return {"ring": ring, "verdict": v.to_json(), "text": text}
    raise AssertionError(f"unhandled verb {verb}")


def _render_chain(chain) -> dict:
    return {
        "links": [str(link) for link in chain.links],
        "separators": [render_element(s) for s in chain.separators],
    }


if __name__ == "__main__":
    raise SystemExit(main())
