"""Command-line interface.

Subcommands expose products of double monomial functions, single
structure coefficients, tableau enumeration, overlapping shuffle
counts, bulk verification against the polynomial oracle, a JSON-lines
coefficient table export, and the two-variable relation check.

Compositions are written as comma-separated positive integers, the
empty string standing for the empty composition.  Exit codes: 0 on
success, 1 when a verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .compositions import Composition, enumerate_compositions, overlapping_shuffles
from .lrcalc import (
    expansion_records,
    product_expand,
    structure_coefficient,
    support_candidates,
    verify_expansion,
)
from .polynomial import x_var, zero
from .qsym import TruncationContext, qsym_generator
from .tableaux import DEFAULT_CONVENTION, WeightConvention, enumerate_tableaux


class CompositionParseError(ValueError):
    """Raised with the 1-based character position of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def parse_composition(text: str) -> Composition:
    """Parse 'a1,a2,...' into a composition; '' is the empty composition."""
    if text == "":
        return Composition()
    parts = []
    position = 1
    for token in text.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise CompositionParseError(
                f"expected a positive integer, got {token!r}", position
            )
        value = int(stripped)
        if value < 1:
            raise CompositionParseError(f"parts must be >= 1, got {value}", position)
        parts.append(value)
        position += len(token) + 1
    return Composition(parts)


def _convention(args) -> WeightConvention:
    return WeightConvention(args.convention)


def _banner(args) -> None:
    if args.format == "human":
        print(f"# convention: {args.convention}")


def _dump(value) -> None:
    print(json.dumps(value))


def cmd_product(args) -> int:
    alpha = parse_composition(args.alpha)
    beta = parse_composition(args.beta)
    convention = _convention(args)
    expansion = product_expand(alpha, beta, convention)
    if args.explicit_zeros:
        compositions = support_candidates(alpha, beta)
    else:
        compositions = expansion.support()
    if args.format == "json":
        _dump(
            [
                {"gamma": g.to_list(), "coeff": expansion[g].to_records()}
                for g in compositions
            ]
        )
    else:
        _banner(args)
        print(f"M{alpha} * M{beta} =")
        for gamma in compositions:
            print(f"  M{gamma} * ({expansion[gamma]})")
    return 0


def cmd_coeff(args) -> int:
    alpha = parse_composition(args.alpha)
    beta = parse_composition(args.beta)
    gamma = parse_composition(args.gamma)
    convention = _convention(args)
    value = structure_coefficient(alpha, beta, gamma, convention)
    if args.format == "json":
        _dump(
            {
                "alpha": alpha.to_list(),
                "beta": beta.to_list(),
                "gamma": gamma.to_list(),
                "coeff": value.to_records(),
            }
        )
    else:
        _banner(args)
        print(f"coefficient of M{gamma} in M{alpha} * M{beta}: {value}")
    return 0


def cmd_tableaux(args) -> int:
    convention = _convention(args)
    tableaux = enumerate_tableaux(args.boxes, args.empty, args.content)
    if args.format == "json":
        _dump(
            [
                dict(t.to_record(), weight=t.weight(convention).to_records())
                for t in tableaux
            ]
        )
    else:
        _banner(args)
        print(
            f"{len(tableaux)} tableau(x) of shape {args.boxes}/{args.empty},"
            f" content {args.content}"
        )
        for tableau in tableaux:
            edges = "{" + ",".join(str(i) for i in sorted(tableau.edge_labels)) + "}"
            print(f"  edges {edges}: weight {tableau.weight(convention)}")
    return 0


def cmd_shuffles(args) -> int:
    alpha = parse_composition(args.alpha)
    beta = parse_composition(args.beta)
    counts = overlapping_shuffles(alpha, beta)
    ordered = sorted(counts, key=Composition.sort_key)
    if args.format == "json":
        _dump(
            [{"gamma": g.to_list(), "multiplicity": counts[g]} for g in ordered]
        )
    else:
        _banner(args)
        print(f"{sum(counts.values())} overlapping shuffles of {alpha} and {beta}")
        for gamma in ordered:
            print(f"  {gamma}: {counts[gamma]}")
    return 0


def _sweep(max_size: int, max_length: int) -> list[Composition]:
    return [
        c
        for c in enumerate_compositions(max_length, max_size)
        if c.size() <= max_size
    ]


def cmd_verify(args) -> int:
    convention = _convention(args)
    max_length = args.max_length if args.max_length is not None else args.max_size
    compositions = _sweep(args.max_size, max_length)
    passed = 0
    failed = 0
    first_failure = None
    for alpha in compositions:
        for beta in compositions:
            if verify_expansion(alpha, beta, convention):
                passed += 1
            else:
                failed += 1
                if first_failure is None:
                    first_failure = (alpha, beta)
    if args.format == "json":
        result = {"pairs": passed + failed, "passed": passed, "failed": failed}
        if first_failure:
            result["first_failure"] = {
                "alpha": first_failure[0].to_list(),
                "beta": first_failure[1].to_list(),
            }
        _dump(result)
    else:
        _banner(args)
        print(f"verified {passed + failed} pairs: {passed} passed, {failed} failed")
        if first_failure:
            print(f"first failure: alpha={first_failure[0]} beta={first_failure[1]}")
    return 0 if failed == 0 else 1


def cmd_table(args) -> int:
    convention = _convention(args)
    max_length = args.max_length if args.max_length is not None else args.max_size
    compositions = _sweep(args.max_size, max_length)
    if args.format == "human":
        _banner(args)
    for alpha in compositions:
        for beta in compositions:
            for row in expansion_records(
                alpha, beta, convention, explicit_zeros=args.explicit_zeros
            ):
                if args.format == "json":
                    _dump(row.to_record())
                else:
                    print(
                        f"c[{row.alpha}, {row.beta} -> {row.gamma}] = {row.value}"
                    )
    return 0


def cmd_relation_check(args) -> int:
    # QSym in two variables is the polynomial algebra on t = x1*x2,
    # z = x1 + x2, w = x1^2*x2, subject to a single cubic relation.
    ctx = TruncationContext(2, 0)
    x = x_var(1)
    t = qsym_generator([x, x], ctx)
    z = qsym_generator([x], ctx)
    w = qsym_generator([x * x, x], ctx)
    candidates = {
        "t^3 - t*z*w + w^2": (t**3, -(t * z * w), w**2),
        "z^3 - t*z*w + w^2": (z**3, -(t * z * w), w**2),
    }
    point = {("x", 1): 1, ("x", 2): 1}
    report = []
    for name, summands in candidates.items():
        value = sum(summands, zero())
        # degree of the candidate before cancellation, not of the result
        top = max(m.x_degree() for piece in summands for m in piece.terms)
        report.append(
            {
                "relation": name,
                "vanishes": not value,
                "value_at_x1_x2_1": value.substitute(point).as_int(),
                "top_degree": top,
            }
        )
    if args.format == "json":
        _dump(report)
    else:
        _banner(args)
        for entry in report:
            status = "== 0" if entry["vanishes"] else "!= 0"
            print(
                f"{entry['relation']}: {status}"
                f" (value {entry['value_at_x1_x2_1']} at x1=x2=1,"
                f" top degree {entry['top_degree']})"
            )
        holding = [e["relation"] for e in report if e["vanishes"]]
        print(f"identically zero: {', '.join(holding) if holding else 'none'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--convention",
        choices=[c.value for c in WeightConvention],
        default=DEFAULT_CONVENTION.value,
        help="orientation of edge-label weight factors",
    )
    common.add_argument(
        "--format", choices=["human", "json"], default="human", help="output format"
    )
    common.add_argument(
        "--explicit-zeros",
        action="store_true",
        help="include zero coefficients for every candidate composition",
    )

    parser = argparse.ArgumentParser(
        prog="dqsym",
        description="products and structure coefficients of double monomial"
        " quasisymmetric functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="expand M_alpha * M_beta")
    p.add_argument("alpha", help="comma-separated parts, '' for the empty composition")
    p.add_argument("beta")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coeff", parents=[common], help="one structure coefficient")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser(
        "tableaux", parents=[common], help="enumerate one-row edge-labeled tableaux"
    )
    p.add_argument("boxes", type=int, help="total boxes (c)")
    p.add_argument("empty", type=int, help="leading empty boxes (a)")
    p.add_argument("content", type=int, help="total labels (b)")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser(
        "shuffles", parents=[common], help="overlapping shuffle multiplicities"
    )
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_shuffles)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="check coefficient tables against exact polynomial arithmetic",
    )
    p.add_argument("--max-size", type=int, required=True, help="largest |alpha|, |beta|")
    p.add_argument("--max-length", type=int, default=None, help="largest length")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "table", parents=[common], help="export coefficient tables as JSON lines"
    )
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "relation-check",
        parents=[common],
        help="test the cubic relation among the two-variable generators",
    )
    p.set_defaults(func=cmd_relation_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CompositionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
