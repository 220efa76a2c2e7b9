"""Command-line front end.

Subcommands: kawasaki, orbifold, chenruan, kunneth, eval, check.  All
take --weights (comma-separated positive integers) and --format
(text, json or latex); results go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 failed invariant checks, 2 usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import WeightVector
from .chenruan import CrRing
from .expr import EvalError, ParseError, evaluate, parse
from .kawasaki import KawasakiRing
from .kunneth import odd_torsion_witness, product_groups
from .orbifold import OrbifoldRing
from .verify import run_checks


def _weights_arg(text: str) -> WeightVector:
    try:
        return WeightVector(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"weights must be comma-separated positive integers: {exc}"
        ) from None


def _degree_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad degree {text!r}: {exc}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("max degree must be >= 0")
    return value


def _fr(x) -> str:
    """Fractions as reduced p/q, integers plain."""
    return str(x)


def _default_degree(n: int) -> Fraction:
    return Fraction(2 * (n + 2))


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _table(rows) -> str:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )


# -- sector table -----------------------------------------------------------


def _fixed_locus_label(ring: CrRing, j: int) -> str:
    s = ring.sectors[j]
    n = ring.weights.n
    if len(s.fixed) == n + 1:
        return f"C^{n + 1}"
    if not s.fixed:
        return "{0}"
    counts: dict = {}
    for k in s.fixed:
        w = ring.weights.b[k]
        counts[w] = counts.get(w, 0) + 1
    return "+".join(
        (f"{m}C_({w})" if m > 1 else f"C_({w})") for w, m in sorted(counts.items())
    )


def _euler_label(c: int, d: int) -> str:
    if d == 0:
        return str(c)
    u = "u" if d == 1 else f"u^{d}"
    return u if c == 1 else f"{c}{u}"


def _sector_rows(ring: CrRing):
    """Row-label / per-sector-value rows of the sector chart."""
    distinct = sorted(set(ring.weights.b))
    rows = [("sector", [f"zeta_{j}" for j in range(ring.ell)])]
    rows.append(("fixed locus", [_fixed_locus_label(ring, j) for j in range(ring.ell)]))
    for w in distinct:
        k = ring.weights.b.index(w)
        rows.append((f"a_({w})", [_fr(s.a[k]) for s in ring.sectors]))
    rows.append(("2*age", [_fr(s.degree_shift) for s in ring.sectors]))
    rows.append(("generator", [f"a{j}" for j in range(ring.ell)]))
    rows.append(("euler class", [_euler_label(s.c, s.d) for s in ring.sectors]))
    return rows


def _sector_table_text(ring: CrRing) -> str:
    return _table([[label] + cells for label, cells in _sector_rows(ring)])


_LATEX_ROW_LABELS = {
    "sector": "g",
    "fixed locus": r"(\mathbb{C}^{%d})^g",
    "2*age": r"2\cdot\mathrm{age}(g)",
    "generator": r"\text{generator}",
    "euler class": r"e(g)",
}


def _latex_euler(c: int, d: int) -> str:
    if d == 0:
        return str(c)
    u = "u" if d == 1 else f"u^{{{d}}}"
    return u if c == 1 else f"{c}{u}"


def _latex_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return r"\frac{%d}{%d}" % (x.numerator, x.denominator)


def _latex_fixed_locus(ring: CrRing, j: int) -> str:
    s = ring.sectors[j]
    n = ring.weights.n
    if len(s.fixed) == n + 1:
        return r"\mathbb{C}^{%d}" % (n + 1)
    if not s.fixed:
        return r"\{0\}"
    counts: dict = {}
    for k in s.fixed:
        w = ring.weights.b[k]
        counts[w] = counts.get(w, 0) + 1
    return "+".join(
        (str(m) if m > 1 else "") + r"\mathbb{C}_{(%d)}" % w
        for w, m in sorted(counts.items())
    )


def _sector_table_latex(ring: CrRing) -> str:
    ell = ring.ell
    n = ring.weights.n
    lines = [r"\begin{array}{c||%s}" % "|".join("c" * ell)]
    lines.append("g & " + " & ".join(r"\zeta_{%d}" % j for j in range(ell)) + r" \\")
    lines.append(r"\hline\hline")
    lines.append(
        (r"(\mathbb{C}^{%d})^g & " % (n + 1))
        + " & ".join(_latex_fixed_locus(ring, j) for j in range(ell))
        + r" \\ \hline"
    )
    for w in sorted(set(ring.weights.b)):
        k = ring.weights.b.index(w)
        lines.append(
            (r"a_{\mathbb{C}_{(%d)}}(g) & " % w)
            + " & ".join(_latex_fraction(s.a[k]) for s in ring.sectors)
            + r" \\ \hline"
        )
    lines.append(
        r"2\cdot\mathrm{age}(g) & "
        + " & ".join(_latex_fraction(s.degree_shift) for s in ring.sectors)
        + r" \\ \hline"
    )
    lines.append(
        r"\text{generator} & "
        + " & ".join(r"\alpha_{%d}" % j for j in range(ell))
        + r" \\ \hline"
    )
    lines.append(
        r"e(g) & "
        + " & ".join(_latex_euler(s.c, s.d) for s in ring.sectors)
        + r" \\ \hline"
    )
    lines.append(r"\end{array}")
    return "\n".join(lines)


def _latex_cr_element(x) -> str:
    if x.is_zero:
        return "0"
    terms = []
    for j, m, c in x.monomials():
        body = ""
        if m:
            body += "u" if m == 1 else f"u^{{{m}}}"
        if j:
            body += r"\alpha_{%d}" % j
        if not body:
            body = str(abs(c))
        elif abs(c) != 1:
            body = f"{abs(c)}{body}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- chenruan ----------------------------------------------------------------


def _chenruan_sections(args):
    chosen = [
        name
        for name, flag in (
            ("sectors", args.sectors),
            ("presentation", args.presentation),
            ("multtable", args.multtable),
        )
        if flag
    ]
    return chosen or ["sectors", "presentation"]


def _cmd_chenruan(args) -> int:
    ring = CrRing(args.weights)
    sections = _chenruan_sections(args)
    max_degree = args.max_degree or _default_degree(ring.weights.n)

    if args.format == "json":
        doc: dict = {"weights": list(ring.weights.b), "ell": ring.ell}
        if "sectors" in sections:
            doc["sectors"] = [
                {
                    "j": s.j,
                    "a": [_fr(a) for a in s.a],
                    "fixed": list(s.fixed),
                    "euler": {"coefficient": s.c, "exponent": s.d},
                    "degree_shift": _fr(s.degree_shift),
                }
                for s in ring.sectors
            ]
        if "presentation" in sections:
            pres = ring.presentation()
            doc["generators"] = [
                {"name": name, "degree": _fr(deg)} for name, deg in pres.generators
            ]
            doc["relations"] = {
                "J": [str(rel) for rel in pres.kernel_relations],
                "I": [
                    {"i": rel.i, "j": rel.j, "product": str(rel.product)}
                    for rel in pres.product_relations
                ],
            }
            doc["graded"] = [
                {"degree": _fr(deg), "group": grp.to_json()}
                for deg, grp in ring.graded_dimensions(max_degree)
            ]
        if "multtable" in sections:
            doc["mult_table"] = [
                {"i": i, "j": j, "product": str(prod)}
                for (i, j), prod in sorted(ring.mult_table().items())
            ]
        print(_dump_json(doc))
        return 0

    if args.format == "latex":
        blocks = []
        if "sectors" in sections:
            blocks.append(_sector_table_latex(ring))
        if "presentation" in sections:
            pres = ring.presentation()
            gens = ", ".join(
                "u" if name == "u" else r"\alpha_{%s}" % name[1:]
                for name, _ in pres.generators
            )
            rels = ", ".join(
                _latex_cr_element(rel.element) for rel in pres.kernel_relations
            )
            blocks.append(
                r"\mathbb{Z}[%s]/(\mathcal{I} + \langle %s \rangle)" % (gens, rels)
            )
            blocks.append(
                "\n".join(
                    r"\alpha_{%d}\alpha_{%d} = %s \\" % (rel.i, rel.j, _latex_cr_element(rel.product))
                    for rel in pres.product_relations
                )
            )
        if "multtable" in sections:
            blocks.append(
                "\n".join(
                    r"\alpha_{%d} \star \alpha_{%d} = %s \\" % (i, j, _latex_cr_element(prod))
                    for (i, j), prod in sorted(ring.mult_table().items())
                )
            )
        print("\n\n".join(blocks))
        return 0

    blocks = []
    if "sectors" in sections:
        blocks.append(f"sector data for weights {ring.weights} (ell = {ring.ell})")
        blocks.append(_sector_table_text(ring))
    if "presentation" in sections:
        pres = ring.presentation()
        if ring.ell == 1:
            header = "presentation: Z[u] modulo"
        elif ring.ell == 2:
            header = "presentation: Z[u, a1] modulo"
        else:
            header = "presentation: Z[u, a1..a%d] modulo" % (ring.ell - 1)
        lines = [header]
        lines.append("  kernel relations: " + ", ".join(str(r) for r in pres.kernel_relations))
        if pres.product_relations:
            lines.append("  product relations:")
            lines.extend(f"    {rel}" for rel in pres.product_relations)
        lines.append("generator degrees:")
        lines.extend(f"  {name}: degree {_fr(deg)}" for name, deg in pres.generators)
        lines.append(f"groups by degree (up to {_fr(max_degree)}):")
        lines.extend(
            f"  degree {_fr(deg)}: {grp}" for deg, grp in ring.graded_dimensions(max_degree)
        )
        blocks.append("\n".join(lines))
    if "multtable" in sections:
        lines = ["multiplication table (nonzero twisted generators):"]
        lines.extend(
            f"  a{i}*a{j} = {prod}" for (i, j), prod in sorted(ring.mult_table().items())
        )
        blocks.append("\n".join(lines))
    print("\n\n".join(blocks))
    return 0


# -- kawasaki -------------------------------------------------------------------


def _cmd_kawasaki(args) -> int:
    ring = KawasakiRing(args.weights)
    n = ring.weights.n
    max_degree = int(args.max_degree or _default_degree(n))
    pres = ring.presentation()

    if args.format == "json":
        doc = {
            "weights": list(ring.weights.b),
            "ell": list(ring.ell_table),
            "generators": [{"name": name, "degree": deg} for name, deg in pres.generators],
            "relations": [
                {"i": k, "j": m, "product": str(prod)} for k, m, prod in pres.relations
            ],
            "g1_power_spans": list(pres.g1_power_spans),
            "groups": ring.groups(max_degree).to_json(),
        }
        print(_dump_json(doc))
        return 0

    if args.format == "latex":
        lines = [
            r"\ell\text{-table}: (%s)" % ", ".join(map(str, ring.ell_table)),
            r"\text{generators: } "
            + ", ".join(r"\gamma_{%d} \ (\deg %d)" % (k, 2 * k) for k in range(1, n + 1)),
        ]
        for k, m, prod in pres.relations:
            if prod.is_zero:
                rhs = "0"
            else:
                (idx, coeff), = prod.coeffs.items()
                rhs = (str(coeff) if coeff != 1 else "") + r"\gamma_{%d}" % idx
            lines.append(r"\gamma_{%d}\gamma_{%d} = %s \\" % (k, m, rhs))
        print("\n".join(lines))
        return 0

    lines = [f"coarse-space cohomology ring for weights {ring.weights}"]
    lines.append("ell table: " + ", ".join(f"l_{k} = {v}" for k, v in enumerate(ring.ell_table)))
    if n:
        lines.append("generators: " + ", ".join(f"g{k} (degree {2 * k})" for k in range(1, n + 1)))
        lines.append("product relations:")
        lines.extend(f"  g{k}*g{m} = {prod}" for k, m, prod in pres.relations)
        spans = ", ".join(
            f"degree {2 * k}: {'yes' if ok else 'no'}"
            for k, ok in enumerate(pres.g1_power_spans)
        )
        lines.append(f"powers of g1 span ({spans})")
    lines.append(f"groups by degree (up to {max_degree}):")
    lines.extend(f"  degree {d}: {grp}" for d, grp in ring.groups(max_degree).items())
    print("\n".join(lines))
    return 0


# -- orbifold --------------------------------------------------------------------


def _cmd_orbifold(args) -> int:
    ring = OrbifoldRing(args.weights)
    kaw = KawasakiRing(args.weights)
    n = ring.weights.n
    max_degree = int(args.max_degree or _default_degree(n))
    images = [(f"g{k}", kaw.qstar(kaw.gamma(k), ring)) for k in range(1, n + 1)]

    if args.format == "json":
        doc = ring.to_json(max_degree)
        doc["qstar"] = [{"generator": name, "image": str(img)} for name, img in images]
        print(_dump_json(doc))
        return 0

    if args.format == "latex":
        lines = [r"\mathbb{Z}[u]/\langle %du^{%d} \rangle" % (ring.N, ring.top)]
        for name, img in images:
            k = int(name[1:])
            (m, c), = img.coeffs.items()
            lines.append(
                r"q^*(\gamma_{%d}) = %s%s \\"
                % (k, c if c != 1 else "", "u" if m == 1 else f"u^{{{m}}}")
            )
        print("\n".join(lines))
        return 0

    lines = [f"orbifold cohomology ring for weights {ring.weights}: {ring}"]
    lines.append(f"groups by degree (up to {max_degree}):")
    lines.extend(f"  degree {d}: {grp}" for d, grp in ring.groups(max_degree).items())
    if images:
        lines.append("comparison map from the coarse-space ring:")
        lines.extend(f"  q*({name}) = {img}" for name, img in images)
    print("\n".join(lines))
    return 0


# -- kunneth ----------------------------------------------------------------------


def _cmd_kunneth(args) -> int:
    wa, wb = args.weights, args.weights_b
    max_degree = int(
        args.max_degree if args.max_degree is not None
        else _default_degree(wa.n + wb.n)
    )
    pg = product_groups(wa, wb, max_degree)
    witness = odd_torsion_witness(wa, wb, max_degree)

    if args.format == "json":
        doc = {
            "weights_a": list(wa.b),
            "weights_b": list(wb.b),
            "max_degree": max_degree,
            "groups": pg.groups.to_json(),
            "odd_torsion_witness": witness,
        }
        print(_dump_json(doc))
        return 0

    if args.format == "latex":
        lines = [
            r"H^{%d} = %s \\" % (d, str(grp).replace("Z", r"\mathbb{Z}"))
            for d, grp in pg.groups.items()
        ]
        print("\n".join(lines))
        return 0

    lines = [f"product cohomology for {wa} x {wb} up to degree {max_degree}:"]
    lines.extend(f"  degree {d}: {grp}" for d, grp in pg.groups.items())
    if witness is None:
        lines.append(f"no odd-degree torsion up to degree {max_degree}")
    else:
        lines.append(
            f"first odd degree with nonzero group: {witness} ({pg.groups.group(witness)})"
        )
    print("\n".join(lines))
    return 0


# -- eval -----------------------------------------------------------------------------


_RINGS = {
    "kawasaki": KawasakiRing,
    "orbifold": OrbifoldRing,
    "chenruan": CrRing,
}


def _cmd_eval(args) -> int:
    ring = _RINGS[args.ring](args.weights)
    tree = parse(args.expression)
    value = evaluate(tree, ring)
    if value.is_zero:
        degree = "undefined (zero element)"
    else:
        deg = value.degree()
        degree = "inhomogeneous" if deg is None else _fr(deg)

    if args.format == "json":
        print(
            _dump_json(
                {
                    "ring": args.ring,
                    "weights": list(args.weights.b),
                    "expression": args.expression,
                    "value": str(value),
                    "degree": degree,
                }
            )
        )
        return 0
    if args.format == "latex" and args.ring == "chenruan":
        print(_latex_cr_element(value))
        return 0
    print(str(value))
    print(f"degree: {degree}")
    return 0


# -- check ------------------------------------------------------------------------------


def _cmd_check(args) -> int:
    results = run_checks(args.weights)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(
            _dump_json(
                {
                    "weights": list(args.weights.b),
                    "ok": ok,
                    "results": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
        return 0 if ok else 1
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        suffix = f" -- {r.detail}" if r.detail else ""
        print(f"{status} {r.name}{suffix}")
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


# -- argument plumbing ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="wpscoh",
        description="Exact cohomology rings of weighted projective quotients.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_degree=True):
        p.add_argument(
            "--weights", type=_weights_arg, required=True,
            help="comma-separated positive integer weights, e.g. 1,2,2,3,3,3",
        )
        p.add_argument(
            "--format", choices=("text", "json", "latex"), default="text",
        )
        if with_degree:
            p.add_argument(
                "--max-degree", type=_degree_arg, default=None,
                help="degree bound for group listings (integer or p/q; default 2(n+2))",
            )

    p = sub.add_parser("kawasaki", help="singular cohomology ring of the coarse space")
    common(p)
    p.set_defaults(func=_cmd_kawasaki)

    p = sub.add_parser("orbifold", help="cohomology ring of the orbifold")
    common(p)
    p.set_defaults(func=_cmd_orbifold)

    p = sub.add_parser("chenruan", help="sector-graded orbifold cohomology ring")
    common(p)
    p.add_argument("--sectors", action="store_true", help="print the sector chart")
    p.add_argument("--presentation", action="store_true", help="print the presentation")
    p.add_argument("--multtable", action="store_true", help="print the twisted multiplication table")
    p.set_defaults(func=_cmd_chenruan)

    p = sub.add_parser("kunneth", help="degree-wise groups of a product of two quotients")
    common(p)
    p.add_argument(
        "--weights-b", type=_weights_arg, required=True,
        help="weights of the second factor",
    )
    p.set_defaults(func=_cmd_kunneth)

    p = sub.add_parser("eval", help="evaluate an expression in one of the rings")
    common(p, with_degree=False)
    p.add_argument("--ring", choices=tuple(_RINGS), required=True)
    p.add_argument("expression", help="e.g. 'a2*a2 + u^3'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check", help="run the invariant suite for the given weights")
    common(p, with_degree=False)
    p.set_defaults(func=_cmd_check)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EvalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
