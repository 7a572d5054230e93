"""
Graded Euler characteristic of the cube complex and an independent
Kauffman-bracket state sum for the unnormalized Jones polynomial.
"""

from collections import Counter
from tokenize import TokenError

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from cube.generators import GeneratorBasis
from diagram.models import SMOOTHING_PARTNER, LinkDiagram
from diagram.pd import signs

q = sp.Symbol("q")
A = sp.Symbol("A")


def euler_characteristic(basis: GeneratorBasis) -> sp.Expr:
    """Sum over generators of (-1)^h q^q."""
    counts = Counter(zip(basis.h.tolist(), basis.q.tolist(), strict=True))
    return sp.expand(sum((-1) ** h * c * q**qq for (h, qq), c in counts.items()))


def _state_loops(d: LinkDiagram, state: int) -> int:
    parent = {label: label for label in d.labels}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ci, crossing in enumerate(d.crossings):
        bit = (state >> (d.n - 1 - ci)) & 1
        partner = SMOOTHING_PARTNER[bit]
        for pos in (0, 2) if bit == 0 else (0, 1):
            a, b = crossing.edges[pos], crossing.edges[partner[pos]]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(label) for label in d.labels})


def kauffman_bracket(d: LinkDiagram) -> sp.Expr:
    """State sum of A^(#0 - #1) (-A^2 - A^-2)^loops over all smoothings."""
    loop_value = -(A**2) - A**-2
    tally = Counter()
    for state in range(1 << d.n):
        ones = state.bit_count()
        tally[(d.n - 2 * ones, _state_loops(d, state))] += 1
    return sp.expand(
        sum(count * A**power * loop_value**loops for (power, loops), count in tally.items())
    )


def jones_polynomial(d: LinkDiagram) -> sp.Expr:
    """Unnormalized Jones polynomial in q from the Kauffman bracket."""
    n_plus, n_minus = signs(d)
    shifted = sp.expand(kauffman_bracket(d) * A ** (-d.n))
    in_q = sp.expand(shifted.subs(A, sp.I * q ** sp.Rational(-1, 2)))
    return sp.expand((-1) ** n_minus * q ** (n_plus - 2 * n_minus) * in_q)


def laurent_coefficients(expr: sp.Expr) -> dict[int, int]:
    """Power of q -> integer coefficient, zero terms dropped."""
    coefficients: Counter = Counter()
    for term in sp.Add.make_args(sp.expand(expr)):
        if term == 0:
            continue
        coeff, power = term.as_coeff_exponent(q)
        coefficients[int(power)] += int(coeff)
    return {p: c for p, c in sorted(coefficients.items(), reverse=True) if c}


def parse_laurent(text: str) -> sp.Expr:
    """Laurent polynomial in q from text such as "q^-1 + 2 - q^3".

    Raises:
        ValueError: If the text is not a Laurent polynomial in q.
    """
    try:
        expr = parse_expr(
            text,
            local_dict={"q": q},
            transformations=(*standard_transformations, convert_xor),
        )
    except (SyntaxError, TokenError, TypeError, sp.SympifyError) as e:
        raise ValueError(f"Cannot read Laurent polynomial {text!r}") from e
    if not expr.free_symbols <= {q}:
        raise ValueError(f"Laurent polynomial {text!r} uses symbols other than q")
    return sp.expand(expr)


def format_laurent(expr: sp.Expr) -> str:
    """Stable text form, highest power first."""
    terms = [f"{c}*q^{p}" for p, c in laurent_coefficients(expr).items()]
    return " + ".join(terms) if terms else "0"
