"""Bracket polynomial, its writhe-normalized form and the Jones polynomial.

The bracket of a diagram with n crossings is the sum over the 2^n smoothing
states S of A^(#A - #B) d^(||S|| - 1), where ||S|| counts the closed state
loops and d = -A^2 - A^-2.  For long diagrams the open segment is not a
loop and the exponent is the plain closed-loop count.
"""

from __future__ import annotations

from .errors import SizeCapExceeded
from .gauss import GaussCode
from .poly import Monomial, MultiPoly
from .statesum import A_CHOICE, Resolver

DEFAULT_MAX_CROSSINGS = 24


def check_cap(code: GaussCode, max_crossings: int) -> None:
    if code.crossings > max_crossings:
        raise SizeCapExceeded(
            f"{code.crossings} crossings exceeds the cap of {max_crossings}"
        )


def bracket(code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> MultiPoly:
    """Kauffman bracket of a virtual/classical Gauss code."""
    check_cap(code, max_crossings)
    res = Resolver(code)
    out = MultiPoly.zero()
    n = len(res.smooth_ids)
    for choices in res.states():
        n_a = sum(1 for c in choices if c == A_CHOICE)
        loops = sum(1 for lp in res.loops(choices) if not lp.is_segment)
        exp = loops - 1 if code.shape == "closed" else loops
        out = out + MultiPoly.a_power(n_a - (n - n_a)) * MultiPoly.pow_d(exp)
    return out


def f_poly(code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> MultiPoly:
    """Writhe-normalized bracket f_K = (-A^3)^(-w) <K>."""
    w = code.writhe()
    norm = MultiPoly({Monomial(a=-3 * w): (-1) ** (w % 2)})
    return norm * bracket(code, max_crossings)


def jones(code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> MultiPoly | None:
    """Jones polynomial V_K(t), or None when f_K has no pure t-form.

    The returned polynomial's exponent field is the power of t.
    """
    from .poly import jones_t_form

    return jones_t_form(f_poly(code, max_crossings))


def q_bracket(code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> MultiPoly:
    """Unnormalized quantum bracket sum_S (-q)^(n_B) (q + q^-1)^(||S||).

    The exponent field of the result is the power of q.  This is the graded
    Euler characteristic of the mod-2 resolution complex.
    """
    check_cap(code, max_crossings)
    res = Resolver(code)
    loop_val = MultiPoly({Monomial(a=1): 1, Monomial(a=-1): 1})
    out = MultiPoly.zero()
    for choices in res.states():
        n_b = sum(choices)
        loops = sum(1 for lp in res.loops(choices) if not lp.is_segment)
        term = MultiPoly({Monomial(a=n_b): (-1) ** (n_b % 2)})
        for _ in range(loops):
            term = term * loop_val
        out = out + term
    return out
