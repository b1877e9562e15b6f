"""Exact Laurent polynomial arithmetic in A, the arrow variables K_n and the
long-segment word variables L[w].

Coefficients are Python ints (arbitrary precision).  Values are immutable;
all arithmetic returns new polynomials in canonical (sorted, zero-free) form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import DoubleLongSegment, IncompleteAssignment


@dataclass(frozen=True, order=True)
class Monomial:
    """A^a * prod K_n^e * L[word]; word '' means no long-segment factor."""

    a: int = 0
    ks: tuple[tuple[int, int], ...] = ()
    lam: str = ""

    def __post_init__(self):
        if any(e == 0 for _, e in self.ks):
            raise ValueError("zero K exponent stored")
        if list(self.ks) != sorted(self.ks):
            raise ValueError("K factors not sorted")

    def mul(self, other: "Monomial") -> "Monomial":
        if self.lam and other.lam:
            raise DoubleLongSegment("a state has at most one long segment")
        ks: dict[int, int] = dict(self.ks)
        for n, e in other.ks:
            ks[n] = ks.get(n, 0) + e
        kt = tuple(sorted((n, e) for n, e in ks.items() if e != 0))
        return Monomial(self.a + other.a, kt, self.lam or other.lam)

    def text(self) -> str:
        parts = []
        if self.a:
            parts.append(f"A^{self.a}" if self.a != 1 else "A")
        for n, e in self.ks:
            parts.append(f"K{n}^{e}" if e != 1 else f"K{n}")
        if self.lam:
            parts.append(f"L[{self.lam}]")
        return "*".join(parts) if parts else "1"


ONE_MONO = Monomial()

ScalarLike = Union[int, "MultiPoly"]


class MultiPoly:
    """Integer-coefficient polynomial over :class:`Monomial` terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def const(c: int) -> "MultiPoly":
        return MultiPoly({ONE_MONO: c})

    @staticmethod
    def a_power(k: int, coeff: int = 1) -> "MultiPoly":
        return MultiPoly({Monomial(a=k): coeff})

    @staticmethod
    def k_var(n: int) -> "MultiPoly":
        return MultiPoly({Monomial(ks=((n, 1),)): 1})

    @staticmethod
    def lam_var(word: str) -> "MultiPoly":
        return MultiPoly({Monomial(lam=word): 1}) if word else MultiPoly.const(1)

    @staticmethod
    def d() -> "MultiPoly":
        """The loop value -A^2 - A^-2."""
        return MultiPoly({Monomial(a=2): -1, Monomial(a=-2): -1})

    @staticmethod
    def pow_d(e: int) -> "MultiPoly":
        """(-A^2 - A^-2)^e for e >= 0."""
        if e < 0:
            raise ValueError("pow_d needs a nonnegative exponent")
        out = MultiPoly.const(1)
        for _ in range(e):
            out = out * MultiPoly.d()
        return out

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(x: ScalarLike) -> "MultiPoly":
        return MultiPoly.const(x) if isinstance(x, int) else x

    def __add__(self, other: ScalarLike) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: ScalarLike) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other: ScalarLike) -> "MultiPoly":
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ---------------------------------------------------------

    def is_constant(self) -> bool:
        return all(m == ONE_MONO for m in self.terms)

    def as_int(self) -> int:
        for m in self.terms:
            if m != ONE_MONO:
                raise IncompleteAssignment(f"free variables remain: {m.text()}")
        return self.terms.get(ONE_MONO, 0)

    def a_exponents(self) -> set[int]:
        return {m.a for m in self.terms}

    def max_k_index(self) -> int:
        """Largest n with K_n appearing; 0 if none."""
        best = 0
        for m in self.terms:
            for n, _ in m.ks:
                best = max(best, n)
        return best

    def k_free(self) -> bool:
        return all(not m.ks and not m.lam for m in self.terms)

    # -- substitution ----------------------------------------------------

    def substitute(
        self,
        a: ScalarLike | None = None,
        ks: Mapping[int, ScalarLike] | None = None,
        k_default: ScalarLike | None = None,
        lam: Mapping[str, ScalarLike] | None = None,
        lam_default: ScalarLike | None = None,
    ) -> "MultiPoly":
        """Exact substitution.

        ``a`` must be a unit (a single ±A^k term) when A carries negative
        exponents, which covers every use here (A↦1, A↦-A^k, ...).
        """
        a_poly = None if a is None else self._coerce(a)
        if a_poly is not None and len(a_poly.terms) != 1:
            neg = any(m.a < 0 for m in self.terms)
            if neg:
                raise ValueError("substituting a non-unit for A with negative exponents")
        out = MultiPoly.zero()
        for m, c in self.terms.items():
            term = MultiPoly.const(c)
            if a_poly is None:
                term = term * MultiPoly.a_power(m.a)
            else:
                term = term * _int_pow(a_poly, m.a)
            for n, e in m.ks:
                val: ScalarLike | None = None
                if ks is not None and n in ks:
                    val = ks[n]
                elif k_default is not None:
                    val = k_default
                if val is None:
                    term = term * _int_pow(MultiPoly.k_var(n), e)
                else:
                    term = term * _int_pow(self._coerce(val), e)
            if m.lam:
                lval: ScalarLike | None = None
                if lam is not None and m.lam in lam:
                    lval = lam[m.lam]
                elif lam_default is not None:
                    lval = lam_default
                if lval is None:
                    term = term * MultiPoly.lam_var(m.lam)
                else:
                    term = term * self._coerce(lval)
            out = out + term
        return out

    # -- serialization ---------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: (mc[0].a, mc[0].ks, mc[0].lam))

    def text(self) -> str:
        items = self._sorted_terms()
        if not items:
            return "0"
        parts = []
        for i, (m, c) in enumerate(items):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            body = m.text()
            if body == "1":
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = f"{mag}*{body}"
            parts.append(f"{sign} {chunk}" if i else f"{sign}{chunk}")
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "a": m.a, "k": {str(n): e for n, e in m.ks}, "lambda": m.lam}
            for m, c in self._sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable[dict]) -> "MultiPoly":
        terms: dict[Monomial, int] = {}
        for t in data:
            ks = tuple(sorted((int(n), int(e)) for n, e in t.get("k", {}).items()))
            m = Monomial(t.get("a", 0), ks, t.get("lambda", ""))
            terms[m] = terms.get(m, 0) + t["coeff"]
        return MultiPoly(terms)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"MultiPoly({self.text()})"


def _int_pow(p: MultiPoly, e: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.const(1)
    if e < 0:
        # only units can be inverted; p is a single term here
        ((m, c),) = p.terms.items()
        if abs(c) != 1 or m.ks or m.lam:
            raise ValueError(f"cannot invert {p!r}")
        inv = MultiPoly({Monomial(a=-m.a): c})
        return _int_pow(inv, -e)
    half = _int_pow(p, e // 2)
    out = half * half
    return out * p if e % 2 else out


ONE = MultiPoly.const(1)


def jones_t_form(f: MultiPoly) -> MultiPoly | None:
    """V_K(t) from f_K(A) via A = t^(-1/4), exponent-wise.

    Returns the t-polynomial (as a MultiPoly whose 'a' exponent means the
    power of t) when every A-exponent is a multiple of 4, else None.
    """
    if not f.k_free():
        return None
    if any(m.a % 4 for m in f.terms):
        return None
    return MultiPoly({Monomial(a=-m.a // 4): c for m, c in f.terms.items()})
