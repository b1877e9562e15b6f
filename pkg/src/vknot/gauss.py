"""Gauss-code diagram model for closed/long virtual, flat and classical knots.

A diagram is a sequence of :class:`Passage` records, two per crossing.  Codes
are normalized on construction: crossing ids are renumbered densely (1..n) in
order of first appearance, so structural equality of :class:`GaussCode` values
is equality of diagrams-as-codes.

Flat crossings store a *chirality* in the sign field: the classical sign the
crossing would acquire if its first passage were made an undercrossing.  With
this convention ``ascend`` is a pure relabeling and ``flatten`` is its exact
left inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AlreadyClosed,
    CrossingCountError,
    FlatCodeError,
    MalformedToken,
    MixedFlatError,
    NotFlat,
    NotLong,
    SignMismatchError,
    UnknownCrossing,
)

OVER = "O"
UNDER = "U"
FLAT = "F"

CLOSED = "closed"
LONG = "long"

_TOKEN_RE = re.compile(r"([OUF])([1-9][0-9]*)([+-])\Z")


@dataclass(frozen=True, order=True)
class Passage:
    """One passage through a crossing: (id, kind, sign)."""

    crossing: int
    kind: str  # OVER, UNDER or FLAT
    sign: int  # +1 or -1; chirality for FLAT

    def token(self) -> str:
        return f"{self.kind}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    """A closed or long knot diagram as a normalized Gauss code."""

    passages: tuple[Passage, ...]
    shape: str  # CLOSED or LONG

    # -- construction ----------------------------------------------------

    @staticmethod
    def make(passages: Iterable[Passage], shape: str = CLOSED) -> "GaussCode":
        """Validate, renumber densely by first appearance and build a code."""
        seq = list(passages)
        if shape not in (CLOSED, LONG):
            raise ValueError(f"bad shape {shape!r}")
        occ: dict[int, list[Passage]] = {}
        order: list[int] = []
        for p in seq:
            if p.kind not in (OVER, UNDER, FLAT):
                raise MalformedToken(f"bad pass kind {p.kind!r}")
            if p.sign not in (1, -1):
                raise MalformedToken(f"bad sign {p.sign!r}")
            if p.crossing not in occ:
                occ[p.crossing] = []
                order.append(p.crossing)
            occ[p.crossing].append(p)
        flat_seen = classical_seen = False
        for c, ps in occ.items():
            if len(ps) != 2:
                raise CrossingCountError(f"crossing {c} occurs {len(ps)} time(s)")
            kinds = {ps[0].kind, ps[1].kind}
            if kinds == {FLAT}:
                flat_seen = True
            elif kinds == {OVER, UNDER}:
                classical_seen = True
            else:
                raise MixedFlatError(f"crossing {c} mixes flat and classical passages")
            if ps[0].sign != ps[1].sign:
                raise SignMismatchError(f"crossing {c} has mismatched signs")
        if flat_seen and classical_seen:
            raise MixedFlatError("code mixes flat and classical crossings")
        relabel = {c: i + 1 for i, c in enumerate(order)}
        normalized = tuple(
            Passage(relabel[p.crossing], p.kind, p.sign) for p in seq
        )
        return GaussCode(normalized, shape)

    # -- basic queries ---------------------------------------------------

    @property
    def crossings(self) -> int:
        return len(self.passages) // 2

    @property
    def is_flat(self) -> bool:
        return any(p.kind == FLAT for p in self.passages)

    @property
    def is_long(self) -> bool:
        return self.shape == LONG

    def occurrences(self, crossing: int) -> tuple[int, int]:
        """Positions of the two passages of `crossing`, in code order."""
        pos = [i for i, p in enumerate(self.passages) if p.crossing == crossing]
        if not pos:
            raise UnknownCrossing(f"crossing {crossing} not in code")
        return pos[0], pos[1]

    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing for p in self.passages})

    def sign(self, crossing: int) -> int:
        i, _ = self.occurrences(crossing)
        return self.passages[i].sign

    def _require_classical(self) -> None:
        if self.is_flat:
            raise FlatCodeError("operation needs a virtual/classical code")

    # -- serialization ---------------------------------------------------

    def serialize(self) -> str:
        head = f"{self.shape}:"
        if not self.passages:
            return head
        return head + " " + " ".join(p.token() for p in self.passages)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.serialize()

    # -- parity and writhes ----------------------------------------------

    def parity(self, crossing: int) -> str:
        """'odd' or 'even': does the crossing flank an odd symbol count?"""
        i, j = self.occurrences(crossing)
        between = j - i - 1
        return "odd" if between % 2 else "even"

    def odd_writhe(self) -> int:
        self._require_classical()
        return sum(
            self.sign(c) for c in self.crossing_ids() if self.parity(c) == "odd"
        )

    def writhe(self) -> int:
        self._require_classical()
        return sum(self.sign(c) for c in self.crossing_ids())

    # -- structural maps -------------------------------------------------

    def flatten(self) -> "GaussCode":
        """Forget over/under; store chirality per the first-pass-under rule."""
        if self.is_flat:
            return self
        first_kind = {}
        for p in self.passages:
            first_kind.setdefault(p.crossing, p.kind)
        out = []
        for p in self.passages:
            chi = p.sign if first_kind[p.crossing] == UNDER else -p.sign
            out.append(Passage(p.crossing, FLAT, chi))
        return GaussCode.make(out, self.shape)

    def ascend(self) -> "GaussCode":
        """First passage under, second over; sign = stored chirality."""
        if self.passages and not self.is_flat:
            raise NotFlat("ascend needs a flat code")
        if not self.is_long:
            raise NotLong("ascend needs a long code")
        return GaussCode.make(self._lift_passages(), LONG)

    def _lift_passages(self) -> list[Passage]:
        seen: set[int] = set()
        out = []
        for p in self.passages:
            kind = UNDER if p.crossing not in seen else OVER
            seen.add(p.crossing)
            out.append(Passage(p.crossing, kind, p.sign))
        return out

    def lift(self) -> "GaussCode":
        """All-first-pass-under overlying virtual code of a flat code."""
        if self.passages and not self.is_flat:
            raise NotFlat("lift needs a flat code")
        return GaussCode.make(self._lift_passages(), self.shape)

    def close(self) -> "GaussCode":
        if not self.is_long:
            raise AlreadyClosed("code is already closed")
        return GaussCode.make(self.passages, CLOSED)

    def switch(self, crossing: int) -> "GaussCode":
        """s(i): exchange over/under and negate the sign of one crossing."""
        self._require_classical()
        self.occurrences(crossing)
        out = []
        for p in self.passages:
            if p.crossing == crossing:
                kind = OVER if p.kind == UNDER else UNDER
                out.append(Passage(p.crossing, kind, -p.sign))
            else:
                out.append(p)
        return GaussCode.make(out, self.shape)

    def virtualize(self, crossing: int) -> "GaussCode":
        """v(i): flank the crossing with two virtual crossings.

        On the code this negates the crossing's sign while keeping the
        over/under roles: the detour reverses one strand locally, so the
        crossing seen in the plane has the same strand on top but opposite
        chirality.  This transcription satisfies f(v(K,i)) = f(s(K,i)) and is
        an involution on the nose.
        """
        self._require_classical()
        self.occurrences(crossing)
        out = [
            Passage(p.crossing, p.kind, -p.sign) if p.crossing == crossing else p
            for p in self.passages
        ]
        return GaussCode.make(out, self.shape)

    def mirror(self) -> "GaussCode":
        """Reflect: swap over/under and negate all signs (flat: chirality)."""
        out = []
        for p in self.passages:
            if p.kind == FLAT:
                out.append(Passage(p.crossing, FLAT, -p.sign))
            else:
                kind = OVER if p.kind == UNDER else UNDER
                out.append(Passage(p.crossing, kind, -p.sign))
        return GaussCode.make(out, self.shape)

    def reverse(self) -> "GaussCode":
        """Traverse the diagram backwards.

        Classical crossings keep kind and sign (both strands reverse).  Flat
        chirality is recomputed for the new basepoint direction: the first and
        second occurrences swap roles, which negates the stored chirality.
        """
        out = []
        for p in reversed(self.passages):
            if p.kind == FLAT:
                out.append(Passage(p.crossing, FLAT, -p.sign))
            else:
                out.append(p)
        return GaussCode.make(out, self.shape)


def parse(text: str) -> GaussCode:
    """Parse one diagram line of the Gauss-code grammar."""
    line = text.split("#", 1)[0].strip()
    if line.startswith(f"{CLOSED}:"):
        shape, rest = CLOSED, line[len(CLOSED) + 1 :]
    elif line.startswith(f"{LONG}:"):
        shape, rest = LONG, line[len(LONG) + 1 :]
    else:
        raise MalformedToken(f"missing 'closed:' or 'long:' prefix in {text!r}")
    passages = []
    for tok in rest.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise MalformedToken(f"bad passage token {tok!r}")
        kind, ident, sign = m.groups()
        passages.append(Passage(int(ident), kind, 1 if sign == "+" else -1))
    return GaussCode.make(passages, shape)


def parse_file(text: str) -> list[GaussCode]:
    """Parse a multi-line Gauss-code document (comments and blanks allowed)."""
    codes = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            codes.append(parse(stripped))
    return codes


EMPTY_CLOSED = GaussCode((), CLOSED)
EMPTY_LONG = GaussCode((), LONG)
