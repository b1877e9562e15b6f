"""Reidemeister move engine on Gauss codes, classical and flat.

Moves are detected and applied as local patterns on the code: since virtual
isotopy is generated by abstract Reidemeister moves on Gauss codes, every
pattern match is a valid move (detour moves are invisible at this level and
have no representation).

The R3 pattern is derived from a planar model: three strands pairwise
crossing in a triangle, with the sliding strand uniformly over or under.
Writing e1, e2, e3 = +-1 for the traversal direction of the slider and the
two other strands relative to a fixed layout, the three crossing signs are
forced: sign(A) = -+e1*e2, sign(B) = +-e1*e3 (upper sign when the slider is
under) and sign(C) = -+e2*e3 (upper sign when the strand through A is over
at C).  Detection reads the e's off the code and checks these equations;
applying the move swaps the two passages inside each of the three adjacent
pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import InvalidSite
from .gauss import CLOSED, FLAT, OVER, UNDER, GaussCode, Passage

R1_ADD = "r1-add"
R1_REMOVE = "r1-remove"
R2_ADD = "r2-add"
R2_REMOVE = "r2-remove"
R3 = "r3"

MATCHED = "matched"
MIXED = "mixed"

DEFAULT_SCRAMBLE_CAP = 24


@dataclass(frozen=True)
class Move:
    """One applicable Reidemeister move.

    ``site`` holds insertion positions (Add moves) or the starting position
    of each matched adjacent pair (Remove/R3 moves).  ``params`` selects the
    sign/kind/orientation variant of Add moves.
    """

    kind: str
    site: tuple[int, ...]
    params: tuple = field(default=())


def _adjacent(code: GaussCode) -> list[tuple[int, int]]:
    """All adjacent position pairs (i, next(i)) in traversal order."""
    m = len(code.passages)
    if code.shape == CLOSED:
        return [(i, (i + 1) % m) for i in range(m)] if m >= 2 else []
    return [(i, i + 1) for i in range(m - 1)]


def _pair_of(code: GaussCode, start: int) -> tuple[int, int]:
    m = len(code.passages)
    if code.shape == CLOSED:
        if not 0 <= start < m:
            raise InvalidSite(f"pair start {start} out of range")
        return (start, (start + 1) % m)
    if not 0 <= start < m - 1:
        raise InvalidSite(f"pair start {start} out of range")
    return (start, start + 1)


# ---------------------------------------------------------------------------
# R1


def _r1_add_moves(code: GaussCode) -> Iterator[Move]:
    positions = range(len(code.passages) + 1)
    if code.is_flat:
        for pos in positions:
            for chi in (1, -1):
                yield Move(R1_ADD, (pos,), (FLAT, chi))
    else:
        for pos in positions:
            for first in (OVER, UNDER):
                for sign in (1, -1):
                    yield Move(R1_ADD, (pos,), (first, sign))


def _r1_remove_moves(code: GaussCode) -> Iterator[Move]:
    for i, j in _adjacent(code):
        if code.passages[i].crossing == code.passages[j].crossing:
            yield Move(R1_REMOVE, (i,))


def _apply_r1_add(code: GaussCode, move: Move) -> GaussCode:
    (pos,) = move.site
    seq = list(code.passages)
    if not 0 <= pos <= len(seq):
        raise InvalidSite(f"insertion position {pos} out of range")
    first, sign = move.params
    cid = max((p.crossing for p in seq), default=0) + 1
    if first == FLAT:
        block = [Passage(cid, FLAT, sign), Passage(cid, FLAT, sign)]
    else:
        second = UNDER if first == OVER else OVER
        block = [Passage(cid, first, sign), Passage(cid, second, sign)]
    return GaussCode.make(seq[:pos] + block + seq[pos:], code.shape)


def _apply_r1_remove(code: GaussCode, move: Move) -> GaussCode:
    i, j = _pair_of(code, move.site[0])
    if code.passages[i].crossing != code.passages[j].crossing:
        raise InvalidSite("positions do not hold a kink")
    seq = [p for k, p in enumerate(code.passages) if k not in (i, j)]
    return GaussCode.make(seq, code.shape)


# ---------------------------------------------------------------------------
# R2


def _r2_add_moves(code: GaussCode) -> Iterator[Move]:
    m = len(code.passages)
    for i in range(m + 1):
        for j in range(i, m + 1):
            for variant in (MATCHED, MIXED):
                for sign in (1, -1):
                    if code.is_flat:
                        yield Move(R2_ADD, (i, j), (variant, sign, True))
                    else:
                        for over_first in (True, False):
                            yield Move(R2_ADD, (i, j), (variant, sign, over_first))


def _apply_r2_add(code: GaussCode, move: Move) -> GaussCode:
    i, j = move.site
    seq = list(code.passages)
    if not 0 <= i <= j <= len(seq):
        raise InvalidSite(f"insertion positions {move.site} out of range")
    variant, sign, over_first = move.params
    base = max((p.crossing for p in seq), default=0)
    c, d = base + 1, base + 2
    if code.is_flat:
        b1 = [Passage(c, FLAT, sign), Passage(d, FLAT, -sign)]
        if variant == MATCHED:
            b2 = [Passage(d, FLAT, -sign), Passage(c, FLAT, sign)]
        else:
            b2 = [Passage(c, FLAT, sign), Passage(d, FLAT, -sign)]
    else:
        b1 = [Passage(c, OVER, sign), Passage(d, OVER, -sign)]
        if variant == MATCHED:
            b2 = [Passage(d, UNDER, -sign), Passage(c, UNDER, sign)]
        else:
            b2 = [Passage(c, UNDER, sign), Passage(d, UNDER, -sign)]
        if not over_first:
            b1, b2 = b2, b1
    return GaussCode.make(seq[:i] + b1 + seq[i:j] + b2 + seq[j:], code.shape)


def _r2_remove_sites(code: GaussCode) -> Iterator[tuple[int, int]]:
    pairs = _adjacent(code)
    pas = code.passages
    for (a, b), (x, y) in combinations(pairs, 2):
        if len({a, b, x, y}) != 4:
            continue
        cs1 = {pas[a].crossing, pas[b].crossing}
        cs2 = {pas[x].crossing, pas[y].crossing}
        if len(cs1) != 2 or cs1 != cs2:
            continue
        c, d = sorted(cs1)
        if code.is_flat:
            if _flat_r2_removable(code, (a, b), (x, y), c, d):
                yield (a, x)
        else:
            k1 = {pas[a].kind, pas[b].kind}
            k2 = {pas[x].kind, pas[y].kind}
            if k1 == {OVER} and k2 == {UNDER} or k1 == {UNDER} and k2 == {OVER}:
                if code.sign(c) == -code.sign(d):
                    yield (a, x)


def _flat_r2_removable(code, pair1, pair2, c, d) -> bool:
    """A flat bigon cancels when some classical lift of it is an R2 pair.

    Solving the lift-existence equations leaves one condition relating the
    two chiralities to the linear order of each crossing's occurrences.
    """

    def sigma(crossing: int) -> int:
        in1 = [i for i in pair1 if code.passages[i].crossing == crossing][0]
        in2 = [i for i in pair2 if code.passages[i].crossing == crossing][0]
        return -1 if in1 < in2 else 1

    return code.sign(c) * code.sign(d) == -sigma(c) * sigma(d)


def _apply_r2_remove(code: GaussCode, move: Move) -> GaussCode:
    a, x = move.site
    pair1, pair2 = _pair_of(code, a), _pair_of(code, x)
    if (pair1[0], pair2[0]) not in set(_r2_remove_sites(code)):
        raise InvalidSite("positions do not hold a cancelling bigon")
    drop = set(pair1) | set(pair2)
    seq = [p for k, p in enumerate(code.passages) if k not in drop]
    return GaussCode.make(seq, code.shape)


# ---------------------------------------------------------------------------
# R3


def _r3_matches(code: GaussCode, triple) -> bool:
    """Check one candidate triple of adjacent pairs against the R3 model."""
    pas = code.passages
    by_pair = [tuple(pas[i].crossing for i in pr) for pr in triple]
    crossings = [c for cs in by_pair for c in cs]
    if len(set(crossings)) != 3 or any(len(set(cs)) != 2 for cs in by_pair):
        return False
    for s_idx in range(3):
        ps = triple[s_idx]
        others = [triple[k] for k in range(3) if k != s_idx]
        alpha, beta = by_pair[s_idx]
        for a_cr, b_cr in ((alpha, beta), (beta, alpha)):
            pu = next((pr for pr in others if a_cr in
                       (pas[pr[0]].crossing, pas[pr[1]].crossing)), None)
            pv = others[0] if pu is others[1] else others[1]
            if pu is None or b_cr not in (pas[pv[0]].crossing, pas[pv[1]].crossing):
                continue
            c_cr = next(c for c in set(crossings) if c not in (a_cr, b_cr))
            e1 = 1 if pas[ps[0]].crossing == a_cr else -1
            e2 = 1 if pas[pu[0]].crossing == a_cr else -1
            e3 = 1 if pas[pv[0]].crossing == c_cr else -1
            if code.is_flat:
                if _flat_r3_lift_exists(code, ps, pu, pv, a_cr, b_cr, c_cr, e1, e2, e3):
                    return True
            else:
                k1 = pas[ps[0]].kind
                if pas[ps[1]].kind != k1:
                    continue
                c_in_u = pu[0] if pas[pu[0]].crossing == c_cr else pu[1]
                tau2 = pas[c_in_u].kind == OVER
                if k1 == UNDER:
                    ra, rb = -e1 * e2, e1 * e3
                else:
                    ra, rb = e1 * e2, -e1 * e3
                rc = -e2 * e3 if tau2 else e2 * e3
                if (code.sign(a_cr), code.sign(b_cr), code.sign(c_cr)) == (ra, rb, rc):
                    return True
    return False


def _flat_r3_lift_exists(code, ps, pu, pv, a_cr, b_cr, c_cr, e1, e2, e3) -> bool:
    pas = code.passages
    c_in_u = pu[0] if pas[pu[0]].crossing == c_cr else pu[1]
    c_in_v = pv[0] if pas[pv[0]].crossing == c_cr else pv[1]
    a_in_u = pu[0] if pas[pu[0]].crossing == a_cr else pu[1]
    b_in_v = pv[0] if pas[pv[0]].crossing == b_cr else pv[1]
    for k1 in (OVER, UNDER):
        opp = UNDER if k1 == OVER else OVER
        for tau2 in (True, False):
            if k1 == UNDER:
                ra, rb = -e1 * e2, e1 * e3
            else:
                ra, rb = e1 * e2, -e1 * e3
            rc = -e2 * e3 if tau2 else e2 * e3
            kinds = {ps[0]: k1, ps[1]: k1, a_in_u: opp, b_in_v: opp,
                     c_in_u: OVER if tau2 else UNDER,
                     c_in_v: UNDER if tau2 else OVER}
            ok = True
            for cr, req in ((a_cr, ra), (b_cr, rb), (c_cr, rc)):
                pos = sorted(i for i in kinds if pas[i].crossing == cr)
                want = req if kinds[pos[0]] == UNDER else -req
                if code.sign(cr) != want:
                    ok = False
                    break
            if ok:
                return True
    return False


def _r3_moves(code: GaussCode) -> Iterator[Move]:
    pairs = _adjacent(code)
    for triple in combinations(pairs, 3):
        flat_positions = [i for pr in triple for i in pr]
        if len(set(flat_positions)) != 6:
            continue
        if _r3_matches(code, triple):
            yield Move(R3, tuple(sorted(pr[0] for pr in triple)))


def _apply_r3(code: GaussCode, move: Move) -> GaussCode:
    triple = tuple(_pair_of(code, s) for s in move.site)
    if len({i for pr in triple for i in pr}) != 6 or not _r3_matches(code, triple):
        raise InvalidSite("positions do not hold a slide triangle")
    seq = list(code.passages)
    perm = {i: i for i in range(len(seq))}
    for i, j in triple:
        seq[i], seq[j] = seq[j], seq[i]
        perm[i], perm[j] = j, i
    if code.is_flat:
        # A pair across the cyclic seam can swap which occurrence of a
        # crossing comes first in the linear code; the stored chirality is
        # pinned to the first occurrence and must follow.
        involved = {code.passages[i].crossing for pr in triple for i in pr}
        for cr in involved:
            o1, o2 = (i for i, p in enumerate(code.passages) if p.crossing == cr)
            if perm[o1] > perm[o2]:
                for i in (perm[o1], perm[o2]):
                    seq[i] = Passage(cr, FLAT, -seq[i].sign)
    return GaussCode.make(seq, code.shape)


# ---------------------------------------------------------------------------
# public API


def enumerate_moves(code: GaussCode, include_adds: bool = True) -> list[Move]:
    """All moves applicable to ``code`` (Add families optional)."""
    out: list[Move] = []
    if include_adds:
        out.extend(_r1_add_moves(code))
        out.extend(_r2_add_moves(code))
    out.extend(_r1_remove_moves(code))
    out.extend(Move(R2_REMOVE, site) for site in _r2_remove_sites(code))
    out.extend(_r3_moves(code))
    return out


_APPLIERS = {
    R1_ADD: _apply_r1_add,
    R1_REMOVE: _apply_r1_remove,
    R2_ADD: _apply_r2_add,
    R2_REMOVE: _apply_r2_remove,
    R3: _apply_r3,
}


def apply(code: GaussCode, move: Move) -> GaussCode:
    """Apply one move; raises InvalidSite when the pattern does not match."""
    try:
        fn = _APPLIERS[move.kind]
    except KeyError:
        raise InvalidSite(f"unknown move kind {move.kind!r}") from None
    return fn(code, move)


def scramble_walk(
    code: GaussCode,
    steps: int,
    seed: int,
    max_crossings: int = DEFAULT_SCRAMBLE_CAP,
) -> Iterator[tuple[Move, GaussCode]]:
    """Deterministic random walk over enumerated moves, one step at a time.

    Moves are drawn by first picking an available move kind uniformly, then
    a uniform site, so small Remove families are not drowned out by the
    quadratic R2Add family.  Add moves that would push the code past
    ``max_crossings`` are never offered.  Yields (move, resulting code).
    """
    rng = random.Random(seed)
    for _ in range(steps):
        n = code.crossings
        moves = enumerate_moves(code, include_adds=False)
        if n + 1 <= max_crossings:
            moves.extend(_r1_add_moves(code))
        if n + 2 <= max_crossings:
            moves.extend(_r2_add_moves(code))
        if not moves:
            return
        by_kind: dict[str, list[Move]] = {}
        for mv in moves:
            by_kind.setdefault(mv.kind, []).append(mv)
        kind = rng.choice(sorted(by_kind))
        move = rng.choice(by_kind[kind])
        code = apply(code, move)
        yield move, code


def scramble(
    code: GaussCode,
    steps: int,
    seed: int,
    max_crossings: int = DEFAULT_SCRAMBLE_CAP,
) -> GaussCode:
    """Endpoint of the deterministic random walk of ``scramble_walk``."""
    for _, code in scramble_walk(code, steps, seed, max_crossings):
        pass
    return code
