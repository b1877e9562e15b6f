"""Mod-2 Khovanov-style homology of virtual codes and the dotted-grading
refinement.

Generators are enhanced states: a resolution (A/B per crossing) with a
1/X label per state loop.  Gradings: i = number of B-smoothings,
j = i + (#1-loops - #X-loops); the refinement adds g = #(dotted X) -
#(dotted 1), a loop being dotted when its reduced cusp word has odd
half-length.  The differential re-smooths one A-site at a time with the
usual merge/split Frobenius rules over GF(2); a re-smoothing that maps one
loop to one loop (a purely virtual phenomenon) contributes the zero map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrow import reduce_word
from .errors import DifferentialSquareError, FlatCodeError, SizeCapExceeded
from .gauss import CLOSED, GaussCode
from .statesum import B_CHOICE, Resolver

DEFAULT_MAX_HOMOLOGY_CROSSINGS = 14

LABEL_ONE = 0
LABEL_X = 1


@dataclass
class ChainComplex:
    """Enhanced-state complex with a mod-2 differential.

    ``gens[k]`` is the grading triple (i, j, g) of generator k; ``diff``
    maps k to the (mod-2 reduced, sorted) indices of its image.  For the
    plain theory ``trigraded`` is False and g is carried but unused.
    """

    gens: list[tuple[int, int, int]]
    diff: dict[int, tuple[int, ...]]
    trigraded: bool

    def stratum(self, gen: int):
        i, j, g = self.gens[gen]
        return (j, g) if self.trigraded else (j,)


def _loop_key(loop) -> int:
    return min(loop.arcs) if loop.arcs else -1


def _is_dotted(loop) -> bool:
    return (len(reduce_word(loop.word, cyclic=True)) // 2) % 2 == 1


def _build(code: GaussCode, max_crossings: int, g_preserving: bool) -> ChainComplex:
    if code.is_flat:
        raise FlatCodeError("homology needs a virtual/classical code")
    if code.shape != CLOSED:
        raise FlatCodeError("homology is defined for closed codes")
    if code.crossings > max_crossings:
        raise SizeCapExceeded(
            f"{code.crossings} crossings exceeds the homology cap of {max_crossings}"
        )
    res = Resolver(code)
    n = len(res.smooth_ids)

    resolutions = []  # per r: ordered loops
    for choices in res.states():
        loops = sorted(res.loops(choices), key=_loop_key)
        resolutions.append(loops)

    gens: list[tuple[int, int, int]] = []
    index: dict[tuple[int, tuple[int, ...]], int] = {}
    by_res: list[list[tuple[tuple[int, ...], int]]] = []
    for r, loops in enumerate(resolutions):
        i = bin(r).count("1")
        dotted = [_is_dotted(lp) for lp in loops]
        here = []
        for lab in range(1 << len(loops)):
            labels = tuple((lab >> (len(loops) - 1 - k)) & 1 for k in range(len(loops)))
            lam = sum(1 for v in labels if v == LABEL_ONE) - sum(
                1 for v in labels if v == LABEL_X
            )
            g = sum(1 for k, v in enumerate(labels) if dotted[k] and v == LABEL_X) - sum(
                1 for k, v in enumerate(labels) if dotted[k] and v == LABEL_ONE
            )
            idx = len(gens)
            gens.append((i, i + lam, g))
            index[(r, labels)] = idx
            here.append((labels, idx))
        by_res.append(here)

    diff: dict[int, tuple[int, ...]] = {}
    for r, loops in enumerate(resolutions):
        keys = [frozenset(lp.arcs) for lp in loops]
        for site in range(n):
            bit = 1 << (n - 1 - site)
            if r & bit:
                continue
            r2 = r | bit
            loops2 = resolutions[r2]
            keys2 = [frozenset(lp.arcs) for lp in loops2]
            common = set(keys) & set(keys2)
            src_touch = [k for k, key in enumerate(keys) if key not in common]
            dst_touch = [k for k, key in enumerate(keys2) if key not in common]
            persist = {
                k: keys2.index(key) for k, key in enumerate(keys) if key in common
            }
            kind = (len(src_touch), len(dst_touch))
            for labels, idx in by_res[r]:
                images: list[tuple[int, ...]] = []
                if kind == (2, 1):
                    a, b = (labels[src_touch[0]], labels[src_touch[1]])
                    if a == LABEL_X and b == LABEL_X:
                        merged = None
                    else:
                        merged = LABEL_X if LABEL_X in (a, b) else LABEL_ONE
                    if merged is not None:
                        images.append(
                            _image_labels(labels, persist, {dst_touch[0]: merged}, len(loops2))
                        )
                elif kind == (1, 2):
                    a = labels[src_touch[0]]
                    if a == LABEL_ONE:
                        images.append(
                            _image_labels(labels, persist,
                                          {dst_touch[0]: LABEL_ONE, dst_touch[1]: LABEL_X},
                                          len(loops2))
                        )
                        images.append(
                            _image_labels(labels, persist,
                                          {dst_touch[0]: LABEL_X, dst_touch[1]: LABEL_ONE},
                                          len(loops2))
                        )
                    else:
                        images.append(
                            _image_labels(labels, persist,
                                          {dst_touch[0]: LABEL_X, dst_touch[1]: LABEL_X},
                                          len(loops2))
                        )
                # (1, 1): zero partial differential

                for img in images:
                    tgt = index[(r2, img)]
                    if g_preserving and gens[tgt][2] != gens[idx][2]:
                        continue
                    cur = diff.setdefault(idx, ())
                    if tgt in cur:  # mod 2 cancellation
                        diff[idx] = tuple(t for t in cur if t != tgt)
                    else:
                        diff[idx] = tuple(sorted(cur + (tgt,)))

    cx = ChainComplex(gens, {k: v for k, v in diff.items() if v}, g_preserving)
    _check(cx, code)
    return cx


def _image_labels(labels, persist, assigned, size) -> tuple[int, ...]:
    out = list(assigned.items())
    for src, dst in persist.items():
        out.append((dst, labels[src]))
    arranged = [LABEL_ONE] * size
    for dst, v in out:
        arranged[dst] = v
    return tuple(arranged)


def _check(cx: ChainComplex, code: GaussCode) -> None:
    for src, targets in cx.diff.items():
        si, sj, sg = cx.gens[src]
        for t in targets:
            ti, tj, tg = cx.gens[t]
            if ti != si + 1 or tj != sj or (cx.trigraded and tg != sg):
                raise DifferentialSquareError(
                    f"grading violation in differential of {code.serialize()}"
                )
    for src, targets in cx.diff.items():
        acc: set[int] = set()
        for t in targets:
            acc ^= set(cx.diff.get(t, ()))
        if acc:
            raise DifferentialSquareError(
                f"differential does not square to zero on {code.serialize()}"
            )


def khovanov_complex(
    code: GaussCode, max_crossings: int = DEFAULT_MAX_HOMOLOGY_CROSSINGS
) -> ChainComplex:
    """Mod-2 Khovanov complex (bigraded by i and j)."""
    return _build(code, max_crossings, g_preserving=False)


def arrow_complex(
    code: GaussCode, max_crossings: int = DEFAULT_MAX_HOMOLOGY_CROSSINGS
) -> ChainComplex:
    """Trigraded complex with the g-preserving differential."""
    return _build(code, max_crossings, g_preserving=True)


def betti(cx: ChainComplex) -> dict[tuple, int]:
    """Betti table over GF(2): {(i, j[, g]): dim}, zero entries omitted."""
    strata: dict[tuple, dict[int, list[int]]] = {}
    for idx, (i, j, g) in enumerate(cx.gens):
        key = (j, g) if cx.trigraded else (j,)
        strata.setdefault(key, {}).setdefault(i, []).append(idx)
    table: dict[tuple, int] = {}
    for key, by_i in strata.items():
        ranks: dict[int, int] = {}
        for i, basis in by_i.items():
            target = by_i.get(i + 1, [])
            pos = {idx: k for k, idx in enumerate(target)}
            rows = []
            for idx in basis:
                row = 0
                for t in cx.diff.get(idx, ()):
                    row |= 1 << pos[t]
                rows.append(row)
            ranks[i] = _gf2_rank(rows)
        for i, basis in by_i.items():
            dim = len(basis) - ranks.get(i, 0) - ranks.get(i - 1, 0)
            if dim:
                table[(i,) + key] = dim
    return table


def _gf2_rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> vector
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                break
    return len(basis)


def betti_equal_up_to_shift(t1: dict, t2: dict):
    """Is t2 a single (di, dj) translate of t1 (g compared unshifted)?

    Returns (True, (di, dj)) or (False, None).
    """
    if len(t1) != len(t2):
        return False, None
    if not t1:
        return True, (0, 0)
    a = min(t1)
    for b in t2:
        if len(a) != len(b) or (len(a) == 3 and a[2] != b[2]):
            continue
        di, dj = b[0] - a[0], b[1] - a[1]
        shifted = {(k[0] + di, k[1] + dj) + k[2:]: v for k, v in t1.items()}
        if shifted == t2:
            return True, (di, dj)
    return False, None
