"""Core state-resolution engine shared by the bracket, arrow, parity and
homology computations.

A smoothing state of a Gauss code is traced on the abstract 4-valent
structure: arcs join consecutive passages; at each crossing the chosen
smoothing reconnects the four arc-ends.  The oriented smoothing joins
over-in to under-out (and under-in to over-out); the disoriented smoothing
joins the two in-ends (a sink cusp) and the two out-ends (a source cusp).
For a positive crossing the A-choice is the oriented smoothing, for a
negative crossing the A-choice is the disoriented one.

Cusps carry a side letter L/R: the side (relative to the traversal
direction) on which the cusp opens.  The letter depends only on the
crossing sign and on whether the cusp is entered along the over or the
under strand; the source and sink cusp of one smoothing agree when entered
via the same occurrence.  This table is pinned empirically: it is the
unique non-degenerate choice (up to the global L/R relabeling) for which a
kink's cusp pair cancels and the full Reidemeister invariance suites pass.
Caveat: the letters model the planar cusp geometry only up to the adjacent
cancellation implemented by ``reduce_word``.  Individual states of some
planar-realizable diagrams can retain letter pairs that a planar isotopy
would cancel; those contributions always cancel in the assembled state
sum, so the resulting polynomials carry no spurious K variables (asserted
over large scramble suites in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FlatCodeError
from .gauss import CLOSED, FLAT, OVER, GaussCode

A_CHOICE = 0
B_CHOICE = 1


@dataclass(frozen=True)
class Loop:
    """One component of a resolved state."""

    arcs: frozenset
    word: str
    is_segment: bool = False
    node_trail: tuple = ()  # ((crossing, slot, direction), ...) for node states


def _cusp_letter(sign: int, via_over: bool) -> str:
    return "R" if via_over == (sign > 0) else "L"


class Resolver:
    """Precomputed smoothing machinery for one Gauss code.

    ``nodes`` lists crossings left unsmoothed (parity-bracket graph nodes);
    all remaining crossings are smoothed per a choice vector aligned with
    ``smooth_ids``.
    """

    def __init__(self, code: GaussCode, nodes: frozenset[int] = frozenset()):
        if any(p.kind == FLAT for p in code.passages):
            raise FlatCodeError("state sums need a virtual/classical code")
        self.code = code
        self.m = len(code.passages)
        self.closed = code.shape == CLOSED
        self.nodes = frozenset(nodes)
        occ: dict[int, list[int]] = {}
        for i, p in enumerate(code.passages):
            occ.setdefault(p.crossing, []).append(i)
        self.occ = occ
        self.sign = {c: code.passages[ps[0]].sign for c, ps in occ.items()}
        self.smooth_ids = sorted(c for c in occ if c not in self.nodes)
        self.node_ids = sorted(self.nodes)

    # -- arc helpers (arc i runs from passage i to passage i+1) ----------

    def _arc_after(self, p: int) -> int:
        return p  # tail of arc p sits at passage p

    def _arc_before(self, p: int) -> int:
        return (p - 1) % self.m if self.closed else p - 1

    def _forward_end(self, arc: int):
        """Endpoint reached travelling forward along `arc`; None = exit."""
        if self.closed:
            return ("in", (arc + 1) % self.m)
        if arc == self.m - 1:
            return None
        return ("in", arc + 1)

    # -- state tracing ---------------------------------------------------

    def loops(self, choices: tuple[int, ...]) -> list[Loop]:
        """Trace all components of the state given by ``choices``.

        ``choices[k]`` is A_CHOICE or B_CHOICE for crossing
        ``smooth_ids[k]``.
        """
        m = self.m
        if m == 0:
            return [Loop(frozenset(), "", is_segment=not self.closed)]
        passages = self.code.passages
        conn: dict[tuple, tuple] = {}
        cusp: dict[tuple, str] = {}
        node_at: dict[tuple, tuple] = {}
        for k, c in enumerate(self.smooth_ids):
            p, q = self.occ[c]
            s = self.sign[c]
            oriented = (choices[k] == A_CHOICE) == (s > 0)
            if oriented:
                conn[("in", p)] = ("out", q)
                conn[("out", q)] = ("in", p)
                conn[("in", q)] = ("out", p)
                conn[("out", p)] = ("in", q)
            else:
                conn[("in", p)] = ("in", q)
                conn[("in", q)] = ("in", p)
                conn[("out", p)] = ("out", q)
                conn[("out", q)] = ("out", p)
                for r in (p, q):
                    letter = _cusp_letter(s, passages[r].kind == OVER)
                    cusp[("in", r)] = letter
                    cusp[("out", r)] = letter
        for c in self.node_ids:
            p, q = self.occ[c]
            for slot, r in enumerate((p, q)):
                conn[("in", r)] = ("out", r)
                conn[("out", r)] = ("in", r)
                node_at[("in", r)] = (c, slot, +1)
                node_at[("out", r)] = (c, slot, -1)

        visited: set[int] = set()
        out: list[Loop] = []

        def walk(start_arc: int, start_dir: int, stop_at_exit: bool):
            arcs = set()
            letters: list[str] = []
            trail: list[tuple] = []
            arc, direction = start_arc, start_dir
            while True:
                arcs.add(arc)
                visited.add(arc)
                if direction > 0:
                    end = self._forward_end(arc)
                    if end is None:
                        return arcs, letters, trail
                else:
                    end = ("out", arc)
                partner = conn[end]
                if end in node_at:
                    trail.append(node_at[end])
                elif end in cusp and partner[0] == end[0]:
                    letters.append(cusp[end])
                if partner[0] == "out":
                    arc, direction = self._arc_after(partner[1]), +1
                else:
                    arc, direction = self._arc_before(partner[1]), -1
                if arc == start_arc and direction == start_dir:
                    return arcs, letters, trail

        if not self.closed:
            arcs, letters, trail = walk(-1, +1, True)
            out.append(
                Loop(frozenset(arcs), "".join(letters), True, tuple(trail))
            )
        for start in range(m):
            if start not in visited:
                arcs, letters, trail = walk(start, +1, False)
                out.append(Loop(frozenset(arcs), "".join(letters), False, tuple(trail)))
        return out

    def states(self):
        """All choice vectors in binary-counter order over sorted ids."""
        n = len(self.smooth_ids)
        for r in range(1 << n):
            yield tuple((r >> (n - 1 - k)) & 1 for k in range(n))
