"""Bundled example diagrams used by the test suite and the CLI.

Each entry records where its Gauss code comes from: ``paper-stated`` means
the code is an explicitly published Gauss sequence; ``derived-from-figure``
means it was read off a published picture (or reconstructed by search to
match the published properties) and then validated against those
properties before being frozen here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import GaussCode, parse

PAPER_STATED = "paper-stated"
DERIVED = "derived-from-figure"


@dataclass(frozen=True)
class Entry:
    """A named corpus diagram with provenance metadata."""

    name: str
    code: GaussCode
    provenance: str
    note: str


def _entry(name: str, text: str, provenance: str, note: str) -> Entry:
    return Entry(name, parse(text), provenance, note)


def twist_closure(n: int) -> GaussCode:
    """Closed alternating 2-braid with n positive crossings (torus T(2,n))."""
    if n < 1:
        raise ValueError("need at least one crossing")
    toks = []
    for half in range(2):
        for i in range(1, n + 1):
            over = (i % 2 == 1) == (half == 0)
            toks.append(("O" if over else "U") + str(i) + "+")
    return parse("closed: " + " ".join(toks))


def virtualized_twist_closure(n: int) -> GaussCode:
    """twist_closure(n) with its first crossing virtualized."""
    return twist_closure(n).virtualize(1)


_RAW: tuple[tuple[str, str, str, str], ...] = (
    (
        "unknot",
        "closed:",
        PAPER_STATED,
        "crossingless closed diagram; all invariants take their trivial values",
    ),
    (
        "trefoil",
        "closed: O1+ U2+ O3+ U1+ O2+ U3+",
        DERIVED,
        "classical positive trefoil as the closed alternating 2-braid",
    ),
    (
        "figure-eight",
        "closed: O1+ U2+ O3- U4- O2+ U1+ O4- U3-",
        DERIVED,
        "classical figure-eight knot; Jones polynomial t^2 - t + 1 - 1/t + 1/t^2",
    ),
    (
        "virtual-trefoil",
        "closed: O1+ O2+ U1+ U2+",
        DERIVED,
        "two-crossing virtual knot with odd writhe 2",
    ),
    (
        "long-flat-F",
        "long: F1+ F2+ F1+ F2+",
        PAPER_STATED,
        "long flat diagram with interleaved chords; ascent has odd writhe 2",
    ),
    (
        "long-flat-G",
        "long: F1- F2- F1- F2-",
        DERIVED,
        "reflection of long-flat-F; ascent has odd writhe -2",
    ),
    (
        "long-L",
        "long: O1+ U2- U1+ O2-",
        DERIVED,
        "long virtual knot with trivial closure but segment-variable arrow terms",
    ),
    (
        "long-L-prime",
        "long: O1+ U2- O3+ U1+ O2- U3+",
        DERIVED,
        "second long virtual knot with trivial closure; arrow value differs "
        "from long-L",
    ),
    (
        "kishino",
        "closed: O1+ U2- U1+ O2- O3+ U4- U3+ O4-",
        DERIVED,
        "unit-Jones four-crossing virtual knot, all crossings odd; parity "
        "bracket is a single irreducible 4-node graph",
    ),
    (
        "ks",
        "closed: O1+ O2+ U1+ O3+ O4+ U2+ O5- U3+ U5- U4+",
        DERIVED,
        "five-crossing virtual knot whose parity bracket has a pure-loop term "
        "plus a 4-node graph irreducible even with free-mode reduction",
    ),
    (
        "virtualized-trefoil",
        "closed: O1- U2+ O3+ U1- O2+ U3+",
        DERIVED,
        "trefoil with one crossing virtualized; unit Jones polynomial",
    ),
    (
        "vk5-129",
        "closed: O1+ U1+ O2+ O3+ U2+ U3+ O4+ O5+ U4+ U5+",
        DERIVED,
        "five-crossing stand-in with four odd crossings; parity bracket "
        "contains an irreducible 4-node graph",
    ),
    (
        "vk5-267",
        "closed: O1+ U1+ O2+ U2+ O3+ O4+ U3+ O5- U4+ U5-",
        DERIVED,
        "five-crossing stand-in with two odd crossings; parity bracket "
        "contains an irreducible 2-node graph",
    ),
    (
        "virtualized-t2-5",
        "closed: O1- U2+ O3+ U4+ O5+ U1- O2+ U3+ O4+ U5+",
        DERIVED,
        "closed 5-twist 2-braid with one crossing virtualized; arrow "
        "polynomial carries K-variable terms",
    ),
    (
        "virtualized-t2-7",
        "closed: O1- U2+ O3+ U4+ O5+ U6+ O7+ U1- O2+ U3+ O4+ U5+ O6+ U7+",
        DERIVED,
        "closed 7-twist 2-braid with one crossing virtualized; arrow "
        "polynomial carries K-variable terms",
    ),
)

ENTRIES: dict[str, Entry] = {
    name: _entry(name, text, prov, note) for name, text, prov, note in _RAW
}

CLASSICAL_NAMES = ("unknot", "trefoil", "figure-eight")


def names() -> list[str]:
    return list(ENTRIES)


def get(name: str) -> Entry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry: {name}") from None
