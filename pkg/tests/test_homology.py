"""Mod-2 homology of the resolution cube and the dotted-grading refinement."""

import pytest

from conftest import random_code
from vknot import corpus
from vknot.arrow import reduce_word
from vknot.bracket import q_bracket
from vknot.errors import FlatCodeError, SizeCapExceeded
from vknot.gauss import parse
from vknot.homology import (
    arrow_complex,
    betti,
    betti_equal_up_to_shift,
    khovanov_complex,
)
from vknot.moves import R1_ADD, R3, Move, apply, enumerate_moves, scramble
from vknot.poly import Monomial, MultiPoly
from vknot.statesum import Resolver

VT = parse("closed: O1+ O2+ U1+ U2+")
TREFOIL = corpus.get("trefoil").code

SMALL_CORPUS = [
    name
    for name in corpus.names()
    if corpus.get(name).code.shape == "closed"
    and not corpus.get(name).code.is_flat
    and corpus.get(name).code.crossings <= 6
]


def test_empty_code_homology():
    cx = khovanov_complex(parse("closed:"))
    assert betti(cx) == {(0, -1): 1, (0, 1): 1}
    assert not cx.diff


def test_grading_contract():
    for name in SMALL_CORPUS:
        for cx in (
            khovanov_complex(corpus.get(name).code),
            arrow_complex(corpus.get(name).code),
        ):
            for src, targets in cx.diff.items():
                si, sj, sg = cx.gens[src]
                for t in targets:
                    ti, tj, tg = cx.gens[t]
                    assert ti == si + 1 and tj == sj
                    if cx.trigraded:
                        assert tg == sg


def test_differential_squares_to_zero():
    # _check raises DifferentialSquareError on construction otherwise;
    # re-assert directly on the stored data
    for name in SMALL_CORPUS:
        for cx in (
            khovanov_complex(corpus.get(name).code),
            arrow_complex(corpus.get(name).code),
        ):
            for src, targets in cx.diff.items():
                acc = set()
                for t in targets:
                    acc ^= set(cx.diff.get(t, ()))
                assert not acc


def _euler(cx):
    out = MultiPoly.zero()
    for i, j, _ in cx.gens:
        out = out + MultiPoly({Monomial(a=j): (-1) ** (i % 2)})
    return out


def test_euler_characteristic_is_q_bracket(rng):
    for name in SMALL_CORPUS:
        code = corpus.get(name).code
        assert _euler(khovanov_complex(code)) == q_bracket(code), name
    for _ in range(25):
        code = random_code(rng, max_crossings=5, shape="closed")
        assert _euler(khovanov_complex(code)) == q_bracket(code)


def test_trefoil_matches_literature_table():
    # Khovanov homology of the positive trefoil over GF(2), translated to
    # the unnormalized gradings used here (j_norm = j + n+ - 2n-)
    literature = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (2, 7): 1, (3, 7): 1, (3, 9): 1}
    expected = {(i, q - 3): d for (i, q), d in literature.items()}
    assert betti(khovanov_complex(TREFOIL)) == expected


def test_classical_codes_have_trivial_refinement():
    for name in corpus.CLASSICAL_NAMES:
        code = corpus.get(name).code
        ta = betti(arrow_complex(code))
        assert all(g == 0 for _, _, g in ta)
        assert {(i, j): d for (i, j, g), d in ta.items()} == betti(
            khovanov_complex(code)
        )


def test_virtual_trefoil_has_dotted_loops():
    res = Resolver(VT)
    dotted = [
        lp
        for choices in res.states()
        for lp in res.loops(choices)
        if (len(reduce_word(lp.word, cyclic=True)) // 2) % 2 == 1
    ]
    assert dotted
    cx = arrow_complex(VT)
    assert any(g != 0 for _, _, g in cx.gens)
    assert any(g != 0 for _, _, g in betti(cx))


def test_kink_shifts():
    base = betti(khovanov_complex(VT))
    pos = apply(VT, Move(R1_ADD, (0,), ("O", 1)))
    neg = apply(VT, Move(R1_ADD, (0,), ("O", -1)))
    assert betti_equal_up_to_shift(base, betti(khovanov_complex(pos))) == (
        True,
        (0, -1),
    )
    assert betti_equal_up_to_shift(base, betti(khovanov_complex(neg))) == (
        True,
        (1, 2),
    )


def test_r3_preserves_betti_exactly():
    checked = 0
    for trial in range(40):
        code = scramble(VT, 10, trial, max_crossings=7)
        base = betti(khovanov_complex(code))
        base_a = betti(arrow_complex(code))
        for move in enumerate_moves(code, include_adds=False):
            if move.kind == R3:
                moved = apply(code, move)
                assert betti(khovanov_complex(moved)) == base
                assert betti(arrow_complex(moved)) == base_a
                checked += 1
    assert checked > 0


def test_scrambles_preserve_betti_up_to_shift():
    for name in ("virtual-trefoil", "trefoil"):
        code = corpus.get(name).code
        base = betti(khovanov_complex(code))
        base_a = betti(arrow_complex(code))
        for trial in range(15):
            moved = scramble(code, 6, trial, max_crossings=6)
            eq, _ = betti_equal_up_to_shift(base, betti(khovanov_complex(moved)))
            assert eq, (name, trial)
            eq, _ = betti_equal_up_to_shift(base_a, betti(arrow_complex(moved)))
            assert eq, (name, trial)


def test_shift_equality_decision():
    t = betti(khovanov_complex(VT))
    assert betti_equal_up_to_shift(t, t) == (True, (0, 0))
    shifted = {(i + 2, j - 1): d for (i, j), d in t.items()}
    assert betti_equal_up_to_shift(t, shifted) == (True, (2, -1))
    assert betti_equal_up_to_shift(t, {(0, 0): 1}) == (False, None)
    assert betti_equal_up_to_shift({}, {}) == (True, (0, 0))


def test_vk5_arrow_tables_not_shift_equal():
    t129 = betti(arrow_complex(corpus.get("vk5-129").code))
    t267 = betti(arrow_complex(corpus.get("vk5-267").code))
    assert betti_equal_up_to_shift(t129, t267) == (False, None)


def test_errors():
    with pytest.raises(FlatCodeError):
        khovanov_complex(parse("closed: F1+ F1+"))
    with pytest.raises(FlatCodeError):
        khovanov_complex(parse("long: O1+ U1+"))
    with pytest.raises(SizeCapExceeded):
        khovanov_complex(TREFOIL, max_crossings=2)
