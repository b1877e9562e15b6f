"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Run with ``pytest -s`` to see the lines as they print; without ``-s`` they
appear in the captured-output section of any failure.
"""

import functools
import random

from conftest import random_code
from vknot import corpus
from vknot.arrow import arrow_poly, flat_arrow, reduce_word, w_poly
from vknot.bracket import bracket, f_poly, q_bracket
from vknot.gauss import CLOSED, parse
from vknot.homology import (
    arrow_complex,
    betti,
    betti_equal_up_to_shift,
    khovanov_complex,
)
from vknot.moves import scramble
from vknot.parity import free_knot_invariant, normalized_parity_bracket, parity_bracket
from vknot.poly import Monomial, MultiPoly
from vknot.statesum import Resolver

A = MultiPoly.a_power

VT = corpus.get("virtual-trefoil").code
KI = corpus.get("kishino").code
KS = corpus.get("ks").code
TR = corpus.get("trefoil").code
T = corpus.get("virtualized-trefoil").code
F = corpus.get("long-flat-F").code
G = corpus.get("long-flat-G").code
L = corpus.get("long-L").code


def criterion(num, desc):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {num}: FAIL - {desc}")
                raise
            print(f"ACCEPTANCE {num}: PASS - {desc}")

        return wrapper

    return deco


def _closed_virtual_corpus():
    return [
        (name, corpus.get(name).code)
        for name in corpus.names()
        if corpus.get(name).code.shape == CLOSED
        and not corpus.get(name).code.is_flat
    ]


@criterion(1, "odd writhe goldens")
def test_acceptance_1_odd_writhe():
    assert VT.odd_writhe() == 2
    assert F.ascend().odd_writhe() == 2
    assert G.ascend().odd_writhe() == -2
    for name in corpus.CLASSICAL_NAMES:
        code = corpus.get(name).code
        assert code.odd_writhe() == 0
        assert all(code.parity(c) == "even" for c in code.crossing_ids())


@criterion(2, "bracket/Jones goldens")
def test_acceptance_2_bracket():
    unknot = corpus.get("unknot").code
    assert f_poly(unknot) == 1
    for trial in range(100):
        assert f_poly(scramble(unknot, 10, trial, max_crossings=8)) == 1
    assert bracket(parse("closed: O1+ U1+")) == -A(3)
    assert f_poly(KI) == 1
    assert f_poly(T) == 1
    for name, code in _closed_virtual_corpus() + [("long-L", L)]:
        if code.is_flat:
            continue
        for c in code.crossing_ids():
            assert f_poly(code.virtualize(c)) == f_poly(code.switch(c)), (name, c)


@criterion(3, "arrow polynomial suite")
def test_acceptance_3_arrow():
    rng = random.Random(20260825)
    for _ in range(10_000):
        code = random_code(rng, max_crossings=8)
        assert arrow_poly(code).substitute(k_default=1, lam_default=1) == bracket(
            code
        )
    assert w_poly(T) != 1
    assert w_poly(KI) != 1
    assert flat_arrow(KI.flatten()) != 1
    assert f_poly(L.close()) == 1 and w_poly(L) != 1
    # classical-corpus states are free from cusps, state by state
    def cusp_free(code):
        res = Resolver(code)
        for choices in res.states():
            for lp in res.loops(choices):
                assert reduce_word(lp.word, cyclic=not lp.is_segment) == ""

    for name in corpus.CLASSICAL_NAMES:
        cusp_free(corpus.get(name).code)
    # no K variable ever appears for classical codes: the arrow polynomial
    # of any Reidemeister-equivalent planar diagram collapses to the bracket
    base = w_poly(TR)
    assert base.k_free()
    for trial in range(1000):
        moved = w_poly(scramble(TR, 6, trial, max_crossings=8))
        assert moved.k_free() and moved == base


@criterion(4, "parity bracket goldens")
def test_acceptance_4_parity():
    ki = parity_bracket(KI)
    assert ki.text() == "(1- 2- 1+ 2+ 3- 4- 3+ 4+): 1"
    ((graph, coeff),) = ki.terms.items()
    assert graph.node_count == 4 and coeff == 1
    ks = parity_bracket(KS)
    assert ks.text() == "1: A^-1; (1- 2- 1+ 3-)(2+ 4- 3+ 4+): A"
    ks_z = parity_bracket(KS, z_mode=True)
    assert ks_z.text() == "1: A^-1; (1 2 1 3)(2 4 3 4): A"
    assert any(g.node_count == 4 for g in ks_z.graph_terms())
    ki_free = free_knot_invariant(KI.flatten())
    assert not ki_free.graph_terms() and ki_free.pure_part == 1


@criterion(5, "homology suite")
def test_acceptance_5_homology():
    for name, code in _closed_virtual_corpus():
        assert code.crossings <= 10
        kh = khovanov_complex(code)  # construction asserts d^2 = 0
        arrow_complex(code)  # and d'^2 = 0 with grading preservation
        euler = MultiPoly.zero()
        for i, j, _ in kh.gens:
            euler = euler + MultiPoly({Monomial(a=j): (-1) ** (i % 2)})
        assert euler == q_bracket(code), name
    assert betti(khovanov_complex(corpus.get("unknot").code)) == {
        (0, -1): 1,
        (0, 1): 1,
    }
    literature = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (2, 7): 1, (3, 7): 1, (3, 9): 1}
    assert betti(khovanov_complex(TR)) == {
        (i, q - 3): d for (i, q), d in literature.items()
    }


@criterion(6, "invariance property suite")
def test_acceptance_6_invariance():
    for name in corpus.names():
        code = corpus.get(name).code
        if code.is_flat:
            base = (flat_arrow(code), code.lift().odd_writhe())
            probe = lambda c: (flat_arrow(c), c.lift().odd_writhe())
        elif code.shape == CLOSED:
            base = (
                code.odd_writhe(),
                f_poly(code),
                w_poly(code),
                normalized_parity_bracket(code),
            )
            probe = lambda c: (
                c.odd_writhe(),
                f_poly(c),
                w_poly(c),
                normalized_parity_bracket(c),
            )
        else:
            base = (code.odd_writhe(), f_poly(code), w_poly(code))
            probe = lambda c: (c.odd_writhe(), f_poly(c), w_poly(c))
        for trial in range(500):
            moved = scramble(code, 8, trial, max_crossings=8)
            assert probe(moved) == base, (name, trial)
    for name, code in _closed_virtual_corpus():
        if code.crossings > 6:
            continue  # outside the homology scramble cap
        base = betti(khovanov_complex(code))
        for trial in range(100):
            moved = scramble(code, 6, trial, max_crossings=6)
            eq, _ = betti_equal_up_to_shift(base, betti(khovanov_complex(moved)))
            assert eq, (name, trial)


@criterion(7, "stretch: five-crossing pair discrimination (non-blocking)")
def test_acceptance_7_stretch():
    a = corpus.get("vk5-129").code
    b = corpus.get("vk5-267").code
    pa, pb = parity_bracket(a), parity_bracket(b)
    assert any(g.node_count == 4 for g in pa.graph_terms())
    assert any(g.node_count == 2 for g in pb.graph_terms())
    assert pa != pb
    eq, _ = betti_equal_up_to_shift(
        betti(arrow_complex(a)), betti(arrow_complex(b))
    )
    assert not eq


@criterion(8, "coverage: no in-scope claim excluded")
def test_acceptance_8_coverage():
    # every shipped module is importable and exercised by criteria 1-7;
    # nothing in scope needs beyond-desk-scale computation
    import vknot
    import vknot.arrow
    import vknot.bracket
    import vknot.cli
    import vknot.gauss
    import vknot.homology
    import vknot.moves
    import vknot.parity
    import vknot.poly

    assert len(corpus.names()) >= 12
