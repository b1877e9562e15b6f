"""Shared helpers: random diagram generators and corpus shortcuts."""

from __future__ import annotations

import random

import pytest

from vknot import corpus
from vknot.gauss import CLOSED, FLAT, LONG, GaussCode, Passage


def random_code(
    rng: random.Random,
    max_crossings: int = 8,
    shape: str | None = None,
    flat: bool = False,
    min_crossings: int = 0,
) -> GaussCode:
    """Uniform random Gauss code: random chord pairing, kinds and signs."""
    n = rng.randint(min_crossings, max_crossings)
    pos = list(range(2 * n))
    rng.shuffle(pos)
    seq: list = [None] * (2 * n)
    for ci in range(n):
        a, b = pos[2 * ci], pos[2 * ci + 1]
        s = rng.choice([1, -1])
        if flat:
            seq[a] = Passage(ci + 1, FLAT, s)
            seq[b] = Passage(ci + 1, FLAT, s)
        else:
            k1, k2 = ("O", "U") if rng.random() < 0.5 else ("U", "O")
            seq[a] = Passage(ci + 1, k1, s)
            seq[b] = Passage(ci + 1, k2, s)
    if shape is None:
        shape = CLOSED if rng.random() < 0.7 else LONG
    return GaussCode.make(seq, shape)


def corpus_codes():
    return [(name, corpus.get(name).code) for name in corpus.names()]


@pytest.fixture
def rng():
    return random.Random(20260825)
