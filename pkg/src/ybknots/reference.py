"""Bundled reference data with independently known answers.

The biquandles, cocycles, braid words, and expected values here back the
`reproduce` commands and the regression suite: six virtual knots given
as 3-strand closed braids with their coloring counts over the 15-element
affine family, the torus and twisted-torus state-sum families over the
4-element biquandle, and the 3-element family with its three-parameter
cocycle space.
"""

from __future__ import annotations

import numpy as np

from .modalg import GroupRingElement
from .ybcore import CochainTable, FiniteYBSet, make_affine

KISHINO_WORDS = {
    "K1": "s1 v1 s1^-1 s2 s1 v1 s1^-1 s2^-1",
    "K2": "s1 v1 s1^-1 s2 s1^-1 v1 s1 s2^-1",
    "K3": "s1^-1 v1 s1 s2 s1^-1 v1 s1 s2^-1",
    "K4": "s1 s1 v1 s1^-1 s1^-1 s2 s1 s1 v1 s1^-1 s1^-1 s2^-1",
    "K5": "s1 s1 v1 s1^-1 s1^-1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
    "K6": "s1^-1 s1^-1 v1 s1 s1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
}

KNOT_NAMES = ("K1", "K2", "K3", "K4", "K5", "K6")

TABLE1_PARAMS = (15, 4, 11)
TABLE1_U_VALUES = (2, 4, 7, 8, 11, 13, 14)
TABLE1_COUNTS = {
    2: (225, 15, 75, 15, 15, 45),
    4: (15, 15, 45, 45, 15, 75),
    7: (75, 15, 225, 45, 15, 15),
    8: (45, 15, 15, 75, 15, 225),
    11: (45, 15, 15, 75, 15, 45),
    13: (15, 15, 45, 225, 15, 75),
    14: (45, 15, 15, 15, 15, 225),
}

BORROMEAN_WORD = "s1^-1 s2 s1^-1 s2 s1^-1 s2"


def z4_biquandle() -> FiniteYBSet:
    """R(x, y) = (3y, x + 2y) on Z_4 with inverse (2a + b, 3a)."""
    return make_affine(4, 1, -1, -1)


def z3_biquandle() -> FiniteYBSet:
    """R(x, y) = (2y, x + 2y) on Z_3."""
    return make_affine(3, 1, 2, 2)


_Z4_COCYCLE_ENTRIES = {
    (0, 1): 1, (1, 1): 1, (1, 2): 1, (3, 3): 1,
    (0, 2): 2,
    (1, 0): 3, (2, 1): 3, (3, 0): 3, (3, 2): 3,
}


def z4_cocycle() -> CochainTable:
    """The type-I 2-cocycle mod 4 whose state sums separate the torus
    family from its mirror."""
    values = np.zeros((4, 4), dtype=np.int64)
    for (x, y), v in _Z4_COCYCLE_ENTRIES.items():
        values[x, y] = v
    return CochainTable(2, 4, 4, values)


def z3_cocycle(q1: int, q2: int, q3: int) -> CochainTable:
    """Member (q1, q2, q3) of the three-parameter family of type-I
    2-cocycles mod 3 of the 3-element biquandle."""
    values = np.zeros((3, 3), dtype=np.int64)
    values[1, 0] = q1 % 3
    values[2, 2] = q2 % 3
    values[1, 1] = q3 % 3
    values[2, 0] = -q1 % 3
    values[0, 2] = (q1 - q3) % 3
    values[0, 1] = (-q1 - q2) % 3
    return CochainTable(2, 3, 3, values)


def torus_value(n: int) -> GroupRingElement:
    """Known state sum of the closure of s1^n over the Z_4 data."""
    if n % 2 == 1:
        coeffs = (4, 0, 0, 0)
    elif n % 4 == 2:
        coeffs = (4, 0, 4, 0)
    elif n % 16 == 4:
        coeffs = (8, 0, 0, 8)
    elif n % 16 == 8:
        coeffs = (8, 0, 8, 0)
    elif n % 16 == 12:
        coeffs = (8, 8, 0, 0)
    else:
        coeffs = (16, 0, 0, 0)
    return GroupRingElement(4, coeffs)


def twisted_torus_value(n: int) -> GroupRingElement:
    """Known state sum of the closure of (s1 v1)^n over the Z_4 data."""
    if n % 8 == 0:
        coeffs = (16, 0, 0, 0)
    elif n % 8 == 4:
        coeffs = (12, 0, 4, 0)
    elif n % 4 == 1:
        coeffs = (3, 1, 1, 3)
    elif n % 4 == 2:
        coeffs = (6, 2, 6, 2)
    else:
        coeffs = (3, 3, 1, 1)
    return GroupRingElement(4, coeffs)


def z3_family_value(n: int) -> GroupRingElement:
    """Known state sum of the closure of s1^n v1 over the Z_3 data with
    cocycle parameters (1, 0, 0)."""
    if n % 3 == 0:
        return GroupRingElement(3, (3, 0, 0))
    return GroupRingElement(3, (1, 1, 1))


BORROMEAN_VALUE = GroupRingElement(4, (16, 0, 48, 0))

MIRROR_TORUS_4_VALUE = GroupRingElement(4, (8, 8, 0, 0))


def word_corpus() -> list[tuple[str, str]]:
    """Twenty (name, braid text) pairs: the six reference knots, the torus
    family, the twisted-torus family, the Z_3 family, the Borromean
    rings, a braid-relation word, and the empty word."""
    corpus = [(name, KISHINO_WORDS[name]) for name in KNOT_NAMES]
    for n in range(1, 7):
        corpus.append((f"torus{n}", " ".join(["s1"] * n)))
    for n in (1, 2):
        corpus.append((f"twisted{n}", " ".join(["s1 v1"] * n)))
    for n in range(0, 3):
        corpus.append((f"family{n}", (" ".join(["s1"] * n) + " v1").strip()))
    corpus.append(("borromean", BORROMEAN_WORD))
    corpus.append(("relation", "s1 s2 s1"))
    corpus.append(("unknot", ""))
    return corpus
