"""Virtual links as closed braids: parsing, colorings, state sums.

A braid word on k strands acts on color tuples in X^k: a positive
crossing s_i maps the pair at positions (i, i+1) through R, a negative
crossing through the inverse map, and a virtual crossing v_i transposes
the positions.  Colorings of the closure are the fixed tuples of that
action; the cocycle state sum weights each coloring by the crossings it
passes through and collects the total in the group ring Z[Z_m].
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import ArityMismatch, BraidSyntaxError, IndexOutOfRange, ModulusMismatch
from .modalg import GroupRingElement
from .ybcore import CochainTable, FiniteYBSet

POSITIVE = "positive"
NEGATIVE = "negative"
VIRTUAL = "virtual"
_KINDS = (POSITIVE, NEGATIVE, VIRTUAL)


@dataclass(frozen=True, slots=True)
class BraidGenerator:
    """One letter of a braid word: s_i, s_i^-1, or v_i (1-based index)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("generator index is 1-based")

    def inverse(self) -> "BraidGenerator":
        if self.kind == POSITIVE:
            return BraidGenerator(NEGATIVE, self.index)
        if self.kind == NEGATIVE:
            return BraidGenerator(POSITIVE, self.index)
        return self

    def token(self) -> str:
        if self.kind == POSITIVE:
            return f"s{self.index}"
        if self.kind == NEGATIVE:
            return f"s{self.index}^-1"
        return f"v{self.index}"


@dataclass(frozen=True)
class BraidWord:
    """A strand count and a generator sequence; indices stay below the
    strand count so every generator has two strands to act on."""

    strands: int
    generators: tuple[BraidGenerator, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("need at least one strand")
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.index >= self.strands:
                raise IndexOutOfRange(
                    f"generator {g.token()} needs {g.index + 1} strands, "
                    f"word has {self.strands}")

    def __len__(self) -> int:
        return len(self.generators)

    def text(self) -> str:
        return " ".join(g.token() for g in self.generators)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.text()!r})"


_TOKEN = re.compile(r"([sv])(\d+)(?:\^(-?\d+))?\Z")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated tokens ('s'|'v') INDEX ('^' EXPONENT)?.

    `s1^-1` is the inverse crossing and `s1^3` expands to three copies;
    virtual crossings are self-inverse, so an exponent on `v` means
    |exponent| copies.  The strand count defaults to one more than the
    largest index used.
    """
    generators: list[BraidGenerator] = []
    max_index = 0
    for match in re.finditer(r"\S+", text):
        token = match.group()
        parsed = _TOKEN.match(token)
        if parsed is None:
            raise BraidSyntaxError(f"bad token {token!r}", match.start())
        kind_char, index_text, exp_text = parsed.groups()
        index = int(index_text)
        if index < 1:
            raise BraidSyntaxError(
                f"index must be at least 1 in {token!r}", match.start())
        exponent = 1 if exp_text is None else int(exp_text)
        max_index = max(max_index, index)
        if kind_char == "v":
            generators.extend([BraidGenerator(VIRTUAL, index)] * abs(exponent))
        elif exponent >= 0:
            generators.extend([BraidGenerator(POSITIVE, index)] * exponent)
        else:
            generators.extend([BraidGenerator(NEGATIVE, index)] * -exponent)
    needed = max_index + 1 if max_index else 1
    if strands is None:
        strands = needed
    elif strands < needed:
        raise IndexOutOfRange(
            f"word uses index {max_index}, needs {needed} strands, "
            f"got {strands}")
    return BraidWord(strands, tuple(generators))


def _needs_inverse(word: BraidWord) -> bool:
    return any(g.kind == NEGATIVE for g in word.generators)


def apply_word(X: FiniteYBSet, word: BraidWord, colors) -> tuple[int, ...]:
    """Image of one strand coloring under the braid action, left to right."""
    if len(colors) != word.strands:
        raise ArityMismatch(
            f"{word.strands} strands but {len(colors)} colors")
    current = [int(c) for c in colors]
    r1, r2 = X.r1, X.r2
    if _needs_inverse(word):
        rbar1, rbar2 = X.rbar1, X.rbar2
    for g in word.generators:
        i = g.index - 1
        x, y = current[i], current[i + 1]
        if g.kind == POSITIVE:
            current[i], current[i + 1] = int(r1[x, y]), int(r2[x, y])
        elif g.kind == NEGATIVE:
            current[i], current[i + 1] = int(rbar1[x, y]), int(rbar2[x, y])
        else:
            current[i], current[i + 1] = y, x
    return tuple(current)


def _all_tuples(size: int, k: int) -> np.ndarray:
    """X^k as rows in lexicographic order, first coordinate most
    significant."""
    count = size ** k
    index = np.arange(count, dtype=np.int64)
    columns = [(index // size ** (k - 1 - pos)) % size for pos in range(k)]
    if not columns:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def _trace_word(X: FiniteYBSet, word: BraidWord, psi_array, modulus):
    """Run every tuple through the word at once; returns (start, end,
    accumulated weights or None)."""
    start = _all_tuples(X.size, word.strands)
    current = start.copy()
    weights = None if psi_array is None else np.zeros(len(start),
                                                     dtype=np.int64)
    r1, r2 = X.r1, X.r2
    if _needs_inverse(word):
        rbar1, rbar2 = X.rbar1, X.rbar2
    for g in word.generators:
        i = g.index - 1
        a = current[:, i]
        b = current[:, i + 1]
        if g.kind == POSITIVE:
            if weights is not None:
                weights = (weights + psi_array[a, b]) % modulus
            na, nb = r1[a, b], r2[a, b]
            current[:, i] = na
            current[:, i + 1] = nb
        elif g.kind == NEGATIVE:
            na, nb = rbar1[a, b], rbar2[a, b]
            if weights is not None:
                weights = (weights - psi_array[na, nb]) % modulus
            current[:, i] = na
            current[:, i + 1] = nb
        else:
            current[:, [i, i + 1]] = current[:, [i + 1, i]]
    return start, current, weights


@dataclass(frozen=True)
class ColoringSet:
    """All tuples fixed by a braid word's action, lexicographically
    sorted."""

    word: BraidWord
    tuples: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.tuples)


def colorings(X: FiniteYBSet, word: BraidWord) -> ColoringSet:
    """Colorings of the closed braid: tuples with apply_word(t) == t."""
    start, end, _ = _trace_word(X, word, None, None)
    fixed = (end == start).all(axis=1)
    found = tuple(tuple(int(v) for v in row) for row in start[fixed])
    return ColoringSet(word, found)


def count_colorings(X: FiniteYBSet, word: BraidWord) -> int:
    start, end, _ = _trace_word(X, word, None, None)
    return int((end == start).all(axis=1).sum())


@dataclass(frozen=True)
class InvariantValue:
    """State-sum value in Z[Z_m]; the coefficient sum is the number of
    colorings."""

    value: GroupRingElement

    @property
    def colorings(self) -> int:
        return self.value.coefficient_sum()

    def render(self) -> str:
        return self.value.render()

    def to_json(self) -> dict:
        return {"colorings": self.colorings, "value": self.value.to_json()}


def state_sum(X: FiniteYBSet, psi: CochainTable, word: BraidWord) -> InvariantValue:
    """Cocycle state sum of the closed braid.

    Each coloring accumulates weights crossing by crossing: a positive
    crossing with incoming pair (x, y) adds psi(x, y) and maps the pair
    through R; a negative crossing pulls the incoming pair back to
    (x', y') = Rbar(x, y), subtracts psi(x', y'), and the pair becomes
    (x', y'); virtual crossings only transpose.  The coloring contributes
    xi^total and the sum over colorings lands in Z[Z_m].

    This assignment of weights to crossings is pinned by the bundled
    reference values: weighting the R-image pair at positive crossings
    breaks the Borromean value, skipping the Rbar pullback at negative
    crossings breaks it too, and flipping the overall sign swaps the
    torus closure with its mirror.
    """
    if psi.arity != 2:
        raise ArityMismatch(f"state sum needs a 2-cochain, got arity {psi.arity}")
    if psi.set_size != X.size:
        raise ModulusMismatch(
            f"cochain set size {psi.set_size} does not match |X| = {X.size}")
    m = psi.modulus
    start, end, weights = _trace_word(X, word, psi.as_array(), m)
    fixed = (end == start).all(axis=1)
    coefficients = np.bincount(weights[fixed] % m, minlength=m)
    return InvariantValue(GroupRingElement(m, [int(c) for c in coefficients]))


def _splice(word: BraidWord, at: int, drop: int, pieces) -> BraidWord:
    gens = word.generators[:at] + tuple(pieces) + word.generators[at + drop:]
    return BraidWord(word.strands, gens)


def equivalent_words(word: BraidWord) -> list[BraidWord]:
    """Single applications of closure-preserving moves, deterministically
    ordered: far commutation, the braid relation, virtual involution,
    the virtual braid relation, the mixed relation, cancellation and
    insertion of s_i s_i^-1, cyclic rotation, conjugation by one
    generator, and stabilization to one more strand.

    This is a bounded test corpus around the word, not an equivalence
    class search.  Conjugation stays inside the word's own strand count;
    widening the braid group first would add a split unknot component to
    the closure until a destabilization removes it.
    """
    gens = word.generators
    length = len(gens)
    out: list[BraidWord] = []

    for p in range(length - 1):
        g, h = gens[p], gens[p + 1]
        if abs(g.index - h.index) >= 2:
            out.append(_splice(word, p, 2, (h, g)))

    sigma = (POSITIVE, NEGATIVE)
    for p in range(length - 2):
        g, h, f = gens[p], gens[p + 1], gens[p + 2]
        same_kind = g.kind == h.kind == f.kind
        braid_shape = (g.index == f.index and abs(g.index - h.index) == 1)
        if same_kind and braid_shape:
            swapped = (BraidGenerator(g.kind, h.index),
                       BraidGenerator(g.kind, g.index),
                       BraidGenerator(g.kind, h.index))
            out.append(_splice(word, p, 3, swapped))

    for p in range(length - 1):
        g, h = gens[p], gens[p + 1]
        if g.kind == VIRTUAL and h.kind == VIRTUAL and g.index == h.index:
            out.append(_splice(word, p, 2, ()))

    for p in range(length - 2):
        g, h, f = gens[p], gens[p + 1], gens[p + 2]
        if (g.kind in sigma and h.kind == VIRTUAL and f.kind == VIRTUAL
                and h.index == g.index + 1 and f.index == g.index):
            out.append(_splice(word, p, 3, (
                BraidGenerator(VIRTUAL, g.index + 1),
                BraidGenerator(VIRTUAL, g.index),
                BraidGenerator(g.kind, g.index + 1))))
        if (g.kind == VIRTUAL and h.kind == VIRTUAL and f.kind in sigma
                and g.index == h.index + 1 and f.index == g.index):
            out.append(_splice(word, p, 3, (
                BraidGenerator(f.kind, h.index),
                BraidGenerator(VIRTUAL, h.index + 1),
                BraidGenerator(VIRTUAL, h.index))))

    for p in range(length - 1):
        g, h = gens[p], gens[p + 1]
        if (g.kind in sigma and h.kind in sigma and g.index == h.index
                and g.kind != h.kind):
            out.append(_splice(word, p, 2, ()))

    for at in range(length + 1):
        for index in range(1, word.strands):
            pos = BraidGenerator(POSITIVE, index)
            neg = BraidGenerator(NEGATIVE, index)
            out.append(_splice(word, at, 0, (pos, neg)))
            out.append(_splice(word, at, 0, (neg, pos)))

    if length >= 2:
        out.append(BraidWord(word.strands, gens[1:] + gens[:1]))
        out.append(BraidWord(word.strands, gens[-1:] + gens[:-1]))

    for index in range(1, word.strands):
        for kind in (POSITIVE, NEGATIVE, VIRTUAL):
            g = BraidGenerator(kind, index)
            out.append(BraidWord(word.strands,
                                 (g,) + gens + (g.inverse(),)))

    for kind in (POSITIVE, NEGATIVE):
        out.append(BraidWord(word.strands + 1,
                             gens + (BraidGenerator(kind, word.strands),)))

    unique: list[BraidWord] = []
    seen = {(word.strands, gens)}
    for candidate in out:
        key = (candidate.strands, candidate.generators)
        if key not in seen:
            seen.add(key)
            unique.append(candidate)
    return unique
