"""Cubical homology of a Yang-Baxter set.

An n-tuple of colors placed on the initial path of the n-cube propagates
to every edge: each square face relates its two input edges (x on the
earlier direction, y on the later one) to its output edges through
(R1(x, y), R2(x, y)).  The boundary of the colored cube is the signed sum
of its 2n facets, each read along its own initial path; dualizing gives
the coboundary on Z_m-valued cochains, cocycle spaces, cohomology groups,
and the obstruction cocycle measuring the failure of a mod-p cocycle to
lift to Z_{p^2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .errors import (
    ArityMismatch,
    ColoringIncomplete,
    ColoringInconsistent,
    NotACocycle,
    NotDivisible,
    ResourceBound,
)
from .modalg import IntegerMatrix, kernel_mod, quotient_invariant_factors, solve_mod
from .ybcore import CochainTable, FiniteYBSet

DEFAULT_MAX_CELLS = 200000


@dataclass(frozen=True, slots=True)
class CubeEdge:
    """Edge of the n-cube along `direction` (1-based); `corner` holds the
    fixed coordinates as bits (bit i-1 for direction i, own bit zeroed)."""

    direction: int
    corner: int

    def __post_init__(self):
        if self.direction < 1:
            raise ValueError("direction is 1-based")
        object.__setattr__(self, "corner",
                           self.corner & ~(1 << (self.direction - 1)))


@dataclass(frozen=True, slots=True)
class CubeColoring:
    """Total assignment of colors to the n * 2^(n-1) edges of the n-cube."""

    dimension: int
    colors: dict

    def color(self, direction: int, corner: int) -> int:
        return self.colors[CubeEdge(direction, corner)]

    def initial_path(self) -> tuple[int, ...]:
        return tuple(self.color(i, (1 << (i - 1)) - 1)
                     for i in range(1, self.dimension + 1))


@lru_cache(maxsize=None)
def _faces(n: int):
    """All (i, j, base) with i < j and base ranging over the other n-2
    coordinate bits: the square faces of the n-cube."""
    faces = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            free = [b for b in range(n) if b not in (i - 1, j - 1)]
            for bits in range(1 << (n - 2)) if n >= 2 else []:
                base = 0
                for pos, b in enumerate(free):
                    if (bits >> pos) & 1:
                        base |= 1 << b
                faces.append((i, j, base))
    return tuple(faces)


def color_cube(X: FiniteYBSet, initial) -> CubeColoring:
    """Propagate the initial-path colors over the whole n-cube.

    The edge in direction i on the initial path (earlier coordinates 1,
    later ones 0) gets initial[i-1].  On the face (i, j, base) the input
    edges are (i, base) and (j, base + 2^(i-1)) and the outputs are
    (j, base) = R1 and (i, base + 2^(j-1)) = R2 of the input pair.
    Raises ColoringInconsistent on a conflict and ColoringIncomplete if
    the fixpoint leaves edges uncolored; neither happens when X satisfies
    the Yang-Baxter equation.
    """
    n = len(initial)
    r1, r2 = X.r1, X.r2
    colors: dict[CubeEdge, int] = {}
    for i in range(1, n + 1):
        colors[CubeEdge(i, (1 << (i - 1)) - 1)] = int(initial[i - 1])
    faces = _faces(n)
    changed = True
    while changed:
        changed = False
        for i, j, base in faces:
            cin1 = colors.get(CubeEdge(i, base))
            if cin1 is None:
                continue
            cin2 = colors.get(CubeEdge(j, base | (1 << (i - 1))))
            if cin2 is None:
                continue
            for edge, value in (
                    (CubeEdge(j, base), int(r1[cin1, cin2])),
                    (CubeEdge(i, base | (1 << (j - 1))), int(r2[cin1, cin2]))):
                have = colors.get(edge)
                if have is None:
                    colors[edge] = value
                    changed = True
                elif have != value:
                    raise ColoringInconsistent(edge)
    if len(colors) < n * (1 << (n - 1)):
        raise ColoringIncomplete(
            f"{len(colors)} of {n * (1 << (n - 1))} edges colored")
    return CubeColoring(n, colors)


def face_tuple(coloring: CubeColoring, axis: int, side: int) -> tuple[int, ...]:
    """Colors along the initial path of the facet where coordinate `axis`
    is frozen at `side`: the j-th entry is the edge in the j-th remaining
    direction, earlier remaining coordinates at 1, later ones at 0."""
    n = coloring.dimension
    if not 1 <= axis <= n:
        raise ValueError(f"axis {axis} out of range for dimension {n}")
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    remaining = [d for d in range(1, n + 1) if d != axis]
    out = []
    corner = side << (axis - 1)
    for d in remaining:
        out.append(coloring.color(d, corner))
        corner |= 1 << (d - 1)
    return tuple(out)


def _face_sign(n: int, axis: int, side: int) -> int:
    return -1 if (n - axis + side) % 2 else 1


@dataclass(frozen=True)
class FormalChain:
    """Integer combination of arity-`arity` tuples."""

    arity: int
    terms: dict

    def __add__(self, other: "FormalChain") -> "FormalChain":
        if self.arity != other.arity:
            raise ArityMismatch(
                f"chain arities differ: {self.arity} vs {other.arity}")
        merged = dict(self.terms)
        for t, c in other.terms.items():
            merged[t] = merged.get(t, 0) + c
        return FormalChain(self.arity,
                           {t: c for t, c in merged.items() if c})

    def __sub__(self, other: "FormalChain") -> "FormalChain":
        return self + FormalChain(other.arity,
                                  {t: -c for t, c in other.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalChain)
                and self.arity == other.arity and self.terms == other.terms)

    def render(self) -> str:
        """Text like '+1·(0,1) -2·(2,0)', terms in lexicographic order."""
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            c = self.terms[t]
            body = ",".join(str(x) for x in t)
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}·({body})")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"arity": self.arity,
                "terms": [{"coefficient": c, "tuple": list(t)}
                          for t, c in sorted(self.terms.items())]}


def boundary(X: FiniteYBSet, tup) -> FormalChain:
    """Signed sum of the 2n facet readings of the cube colored by `tup`;
    the facet at coordinate k, side d carries sign (-1)^(n-k+d)."""
    tup = tuple(int(x) for x in tup)
    n = len(tup)
    if n < 1:
        raise ValueError("boundary needs at least a 1-tuple")
    coloring = color_cube(X, tup)
    terms: dict = {}
    for k in range(1, n + 1):
        for side in (0, 1):
            ft = face_tuple(coloring, k, side)
            terms[ft] = terms.get(ft, 0) + _face_sign(n, k, side)
    return FormalChain(n - 1, {t: c for t, c in terms.items() if c})


def _check_cochain(X: FiniteYBSet, f: CochainTable):
    if f.set_size != X.size:
        raise ArityMismatch(
            f"cochain lives on a set of size {f.set_size}, X has {X.size}")


def coboundary(X: FiniteYBSet, f: CochainTable) -> CochainTable:
    """(delta f)(w) = sum of sign * f(facet reading) over the facets of
    the cube colored by w, as a table on X^(arity+1)."""
    _check_cochain(X, f)
    n1 = f.arity + 1
    farr = f.as_array()
    m = f.modulus
    size = X.size
    values = np.empty(size ** n1, dtype=np.int64)
    for idx, w in enumerate(np.ndindex((size,) * n1)):
        coloring = color_cube(X, w)
        total = 0
        for k in range(1, n1 + 1):
            for side in (0, 1):
                total += _face_sign(n1, k, side) * int(
                    farr[face_tuple(coloring, k, side)])
        values[idx] = total % m
    return CochainTable(n1, size, m, values)


def coboundary_matrix(X: FiniteYBSet, n: int) -> IntegerMatrix:
    """Integer matrix of delta from arity-n to arity-(n+1) cochains: rows
    indexed by X^(n+1), columns by X^n (lexicographic, first coordinate
    most significant), entry = signed multiplicity of the column tuple
    among the facet readings of the row tuple's cube."""
    if n < 0:
        raise ValueError("arity must be non-negative")
    size = X.size
    rows = size ** (n + 1)
    cols = size ** n
    entries = [[0] * cols for _ in range(rows)]
    for ridx, w in enumerate(np.ndindex((size,) * (n + 1))):
        row = entries[ridx]
        for face, coeff in boundary(X, w).terms.items():
            cidx = 0
            for x in face:
                cidx = cidx * size + x
            row[cidx] += coeff
    return IntegerMatrix._wrap(entries)


def is_cocycle(X: FiniteYBSet, f: CochainTable) -> bool:
    """True when delta f vanishes identically mod f.modulus."""
    return coboundary(X, f).is_zero()


def is_coboundary(X: FiniteYBSet, f: CochainTable):
    """A cochain g with delta g = f, or None if f is not a coboundary.

    Solves the linear system over Z_m exactly; requires arity >= 2 (the
    coboundary of arity-0 cochains is identically zero, so only the zero
    arity-1 cochain is a coboundary).
    """
    _check_cochain(X, f)
    if f.arity < 2:
        raise ValueError("is_coboundary needs a cochain of arity >= 2")
    matrix = coboundary_matrix(X, f.arity - 1)
    solution = solve_mod(matrix, [int(v) for v in f.values], f.modulus)
    if solution is None:
        return None
    return CochainTable(f.arity - 1, X.size, f.modulus, solution)


def cocycle_space(X: FiniteYBSet, n: int, m: int,
                  type_one: bool = False) -> list[CochainTable]:
    """Generators of the arity-n cocycles mod m.

    With type_one (arity 2 only) the rows forcing f to vanish on the
    fixed pairs (x_of[a], a) and (a, y_of[a]) are appended before taking
    the kernel, which carves out the cocycles usable as state-sum weights.
    """
    matrix = coboundary_matrix(X, n)
    if type_one:
        if n != 2:
            raise ValueError("the type-one condition applies to arity 2")
        witness = X.biquandle_witness()
        rows = [row[:] for row in matrix.entries]
        size = X.size
        for a in range(size):
            for pair in ((witness.x_of[a], a), (a, witness.y_of[a])):
                row = [0] * matrix.cols
                row[pair[0] * size + pair[1]] = 1
                rows.append(row)
        matrix = IntegerMatrix._wrap(rows)
    return [CochainTable(n, X.size, m, g) for g in kernel_mod(matrix, m)]


@dataclass(frozen=True)
class CohomologyReport:
    """Cocycles modulo coboundaries in one arity."""

    arity: int
    modulus: int
    invariant_factors: tuple[int, ...]
    cocycle_order: int
    coboundary_order: int
    generators: tuple[CochainTable, ...]

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def to_json(self) -> dict:
        return {"arity": self.arity, "modulus": self.modulus,
                "invariant_factors": list(self.invariant_factors),
                "order": self.order,
                "cocycle_order": self.cocycle_order,
                "coboundary_order": self.coboundary_order,
                "cocycle_generators": [g.to_json() for g in self.generators]}


def _span_order(gens, m: int) -> int:
    out = 1
    for f in quotient_invariant_factors(gens, [], m):
        out *= f
    return out


def cohomology_group(X: FiniteYBSet, n: int, m: int,
                     max_cells: int | None = None) -> CohomologyReport:
    """Invariant factors of ker(delta^n) / im(delta^(n-1)) over Z_m.

    Assembling delta^n enumerates |X|^(n+1) cube colorings; max_cells
    (default 200000) caps that count and ResourceBound reports overruns.
    """
    cap = DEFAULT_MAX_CELLS if max_cells is None else max_cells
    cells = X.size ** (n + 1)
    if cells > cap:
        raise ResourceBound(
            f"|X|^(n+1) = {cells} exceeds the cell cap {cap}")
    if n < 1:
        raise ValueError("arity must be at least 1")
    kernel = kernel_mod(coboundary_matrix(X, n), m)
    image = []
    if n >= 2:
        previous = coboundary_matrix(X, n - 1)
        for j in range(previous.cols):
            col = [previous.entries[i][j] % m for i in range(previous.rows)]
            if any(col):
                image.append(col)
    factors = quotient_invariant_factors(kernel, image, m)
    return CohomologyReport(
        arity=n,
        modulus=m,
        invariant_factors=factors,
        cocycle_order=_span_order(kernel, m),
        coboundary_order=_span_order(image, m),
        generators=tuple(CochainTable(n, X.size, m, g) for g in kernel),
    )


def _is_prime_power(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, isqrt(p) + 1):
        if p % d == 0:
            while p % d == 0:
                p //= d
            return p == 1
    return True


def obstruction_cocycle(X: FiniteYBSet, f: CochainTable) -> CochainTable:
    """Carry cochain of lifting f through Z_p -> Z_{p^2} -> Z_p.

    f must be a cocycle with prime-power modulus p.  Lifting the canonical
    representatives s(a) = a to Z_{p^2} and applying the integer coboundary
    gives values divisible by p; dividing by p yields a cocycle one arity
    up whose class obstructs lifting f to a mod-p^2 cocycle.
    """
    p = f.modulus
    if not _is_prime_power(p):
        raise ValueError(f"modulus {p} is not a prime power")
    _check_cochain(X, f)
    if not is_cocycle(X, f):
        raise NotACocycle(
            f"input of arity {f.arity} is not a cocycle mod {p}")
    n1 = f.arity + 1
    farr = f.as_array()
    size = X.size
    square = p * p
    values = np.empty(size ** n1, dtype=np.int64)
    for idx, w in enumerate(np.ndindex((size,) * n1)):
        coloring = color_cube(X, w)
        total = 0
        for k in range(1, n1 + 1):
            for side in (0, 1):
                total += _face_sign(n1, k, side) * int(
                    farr[face_tuple(coloring, k, side)])
        if total % p:
            raise NotDivisible(
                f"face sum {total} at {w} is not divisible by {p}")
        values[idx] = (total % square) // p
    return CochainTable(n1, size, p, values)
