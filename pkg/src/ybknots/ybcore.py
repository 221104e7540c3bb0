"""Finite set-theoretic Yang-Baxter solutions.

A solution is a finite set X = {0, ..., n-1} with a map
R(x, y) = (R1(x, y), R2(x, y)) stored as two n x n lookup tables.  The
Yang-Baxter equation compares the two ways of sliding a triple through
three crossings:

    (R x 1)(1 x R)(R x 1) == (1 x R)(R x 1)(1 x R).

Constructors cover the affine one-dimensional family, the two-block
upper-triangular family on Z_q^2, truncated polynomial rings with two
nilpotent generators, and twisted abelian extensions of any base set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    ArityMismatch,
    ModulusMismatch,
    NotAUnit,
    NotBiquandle,
    ProductNotZero,
)

_UNSET = object()


@dataclass(frozen=True)
class BirackReport:
    """Invertibility summary for a YB set."""

    invertible: bool
    left_invertible: bool
    right_invertible: bool


@dataclass(frozen=True)
class BiquandleWitness:
    """For each a, the unique partners with R(x_of[a], a) = (x_of[a], a)
    and R(a, y_of[a]) = (a, y_of[a])."""

    x_of: tuple[int, ...]
    y_of: tuple[int, ...]


class FiniteYBSet:
    """Lookup-table map R on {0..n-1}^2 with cached verification results.

    The tables are frozen at construction; verification methods cache
    their answers and, when R is invertible, populate the inverse tables
    used for negative crossings.
    """

    def __init__(self, r1, r2, label: str | None = None):
        r1 = np.array(r1, dtype=np.int64)
        r2 = np.array(r2, dtype=np.int64)
        if r1.ndim != 2 or r1.shape[0] != r1.shape[1] or r1.shape != r2.shape:
            raise ValueError("component tables must be square and same shape")
        n = r1.shape[0]
        if n == 0:
            raise ValueError("empty carrier")
        for t in (r1, r2):
            if t.min() < 0 or t.max() >= n:
                raise ValueError("table entries must lie in 0..n-1")
        r1.setflags(write=False)
        r2.setflags(write=False)
        self.size = int(n)
        self.r1 = r1
        self.r2 = r2
        self.label = label if label is not None else f"table(n={n})"
        self._ybe_failure = _UNSET
        self._birack = None
        self._rbar1 = None
        self._rbar2 = None
        self._witness = None

    def r(self, x: int, y: int) -> tuple[int, int]:
        return int(self.r1[x, y]), int(self.r2[x, y])

    def ybe_failure(self):
        """First triple (x, y, z) in lexicographic order where the two
        crossing orders disagree, or None when R satisfies the equation.

        Works in slabs of first coordinates so memory stays bounded for
        large carriers and failing tables exit early.
        """
        if self._ybe_failure is _UNSET:
            n = self.size
            # int32 is plenty for any table that fits in memory and halves
            # the traffic of the n^3 gathers below.
            r1 = self.r1.astype(np.int32)
            r2 = self.r2.astype(np.int32)
            step = max(1, 500000 // (n * n))
            y = np.arange(n).reshape(1, n, 1)
            z = np.arange(n).reshape(1, 1, n)
            d1 = r1[y, z]
            d2 = r2[y, z]
            self._ybe_failure = None
            for start in range(0, n, step):
                x = np.arange(start, min(start + step, n)).reshape(-1, 1, 1)
                blk = (x.shape[0], n, n)
                a1 = np.broadcast_to(r1[x, y], blk)
                a2 = np.broadcast_to(r2[x, y], blk)
                b1 = r1[a2, z]
                b2 = r2[a2, z]
                lhs1 = r1[a1, b1]
                lhs2 = r2[a1, b1]
                e1 = r1[x, d1]
                e2 = r2[x, d1]
                f1 = r1[e2, np.broadcast_to(d2, blk)]
                f2 = r2[e2, np.broadcast_to(d2, blk)]
                ok = (lhs1 == e1) & (lhs2 == f1) & (b2 == f2)
                if not ok.all():
                    flat = int(np.argmax(~ok))
                    i, j, k = np.unravel_index(flat, blk)
                    self._ybe_failure = (start + int(i), int(j), int(k))
                    break
        return self._ybe_failure

    def verify_ybe(self) -> bool:
        return self.ybe_failure() is None

    def verify_birack(self) -> BirackReport:
        """Check invertibility of R and of its two one-sided component maps;
        on success the inverse tables for negative crossings are filled in."""
        if self._birack is None:
            n = self.size
            packed = (self.r1 * n + self.r2).reshape(-1)
            invertible = bool(np.array_equal(np.sort(packed),
                                             np.arange(n * n)))
            rows_perm = np.sort(self.r1, axis=1)
            left = bool((rows_perm == np.arange(n)).all())
            cols_perm = np.sort(self.r2, axis=0)
            right = bool((cols_perm == np.arange(n).reshape(n, 1)).all())
            if invertible:
                inv = np.empty(n * n, dtype=np.int64)
                inv[packed] = np.arange(n * n)
                rbar1 = (inv // n).reshape(n, n)
                rbar2 = (inv % n).reshape(n, n)
                rbar1.setflags(write=False)
                rbar2.setflags(write=False)
                self._rbar1 = rbar1
                self._rbar2 = rbar2
            self._birack = BirackReport(invertible, left, right)
        return self._birack

    @property
    def rbar1(self) -> np.ndarray:
        """First component of the inverse map: R(rbar1[a,b], rbar2[a,b]) == (a, b)."""
        if self._rbar1 is None and not self.verify_birack().invertible:
            raise ValueError(f"{self.label}: R is not invertible")
        return self._rbar1

    @property
    def rbar2(self) -> np.ndarray:
        if self._rbar2 is None and not self.verify_birack().invertible:
            raise ValueError(f"{self.label}: R is not invertible")
        return self._rbar2

    def rbar(self, a: int, b: int) -> tuple[int, int]:
        return int(self.rbar1[a, b]), int(self.rbar2[a, b])

    def biquandle_witness(self) -> BiquandleWitness:
        """Unique-fixed-pair maps, raising NotBiquandle at the first element
        whose row or column does not contain exactly one fixed pair."""
        if self._witness is None:
            n = self.size
            grid_x = np.arange(n).reshape(n, 1)
            grid_y = np.arange(n).reshape(1, n)
            fixed = (self.r1 == grid_x) & (self.r2 == grid_y)
            col_counts = fixed.sum(axis=0)
            for a in range(n):
                if col_counts[a] != 1:
                    raise NotBiquandle(
                        a, f"{int(col_counts[a])} fixed pairs (*, {a})")
            row_counts = fixed.sum(axis=1)
            for a in range(n):
                if row_counts[a] != 1:
                    raise NotBiquandle(
                        a, f"{int(row_counts[a])} fixed pairs ({a}, *)")
            x_of = tuple(int(v) for v in fixed.argmax(axis=0))
            y_of = tuple(int(v) for v in fixed.argmax(axis=1))
            self._witness = BiquandleWitness(x_of, y_of)
        return self._witness

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteYBSet)
                and np.array_equal(self.r1, other.r1)
                and np.array_equal(self.r2, other.r2))

    def __repr__(self) -> str:
        return f"FiniteYBSet({self.label})"

    def to_json(self) -> dict:
        return {"size": self.size,
                "R1": self.r1.tolist(),
                "R2": self.r2.tolist()}

    @classmethod
    def from_json(cls, data: dict, label: str | None = None) -> "FiniteYBSet":
        try:
            size = int(data["size"])
            r1 = data["R1"]
            r2 = data["R2"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed YB-set data: {exc}") from exc
        made = cls(r1, r2, label=label)
        if made.size != size:
            raise ValueError(
                f"declared size {size} does not match tables of size {made.size}")
        return made


@dataclass(frozen=True)
class AffineParams:
    """Parameters of the one-dimensional affine family on Z_q.

    s, t, u must be units mod q and (1-s)(1-t) must vanish mod q; these
    are exactly the conditions for the map below to satisfy the
    Yang-Baxter equation and be invertible.
    """

    q: int
    s: int
    t: int
    u: int = 1

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        object.__setattr__(self, "s", self.s % self.q)
        object.__setattr__(self, "t", self.t % self.q)
        object.__setattr__(self, "u", self.u % self.q)
        for name in ("s", "t", "u"):
            value = getattr(self, name)
            if gcd(value, self.q) != 1:
                raise NotAUnit(value, self.q)
        if (1 - self.s) * (1 - self.t) % self.q:
            raise ProductNotZero(
                f"(1-s)(1-t) = {(1 - self.s) * (1 - self.t) % self.q} != 0 mod {self.q}")


def make_affine(q: int, s: int, t: int, u: int = 1) -> FiniteYBSet:
    """Affine solution R(x, y) = ((1-s)x + u*s*y, t/u*x + (1-t)y) on Z_q."""
    p = AffineParams(q, s, t, u)
    u_inv = pow(p.u, -1, q)
    x = np.arange(q, dtype=np.int64).reshape(q, 1)
    y = np.arange(q, dtype=np.int64).reshape(1, q)
    r1 = ((1 - p.s) * x + p.u * p.s * y) % q
    r2 = (u_inv * p.t * x + (1 - p.t) * y) % q
    made = FiniteYBSet(np.broadcast_to(r1, (q, q)), np.broadcast_to(r2, (q, q)),
                       label=f"affine(q={q},s={p.s},t={p.t},u={p.u})")
    made.params = p
    return made


def make_block(q: int, s: int, t: int) -> FiniteYBSet:
    """Solution on pairs Z_q^2 from commuting unipotent blocks.

    With Y = [[1, s], [0, 1]] and Z = [[1, t], [0, 1]] the map is
    R(x, y) = ((E-Y)x + Yy, Zx + (E-Z)y); pairs are indexed as
    x1*q + x2 with the first coordinate most significant.
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    s %= q
    t %= q
    n = q * q
    i = np.arange(n, dtype=np.int64)
    x1 = (i // q).reshape(n, 1)
    x2 = (i % q).reshape(n, 1)
    y1 = (i // q).reshape(1, n)
    y2 = (i % q).reshape(1, n)
    r1 = ((y1 + s * (y2 - x2)) % q) * q + np.broadcast_to(y2, (n, n))
    r2 = ((x1 + t * (x2 - y2)) % q) * q + np.broadcast_to(x2, (n, n))
    return FiniteYBSet(r1, r2, label=f"block(q={q},s={s},t={t})")


@dataclass(frozen=True)
class OmegaElement:
    """Element of Z_q[a, b] / (a*b, a^h, b^k).

    Stored as a constant plus coefficient tuples for a^1..a^(h-1) and
    b^1..b^(k-1); the two nilpotent directions never mix because ab = 0.
    """

    q: int
    h: int
    k: int
    const: int
    a_coeffs: tuple[int, ...]
    b_coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2 or self.h < 1 or self.k < 1:
            raise ValueError("need q >= 2 and h, k >= 1")
        if len(self.a_coeffs) != self.h - 1 or len(self.b_coeffs) != self.k - 1:
            raise ValueError("coefficient tuple lengths do not match h, k")
        object.__setattr__(self, "const", self.const % self.q)
        object.__setattr__(self, "a_coeffs",
                           tuple(c % self.q for c in self.a_coeffs))
        object.__setattr__(self, "b_coeffs",
                           tuple(c % self.q for c in self.b_coeffs))

    def _check(self, other: "OmegaElement"):
        if (self.q, self.h, self.k) != (other.q, other.h, other.k):
            raise ModulusMismatch(
                f"ring mismatch: {(self.q, self.h, self.k)} vs "
                f"{(other.q, other.h, other.k)}")

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        return OmegaElement(
            self.q, self.h, self.k,
            self.const + other.const,
            tuple(a + b for a, b in zip(self.a_coeffs, other.a_coeffs)),
            tuple(a + b for a, b in zip(self.b_coeffs, other.b_coeffs)))

    def __sub__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        return OmegaElement(
            self.q, self.h, self.k,
            self.const - other.const,
            tuple(a - b for a, b in zip(self.a_coeffs, other.a_coeffs)),
            tuple(a - b for a, b in zip(self.b_coeffs, other.b_coeffs)))

    def __neg__(self) -> "OmegaElement":
        return OmegaElement(self.q, self.h, self.k, -self.const,
                            tuple(-c for c in self.a_coeffs),
                            tuple(-c for c in self.b_coeffs))

    def __mul__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        sa = (self.const,) + self.a_coeffs
        oa = (other.const,) + other.a_coeffs
        sb = (self.const,) + self.b_coeffs
        ob = (other.const,) + other.b_coeffs
        a_out = []
        for d in range(1, self.h):
            a_out.append(sum(sa[i] * oa[d - i] for i in range(d + 1)))
        b_out = []
        for d in range(1, self.k):
            b_out.append(sum(sb[i] * ob[d - i] for i in range(d + 1)))
        return OmegaElement(self.q, self.h, self.k,
                            self.const * other.const,
                            tuple(a_out), tuple(b_out))


class OmegaRing:
    """Index bookkeeping for the truncated ring Z_q[a, b]/(ab, a^h, b^k).

    Elements are enumerated in lexicographic order on the digit string
    (constant, a-coefficients by increasing degree, b-coefficients by
    increasing degree), constant most significant.
    """

    def __init__(self, q: int, h: int, k: int):
        if q < 2 or h < 1 or k < 1:
            raise ValueError("need q >= 2 and h, k >= 1")
        self.q = q
        self.h = h
        self.k = k
        self.digits = h + k - 1
        self.size = q ** self.digits

    def zero(self) -> OmegaElement:
        return OmegaElement(self.q, self.h, self.k, 0,
                            (0,) * (self.h - 1), (0,) * (self.k - 1))

    def gen_a(self) -> OmegaElement:
        coeffs = [0] * (self.h - 1)
        if coeffs:
            coeffs[0] = 1
        return OmegaElement(self.q, self.h, self.k, 0, tuple(coeffs),
                            (0,) * (self.k - 1))

    def gen_b(self) -> OmegaElement:
        coeffs = [0] * (self.k - 1)
        if coeffs:
            coeffs[0] = 1
        return OmegaElement(self.q, self.h, self.k, 0,
                            (0,) * (self.h - 1), tuple(coeffs))

    def index(self, elem: OmegaElement) -> int:
        idx = 0
        for digit in (elem.const,) + elem.a_coeffs + elem.b_coeffs:
            idx = idx * self.q + digit
        return idx

    def element(self, index: int) -> OmegaElement:
        digits = []
        for _ in range(self.digits):
            index, d = divmod(index, self.q)
            digits.append(d)
        digits.reverse()
        return OmegaElement(self.q, self.h, self.k, digits[0],
                            tuple(digits[1:self.h]),
                            tuple(digits[self.h:]))

    def elements(self):
        return [self.element(i) for i in range(self.size)]


def make_omega(q: int, h: int, k: int) -> FiniteYBSet:
    """Solution on the truncated ring: with a = 1-s and b = 1-t nilpotent,
    R(x, y) = (y + a*(x - y), x + b*(y - x))."""
    ring = OmegaRing(q, h, k)
    gen_a = ring.gen_a()
    gen_b = ring.gen_b()
    elems = ring.elements()
    n = ring.size
    r1 = np.empty((n, n), dtype=np.int64)
    r2 = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            r1[i, j] = ring.index(y + gen_a * (x - y))
            r2[i, j] = ring.index(x + gen_b * (y - x))
    made = FiniteYBSet(r1, r2, label=f"omega(q={q},h={h},k={k})")
    made.omega = ring
    return made


class CochainTable:
    """Z_m-valued function on X^arity.

    Values are stored densely in lexicographic order of the argument
    tuple, first coordinate most significant, as canonical residues.
    """

    __slots__ = ("arity", "set_size", "modulus", "values")

    def __init__(self, arity: int, set_size: int, modulus: int, values):
        if arity < 0 or set_size < 1 or modulus < 2:
            raise ValueError("need arity >= 0, set_size >= 1, modulus >= 2")
        values = np.asarray(values, dtype=np.int64).reshape(-1) % modulus
        if values.shape[0] != set_size ** arity:
            raise ValueError(
                f"need {set_size ** arity} values, got {values.shape[0]}")
        values.setflags(write=False)
        self.arity = arity
        self.set_size = set_size
        self.modulus = modulus
        self.values = values

    @classmethod
    def from_function(cls, arity: int, set_size: int, modulus: int,
                      fn) -> "CochainTable":
        shape = (set_size,) * arity
        values = [fn(*idx) for idx in np.ndindex(shape)]
        return cls(arity, set_size, modulus, values)

    @classmethod
    def zero(cls, arity: int, set_size: int, modulus: int) -> "CochainTable":
        return cls(arity, set_size, modulus,
                   np.zeros(set_size ** arity, dtype=np.int64))

    def index(self, xs) -> int:
        if len(xs) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(xs)}")
        idx = 0
        for x in xs:
            idx = idx * self.set_size + int(x)
        return idx

    def __call__(self, *xs) -> int:
        return int(self.values[self.index(xs)])

    def as_array(self) -> np.ndarray:
        return self.values.reshape((self.set_size,) * self.arity)

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (isinstance(other, CochainTable)
                and self.arity == other.arity
                and self.set_size == other.set_size
                and self.modulus == other.modulus
                and np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return (f"CochainTable(arity={self.arity}, set_size={self.set_size}, "
                f"modulus={self.modulus})")

    def to_json(self) -> dict:
        return {"arity": self.arity, "set_size": self.set_size,
                "modulus": self.modulus, "values": self.values.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> "CochainTable":
        try:
            return cls(int(data["arity"]), int(data["set_size"]),
                       int(data["modulus"]), data["values"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed cochain data: {exc}") from exc


def _check_extension_cochain(psi: CochainTable, base: FiniteYBSet, m: int,
                             name: str):
    if psi.arity != 2:
        raise ArityMismatch(f"{name} must have arity 2, got {psi.arity}")
    if psi.set_size != base.size:
        raise ArityMismatch(
            f"{name} is defined on a set of size {psi.set_size}, "
            f"base has size {base.size}")
    if psi.modulus != m:
        raise ModulusMismatch(
            f"{name} has modulus {psi.modulus}, extension uses {m}")


def extend(X: FiniteYBSet, m: int, psi1: CochainTable,
           psi2: CochainTable | None = None) -> FiniteYBSet:
    """Twisted product on Z_m x X:

        S((a1, x1), (a2, x2)) = ((a2 + psi1(x1, x2), R1(x1, x2)),
                                 (a1 + psi2(x1, x2), R2(x1, x2))).

    Pairs are indexed as a * |X| + x.  The result is returned unverified;
    it satisfies the Yang-Baxter equation exactly when the cochain pair
    does, so callers should run verify_ybe on it.  psi2 defaults to psi1.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    if psi2 is None:
        psi2 = psi1
    _check_extension_cochain(psi1, X, m, "psi1")
    _check_extension_cochain(psi2, X, m, "psi2")
    n = X.size
    big = m * n
    a1 = np.arange(m, dtype=np.int64).reshape(m, 1, 1, 1)
    x1 = np.arange(n, dtype=np.int64).reshape(1, n, 1, 1)
    a2 = np.arange(m, dtype=np.int64).reshape(1, 1, m, 1)
    x2 = np.arange(n, dtype=np.int64).reshape(1, 1, 1, n)
    p1 = psi1.as_array()[x1, x2]
    p2 = psi2.as_array()[x1, x2]
    s1 = ((a2 + p1) % m) * n + X.r1[x1, x2]
    s2 = ((a1 + p2) % m) * n + X.r2[x1, x2]
    shape = (m, n, m, n)
    s1 = np.broadcast_to(s1, shape).reshape(big, big)
    s2 = np.broadcast_to(s2, shape).reshape(big, big)
    return FiniteYBSet(s1, s2, label=f"extend(m={m}, base={X.label})")


def omega_extension_check(q: int, h: int, k: int) -> bool:
    """Confirm that raising both truncation degrees realizes the predicted
    twisted product.

    The ring with degrees (h+1, k+1) maps onto the (h, k) ring by dropping
    top coefficients; the dropped pair lives in Z_q x Z_q and the big
    solution must equal the extension of the small one by the cochain pair

        psi1(x, y) = (x_a(h-1) - y_a(h-1), 0),
        psi2(x, y) = (0, y_b(k-1) - x_b(k-1)),

    where x_a(d), x_b(d) are the degree-d coefficients (degree 0 meaning
    the constant).  Returns True when every pair matches.
    """
    big = make_omega(q, h + 1, k + 1)
    small_ring = OmegaRing(q, h, k)
    ring = big.omega

    def split(elem: OmegaElement):
        # (top a-coeff, top b-coeff, truncation to the small ring)
        bar = OmegaElement(q, h, k, elem.const,
                           elem.a_coeffs[:h - 1], elem.b_coeffs[:k - 1])
        return elem.a_coeffs[-1], elem.b_coeffs[-1], bar

    def low(elem: OmegaElement, kind: str) -> int:
        coeffs = (elem.const,) + (elem.a_coeffs if kind == "a" else elem.b_coeffs)
        deg = h - 1 if kind == "a" else k - 1
        return coeffs[deg]

    small = make_omega(q, h, k)
    elems = ring.elements()
    for alpha in elems:
        a_top, ab_top, abar = split(alpha)
        for beta in elems:
            b_top, bb_top, bbar = split(beta)
            g1 = ring.element(int(big.r1[ring.index(alpha), ring.index(beta)]))
            g2 = ring.element(int(big.r2[ring.index(alpha), ring.index(beta)]))
            psi1 = (low(abar, "a") - low(bbar, "a")) % q
            psi2 = (low(bbar, "b") - low(abar, "b")) % q
            i1, j1, g1bar = split(g1)
            i2, j2, g2bar = split(g2)
            xb, yb = small_ring.index(abar), small_ring.index(bbar)
            if (i1, j1) != ((b_top + psi1) % q, bb_top):
                return False
            if (i2, j2) != (a_top, (ab_top + psi2) % q):
                return False
            if small_ring.index(g1bar) != int(small.r1[xb, yb]):
                return False
            if small_ring.index(g2bar) != int(small.r2[xb, yb]):
                return False
    return True


def swap_set(n: int) -> FiniteYBSet:
    """The trivial solution R(x, y) = (y, x) on n elements."""
    if n < 1:
        raise ValueError("need at least one element")
    i = np.arange(n, dtype=np.int64)
    r1 = np.broadcast_to(i.reshape(1, n), (n, n))
    r2 = np.broadcast_to(i.reshape(n, 1), (n, n))
    return FiniteYBSet(r1, r2, label=f"swap(n={n})")
