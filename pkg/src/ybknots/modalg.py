"""Exact modular and integer linear algebra.

Residue arithmetic, dense integer matrices, Smith normal form with
transform matrices, kernels and quotients of finitely generated modules
over Z_m, and the group ring Z[Z_m] used to value state sums.  Everything
here is exact: matrix entries are Python ints, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ImageNotContained, ModulusMismatch, NotAUnit


@dataclass(frozen=True)
class Residue:
    """Canonical representative of an integer modulo m (m >= 2)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other_value(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other) -> "Residue":
        return Residue(self.value + self._other_value(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "Residue":
        return Residue(self.value - self._other_value(other), self.modulus)

    def __rsub__(self, other) -> "Residue":
        return Residue(self._other_value(other) - self.value, self.modulus)

    def __mul__(self, other) -> "Residue":
        return Residue(self.value * self._other_value(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> "Residue":
        """Multiplicative inverse; raises NotAUnit if none exists."""
        if not self.is_unit():
            raise NotAUnit(self.value, self.modulus)
        return Residue(pow(self.value, -1, self.modulus), self.modulus)


class IntegerMatrix:
    """Dense matrix over Z with exact arithmetic."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[int(e) for e in row] for row in entries]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged rows")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def _wrap(cls, entries: list) -> "IntegerMatrix":
        # Trusted fast path: entries must already be rectangular lists of ints.
        made = cls.__new__(cls)
        made.rows = len(entries)
        made.cols = len(entries[0]) if entries else 0
        made.entries = entries
        return made

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntegerMatrix)
                and self.entries == other.entries)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.entries)) if other.entries else []
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot]
             for row in self.entries])

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([list(col) for col in zip(*self.entries)]) \
            if self.rows else IntegerMatrix([[] for _ in range(self.cols)])

    def copy(self) -> "IntegerMatrix":
        return IntegerMatrix(self.entries)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SmithForm:
    """Factorization U @ A @ V == D with U, V unimodular and D diagonal,
    each diagonal entry non-negative and dividing the next."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    invariant_factors: tuple[int, ...]


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b == g and g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _snf_core(a: list[list[int]], want_u: bool, want_v: bool):
    """Diagonalize in place; returns (u, v, factors) with u/v None if unwanted.

    Pivot rule: smallest non-zero absolute value in the trailing submatrix,
    first such entry in row-major order.  Deterministic by construction.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)] if want_u else None
    v = [[int(i == j) for j in range(cols)] for i in range(cols)] if want_v else None

    def swap_rows(m, i, j):
        m[i], m[j] = m[j], m[i]

    def row_axpy(m, i, j, q):
        # row i -= q * row j
        ri, rj = m[i], m[j]
        m[i] = [x - q * y for x, y in zip(ri, rj)]

    def swap_cols(m, i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    def col_axpy(m, i, j, q):
        # col i -= q * col j
        for row in m:
            row[i] -= q * row[j]

    limit = min(rows, cols)
    t = 0
    while t < limit:
        # Locate pivot: smallest |entry| != 0, row-major tie break.
        best = None
        pi = pj = -1
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                e = row[j]
                if e and (best is None or abs(e) < best):
                    best = abs(e)
                    pi, pj = i, j
        if best is None:
            break
        if pi != t:
            swap_rows(a, t, pi)
            if u is not None:
                swap_rows(u, t, pi)
        if pj != t:
            swap_cols(a, t, pj)
            if v is not None:
                swap_cols(v, t, pj)
        while True:
            restart = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_axpy(a, i, t, q)
                        if u is not None:
                            row_axpy(u, i, t, q)
                    if a[i][t]:
                        # remainder is strictly smaller; promote it
                        swap_rows(a, t, i)
                        if u is not None:
                            swap_rows(u, t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_axpy(a, j, t, q)
                        if v is not None:
                            col_axpy(v, j, t, q)
                    if a[t][j]:
                        swap_cols(a, t, j)
                        if v is not None:
                            swap_cols(v, t, j)
                        restart = True
                        break
            if not restart:
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1

    # Enforce the divisibility chain with local 2x2 Bezout steps.
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if dj % di == 0:
                continue
            changed = True
            g, x, y = _egcd(di, dj)
            col_axpy(a, i, i + 1, -1)
            if v is not None:
                col_axpy(v, i, i + 1, -1)
            ri = a[i]
            rj = a[i + 1]
            a[i] = [x * p + y * q for p, q in zip(ri, rj)]
            a[i + 1] = [(-dj // g) * p + (di // g) * q for p, q in zip(ri, rj)]
            if u is not None:
                ri, rj = u[i], u[i + 1]
                u[i] = [x * p + y * q for p, q in zip(ri, rj)]
                u[i + 1] = [(-dj // g) * p + (di // g) * q
                            for p, q in zip(ri, rj)]
            q = a[i][i + 1] // g
            col_axpy(a, i + 1, i, q)
            if v is not None:
                col_axpy(v, i + 1, i, q)

    factors = tuple(a[i][i] for i in range(t))
    return u, v, factors


def smith_normal_form(A: IntegerMatrix) -> SmithForm:
    """Smith normal form with both transform matrices.

    The pivot rule (smallest surviving absolute value, row-major tie break)
    makes the output a deterministic function of the input, so every basis
    derived from it is reproducible.
    """
    work = [row[:] for row in A.entries]
    u, v, factors = _snf_core(work, want_u=True, want_v=True)
    return SmithForm(
        U=IntegerMatrix(u),
        D=IntegerMatrix(work) if A.rows else IntegerMatrix.zeros(0, A.cols),
        V=IntegerMatrix(v),
        invariant_factors=factors,
    )


def _reduced_rows(A: IntegerMatrix, m: int, dedup: bool):
    """Rows of A reduced to the symmetric range mod m; zero rows dropped,
    and with dedup also repeated rows.  The solution set mod m is unchanged."""
    half = m // 2
    seen = set()
    out = []
    for row in A.entries:
        red = tuple((e % m) - m if (e % m) > half else (e % m) for e in row)
        if not any(red):
            continue
        if dedup:
            if red in seen:
                continue
            seen.add(red)
        out.append(list(red))
    return out


def kernel_mod(A: IntegerMatrix, m: int) -> list[list[int]]:
    """Generators of {x in Z_m^cols : A @ x == 0 mod m}.

    Lifts the problem to Z by stacking m*I below A; if U @ B @ V == D for
    the stack B, then x = V @ w solves the system exactly when each
    d_i * w_i vanishes mod m, so column i of V scaled by m / gcd(d_i, m)
    generates the kernel.  Exact for composite m, where plain row
    reduction over a field is unavailable.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    c = A.cols
    if c == 0:
        return []
    work = _reduced_rows(A, m, dedup=True)
    work += [[m if i == j else 0 for j in range(c)] for i in range(c)]
    _, v, factors = _snf_core(work, want_u=False, want_v=True)
    gens = []
    for i, d in enumerate(factors):
        mult = m // gcd(d, m)
        if mult % m == 0:
            continue
        gens.append([(v[j][i] * mult) % m for j in range(c)])
    return gens


def solve_mod(A: IntegerMatrix, b, m: int):
    """One solution of A @ x == b (mod m), or None if there is none."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    b = [int(e) % m for e in b]
    if len(b) != A.rows:
        raise ValueError("right-hand side length mismatch")
    work = [[e % m for e in row] for row in A.entries]
    rows, cols = A.rows, A.cols
    u, v, factors = _snf_core(work, want_u=True, want_v=True)
    rank = len(factors)
    y = [0] * cols
    for i in range(rows):
        ci = sum(ue * be for ue, be in zip(u[i], b)) % m
        d = factors[i] if i < rank else 0
        g = gcd(d, m)
        if ci % g:
            return None
        if i < cols and d:
            sub = m // g
            if sub > 1:
                y[i] = (ci // g) * pow((d // g) % sub, -1, sub) % sub
    return [sum(ve * ye for ve, ye in zip(row, y)) % m for row in v]


def _column_lattice_basis(mat: list[list[int]], c: int, n: int):
    """Lower-triangular basis (as columns) of the column lattice of a
    c x n integer matrix of full row rank."""
    a = [row[:] for row in mat]

    def col_axpy(j, k, q):
        for row in a:
            row[j] -= q * row[k]

    for r in range(c):
        while True:
            best = None
            piv = -1
            for j in range(r, n):
                e = a[r][j]
                if e and (best is None or abs(e) < best):
                    best = abs(e)
                    piv = j
            if best is None:
                raise ValueError("matrix does not have full row rank")
            if piv != r:
                for row in a:
                    row[r], row[piv] = row[piv], row[r]
            done = True
            for j in range(r + 1, n):
                if a[r][j]:
                    q = a[r][j] // a[r][r]
                    if q:
                        col_axpy(j, r, q)
                    if a[r][j]:
                        done = False
            if done:
                break
        if a[r][r] < 0:
            for row in a:
                row[r] = -row[r]
    return [[a[i][j] for i in range(c)] for j in range(c)]


def _in_basis(basis: list[list[int]], target: list[int]):
    """Coordinates of target in a lower-triangular column basis, or None
    when target is not an integer combination."""
    c = len(target)
    residual = list(target)
    coords = [0] * c
    for r in range(c):
        d = basis[r][r]
        if residual[r] % d:
            return None
        w = residual[r] // d
        coords[r] = w
        if w:
            col = basis[r]
            for i in range(r, c):
                residual[i] -= w * col[i]
    return coords


def quotient_invariant_factors(kernel_gens, image_gens, m: int) -> tuple[int, ...]:
    """Invariant factors (> 1) of span(kernel_gens) / span(image_gens) in Z_m^c.

    Both spans are lifted to integer lattices containing m*Z^c; the image
    must be contained in the kernel span or ImageNotContained is raised.
    Returns () for the trivial quotient.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    kernel_gens = [list(map(int, g)) for g in kernel_gens]
    image_gens = [list(map(int, g)) for g in image_gens]
    if not kernel_gens and not image_gens:
        return ()
    c = len(kernel_gens[0]) if kernel_gens else len(image_gens[0])
    if any(len(g) != c for g in kernel_gens + image_gens):
        raise ValueError("generator length mismatch")

    lattice = [[g[i] for g in kernel_gens] + [m * int(i == j) for j in range(c)]
               for i in range(c)]
    basis = _column_lattice_basis(lattice, c, len(kernel_gens) + c)

    relations = []
    for gen in image_gens + [[m * int(i == j) for i in range(c)]
                             for j in range(c)]:
        coords = _in_basis(basis, gen)
        if coords is None:
            raise ImageNotContained(
                "image generator outside the span of the kernel generators")
        relations.append(coords)

    work = [[rel[i] for rel in relations] for i in range(c)]
    _, _, factors = _snf_core(work, want_u=False, want_v=False)
    return tuple(f for f in factors if f != 1)


class GroupRingElement:
    """Element of Z[Z_m]: integer coefficients on powers of a generator x
    of the cyclic group of order m.  Multiplication is cyclic convolution."""

    __slots__ = ("modulus", "coefficients")

    def __init__(self, modulus: int, coefficients):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        coefficients = tuple(int(e) for e in coefficients)
        if len(coefficients) != modulus:
            raise ValueError(
                f"need {modulus} coefficients, got {len(coefficients)}")
        self.modulus = modulus
        self.coefficients = coefficients

    @classmethod
    def zero(cls, modulus: int) -> "GroupRingElement":
        return cls(modulus, (0,) * modulus)

    @classmethod
    def term(cls, coefficient: int, exponent: int, modulus: int) -> "GroupRingElement":
        """coefficient * x^exponent with the exponent reduced mod m."""
        coeffs = [0] * modulus
        coeffs[exponent % modulus] = int(coefficient)
        return cls(modulus, coeffs)

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(
                f"moduli differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other) -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(
            self.modulus,
            [a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __sub__(self, other) -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(
            self.modulus,
            [a - b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.modulus, [-a for a in self.coefficients])

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(
                self.modulus, [other * a for a in self.coefficients])
        self._check(other)
        m = self.modulus
        out = [0] * m
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    if b:
                        out[(i + j) % m] += a * b
        return GroupRingElement(m, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupRingElement)
                and self.modulus == other.modulus
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.modulus, self.coefficients))

    def __bool__(self) -> bool:
        return any(self.coefficients)

    def coefficient_sum(self) -> int:
        """Image under the augmentation map x -> 1."""
        return sum(self.coefficients)

    def render(self) -> str:
        """Human-readable polynomial, e.g. '8 + 8*x^3'; '0' when zero."""
        parts = []
        for j, c in enumerate(self.coefficients):
            if not c:
                continue
            if j == 0:
                body = str(abs(c))
            elif j == 1:
                body = f"{abs(c)}*x"
            else:
                body = f"{abs(c)}*x^{j}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"GroupRingElement(mod {self.modulus}: {self.render()})"

    def to_json(self) -> dict:
        return {"modulus": self.modulus,
                "coefficients": list(self.coefficients)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupRingElement":
        return cls(int(data["modulus"]), data["coefficients"])
