"""Exact integer and rational lattice algebra.

Everything in this module runs on Python ints and fractions.Fraction; there
is no floating point anywhere.  Lattices are full rank in their ambient
rational vector space and are stored through a Hermite-normal-form basis, so
two Lattice objects compare equal exactly when they contain the same vectors.

Routines: smith_normal_form, hermite_rows, Lattice, lattice_member,
lattice_coordinates, dual_lattice, quotient_invariants, congruence_kernel,
lattice_index, plus the small exact matrix helpers they share.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vector = tuple[Fraction, ...]


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def mat_mul(a, b):
    """Exact matrix product; entries may be ints or Fractions."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(mat, vec):
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def mat_inv(mat):
    """Inverse of a square rational matrix by Gauss-Jordan elimination.

    Raises:
        ValueError: if the matrix is singular.
    """
    n = len(mat)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def det_int(mat) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _bezout(a: int, b: int) -> tuple[int, int]:
    """Return (s, t) with s*a + t*b == gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def smith_normal_form(mat):
    """Diagonalize an integer matrix by unimodular row and column operations.

    Args:
        mat: rectangular list of int rows (m x n, m and n at least 1).

    Returns:
        (U, D, V): integer matrices with U (m x m) and V (n x n) unimodular
        and D == U @ mat @ V diagonal, diagonal entries nonnegative with each
        entry dividing the next.  The product identity is re-verified before
        returning.
    """
    m = len(mat)
    n = len(mat[0])
    d = [[int(x) for x in row] for row in mat]
    if any(len(row) != n for row in d):
        raise ValueError("ragged matrix")
    u = identity_matrix(m)
    v = identity_matrix(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        d[i] = [x + q * y for x, y in zip(d[i], d[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        # col_i += q * col_j
        for row in d:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def gcd_rows(t, i):
        # 2x2 unimodular transform on rows (t, i) placing gcd at the pivot
        # and zero below it, without the entry blowup of repeated remainders.
        a, b = d[t][t], d[i][t]
        g = gcd(a, b)
        s, w = _bezout(a, b)
        rt, ri = d[t], d[i]
        d[t] = [s * x + w * y for x, y in zip(rt, ri)]
        d[i] = [(-b // g) * x + (a // g) * y for x, y in zip(rt, ri)]
        ut, ui = u[t], u[i]
        u[t] = [s * x + w * y for x, y in zip(ut, ui)]
        u[i] = [(-b // g) * x + (a // g) * y for x, y in zip(ut, ui)]

    def gcd_cols(t, j):
        a, b = d[t][t], d[t][j]
        g = gcd(a, b)
        s, w = _bezout(a, b)
        for row in d:
            ct, cj = row[t], row[j]
            row[t] = s * ct + w * cj
            row[j] = (-b // g) * ct + (a // g) * cj
        for row in v:
            ct, cj = row[t], row[j]
            row[t] = s * ct + w * cj
            row[j] = (-b // g) * ct + (a // g) * cj

    for t in range(min(m, n)):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (piv is None or abs(d[i][j]) < abs(d[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # Shrink the pivot to the gcd of its row and column; every transform
        # strictly divides the pivot, so this settles quickly.
        while True:
            changed = False
            for i in range(t + 1, m):
                if d[i][t] % d[t][t] != 0:
                    gcd_rows(t, i)
                    changed = True
            for j in range(t + 1, n):
                if d[t][j] % d[t][t] != 0:
                    gcd_cols(t, j)
                    changed = True
            if not changed:
                break
        # The pivot now divides its whole row and column, so plain
        # subtractions clear both without re-dirtying either.
        for i in range(t + 1, m):
            if d[i][t] != 0:
                add_row(i, t, -(d[i][t] // d[t][t]))
        for j in range(t + 1, n):
            if d[t][j] != 0:
                add_col(j, t, -(d[t][j] // d[t][t]))
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    k = min(m, n)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = d[i][i], d[j][j]
            if a == 0 and b != 0:
                swap_rows(i, j)
                swap_cols(i, j)
                a, b = b, 0
            if a == 0 or b == 0 or b % a == 0:
                continue
            g = gcd(a, b)
            low = a * b // g
            s, t = _bezout(a, b)
            # Embedded 2x2 transform sending diag(a, b) to diag(g, lcm).
            ui, uj = u[i], u[j]
            u[i] = [s * x + t * y for x, y in zip(ui, uj)]
            u[j] = [(-b // g) * x + (a // g) * y for x, y in zip(ui, uj)]
            for row in v:
                ci, cj = row[i], row[j]
                row[i] = ci + cj
                row[j] = (-t * b // g) * ci + (s * a // g) * cj
            d[i][i], d[j][j] = g, low

    if mat_mul(mat_mul(u, [list(r) for r in mat]), v) != d:
        raise ArithmeticError("normal form verification failed")
    if abs(det_int(u)) != 1 or abs(det_int(v)) != 1:
        raise ArithmeticError("transform matrices are not unimodular")
    return u, d, v


def hermite_rows(mat):
    """Canonical row Hermite form of an integer matrix, zero rows dropped.

    Pivots are positive, sit in strictly increasing columns, and every entry
    above a pivot is reduced into [0, pivot).  Two integer matrices with the
    same row lattice produce identical output.
    """
    if not mat:
        return []
    h = [[int(x) for x in row] for row in mat]
    m = len(h)
    n = len(h[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        if h[r][c] == 0:
            swap = next((i for i in range(r + 1, m) if h[i][c] != 0), None)
            if swap is not None:
                h[r], h[swap] = h[swap], h[r]
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            if b % a == 0:
                q = b // a
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
            else:
                # One-shot gcd transform on the row pair: gcd lands at the
                # pivot row, zero at row i, no repeated remainder swaps.
                g = gcd(a, b)
                s, w = _bezout(a, b)
                hr, hi = h[r], h[i]
                h[r] = [s * x + w * y for x, y in zip(hr, hi)]
                h[i] = [(-b // g) * x + (a // g) * y for x, y in zip(hr, hi)]
        if h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
            p = h[r][c]
            for i in range(r):
                q = h[i][c] // p
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
            r += 1
    return [tuple(row) for row in h[:r]]


class Lattice:
    """Full-rank sublattice of Q^n with a canonical basis.

    The constructor accepts any generating set (rows of rationals, possibly
    more rows than the rank) and normalizes to the Hermite basis of the
    scaled integer lattice, so equality and hashing see through the choice
    of generators.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, generators, ambient_dim: int | None = None):
        rows = [tuple(Fraction(x) for x in row) for row in generators]
        if ambient_dim is None:
            if not rows:
                raise ValueError("no generators and no ambient_dim")
            ambient_dim = len(rows[0])
        if any(len(row) != ambient_dim for row in rows):
            raise ValueError("generator length does not match ambient_dim")
        den = 1
        for row in rows:
            for x in row:
                den = lcm(den, x.denominator)
        scaled = [[int(x * den) for x in row] for row in rows]
        h = hermite_rows(scaled)
        if len(h) != ambient_dim:
            raise ValueError("generators do not span a full-rank lattice")
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(Fraction(x, den) for x in row) for row in h)

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(identity_matrix(n))

    def contains(self, vector) -> bool:
        return lattice_member(vector, self)

    def basis_matrix(self) -> list[list[Fraction]]:
        return [list(row) for row in self.basis]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lattice)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in row) + ")" for row in self.basis)
        return f"Lattice[{rows}]"


def lattice_coordinates(vector, lat: Lattice):
    """Coordinates of vector in the canonical basis of lat (always solvable:
    the basis spans Q^n).  Returns a tuple of Fractions."""
    v = [Fraction(x) for x in vector]
    if len(v) != lat.ambient_dim:
        raise ValueError("vector length does not match ambient_dim")
    n = lat.ambient_dim
    b = lat.basis
    coords = [Fraction(0)] * n
    # The canonical basis is upper triangular, so solve column by column.
    for j in range(n):
        coords[j] = (v[j] - sum(coords[k] * b[k][j] for k in range(j))) / b[j][j]
    for j in range(n):
        if sum(coords[k] * b[k][j] for k in range(n)) != v[j]:
            raise ArithmeticError("triangular solve failed")
    return tuple(coords)


def lattice_member(vector, lat: Lattice) -> bool:
    """Exact test: is vector an integer combination of the basis of lat?"""
    return all(c.denominator == 1 for c in lattice_coordinates(vector, lat))


def dual_lattice(lat: Lattice, pairing) -> Lattice:
    """Dual lattice {y : x^T P y integer for every x in lat}.

    Args:
        lat: full-rank lattice.
        pairing: square rational matrix P defining the perfect bilinear form
            pairing(x, y) = x^T P y.  Must be invertible.
    """
    p = [[Fraction(x) for x in row] for row in pairing]
    bp = mat_mul(lat.basis_matrix(), p)
    inv = mat_inv(bp)  # raises on degenerate pairing
    return Lattice(transpose(inv))


def quotient_invariants(big: Lattice, small: Lattice) -> tuple[int, ...]:
    """Invariant factors of the finite group big/small.

    Returns the diagonal of the Smith form of the coordinate matrix of the
    small basis in the big basis, with unit entries dropped; the remaining
    entries each divide the next.

    Raises:
        ValueError: if small is not contained in big.
    """
    coeffs = []
    for row in small.basis:
        coords = lattice_coordinates(row, big)
        if any(c.denominator != 1 for c in coords):
            raise ValueError("small lattice is not contained in big lattice")
        coeffs.append([int(c) for c in coords])
    _, diag, _ = smith_normal_form(coeffs)
    factors = [diag[i][i] for i in range(len(coeffs))]
    if any(f == 0 for f in factors):
        raise ArithmeticError("quotient is not finite")
    return tuple(f for f in factors if f > 1)


def congruence_kernel(mat, modulus: int) -> Lattice:
    """The full-rank lattice {x in Z^n : mat @ x ≡ 0 mod modulus}.

    mat is an integer matrix with n columns acting on column vectors.
    """
    if modulus < 1:
        raise ValueError("modulus must be a positive integer")
    m = len(mat)
    n = len(mat[0])
    _, diag, v = smith_normal_form(mat)
    rows = []
    for i in range(n):
        d = diag[i][i] if i < min(m, n) else 0
        mult = modulus // gcd(d, modulus)
        rows.append(tuple(mult * v[k][i] for k in range(n)))
    return Lattice(rows)


def lattice_index(big: Lattice, small: Lattice) -> int:
    """Index [big : small], the order of big/small."""
    coeffs = []
    for row in small.basis:
        coords = lattice_coordinates(row, big)
        if any(c.denominator != 1 for c in coords):
            raise ValueError("small lattice is not contained in big lattice")
        coeffs.append([int(c) for c in coords])
    return abs(det_int(coeffs))
