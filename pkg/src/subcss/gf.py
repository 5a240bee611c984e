"""Exact linear algebra over a prime field F_p.

Everything downstream is built on two primitives: reduced row echelon
form (the canonical form for all subspace bases) and kernel computation.
Subspaces are always stored canonically, so equality of subspaces is
entry-for-entry equality of their basis matrices.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

import numpy as np


def is_prime(p: int) -> bool:
    """Trial-division primality test (moduli here are tiny)."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def validate_prime(p: int) -> int:
    """Return p if prime, else raise ValueError (composite moduli unsupported)."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


def fp_array(data, p: int) -> np.ndarray:
    """Coerce data to an int64 numpy array with entries reduced mod p."""
    return np.asarray(data, dtype=np.int64) % p


def rref(mat, p: int) -> np.ndarray:
    """Reduced row echelon form over F_p.

    Row space is preserved; pivots are 1 with zeros elsewhere in their
    columns; zero rows sink to the bottom. Deterministic.
    """
    m = fp_array(mat, p).copy()
    if m.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    n_rows, n_cols = m.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % p
        r += 1
    return m


def pivot_columns(rref_mat: np.ndarray) -> list[int]:
    """Pivot column indices of a matrix already in RREF."""
    pivots = []
    for row in rref_mat:
        nz = np.nonzero(row)[0]
        if nz.size:
            pivots.append(int(nz[0]))
    return pivots


def rank(mat, p: int) -> int:
    return len(pivot_columns(rref(mat, p)))


def kernel(mat, p: int) -> "Subspace":
    """Right kernel {v : mat @ v = 0 mod p} as a canonical Subspace."""
    m = fp_array(mat, p)
    n_cols = m.shape[1]
    red = rref(m, p)
    pivots = pivot_columns(red)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[i, pc] = (-red[row_idx, fc]) % p
    return Subspace.span(basis, p, n_cols)


def solve(mat, rhs, p: int) -> np.ndarray | None:
    """One particular solution of mat @ v = rhs mod p, or None if inconsistent."""
    m = fp_array(mat, p)
    b = fp_array(rhs, p)
    aug = rref(np.hstack([m, b.reshape(-1, 1)]), p)
    n_cols = m.shape[1]
    v = np.zeros(n_cols, dtype=np.int64)
    for row in aug:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        if nz[0] == n_cols:
            return None
        v[nz[0]] = row[n_cols]
    return v


class Subspace:
    """A subspace of F_p^m held as a canonical (RREF, no zero rows) basis.

    Canonicity means two Subspace values are equal as sets iff their
    basis matrices are identical, which makes equality, hashing, and all
    downstream structure tests exact and cheap.
    """

    __slots__ = ("p", "ambient", "basis", "__dict__")

    def __init__(self, p: int, ambient: int, basis: np.ndarray):
        # Internal: basis must already be canonical. Use span() to build.
        self.p = p
        self.ambient = ambient
        basis = np.ascontiguousarray(basis, dtype=np.int64)
        basis.setflags(write=False)
        self.basis = basis

    @classmethod
    def span(cls, rows, p: int, ambient: int) -> "Subspace":
        """Subspace spanned by the given row vectors (may be dependent)."""
        validate_prime(p)
        rows = fp_array(rows, p)
        if rows.size == 0:
            rows = rows.reshape(0, ambient)
        if rows.ndim != 2 or rows.shape[1] != ambient:
            raise ValueError(f"rows must have length {ambient}")
        red = rref(rows, p)
        nonzero = red[np.any(red != 0, axis=1)]
        return cls(p, ambient, nonzero)

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        return cls.span(np.zeros((0, ambient), dtype=np.int64), p, ambient)

    @classmethod
    def full(cls, p: int, ambient: int) -> "Subspace":
        return cls.span(np.eye(ambient, dtype=np.int64), p, ambient)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @cached_property
    def _pivots(self) -> tuple[int, ...]:
        return tuple(pivot_columns(self.basis))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, ambient={self.ambient}, dim={self.dim})"

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def reduce(self, v) -> np.ndarray:
        """Residue of v after eliminating the pivot coordinates.

        The residue is zero iff v is a member; its support lies entirely
        on non-pivot columns, so it doubles as the coordinate vector of
        v's coset in the standard-basis quotient.
        """
        v = fp_array(v, self.p)
        if v.shape != (self.ambient,):
            raise ValueError(f"vector must have length {self.ambient}")
        coeffs = v[list(self._pivots)] if self._pivots else np.zeros(0, dtype=np.int64)
        return (v - coeffs @ self.basis) % self.p

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.p, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        # (A cap B) = (A^theta + B^theta)^theta, all exact over F_p.
        self._check_compatible(other)
        return (self.complement() + other.complement()).complement()

    def complement(self) -> "Subspace":
        """Dot-product (theta) complement {a : a . self = 0}."""
        return kernel(self.basis, self.p)

    def quotient_reps(self, small: "Subspace") -> list[np.ndarray]:
        """Vectors whose cosets form a basis of self/small (deterministic).

        Greedy scan of this subspace's canonical basis rows.
        """
        self._check_compatible(small)
        if not self.contains_space(small):
            raise ValueError("quotient_reps: denominator is not a subspace of numerator")
        reps: list[np.ndarray] = []
        span = small
        for row in self.basis:
            if not span.contains(row):
                reps.append(row.copy())
                span = span + Subspace.span(row.reshape(1, -1), self.p, self.ambient)
        return reps

    def all_elements(self) -> np.ndarray:
        """All p**dim elements as a matrix; for exhaustive sweeps."""
        if self.dim == 0:
            return np.zeros((1, self.ambient), dtype=np.int64)
        coeffs = np.array(list(product(range(self.p), repeat=self.dim)), dtype=np.int64)
        return (coeffs @ self.basis) % self.p
