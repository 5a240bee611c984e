"""Subsystem stabilizer codes: tower, parameters, CSS structure, distances.

A code is a subspace H of F_p^{2n} (the gauge group modulo phases). Its
parameters come from the tower 0 <= H cap H^w <= H <= H + H^w <= F_p^{2n},
and the distance is the minimum symplectic weight over (H + H^w) \ H,
found by a weight-increasing exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator

import numpy as np

from .gf import Subspace, validate_prime
from .pauli import PauliVector, flatten, omega_complement, unflatten


class NoLogicalOperators(Exception):
    """Raised when the distance search set (H + H^w) \\ H is empty (k = 0)."""


@dataclass(frozen=True)
class DistanceResult:
    """Either an exact distance or the lower bound left by a budget cap."""

    value: int
    exact: bool

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


@dataclass(frozen=True)
class CssSplit:
    """The two classical codes H_X, H_Z <= F_p^n of a subsystem CSS code."""

    h_x: Subspace
    h_z: Subspace

    def __post_init__(self):
        if self.h_x.p != self.h_z.p or self.h_x.ambient != self.h_z.ambient:
            raise ValueError("H_X and H_Z must live in the same F_p^n")

    @property
    def p(self) -> int:
        return self.h_x.p

    @property
    def n(self) -> int:
        return self.h_x.ambient


class SubsystemCode:
    """Immutable code object with lazily memoized tower and parameters."""

    def __init__(self, p: int, n: int, gauge: Subspace):
        validate_prime(p)
        if gauge.p != p or gauge.ambient != 2 * n:
            raise ValueError("gauge subspace must live in F_p^{2n}")
        self.p = p
        self.n = n
        self.gauge = gauge

    @classmethod
    def from_generators(cls, p: int, n: int, gens: Iterable[PauliVector]) -> "SubsystemCode":
        """Build from Pauli generators (dependence and redundancy allowed)."""
        rows = []
        for g in gens:
            if g.p != p or g.n != n:
                raise ValueError("generator has mismatched modulus or length")
            rows.append(flatten(g))
        mat = np.array(rows, dtype=np.int64).reshape(-1, 2 * n)
        return cls(p, n, Subspace.span(mat, p, 2 * n))

    @classmethod
    def from_css_split(cls, split: CssSplit) -> "SubsystemCode":
        n = split.n
        rows = []
        for a in split.h_x.basis:
            rows.append(np.concatenate([a, np.zeros(n, dtype=np.int64)]))
        for b in split.h_z.basis:
            rows.append(np.concatenate([np.zeros(n, dtype=np.int64), b]))
        mat = np.array(rows, dtype=np.int64).reshape(-1, 2 * n)
        return cls(split.p, n, Subspace.span(mat, split.p, 2 * n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsystemCode):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self.gauge == other.gauge

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.gauge))

    def __repr__(self) -> str:
        n, k, r = self.parameters()
        return f"SubsystemCode(p={self.p}, [[{n},{k},{r}]])"

    # Tower -----------------------------------------------------------------

    @cached_property
    def centralizer(self) -> Subspace:
        """H + H^w: all logical (commuting-with-stabilizer) operators."""
        return self.gauge + omega_complement(self.gauge)

    @cached_property
    def stabilizer(self) -> Subspace:
        """H cap H^w: the stabilizer group modulo phases."""
        return self.gauge.intersect(omega_complement(self.gauge))

    def parameters(self) -> tuple[int, int, int]:
        """(n, k, r): physical, logical, and gauge qudit counts."""
        two_k = self.centralizer.dim - self.gauge.dim
        two_r = self.gauge.dim - self.stabilizer.dim
        if two_k % 2 or two_r % 2:
            raise AssertionError("tower dimensions must be even")
        return self.n, two_k // 2, two_r // 2

    # CSS structure ---------------------------------------------------------

    @cached_property
    def _pi_matrices(self) -> tuple[np.ndarray, np.ndarray]:
        """Generator matrices (columns = x-parts / z-parts of basis generators)."""
        basis = self.gauge.basis
        return basis[:, : self.n].T.copy(), basis[:, self.n :].T.copy()

    def is_css(self) -> bool:
        """Kernel-sum criterion: ker pi_X + ker pi_Z = F_p^l."""
        return _is_direct_product(self.gauge, self.n)

    def css_split(self) -> CssSplit:
        """Split H = H_X x H_Z; raises ValueError if the code is not CSS."""
        if not self.is_css():
            raise ValueError("code is not CSS")
        from .gf import kernel

        pi_x, pi_z = self._pi_matrices
        h_x = _image(pi_x, kernel(pi_z, self.p), self.p)
        h_z = _image(pi_z, kernel(pi_x, self.p), self.p)
        return CssSplit(h_x, h_z)

    # Distance --------------------------------------------------------------

    def distance(self, budget: int | None = None) -> DistanceResult:
        """Minimum symplectic weight over (H + H^w) \\ H.

        Weight-increasing exhaustive search; if no witness appears up to
        `budget` (default n), the result is the lower bound budget + 1.
        """
        if self.centralizer == self.gauge:
            raise NoLogicalOperators("H + H^w = H: the code has no logical operators")
        if budget is None:
            budget = self.n
        in_cent = _membership_checker(self.centralizer)
        in_gauge = _membership_checker(self.gauge)
        for w in range(1, budget + 1):
            for batch in _symplectic_weight_batches(self.p, self.n, w):
                hits = in_cent(batch) & ~in_gauge(batch)
                if np.any(hits):
                    return DistanceResult(w, True)
        return DistanceResult(budget + 1, False)

    def min_weight_logical(self, budget: int | None = None) -> PauliVector | None:
        """A minimum-symplectic-weight element of (H + H^w) \\ H, if found."""
        if budget is None:
            budget = self.n
        in_cent = _membership_checker(self.centralizer)
        in_gauge = _membership_checker(self.gauge)
        for w in range(1, budget + 1):
            for batch in _symplectic_weight_batches(self.p, self.n, w):
                hits = in_cent(batch) & ~in_gauge(batch)
                if np.any(hits):
                    return unflatten(batch[np.nonzero(hits)[0][0]], self.p)
        return None


def css_distances(split: CssSplit, budget: int | None = None) -> tuple[
    DistanceResult, DistanceResult, DistanceResult
]:
    """(d_X, d_Z, d) of a CSS split via single-block weight-increasing search."""
    d_x = _classical_coset_distance(split.h_x + split.h_z.complement(), split.h_x, budget)
    d_z = _classical_coset_distance(split.h_z + split.h_x.complement(), split.h_z, budget)
    if d_x.exact and d_z.exact:
        d = DistanceResult(min(d_x.value, d_z.value), True)
    else:
        d = DistanceResult(min(d_x.value, d_z.value), False)
    return d_x, d_z, d


def _classical_coset_distance(
    big: Subspace, small: Subspace, budget: int | None = None
) -> DistanceResult:
    """min wt(big \\ small) by weight-increasing search; bound if capped."""
    if big == small:
        raise NoLogicalOperators("no logical operators on this side")
    n = big.ambient
    if budget is None:
        budget = n
    in_big = _membership_checker(big)
    in_small = _membership_checker(small)
    for w in range(1, budget + 1):
        for batch in _hamming_weight_batches(big.p, n, w):
            hits = in_big(batch) & ~in_small(batch)
            if np.any(hits):
                return DistanceResult(w, True)
    return DistanceResult(budget + 1, False)


# Search plumbing -----------------------------------------------------------

_BATCH_ROWS = 1 << 14


def _membership_checker(space: Subspace):
    """Vectorized membership test: v in space iff C v = 0 for C = basis of space^theta."""
    comp = space.complement().basis
    p = space.p
    if comp.shape[0] == 0:
        return lambda batch: np.ones(batch.shape[0], dtype=bool)
    return lambda batch: ~np.any((batch @ comp.T) % p, axis=1)


def _site_values(p: int) -> np.ndarray:
    """The p^2 - 1 nontrivial (x, z) single-site values, lexicographic."""
    vals = [(i, j) for i in range(p) for j in range(p) if (i, j) != (0, 0)]
    return np.array(vals, dtype=np.int64)


def _symplectic_weight_batches(p: int, n: int, w: int) -> Iterator[np.ndarray]:
    """Flattened F_p^{2n} vectors of symplectic weight exactly w, in batches.

    Deterministic order: sites lexicographic, then site values lexicographic.
    """
    vals = _site_values(p)
    m = len(vals)
    rows: list[np.ndarray] = []
    for sites in combinations(range(n), w):
        idx = np.array(list(product(range(m), repeat=w)), dtype=np.int64)
        block = np.zeros((idx.shape[0], 2 * n), dtype=np.int64)
        for pos, site in enumerate(sites):
            block[:, site] = vals[idx[:, pos], 0]
            block[:, n + site] = vals[idx[:, pos], 1]
        rows.append(block)
        if sum(b.shape[0] for b in rows) >= _BATCH_ROWS:
            yield np.vstack(rows)
            rows = []
    if rows:
        yield np.vstack(rows)


def _hamming_weight_batches(p: int, n: int, w: int) -> Iterator[np.ndarray]:
    """F_p^n vectors of Hamming weight exactly w, in deterministic batches."""
    vals = np.arange(1, p, dtype=np.int64)
    rows: list[np.ndarray] = []
    for sites in combinations(range(n), w):
        idx = np.array(list(product(range(p - 1), repeat=w)), dtype=np.int64)
        block = np.zeros((idx.shape[0], n), dtype=np.int64)
        for pos, site in enumerate(sites):
            block[:, site] = vals[idx[:, pos]]
        rows.append(block)
        if sum(b.shape[0] for b in rows) >= _BATCH_ROWS:
            yield np.vstack(rows)
            rows = []
    if rows:
        yield np.vstack(rows)


def _image(mat: np.ndarray, domain: Subspace, p: int) -> Subspace:
    """Image of a subspace of the column domain under a matrix."""
    if domain.dim == 0:
        return Subspace.zero(p, mat.shape[0])
    rows = (domain.basis @ mat.T) % p
    return Subspace.span(rows, p, mat.shape[0])


def _is_direct_product(h: Subspace, n: int) -> bool:
    """Whether a subspace of F_p^{2n} splits as H_X x H_Z (kernel-sum test)."""
    from .gf import kernel

    basis = h.basis
    if basis.shape[0] == 0:
        return True
    pi_x = basis[:, :n].T
    pi_z = basis[:, n:].T
    ksum = kernel(pi_x, h.p) + kernel(pi_z, h.p)
    return ksum.dim == basis.shape[0]
