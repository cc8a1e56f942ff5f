"""
Column matroids of parity-check matrices.

Ground-set elements are the 1-based column indices.  Subsets cross the
public API as frozensets and are handled internally as bitmasks (bit j-1
stands for element j).
"""

from __future__ import annotations

import itertools
import threading

from .errors import DimOutOfRange, FreeMatroid, GroundSetTooLarge, IndexOutOfRange
from .exactla import Mat, column_subset_rank
from .code import WeightHierarchy

DEFAULT_MAX_N = 24


def to_mask(sigma, n) -> int:
    mask = 0
    for e in sigma:
        e = int(e)
        if not 1 <= e <= n:
            raise IndexOutOfRange(f"element {e} outside 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def from_mask(mask) -> frozenset:
    out, j = [], 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def _bits(mask):
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


def _popcount(mask):
    return bin(mask).count("1")


class Matroid:
    """Matroid of linear dependencies among the columns of ``columns``."""

    def __init__(self, columns: Mat):
        self.columns = columns
        self.field = columns.field
        self.n = columns.cols
        self._lock = threading.Lock()
        self._circuits = None
        self._rank_cache = {}
        f = self.field
        cols = columns.array.T.tolist()
        if f.q == 2:
            self._vecs = [sum(v << r for r, v in enumerate(col)) for col in cols]
        else:
            self._vecs = cols
        self.rank_total = self.rank_mask((1 << self.n) - 1)

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank_total})"

    # -- rank oracle ---------------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = self._rank_gf2(mask) if self.field.q == 2 else self._rank_generic(mask)
            self._rank_cache[mask] = r
        return r

    def _rank_gf2(self, mask):
        basis = []
        for j in _bits(mask):
            v = self._vecs[j]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)

    def _rank_generic(self, mask):
        f = self.field
        basis = {}  # pivot position -> vector normalized to 1 at the pivot, zero before it
        for j in _bits(mask):
            v = list(self._vecs[j])
            for piv in sorted(basis):
                c = v[piv]
                if c:
                    b = basis[piv]
                    v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, b)]
            lead = next((t for t, x in enumerate(v) if x), None)
            if lead is not None:
                s = f.inv(v[lead])
                basis[lead] = [f.mul(s, x) for x in v]
        return len(basis)

    def nullity_mask(self, mask: int) -> int:
        return _popcount(mask) - self.rank_mask(mask)

    def is_independent(self, sigma) -> bool:
        mask = to_mask(sigma, self.n)
        return self.rank_mask(mask) == _popcount(mask)

    def _check_size(self, max_n):
        if self.n > max_n:
            raise GroundSetTooLarge(f"ground set of size {self.n} exceeds cap {max_n}")

    # -- circuits --------------------------------------------------------------

    def circuit_masks(self, max_n=DEFAULT_MAX_N):
        if self._circuits is None:
            self._check_size(max_n)
            with self._lock:
                if self._circuits is None:
                    self._circuits = tuple(self._sweep_circuits())
        return self._circuits

    def _sweep_circuits(self):
        found = []
        for size in range(1, min(self.n, self.rank_total + 1) + 1):
            new = []
            for combo in itertools.combinations(range(self.n), size):
                mask = 0
                for j in combo:
                    mask |= 1 << j
                if any(c & mask == c for c in found):
                    continue
                # all proper subsets are independent here, so dependent means circuit
                if self.rank_mask(mask) < size:
                    new.append(mask)
            found.extend(new)
        return found


def from_parity_check(h: Mat) -> Matroid:
    return Matroid(h)


def rank(m: Matroid, sigma) -> int:
    return m.rank_mask(to_mask(sigma, m.n))


def nullity(m: Matroid, sigma) -> int:
    return m.nullity_mask(to_mask(sigma, m.n))


def column_rank(m: Matroid, sigma) -> int:
    """Rank of sigma straight from the representing matrix."""
    return column_subset_rank(m.columns, sigma)


def bases(m: Matroid) -> set:
    out = set()
    for combo in itertools.combinations(range(1, m.n + 1), m.rank_total):
        if m.rank_mask(to_mask(combo, m.n)) == m.rank_total:
            out.add(frozenset(combo))
    return out


def circuits(m: Matroid, max_n=DEFAULT_MAX_N) -> set:
    return {from_mask(c) for c in m.circuit_masks(max_n)}


def n_set_masks(m: Matroid, i: int, max_n=DEFAULT_MAX_N):
    """Inclusion-minimal subsets of nullity exactly i, as bitmasks."""
    if not 0 <= i <= m.n - m.rank_total:
        raise DimOutOfRange(f"level {i} outside 0..{m.n - m.rank_total}")
    if i == 0:
        return [0]
    circs = m.circuit_masks(max_n)
    level = set(circs)
    for j in range(2, i + 1):
        nxt = set()
        for u in level:
            for c in circs:
                if c & u != c:
                    v = u | c
                    if v not in nxt and m.nullity_mask(v) == j:
                        nxt.add(v)
        level = nxt
    ordered = sorted(level, key=_popcount)
    minimal = []
    for s in ordered:
        if not any(t & s == t for t in minimal):
            minimal.append(s)
    return sorted(minimal, key=lambda s: (_popcount(s), sorted(from_mask(s))))


def n_sets(m: Matroid, i: int, max_n=DEFAULT_MAX_N) -> set:
    return {from_mask(s) for s in n_set_masks(m, i, max_n)}


def matroid_weights(m: Matroid, max_n=DEFAULT_MAX_N) -> WeightHierarchy:
    deficit = m.n - m.rank_total
    if deficit < 1:
        raise FreeMatroid("every subset is independent; no higher weights")
    return WeightHierarchy(
        min(_popcount(s) for s in n_set_masks(m, i, max_n)) for i in range(1, deficit + 1)
    )


def restriction(m: Matroid, sigma) -> Matroid:
    """Matroid on the columns in sigma, relabeled 1..#sigma in increasing order."""
    idx = sorted(from_mask(to_mask(sigma, m.n)))
    return Matroid(m.columns.columns(idx))
