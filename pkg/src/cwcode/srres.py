"""
Betti numbers of the Stanley-Reisner ring of a matroid's independence complex.

Multigraded Betti numbers come from Hochster's formula,
beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta|_sigma), evaluated only on the
inclusion-minimal sets of nullity i (the only places they can be nonzero for
a matroid).  Reduced homology is computed from boundary-matrix ranks over a
chosen finite field.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import GroundSetTooLarge, ImpureTable, NonIntegralDegree, OutOfRange
from .exactla import rank as mat_rank
from .exactla import Mat
from .gfield import Field, field_new

DEFAULT_MAX_N = 24


# -- q-binomials -----------------------------------------------------------------

def _f(n, q):
    out = 1
    for i in range(1, n + 1):
        out *= q ** i - 1
    return out


def gauss_binomial(k: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of GF(q)^k."""
    if not 0 <= i <= k:
        raise OutOfRange(f"need 0 <= i <= k, got i={i}, k={k}")
    num, den = _f(k, q), _f(i, q) * _f(k - i, q)
    assert num % den == 0
    return num // den


def gauss_identity_residual(k: int, q: int) -> int:
    lhs = sum(
        (-1) ** (k + i - 1) * gauss_binomial(k, i, q) * q ** (i * (i - 1) // 2)
        for i in range(k)
    )
    return lhs - q ** (k * (k - 1) // 2)


# -- simplicial complexes and homology -----------------------------------------------

class SimplicialComplexView:
    """A simplicial complex on {1..s} given by a face-membership oracle.

    ``is_face`` receives a sorted tuple of 0-based vertices.  ``max_face_size``
    bounds the face sizes worth enumerating (faces above it are assumed absent).
    """

    def __init__(self, size, is_face, max_face_size=None):
        self.size = size
        self.is_face = is_face
        self.max_face_size = size if max_face_size is None else max_face_size

    @classmethod
    def from_faces(cls, size, faces):
        """Downward closure of ``faces`` (1-based vertex sets); ``faces=[]`` is the void complex."""
        closed = set()
        for face in faces:
            face = sorted(v - 1 for v in face)
            for r in range(len(face) + 1):
                closed.update(itertools.combinations(face, r))
        return cls(size, lambda t: t in closed)

    @classmethod
    def independence_complex(cls, matroid, sigma_mask=None):
        """Independent sets of ``matroid`` restricted to sigma (all elements by default)."""
        if sigma_mask is None:
            sigma_mask = (1 << matroid.n) - 1
        elems = [j for j in range(matroid.n) if sigma_mask >> j & 1]

        def is_face(t):
            mask = 0
            for v in t:
                mask |= 1 << elems[v]
            return matroid.rank_mask(mask) == len(t)

        return cls(len(elems), is_face, matroid.rank_mask(sigma_mask))

    def faces(self, size):
        if size < 0 or size > self.max_face_size:
            return []
        return [t for t in itertools.combinations(range(self.size), size) if self.is_face(t)]


def _boundary_rank(upper, lower, field: Field):
    """Rank of the boundary map from faces ``upper`` (size s) to faces ``lower`` (size s-1)."""
    if not upper or not lower:
        return 0
    index = {f: r for r, f in enumerate(lower)}
    a = np.zeros((len(lower), len(upper)), dtype=np.int64)
    minus_one = field.neg(1)
    for c, face in enumerate(upper):
        for pos in range(len(face)):
            a[index[face[:pos] + face[pos + 1:]], c] = 1 if pos % 2 == 0 else minus_one
    return mat_rank(Mat(field, a))


def reduced_homology_dim(cx: SimplicialComplexView, j: int, field: Field = None, max_n=DEFAULT_MAX_N) -> int:
    """dim of the j-th reduced homology of ``cx`` over ``field`` (GF(2) by default)."""
    if cx.size > max_n:
        raise GroundSetTooLarge(f"ground set of size {cx.size} exceeds cap {max_n}")
    field = field or field_new(2)
    if j < -1:
        return 0
    below = cx.faces(j)      # dimension j-1
    here = cx.faces(j + 1)   # dimension j
    if not here:
        return 0
    above = cx.faces(j + 2)  # dimension j+1
    return len(here) - _boundary_rank(here, below, field) - _boundary_rank(above, here, field)


def hochster_betti(m, i: int, sigma, field: Field = None, max_n=DEFAULT_MAX_N) -> int:
    """beta_{i,sigma} of the matroid's Stanley-Reisner ring."""
    from .matroid import to_mask

    mask = sigma if isinstance(sigma, int) else to_mask(sigma, m.n)
    size = bin(mask).count("1")
    cx = SimplicialComplexView.independence_complex(m, mask)
    return reduced_homology_dim(cx, size - i - 1, field, max_n)


# -- Betti tables ------------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers keyed by (homological degree, subset)."""

    entries: dict
    n: int
    k: int = None
    q: int = None

    def __post_init__(self):
        assert self.entries.get((0, frozenset())) == 1

    def n_graded(self):
        return project_n_graded(self)

    def ungraded(self):
        return project_ungraded(self)

    def length(self):
        return max(i for i, _ in self.entries)

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], len(kv[0][1]), sorted(kv[0][1])))


def betti_table(m, field: Field = None, max_n=DEFAULT_MAX_N, k=None, q=None) -> BettiTable:
    from .matroid import from_mask, n_set_masks

    if m.n > max_n:
        raise GroundSetTooLarge(f"ground set of size {m.n} exceeds cap {max_n}")
    field = field or field_new(2)
    entries = {(0, frozenset()): 1}
    for i in range(1, m.n - m.rank_total + 1):
        for mask in n_set_masks(m, i, max_n):
            b = hochster_betti(m, i, mask, field, max_n)
            if b:
                entries[(i, from_mask(mask))] = b
    return BettiTable(entries, m.n, k, q)


def project_n_graded(t: BettiTable) -> dict:
    """{(i, d): beta_{i,d}} for homological degrees i >= 1."""
    out = Counter()
    for (i, sigma), b in t.entries.items():
        if i:
            out[(i, len(sigma))] += b
    return dict(sorted(out.items()))


def project_ungraded(t: BettiTable) -> dict:
    """{i: beta_i} for homological degrees i >= 1."""
    out = Counter()
    for (i, _), b in t.entries.items():
        if i:
            out[i] += b
    return dict(sorted(out.items()))


def ungraded_sequence(t: BettiTable) -> list:
    """(beta_0, beta_1, ..., beta_l) including the free module P_0 = S."""
    ug = project_ungraded(t)
    return [1] + [ug.get(i, 0) for i in range(1, max(ug, default=0) + 1)]


# -- resolution summaries ------------------------------------------------------------

@dataclass(frozen=True)
class ResolutionSummary:
    """Twist/multiplicity terms per homological degree 1..l of a graded resolution."""

    terms: tuple = dc_field(default=())

    @classmethod
    def from_n_graded(cls, graded):
        by_degree = {}
        for (i, d), b in graded.items():
            by_degree.setdefault(i, []).append((d, b))
        length = max(by_degree, default=0)
        return cls(tuple(tuple(sorted(by_degree.get(i, []))) for i in range(1, length + 1)))

    @property
    def pure(self):
        return all(len(t) == 1 for t in self.terms)

    @property
    def linear(self):
        if not self.pure:
            return False
        twists = [t[0][0] for t in self.terms]
        return all(b - a == 1 for a, b in zip(twists, twists[1:]))

    def as_n_graded(self):
        return {(i, d): b for i, term in enumerate(self.terms, start=1) for d, b in term}

    def __str__(self):
        parts = ["0", "R(C)", "S"]
        for term in self.terms:
            parts.append(" (+) ".join(f"S(-{d})^{b}" for d, b in term))
        parts.append("0")
        return " <- ".join(parts)


def resolution_summary(t: BettiTable) -> ResolutionSummary:
    return ResolutionSummary.from_n_graded(project_n_graded(t))


def predicted_twists(k: int, q: int, d: int) -> list:
    out = []
    for i in range(1, k + 1):
        num, den = d * (q ** i - 1), q ** (i - 1) * (q - 1)
        if num % den:
            raise NonIntegralDegree(f"d_{i} = {num}/{den} is not an integer")
        out.append(num // den)
    return out


def predict_cw_resolution(k: int, q: int, d: int) -> ResolutionSummary:
    """Graded resolution shape for a constant weight code of dimension k and weight d."""
    if k < 1:
        raise OutOfRange("k must be at least 1")
    twists = predicted_twists(k, q, d)
    return ResolutionSummary(tuple(
        ((twists[i - 1], gauss_binomial(k, i, q) * q ** (i * (i - 1) // 2)),)
        for i in range(1, k + 1)
    ))


def first_betti_cw_test(t: BettiTable, k: int, q: int):
    """Weight d if degree 1 is S(-d)^{[k 1]_q}, else None."""
    first = {d: b for (i, d), b in project_n_graded(t).items() if i == 1}
    if len(first) != 1:
        return None
    (d, b), = first.items()
    return d if b == gauss_binomial(k, 1, q) else None


def verify_alternating_sum(t: BettiTable, top_degree: int) -> int:
    """Alternating sum of Betti numbers over subsets of the top support; zero when consistent."""
    if not resolution_summary(t).pure:
        raise ImpureTable("alternating-sum check needs a pure resolution")
    top = frozenset().union(*(s for _, s in t.entries))
    if len(top) != top_degree:
        raise ImpureTable(f"table support has size {len(top)}, expected {top_degree}")
    return sum((-1) ** i * b for (i, sigma), b in t.entries.items() if sigma <= top)
