"""Exact rational linear algebra on the weight-graded {0,1}-word basis.

Relation bodies of a fixed weight k live in the 2**(k-2)-dimensional space
spanned by the weight-k words 1...0 (canonical order).  Rank and span
membership are computed over the rationals with no floating point anywhere:
vectors are cleared to primitive integer form and eliminated fraction-free,
pivoting on the leftmost nonzero entry with first-come row preference, so
echelon bases are reproducible bit for bit.

The conjectural dimension table d_k (d_k = d_{k-2} + d_{k-3}, starting
1, 0, 1) is computed on demand; ranks of confluence generators match
2**(k-2) - d_k at every desk-checkable weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .algebra import NCPoly
from .words import a0_words, render_word, weight


@lru_cache(maxsize=None)
def a0_basis(k: int) -> tuple[int, ...]:
    """Weight-k basis words in canonical order; dimension 2**(k-2) for k >= 2,
    one for k = 0, zero for k = 1."""
    return tuple(a0_words(k))


@dataclass(frozen=True)
class RelVector:
    """Coordinates of a homogeneous {0,1}-word polynomial on its weight basis."""

    weight: int
    entries: tuple

    def is_zero(self) -> bool:
        return not any(self.entries)


def to_vector(p: NCPoly, k: int) -> RelVector:
    """Coordinates of ``p`` in the weight-k word basis.

    Raises ValueError on words outside the basis (wrong weight or not of the
    1...0 over {0,1} shape); the zero polynomial is fine at any weight.
    """
    basis = a0_basis(k)
    index = {w: i for i, w in enumerate(basis)}
    entries = [0] * len(basis)
    for w, c in p.terms.items():
        try:
            entries[index[w]] = c
        except KeyError:
            raise ValueError(
                f"word {render_word(w) or '1'!r} is not a weight-{k} basis word"
            ) from None
    return RelVector(k, tuple(entries))


def from_vector(v: RelVector) -> NCPoly:
    basis = a0_basis(v.weight)
    return NCPoly({w: c for w, c in zip(basis, v.entries) if c})


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x:
            if x < 0:
                vec = [-y for y in vec]
            break
    return vec


def _clear_denominators(entries) -> list[int]:
    lcm = 1
    for x in entries:
        if isinstance(x, Fraction):
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
    return [int(x * lcm) for x in entries]


class EchelonBasis:
    """A reduced row-echelon family over the weight-k word basis.

    ``rows`` are monic rational vectors with strictly increasing pivot
    columns, pairwise reduced.  Supports exact membership queries.
    """

    def __init__(self, k: int, rows: list[tuple], pivots: list[int]):
        self.weight = k
        self.rows = rows
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, entries) -> tuple:
        """Fully reduce a coordinate vector against the basis."""
        vec = list(entries)
        for row, j in zip(self.rows, self.pivots):
            c = vec[j]
            if c:
                for i in range(j, len(vec)):
                    vec[i] -= c * row[i]
        return tuple(vec)

    def contains(self, v) -> bool:
        entries = v.entries if isinstance(v, RelVector) else v
        return not any(self.reduce(entries))


def rank(vectors, k: int | None = None) -> tuple[int, EchelonBasis]:
    """Exact rank of a family of same-weight vectors, with its echelon basis.

    Deterministic: vectors are inserted in the given order and pivots are
    leftmost-first.  For an empty family pass the weight explicitly or
    accept an empty basis of weight -1.
    """
    vectors = list(vectors)
    if k is None:
        k = vectors[0].weight if vectors else -1
    rows: list[list[int]] = []  # primitive integer rows
    pivots: list[int] = []
    for v in vectors:
        if v.weight != k:
            raise ValueError(f"mixed weights: expected {k}, got {v.weight}")
        vec = _clear_denominators(v.entries)
        for row, j in zip(rows, pivots):
            c = vec[j]
            if c:
                p = row[j]
                vec = [a * p - b * c for a, b in zip(vec, row)]
        if any(vec):
            vec = _primitive(vec)
            j = next(i for i, x in enumerate(vec) if x)
            at = next((i for i, pj in enumerate(pivots) if pj > j), len(pivots))
            rows.insert(at, vec)
            pivots.insert(at, j)
    # back-reduce and make monic
    for i in range(len(rows) - 1, -1, -1):
        for t in range(i):
            c = rows[t][pivots[i]]
            if c:
                p = rows[i][pivots[i]]
                rows[t] = _primitive([a * p - b * c for a, b in zip(rows[t], rows[i])])
    monic = [
        tuple(Fraction(x, row[j]) if row[j] != 1 else x for x in row)
        for row, j in zip(rows, pivots)
    ]
    return len(monic), EchelonBasis(k, monic, pivots)


def in_span(p, basis: EchelonBasis) -> bool:
    """True iff the polynomial/vector reduces to zero against the basis."""
    if isinstance(p, RelVector):
        if p.weight != basis.weight:
            raise ValueError(f"weight mismatch: {p.weight} vs basis {basis.weight}")
        return basis.contains(p)
    if isinstance(p, NCPoly):
        if not p:
            return True
        kw = p.homogeneous_weight()
        if kw is None or kw != basis.weight:
            raise ValueError(
                f"polynomial weight {kw} does not match basis weight {basis.weight}"
            )
        return basis.contains(to_vector(p, basis.weight))
    raise TypeError("expected an NCPoly or RelVector")


@lru_cache(maxsize=None)
def conjectural_dimension(k: int) -> int:
    """The conjectural dimension d_k of the weight-k value space:
    d_k = d_{k-2} + d_{k-3} with d_0, d_1, d_2 = 1, 0, 1."""
    if k < 0:
        raise ValueError("weight must be nonnegative")
    if k == 0 or k == 2:
        return 1
    if k == 1:
        return 0
    return conjectural_dimension(k - 2) + conjectural_dimension(k - 3)


def expected_relation_rank(k: int) -> int:
    """Relation count a full family should have at weight k if the
    conjectural dimension is right: 2**(k-2) - d_k."""
    if k < 2:
        raise ValueError("weight must be >= 2")
    return 2 ** (k - 2) - conjectural_dimension(k)
