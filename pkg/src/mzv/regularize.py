"""Regularization maps: the trailing-e1 shuffle decomposition and the two
suffix-peeling tensor decompositions.

Every map here inverts a shuffle-multiplication isomorphism:

* ``decompose_e1`` writes p in Az1 uniquely as  sum_i  w_i sh e1^i  with
  each w_i admissible; ``reg_shuffle`` keeps the constant piece w_0.
* ``reg_z1`` writes p in Az0 uniquely as  sum  u_i sh v_i  with u_i in AzM2
  and v_i in the {1,z}-letter part of Az0.
* ``reg_zz`` writes p in AzM1 uniquely as  sum  u_i sh ez^k  with u_i in AzM2.

The algorithms peel maximal suffixes: for a word w = u.s (s the maximal
suffix over the allowed letters, u empty or ending in e0), the shuffle
u sh s contains the concatenation u.s exactly once, and every other word of
u sh s has a strictly shorter maximal suffix, so

    w tensor-decomposes as  u (x) s  -  reg(u sh s - u.s)

terminates.  The trailing-e1 decomposition peels one letter at a time and
divides by the multiplicity of the peeled word; that division is the only
place rational coefficients can appear out of integer input.

Results are memoized per word; the tables are safe under concurrent reads
and idempotent duplicate inserts.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import NCPoly, _add_into, _norm, render_poly, require_subspace, shuffle_words
from .words import EMPTY, ONE, Z, render_word, split_suffix, trailing_run

_E1 = (EMPTY << 2) | ONE


class TensorSum:
    """A finite sum  sum_i left_i (x) right_i  in normal form: the right
    factors are distinct single words and the lefts collect all coefficients.

    Internally a ``{right_word: {left_word: coeff}}`` table.
    """

    __slots__ = ("_tbl",)

    def __init__(self, pairs=()):
        tbl: dict = {}
        for left, right in pairs:
            left = left if isinstance(left, NCPoly) else NCPoly.from_word(left)
            rterms = right.terms if isinstance(right, NCPoly) else {right: 1}
            for rw, rc in rterms.items():
                _add_into(tbl.setdefault(rw, {}), left.terms, rc)
        self._tbl = {r: d for r, d in tbl.items() if d}

    @classmethod
    def _raw(cls, tbl: dict) -> "TensorSum":
        t = object.__new__(cls)
        t._tbl = tbl
        return t

    def __bool__(self) -> bool:
        return bool(self._tbl)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSum):
            return NotImplemented
        return self._tbl == other._tbl

    __hash__ = None

    @property
    def pairs(self) -> list[tuple[NCPoly, NCPoly]]:
        """(left, right) pairs with single-word rights, in canonical right order."""
        return [
            (NCPoly._raw(dict(self._tbl[r])), NCPoly._raw({r: 1}))
            for r in sorted(self._tbl)
        ]

    def rights(self) -> list[int]:
        return sorted(self._tbl)

    def component(self, right: int) -> NCPoly:
        """The left factor attached to a single right word (0 if absent)."""
        d = self._tbl.get(right)
        return NCPoly._raw(dict(d)) if d else NCPoly.zero()

    def expand_shuffle(self) -> NCPoly:
        """Multiply the tensor legs back together:  sum_i left_i sh right_i."""
        acc: dict = {}
        for r, lefts in self._tbl.items():
            for lw, lc in lefts.items():
                _add_into(acc, shuffle_words(lw, r), lc)
        return NCPoly._raw(acc)

    def __str__(self) -> str:
        if not self._tbl:
            return "0"
        bits = []
        for r in sorted(self._tbl):
            left = render_poly(NCPoly._raw(self._tbl[r]))
            bits.append(f"({left}) (x) {render_word(r) or '()'}")
        return "  +  ".join(bits)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# trailing-e1 decomposition

_DECOMP: dict[int, tuple] = {}


def _decompose_word(w: int) -> tuple:
    """Components (w_0, w_1, ...) of a single Az1 word, as frozen dicts."""
    hit = _DECOMP.get(w)
    if hit is not None:
        return hit
    if w == EMPTY:
        out = ({EMPTY: 1},)
    elif (w & 3) != ONE:
        out = ({w: 1},)
    else:
        v = w >> 2
        s = trailing_run(v, ONE)
        sh = shuffle_words(v, _E1)  # contains w with multiplicity s + 1
        rest = {u: c for u, c in sh.items() if u != w}
        comp_v = _decompose_word(v)
        comp_rest = _decompose_dict(rest)
        n = max(len(comp_v) + 1, len(comp_rest))
        inv = Fraction(1, s + 1)
        comps = []
        for j in range(n):
            d: dict = {}
            if 1 <= j <= len(comp_v):
                _add_into(d, comp_v[j - 1], j)
            if j < len(comp_rest):
                _add_into(d, comp_rest[j], -1)
            comps.append({u: _norm(c * inv) for u, c in d.items()})
        while len(comps) > 1 and not comps[-1]:
            comps.pop()
        out = tuple(comps)
    _DECOMP[w] = out
    return out


def _decompose_dict(d: dict) -> list[dict]:
    comps: list[dict] = []
    for w, c in d.items():
        for j, comp in enumerate(_decompose_word(w)):
            while len(comps) <= j:
                comps.append({})
            _add_into(comps[j], comp, c)
    while len(comps) > 1 and not comps[-1]:
        comps.pop()
    return comps or [{}]


def decompose_e1(p: NCPoly) -> list[NCPoly]:
    """The unique admissible components (w_0, ..., w_m) with
    p = sum_i w_i sh e1^i; trailing zero components are trimmed."""
    require_subspace(p, "Az1", "decompose_e1")
    comps = _decompose_dict(p.terms)
    return [NCPoly._raw(dict(c)) for c in comps]


def reg_shuffle(p: NCPoly) -> NCPoly:
    """Constant term w_0 of :func:`decompose_e1`; the shuffle-algebra
    projection that kills e1 and fixes Az0 pointwise."""
    require_subspace(p, "Az1", "reg_shuffle")
    acc: dict = {}
    for w, c in p.terms.items():
        _add_into(acc, _decompose_word(w)[0], c)
    return NCPoly._raw(acc)


# ---------------------------------------------------------------------------
# suffix-peeling tensor decompositions

_REG_Z1: dict[int, dict] = {}
_REG_ZZ: dict[int, dict] = {}


def _merge_tbl(acc: dict, tbl: dict, c) -> None:
    for r, lefts in tbl.items():
        _add_into(acc.setdefault(r, {}), lefts, c)


def _peel_word(w: int, allowed: tuple[int, ...], cache: dict) -> dict:
    hit = cache.get(w)
    if hit is not None:
        return hit
    prefix, suffix = split_suffix(w, allowed)
    if prefix == EMPTY:
        out = {suffix: {EMPTY: 1}}
    elif suffix == EMPTY:
        out = {EMPTY: {prefix: 1}}
    else:
        out = {suffix: {prefix: 1}}
        for u, c in shuffle_words(prefix, suffix).items():
            if u == w:
                continue  # the concatenation itself, multiplicity 1
            _merge_tbl(out, _peel_word(u, allowed, cache), -c)
        out = {r: d for r, d in out.items() if d}
    cache[w] = out
    return out


def reg_z1(p: NCPoly) -> TensorSum:
    """Inverse of  (AzM2) (x) (Az0 over {1,z})  ->  Az0,  u (x) v -> u sh v."""
    require_subspace(p, "Az0", "reg_z1")
    acc: dict = {}
    for w, c in p.terms.items():
        _merge_tbl(acc, _peel_word(w, (ONE, Z), _REG_Z1), c)
    return TensorSum._raw({r: d for r, d in acc.items() if d})


def reg_zz(p: NCPoly) -> TensorSum:
    """Inverse of  (AzM2) (x) Z<ez>  ->  AzM1,  u (x) ez^k -> u sh ez^k."""
    require_subspace(p, "AzM1", "reg_zz")
    acc: dict = {}
    for w, c in p.terms.items():
        _merge_tbl(acc, _peel_word(w, (Z,), _REG_ZZ), c)
    return TensorSum._raw({r: d for r, d in acc.items() if d})
