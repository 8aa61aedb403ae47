"""Relation generators for multiple zeta values.

Three families are produced, each as an exact {0,1}-word polynomial whose
value under the iterated-integral map is zero:

* confluence family: for an admissible word w, the body is
  lambda(w - phi(w)) where phi reconstructs w from its z-derivative tower
  through the shuffle (or stuffle) product and lambda is the regularized
  z -> 1 limit;
* double-shuffle family: reg(u sh v - u st v) for u in A1, v in A0;
* duality family: w - tau_inf(w) for w in A0.

The operator phi_tensor is computed by the word-level recursion

    phi_tensor(w) = Const(w) (x) 1  +  sum_{b in {0,z}} phi_tensor(d_{1,b} w) . e_b

(append b to the right leg), which unfolds to the sum over all derivation
chains with the rightmost operator acting first.  The lambda pipeline per
word is:  peel with reg_z1, dualize the {1,z}-leg with tau_z, multiply back
(the map N), peel ez-powers with reg_zz, keep the constant leg, substitute
z -> 1.  Everything is memoized per word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    NCPoly,
    _add_into,
    const_proj,
    derivation,
    derivation_word,
    require_subspace,
    shuffle,
    shuffle_words,
    stuffle,
    stuffle_words,
    substitute,
    tau_infinity,
    tau_z_word,
)
from .regularize import TensorSum, _merge_tbl, _peel_word, _REG_Z1, _REG_ZZ, reg_shuffle
from .words import (
    EMPTY,
    ONE,
    Z,
    ZERO,
    SubspaceError,
    a0_words,
    a1_words,
    az0_words,
    contains,
    in_a0,
    in_a1,
    in_az0,
    parse_word,
    render_word,
    substitute_word,
    weight,
)
from .zeta import to_zeta_string

# ---------------------------------------------------------------------------
# the reconstruction operators phi

_PHI: dict[int, dict] = {}


def _phi_tensor_word(w: int) -> dict:
    """phi_tensor of a single word as a {right_word: {left_word: coeff}} table."""
    hit = _PHI.get(w)
    if hit is not None:
        return hit
    out: dict = {}
    if not contains(w, Z):
        out[EMPTY] = {w: 1}
    for b in (ZERO, Z):
        for w2, c in derivation_word(ONE, b, w).items():
            for r, lefts in _phi_tensor_word(w2).items():
                _add_into(out.setdefault((r << 2) | b, {}), lefts, c)
    out = {r: d for r, d in out.items() if d}
    _PHI[w] = out
    return out


def phi_tensor(p: NCPoly) -> TensorSum:
    """Decompose an admissible polynomial over its z-derivative tower.

    Left legs are {0,1}-words (in A0), right legs {0,z}-words (in Az0);
    applying shuffle or stuffle to the legs gives phi_shuffle / phi_stuffle.
    """
    require_subspace(p, "Az0", "phi_tensor")
    acc: dict = {}
    for w, c in p.terms.items():
        _merge_tbl(acc, _phi_tensor_word(w), c)
    return TensorSum._raw({r: d for r, d in acc.items() if d})


def phi_shuffle(p: NCPoly) -> NCPoly:
    require_subspace(p, "Az0", "phi_shuffle")
    acc: dict = {}
    for w, c in p.terms.items():
        for r, lefts in _phi_tensor_word(w).items():
            for lw, lc in lefts.items():
                _add_into(acc, shuffle_words(lw, r), c * lc)
    return NCPoly._raw(acc)


def phi_stuffle(p: NCPoly) -> NCPoly:
    require_subspace(p, "Az0", "phi_stuffle")
    acc: dict = {}
    for w, c in p.terms.items():
        for r, lefts in _phi_tensor_word(w).items():
            for lw, lc in lefts.items():
                _add_into(acc, stuffle_words(lw, r), c * lc)
    return NCPoly._raw(acc)


def in_standard_ideal(p: NCPoly) -> bool:
    """True iff every chain of z-derivations of ``p`` has vanishing constant
    term; equivalently, iff phi_tensor(p) == 0."""
    require_subspace(p, "Az0", "in_standard_ideal")
    if not p:
        return True
    if const_proj(p):
        return False
    return in_standard_ideal(derivation(Z, ZERO, p)) and in_standard_ideal(
        derivation(Z, ONE, p)
    )


# ---------------------------------------------------------------------------
# the regularized z -> 1 limit

_NMAP: dict[int, dict] = {}
_LAMBDA: dict[int, dict] = {}


def _n_word(w: int) -> dict:
    hit = _NMAP.get(w)
    if hit is not None:
        return hit
    out: dict = {}
    for r, lefts in _peel_word(w, (ONE, Z), _REG_Z1).items():
        for rw, rc in tau_z_word(r).items():
            for lw, lc in lefts.items():
                _add_into(out, shuffle_words(lw, rw), rc * lc)
    _NMAP[w] = out
    return out


def _lambda_word(w: int) -> dict:
    hit = _LAMBDA.get(w)
    if hit is not None:
        return hit
    acc: dict = {}
    for w2, c in _n_word(w).items():
        lefts = _peel_word(w2, (Z,), _REG_ZZ).get(EMPTY)
        if lefts:
            _add_into(acc, lefts, c)
    out: dict = {}
    for w2, c in acc.items():
        k = substitute_word(w2, Z, ONE)
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    _LAMBDA[w] = out
    return out


def n_map(p: NCPoly) -> NCPoly:
    """Replace the {1,z}-leg of the reg_z1 decomposition by its tau_z image
    and multiply back; value-preserving, lands in AzM1."""
    require_subspace(p, "Az0", "n_map")
    acc: dict = {}
    for w, c in p.terms.items():
        _add_into(acc, _n_word(w), c)
    return NCPoly._raw(acc)


def lambda_prime(p: NCPoly) -> NCPoly:
    """Plain z -> 1 substitution, defined on AzM2 where the limit is direct."""
    require_subspace(p, "AzM2", "lambda_prime")
    return substitute(p, Z, ONE)


def lambda_map(p: NCPoly) -> NCPoly:
    """Regularized z -> 1 limit on Az0: the constant ez-leg of reg_zz(N(p)),
    with z -> 1 substituted.  Restricts to the identity on A0."""
    require_subspace(p, "Az0", "lambda_map")
    acc: dict = {}
    for w, c in p.terms.items():
        _add_into(acc, _lambda_word(w), c)
    return NCPoly._raw(acc)


def asymptotic_poly(p: NCPoly) -> list[NCPoly]:
    """Coefficient polynomials (c_0, c_1, ...) of the logarithmic expansion
    of ``p`` near z = 1: evaluating L on them gives the polynomial
    P(T) = sum_k L(c_k) T^k / k!  with T = log(z - 1)."""
    require_subspace(p, "Az0", "asymptotic_poly")
    tbl: dict = {}
    for w, c in p.terms.items():
        for w2, c2 in _n_word(w).items():
            _merge_tbl(tbl, _peel_word(w2, (Z,), _REG_ZZ), c * c2)
    comps: list[dict] = []
    for r, lefts in tbl.items():
        k = weight(r)  # r is a pure ez-power
        while len(comps) <= k:
            comps.append({})
        _add_into(comps[k], lefts, 1)
    while len(comps) > 1 and not comps[-1]:
        comps.pop()
    if not comps:
        comps = [{}]
    return [substitute(NCPoly._raw(d), Z, ONE) for d in comps]


# ---------------------------------------------------------------------------
# relation records and generators

@dataclass(frozen=True)
class RelationRecord:
    """One generated relation: ``body`` is an exact {0,1}-word polynomial in
    the kernel of the iterated-integral map, ``zeta_form`` its rendering as
    a vanishing combination of nested sums."""

    family: str  # "confluence" | "rds" | "duality"
    weight: int
    source: str
    body: NCPoly
    zeta_form: str

    def is_zero(self) -> bool:
        return not self.body


def _as_word(w, tag: str, what: str) -> int:
    if isinstance(w, str):
        w = parse_word(w)
    elif isinstance(w, NCPoly):
        raise TypeError(f"{what} takes a single word, not a polynomial")
    if not word_pred(tag)(w):
        raise SubspaceError(f"{what}: word {render_word(w) or '1'!r} is not in {tag}")
    return w


def word_pred(tag: str):
    return {"Az0": in_az0, "A0": in_a0, "A1": in_a1}[tag]


def confluence_relation(w, mode: str = "shuffle") -> RelationRecord:
    """The relation attached to one admissible word: lambda(w - phi(w))."""
    w = _as_word(w, "Az0", "confluence_relation")
    if mode == "shuffle":
        img = phi_shuffle(NCPoly._raw({w: 1}))
    elif mode == "stuffle":
        img = phi_stuffle(NCPoly._raw({w: 1}))
    else:
        raise ValueError(f"mode must be 'shuffle' or 'stuffle', got {mode!r}")
    body = lambda_map(NCPoly._raw({w: 1}) - img)
    return RelationRecord(
        family="confluence",
        weight=weight(w),
        source=render_word(w),
        body=body,
        zeta_form=to_zeta_string(body),
    )


def generate_confluence(k: int, mode: str = "shuffle") -> list[RelationRecord]:
    """One record per admissible weight-k word (4 * 3**(k-2) of them for
    k >= 2), in canonical word order, zero bodies included."""
    if k < 2:
        raise ValueError("confluence generation needs weight k >= 2")
    return [confluence_relation(w, mode=mode) for w in az0_words(k)]


def rds_relation(u, v) -> RelationRecord:
    """Regularized difference of the two products on a pair of words:
    reg(u sh v - u st v) for u in A1, v in A0."""
    u = _as_word(u, "A1", "rds_relation (left)")
    v = _as_word(v, "A0", "rds_relation (right)")
    pu, pv = NCPoly._raw({u: 1}), NCPoly._raw({v: 1})
    body = reg_shuffle(shuffle(pu, pv) - stuffle(pu, pv))
    return RelationRecord(
        family="rds",
        weight=weight(u) + weight(v),
        source=f"{render_word(u)}|{render_word(v)}",
        body=body,
        zeta_form=to_zeta_string(body),
    )


def generate_rds(k: int) -> list[RelationRecord]:
    """All generators u in A1 (weight >= 1), v in A0 (weight >= 2) with total
    weight k."""
    if k < 3:
        return []
    out = []
    for a in range(1, k - 1):
        for u in a1_words(a):
            for v in a0_words(k - a):
                out.append(rds_relation(u, v))
    return out


def duality_relation(w) -> RelationRecord:
    """w - tau_inf(w) for a {0,1}-word w in A0."""
    w = _as_word(w, "A0", "duality_relation")
    pw = NCPoly._raw({w: 1})
    body = pw - tau_infinity(pw)
    return RelationRecord(
        family="duality",
        weight=weight(w),
        source=render_word(w),
        body=body,
        zeta_form=to_zeta_string(body),
    )


def generate_duality(k: int) -> list[RelationRecord]:
    if k < 2:
        return []
    return [duality_relation(w) for w in a0_words(k)]
