"""Sparse rational polynomials on words, with the products and operators
that act on them: shuffle, generalized stuffle, the two dualities, the
letter-removal derivations, the constant-term projection, and letter
substitution.

Coefficients are exact: plain ``int`` wherever possible, ``fractions.Fraction``
once a division has occurred.  All values are immutable after construction
and every operation is a pure function, so everything here is safe to share
across threads or worker processes.

Word-level results are memoized in module-level tables keyed by the packed
integer encoding; the same sub-words recur massively during weight sweeps.
Cached dictionaries are treated as frozen by every caller.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .words import (
    EMPTY,
    ONE,
    SUBSPACE_PREDICATES,
    SUBSPACE_TAGS,
    Z,
    ZERO,
    SubspaceError,
    contains,
    letters,
    from_letters,
    parse_word,
    prepend,
    render_word,
    weight,
)

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _add_into(acc: dict, d: dict, c: Coeff = 1) -> None:
    if c == 1:
        for w, x in d.items():
            v = acc.get(w, 0) + x
            if v:
                acc[w] = v
            elif w in acc:
                del acc[w]
    else:
        for w, x in d.items():
            v = acc.get(w, 0) + c * x
            if v:
                acc[w] = v
            elif w in acc:
                del acc[w]


class NCPoly:
    """A finitely supported map from words to rational coefficients.

    The public constructor accepts a ``{word: coefficient}`` dict keyed by
    packed-integer words (zero coefficients are dropped).  Use
    :meth:`from_word` to build monomials from text.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {w: _norm(c) for w, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, terms: dict) -> "NCPoly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls._raw({EMPTY: 1})

    @classmethod
    def from_word(cls, word: int | str, coeff: Coeff = 1) -> "NCPoly":
        if isinstance(word, str):
            word = parse_word(word)
        return cls({word: coeff})

    # -- queries ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    @property
    def degree(self):
        """Maximal weight of a supported word; -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return weight(max(self.terms))

    def homogeneous_weight(self) -> int | None:
        """The common weight of all supported words, or None if mixed/zero."""
        ws = {weight(w) for w in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def coefficient(self, word: int | str) -> Coeff:
        if isinstance(word, str):
            word = parse_word(word)
        return self.terms.get(word, 0)

    def words(self) -> list[int]:
        return sorted(self.terms)

    def items(self):
        return self.terms.items()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "NCPoly") -> "NCPoly":
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return NCPoly._raw(acc)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return NCPoly._raw(acc)

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar: Coeff) -> "NCPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return NCPoly.zero()
        return NCPoly._raw({w: _norm(c * scalar) for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Coeff) -> "NCPoly":
        return self * Fraction(1, scalar)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"NCPoly<{render_poly(self)}>"


def aspoly(x: Union["NCPoly", int, str]) -> NCPoly:
    """Coerce a word (packed int or text) or polynomial to an NCPoly."""
    if isinstance(x, NCPoly):
        return x
    return NCPoly.from_word(x)


def _coeff_str(c: Coeff) -> str:
    return str(c)


def render_poly(p: NCPoly) -> str:
    """Canonical text form ``c1*w1 + c2*w2`` with terms in canonical word
    order.  Coefficients are always written out and the empty word appears
    as ``()``, so the rendering is unambiguous: ``1*()`` is the unit,
    ``1*1`` the single letter e1, and ``0`` the zero polynomial."""
    if not p.terms:
        return "0"
    parts = []
    for w in sorted(p.terms):
        c = p.terms[w]
        neg = c < 0
        body = f"{_coeff_str(-c if neg else c)}*{render_word(w) or '()'}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def subspace_check(p: NCPoly, tag: str) -> bool:
    """True iff every supported word of ``p`` lies in the tagged subspace."""
    if tag not in SUBSPACE_PREDICATES:
        raise ValueError(f"unknown subspace tag {tag!r}; expected one of {SUBSPACE_TAGS}")
    pred = SUBSPACE_PREDICATES[tag]
    return all(pred(w) for w in p.terms)


def require_subspace(p: NCPoly, tag: str, what: str) -> None:
    pred = SUBSPACE_PREDICATES[tag]
    for w in p.terms:
        if not pred(w):
            raise SubspaceError(
                f"{what}: word {render_word(w) or '1'!r} is not in {tag}"
            )


# ---------------------------------------------------------------------------
# shuffle product

_SHUFFLE: dict[tuple[int, int], dict] = {}


def shuffle_words(u: int, v: int) -> dict:
    """Shuffle of two words as a {word: int} dict.  Treat the result as frozen."""
    if u == EMPTY:
        return {v: 1}
    if v == EMPTY:
        return {u: 1}
    key = (u, v) if u <= v else (v, u)
    hit = _SHUFFLE.get(key)
    if hit is not None:
        return hit
    # build on last letters: (u' a) sh (v' b) = (u' sh v' b) a + (u' a sh v') b
    a = u & 3
    b = v & 3
    out: dict = {}
    for w, c in shuffle_words(u >> 2, v).items():
        k = (w << 2) | a
        out[k] = out.get(k, 0) + c
    for w, c in shuffle_words(u, v >> 2).items():
        k = (w << 2) | b
        out[k] = out.get(k, 0) + c
    _SHUFFLE[key] = out
    return out


def shuffle(p: NCPoly, q: NCPoly) -> NCPoly:
    """Bilinear extension of the interleaving product; commutative, associative."""
    acc: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            _add_into(acc, shuffle_words(u, v), cu * cv)
    return NCPoly._raw(acc)


# ---------------------------------------------------------------------------
# generalized stuffle product

_STUFFLE: dict[tuple[int, int], dict] = {}


def stuffle_words(u: int, v: int) -> dict:
    """Stuffle of a {0,1}-word ``u`` with an arbitrary word ``v``.

    Recursion on first letters:

        e_a u' * e_b v' = e_{ab} (u' * e_b v'  +  e_a u' * v'  -  e_0 (u' * v'))

    with the numeric label product (0x = 0, 1x = x), which is well defined
    because the left factor only carries labels 0 and 1.
    """
    if u == EMPTY:
        return {v: 1}
    if v == EMPTY:
        return {u: 1}
    key = (u, v)
    hit = _STUFFLE.get(key)
    if hit is not None:
        return hit
    lu = letters(u)
    lv = letters(v)
    a = lu[0]
    b = lv[0]
    u1 = from_letters(lu[1:])
    v1 = from_letters(lv[1:])
    ab = b if a == ONE else ZERO
    inner: dict = dict(stuffle_words(u1, v))
    _add_into(inner, stuffle_words(u, v1))
    for w, c in stuffle_words(u1, v1).items():
        k = prepend(ZERO, w)
        x = inner.get(k, 0) - c
        if x:
            inner[k] = x
        elif k in inner:
            del inner[k]
    out = {prepend(ab, w): c for w, c in inner.items()}
    _STUFFLE[key] = out
    return out


def stuffle(p: NCPoly, q: NCPoly) -> NCPoly:
    """Bilinear stuffle; the left factor must be supported on {0,1}-words."""
    require_subspace(p, "A", "stuffle left factor")
    acc: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            _add_into(acc, stuffle_words(u, v), cu * cv)
    return NCPoly._raw(acc)


# ---------------------------------------------------------------------------
# dualities

_TAUZ: dict[int, dict] = {}

_TAUZ_IMG = {
    ZERO: ((Z, 1), (ONE, -1)),  # e0 -> ez - e1
    ONE: ((Z, 1), (ZERO, -1)),  # e1 -> ez - e0
    Z: ((Z, 1),),               # ez -> ez
}


def tau_z_word(w: int) -> dict:
    hit = _TAUZ.get(w)
    if hit is not None:
        return hit
    out = {EMPTY: 1}
    # anti-automorphism: process letters right to left, appending images
    for a in reversed(letters(w)):
        nxt: dict = {}
        for word, c in out.items():
            for ltr, s in _TAUZ_IMG[a]:
                k = (word << 2) | ltr
                nxt[k] = nxt.get(k, 0) + c * s
        out = nxt
    _TAUZ[w] = out
    return out


def tau_z(p: NCPoly) -> NCPoly:
    """Anti-automorphism e0 -> ez - e1, e1 -> ez - e0, ez -> ez; an involution."""
    acc: dict = {}
    for w, c in p.terms.items():
        _add_into(acc, tau_z_word(w), c)
    return NCPoly._raw(acc)


def tau_infinity(p: NCPoly) -> NCPoly:
    """Anti-automorphism e0 -> -e1, e1 -> -e0 on {0,1}-words."""
    require_subspace(p, "A", "tau_infinity")
    acc: dict = {}
    for w, c in p.terms.items():
        k = weight(w)
        img = from_letters(ONE - a for a in reversed(letters(w)))
        sign = -1 if k & 1 else 1
        _add_into(acc, {img: sign}, c)
    return NCPoly._raw(acc)


# ---------------------------------------------------------------------------
# derivations

_DERIV: dict[tuple[int, int, int], dict] = {}


def derivation_word(alpha: int, beta: int, w: int) -> dict:
    """The letter-removal derivation on a single word.

    Position i contributes (delta({a_i, a_{i+1}}) - delta({a_{i-1}, a_i}))
    times the word with a_i removed, with virtual boundary letters a_0 = 0
    and a_{n+1} = 1, deltas comparing unordered pairs.
    """
    key = (alpha, beta, w) if alpha <= beta else (beta, alpha, w)
    hit = _DERIV.get(key)
    if hit is not None:
        return hit
    target = key[:2]
    ls = letters(w)
    n = len(ls)
    out: dict = {}
    for i in range(n):
        ai = ls[i]
        prev = ls[i - 1] if i > 0 else ZERO
        nxt = ls[i + 1] if i < n - 1 else ONE
        c = 0
        if (ai, nxt) == target or (nxt, ai) == target:
            c += 1
        if (prev, ai) == target or (ai, prev) == target:
            c -= 1
        if c:
            sub = from_letters(ls[:i] + ls[i + 1:])
            x = out.get(sub, 0) + c
            if x:
                out[sub] = x
            else:
                del out[sub]
    _DERIV[key] = out
    return out


def derivation(alpha: int, beta: int, p: NCPoly) -> NCPoly:
    acc: dict = {}
    for w, c in p.terms.items():
        _add_into(acc, derivation_word(alpha, beta, w), c)
    return NCPoly._raw(acc)


# ---------------------------------------------------------------------------
# projection and substitution

def const_proj(p: NCPoly) -> NCPoly:
    """Kill every word containing the letter z; identity on {0,1}-words."""
    return NCPoly._raw({w: c for w, c in p.terms.items() if not contains(w, Z)})


def substitute(p: NCPoly, a: int, b: int) -> NCPoly:
    """Replace letter ``a`` by ``b`` everywhere, merging colliding words."""
    if a == b:
        return p
    acc: dict = {}
    for w, c in p.terms.items():
        k = from_letters(b if x == a else x for x in letters(w))
        v = acc.get(k, 0) + c
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]
    return NCPoly._raw(acc)
