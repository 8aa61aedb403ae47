"""Rendering {0,1}-word combinations as nested-sum values z(k1,...,kd).

The word  1 0^{k1-1} 1 0^{k2-1} ... 1 0^{kd-1}  carries the value
(-1)^d z(k1,...,kd), where z(k1,...,kd) is the nested sum over
0 < m_1 < ... < m_d of  prod m_i^{-k_i}  (convergent when k_d >= 2, which
is automatic for words ending in 0).  ``to_zeta_string`` folds that sign
into the displayed coefficients, so the rendered combination equals the
value of the polynomial, with terms listed in canonical word order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import NCPoly, require_subspace
from .words import EMPTY, ONE, ZERO, from_letters, letters

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class ZetaTerm:
    coefficient: Coeff
    index: tuple[int, ...]


def word_to_index(w: int) -> tuple[int, ...]:
    """Exponent tuple (k1,...,kd) of a nonempty word 1 0^{k1-1} ... 1 0^{kd-1}."""
    ls = letters(w)
    if not ls or ls[0] != ONE or any(a not in (ZERO, ONE) for a in ls):
        raise ValueError("word must start with 1 and use letters {0,1} only")
    index: list[int] = []
    for a in ls:
        if a == ONE:
            index.append(1)
        else:
            index[-1] += 1
    return tuple(index)


def index_to_word(index: tuple[int, ...]) -> int:
    """Inverse of :func:`word_to_index`; the empty index gives the empty word."""
    if any(k < 1 for k in index):
        raise ValueError("exponents must be positive integers")
    ls: list[int] = []
    for k in index:
        ls.append(ONE)
        ls.extend([ZERO] * (k - 1))
    return from_letters(ls)


def zeta_terms(p: NCPoly) -> list[ZetaTerm]:
    """Value of a {0,1}-word polynomial as z-terms, in canonical word order.

    A term c * (word of depth d) contributes the coefficient c * (-1)^d.
    The unit (empty word) contributes the index ().
    """
    require_subspace(p, "A0", "zeta rendering")
    out = []
    for w in sorted(p.terms):
        if w == EMPTY:
            out.append(ZetaTerm(p.terms[w], ()))
            continue
        index = word_to_index(w)
        sign = -1 if len(index) & 1 else 1
        out.append(ZetaTerm(sign * p.terms[w], index))
    return out


def _coeff_prefix(c: Coeff, leading: bool) -> str:
    neg = c < 0
    mag = -c if neg else c
    if isinstance(mag, Fraction) and mag.denominator != 1:
        body = f"({mag})"
    elif mag == 1:
        body = ""
    else:
        body = str(mag)
    if leading:
        return ("-" if neg else "") + body
    return ("-" if neg else "+") + body


def to_zeta_string(p: NCPoly) -> str:
    """Canonical rendering like ``-3z(4)+5z(2,2)+13z(1,3)-4z(1,1,2)``; "0" if zero."""
    terms = zeta_terms(p)
    if not terms:
        return "0"
    parts = []
    for i, t in enumerate(terms):
        prefix = _coeff_prefix(t.coefficient, leading=(i == 0))
        if t.index:
            parts.append(f"{prefix}z({','.join(map(str, t.index))})")
        else:
            # unit term: a bare rational
            mag = abs(t.coefficient)
            sign = "-" if t.coefficient < 0 else ("" if i == 0 else "+")
            parts.append(f"{sign}{mag}")
    return "".join(parts)
