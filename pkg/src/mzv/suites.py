"""Seeded verification suites behind the ``check`` CLI command.

Each suite returns a list of named results.  Checks are exhaustive over
words up to the stated weight where that is cheap, and seeded-random
samples where a product of large words would blow up.  All suites accept
(max_weight, samples, seed) so CI runs are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .algebra import (
    NCPoly,
    const_proj,
    derivation,
    shuffle,
    stuffle,
    subspace_check,
    substitute,
    tau_z,
)
from .numeric import (
    PrecisionConfig,
    check_asymptotic,
    check_derivative,
    eval_hyperlog,
    eval_mzv,
    eval_poly_hyperlog,
    eval_poly_mzv,
)
from .regularize import decompose_e1, reg_shuffle, reg_z1, reg_zz
from .relations import (
    generate_confluence,
    in_standard_ideal,
    lambda_map,
    n_map,
    phi_shuffle,
    phi_stuffle,
    phi_tensor,
)
from .words import (
    ONE,
    Z,
    ZERO,
    a0_words,
    a1_words,
    az0_words,
    azm1_words,
    from_letters,
    in_az1,
    words_of_weight,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _pick(rng: random.Random, pool):
    return pool[rng.randrange(len(pool))]


def _pool(gen, lo: int, hi: int) -> list[int]:
    out = []
    for k in range(lo, hi + 1):
        out.extend(gen(k))
    return out


def _az1_pool(hi: int) -> list[int]:
    return [w for k in range(hi + 1) for w in words_of_weight(k) if in_az1(w)]


def _P(w) -> NCPoly:
    return NCPoly._raw({w: 1})


# ---------------------------------------------------------------------------

def algebra_suite(max_weight: int = 6, samples: int = 200, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    kk = max(2, min(max_weight, 6))

    pair_pool = _pool(words_of_weight, 0, min(kk, 4))
    triple_pool = _pool(words_of_weight, 0, min(kk, 3))
    a_pool = _pool(lambda k: words_of_weight(k, (ZERO, ONE)), 0, min(kk, 4))
    a_triple = _pool(lambda k: words_of_weight(k, (ZERO, ONE)), 0, min(kk, 3))
    az0_pool = _pool(az0_words, 0, kk)
    a1_pool = _pool(a1_words, 0, min(kk, 4))

    ok = all(
        shuffle(_P(u), _P(v)) == shuffle(_P(v), _P(u))
        for u, v in ((_pick(rng, pair_pool), _pick(rng, pair_pool)) for _ in range(samples))
    )
    out.append(CheckResult("shuffle commutative (sampled)", ok))

    ok = True
    for _ in range(max(10, samples // 10)):
        u, v, w = (_pick(rng, triple_pool) for _ in range(3))
        ok = ok and shuffle(shuffle(_P(u), _P(v)), _P(w)) == shuffle(_P(u), shuffle(_P(v), _P(w)))
    out.append(CheckResult("shuffle associative (sampled)", ok))

    ok = all(
        stuffle(_P(u), _P(v)) == stuffle(_P(v), _P(u))
        for u, v in ((_pick(rng, a_pool), _pick(rng, a_pool)) for _ in range(samples))
    )
    out.append(CheckResult("stuffle commutative on {0,1}-words (sampled)", ok))

    ok = True
    for _ in range(max(10, samples // 10)):
        u, v, w = (_pick(rng, a_triple) for _ in range(3))
        ok = ok and stuffle(stuffle(_P(u), _P(v)), _P(w)) == stuffle(_P(u), stuffle(_P(v), _P(w)))
    out.append(CheckResult("stuffle associative on {0,1}-words (sampled)", ok))

    ok = all(
        not (derivation(Z, ZERO, _P(w)) + derivation(Z, ONE, _P(w)) + derivation(ONE, ZERO, _P(w)))
        for w in az0_pool
    )
    out.append(CheckResult(f"derivation sum d_z0 + d_z1 + d_10 = 0 on Az0, weight <= {kk}", ok))

    ok = all(
        subspace_check(derivation(a, b, _P(w)), "Az0")
        for w in az0_pool
        for a, b in ((Z, ZERO), (Z, ONE), (ONE, ZERO))
    )
    out.append(CheckResult("derivations preserve Az0 (exhaustive)", ok))

    ok = all(not derivation(a, a, _P(w)) for w in az0_pool for a in (ZERO, ONE, Z))
    out.append(CheckResult("d_aa vanishes on Az0 (exhaustive)", ok))

    ok = True
    for _ in range(samples):
        u, v = _pick(rng, pair_pool), _pick(rng, pair_pool)
        c = rng.choice((ZERO, ONE))
        lhs = derivation(Z, c, shuffle(_P(u), _P(v)))
        rhs = shuffle(derivation(Z, c, _P(u)), _P(v)) + shuffle(_P(u), derivation(Z, c, _P(v)))
        ok = ok and lhs == rhs
    out.append(CheckResult("Leibniz rule for d_zc over shuffle (sampled)", ok))

    ok = True
    for _ in range(samples):
        u, v = _pick(rng, a1_pool), _pick(rng, pair_pool)
        c = rng.choice((ZERO, ONE))
        ok = ok and derivation(Z, c, stuffle(_P(u), _P(v))) == stuffle(_P(u), derivation(Z, c, _P(v)))
    out.append(CheckResult("module rule d_zc(u * v) = u * d_zc(v), u in A1 (sampled)", ok))

    ok = True
    for w in az0_pool:
        c = rng.choice((ZERO, ONE))
        ok = ok and tau_z(derivation(Z, c, tau_z(_P(w)))) == derivation(Z, c, _P(w))
    out.append(CheckResult("duality conjugation tau d_zc tau = d_zc on Az0", ok))

    ok = all(tau_z(tau_z(_P(w))) == _P(w) for w in pair_pool)
    ok = ok and all(subspace_check(tau_z(_P(w)), "Az0") for w in az0_pool)
    out.append(CheckResult("tau_z is an involution and preserves Az0", ok))

    ok = True
    for _ in range(samples):
        u, v = _pick(rng, pair_pool), _pick(rng, pair_pool)
        ok = ok and const_proj(shuffle(_P(u), _P(v))) == shuffle(const_proj(_P(u)), const_proj(_P(v)))
    for _ in range(samples):
        u, v = _pick(rng, a_pool), _pick(rng, pair_pool)
        ok = ok and const_proj(stuffle(_P(u), _P(v))) == stuffle(_P(u), const_proj(_P(v)))
    out.append(CheckResult("Const is multiplicative (shuffle) and A-linear (stuffle)", ok))

    counts_ok = all(
        sum(1 for _ in az0_words(k)) == 4 * 3 ** (k - 2) for k in range(2, kk + 1)
    )
    out.append(CheckResult(f"4 * 3^(k-2) admissible words per weight, k = 2..{kk}", counts_ok))

    return out


# ---------------------------------------------------------------------------

def regularization_suite(max_weight: int = 6, samples: int = 200, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    kk = max(2, min(max_weight, 6))

    az1_pool = _az1_pool(kk)
    az0_pool = _pool(az0_words, 0, kk)
    azm1_pool = _pool(azm1_words, 0, kk)

    ok = True
    integral = True
    for w in az1_pool:
        comps = decompose_e1(_P(w))
        ok = ok and _expand_components(comps) == _P(w)
        ok = ok and all(subspace_check(c, "Az0") for c in comps)
        integral = integral and all(
            not isinstance(x, Fraction) for c in comps for x in c.terms.values()
        )
    out.append(CheckResult(f"trailing-e1 decomposition round trip, Az1 weight <= {kk}", ok))
    out.append(CheckResult("decomposition of single words stays integral", integral))

    ok = all(reg_z1(_P(w)).expand_shuffle() == _P(w) for w in az0_pool)
    out.append(CheckResult(f"reg_z1 round trip, Az0 weight <= {kk}", ok))

    ok = all(reg_zz(_P(w)).expand_shuffle() == _P(w) for w in azm1_pool)
    out.append(CheckResult(f"reg_zz round trip, AzM1 weight <= {kk}", ok))

    ok = True
    for w in az0_pool:
        for left, right in reg_z1(_P(w)).pairs:
            ok = ok and subspace_check(left, "AzM2")
            ok = ok and subspace_check(right, "Z1z") and subspace_check(right, "Az0")
    for w in azm1_pool:
        for left, right in reg_zz(_P(w)).pairs:
            ok = ok and subspace_check(left, "AzM2")
            ok = ok and subspace_check(right, "Z0z") and subspace_check(right, "Z1z")
    out.append(CheckResult("tensor factors live in their declared subspaces", ok))

    ok = all(reg_shuffle(_P(w)) == _P(w) for w in az0_pool)
    ok = ok and all(reg_shuffle(reg_shuffle(_P(w))) == reg_shuffle(_P(w)) for w in az1_pool)
    out.append(CheckResult("reg is idempotent and fixes Az0 pointwise", ok))

    small = _az1_pool(min(kk, 4))
    ok = True
    for _ in range(samples):
        u, v = _pick(rng, small), _pick(rng, small)
        ok = ok and reg_shuffle(shuffle(_P(u), _P(v))) == shuffle(
            reg_shuffle(_P(u)), reg_shuffle(_P(v))
        )
    out.append(CheckResult("reg is a shuffle homomorphism (sampled)", ok))

    ok = True
    for w in az1_pool:
        c = rng.choice((ZERO, ONE))
        ok = ok and derivation(Z, c, reg_shuffle(_P(w))) == reg_shuffle(derivation(Z, c, _P(w)))
    out.append(CheckResult("d_zc commutes with reg", ok))

    return out


def _expand_components(comps: list[NCPoly]) -> NCPoly:
    acc = NCPoly.zero()
    for i, c in enumerate(comps):
        acc = acc + shuffle(c, NCPoly.from_word(from_letters([ONE] * i)))
    return acc


# ---------------------------------------------------------------------------

def phi_suite(max_weight: int = 5, samples: int = 100, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    kk = max(2, min(max_weight, 5))
    az0_pool = _pool(az0_words, 0, kk)
    az0_small = _pool(az0_words, 0, min(kk, 3))
    a0_small = _pool(a0_words, 0, min(kk, 3))

    ok = all(
        phi_tensor(phi_shuffle(_P(w))) == phi_tensor(_P(w))
        and phi_tensor(phi_stuffle(_P(w))) == phi_tensor(_P(w))
        for w in az0_pool
    )
    out.append(CheckResult(f"phi_tensor absorbs phi_shuffle and phi_stuffle, weight <= {kk}", ok))

    ok = all(
        in_standard_ideal(_P(w) - phi_shuffle(_P(w)))
        and in_standard_ideal(_P(w) - phi_stuffle(_P(w)))
        for w in az0_pool
    )
    out.append(CheckResult("w - phi(w) passes the standard-relation test (both modes)", ok))

    ok = True
    for w in az0_pool:
        for left, right in phi_tensor(_P(w)).pairs:
            ok = ok and subspace_check(left, "A0")
            ok = ok and subspace_check(right, "Z0z") and subspace_check(right, "Az0")
        ok = ok and subspace_check(phi_shuffle(_P(w)), "AzM1")
    out.append(CheckResult("phi legs in A0 (x) ({0,z} part of Az0); phi image in AzM1", ok))

    ok = True
    for _ in range(samples):
        u, v = _pick(rng, az0_small), _pick(rng, az0_small)
        ok = ok and phi_shuffle(shuffle(_P(u), _P(v))) == shuffle(
            phi_shuffle(_P(u)), phi_shuffle(_P(v))
        )
    out.append(CheckResult("phi_shuffle is a shuffle homomorphism (sampled)", ok))

    ok = True
    for _ in range(samples):
        u, v = _pick(rng, a0_small), _pick(rng, az0_small)
        ok = ok and phi_stuffle(stuffle(_P(u), _P(v))) == stuffle(_P(u), phi_stuffle(_P(v)))
    out.append(CheckResult("phi_stuffle is an A0-module map (sampled)", ok))

    ok = True
    for k in range(2, min(kk, 4) + 1):
        words = list(az0_words(k))
        dim = len(words)
        rk_sh = _generic_rank([(_P(w) - phi_shuffle(_P(w))).terms for w in words])
        rk_st = _generic_rank([(_P(w) - phi_stuffle(_P(w))).terms for w in words])
        rk_phi = _generic_rank([phi_shuffle(_P(w)).terms for w in words])
        t_rows = []
        for w in words:
            row = {}
            for left, right in phi_tensor(_P(w)).pairs:
                rw = right.words()[0]
                for lw, lc in left.terms.items():
                    row[(lw, rw)] = lc
            t_rows.append(row)
        rk_tensor = _generic_rank(t_rows)
        ok = ok and rk_sh == rk_st == dim - rk_phi == dim - rk_tensor
    out.append(CheckResult("image/kernel dimensions of the six characterizations agree (weight <= 4)", ok))

    azm1_pool = _pool(azm1_words, 0, kk)
    ok = all(lambda_map(_P(w)) == reg_shuffle(substitute(_P(w), Z, ONE)) for w in azm1_pool)
    out.append(CheckResult(f"lambda = reg o (z -> 1) on AzM1, weight <= {kk}", ok))

    ok = True
    for w in az0_pool:
        nw = n_map(_P(w))
        ok = ok and subspace_check(nw, "AzM1")
        ok = ok and lambda_map(nw) == lambda_map(_P(w))
        ok = ok and phi_shuffle(nw) == phi_shuffle(_P(w))
    out.append(CheckResult("N lands in AzM1 and preserves lambda and phi_shuffle", ok))

    return out


def _generic_rank(rows: list[dict]) -> int:
    """Rank of sparse rational row vectors keyed by arbitrary hashables."""
    basis: dict = {}
    rk = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            piv = min(row)
            if piv in basis:
                c = row.pop(piv)
                for k, v in basis[piv].items():
                    if k == piv:
                        continue
                    x = row.get(k, 0) - c * v
                    if x:
                        row[k] = x
                    elif k in row:
                        del row[k]
            else:
                c = row[piv]
                basis[piv] = {k: v / c for k, v in row.items()}
                rk += 1
                row = {}
    return rk


# ---------------------------------------------------------------------------

def numeric_suite(max_weight: int = 5, samples: int = 50, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    cfg = PrecisionConfig(digits=30)
    kk = max(2, min(max_weight, 5))

    with mp.workdps(40):
        err2 = abs(-eval_mzv("10", cfg) - mp.zeta(2))
        err3 = abs(-eval_mzv("100", cfg) - mp.zeta(3))
    out.append(
        CheckResult(
            "z(2), z(3) against direct zeta oracles",
            err2 < 1e-10 and err3 < 1e-10,
            f"errors {float(err2):.1e}, {float(err3):.1e}",
        )
    )

    worst = 0.0
    for k in range(3, kk + 1):
        for rec in generate_confluence(k):
            if not rec.is_zero():
                worst = max(worst, abs(float(eval_poly_mzv(rec.body, cfg))))
    out.append(
        CheckResult(
            f"confluence relations vanish numerically, weight <= {kk}",
            worst < 1e-10,
            f"max |value| = {worst:.2e}",
        )
    )

    az0_pool = _pool(az0_words, 0, min(kk, 4))
    a0_pool = [w for w in _pool(a0_words, 2, min(kk, 4))]
    worst = 0.0
    for _ in range(samples):
        u, v = _pick(rng, a0_pool), _pick(rng, az0_pool)
        lu = eval_hyperlog(u, 3.0)
        lv = eval_hyperlog(v, 3.0)
        err = abs(eval_poly_hyperlog(shuffle(_P(u), _P(v)), 3.0) - lu * lv)
        err = max(err, abs(eval_poly_hyperlog(stuffle(_P(u), _P(v)), 3.0) - lu * lv))
        worst = max(worst, err)
    out.append(
        CheckResult("shuffle/stuffle product identities at z = 3", worst < 1e-8,
                    f"max error {worst:.2e}")
    )

    worst = 0.0
    for _ in range(samples):
        w = _pick(rng, az0_pool)
        worst = max(worst, abs(eval_poly_hyperlog(tau_z(_P(w)), 3.0) - eval_hyperlog(w, 3.0)))
    out.append(CheckResult("duality invariance at z = 3", worst < 1e-8, f"max error {worst:.2e}"))

    worst = 0.0
    ok = True
    for _ in range(samples):
        rep = check_derivative(_pick(rng, az0_pool), 3.0)
        ok = ok and rep["passed"]
        worst = max(worst, rep["difference"])
    out.append(
        CheckResult("finite differences match the symbolic z-derivative", ok,
                    f"max |difference| = {worst:.2e}")
    )

    small_pool = _pool(az0_words, 0, min(kk, 3))
    ok = True
    for _ in range(min(samples, 20)):
        ok = ok and check_asymptotic(_pick(rng, small_pool))["passed"]
    out.append(CheckResult("logarithmic expansion residuals shrink as z -> 1+", ok))

    ok = True
    for _ in range(min(samples, 10)):
        w = _pick(rng, small_pool)
        cw = const_proj(_P(w))
        limit = float(eval_poly_mzv(cw, cfg)) if cw else 0.0
        errs = [abs(eval_hyperlog(w, float(zz)) - limit) for zz in (1e2, 1e3, 1e4)]
        ok = ok and errs[2] <= errs[1] + 1e-12 and errs[1] <= errs[0] + 1e-12 and errs[2] < 1e-2
    out.append(CheckResult("L(w; z) approaches L(Const w) as z grows", ok))

    with mp.workdps(40):
        zetas = {k: mp.zeta(k) for k in range(2, 6)}
        # splitting the double sum over m < n, m > n, m = n
        errs = [
            abs(zetas[2] ** 2 - (2 * eval_mzv("1010", cfg) + zetas[4])),
            abs(zetas[2] * zetas[3]
                - (eval_mzv("10100", cfg) + eval_mzv("10010", cfg) + zetas[5])),
            abs(eval_mzv("110", cfg) - zetas[3]),  # classical z(1,2) = z(3)
        ]
    ok = all(e < 1e-10 for e in errs)
    out.append(
        CheckResult("nested-sum product splittings at depth 2", ok,
                    "errors " + ", ".join(f"{float(e):.1e}" for e in errs))
    )

    ok = True
    worst = 0.0
    for w in a0_pool:
        direct, bound = _direct_series_with_bound(w)
        err = abs(float(eval_mzv(w, cfg)) - direct)
        ok = ok and err < bound
        worst = max(worst, err / bound)
    out.append(
        CheckResult("agrees with the truncated direct series within its tail bound", ok,
                    f"worst error/bound = {worst:.2f}")
    )

    return out


def _direct_series_with_bound(w: int, n: int = 20000) -> tuple[float, float]:
    """Truncated nested sum for L(w) plus a generous rigorous tail bound."""
    from .zeta import word_to_index

    index = word_to_index(w)
    d = len(index)
    m = np.arange(1, n + 1, dtype=np.float64)
    s = np.ones(n)
    for k in index[:-1]:
        s = np.concatenate(([0.0], np.cumsum(s / m**k)[:-1]))
    kd = index[-1]
    val = float(np.sum(s / m**kd))
    s_max = max(float(s.max()), 1.0)
    bound = 4.0 * s_max * (1 + math.log(n)) ** d * n ** (1 - kd) / (kd - 1)
    sign = -1.0 if d & 1 else 1.0
    return sign * val, bound


SUITES = {
    "algebra": algebra_suite,
    "regularization": regularization_suite,
    "phi": phi_suite,
    "numeric": numeric_suite,
}


def run_suite(name: str, max_weight: int, samples: int, seed: int) -> list[CheckResult]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return fn(max_weight=max_weight, samples=samples, seed=seed)
