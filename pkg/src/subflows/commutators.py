"""
Lie commutators of A = P(∂x) and B(v) = v v_x.

Bracket convention: [X, Y](v) = dX(v)[Y(v)] - dY(v)[X(v)].

- commutator_AB:      [A, B](v) = A(v v_x) - (Av) v_x - v (Av)_x
- double_commutator:  [A, [A, B]](v) = A²(v v_x) - 2A(v Av)_x + ((Av)²)_x + (v A²v)_x

Each has a direct route (the defining formula) and a Leibniz route in which the
top-order derivative terms have already cancelled. `commutator_terms` and
`double_commutator_terms` expose that bookkeeping as exact coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Dict, Tuple, Union

import numpy as np

from dispersion import DispersionSymbol
from fourier import Field, dealiased_product, derivative, linf_norm, relative_linf_error
from splitting_core import custom_logger

from .linear import apply_generator

Term = Tuple[int, int]
LeibnizTerms = Dict[Term, float]

# Spectral content beyond the band counts as zero below this fraction of the peak
_BAND_RTOL = 1e-12


@dataclass(frozen=True)
class CommutatorRoutes:
    """Both evaluations of one bracket and their relative max-norm disagreement."""

    direct: Field
    leibniz: Field
    relative_error: float


# -----------------------------------------------------------------------------
# 🧾 Exact term bookkeeping
# -----------------------------------------------------------------------------
def _expand(n: int, a: int, b: int) -> Dict[Term, int]:
    """∂^n (D^a v · D^b v) = Σ_k C(n, k) D^{a+k} v · D^{b+n-k} v, pairs sorted."""
    terms: Dict[Term, int] = defaultdict(int)
    for k in range(n + 1):
        alpha, beta = sorted((a + k, b + n - k))
        terms[(alpha, beta)] += comb(n, k)
    return terms


def _collect(weighted: Dict[Term, float]) -> LeibnizTerms:
    return {term: value for term, value in sorted(weighted.items()) if value != 0}


def commutator_terms(symbol: DispersionSymbol) -> LeibnizTerms:
    """
    {(α, β): coefficient} with [A, B](v) = Σ coefficient · D^α v · D^β v.

    Per monomial a_j ∂^j the surviving terms are C(j, k) D^k v D^{j+1-k} v for
    k = 1..j-1; the orders j+1 and 0 have cancelled.
    """
    weighted: Dict[Term, float] = defaultdict(float)
    for power, coefficient in symbol.terms():
        for k in range(1, power):
            alpha, beta = sorted((k, power + 1 - k))
            weighted[(alpha, beta)] += coefficient * comb(power, k)
    return _collect(weighted)


def double_commutator_integer_terms(i: int, j: int) -> Dict[Term, int]:
    """
    Integer Leibniz expansion of the (a_i ∂^i, a_j ∂^j) part of [A, [A, B]].

    ∂^{i+j}(v v_x) - 2 ∂^{i+1}(v ∂^j v) + ∂(∂^i v ∂^j v) + ∂(v ∂^{i+j} v)
    """
    total: Dict[Term, int] = defaultdict(int)
    for sign, (n, a, b) in (
        (1, (i + j, 0, 1)),
        (-2, (i + 1, 0, j)),
        (1, (1, i, j)),
        (1, (1, 0, i + j)),
    ):
        for term, count in _expand(n, a, b).items():
            total[term] += sign * count
    return {term: count for term, count in total.items() if count != 0}


def double_commutator_terms(symbol: DispersionSymbol) -> LeibnizTerms:
    """
    {(α, β): coefficient} with [A, [A, B]](v) = Σ coefficient · D^α v · D^β v.

    Summed over ordered monomial pairs; derivative orders 2ℓ+1 and 2ℓ cancel.
    """
    weighted: Dict[Term, float] = defaultdict(float)
    monomials = list(symbol.terms())
    for i, a_i in monomials:
        for j, a_j in monomials:
            for term, count in double_commutator_integer_terms(i, j).items():
                weighted[term] += a_i * a_j * count
    return _collect(weighted)


def highest_order(terms: Union[LeibnizTerms, Dict[Term, int]]) -> int:
    """Largest derivative order present; 0 for an empty expansion."""
    return max((beta for _, beta in terms), default=0)


# -----------------------------------------------------------------------------
# 🔍 Band-limit precondition
# -----------------------------------------------------------------------------
def _require_band(v: Field, divisor: int) -> None:
    limit = v.grid.n_points // divisor
    magnitudes = np.abs(v.spectrum)
    peak = float(np.max(magnitudes))
    if peak == 0.0:
        return
    outside = magnitudes[np.abs(v.grid.modes) > limit]
    if outside.size and float(np.max(outside)) > _BAND_RTOL * peak:
        raise ValueError(
            f"Field must be band-limited to |m| <= N/{divisor} = {limit} for this bracket"
        )


def _evaluate_terms(v: Field, terms: LeibnizTerms) -> Field:
    result = Field.constant(v.grid, 0.0)
    cache: Dict[int, Field] = {}
    for (alpha, beta), coefficient in terms.items():
        for order in (alpha, beta):
            if order not in cache:
                cache[order] = derivative(v, order)
        result = result + coefficient * dealiased_product(cache[alpha], cache[beta])
    return result


def _routes(direct: Field, leibniz: Field) -> CommutatorRoutes:
    return CommutatorRoutes(direct, leibniz, relative_linf_error(direct, leibniz))


# -----------------------------------------------------------------------------
# [A, B]
# -----------------------------------------------------------------------------
def commutator_direct(v: Field, symbol: DispersionSymbol) -> Field:
    av = apply_generator(v, symbol)
    v_x = derivative(v, 1)
    return (
        apply_generator(dealiased_product(v, v_x), symbol)
        - dealiased_product(av, v_x)
        - dealiased_product(v, derivative(av, 1))
    )


def commutator_AB(
    v: Field, symbol: DispersionSymbol, verify: bool = False
) -> Union[Field, CommutatorRoutes]:
    """
    [A, B](v) from the cancelled Leibniz sum; with verify=True both routes.

    Raises:
        ValueError: If v carries modes beyond N/4
    """
    _require_band(v, 4)
    leibniz = _evaluate_terms(v, commutator_terms(symbol))
    if not verify:
        return leibniz
    return _routes(commutator_direct(v, symbol), leibniz)


# -----------------------------------------------------------------------------
# [A, [A, B]]
# -----------------------------------------------------------------------------
def double_commutator_direct(v: Field, symbol: DispersionSymbol) -> Field:
    av = apply_generator(v, symbol)
    a2v = apply_generator(av, symbol)
    return (
        apply_generator(dealiased_product(v, derivative(v, 1)), symbol, times=2)
        - 2.0 * apply_generator(derivative(dealiased_product(v, av), 1), symbol)
        + derivative(dealiased_product(av, av), 1)
        + derivative(dealiased_product(v, a2v), 1)
    )


def double_commutator(
    v: Field, symbol: DispersionSymbol, verify: bool = False
) -> Union[Field, CommutatorRoutes]:
    """
    [A, [A, B]](v) from the four-term closed form; with verify=True both routes.

    Raises:
        ValueError: If v carries modes beyond N/6
    """
    _require_band(v, 6)
    direct = double_commutator_direct(v, symbol)
    if not verify:
        return direct
    return _routes(direct, _evaluate_terms(v, double_commutator_terms(symbol)))


def nested_bracket(v: Field, symbol: DispersionSymbol) -> Field:
    """
    [A, C](v) = A C(v) - dC(v)[Av] with C = [A, B], built only from commutator_AB.

    C is quadratic, so the central difference (C(v + εw) - C(v - εw)) / 2ε equals
    dC(v)[w] exactly up to rounding for any ε.
    """
    _require_band(v, 6)
    w = apply_generator(v, symbol)
    w_size = linf_norm(w)
    if w_size == 0.0:
        return Field.constant(v.grid, 0.0)
    epsilon = max(linf_norm(v), 1.0) / w_size
    forward = commutator_AB(v + epsilon * w, symbol)
    backward = commutator_AB(v - epsilon * w, symbol)
    directional = (1.0 / (2.0 * epsilon)) * (forward - backward)
    result = apply_generator(commutator_AB(v, symbol), symbol) - directional
    custom_logger.debug("Nested bracket evaluated with ε=%.3e", epsilon)
    return result
