#!/bin/python
#-----------------------------------------------------------------------------
# File Name : period.py
# Author: rsperiods contributors
#
# Creation Date : Thu Aug 13 10:17:44 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""The period constant Omega_{mu,nu,j} and its verification against the
archimedean Gamma-ratio

  Gamma_psi(s+j, rho^mu, rho^nu, chi) / Gamma_psi(s, rho^0, rho^0, chi^(j))
    * L(s+j, pi_mu x pi_nu) / L(s, pi_0 x pi_0)

which is constant in s and equal to Omega_{mu,nu,j} whenever (mu, nu) is
balanced at j.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .characters import (ArchCharacter, EpsilonChoice, character_from_json, character_to_json,
                         chi_twist, is_finite_order, rho_list, RealCharacter)
from .gamma_calculus import (GammaProduct, NotConstant, UnitI, eval_numeric, gp_inv, gp_mul,
                             gp_shift, reduce_to_constant)
from .local_factors import PsiData, big_gamma, l_pair
from .utils import STRIP_POINTS, parse_int
from .weights import FieldKind, Weight, check_pair, is_balanced_at


class NotBalancedError(ValueError):
    pass

class NotBalancedWarning(UserWarning):
    pass


def omega_constant(mu: Weight, nu: Weight, j: int, eps_psi: int = 1) -> UnitI:
    """(eps_psi i)^{j n(n-1)/2 [K:R]} * c'_mu * c_nu * eps_{mu,nu}"""
    check_pair(mu, nu)
    if not is_balanced_at(mu, nu, j):
        warnings.warn("(mu, nu) is not balanced at j={}".format(j), NotBalancedWarning)
    n = mu.n
    embeddings = range(mu.field.embeddings)
    psi = PsiData(eps_psi, n)
    prefactor = (UnitI(1) * UnitI.of_sign(eps_psi)) ** (j * n * (n - 1) // 2 * mu.field.degree)
    c_exponent = sum((n - i) * sum(w.row(e)[i-1] for e in embeddings for w in (mu, nu))
                     for i in range(1, n))
    sign_exponent = sum(mu.row(e)[i-1] + nu.row(e)[k-1]
                        for i in range(1, n + 1) for k in range(1, i) if i + k <= n
                        for e in embeddings)
    return prefactor * psi.base ** c_exponent * UnitI(2 * sign_exponent)


@dataclass(frozen=True)
class VerificationCase:
    mu: Weight
    nu: Weight
    j: int
    chi: ArchCharacter
    eps: EpsilonChoice = EpsilonChoice()
    eps_psi: int = 1

    @property
    def field(self) -> FieldKind:
        return self.mu.field

    @property
    def n(self):
        return self.mu.n

    def to_json(self):
        return {'field': self.field.value, 'mu': [list(r) for r in self.mu.rows],
                'nu': [list(r) for r in self.nu.rows], 'j': self.j,
                'chi': character_to_json(self.chi), 'eps': self.eps.to_json(),
                'eps_psi': self.eps_psi}

    @classmethod
    def from_json(cls, obj):
        field_kind = FieldKind.parse(obj['field'])
        return cls(Weight.from_json(obj['mu'], field_kind), Weight.from_json(obj['nu'], field_kind),
                   parse_int(obj.get('j', 0)), character_from_json(obj.get('chi', 'trivial'), field_kind),
                   EpsilonChoice.from_json(obj.get('eps')), parse_int(obj.get('eps_psi', 1)))


def _check_case(mu, nu, j, chi, eps):
    check_pair(mu, nu)
    if not is_balanced_at(mu, nu, j):
        raise NotBalancedError("(mu, nu) = ({}, {}) is not balanced at j={}".format(
            [list(r) for r in mu.rows], [list(r) for r in nu.rows], j))
    eps.validate(mu.field, mu.n)
    if not is_finite_order(chi):
        raise ValueError("chi must have finite order, got {}".format(chi))
    if isinstance(chi, RealCharacter) != (mu.field is FieldKind.REAL):
        raise ValueError("chi {} does not live on K = {}".format(chi, mu.field.value))

def ratio_pieces(mu, nu, j, chi, eps: EpsilonChoice = EpsilonChoice(), eps_psi=1):
    """The four constituents of the archimedean ratio, shifts already applied."""
    _check_case(mu, nu, j, chi, eps)
    n = mu.n
    psi = PsiData(eps_psi, n)
    zero_n, zero_n1 = Weight.zero(mu.field, n), Weight.zero(mu.field, n - 1)
    # pi_0 carries the same central characters as pi_mu, pi_nu
    numerator = gp_shift(big_gamma(rho_list(mu, eps.delta_n), rho_list(nu, eps.delta_n1), chi, psi), j)
    denominator = big_gamma(rho_list(zero_n, eps.delta_n), rho_list(zero_n1, eps.delta_n1),
                            chi_twist(chi, j), psi)
    return numerator, denominator, gp_shift(l_pair(mu, nu), j), l_pair(zero_n, zero_n1)

def archimedean_ratio(mu, nu, j, chi, eps: EpsilonChoice = EpsilonChoice(), eps_psi=1) -> GammaProduct:
    big_num, big_den, l_num, l_den = ratio_pieces(mu, nu, j, chi, eps, eps_psi)
    return gp_mul(gp_mul(big_num, gp_inv(big_den)), gp_mul(l_num, gp_inv(l_den)))


@dataclass
class VerificationReport:
    case: VerificationCase
    omega: UnitI
    reduced_constant: Optional[UnitI] = None
    numeric_constancy_residual: float = float('nan')
    numeric_match_residual: float = float('nan')

    @property
    def not_constant(self):
        return self.reduced_constant is None

    @property
    def exact_match(self):
        return self.reduced_constant is not None and self.reduced_constant == self.omega

    @property
    def inputs(self):
        return self.case.to_json()

    def to_json(self):
        return {'constant': 'NotConstant' if self.not_constant else str(self.reduced_constant),
                'omega': str(self.omega),
                'exact_match': self.exact_match,
                'residuals': {'constancy': self.numeric_constancy_residual,
                              'match': self.numeric_match_residual},
                'inputs': self.inputs}


def verify_archimedean(mu, nu, j, chi, eps: EpsilonChoice = EpsilonChoice(), eps_psi=1,
                       points: Sequence[complex] = STRIP_POINTS) -> VerificationReport:
    ratio = archimedean_ratio(mu, nu, j, chi, eps, eps_psi)
    report = VerificationReport(VerificationCase(mu, nu, j, chi, eps, eps_psi),
                                omega_constant(mu, nu, j, eps_psi))
    try:
        report.reduced_constant = reduce_to_constant(ratio)
    except NotConstant:
        pass
    if points:
        values = [eval_numeric(ratio, s) for s in points]
        target = report.omega.to_complex()
        report.numeric_constancy_residual = max(
            [abs(a - b) for a, b in itertools.combinations(values, 2)] or [0.0])
        report.numeric_match_residual = max(abs(v - target) for v in values)
    return report

def verify_case(case: VerificationCase, points=STRIP_POINTS) -> VerificationReport:
    return verify_archimedean(case.mu, case.nu, case.j, case.chi, case.eps, case.eps_psi, points)
