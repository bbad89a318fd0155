#!/bin/python
#-----------------------------------------------------------------------------
# File Name : transforms.py
# Author: rsperiods contributors
#
# Creation Date : Tue Aug 18 11:40:12 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import json

from torchvision.transforms import Compose

from .characters import RealCharacter
from .local_factors import parameter_gaps
from .period import VerificationCase, verify_case
from .utils import CONSTANCY_TOL, MATCH_TOL, STRIP_POINTS


class VerifyCase(object):
    """VerificationCase -> VerificationReport"""
    def __init__(self, points=STRIP_POINTS):
        self.points = tuple(points)

    def __call__(self, case: VerificationCase):
        return verify_case(case, self.points)

    def __repr__(self):
        return self.__class__.__name__ + '(points = {0})'.format(len(self.points))


class ToRecord(object):
    """VerificationReport -> flat dict, one row of the suite DataFrame."""
    def __init__(self, constancy_tol=CONSTANCY_TOL, match_tol=MATCH_TOL):
        self.constancy_tol = constancy_tol
        self.match_tol = match_tol

    def __call__(self, report):
        case = report.case
        constancy = report.numeric_constancy_residual
        match = report.numeric_match_residual
        gaps = parameter_gaps(case.mu, case.nu)
        return {
            'field': case.field.value,
            'n': case.n,
            'mu': json.dumps([list(r) for r in case.mu.rows]),
            'nu': json.dumps([list(r) for r in case.nu.rows]),
            'j': case.j,
            'chi_delta': case.chi.delta if isinstance(case.chi, RealCharacter) else 0,
            'eps_psi': case.eps_psi,
            'delta_n': case.eps.delta_n,
            'delta_n1': case.eps.delta_n1,
            'constant': 'NotConstant' if report.not_constant else str(report.reduced_constant),
            'omega': str(report.omega),
            'exact_match': report.exact_match,
            'not_constant': report.not_constant,
            'constancy_residual': constancy,
            'match_residual': match,
            # nan residuals (no points) count as a failure
            'numeric_ok': bool(constancy < self.constancy_tol and match < self.match_tol),
            'positivity_ok': all((g.twice_value > 0) == (i + k <= case.n)
                                 for (_, i, k), g in gaps.items()),
        }

    def __repr__(self):
        return self.__class__.__name__ + '(constancy_tol = {0}, match_tol = {1})'.format(
            self.constancy_tol, self.match_tol)


def default_transform(points=STRIP_POINTS, constancy_tol=CONSTANCY_TOL, match_tol=MATCH_TOL):
    return Compose([VerifyCase(points), ToRecord(constancy_tol, match_tol)])
