#!/bin/python
#-----------------------------------------------------------------------------
# File Name : gamma_calculus.py
# Author: rsperiods contributors
#
# Creation Date : Tue Aug 11 09:40:08 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""Formal products  i^k * prod Gamma_K(+-s + a)^e  with K in {R, C}.

Gamma_R(s) = pi^(-s/2) Gamma(s/2) and Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

import numpy as np
from scipy.special import loggamma

from .utils import POLE_DISTANCE
from .weights import HalfInt


class NotConstant(Exception):
    """The product is a non-constant function of s; residual holds what is left."""
    def __init__(self, residual, msg=None):
        self.residual = residual
        super().__init__(msg or "not constant: {}".format(render(residual)))


_UNIT_NAMES = ('1', 'i', '-1', '-i')

@dataclass(frozen=True)
class UnitI:
    """The fourth root of unity i^k."""
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'k', int(self.k) % 4)

    @classmethod
    def of_sign(cls, sign):
        if sign not in (1, -1):
            raise ValueError("Expected +1 or -1, got {!r}".format(sign))
        return cls(0 if sign == 1 else 2)

    def __mul__(self, other):
        if not isinstance(other, UnitI):
            return NotImplemented
        return UnitI(self.k + other.k)

    def __pow__(self, e):
        return UnitI(self.k * int(e))

    def inverse(self):
        return UnitI(-self.k)

    def to_complex(self):
        return (1, 1j, -1, -1j)[self.k]

    def __str__(self):
        return _UNIT_NAMES[self.k]

    @classmethod
    def parse(cls, text):
        text = text.strip().replace(' ', '')
        if text in _UNIT_NAMES:
            return cls(_UNIT_NAMES.index(text))
        m = re.fullmatch(r'i\^(-?\d+)', text)
        if m is None:
            raise ValueError("Malformed unit {!r}".format(text))
        return cls(int(m.group(1)))


@dataclass(frozen=True, order=True)
class GammaAtom:
    """Gamma_kind(sign * s + shift)"""
    kind: str
    sign: int
    shift: HalfInt

    def __post_init__(self):
        if self.kind not in ('R', 'C'):
            raise ValueError("Atom kind must be 'R' or 'C', got {!r}".format(self.kind))
        if self.sign not in (1, -1):
            raise ValueError("Atom sign must be +1 or -1, got {!r}".format(self.sign))
        object.__setattr__(self, 'shift', HalfInt.of(self.shift))

    def argument(self, s):
        return self.sign * s + float(self.shift)


@dataclass(frozen=True)
class GammaProduct:
    unit: UnitI
    atoms: Tuple[Tuple[GammaAtom, int], ...] = ()

    @classmethod
    def build(cls, unit=UnitI(0), atoms: Mapping[GammaAtom, int] = None):
        """Canonical form: zero exponents dropped, atoms sorted."""
        atoms = atoms or {}
        return cls(unit, tuple(sorted((a, e) for a, e in atoms.items() if e != 0)))

    @classmethod
    def one(cls):
        return cls(UnitI(0))

    def as_dict(self) -> Dict[GammaAtom, int]:
        return dict(self.atoms)

    def __mul__(self, other):
        return gp_mul(self, other)

    def __truediv__(self, other):
        return gp_mul(self, gp_inv(other))

    def __str__(self):
        return render(self)


def gamma_r(shift, sign=1, exp=1) -> GammaProduct:
    return GammaProduct.build(UnitI(0), {GammaAtom('R', sign, HalfInt.of(shift)): exp})

def gamma_c(shift, sign=1, exp=1) -> GammaProduct:
    return GammaProduct.build(UnitI(0), {GammaAtom('C', sign, HalfInt.of(shift)): exp})

def unit_product(unit: UnitI) -> GammaProduct:
    return GammaProduct(unit)


def gp_mul(x: GammaProduct, y: GammaProduct) -> GammaProduct:
    atoms = Counter(x.as_dict())
    for a, e in y.atoms:
        atoms[a] += e
    return GammaProduct.build(x.unit * y.unit, atoms)

def gp_inv(x: GammaProduct) -> GammaProduct:
    return GammaProduct.build(x.unit.inverse(), {a: -e for a, e in x.atoms})

def gp_shift(x: GammaProduct, c) -> GammaProduct:
    c = HalfInt.of(c)
    return GammaProduct.build(x.unit, {
        GammaAtom(a.kind, a.sign, a.shift + (c if a.sign == 1 else -c)): e for a, e in x.atoms})

def gp_reflect(x: GammaProduct) -> GammaProduct:
    return GammaProduct.build(x.unit, {
        GammaAtom(a.kind, -a.sign, a.shift + a.sign): e for a, e in x.atoms})

def expand_dup(x: GammaProduct) -> GammaProduct:
    """Legendre duplication Gamma_C(z) = Gamma_R(z) Gamma_R(z + 1)."""
    atoms = Counter()
    for a, e in x.atoms:
        if a.kind == 'C':
            atoms[GammaAtom('R', a.sign, a.shift)] += e
            atoms[GammaAtom('R', a.sign, a.shift + 1)] += e
        else:
            atoms[a] += e
    return GammaProduct.build(x.unit, atoms)


def _common(e, f):
    # largest multiplicity that can be split off both exponents
    if e * f <= 0:
        return 0
    return min(abs(e), abs(f)) * (1 if e > 0 else -1)

def reduce_to_constant(x: GammaProduct) -> UnitI:
    """Decide whether x is constant in s and return the constant.

    Gamma_R(s+a) Gamma_R(2-s-a) = 1/sin(pi (s+a)/2) and
    Gamma_C(s+a) Gamma_C(1-s-a) = Gamma_R-pair(a) * Gamma_R-pair(a+1), so every
    +s atom has exactly one possible partner. A pair at a = rho + 2m with
    rho in {0, 1/2, 1, 3/2} equals (-1)^m / sin(pi (s+rho)/2). Any atom left
    unpaired, or a non-zero net pair count in some class rho, means x depends on s.
    """
    atoms = Counter(x.as_dict())
    # twice the shift of each Gamma_R pair -> multiplicity
    pairs = Counter()

    for a in [a for a in atoms if a.kind == 'C' and a.sign == 1]:
        partner = GammaAtom('C', -1, HalfInt(2 - a.shift.twice_value))
        k = _common(atoms[a], atoms.get(partner, 0))
        if k:
            atoms[a] -= k
            atoms[partner] -= k
            pairs[a.shift.twice_value] += k
            pairs[a.shift.twice_value + 2] += k

    rest = expand_dup(GammaProduct.build(UnitI(0), atoms))
    atoms = Counter(rest.as_dict())
    for a in [a for a in atoms if a.sign == 1]:
        partner = GammaAtom('R', -1, HalfInt(4 - a.shift.twice_value))
        k = _common(atoms[a], atoms.get(partner, 0))
        if k:
            atoms[a] -= k
            atoms[partner] -= k
            pairs[a.shift.twice_value] += k

    residual = GammaProduct.build(x.unit, atoms)
    if residual.atoms:
        raise NotConstant(residual)

    net = Counter()
    sign_exponent = 0
    for twice, k in pairs.items():
        rho = twice % 4
        net[rho] += k
        sign_exponent += (twice - rho) // 4 * k
    if any(net.values()):
        raise NotConstant(x, "not constant: unbalanced sine factors in {}".format(render(x)))
    return x.unit * UnitI(2 * sign_exponent)


def pole_at(atom: GammaAtom, s0: HalfInt) -> bool:
    z = atom.shift + (s0 if atom.sign == 1 else -s0)
    if not z.is_integer or z.twice_value > 0:
        return False
    return atom.kind == 'C' or z.to_int() % 2 == 0

def log_gamma_r(z):
    return -(z / 2) * np.log(np.pi) + loggamma(z / 2)

def log_gamma_c(z):
    return np.log(2) - z * np.log(2 * np.pi) + loggamma(z)

def _pole_distance(atom, z):
    step = 2 if atom.kind == 'R' else 1
    nearest = min(0, step * round(z.real / step))
    return abs(z - nearest)

def eval_numeric(x: GammaProduct, s) -> complex:
    s = complex(s)
    total = 0j
    for a, e in x.atoms:
        z = a.argument(s)
        if _pole_distance(a, z) < POLE_DISTANCE:
            raise ValueError("s = {} is within {} of a pole of {}".format(
                s, POLE_DISTANCE, _render_atom(a, 1)))
        total += e * (log_gamma_r(z) if a.kind == 'R' else log_gamma_c(z))
    return complex(x.unit.to_complex() * np.exp(total))


def _render_atom(a: GammaAtom, e: int) -> str:
    arg = 's' if a.sign == 1 else '-s'
    if a.shift.twice_value > 0:
        arg += '+{}'.format(a.shift)
    elif a.shift.twice_value < 0:
        arg += '-{}'.format(-a.shift)
    out = 'Γ_{}({})'.format(a.kind, arg)
    if e != 1:
        out += '^{}'.format(e)
    return out

def render(x: GammaProduct) -> str:
    """e.g. "i^2 * Γ_C(-s+1)^-1 * Γ_R(s+5/2)^2"; atoms in sorted order."""
    return ' * '.join(['i^{}'.format(x.unit.k)] + [_render_atom(a, e) for a, e in x.atoms])

_ATOM_RE = re.compile(r'Γ_([RC])\((-?)s(?:([+-])(\d+(?:/2)?))?\)(?:\^(-?\d+))?')

def parse_product(text: str) -> GammaProduct:
    unit = UnitI(0)
    atoms = Counter()
    for token in text.split('*'):
        token = token.strip().replace(' ', '')
        if not token:
            raise ValueError("Empty factor in {!r}".format(text))
        m = _ATOM_RE.fullmatch(token)
        if m is None:
            unit = unit * UnitI.parse(token)
            continue
        kind, minus, op, shift, exp = m.groups()
        value = HalfInt.of(shift) if shift else HalfInt(0)
        if op == '-':
            value = -value
        atoms[GammaAtom(kind, -1 if minus else 1, value)] += int(exp) if exp else 1
    return GammaProduct.build(unit, atoms)

def to_json(x: GammaProduct):
    return {'unit': str(x.unit),
            'atoms': [{'kind': a.kind, 'sign': a.sign, 'shift': str(a.shift), 'exp': e}
                      for a, e in x.atoms]}

def from_json(obj) -> GammaProduct:
    atoms = Counter()
    for item in obj.get('atoms', []):
        atoms[GammaAtom(item['kind'], int(item['sign']), HalfInt.of(item['shift']))] += int(item['exp'])
    return GammaProduct.build(UnitI.parse(obj.get('unit', '1')), atoms)
