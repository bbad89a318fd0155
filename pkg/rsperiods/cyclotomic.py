#!/bin/python
#-----------------------------------------------------------------------------
# File Name : cyclotomic.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 17 09:26:51 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""Exact arithmetic in Q(zeta_M), Dirichlet characters and Gauss sums.

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(M)-1) modulo
Phi_M, as a numerator vector of Python ints over a common denominator. Since
Q(zeta_M) = Q(zeta_{M/2}) for M = 2 mod 4, results are kept at level M/2 there.
"""
from __future__ import annotations

import cmath
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy
from sympy import Poly, ZZ, totient
from sympy.ntheory import factorint, primitive_root
from sympy.ntheory.modular import crt

from .utils import format_fraction, parse_fraction

_X = sympy.Symbol('X')


def _int_vector(values) -> np.ndarray:
    # object dtype keeps arbitrary-precision ints
    return np.array([int(v) for v in values], dtype=object)

@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> Poly:
    """Phi_M = (X^M - 1) / prod_{d | M, d < M} Phi_d"""
    if M < 1:
        raise ValueError("Cyclotomic polynomials need M >= 1, got {}".format(M))
    p = Poly(_X**M - 1, _X, domain=ZZ)
    for d in sympy.divisors(M)[:-1]:
        p = p.exquo(cyclotomic_poly(d))
    return p

def euler_phi(M: int) -> int:
    return int(totient(M))

def field_level(M: int) -> int:
    return M // 2 if M % 4 == 2 else M

@lru_cache(maxsize=None)
def _reduction_table(M: int) -> np.ndarray:
    # row e holds the power-basis coordinates of zeta_M^e, 0 <= e < M
    phi = euler_phi(M)
    low = _int_vector(reversed(cyclotomic_poly(M).all_coeffs()))[:phi]
    table = np.zeros((M, phi), dtype=object)
    row = np.zeros(phi, dtype=object)
    row[0] = 1
    for e in range(M):
        table[e] = row
        row = np.concatenate(([0], row[:-1])) - row[-1] * low
    table.setflags(write=False)
    return table

def _to_poly(num) -> Poly:
    return Poly([int(v) for v in reversed(num)], _X, domain=ZZ)

def _from_poly(p: Poly, phi) -> np.ndarray:
    low = [int(c) for c in reversed(p.all_coeffs())][:phi]
    return _int_vector(low + [0] * (phi - len(low)))


class CyclotomicNumber:
    """An element of Q(zeta_level)."""
    __slots__ = ('level', '_num', '_den')

    def __init__(self, level, coeffs):
        level = int(level)
        if level < 1:
            raise ValueError("Level must be >= 1, got {}".format(level))
        coeffs = [parse_fraction(c) for c in coeffs]
        if len(coeffs) != euler_phi(level):
            raise ValueError("Level {} needs {} coefficients, got {}".format(
                level, euler_phi(level), len(coeffs)))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self._set(level, _int_vector(c * den for c in coeffs), den)

    def _set(self, level, num, den):
        if den < 0:
            num, den = -num, -den
        g = math.gcd(functools.reduce(math.gcd, num, 0), den)
        if g > 1:
            num, den = num // g, den // g
        self.level, self._num, self._den = level, num, den

    @classmethod
    def _make(cls, level, num, den=1):
        x = cls.__new__(cls)
        x._set(level, _int_vector(num), int(den))
        return x

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num)

    def _terms(self):
        idx = np.array([e for e, v in enumerate(self._num) if v], dtype=np.int64)
        return idx, self._num[idx]

    def is_zero(self):
        return not any(self._num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        x, y = _align(self, other)
        return x._den == y._den and np.array_equal(x._num, y._num)

    __hash__ = None

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cyc_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cyc_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cyc_sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cyc_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return cyc_neg(self)

    def __repr__(self):
        return 'CyclotomicNumber({}, [{}])'.format(
            self.level, ', '.join(format_fraction(c) for c in self.coeffs))

    def to_complex(self) -> complex:
        return sum(complex(c) * cmath.exp(2j * cmath.pi * e / self.level)
                   for e, c in enumerate(self.coeffs))

    def to_json(self):
        return {'level': self.level, 'coeffs': [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj['level']), obj['coeffs'])


def _from_exponents(M, exps, vals, den=1) -> CyclotomicNumber:
    """sum vals[i] zeta_M^exps[i] / den, reduced (and moved to level M/2 when M = 2 mod 4)."""
    exps = np.asarray(exps, dtype=np.int64) % M
    vals = _int_vector(vals)
    if M % 4 == 2:
        # zeta_M = -zeta_h^{(h+1)/2}, h = M/2 odd
        half = M // 2
        vals = np.where(exps % 2 == 1, -vals, vals)
        exps = (exps * ((half + 1) // 2)) % half
        M = half
    table = _reduction_table(M)
    if exps.size == 0:
        return CyclotomicNumber._make(M, [0] * table.shape[1], den)
    return CyclotomicNumber._make(M, np.dot(vals, table[exps]), den)

def _lift(x: CyclotomicNumber, M) -> CyclotomicNumber:
    idx, vals = x._terms()
    return _from_exponents(M, idx * (M // x.level), vals, x._den)

def _align(x, y):
    if x.level == y.level:
        return x, y
    M = x.level * y.level // math.gcd(x.level, y.level)
    return _lift(x, M), _lift(y, M)

def _coerce(v) -> Optional[CyclotomicNumber]:
    if isinstance(v, CyclotomicNumber):
        return v
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return cyc_rational(v)
    return None


def cyc_rational(q, level=1) -> CyclotomicNumber:
    q = parse_fraction(q)
    return CyclotomicNumber(level, [q] + [0] * (euler_phi(level) - 1))

def cyc_from_root(M, e, coeff=1) -> CyclotomicNumber:
    coeff = parse_fraction(coeff)
    return _from_exponents(M, [e], [coeff.numerator], coeff.denominator)

def cyc_add(x, y) -> CyclotomicNumber:
    x, y = _align(x, y)
    den = x._den * y._den // math.gcd(x._den, y._den)
    return CyclotomicNumber._make(x.level, x._num * (den // x._den) + y._num * (den // y._den), den)

def cyc_neg(x) -> CyclotomicNumber:
    return CyclotomicNumber._make(x.level, -x._num, x._den)

def cyc_sub(x, y) -> CyclotomicNumber:
    return cyc_add(x, cyc_neg(y))

def cyc_scale(x, q) -> CyclotomicNumber:
    q = parse_fraction(q)
    return CyclotomicNumber._make(x.level, x._num * q.numerator, x._den * q.denominator)

def cyc_mul(x, y) -> CyclotomicNumber:
    x, y = _align(x, y)
    # product of the numerator polynomials, reduced mod Phi_level
    prod = (_to_poly(x._num) * _to_poly(y._num)).rem(cyclotomic_poly(x.level))
    return CyclotomicNumber._make(x.level, _from_poly(prod, euler_phi(x.level)), x._den * y._den)

def galois_apply(t: int, x: CyclotomicNumber) -> CyclotomicNumber:
    """The automorphism zeta -> zeta^t of Q(zeta_level)."""
    if math.gcd(t, x.level) != 1:
        raise ValueError("t={} is not coprime to the level {}".format(t, x.level))
    idx, vals = x._terms()
    return _from_exponents(x.level, idx * t, vals, x._den)

def cyc_conj(x: CyclotomicNumber) -> CyclotomicNumber:
    return galois_apply(-1, x)


class _UnitGroup:
    """(Z/N)^x as a product of cyclic factors: the smallest primitive root mod
    p^k for odd p, and <-1> x <5> mod 2^k (k >= 3), each lifted to Z/N by CRT."""

    def __init__(self, N):
        self.modulus = N
        gens, orders = [], []
        for p, k in sorted(factorint(N).items()):
            q = p ** k
            if p == 2:
                local = [] if k == 1 else [(q - 1, 2)] if k == 2 else [(q - 1, 2), (5, 2 ** (k - 2))]
            else:
                local = [(int(primitive_root(q)), q // p * (p - 1))]
            for g, o in local:
                gens.append(int(crt([q, N // q], [g, 1])[0]) if N // q > 1 else g % N)
                orders.append(o)
        self.generators = tuple(gens)
        self.orders = tuple(orders)
        self.exponent = 1
        for o in orders:
            self.exponent = self.exponent * o // math.gcd(self.exponent, o)
        self.logs = {}
        for exps in itertools.product(*[range(o) for o in orders]):
            x = 1 % N
            for g, a in zip(gens, exps):
                x = x * pow(g, a, N) % N
            self.logs[x] = exps
        if len(self.logs) != euler_phi(N):
            raise ValueError('generators do not span (Z/{})^x'.format(N))

@lru_cache(maxsize=None)
def _unit_group(N) -> _UnitGroup:
    if N < 1:
        raise ValueError("Modulus must be >= 1, got {}".format(N))
    return _UnitGroup(N)


@dataclass(frozen=True)
class DirichletCharacter:
    """chi(g_i) = exp(2 pi i exponents[i] / order_i) on the fixed generators g_i."""
    modulus: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        group = _unit_group(self.modulus)
        if len(self.exponents) != len(group.orders):
            raise ValueError("(Z/{})^x has {} generators, got {} exponents".format(
                self.modulus, len(group.orders), len(self.exponents)))
        object.__setattr__(self, 'exponents',
                           tuple(int(a) % o for a, o in zip(self.exponents, group.orders)))

    @property
    def group(self) -> _UnitGroup:
        return _unit_group(self.modulus)

    @property
    def value_order(self) -> int:
        m = 1
        for a, o in zip(self.exponents, self.group.orders):
            d = o // math.gcd(a, o)
            m = m * d // math.gcd(m, d)
        return m

    @cached_property
    def _values(self) -> Dict[int, int]:
        # x -> k with chi(x) = zeta_m^k
        group, m = self.group, self.value_order
        E = group.exponent
        out = {}
        for x, logs in group.logs.items():
            s = sum(a * l * (E // o) for a, l, o in zip(self.exponents, logs, group.orders)) % E
            out[x] = s // (E // m)
        return out

    def exponent_at(self, x) -> Optional[int]:
        return self._values.get(x % self.modulus)

    def __call__(self, x) -> CyclotomicNumber:
        k = self.exponent_at(x)
        if k is None:
            return cyc_rational(0)
        return cyc_from_root(self.value_order, k)

    def power(self, t) -> 'DirichletCharacter':
        return DirichletCharacter(self.modulus, tuple(a * t for a in self.exponents))

    def parity(self) -> int:
        return 1 if self.exponent_at(-1) == 0 else -1

    @property
    def is_trivial(self):
        return not any(self.exponents)

    @cached_property
    def conductor(self) -> int:
        units = self._values
        for f in sympy.divisors(self.modulus):
            if all(k == 0 for x, k in units.items() if x % f == 1 % f):
                return int(f)
        return self.modulus

    @property
    def is_primitive(self):
        return self.conductor == self.modulus

    def to_json(self):
        return {'modulus': self.modulus, 'exponents': list(self.exponents),
                'value_order': self.value_order, 'conductor': self.conductor}


def dirichlet_characters(N: int) -> List[DirichletCharacter]:
    group = _unit_group(N)
    return [DirichletCharacter(N, exps) for exps in itertools.product(*[range(o) for o in group.orders])]

def gauss_sum(chi: DirichletCharacter, normalize=False) -> CyclotomicNumber:
    """sum_{x in (Z/N)^x} chi(x)^-1 zeta_N^x, divided by phi(N) when normalized."""
    N, m = chi.modulus, chi.value_order
    L = N * m // math.gcd(N, m)
    units = sorted(chi._values)
    exps = [(-chi._values[x] * (L // m) + x * (L // N)) % L for x in units]
    g = _from_exponents(L, exps, [1] * len(exps))
    if normalize:
        g = cyc_scale(g, Fraction(1, euler_phi(N)))
    return g


def _gauss_level(chi):
    N, m = chi.modulus, chi.value_order
    return N * m // math.gcd(N, m)

def galois_exponents(chi: DirichletCharacter) -> List[int]:
    L = field_level(_gauss_level(chi))
    return [t for t in range(1, max(L, 2)) if math.gcd(t, L) == 1]

def _lift_exponent(t, L):
    # the t' mod L acting like t on Q(zeta_L) = Q(zeta_{L/2})
    h = field_level(L)
    if h == L:
        return t % L
    t = t % h
    return t if t % 2 else t + h

def galois_conjugate_character(chi: DirichletCharacter, t: int) -> DirichletCharacter:
    return chi.power(_lift_exponent(t, _gauss_level(chi)))

def check_equivariance(chi: DirichletCharacter, t: int) -> bool:
    """sigma_t(G(chi)) == chi^sigma(t) G(chi^sigma)"""
    L = _gauss_level(chi)
    if math.gcd(t, field_level(L)) != 1:
        raise ValueError("t={} is not coprime to lcm(N, m)={}".format(t, L))
    t_lift = _lift_exponent(t, L)
    lhs = galois_apply(t, gauss_sum(chi))
    conj = chi.power(t_lift)
    return lhs == conj(t_lift) * gauss_sum(conj)

def check_norm(chi: DirichletCharacter) -> bool:
    """G(chi) sigma_{-1}(G(chi)) == N, i.e. |G(chi)|^2 = N."""
    g = gauss_sum(chi)
    return g * cyc_conj(g) == chi.modulus

def check_conjugate_product(chi: DirichletCharacter) -> bool:
    """G(chi) G(chi^-1) == chi(-1) N"""
    return gauss_sum(chi) * gauss_sum(chi.power(-1)) == chi.parity() * chi.modulus
