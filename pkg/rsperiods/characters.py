#!/bin/python
#-----------------------------------------------------------------------------
# File Name : characters.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 10 14:31:55 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .utils import parse_int
from .weights import FieldKind, HalfInt, PurityError, Weight, infinitesimal, is_pure


@dataclass(frozen=True)
class RealCharacter:
    """|.|^t sgn^delta on R^x"""
    t: HalfInt
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, 't', HalfInt.of(self.t))
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1, got {!r}".format(self.delta))

    def __str__(self):
        return 'Real({},{})'.format(self.t, self.delta)


@dataclass(frozen=True)
class ComplexCharacter:
    """iota^a iota-bar^b on C^x"""
    a: HalfInt
    b: HalfInt

    def __post_init__(self):
        object.__setattr__(self, 'a', HalfInt.of(self.a))
        object.__setattr__(self, 'b', HalfInt.of(self.b))
        if not (self.a - self.b).is_integer:
            raise ValueError("a - b must be an integer, got a={}, b={}".format(self.a, self.b))

    def __str__(self):
        return 'Complex({},{})'.format(self.a, self.b)


ArchCharacter = Union[RealCharacter, ComplexCharacter]


def _same_variant(x, y):
    if type(x) is not type(y):
        raise ValueError("Cannot combine {} and {}".format(x, y))

def char_mul(x: ArchCharacter, y: ArchCharacter) -> ArchCharacter:
    _same_variant(x, y)
    if isinstance(x, RealCharacter):
        return RealCharacter(x.t + y.t, x.delta ^ y.delta)
    return ComplexCharacter(x.a + y.a, x.b + y.b)

def char_inv(x: ArchCharacter) -> ArchCharacter:
    if isinstance(x, RealCharacter):
        return RealCharacter(-x.t, x.delta)
    return ComplexCharacter(-x.a, -x.b)

def char_prod(*chars: ArchCharacter) -> ArchCharacter:
    out = chars[0]
    for c in chars[1:]:
        out = char_mul(out, c)
    return out

def ex(x: ArchCharacter) -> Fraction:
    """Exponent of the absolute value: |x| = |.|_K^ex(x)."""
    if isinstance(x, RealCharacter):
        return x.t.value
    return (x.a.value + x.b.value) / 2

def value_at_minus_one(x: ArchCharacter) -> int:
    if isinstance(x, RealCharacter):
        return x.delta
    # iota^a iota-bar^b (z) = iota(z)^{a-b} |z|_C^b
    return (x.a - x.b).to_int() % 2

def is_finite_order(x: ArchCharacter) -> bool:
    if isinstance(x, RealCharacter):
        return x.t.twice_value == 0
    return x.a.twice_value == 0 and x.b.twice_value == 0

def trivial_character(field) -> ArchCharacter:
    if FieldKind.parse(field) is FieldKind.REAL:
        return RealCharacter(HalfInt(0), 0)
    return ComplexCharacter(HalfInt(0), HalfInt(0))

def sign_character(field) -> ArchCharacter:
    if FieldKind.parse(field) is FieldKind.REAL:
        return RealCharacter(HalfInt(0), 1)
    return trivial_character(field)

def chi_twist(chi: ArchCharacter, j: int) -> ArchCharacter:
    """chi^(j) = chi * sgn^j"""
    if not is_finite_order(chi):
        raise ValueError("chi_twist expects a finite-order character, got {}".format(chi))
    if isinstance(chi, RealCharacter):
        return RealCharacter(chi.t, chi.delta ^ (j % 2))
    return chi


@dataclass(frozen=True)
class EpsilonChoice:
    """sgn-exponents of the central characters eps_{n,K} and eps_{n-1,K}."""
    delta_n: int = 0
    delta_n1: int = 0

    def __post_init__(self):
        if self.delta_n not in (0, 1) or self.delta_n1 not in (0, 1):
            raise ValueError("EpsilonChoice bits must be 0 or 1, got ({}, {})".format(
                self.delta_n, self.delta_n1))

    def validate(self, field, n):
        real = FieldKind.parse(field) is FieldKind.REAL
        if self.delta_n and not (real and n % 2):
            raise ValueError("eps_n must be trivial unless K = R and n is odd (n={})".format(n))
        if self.delta_n1 and not (real and (n - 1) % 2):
            raise ValueError("eps_(n-1) must be trivial unless K = R and n-1 is odd (n={})".format(n))
        return self

    def central_character(self, field) -> ArchCharacter:
        # eps_K = eps_{n,K} eps_{n-1,K}
        if FieldKind.parse(field) is FieldKind.COMPLEX:
            return trivial_character(field)
        return RealCharacter(HalfInt(0), self.delta_n ^ self.delta_n1)

    def to_json(self):
        return {'delta_n': self.delta_n, 'delta_n1': self.delta_n1}

    @classmethod
    def from_json(cls, obj):
        if obj is None:
            return cls()
        return cls(parse_int(obj.get('delta_n', 0)), parse_int(obj.get('delta_n1', 0)))


def valid_epsilon_choices(field, n) -> List[EpsilonChoice]:
    real = FieldKind.parse(field) is FieldKind.REAL
    first = (0, 1) if real and n % 2 else (0,)
    second = (0, 1) if real and (n - 1) % 2 else (0,)
    return [EpsilonChoice(a, b) for a in first for b in second]


def rho_list(mu: Weight, eps: int = 0) -> List[ArchCharacter]:
    """Principal-series parameters rho^mu_1..rho^mu_n with I_mu = I_{rho^mu}."""
    if is_pure(mu) is None:
        raise PurityError("rho_list needs a pure weight, got {}".format(mu.rows))
    n = mu.n
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1, got {!r}".format(eps))
    if eps and not (mu.field is FieldKind.REAL and n % 2):
        raise ValueError("eps must be 0 unless K = R and n is odd (n={})".format(n))
    tilde = infinitesimal(mu)
    if mu.field is FieldKind.REAL:
        # iota^{mu_i} = |.|^{mu_i} sgn^{mu_i} on R^x
        return [RealCharacter(t, (m + eps) % 2) for t, m in zip(tilde[0], mu.rows[0])]
    return [ComplexCharacter(a, b) for a, b in zip(tilde[0], tilde[1])]


def character_to_json(x: ArchCharacter):
    if isinstance(x, RealCharacter):
        return {'kind': 'real', 't': str(x.t), 'delta': x.delta}
    return {'kind': 'complex', 'a': str(x.a), 'b': str(x.b)}

def character_from_json(obj, field=None) -> ArchCharacter:
    if isinstance(obj, str):
        if field is None:
            raise ValueError("Character shorthand {!r} needs a field".format(obj))
        if obj == 'trivial':
            return trivial_character(field)
        if obj == 'sgn':
            return sign_character(field)
        raise ValueError("Unknown character shorthand {!r}".format(obj))
    kind = obj.get('kind')
    if kind == 'real':
        return RealCharacter(HalfInt.of(obj.get('t', 0)), parse_int(obj.get('delta', 0)))
    if kind == 'complex':
        return ComplexCharacter(HalfInt.of(obj['a']), HalfInt.of(obj['b']))
    raise ValueError("Unknown character kind {!r}".format(kind))
