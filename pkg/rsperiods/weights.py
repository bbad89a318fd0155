#!/bin/python
#-----------------------------------------------------------------------------
# File Name : weights.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 10 10:02:17 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""Pure highest weights over R or C, their infinitesimal characters, and the
balanced / critical places of a pair (mu, nu) of sizes (n, n-1)."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Set, Tuple

from .utils import format_fraction, parse_fraction, parse_int


class DimensionError(ValueError):
    pass

class PurityError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HalfInt:
    """The exact half-integer twice_value/2."""
    twice_value: int

    def __post_init__(self):
        if isinstance(self.twice_value, bool) or not isinstance(self.twice_value, int):
            raise TypeError("HalfInt expects an int, got {!r}".format(self.twice_value))

    @classmethod
    def of(cls, value):
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, float):
            raise TypeError("HalfInt does not accept floats ({})".format(value))
        q = parse_fraction(value) * 2
        if q.denominator != 1:
            raise ValueError("{} is not a half-integer".format(value))
        return cls(q.numerator)

    @property
    def value(self):
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self):
        return self.twice_value % 2 == 0

    def to_int(self):
        if not self.is_integer:
            raise ValueError("{} is not an integer".format(self))
        return self.twice_value // 2

    def __add__(self, other):
        if isinstance(other, int):
            return HalfInt(self.twice_value + 2 * other)
        if isinstance(other, HalfInt):
            return HalfInt(self.twice_value + other.twice_value)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HalfInt(-self.twice_value)

    def __float__(self):
        return self.twice_value / 2

    def __str__(self):
        return format_fraction(self.value)

    def __repr__(self):
        return 'HalfInt({})'.format(self)


class FieldKind(enum.Enum):
    REAL = 'R'
    COMPLEX = 'C'

    @property
    def embeddings(self):
        return 1 if self is FieldKind.REAL else 2

    # [K:R]
    degree = embeddings

    @classmethod
    def parse(cls, text):
        if isinstance(text, FieldKind):
            return text
        key = str(text).strip().lower()
        if key in ('r', 'real'):
            return cls.REAL
        if key in ('c', 'complex'):
            return cls.COMPLEX
        raise ValueError("Unknown field kind {!r}, expected 'R' or 'C'".format(text))


@dataclass(frozen=True)
class Weight:
    """A highest weight: one non-increasing integer n-tuple per embedding,
    ordered (iota, iota-bar). Purity is not enforced here."""
    field: FieldKind
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'field', FieldKind.parse(self.field))
        rows = tuple(tuple(parse_int(x) for x in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        if len(rows) != self.field.embeddings:
            raise DimensionError("A weight over {} needs {} row(s), got {}".format(
                self.field.value, self.field.embeddings, len(rows)))
        if len(rows[0]) < 1:
            raise DimensionError("Weights must have n >= 1")
        for row in rows:
            if len(row) != len(rows[0]):
                raise DimensionError("Rows of unequal length: {}".format(rows))
            if any(row[i] < row[i+1] for i in range(len(row) - 1)):
                raise ValueError("Weight row {} is not non-increasing".format(row))

    @property
    def n(self):
        return len(self.rows[0])

    @classmethod
    def zero(cls, field, n):
        field = FieldKind.parse(field)
        return cls(field, ((0,) * n,) * field.embeddings)

    def row(self, embedding):
        # the single real row serves both embeddings
        return self.rows[embedding % len(self.rows)]

    def to_json(self):
        return {'field': self.field.value, 'n': self.n, 'rows': [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj, field=None):
        if isinstance(obj, dict):
            w = cls(FieldKind.parse(obj.get('field', field)), obj['rows'])
            if 'n' in obj and parse_int(obj['n']) != w.n:
                raise DimensionError("Declared n={} but rows have length {}".format(obj['n'], w.n))
            return w
        # bare list of rows
        return cls(FieldKind.parse(field), obj)


def is_pure(w: Weight) -> Optional[int]:
    """Return w_mu if mu_k^iota + mu_{n+1-k}^iota-bar is constant, else None."""
    n = w.n
    sums = set()
    for e in range(w.field.embeddings):
        row, conj = w.row(e), w.row(e + 1)
        for k in range(n):
            sums.add(row[k] + conj[n - 1 - k])
    if len(sums) == 1:
        return sums.pop()
    return None

def dual_weight(w: Weight) -> Weight:
    return Weight(w.field, tuple(tuple(-x for x in reversed(row)) for row in w.rows))

def galois_conjugate(w: Weight) -> Weight:
    return Weight(w.field, tuple(reversed(w.rows)))

def infinitesimal(w: Weight) -> Tuple[Tuple[HalfInt, ...], ...]:
    # mu~_i = mu_i + (n+1-2i)/2, i = 1..n
    n = w.n
    return tuple(
        tuple(HalfInt(2 * x + n + 1 - 2 * i) for i, x in enumerate(row, start=1))
        for row in w.rows)

def pure_weight(field, n, w, head) -> Weight:
    """Complete a pure weight of purity w from its leading entries.

    Real: head holds the first floor(n/2) entries, the rest is mirrored
    (the middle entry of odd n is w/2). Complex: head is the full iota row.
    """
    field = FieldKind.parse(field)
    head = [int(x) for x in head]
    if field is FieldKind.COMPLEX:
        if len(head) != n:
            raise DimensionError("Complex weights need the full iota row of length {}".format(n))
        conj = [w - head[n - 1 - k] for k in range(n)]
        return Weight(field, (tuple(head), tuple(conj)))
    if len(head) != n // 2:
        raise DimensionError("Real weights need {} leading entries, got {}".format(n // 2, len(head)))
    middle = []
    if n % 2:
        if w % 2:
            raise PurityError("Odd n over R needs an even purity weight, got {}".format(w))
        middle = [w // 2]
    return Weight(field, (tuple(head + middle + [w - x for x in reversed(head)]),))

def dims(n, field):
    if n < 1:
        raise ValueError("n must be positive, got {}".format(n))
    if FieldKind.parse(field) is FieldKind.REAL:
        return n * n // 4, n * (n + 1) // 2
    return n * (n - 1) // 2, n * n


def check_pair(mu: Weight, nu: Weight, require_pure=True):
    if mu.field is not nu.field:
        raise DimensionError("Field mismatch: mu over {}, nu over {}".format(
            mu.field.value, nu.field.value))
    if mu.n < 2 or nu.n != mu.n - 1:
        raise DimensionError("Expected sizes (n, n-1) with n >= 2, got ({}, {})".format(mu.n, nu.n))
    if require_pure:
        for name, w in (('mu', mu), ('nu', nu)):
            if is_pure(w) is None:
                raise PurityError("{} = {} is not pure".format(name, [list(r) for r in w.rows]))


@dataclass(frozen=True)
class BalancedInterval:
    """The integer interval [lo, hi] of balanced places; lo = hi = None when empty."""
    lo: Optional[int]
    hi: Optional[int]

    @classmethod
    def between(cls, lo, hi):
        if lo > hi:
            return cls(None, None)
        return cls(lo, hi)

    @property
    def empty(self):
        return self.lo is None

    def __contains__(self, j):
        return not self.empty and self.lo <= j <= self.hi

    def __iter__(self):
        if self.empty:
            return iter(())
        return iter(range(self.lo, self.hi + 1))

    def __len__(self):
        return 0 if self.empty else self.hi - self.lo + 1

    def to_json(self):
        return {'lo': self.lo, 'hi': self.hi}

    @classmethod
    def from_json(cls, obj):
        if obj['lo'] is None or obj['hi'] is None:
            return cls(None, None)
        return cls.between(int(obj['lo']), int(obj['hi']))


def balanced_places(mu: Weight, nu: Weight) -> BalancedInterval:
    # m- = max{-mu_{n-i} - nu_i}, m+ = min{-mu_{n+1-i} - nu_i} over i and embeddings
    check_pair(mu, nu)
    n = mu.n
    lows, highs = [], []
    for e in range(mu.field.embeddings):
        m, v = mu.row(e), nu.row(e)
        for i in range(1, n):
            lows.append(-m[n - i - 1] - v[i - 1])
            highs.append(-m[n - i] - v[i - 1])
    return BalancedInterval.between(max(lows), min(highs))

def is_balanced_at(mu: Weight, nu: Weight, j: int) -> bool:
    """Direct check of the interlacing chain
    -mu_n >= nu_1 + j >= -mu_{n-1} >= nu_2 + j >= ... >= nu_{n-1} + j >= -mu_1."""
    check_pair(mu, nu)
    n = mu.n
    for e in range(mu.field.embeddings):
        m, v = mu.row(e), nu.row(e)
        chain = [-m[n - 1]]
        for k in range(1, n):
            chain += [v[k - 1] + j, -m[n - 1 - k]]
        if any(chain[i] < chain[i+1] for i in range(len(chain) - 1)):
            return False
    return True

def balanced_window(mu: Weight, nu: Weight) -> range:
    interval = balanced_places(mu, nu)
    if interval.empty:
        return range(-50, 51)
    return range(interval.lo - 10, interval.hi + 11)

def critical_places_via_poles(mu: Weight, nu: Weight) -> Set[HalfInt]:
    """Half-integers s0 with s0 not a pole of L(s, mu x nu) and 1 - s0 not a
    pole of L(s, mu^v x nu^v)."""
    from .gamma_calculus import pole_at
    from .local_factors import l_pair

    check_pair(mu, nu)
    direct = l_pair(mu, nu)
    dual = l_pair(dual_weight(mu), dual_weight(nu))
    bound = max(abs(a.shift.twice_value) for a, _ in direct.atoms + dual.atoms) // 2 + 2
    places = set()
    for j in range(-bound, bound + 1):
        s0 = HalfInt(2 * j + 1)
        if any(pole_at(a, s0) for a, e in direct.atoms if e > 0):
            continue
        if any(pole_at(a, 1 - s0) for a, e in dual.atoms if e > 0):
            continue
        places.add(s0)
    return places
