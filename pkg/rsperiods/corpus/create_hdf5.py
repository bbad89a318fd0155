#!/bin/python
#-----------------------------------------------------------------------------
# File Name : create_hdf5.py
# Author: rsperiods contributors
#
# Creation Date : Wed Aug 19 09:51:17 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""Seeded generation of pure balanced verification cases, stored as HDF5."""
import json
import math
import dataclasses
from dataclasses import asdict, dataclass
from typing import Tuple

import h5py
import numpy as np
from tqdm import tqdm

from ..characters import (EpsilonChoice, RealCharacter, character_from_json, sign_character,
                          trivial_character, valid_epsilon_choices)
from ..period import VerificationCase
from ..utils import CONSTANCY_TOL, MATCH_TOL, status
from ..weights import FieldKind, Weight, is_balanced_at, is_pure, pure_weight

MAX_ATTEMPTS = 10000
CORPUS_FIELDS = ('n_range', 'entry_bound', 'fields', 'eps_psi_values', 'chi_values',
                 'case_count', 'seed')


@dataclass
class SuiteConfig:
    n_range: Tuple[int, int] = (2, 5)
    entry_bound: int = 6
    fields: Tuple[str, ...] = ('R', 'C')
    eps_psi_values: Tuple[int, ...] = (1, -1)
    chi_values: Tuple[str, ...] = ('trivial', 'sgn')
    case_count: int = 500
    seed: int = 42
    parallelism: int = 0
    constancy_tol: float = CONSTANCY_TOL
    match_tol: float = MATCH_TOL

    def validate(self):
        lo, hi = self.n_range
        if lo < 2 or hi < lo:
            raise ValueError("n_range must satisfy 2 <= lo <= hi, got {}".format(self.n_range))
        if self.entry_bound < 1 or self.case_count < 1:
            raise ValueError("entry_bound and case_count must be positive, got {} and {}".format(
                self.entry_bound, self.case_count))
        if self.parallelism < 0:
            raise ValueError("parallelism must be >= 0, got {}".format(self.parallelism))
        if not self.fields or not self.eps_psi_values or not self.chi_values:
            raise ValueError("fields, eps_psi_values and chi_values must be non-empty")
        for f in self.fields:
            FieldKind.parse(f)
        for e in self.eps_psi_values:
            if e not in (1, -1):
                raise ValueError("eps_psi must be +1 or -1, got {!r}".format(e))
        for c in self.chi_values:
            if c not in ('trivial', 'sgn'):
                raise ValueError("Unknown chi {!r}, expected 'trivial' or 'sgn'".format(c))
        if not (self.constancy_tol > 0 and self.match_tol > 0):
            raise ValueError("Tolerances must be positive")
        return self

    def to_json(self):
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}

    def corpus_fields(self):
        # the settings that decide which cases get generated
        data = self.to_json()
        return {k: data[k] for k in CORPUS_FIELDS}

    @classmethod
    def from_json(cls, obj):
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise ValueError("Unknown SuiteConfig keys: {}".format(sorted(unknown)))
        kwargs = {k: tuple(v) if isinstance(v, list) else v for k, v in obj.items()}
        return cls(**kwargs).validate()


def sample_pure_weight(rng, field, n, bound) -> Weight:
    """A random pure weight with entries in [-bound, bound]."""
    field = FieldKind.parse(field)
    if field is FieldKind.REAL:
        w = int(rng.integers(-bound, bound + 1))
        if n % 2 and w % 2:
            w -= int(math.copysign(1, w))
        lo, hi = -(-w // 2), min(bound, w + bound)
        head = sorted(rng.integers(lo, hi + 1, size=n // 2).tolist(), reverse=True)
        return pure_weight(field, n, w, head)
    w = int(rng.integers(-bound, bound + 1))
    lo, hi = max(-bound, w - bound), min(bound, w + bound)
    head = sorted(rng.integers(lo, hi + 1, size=n).tolist(), reverse=True)
    return pure_weight(field, n, w, head)


def _intervals(row, j):
    # nu_k + j interlaces -mu: nu_k in [-j - mu_{n-k}, -j - mu_{n+1-k}]
    n = len(row)
    return [(-j - row[n - 1 - k], -j - row[n - k]) for k in range(1, n)]

def _pick(rng, lo, hi):
    return int(rng.integers(lo, hi + 1))

def _sample_nu(rng, mu: Weight, j):
    n = mu.n
    w_mu = is_pure(mu)
    iv = _intervals(mu.rows[0], j)
    if mu.field is FieldKind.REAL and n % 2 == 0:
        m = n // 2
        middle = _pick(rng, *iv[m - 1])
        w_nu = 2 * middle
        d = w_nu + w_mu + 2 * j
    else:
        width = min(hi - lo for lo, hi in iv)
        d = _pick(rng, -width, width)
        w_nu = d - w_mu - 2 * j
    shifted = [(max(lo, lo + d), min(hi, hi + d)) for lo, hi in iv]
    if any(lo > hi for lo, hi in shifted):
        return None
    if mu.field is FieldKind.COMPLEX:
        head = [_pick(rng, lo, hi) for lo, hi in shifted]
        return pure_weight(mu.field, n - 1, w_nu, head)
    head = [_pick(rng, lo, hi) for lo, hi in shifted[:(n - 1) // 2]]
    return pure_weight(mu.field, n - 1, w_nu, head)

def sample_balanced_case(rng, field, n, bound):
    """(mu, nu, j) with mu, nu pure, entries bounded by bound, and balanced at j."""
    for _ in range(MAX_ATTEMPTS):
        mu = sample_pure_weight(rng, field, n, bound)
        j = int(rng.integers(-bound, bound + 1))
        nu = _sample_nu(rng, mu, j)
        if nu is None or max(abs(x) for row in nu.rows for x in row) > bound:
            continue
        if is_pure(nu) is not None and is_balanced_at(mu, nu, j):
            return mu, nu, j
    raise RuntimeError("No balanced case found for field={}, n={}, bound={} after {} attempts".format(
        field, n, bound, MAX_ATTEMPTS))


def _combinations(config: SuiteConfig):
    lo, hi = config.n_range
    out = []
    for f in config.fields:
        field = FieldKind.parse(f)
        for n in range(lo, hi + 1):
            for eps_psi in config.eps_psi_values:
                # sgn is trivial on C^x
                chis = config.chi_values if field is FieldKind.REAL else ('trivial',)
                for chi in chis:
                    out.append((field, n, eps_psi, chi))
    return out

def generate_cases(config: SuiteConfig):
    """Base cases cycle through (field, n, eps_psi, chi); each base case is
    expanded over all valid central-character choices."""
    config.validate()
    rng = np.random.default_rng(config.seed)
    combos = _combinations(config)
    cases = []
    i = 0
    while len(cases) < config.case_count:
        field, n, eps_psi, chi_name = combos[i % len(combos)]
        mu, nu, j = sample_balanced_case(rng, field, n, config.entry_bound)
        chi = character_from_json(chi_name, field)
        for eps in valid_epsilon_choices(field, n):
            cases.append(VerificationCase(mu, nu, j, chi, eps, eps_psi))
        i += 1
    return cases[:config.case_count]


def create_corpus_hdf5(hdf5_filename, config: SuiteConfig = None, progress=True):
    config = (config or SuiteConfig()).validate()
    cases = generate_cases(config)
    with h5py.File(hdf5_filename, 'w') as f:
        f.clear()
        keys = []
        data_grp = f.create_group('data')
        extra_grp = f.create_group('extra')
        for key, case in enumerate(tqdm(cases, desc='corpus', disable=not progress)):
            subgrp = data_grp.create_group(str(key))
            subgrp.create_dataset('mu', data=np.array(case.mu.rows, dtype=np.int64))
            subgrp.create_dataset('nu', data=np.array(case.nu.rows, dtype=np.int64))
            subgrp.attrs['field'] = case.field.value
            subgrp.attrs['j'] = case.j
            subgrp.attrs['chi_delta'] = case.chi.delta if isinstance(case.chi, RealCharacter) else 0
            subgrp.attrs['eps_psi'] = case.eps_psi
            subgrp.attrs['delta_n'] = case.eps.delta_n
            subgrp.attrs['delta_n1'] = case.eps.delta_n1
            subgrp.attrs['meta_info'] = str({'key': str(key), 'field': case.field.value, 'n': case.n})
            keys.append(key)
        extra_grp.create_dataset('keys', data=np.array(keys, dtype=np.int64))
        extra_grp.attrs['N'] = len(keys)
        extra_grp.attrs['seed'] = config.seed
        extra_grp.attrs['config'] = json.dumps(config.to_json())
    status("Corpus: {} cases (seed {}) written to {}".format(len(keys), config.seed, hdf5_filename))


def read_case(hdf5_file, key) -> VerificationCase:
    dset = hdf5_file['data'][str(key)]
    field = FieldKind.parse(str(dset.attrs['field']))
    mu = Weight(field, dset['mu'][()].tolist())
    nu = Weight(field, dset['nu'][()].tolist())
    if field is FieldKind.REAL and int(dset.attrs['chi_delta']):
        chi = sign_character(field)
    else:
        chi = trivial_character(field)
    eps = EpsilonChoice(int(dset.attrs['delta_n']), int(dset.attrs['delta_n1']))
    return VerificationCase(mu, nu, int(dset.attrs['j']), chi, eps, int(dset.attrs['eps_psi']))
