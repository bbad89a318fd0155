#!/bin/python
#-----------------------------------------------------------------------------
# File Name : utils.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 10 09:12:40 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import json
import numbers
import sys
from fractions import Fraction

DEFAULT_ROOT = 'data/'
DEFAULT_CORPUS = DEFAULT_ROOT + 'corpus/corpus.hdf5'

# numeric oracle policy
CONSTANCY_TOL = 1e-8
MATCH_TOL = 1e-6
POLE_DISTANCE = 0.1
# Im s in [0.3, 1], Re s in (0, 1): away from every pole on the real axis
STRIP_POINTS = (0.37+0.41j, 0.61+0.77j, 0.23+0.93j)


def format_fraction(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return '{}/{}'.format(q.numerator, q.denominator)

def parse_fraction(text):
    """Inverse of format_fraction. Accepts ints, Fractions and "p/q" strings."""
    if isinstance(text, bool):
        raise TypeError("Expected a rational number, got {!r}".format(text))
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except ValueError:
            raise ValueError("Malformed rational number {!r}".format(text))
    raise TypeError("Expected a rational number, got {!r}".format(text))

def parse_int(value):
    # numpy integers from HDF5 pass, floats and bools do not
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError("Expected an integer, got {!r}".format(value))
    return int(value)

def read_json_input(source='-'):
    if source in (None, '-'):
        return json.load(sys.stdin)
    with open(source, 'r') as f:
        return json.load(f)

def dump_json(obj, pretty=False):
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return json.dumps(obj, ensure_ascii=False)

def status(msg):
    # stdout is reserved for JSON results
    print(msg, file=sys.stderr)
