#!/bin/python
#-----------------------------------------------------------------------------
# File Name : cli.py
# Author: rsperiods contributors
#
# Creation Date : Thu Aug 20 10:14:55 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""rsperiods command line: JSON in, JSON out.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
import argparse
import sys

from . import gamma_calculus
from .characters import character_from_json
from .corpus.corpus_dataloaders import run_suite
from .corpus.create_hdf5 import SuiteConfig
from .cyclotomic import dirichlet_characters, gauss_sum
from .gamma_calculus import NotConstant, parse_product, reduce_to_constant, render
from .local_factors import PsiData, dual_l_pair, gamma_char, l_pair, l_pair_from_parameters
from .orbit import matrix_to_json, open_orbit_rank, w_matrix, z_matrix
from .period import VerificationCase, omega_constant, verify_case
from .utils import dump_json, parse_int, read_json_input, status
from .weights import FieldKind, HalfInt, Weight, balanced_places, critical_places_via_poles

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


def _pair(obj):
    field = FieldKind.parse(obj['field'])
    return Weight.from_json(obj['mu'], field), Weight.from_json(obj['nu'], field)

def _product(x, pretty):
    return render(x) if pretty else gamma_calculus.to_json(x)


def cmd_balanced(args):
    mu, nu = _pair(read_json_input(args.input))
    return balanced_places(mu, nu).to_json(), EXIT_OK

def cmd_critical(args):
    mu, nu = _pair(read_json_input(args.input))
    places = sorted(critical_places_via_poles(mu, nu))
    interval = balanced_places(mu, nu)
    shifted = sorted(HalfInt(2 * j + 1) for j in interval)
    return {'critical': [str(s) for s in places],
            'balanced': interval.to_json(),
            'agree': places == shifted}, EXIT_OK

def cmd_omega(args):
    obj = read_json_input(args.input)
    mu, nu = _pair(obj)
    return str(omega_constant(mu, nu, parse_int(obj.get('j', 0)), parse_int(obj.get('eps_psi', 1)))), EXIT_OK

def cmd_lfactor(args):
    obj = read_json_input(args.input)
    mu, nu = _pair(obj)
    if obj.get('dual', False):
        product = dual_l_pair(mu, nu)
    elif obj.get('from_parameters', False):
        product = l_pair_from_parameters(mu, nu)
    else:
        product = l_pair(mu, nu)
    return _product(product, args.pretty), EXIT_OK

def cmd_gamma(args):
    """{"character": ..., "eps_psi": 1, "n": 2} gives the gamma factor;
    {"product": "..."} reduces a product to its constant."""
    obj = read_json_input(args.input)
    if 'product' in obj:
        product = obj['product']
        product = parse_product(product) if isinstance(product, str) else gamma_calculus.from_json(product)
        try:
            return {'constant': str(reduce_to_constant(product))}, EXIT_OK
        except NotConstant as e:
            return {'constant': 'NotConstant', 'residual': _product(e.residual, args.pretty)}, EXIT_OK
    chi = character_from_json(obj['character'], obj.get('field'))
    psi = PsiData(parse_int(obj.get('eps_psi', 1)), parse_int(obj.get('n', 2)))
    return _product(gamma_char(chi, psi), args.pretty), EXIT_OK

def cmd_verify(args):
    case = VerificationCase.from_json(read_json_input(args.input))
    report = verify_case(case)
    return report.to_json(), EXIT_OK if report.exact_match else EXIT_FAILURE

def _suite_config(args):
    config = SuiteConfig()
    if args.config is not None:
        config = SuiteConfig.from_json(read_json_input(args.config))
    overrides = {
        'n_range': (args.n_min if args.n_min is not None else config.n_range[0],
                    args.n_max if args.n_max is not None else config.n_range[1]),
        'entry_bound': args.entry_bound, 'fields': args.fields, 'eps_psi_values': args.eps_psi,
        'chi_values': args.chi, 'case_count': args.case_count, 'seed': args.seed,
        'parallelism': args.parallelism, 'constancy_tol': args.constancy_tol,
        'match_tol': args.match_tol,
    }
    for k, v in overrides.items():
        if v is not None:
            setattr(config, k, tuple(v) if isinstance(v, list) else v)
    return config.validate()

def cmd_suite(args):
    report = run_suite(_suite_config(args), root=args.corpus, progress=not args.quiet)
    if args.output is not None:
        with open(args.output, 'w') as f:
            f.write(dump_json(report, pretty=True))
        status("Report written to {}".format(args.output))
    aggregate = report['aggregate']
    ok = (aggregate['exact_matches'] == aggregate['total'] and aggregate['not_constant'] == 0
          and aggregate['numeric_failures'] == 0 and aggregate['positivity_violations'] == 0
          and aggregate['epsilon_independent'])
    return aggregate, EXIT_OK if ok else EXIT_FAILURE

def cmd_zmatrix(args):
    m = w_matrix(args.k) if args.w else z_matrix(args.k)
    return matrix_to_json(m), EXIT_OK

def cmd_orbit(args):
    rank, expected = open_orbit_rank(args.n)
    return {'n': args.n, 'rank': rank, 'expected': expected, 'open': rank == expected}, EXIT_OK

def cmd_gauss(args):
    chars = dirichlet_characters(args.modulus)
    if args.all:
        return [{'index': i, 'character': chi.to_json(),
                 'gauss_sum': gauss_sum(chi, normalize=args.normalized).to_json()}
                for i, chi in enumerate(chars)], EXIT_OK
    if not 0 <= args.index < len(chars):
        raise ValueError("Character index {} out of range for modulus {} ({} characters)".format(
            args.index, args.modulus, len(chars)))
    return gauss_sum(chars[args.index], normalize=args.normalized).to_json(), EXIT_OK


def _add_input(p):
    p.add_argument('input', nargs='?', default='-', help="JSON input file, '-' for stdin")

def build_parser():
    # accepted after the subcommand name
    output = argparse.ArgumentParser(add_help=False)
    fmt = output.add_mutually_exclusive_group()
    fmt.add_argument('--json', dest='pretty', action='store_false', default=False,
                     help='structured JSON output (default)')
    fmt.add_argument('--pretty', dest='pretty', action='store_true', default=False,
                     help='indented output, Gamma-products rendered as text')

    parser = argparse.ArgumentParser(prog='rsperiods', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.set_defaults(pretty=False)
    sub = parser.add_subparsers(dest='command', required=True)

    for name, fn, help_text in (
            ('balanced', cmd_balanced, 'balanced places [m-, m+] of a weight pair'),
            ('critical', cmd_critical, 'critical places found from the poles of the L-factors'),
            ('omega', cmd_omega, 'the period constant Omega_{mu,nu,j}'),
            ('lfactor', cmd_lfactor, 'L(s, pi_mu x pi_nu) as a Gamma-product'),
            ('gamma', cmd_gamma, 'gamma factor of a character, or reduce a Gamma-product'),
            ('verify', cmd_verify, 'verify one case of the archimedean identity')):
        p = sub.add_parser(name, help=help_text, parents=[output])
        _add_input(p)
        p.set_defaults(func=fn)

    p = sub.add_parser('suite', help='generate a corpus and verify every case', parents=[output])
    p.add_argument('--config', default=None, help='SuiteConfig JSON file; flags override it')
    p.add_argument('--n-min', type=int, default=None)
    p.add_argument('--n-max', type=int, default=None)
    p.add_argument('--entry-bound', type=int, default=None)
    p.add_argument('--fields', nargs='+', default=None, choices=['R', 'C'])
    p.add_argument('--eps-psi', nargs='+', type=int, default=None)
    p.add_argument('--chi', nargs='+', default=None, choices=['trivial', 'sgn'])
    p.add_argument('--case-count', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--parallelism', type=int, default=None, help='DataLoader worker processes')
    p.add_argument('--constancy-tol', type=float, default=None)
    p.add_argument('--match-tol', type=float, default=None)
    p.add_argument('--corpus', default=None, help='HDF5 corpus path (created if missing)')
    p.add_argument('--output', default=None, help='write the full JSON report here')
    p.add_argument('--quiet', action='store_true', help='no progress bars')
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser('zmatrix', help='the matrix z_k (or w_k with --w)', parents=[output])
    p.add_argument('k', type=int)
    p.add_argument('--w', action='store_true')
    p.set_defaults(func=cmd_zmatrix)

    p = sub.add_parser('orbit', help='rank certificate for the open orbit at (z_n, z_{n-1})',
                       parents=[output])
    p.add_argument('n', type=int)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser('gauss', help='Gauss sums of Dirichlet characters', parents=[output])
    p.add_argument('--modulus', type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument('--all', action='store_true')
    which.add_argument('--index', type=int, default=0, help='0 is the trivial character')
    p.add_argument('--normalized', action='store_true', help='divide by phi(N)')
    p.set_defaults(func=cmd_gauss)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except (ValueError, KeyError, TypeError, OSError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_INPUT
    print(dump_json(result, pretty=args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
