"""
flatspec - Command-Line Interface

Commands:
- info       structural summary of one group
- spectrum   p-form multiplicities up to --max-mu
- lengths    closed geodesic classes up to --max-len2
- compare    verdict for two groups in one mode
- table      the full verdict grid for the built-in pairs
- zeta       both sides of the Poisson identity
- corpus     list or emit the built-in groups

Groups are file paths or `corpus:<name>`. Exit codes: 0 success or
equal, 2 divergent, 1 error.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import CORPUS_PREFIX, GEODESIC_CONFIG, LOGGING_CONFIG
from core.exceptions import FlatSpecError
from corpus.group_catalog import corpus, corpus_definition, corpus_group, resolve_group
from corpus.group_file import emit_definition
from corpus.isospectral_pairs import ISOSPECTRAL_PAIRS, isospectral_pair, pair_for
from reports.comparison_report import (
    COMPARE_MODES, ComparisonReport, compare_groups, info_report, lengths_report,
    reproduce_verdict_table, spectrum_report, zeta_report,
)
from reports.formatters import FORMATS, render
from reports.pdf_generator import PDFReportGenerator

logger = logging.getLogger('flatspec')

LENGTH_MODES = ('weak', 'counted', 'complex')


def configure_logging(verbosity: int = 0) -> None:
    level = LOGGING_CONFIG['level']
    if verbosity == 1:
        level = 'INFO'
    elif verbosity >= 2:
        level = 'DEBUG'
    logging.basicConfig(level=level, format=LOGGING_CONFIG['format'], stream=sys.stderr, force=True)


def _s_values(text: str) -> List[float]:
    try:
        values = [float(part) for part in text.replace(',', ' ').split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid s list '{text}'") from None
    if not values or any(s <= 0 for s in values):
        raise argparse.ArgumentTypeError("s values must be positive")
    return values


def _degree(text: str):
    if text == 'all':
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--p expects an integer or 'all', got '{text}'") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='text')
    common.add_argument('--output', help="write to this file instead of stdout (required for pdf)")
    common.add_argument('--strict', action='store_true', help="treat torsion failures as errors")
    common.add_argument('-v', '--verbose', action='count', default=0)

    parser = argparse.ArgumentParser(
        prog='flatspec',
        description="Exact spectra and closed geodesics of compact flat manifolds.",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    info = commands.add_parser('info', parents=[common], help="structural summary")
    info.add_argument('group')

    spectrum = commands.add_parser('spectrum', parents=[common], help="p-form multiplicities")
    spectrum.add_argument('group')
    spectrum.add_argument('--p', type=_degree, default='all')
    spectrum.add_argument('--max-mu', default=None)

    lengths = commands.add_parser('lengths', parents=[common], help="closed geodesic classes")
    lengths.add_argument('group')
    lengths.add_argument('--max-len2', default=None)
    lengths.add_argument('--mode', choices=LENGTH_MODES, default='counted')
    lengths.add_argument('--include-zero', action='store_true')

    compare = commands.add_parser('compare', parents=[common], help="compare two groups")
    compare.add_argument('group_a')
    compare.add_argument('group_b')
    compare.add_argument('--mode', choices=COMPARE_MODES, default='counted')
    compare.add_argument('--p', type=_degree, default='all')
    compare.add_argument('--max-mu', default=None)
    compare.add_argument('--max-len2', default=None)

    table = commands.add_parser('table', parents=[common], help="reproduce the verdict table")
    table.add_argument('rows', nargs='*', help="row keys such as ex34 (default: all)")

    zeta = commands.add_parser('zeta', parents=[common], help="Poisson identity check")
    zeta.add_argument('group')
    zeta.add_argument('--p', type=_degree, default=0)
    zeta.add_argument('--s', type=_s_values, default=None)
    zeta.add_argument('--tolerance', type=float, default=None)

    corpus_parser = commands.add_parser('corpus', parents=[common], help="built-in groups")
    corpus_commands = corpus_parser.add_subparsers(dest='corpus_command', required=True)
    corpus_commands.add_parser('list', parents=[common])
    emit = corpus_commands.add_parser('emit', parents=[common])
    emit.add_argument('name')

    return parser


# =============================================================================
# COMMANDS
# =============================================================================

def _group(reference: str, args):
    return resolve_group(reference, strict=args.strict or None)


def cmd_info(args) -> ComparisonReport:
    return info_report(_group(args.group, args))


def cmd_spectrum(args) -> ComparisonReport:
    return spectrum_report(_group(args.group, args), args.p, args.max_mu)


def cmd_lengths(args) -> ComparisonReport:
    return lengths_report(
        _group(args.group, args),
        args.max_len2 if args.max_len2 is not None else GEODESIC_CONFIG['default_cutoff_sq'],
        args.mode,
        include_zero=args.include_zero,
    )


def cmd_compare(args) -> ComparisonReport:
    group_a = _group(args.group_a, args)
    group_b = _group(args.group_b, args)
    pair = None
    if args.group_a.startswith(CORPUS_PREFIX) and args.group_b.startswith(CORPUS_PREFIX):
        pair = pair_for(args.group_a[len(CORPUS_PREFIX):], args.group_b[len(CORPUS_PREFIX):])
    return compare_groups(
        group_a, group_b, args.mode,
        p=args.p, mu_max=args.max_mu, cutoff_sq=args.max_len2, pair=pair,
    )


def cmd_table(args) -> ComparisonReport:
    pairs = [isospectral_pair(key) for key in args.rows] if args.rows else ISOSPECTRAL_PAIRS
    return reproduce_verdict_table(pairs, corpus_group)


def cmd_zeta(args) -> ComparisonReport:
    return zeta_report(_group(args.group, args), args.p, args.s, args.tolerance)


def cmd_corpus(args):
    if args.corpus_command == 'emit':
        return emit_definition(corpus_definition(args.name))
    rows = [
        {
            'name': definition.name,
            'dimension': definition.dimension,
            'generators': len(definition.generators),
            'description': definition.comments[0] if definition.comments else '',
        }
        for definition in corpus()
    ]
    return ComparisonReport(name='corpus', dimension=0, table=rows, mode='corpus')


COMMANDS = {
    'info': cmd_info,
    'spectrum': cmd_spectrum,
    'lengths': cmd_lengths,
    'compare': cmd_compare,
    'table': cmd_table,
    'zeta': cmd_zeta,
    'corpus': cmd_corpus,
}


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    configure_logging(args.verbose)

    try:
        result = COMMANDS[args.command](args)
        if isinstance(result, str):
            _write(args, result)
            return 0
        if args.format == 'pdf':
            if not args.output:
                parser.error("--format pdf requires --output")
            generator = PDFReportGenerator()
            generator.save_report(generator.generate_report(result), args.output)
            print(args.output)
        else:
            _write(args, render(result, args.format))
        return result.exit_code
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    except (FlatSpecError, ValueError, ArithmeticError, OSError) as exc:
        logger.debug("command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
