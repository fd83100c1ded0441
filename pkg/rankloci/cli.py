'''
Command line interface: single degrees, per-rank tables, Grassmann classes and the verification suite.
'''
import typing as tp
import sys
import argparse
import logging

from rankloci import __version__
from rankloci.core.chow import GrassmannContext
from rankloci.core.patterns import Pattern
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import parse_grid
from rankloci.core.patterns import parse_cells
from rankloci.core.patterns import shapes_of
from rankloci.core.classes import sigma_blocks
from rankloci.core.degrees import degree_for_pattern
from rankloci.core.degrees import degree_table
from rankloci.core.golden import golden_checks
from rankloci.core.oracle import cross_check
from rankloci.core.report import VerifyReport
from rankloci.core.config import EngineConfig
from rankloci.core.config import ConfigActive
from rankloci.core.config import LOG_LEVELS
from rankloci.core.display import DisplayFormats
from rankloci.core.display import DocumentKind
from rankloci.core.display import OutputDocument
from rankloci.core.exception import ErrorRankLoci
from rankloci.core.exception import ErrorPrecondition


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

#-------------------------------------------------------------------------------
# argument interpretation

def _int_list(text: str, flag: str) -> tp.List[int]:
    post = []
    for token in text.split(','):
        token = token.strip()
        if not token:
            continue
        if not token.isdigit():
            raise ErrorPrecondition('{} expects comma-separated positive integers'.format(flag), text)
        post.append(int(token))
    return post

def pattern_from_args(args: argparse.Namespace) -> Pattern:
    '''
    Build the pattern from exactly one source: a grid file, a cell list, or the (combinable) shape shorthands.
    '''
    shorthand = (args.rows is not None or args.cols is not None
            or args.corners is not None or args.squares is not None)
    sources = [args.pattern is not None, args.cells is not None, shorthand]
    if sum(sources) != 1:
        raise ErrorPrecondition(
                'give exactly one pattern source: --pattern, --cells, or shape shorthands')

    if args.pattern is not None:
        with open(args.pattern, encoding='utf-8') as f:
            return parse_grid(f.read())
    if args.cells is not None:
        return parse_cells(args.cells)

    shapes: tp.List[BlockShape] = []
    if args.rows is not None:
        for length in _int_list(args.rows, '--rows'):
            if length < 1:
                raise ErrorPrecondition('row lengths must be at least 1', args.rows)
            shapes.append(BlockShape.row(length))
    if args.cols is not None:
        for length in _int_list(args.cols, '--cols'):
            if length < 1:
                raise ErrorPrecondition('column lengths must be at least 1', args.cols)
            shapes.append(BlockShape.col(length))
    for flag, count in (('--corners', args.corners), ('--squares', args.squares)):
        if count is not None and count < 0:
            raise ErrorPrecondition('{} must be nonnegative'.format(flag), count)
    if args.corners is not None:
        shapes.extend(BlockShape.corner() for _ in range(args.corners))
    if args.squares is not None:
        shapes.extend(BlockShape.square() for _ in range(args.squares))
    return Pattern.from_shapes(shapes)

def config_from_args(args: argparse.Namespace) -> EngineConfig:
    if args.config is not None:
        config = EngineConfig.from_file(args.config)
    else:
        config = ConfigActive.get()
    overrides: tp.Dict[str, tp.Any] = {}
    if args.verify_closed_forms:
        overrides['verify'] = True
    if args.workers is not None:
        overrides['max_workers'] = args.workers
    if args.log_level is not None:
        overrides['log_level'] = args.log_level
    return config.to_config(**overrides)

def _check_n(n: int) -> None:
    if n < 1:
        raise ErrorPrecondition('--n must be at least 1', n)

def _check_rank(n: int, r: int) -> None:
    _check_n(n)
    if not 1 <= r <= n:
        raise ErrorPrecondition('--r must satisfy 1 <= r <= n', n, r)

#-------------------------------------------------------------------------------
# commands

def cmd_degree(args: argparse.Namespace) -> OutputDocument:
    _check_rank(args.n, args.r)
    pattern = pattern_from_args(args)
    value = degree_for_pattern(args.n, args.r, pattern, config=args.engine_config)
    return OutputDocument.from_degrees(args.n, pattern, ((args.r, value),),
            kind=DocumentKind.DEGREE,
            format=args.format)

def cmd_table(args: argparse.Namespace) -> OutputDocument:
    _check_n(args.n)
    pattern = pattern_from_args(args)
    table = degree_table(args.n, pattern, config=args.engine_config)
    return OutputDocument.from_table(table, format=args.format)

def cmd_class(args: argparse.Namespace) -> OutputDocument:
    _check_rank(args.n, args.r)
    pattern = pattern_from_args(args).validate(args.n)
    ctx = GrassmannContext.from_rank(args.n, args.r)
    value = sigma_blocks(ctx, shapes_of(pattern))
    return OutputDocument.from_class(args.n, args.r, pattern, value, format=args.format)

def cmd_verify(args: argparse.Namespace) -> OutputDocument:
    if args.max_n < 1:
        raise ErrorPrecondition('--max-n must be at least 1', args.max_n)
    report = cross_check(args.max_n) + VerifyReport(golden_checks(args.max_n))
    return OutputDocument.from_report(report, format=args.format)

#-------------------------------------------------------------------------------
# parser

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format',
            choices=[f.value for f in DisplayFormats],
            default=DisplayFormats.TEXT.value,
            help='Output format.')
    parser.add_argument('--config',
            help='JSON file of engine settings.')
    parser.add_argument('--verify-closed-forms',
            action='store_true',
            help='Cross-check every degree against the matching closed form.')
    parser.add_argument('--workers',
            type=int,
            help='Thread pool size for per-rank evaluation.')
    parser.add_argument('--log-level',
            type=str.upper,
            choices=LOG_LEVELS,
            help='Logging level for the rankloci loggers.')

def _add_pattern(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('pattern sources')
    group.add_argument('--pattern',
            help='Grid file: X marks an entry of S, "." an empty entry, "#" starts a comment line.')
    group.add_argument('--cells',
            help='Cell list "r,c;r,c;..." with 1-based coordinates.')
    group.add_argument('--rows',
            help='Row blocks of the given lengths, e.g. 3,2,1.')
    group.add_argument('--cols',
            help='Column blocks of the given lengths, e.g. 2,2.')
    group.add_argument('--corners',
            type=int,
            help='Number of corner blocks.')
    group.add_argument('--squares',
            type=int,
            help='Number of 2x2 square blocks.')

def get_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
            prog='rankloci',
            description='Degrees of projections of rank loci, computed exactly in the Chow ring of a Grassmannian.',
            )
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('degree', help='Print d_{n,r,S}.')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    _add_pattern(p)
    _add_common(p)
    p.set_defaults(func=cmd_degree)

    p = commands.add_parser('table', help='Print d_{n,r,S} for r = 1..n.')
    p.add_argument('--n', type=int, required=True)
    _add_pattern(p)
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = commands.add_parser('class', help='Print the Grassmann class in the Schubert basis.')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    _add_pattern(p)
    _add_common(p)
    p.set_defaults(func=cmd_class)

    p = commands.add_parser('verify', help='Run the cross-checks and the published tables.')
    p.add_argument('--max-n', type=int, default=5)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser

def main(argv: tp.Optional[tp.Sequence[str]] = None) -> int:
    parser = get_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse reports usage errors with code 2, --help and --version with 0
        return int(e.code or 0)

    try:
        args.engine_config = config_from_args(args)
        args.engine_config.apply_logging()
        args.format = DisplayFormats(args.format)
        doc = args.func(args)
    except (ErrorRankLoci, OSError, ValueError) as e:
        sys.stderr.write('rankloci: error: {}\n'.format(e))
        return EXIT_USAGE

    sys.stdout.write(doc.render())
    if doc.kind is DocumentKind.VERIFY and not doc.payload.passed:
        return EXIT_VERIFY_FAILED
    return EXIT_OK
