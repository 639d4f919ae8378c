"""
Entrypoint for the park command line
"""
import argparse
import dataclasses
import json
import logging
import signal
import sys
import time
import types
import typing
import dyck
import export
import ncposet
import parking
import polytope
from app import App, DEFAULT_CONFIG
from errors import LimitExceededError, ParkError, UsageError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

@dataclasses.dataclass
class CommandResult:
    """What a command produced

    Attributes
    ----------
    status : str
        'success' or 'error'
    payload : typing.Any
        json data for successful json output
    elapsed_ms : float | None
        Wall time, None when running with --stable
    error : dict | None
        {'code', 'message', 'input'} for errors
    text : str | None
        Raw dot or csv output, printed as is instead of the json envelope
    exit_code : int
        0 success, 2 usage error, 3 domain error
    usage : str | None
        Usage text to show on stderr after a usage error
    """
    status: str
    payload: typing.Any = None
    elapsed_ms: float|None = None
    error: dict|None = None
    text: str|None = None
    exit_code: int = EXIT_OK
    usage: str|None = None

    def render(self, indent: int|None=None) -> str:
        """The bytes written to stdout"""
        if self.status == 'success' and self.text is not None:
            return self.text
        envelope = {'status': self.status}
        if self.status == 'success':
            envelope['payload'] = self.payload
        else:
            envelope['error'] = self.error
        if self.elapsed_ms is not None:
            envelope['elapsed_ms'] = round(self.elapsed_ms, 3)
        return json.dumps(envelope, indent=indent) + '\n'


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so run() can report usage errors"""

    def error(self, message: str):
        raise UsageError(message, None)


def _check_limit(command: str, n: int):
    """Refuse an n above the configured limit for the command"""
    limit = App.limit(command)
    if limit is not None and n > limit:
        raise LimitExceededError(f'{command} is limited to n <= {limit}, got {n}', n)


def _csv_header(args: argparse.Namespace) -> bool:
    return bool(getattr(args, 'header', False) or App.config('csv_header'))


def _format(args: argparse.Namespace, choices: typing.Sequence[str]) -> str:
    fmt = getattr(args, 'format', None) or App.config('format')
    return fmt if fmt in choices else choices[0]

#####
# parking
def _simulate(args):
    return parking.simulate_parking(export.prefs_from_csv(args.prefs)).serialize()

def _check(args):
    return {'is_parking_function': parking.is_parking_function(export.prefs_from_csv(args.prefs))}

def _unwrap(args):
    prefs = export.prefs_from_csv(args.prefs, circular=True)
    return {'parking_function': parking.unwrap_circular(prefs).serialize()}

def _circular(args):
    prefs = export.prefs_from_csv(args.prefs, circular=True)
    payload = parking.simulate_circular(prefs).serialize()
    if args.rotations:
        payload['rotations'] = export.serialize(parking.circular_class(prefs))
    return payload

def _enumerate(args):
    if args.primitive and args.circular:
        raise UsageError('--primitive and --circular cannot be combined', None)
    if args.circular:
        _check_limit('circular', args.n)
        lists = list(parking.iter_circular(args.n))
        if _format(args, ('json', 'csv')) == 'csv':
            return export.points_to_csv(lists, _csv_header(args))
        return {'n': args.n, 'count': len(lists), 'circular_lists': export.serialize(lists)}
    if args.primitive:
        _check_limit('primitive', args.n)
        pfs = parking.enumerate_primitive(args.n)
    else:
        _check_limit('enumerate', args.n)
        pfs = parking.enumerate_parking_functions(args.n)
    if _format(args, ('json', 'csv')) == 'csv':
        return export.points_to_csv(pfs, _csv_header(args))
    return {'n': args.n, 'count': len(pfs), 'parking_functions': export.serialize(pfs)}
#
#####

#####
# dyck
def _catalan(args):
    return {'n': args.n, 'catalan': dyck.catalan(args.n)}

def _dyck_enumerate(args):
    _check_limit('dyck', args.n)
    paths = dyck.enumerate_dyck_paths(args.n)
    if _format(args, ('json', 'csv')) == 'csv':
        return export.words_to_csv(paths, _csv_header(args))
    return {'n': args.n, 'count': len(paths), 'paths': export.serialize(paths)}

def _dyck_reflect(args):
    path = dyck.LatticePath.from_word(args.word)
    reflected = dyck.reflect_bad_path(path)
    return {'path': path.word, 'reflected': reflected.word, 'endpoint': list(reflected.endpoint)}

def _dyck_to_pf(args):
    ld = export.labeled_from_word(args.word, args.labels)
    return {'parking_function': dyck.labeled_dyck_to_pf(ld).serialize()}

def _dyck_from_pf(args):
    ld = dyck.pf_to_labeled_dyck(export.prefs_from_csv(args.prefs))
    payload = ld.serialize()
    payload['columns'] = [list(c) for c in ld.columns]
    return payload
#
#####

#####
# ncposet
def _nc_enumerate(args):
    _check_limit('noncrossing', args.n)
    partitions = ncposet.enumerate_noncrossing(args.n)
    if _format(args, ('json', 'csv')) == 'csv':
        return export.partitions_to_csv(partitions, _csv_header(args))
    return {'n': args.n, 'count': len(partitions), 'partitions': export.serialize(partitions)}

def _nc_hasse(args):
    _check_limit('hasse', args.n)
    graph = ncposet.hasse_diagram(args.n)
    if _format(args, ('json', 'dot')) == 'dot':
        return export.hasse_to_dot(graph)
    return export.adjacency_json(graph)

def _nc_check(args):
    p = export.partition_from_json(args.partition)
    return {'partition': p.serialize(), 'is_noncrossing': ncposet.is_noncrossing(p)}

def _nc_refines(args):
    p, q = export.partition_from_json(args.p), export.partition_from_json(args.q)
    return {'refines': ncposet.refines(p, q)}

def _nc_covers(args):
    p, q = export.partition_from_json(args.p), export.partition_from_json(args.q)
    return {'covers': ncposet.covers(p, q)}

def _chains(args):
    _check_limit('chains', args.ground)
    chains = ncposet.enumerate_maximal_chains(args.ground)
    if args.count_only:
        return {'count': len(chains)}
    if _format(args, ('json', 'csv')) == 'csv':
        return export.chains_to_csv(chains, _csv_header(args))
    return {'ground': args.ground, 'count': len(chains), 'chains': export.serialize(chains)}

def _chain_to_pf(args):
    chain = export.chain_from_json(args.chain)
    return {'parking_function': ncposet.chain_to_pf(chain).serialize()}

def _chain_from_pf(args):
    return ncposet.pf_to_chain(export.prefs_from_csv(args.prefs)).serialize()

def _chain_label(args):
    p, q = export.partition_from_json(args.p), export.partition_from_json(args.q)
    return {'label': ncposet.chain_label(p, q)}
#
#####

#####
# polytope
def _vertices(args):
    _check_limit('vertices', args.n)
    if args.count_only:
        return {'count': polytope.vertex_count(args.n)}
    vertices = polytope.enumerate_vertices(args.n)
    if _format(args, ('json', 'csv')) == 'csv':
        return export.points_to_csv(vertices, _csv_header(args))
    return {'n': args.n, 'count': len(vertices), 'vertices': export.serialize(vertices)}

def _witness(args):
    p = polytope.LatticePoint(export.prefs_from_csv(args.prefs).entries)
    up, down = polytope.midpoint_witness(p)
    return {'point': p.serialize(), 'witness': [up.serialize(), down.serialize()]}

def _is_vertex(args):
    return {'is_vertex': polytope.is_vertex(export.prefs_from_csv(args.prefs))}

def _permutahedron(args):
    _check_limit('permutahedron', args.n)
    graph = polytope.permutahedron_graph(args.n)
    if _format(args, ('json', 'dot')) == 'dot':
        return export.permutahedron_to_dot(graph)
    return export.adjacency_json(graph)
#
#####


def build_parser() -> argparse.ArgumentParser:
    """Create the park command line grammar

    Returns
    -------
    argparse.ArgumentParser
        Parser whose leaf commands carry a 'handler' default
    """
    # Flags every leaf accepts, SUPPRESS so a leaf never overwrites a value given earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--stable', action='store_true', default=argparse.SUPPRESS,
                        help='Leave elapsed_ms out so output is byte for byte repeatable')
    common.add_argument('--header', action='store_true', default=argparse.SUPPRESS,
                        help='Write a header row in csv output')
    common.add_argument('-v', '--verbosity', action='count', default=argparse.SUPPRESS,
                        help='Logging verbosity, repeat for more')
    common.add_argument('-c', '--config', default=argparse.SUPPRESS,
                        help=f'location of config file, default {DEFAULT_CONFIG}')

    parser = _Parser(prog='park', parents=[common],
                     description='Parking functions, Dyck paths, noncrossing partitions '
                                 'and the parking function polytope')
    commands = parser.add_subparsers(dest='command', metavar='command')

    def leaf(group, name: str, handler: typing.Callable, help_text: str):
        sub = group.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    def size(sub, flag: str='--n', dest: str='n'):
        sub.add_argument(flag, dest=dest, type=int, required=True)

    def fmt(sub, choices: typing.Sequence[str]):
        sub.add_argument('--format', choices=choices, default=None)

    leaf(commands, 'simulate', _simulate, 'Park the cars').add_argument('prefs')
    leaf(commands, 'check', _check, 'Is the list a parking function').add_argument('prefs')
    leaf(commands, 'unwrap', _unwrap, 'Unwrap a circular list').add_argument('prefs')
    sub = leaf(commands, 'circular', _circular, 'Park on a circle of n+1 spots')
    sub.add_argument('prefs')
    sub.add_argument('--rotations', action='store_true',
                     help='Also list the n+1 rotations, all of which unwrap alike')
    sub = leaf(commands, 'enumerate', _enumerate, 'List parking functions')
    size(sub)
    sub.add_argument('--primitive', action='store_true')
    sub.add_argument('--circular', action='store_true', help='Every list on n+1 circular spots')
    fmt(sub, ['json', 'csv'])
    size(leaf(commands, 'catalan', _catalan, 'The n-th Catalan number'))

    dyck_group = commands.add_parser('dyck', help='Dyck paths').add_subparsers(
        dest='dyck_command', metavar='command', required=True)
    sub = leaf(dyck_group, 'enumerate', _dyck_enumerate, 'List Dyck paths')
    size(sub)
    fmt(sub, ['json', 'csv'])
    leaf(dyck_group, 'reflect', _dyck_reflect, 'Reflect a bad path').add_argument('word')
    sub = leaf(dyck_group, 'to-pf', _dyck_to_pf, 'Labeled Dyck path to parking function')
    sub.add_argument('word')
    sub.add_argument('--labels', required=True)
    leaf(dyck_group, 'from-pf', _dyck_from_pf,
         'Parking function to labeled Dyck path').add_argument('prefs')

    nc_group = commands.add_parser('nc', help='Noncrossing partitions').add_subparsers(
        dest='nc_command', metavar='command', required=True)
    sub = leaf(nc_group, 'enumerate', _nc_enumerate, 'List noncrossing partitions')
    size(sub)
    fmt(sub, ['json', 'csv'])
    sub = leaf(nc_group, 'hasse', _nc_hasse, 'Hasse diagram of NC_n')
    size(sub)
    fmt(sub, ['dot', 'json'])
    leaf(nc_group, 'check', _nc_check, 'Is a partition noncrossing').add_argument('partition')
    for name, handler, help_text in (('refines', _nc_refines, 'Does p refine q'),
                                     ('covers', _nc_covers, 'Is p covered by q')):
        sub = leaf(nc_group, name, handler, help_text)
        sub.add_argument('p')
        sub.add_argument('q')

    sub = leaf(commands, 'chains', _chains, 'List maximal chains of NC_m')
    size(sub, '--ground', 'ground')
    sub.add_argument('--count-only', action='store_true')
    fmt(sub, ['json', 'csv'])
    chain_group = commands.add_parser('chain', help='Maximal chains').add_subparsers(
        dest='chain_command', metavar='command', required=True)
    leaf(chain_group, 'to-pf', _chain_to_pf, 'Chain to parking function').add_argument('chain')
    leaf(chain_group, 'from-pf', _chain_from_pf, 'Parking function to chain').add_argument('prefs')
    sub = leaf(chain_group, 'label', _chain_label, 'Label of a cover step')
    sub.add_argument('p')
    sub.add_argument('q')

    poly_group = commands.add_parser('polytope', help='Parking function polytope').add_subparsers(
        dest='polytope_command', metavar='command', required=True)
    sub = leaf(poly_group, 'vertices', _vertices, 'List vertices')
    size(sub)
    sub.add_argument('--count-only', action='store_true')
    fmt(sub, ['json', 'csv'])
    leaf(poly_group, 'witness', _witness, 'Midpoint witness of a non-vertex').add_argument('prefs')
    leaf(poly_group, 'is-vertex', _is_vertex, 'Is the point a vertex').add_argument('prefs')
    sub = leaf(poly_group, 'permutahedron', _permutahedron, 'Permutahedron graph')
    size(sub)
    fmt(sub, ['dot', 'json'])
    return parser


def run(argv: typing.Sequence[str]|None=None) -> CommandResult:
    """Parse argv, dispatch to the operation and wrap up the outcome

    Parameters
    ----------
    argv : typing.Sequence[str] | None
        Arguments without the program name, sys.argv[1:] when None

    Returns
    -------
    CommandResult
        Never raises for usage or domain errors, they come back as status 'error'
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    parser = build_parser()
    stable = '--stable' in argv
    try:
        args = parser.parse_args(argv)
        if getattr(args, 'config', None):
            App.load(args.config)
        stable = stable or bool(App.config('stable'))
        handler = getattr(args, 'handler', None)
        if handler is None:
            raise UsageError('No command given', None)
        logger.info('run: %s', ' '.join(argv))
        output = handler(args)
    except UsageError as e:
        e.offending = argv
        return CommandResult('error', error=e.serialize(), exit_code=EXIT_USAGE,
                             elapsed_ms=None if stable else _elapsed(start),
                             usage=parser.format_usage())
    except ParkError as e:
        logger.warning('run: %s %s', e.code, e.message)
        return CommandResult('error', error=e.serialize(), exit_code=EXIT_DOMAIN,
                             elapsed_ms=None if stable else _elapsed(start))
    elapsed = None if stable else _elapsed(start)
    if isinstance(output, str):
        return CommandResult('success', text=output, elapsed_ms=elapsed)
    return CommandResult('success', payload=output, elapsed_ms=elapsed)


def _elapsed(start: float) -> float:
    return (time.perf_counter() - start) * 1000


def signal_handler(sig: int, frame: types.FrameType) -> None:
    """
    Handle SIGINT signal and exit gracefully.

    Parameters
    ----------
    sig : int
        The signal number that was received.
    frame : types.FrameType
        The current stack frame when the signal was received.
    """
    if sig == signal.SIGINT:
        logger.debug('signal_handler: %s | %s', sig, frame)
        logger.info('signal_handler: Caught sigint, gracefully exiting.')
        raise SystemExit(130)


def configure_logging(verbosity: int|None):
    """Default to only showing warnings, each v lowers the level by one step"""
    loglevel = logging.WARNING
    if verbosity:
        if verbosity <= 5:
            # Calculate log level from number of v's passed in
            loglevel = (6 - verbosity) * 10
        else:
            loglevel = logging.DEBUG
    logging.basicConfig(level=loglevel, force=True)
    logger.info(' Log Level=%s', logging.getLevelName(logger.getEffectiveLevel()))


def main(argv: typing.Sequence[str]|None=None) -> int:
    """Run the command line, print the result and return the exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)
    early = argparse.ArgumentParser(add_help=False)
    early.add_argument('-v', '--verbosity', action='count')
    known, _ = early.parse_known_args(argv)
    configure_logging(known.verbosity)
    signal.signal(signal.SIGINT, signal_handler)

    App.load(DEFAULT_CONFIG)
    result = run(argv)
    sys.stdout.write(result.render(App.config('json_indent')))
    if result.usage:
        sys.stderr.write(result.usage)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
