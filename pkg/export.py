"""Output routines: json, csv and graphviz dot text for the park values, plus the
decoders the command line uses to read them back in
"""
import csv
import io
import json
import logging
import typing
import networkx as nx
from dyck import LabeledDyckPath
from errors import InputDomainError, InvalidChainError, InvalidPartitionError
from ncposet import MaximalChain, SetPartition
from parking import PreferenceList

logger = logging.getLogger(__name__)

def serialize(value: typing.Any) -> typing.Any:
    """Turn a park value (or a container of them) into plain json data

    Parameters
    ----------
    value : typing.Any
        Anything with a serialize method, a list/tuple/dict of those, or plain data

    Returns
    -------
    typing.Any
        json compatible data
    """
    match value:
        case _ if hasattr(value, 'serialize'):
            return value.serialize()
        case dict():
            return {k: serialize(v) for k, v in value.items()}
        case list() | tuple():
            return [serialize(v) for v in value]
        case set() | frozenset():
            return sorted(serialize(v) for v in value)
        case _:
            return value


def to_json(value: typing.Any, indent: int|None=None) -> str:
    """Deterministic json text, keys kept in insertion order"""
    return json.dumps(serialize(value), indent=indent)


def to_csv(rows: typing.Iterable[typing.Iterable[typing.Any]],
           header: typing.Iterable[str]|None=None) -> str:
    """One object per line, header only when asked for"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if header is not None:
        writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def points_to_csv(points: typing.Sequence[typing.Iterable[int]], header: bool=False) -> str:
    """Preference lists or lattice points, one per row, coordinates as columns"""
    rows = [list(p) for p in points]
    names = None
    if header:
        width = len(rows[0]) if rows else 0
        names = [f'x{i}' for i in range(1, width + 1)]
    return to_csv(rows, names)


def partitions_to_csv(partitions: typing.Sequence[SetPartition], header: bool=False) -> str:
    """One partition per row, one block per column, elements space separated"""
    rows = [[' '.join(str(e) for e in b) for b in p.blocks] for p in partitions]
    return to_csv(rows, ['blocks'] if header else None)


def words_to_csv(words: typing.Sequence[typing.Any], header: bool=False) -> str:
    """A single column of words, e.g. Dyck words"""
    return to_csv([[str(w)] for w in words], ['word'] if header else None)


def chains_to_csv(chains: typing.Sequence[MaximalChain], header: bool=False) -> str:
    """The label sequence of each chain, one chain per row"""
    rows = [list(c.labels) for c in chains]
    names = None
    if header:
        width = len(rows[0]) if rows else 0
        names = [f'label{i}' for i in range(1, width + 1)]
    return to_csv(rows, names)


def _node_ids(graph: nx.Graph) -> dict[typing.Any, str]:
    return {node: f'v{i}' for i, node in enumerate(graph.nodes)}


def hasse_to_dot(graph: nx.DiGraph) -> str:
    """Render a Hasse diagram as graphviz dot, one rank group per level

    To turn the output into an image save it as hasse.gv and run:

    $ dot -Tpng hasse.gv > hasse.png
    """
    ids = _node_ids(graph)
    lines = [f'digraph NC_{graph.graph.get("ground_size", "")} {{', '\trankdir=BT;',
             '\tnode [shape=box];']
    write_line = lines.append
    levels: dict[int, list] = {}
    for node, data in graph.nodes(data=True):
        levels.setdefault(data.get('rank', 0), []).append(node)
    for rank in sorted(levels):
        write_line('\t{')
        write_line('\t\trank = same;')
        for node in levels[rank]:
            label = graph.nodes[node].get('label', str(node))
            write_line(f'\t\t{ids[node]} [label="{label}"];')
        write_line('\t}')
    for p, q in graph.edges:
        write_line(f'\t{ids[p]} -> {ids[q]};')
    write_line('}')
    return '\n'.join(lines) + '\n'


def permutahedron_to_dot(graph: nx.Graph) -> str:
    """Render the permutahedron graph as an undirected graphviz graph"""
    index = {node: i for i, node in enumerate(graph.nodes)}
    lines = [f'graph Pi_{graph.graph.get("dimension", "")} {{', '\tnode [shape=circle];']
    for node, data in graph.nodes(data=True):
        lines.append(f'\tv{index[node]} [label="{data.get("label", str(node))}"];')
    for a, b in sorted(tuple(sorted((index[p], index[q]))) for p, q in graph.edges):
        lines.append(f'\tv{a} -- v{b};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def adjacency_json(graph: nx.Graph) -> dict:
    """Nodes in graph order and edges as index pairs

    Returns
    -------
    dict
        {'nodes': [...serialized nodes], 'edges': [[i, j], ...]}
    """
    index = {node: i for i, node in enumerate(graph.nodes)}
    edges = sorted(sorted((index[p], index[q])) if not graph.is_directed()
                   else [index[p], index[q]] for p, q in graph.edges)
    return {'nodes': [serialize(node) for node in graph.nodes], 'edges': edges}


def prefs_from_csv(text: str, circular: bool=False) -> PreferenceList:
    """Parse '3,2,1,3' into a PreferenceList

    Raises
    ------
    InputDomainError
        When a field is not an integer or an entry is out of range
    """
    try:
        entries = tuple(int(field) for field in text.split(','))
    except ValueError as e:
        raise InputDomainError(f'Could not read {text!r} as comma separated integers',
                               text) from e
    return PreferenceList(entries, circular)


def _load_json(text: str) -> typing.Any:
    """Inline json, or the name of a file holding json"""
    stripped = text.strip()
    if not stripped.startswith(('{', '[')):
        with open(stripped, 'r', encoding='utf-8') as f:
            return json.load(f)
    return json.loads(stripped)


def partition_from_json(data: typing.Any) -> SetPartition:
    """Build a SetPartition from {'n': n, 'blocks': [...]} or a bare list of blocks

    Parameters
    ----------
    data : typing.Any
        json text, a file name, or already decoded data
    """
    try:
        if isinstance(data, str):
            data = _load_json(data)
        match data:
            case {'blocks': blocks, **rest}:
                return SetPartition.from_blocks(blocks, rest.get('n'))
            case list():
                return SetPartition.from_blocks(data)
    except (json.JSONDecodeError, OSError, TypeError, ValueError) as e:
        if isinstance(e, InvalidPartitionError):
            raise
        raise InvalidPartitionError(f'Could not read a partition from {data!r}', str(data)) from e
    raise InvalidPartitionError(f'Could not read a partition from {data!r}', str(data))


def chain_from_json(data: typing.Any) -> MaximalChain:
    """Build a MaximalChain from json

    Accepts the serialized form {'partitions': [...]}, a bare list of block
    lists, or a list of partition objects.
    """
    try:
        if isinstance(data, str):
            data = _load_json(data)
        if isinstance(data, dict):
            data = data.get('partitions')
        if not isinstance(data, list):
            raise InvalidChainError(f'Could not read a chain from {data!r}', str(data))
        m = len(data)
        return MaximalChain(tuple(partition_from_json(p) if isinstance(p, dict)
                                  else SetPartition.from_blocks(p, m) for p in data))
    except InvalidChainError:
        raise
    except (json.JSONDecodeError, OSError, TypeError, ValueError) as e:
        raise InvalidChainError(f'Could not read a chain from {data!r}', str(data)) from e


def labeled_from_word(word: str, labels: str) -> LabeledDyckPath:
    """Build a labeled Dyck path from 'NNEE' and '1,2'"""
    try:
        values = tuple(int(field) for field in labels.split(','))
    except ValueError as e:
        raise InputDomainError(f'Could not read {labels!r} as comma separated integers',
                               labels) from e
    return LabeledDyckPath.from_word(word, values)
