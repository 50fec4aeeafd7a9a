#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

# Copyright 2026 The distautomata developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
JSON documents for every object the command line reads or writes.

States must be JSON scalars (strings or integers). Composite states, such as
the sets of states built by forgetful_to_dfa(), are written as strings like
"{0,1}".
"""

import json
import logging
from typing import Any, Dict, IO, Iterable, List, Mapping, Union

from .automata import (
    DistributedAutomaton, InvalidAutomatonError, TableAutomaton,
    UnsupportedShapeError, make_table_automaton, ordered,
)
from .classical import TreeAutomaton, WordAutomaton
from .graphs import InvalidGraphError, PointedDigraph, make_digraph
from .reductions.pcp import PcpInstance, pcp_to_automaton
from .reductions.turing import TuringMachine, tm_to_automaton


__all__ = [
    'state_name',
    'graph_to_json', 'graph_from_json',
    'automaton_to_json', 'automaton_from_json',
    'word_automaton_to_json', 'word_automaton_from_json',
    'tree_automaton_to_json', 'tree_automaton_from_json',
    'machine_to_json', 'machine_from_json',
    'instance_to_json', 'instance_from_json',
    'reduction_descriptor',
    'load', 'dump',
]

logger = logging.getLogger(__name__)

Document = Dict[str, Any]


def state_name(state: Any) -> Union[str, int]:
    """
    A JSON scalar naming state.

    >>> state_name(frozenset({1, 0})), state_name('q'), state_name(3)
    ('{0,1}', 'q', 3)
    """
    if isinstance(state, (str, int)) and not isinstance(state, bool):
        return state
    if isinstance(state, frozenset):
        return '{' + ','.join(str(state_name(s)) for s in ordered(state)) + '}'
    raise UnsupportedShapeError(f'cannot name state {state!r}')


def _scalar(value: Any, what: str) -> Union[str, int]:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InvalidAutomatonError(f'{what} must be a string or an integer: '
                                    f'{value!r}')
    return value


def load(source: Union[str, IO[str]]) -> Document:
    """
    Reads a JSON document from a path or an open file.
    """
    if isinstance(source, str):
        with open(source, encoding='UTF-8') as file:
            return json.load(file)
    return json.load(source)


def dump(document: Any, destination: IO[str]) -> None:
    json.dump(document, destination, indent=2, sort_keys=False)
    destination.write('\n')


# Graphs

def _integer(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidGraphError(f'{what} must be an integer: {value!r}')
    return value


def graph_to_json(pg: PointedDigraph) -> Document:
    return {
        'labels': list(pg.graph.labels),
        'relations': pg.relation_count,
        'edges': [list(edge) for edge in pg.graph.edge_list()],
        'point': pg.point,
    }


def graph_from_json(document: Mapping[str, Any]) -> PointedDigraph:
    try:
        labels = list(document['labels'])
        relations = _integer(document['relations'], 'relations')
        lists: List[List[Any]] = [[] for _ in range(relations)]
        for k, u, v in document['edges']:
            k = _integer(k, 'relation')
            if not 1 <= k <= relations:
                raise InvalidGraphError(f'no relation {k}')
            lists[k - 1].append((_integer(u, 'edge source'),
                                 _integer(v, 'edge target')))
        point = _integer(document['point'], 'point')
    except (KeyError, TypeError, ValueError) as error:
        if isinstance(error, InvalidGraphError):
            raise
        raise InvalidGraphError(f'malformed graph document: {error}')
    return PointedDigraph(make_digraph(len(labels), relations, lists, labels),
                          point)


# Distributed automata

def automaton_to_json(a: TableAutomaton) -> Document:
    if not isinstance(a, TableAutomaton):
        raise UnsupportedShapeError('only table automata can be written; '
                                    'use a reduction descriptor instead')
    if a.init_map is not None:
        init = {'kind': 'map',
                'value': {sigma: state_name(q) for sigma, q in a.init_map.items()}}
    else:
        init = {'kind': 'state', 'value': state_name(a.init)}
    transitions = []
    for (sigma, q, n), target in sorted(
            a.table.items(),
            key=lambda item: (item[0][0], str(state_name(item[0][1])),
                              [sorted(map(str, map(state_name, s)))
                               for s in item[0][2]])):
        transitions.append({
            'label': sigma,
            'state': state_name(q),
            'neighbors': [[state_name(s) for s in ordered(n_k)] for n_k in n],
            'next': state_name(target),
        })
    return {
        'states': [state_name(q) for q in ordered(a.states)],
        'relations': a.relation_count,
        'alphabet': list(a.alphabet),
        'init': init,
        'accepting': [state_name(q) for q in ordered(a.accepting)],
        'transitions': transitions,
    }


def automaton_from_json(document: Mapping[str, Any]) -> DistributedAutomaton:
    """
    Reads a table automaton, or expands a reduction descriptor.
    """
    if 'reduction' in document:
        return _expand_reduction(document)
    try:
        states = [_scalar(q, 'state') for q in document['states']]
        init_document = document['init']
        if init_document['kind'] == 'state':
            init: Any = _scalar(init_document['value'], 'initial state')
        elif init_document['kind'] == 'map':
            init = {sigma: _scalar(q, 'initial state')
                    for sigma, q in init_document['value'].items()}
        else:
            raise InvalidAutomatonError(
                f"unknown init kind {init_document['kind']!r}"
            )
        entries = [
            (entry['label'], _scalar(entry['state'], 'state'),
             [[_scalar(q, 'state') for q in n_k] for n_k in entry['neighbors']],
             _scalar(entry['next'], 'state'))
            for entry in document['transitions']
        ]
        return make_table_automaton(
            states, int(document['relations']), document['alphabet'], init,
            entries, [_scalar(q, 'state') for q in document['accepting']],
            name=str(document.get('name', 'table')),
        )
    except (KeyError, TypeError) as error:
        raise InvalidAutomatonError(f'malformed automaton document: {error}')


def reduction_descriptor(kind: str, source: Mapping[str, Any]) -> Document:
    """
    A document standing for a compiled automaton; automaton_from_json()
    recompiles it.
    """
    return {'reduction': kind, 'source': dict(source)}


def _expand_reduction(document: Mapping[str, Any]) -> DistributedAutomaton:
    kind = document['reduction']
    source = document.get('source')
    if not isinstance(source, Mapping):
        raise InvalidAutomatonError('reduction descriptor has no source')
    logger.info('Compiling %s reduction', kind)
    if kind == 'tm':
        return tm_to_automaton(machine_from_json(source))
    if kind == 'pcp':
        return pcp_to_automaton(instance_from_json(source))
    raise InvalidAutomatonError(f'unknown reduction {kind!r}')


# Word and tree automata

def word_automaton_to_json(w: WordAutomaton) -> Document:
    return {
        'states': [state_name(p) for p in ordered(w.states)],
        'alphabet': list(w.alphabet),
        'initial': state_name(w.initial),
        'transitions': [[state_name(p), sigma, state_name(target)]
                        for (p, sigma), target in sorted(
                            w.transitions.items(),
                            key=lambda item: (str(state_name(item[0][0])),
                                              item[0][1]))],
        'accepting': [state_name(p) for p in ordered(w.accepting)],
    }


def word_automaton_from_json(document: Mapping[str, Any]) -> WordAutomaton:
    try:
        return WordAutomaton(
            [_scalar(p, 'state') for p in document['states']],
            document['alphabet'],
            _scalar(document['initial'], 'state'),
            {(_scalar(p, 'state'), sigma): _scalar(target, 'state')
             for p, sigma, target in document['transitions']},
            [_scalar(p, 'state') for p in document['accepting']],
        )
    except (KeyError, TypeError) as error:
        raise InvalidAutomatonError(f'malformed word automaton: {error}')


def tree_automaton_to_json(ta: TreeAutomaton) -> Document:
    transitions = [
        {'children': [state_name(p) for p in children], 'label': sigma,
         'next': state_name(target)}
        for (children, sigma), target in ta.transitions.items()
    ]
    transitions.sort(key=lambda t: (len(t['children']),
                                    [str(c) for c in t['children']],
                                    t['label']))
    return {
        'states': [state_name(p) for p in ordered(ta.states)],
        'rank': ta.rank,
        'alphabet': list(ta.alphabet),
        'transitions': transitions,
        'accepting': [state_name(p) for p in ordered(ta.accepting)],
    }


def tree_automaton_from_json(document: Mapping[str, Any]) -> TreeAutomaton:
    try:
        return TreeAutomaton(
            [_scalar(p, 'state') for p in document['states']],
            int(document['rank']),
            document['alphabet'],
            {(tuple(_scalar(c, 'state') for c in t['children']), t['label']):
             _scalar(t['next'], 'state')
             for t in document['transitions']},
            [_scalar(p, 'state') for p in document['accepting']],
        )
    except (KeyError, TypeError) as error:
        raise InvalidAutomatonError(f'malformed tree automaton: {error}')


# Reduction sources

def machine_to_json(m: TuringMachine) -> Document:
    return {
        'states': list(m.states),
        'tape': list(m.tape_alphabet),
        'init': m.initial,
        'blank': m.blank,
        'halt': m.halt,
        'delta': [[q, s, target, written, move.value]
                  for (q, s), (target, written, move) in m.delta.items()],
    }


def machine_from_json(document: Mapping[str, Any]) -> TuringMachine:
    try:
        return TuringMachine(
            document['states'], document['tape'], document['init'],
            document['blank'],
            {(q, s): (target, written, move)
             for q, s, target, written, move in document['delta']},
            document['halt'],
        )
    except (KeyError, TypeError) as error:
        raise ValueError(f'malformed Turing machine: {error}')


def instance_to_json(inst: PcpInstance) -> Document:
    return {'tiles': {str(i): list(inst.tiles[i]) for i in inst.indices}}


def instance_from_json(document: Mapping[str, Any]) -> PcpInstance:
    try:
        return PcpInstance({int(index): (upper, lower)
                            for index, (upper, lower)
                            in document['tiles'].items()})
    except (KeyError, TypeError, AttributeError) as error:
        raise ValueError(f'malformed PCP instance: {error}')
