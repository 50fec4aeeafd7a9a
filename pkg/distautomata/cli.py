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
Command line interface.

Exit status: 0 when the computed answer is yes (accepted, nonempty, holds),
1 when it is no, 2 for usage or input errors, 3 when a budget ran out.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, IO, List, Optional, Sequence

from . import serialization
from .automata import (
    DistributedAutomaton, is_forgetful, is_monovisioned, is_quasi_acyclic,
    monovisionize, state_key,
)
from .classical import dfa_to_forgetful, forgetful_to_dfa, tree_to_forgetful
from .emptiness import bounded_search, dipath_search, forgetful_empty
from .graphs import enumerate_dipaths, enumerate_pointed_digraphs
from .reductions.pcp import pcp_encode_solution
from .runtime import RunTrace, decide_acceptance, trace
from .settings import Budget, BudgetExceededError, resolve


__all__ = ['run_cli', 'main']

logger = logging.getLogger(__name__)

YES, NO, INPUT_ERROR, OUT_OF_BUDGET = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'{value} is not positive')
    return value


def _symbols(text: str) -> List[str]:
    return [symbol for symbol in text.split(',') if symbol]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='distautomata',
        description='Run and analyze distributed automata on digraphs.',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (twice for debugging output)')
    parser.add_argument('--budget-nodes', type=_positive, metavar='N')
    parser.add_argument('--budget-rounds', type=_positive, metavar='N')
    parser.add_argument('--budget-length', type=_positive, metavar='N')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def command(name: str, help: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help)
        sub.add_argument('-o', '--output', metavar='FILE',
                         help='write the result here instead of stdout')
        return sub

    run = command('run', help='run an automaton on a pointed digraph')
    run.add_argument('automaton')
    run.add_argument('graph')
    run.add_argument('--rounds', type=int, metavar='T',
                     help='stop after T rounds instead of deciding acceptance')
    run.add_argument('--trace', choices=('json', 'tsv'), default='tsv')

    empty = command('empty', help='decide or search for emptiness')
    empty.add_argument('automaton')
    method = empty.add_mutually_exclusive_group(required=True)
    method.add_argument('--forgetful', dest='method', action='store_const',
                        const='forgetful')
    method.add_argument('--bounded', dest='method', action='store_const',
                        const='bounded')
    method.add_argument('--dipath', dest='method', action='store_const',
                        const='dipath')
    empty.add_argument('--witness', metavar='FILE',
                       help='write an accepted pointed digraph here')

    check = command('check', help='check a structural property')
    check.add_argument('property',
                       choices=('forgetful', 'monovisioned', 'quasi-acyclic'))
    check.add_argument('automaton')

    convert = command('convert', help='convert between automaton models')
    convert.add_argument('direction', choices=('dfa2da', 'da2dfa', 'ta2da'))
    convert.add_argument('input')

    mono = command('monovisionize', help='add a rejecting sink for dipaths')
    mono.add_argument('automaton')

    reduce = command('reduce', help='compile a Turing machine or PCP instance')
    reduce.add_argument('kind', choices=('tm', 'pcp'))
    reduce.add_argument('input')

    encode = command('encode', help='encode a candidate PCP solution')
    encode.add_argument('kind', choices=('pcp',))
    encode.add_argument('input')
    encode.add_argument('--solution', required=True, metavar='I,J,...')

    enumerate_ = command('enumerate', help='list small pointed digraphs')
    enumerate_.add_argument('what', choices=('digraphs', 'dipaths'))
    enumerate_.add_argument('--alphabet', type=_symbols, default=['a'])
    enumerate_.add_argument('--relations', type=_positive, default=1)

    return parser


def _budget(args: argparse.Namespace) -> Budget:
    budget = resolve(None)
    if args.budget_nodes is not None:
        budget = budget._replace(max_nodes=args.budget_nodes)
    if args.budget_rounds is not None:
        budget = budget._replace(max_rounds=args.budget_rounds)
    if args.budget_length is not None:
        budget = budget._replace(max_length=args.budget_length)
    return budget


def _display(state: Any) -> str:
    try:
        return str(serialization.state_name(state))
    except ValueError:
        return state_key(state)


class Session:
    """
    One invocation: parsed arguments, budget and output stream.
    """

    def __init__(self, args: argparse.Namespace, out: IO[str]) -> None:
        self.args = args
        self.budget = _budget(args)
        self.out = out

    def say(self, *fields: Any) -> None:
        print(*fields, sep='\t', file=self.out)

    def write(self, document: Any) -> None:
        serialization.dump(document, self.out)

    def automaton(self, path: str) -> DistributedAutomaton:
        return serialization.automaton_from_json(serialization.load(path))

    # Subcommands

    def run(self) -> int:
        a = self.automaton(self.args.automaton)
        pg = serialization.graph_from_json(serialization.load(self.args.graph))
        if self.args.rounds is not None:
            result = trace(a, pg, self.args.rounds)
        else:
            verdict = decide_acceptance(a, pg, self.budget)
            if verdict.accepted:
                rounds = verdict.accepting_round
            else:
                rounds = verdict.cycle_start + verdict.cycle_length
            result = trace(a, pg, rounds)
        self._emit_trace(result)
        return YES if result.accepted_at is not None else NO

    def _emit_trace(self, result: RunTrace) -> None:
        rows = [[_display(q) for q in c.assignment]
                for c in result.configurations]
        if self.args.trace == 'json':
            self.write({'rounds': rows, 'accepted_at': result.accepted_at})
        else:
            for row in rows:
                self.say(*row)
            if result.accepted_at is not None:
                self.say('accepted', result.accepted_at)
            else:
                self.say('rejected')

    def empty(self) -> int:
        a = self.automaton(self.args.automaton)
        witness = None
        if self.args.method == 'forgetful':
            verdict = forgetful_empty(a, budget=self.budget)
            if verdict.is_empty:
                self.say('empty')
            else:
                self.say('nonempty', verdict.first_hit_round,
                         _display(verdict.hit_state))
            witness = verdict.witness
        elif self.args.method == 'bounded':
            witness = bounded_search(a, budget=self.budget)
            self.say('nonempty' if witness else 'none found')
        else:
            found = dipath_search(a, budget=self.budget)
            if found:
                word, witness = found
                self.say('nonempty', ' '.join(word))
            else:
                self.say('none found')
        if witness is not None and self.args.witness:
            with open(self.args.witness, 'w', encoding='UTF-8') as file:
                serialization.dump(serialization.graph_to_json(witness), file)
        return NO if witness is None else YES

    def check(self) -> int:
        a = self.automaton(self.args.automaton)
        prop = self.args.property
        if prop == 'forgetful':
            holds = is_forgetful(a, self.budget)
            self.say('yes' if holds else 'no')
        elif prop == 'monovisioned':
            holds, sink = is_monovisioned(a, self.budget)
            self.say('yes' if holds else 'no',
                     *([_display(sink)] if holds else []))
        else:
            holds = is_quasi_acyclic(a, self.budget)
            self.say('yes' if holds else 'no')
        return YES if holds else NO

    def convert(self) -> int:
        document = serialization.load(self.args.input)
        direction = self.args.direction
        if direction == 'dfa2da':
            w = serialization.word_automaton_from_json(document)
            self.write(serialization.automaton_to_json(dfa_to_forgetful(w)))
        elif direction == 'ta2da':
            ta = serialization.tree_automaton_from_json(document)
            self.write(serialization.automaton_to_json(tree_to_forgetful(ta)))
        else:
            a = serialization.automaton_from_json(document)
            self.write(serialization.word_automaton_to_json(forgetful_to_dfa(a)))
        return YES

    def monovisionize(self) -> int:
        a = self.automaton(self.args.automaton)
        self.write(serialization.automaton_to_json(monovisionize(a)))
        return YES

    def reduce(self) -> int:
        document = serialization.load(self.args.input)
        # Validate before emitting the descriptor.
        if self.args.kind == 'tm':
            source = serialization.machine_to_json(
                serialization.machine_from_json(document))
        else:
            source = serialization.instance_to_json(
                serialization.instance_from_json(document))
        self.write(serialization.reduction_descriptor(self.args.kind, source))
        return YES

    def encode(self) -> int:
        inst = serialization.instance_from_json(serialization.load(self.args.input))
        seq = [int(index) for index in _symbols(self.args.solution)]
        self.write(serialization.graph_to_json(pcp_encode_solution(inst, seq)))
        return YES

    def enumerate(self) -> int:
        if self.args.what == 'digraphs':
            stream = enumerate_pointed_digraphs(
                self.args.alphabet, self.args.relations, self.budget.max_nodes)
        else:
            stream = enumerate_dipaths(self.args.alphabet,
                                       self.budget.max_length)
        for pg in stream:
            print(json.dumps(serialization.graph_to_json(pg)), file=self.out)
        return YES


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs one command and returns its exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else INPUT_ERROR

    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        stream=sys.stderr,
    )

    out = sys.stdout
    try:
        if args.output:
            out = open(args.output, 'w', encoding='UTF-8')
        session = Session(args, out)
        handlers: Dict[str, Callable[[], int]] = {
            'run': session.run,
            'empty': session.empty,
            'check': session.check,
            'convert': session.convert,
            'monovisionize': session.monovisionize,
            'reduce': session.reduce,
            'encode': session.encode,
            'enumerate': session.enumerate,
        }
        return handlers[args.command]()
    except BudgetExceededError as error:
        print(f'{parser.prog}: {error}', file=sys.stderr)
        return OUT_OF_BUDGET
    except (ValueError, KeyError, OSError) as error:
        print(f'{parser.prog}: {error}', file=sys.stderr)
        return INPUT_ERROR
    finally:
        if out is not sys.stdout:
            out.close()


def main() -> None:
    sys.exit(run_cli())
