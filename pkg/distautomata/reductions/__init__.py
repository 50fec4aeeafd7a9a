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
Compilers from undecidable problems to distributed automata, with the
direct simulators used to check them.

 - turing: Turing machines to automata on unlabeled dipaths; the automaton
   accepts some dipath iff the machine halts.
 - pcp: Post correspondence instances to quasi-acyclic automata on labeled
   digraphs; the automaton accepts the ditree encoding of a candidate
   solution iff the candidate is a solution.
"""

from .turing import TuringMachine, tm_simulate, tm_to_automaton
from .pcp import PcpInstance, pcp_encode_solution, pcp_to_automaton


__all__ = [
    'TuringMachine', 'tm_simulate', 'tm_to_automaton',
    'PcpInstance', 'pcp_encode_solution', 'pcp_to_automaton',
]
