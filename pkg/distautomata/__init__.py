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
A workbench for deterministic distributed automata on labeled digraphs.
"""

from .graphs import (
    Digraph, PointedDigraph, make_digraph, classify, dipath_of_word,
    tree_unravel,
)
from .automata import (
    DistributedAutomaton, TableAutomaton, RuleAutomaton, Mode,
    make_table_automaton, tabulate, product,
)
from .runtime import trace, accepts_within, decide_acceptance
from .emptiness import forgetful_empty, bounded_search, dipath_search
