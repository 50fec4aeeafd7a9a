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
Resource budgets shared by every bounded procedure in the package.

The default budget is created lazily on first use. Any of its fields may be
overridden through the environment:

    DISTAUTOMATA_MAX_NODES
    DISTAUTOMATA_MAX_ROUNDS
    DISTAUTOMATA_MAX_LENGTH
    DISTAUTOMATA_MAX_EVALUATIONS
    DISTAUTOMATA_MAX_CONFIGURATIONS
    DISTAUTOMATA_MAX_STATES

>>> Budget().max_nodes
3
>>> Budget(max_rounds=10).max_rounds
10
"""

import os
import logging
from typing import NamedTuple, Optional

from lazy_object_proxy import Proxy


__all__ = ['Budget', 'BudgetExceededError', 'budget', 'load_budget', 'resolve']

logger = logging.getLogger(__name__)

ENVIRONMENT_PREFIX = 'DISTAUTOMATA_'


class Budget(NamedTuple):
    # Largest digraphs considered by bounded emptiness search.
    max_nodes: int = 3
    # Default horizon for bounded runs.
    max_rounds: int = 64
    # Longest word considered by dipath search.
    max_length: int = 6
    # Upper bound on |Q| * 2^(|Q| r) * |Sigma| for exhaustive evaluation.
    max_evaluations: int = 1 << 20
    # Distinct global configurations remembered while deciding acceptance.
    max_configurations: int = 100_000
    # States explored when building a state diagram by reachability.
    max_states: int = 100_000


class BudgetExceededError(RuntimeError):
    """
    Raised when a computation would exceed its configured budget.
    """
    def __init__(self, what: str, limit: int) -> None:
        super().__init__(f'{what} exceeds budget of {limit}')
        self.what = what
        self.limit = limit


def load_budget() -> Budget:
    """
    Builds the default budget, honouring environment overrides.
    """
    overrides = {}
    for field in Budget._fields:
        variable = ENVIRONMENT_PREFIX + field.upper()
        value = os.getenv(variable)
        if value is None:
            continue
        try:
            number = int(value)
        except ValueError:
            raise ValueError(f'{variable} must be an integer: {value!r}')
        if number < 1:
            raise ValueError(f'{variable} must be positive: {number}')
        logger.info('Budget from environment: %s=%d', field, number)
        overrides[field] = number
    return Budget(**overrides)


budget: Budget = Proxy(load_budget)
"""
The default budget, loaded from the environment on first access.
"""


def resolve(given: Optional[Budget]) -> Budget:
    """
    Use the given budget, or fall back to the package default.
    """
    if given is not None:
        return given
    # Unwrap the proxy so callers can use _replace() and friends.
    return Budget(*budget)
