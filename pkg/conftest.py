#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

from hypothesis import HealthCheck, settings  # type: ignore

# Automata and digraphs are small but each example runs many rounds.
settings.register_profile(
    'distautomata',
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile('distautomata')
