#!/usr/bin/env python3

from setuptools import setup

setup(name='distautomata',
      version='1.0',
      description='Run, analyze and compile distributed automata on digraphs',
      author='The distautomata developers',
      packages=['distautomata', 'distautomata.reductions'],
      python_requires='>=3.8',
      install_requires=['lazy-object-proxy', 'networkx'],
      entry_points={
          'console_scripts': ['distautomata=distautomata.cli:main'],
      },
      )
