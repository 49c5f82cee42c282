#!/usr/bin/env python
from setuptools import setup, find_packages

setup(
    name = 'bcnqkit',
    version='0.1',
    install_requires=[
        'sympy',
        'numpy',
        'pyparsing>=3.1',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['bcnqkit = bcnqkit.cli:main'],
    },
    packages = find_packages(exclude=['tests']),
)
