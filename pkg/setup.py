"""
RS Periods
"""

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name = "rsperiods",
    version = "0.1.0",
    author = "rsperiods contributors",
    description = ("Exact archimedean period constants for Rankin-Selberg GL(n) x GL(n-1)"),
    packages=find_packages(exclude=['contrib', 'docs', 'tests']),
    long_description=long_description,
    license='GPLv2',
    python_requires='>=3.8',
    install_requires=[
        "torchvision>=0.4.1",
        "torch>=1.1.0",
        "scipy>=1.0",
        "h5py",
        "pandas",
        "numpy",
        "tqdm",
        "sympy>=1.9",
    ],
    extras_require={
        "tests": ["pytest"],
    },
    entry_points={
        "console_scripts": ["rsperiods=rsperiods.cli:main"],
    },
)
