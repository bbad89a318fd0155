#!/bin/python
#-----------------------------------------------------------------------------
# File Name : create_corpus.py
# Author: rsperiods contributors
#
# Creation Date : Thu Aug 27 09:05:41 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import os

from rsperiods.corpus.create_hdf5 import *
from rsperiods.utils import DEFAULT_CORPUS

if __name__ == "__main__":
    os.makedirs(os.path.dirname(DEFAULT_CORPUS), exist_ok=True)
    create_corpus_hdf5(DEFAULT_CORPUS, SuiteConfig())
