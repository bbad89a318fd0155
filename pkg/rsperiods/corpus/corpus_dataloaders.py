#!/bin/python
#-----------------------------------------------------------------------------
# File Name : corpus_dataloaders.py
# Author: rsperiods contributors
#
# Creation Date : Wed Aug 19 14:22:08 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import json
import os
import tempfile

import h5py
import pandas as pd
import torch.utils.data
from tqdm import tqdm

from ..period_dataset import PeriodDataset, collate_records
from ..transforms import default_transform
from ..utils import DEFAULT_CORPUS, STRIP_POINTS
from .create_hdf5 import SuiteConfig, create_corpus_hdf5, read_case


class CorpusDataset(PeriodDataset):
    """Verification cases stored by create_corpus_hdf5. Items are (case, key)
    after transform / target_transform."""

    def __init__(
            self,
            root=DEFAULT_CORPUS,
            transform=None,
            target_transform=None,
            create=True,
            config=None,
            progress=True):

        self.create = create
        self.progress = progress
        requested = config
        self.config = (config or SuiteConfig()).validate()
        super(CorpusDataset, self).__init__(
                root,
                transform=transform,
                target_transform=target_transform)
        with h5py.File(self.root, 'r') as f:
            try:
                self.n = int(f['extra'].attrs['N'])
                self.keys = f['extra']['keys'][()]
                stored = SuiteConfig.from_json(json.loads(f['extra'].attrs['config']))
            except KeyError:
                print('Corpus layout not found in hdf5 file. Delete {0} and run again'.format(self.root))
                raise
        if requested is None:
            self.config = stored
        elif stored.corpus_fields() != self.config.corpus_fields():
            raise ValueError("Corpus {} was generated with {}, but {} was requested. "
                             "Delete it or pass another root".format(
                                 self.root, stored.corpus_fields(), self.config.corpus_fields()))

    def create_hdf5(self):
        create_corpus_hdf5(self.root, self.config, progress=self.progress)

    def extra_repr(self):
        return "Seed: {}".format(self.config.seed)

    def __len__(self):
        return self.n

    def __getitem__(self, index):
        # opened per item so that num_workers > 0 works
        with h5py.File(self.root, 'r') as f:
            key = int(self.keys[index])
            case = read_case(f, key)

        if self.transform is not None:
            case = self.transform(case)

        if self.target_transform is not None:
            key = self.target_transform(key)
        return case, key


def create_datasets(
        root=DEFAULT_CORPUS,
        config=None,
        points=STRIP_POINTS,
        transform=None,
        target_transform=None,
        create=True,
        progress=True):

    if transform is None:
        tols = config or SuiteConfig()
        transform = default_transform(points, tols.constancy_tol, tols.match_tol)

    return CorpusDataset(root,
                         transform=transform,
                         target_transform=target_transform,
                         create=create,
                         config=config,
                         progress=progress)

def create_dataloader(
        root=DEFAULT_CORPUS,
        config=None,
        batch_size=16,
        points=STRIP_POINTS,
        transform=None,
        target_transform=None,
        create=True,
        progress=True,
        **dl_kwargs):

    ds = create_datasets(root=root,
                         config=config,
                         points=points,
                         transform=transform,
                         target_transform=target_transform,
                         create=create,
                         progress=progress)

    dl_kwargs.setdefault('num_workers', ds.config.parallelism)
    return torch.utils.data.DataLoader(ds, shuffle=False, batch_size=batch_size,
                                       collate_fn=collate_records, **dl_kwargs)


def summarize_records(frame: pd.DataFrame):
    if frame.empty:
        return {'total': 0, 'exact_matches': 0, 'not_constant': 0, 'numeric_failures': 0,
                'epsilon_independent': True, 'positivity_violations': 0}
    # the reduced constant may not depend on the central-character choice
    base = frame.groupby(['field', 'mu', 'nu', 'j', 'chi_delta', 'eps_psi'])['constant'].nunique()
    return {
        'total': int(len(frame)),
        'exact_matches': int(frame['exact_match'].sum()),
        'not_constant': int(frame['not_constant'].sum()),
        'numeric_failures': int((~frame['numeric_ok'].astype(bool)).sum()),
        'epsilon_independent': bool((base == 1).all()),
        'positivity_violations': int((~frame['positivity_ok'].astype(bool)).sum()),
    }

def run_suite(config=None, root=None, progress=True, points=STRIP_POINTS):
    """Verify every corpus case. Without root the corpus is generated in a
    temporary directory. Returns the JSON-ready report."""
    config = (config or SuiteConfig()).validate()
    rows = []
    with tempfile.TemporaryDirectory() as tmp:
        path = root or os.path.join(tmp, 'corpus.hdf5')
        dl = create_dataloader(path, config, points=points, progress=progress)
        for batch in tqdm(dl, desc='suite', disable=not progress):
            for record, key in batch:
                record['case_id'] = int(key)
                rows.append(record)
        used = dl.dataset.config

    frame = pd.DataFrame(rows)
    if not frame.empty:
        frame = frame.sort_values('case_id').reset_index(drop=True)
    return {
        'aggregate': summarize_records(frame),
        'config': used.to_json(),
        'generated': pd.Timestamp.now().isoformat(),
        'cases': json.loads(frame.to_json(orient='records')) if not frame.empty else [],
    }
