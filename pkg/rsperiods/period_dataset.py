#!/bin/python
#-----------------------------------------------------------------------------
# File Name : period_dataset.py
# Author: rsperiods contributors
#
# Creation Date : Tue Aug 18 10:02:33 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import os
import torch.utils.data as data


def identity(x):
    return x

def collate_records(batch):
    # cases and reports are not tensors; keep the batch as a list
    return list(batch)


class PeriodDataset(data.Dataset):
    """Base class of the HDF5-backed verification corpora. Subclasses set
    self.create and implement create_hdf5, __getitem__ and __len__."""
    _repr_indent = 4

    def __init__(self, root=None, transform=None, target_transform=None):
        if isinstance(root, str):
            root = os.path.expanduser(root)
        self.root = root

        if root is not None and not os.path.isfile(root):
            if self.create:
                os.makedirs(os.path.dirname(root) or '.', exist_ok=True)
                self.create_hdf5()
            else:
                raise FileNotFoundError("File {} does not exist and create is False".format(root))

        self.transform = transform if transform is not None else identity
        self.target_transform = target_transform if target_transform is not None else identity

    def __getitem__(self, index):
        raise NotImplementedError

    def __len__(self):
        raise NotImplementedError

    def __repr__(self):
        head = "Dataset " + self.__class__.__name__
        body = ["Number of cases: {}".format(self.__len__())]
        if self.root is not None:
            body.append("Root location: {}".format(self.root))
        body += self.extra_repr().splitlines()
        for name, t in (("Transform", self.transform), ("Target transform", self.target_transform)):
            if t is not identity:
                lines = repr(t).splitlines()
                body += ["{}: {}".format(name, lines[0])] + lines[1:]
        lines = [head] + [" " * self._repr_indent + line for line in body]
        return '\n'.join(lines)

    def extra_repr(self):
        return ""

    def create_hdf5(self):
        raise NotImplementedError()
