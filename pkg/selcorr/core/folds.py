# -*- coding: utf-8 -*-
"""
Fold partitions for cross-fitting
"""
import numpy as np

from selcorr.base.algorithms import round_robin

__copyright__ = "Copyright 2026, selcorr developers"


class FoldPartition(object):
    """
    Disjoint, nonempty index sets I_1..I_L covering 0..n-1 whose sizes
    differ by at most one.  Each fold's indices are stored sorted.
    """

    def __init__(self, folds, n):
        self.n = int(n)
        self.folds = tuple(np.sort(np.asarray(f, dtype=int)) for f in folds)
        for fold in self.folds:
            fold.setflags(write=False)
        self._check()
        self._membership = np.empty(self.n, dtype=int)
        for index, fold in enumerate(self.folds):
            self._membership[fold] = index
        self._membership.setflags(write=False)

    def _check(self):
        sizes = [len(f) for f in self.folds]
        if len(self.folds) < 2:
            raise ValueError("a partition needs at least two folds")
        if min(sizes) == 0:
            raise ValueError("empty fold")
        if max(sizes) - min(sizes) > 1:
            raise ValueError("fold sizes {} differ by more than one".format(
                sizes))
        union = np.concatenate(self.folds)
        if len(union) != self.n or not np.array_equal(np.sort(union),
                                                       np.arange(self.n)):
            raise ValueError("folds do not partition 0..{}".format(
                self.n - 1))

    @property
    def n_folds(self):
        return len(self.folds)

    @property
    def membership(self):
        """ fold index of every observation """
        return self._membership

    def outside(self, *fold_ids):
        """ sorted indices not in any of the given folds """
        mask = ~np.isin(self._membership, fold_ids)
        return np.flatnonzero(mask)

    def sizes(self):
        return [len(f) for f in self.folds]

    def __eq__(self, other):
        return (isinstance(other, FoldPartition) and self.n == other.n and
                len(self.folds) == len(other.folds) and
                all(np.array_equal(a, b)
                    for a, b in zip(self.folds, other.folds)))

    def __repr__(self):
        return "FoldPartition(n={}, sizes={})".format(self.n, self.sizes())


def partition_folds(n, n_folds, rng):
    """
    Uniformly random partition of 0..n-1 into n_folds folds whose sizes
    are floor(n/L) or ceil(n/L).  Deterministic given rng state.

    Parameters:
      n (int) - number of observations
      n_folds (int) - L, with 1 < L <= n
      rng (numpy.random.Generator)
    """
    n = int(n)
    n_folds = int(n_folds)
    if n_folds <= 1 or n_folds > n:
        raise ValueError("fold count must satisfy 1 < L <= n, got L={} "
                         "for n={}".format(n_folds, n))
    shuffled = rng.permutation(n)
    assignment = round_robin(list(range(n_folds)), shuffled)
    return FoldPartition([assignment[k] for k in range(n_folds)], n)
