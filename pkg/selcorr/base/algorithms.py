# -*- coding: utf-8 -*-
"""
Library for small algorithms shared by the estimators and the simulation
driver: round-robin assignment and deterministic seed splitting.
"""
import numpy as np

__copyright__ = "Copyright 2026, selcorr developers"

MAX_SEED = 2 ** 32 - 1


def round_robin(worker_list, target_list, rng=None, no_empty=False):
    """
    Returns a dictionary mapping workers to targets
    Parameters:
      worker_list (list) - list of any hashable objects
      target_list (list) - list of any objects
      rng (numpy.random.Generator) - If None, the return value is the same
                         every time.  Otherwise the workers are mapped to
                         targets in an order drawn from rng.
      no_empty (bool) - If True, require all workers to be used
    Worker sizes differ by at most one.  A typical use case is dealing
    shuffled observation indices into cross-fitting folds.

    Example: More targets than workers:
      >>> round_robin([0, 1], ['a', 'b', 'c'])
      {0: ['a', 'c'], 1: ['b']}

    Example: Fewer targets than workers (not all workers will be used):
      >>> round_robin([0, 1, 2], ['a', 'b'])
      {0: ['a'], 1: ['b'], 2: []}
    """
    if len(worker_list) == 0:
        raise ValueError("Error: worker_list cannot be empty")
    if no_empty and len(target_list) < len(worker_list):
        raise ValueError("Length of target_list must be >= worker_list unless"
                         " no_empty is set to False")
    worker_list = list(worker_list)  # shallow copy
    if rng is not None:
        worker_list = [worker_list[i]
                       for i in rng.permutation(len(worker_list))]
    ret = {}
    for worker in worker_list:
        ret[worker] = []
    num_workers = len(worker_list)
    for index, target in enumerate(target_list):
        worker = worker_list[index % num_workers]
        ret[worker].append(target)
    return ret


def split_seed(master_seed, *keys):
    """
    Child SeedSequence for the path `keys` under master_seed.

    split_seed(s, b) is the b-th child of s no matter how many other
    children were drawn, or in what order, so replications can run on
    any number of workers.
      >>> a = split_seed(7, 3).generate_state(1)[0]
      >>> b = split_seed(7, 3).generate_state(1)[0]
      >>> bool(a == b)
      True
    """
    keys = tuple(int(k) for k in keys)
    return np.random.SeedSequence(int(master_seed), spawn_key=keys)


def split_rng(master_seed, *keys):
    """ numpy Generator seeded from split_seed(master_seed, *keys) """
    return np.random.default_rng(split_seed(master_seed, *keys))


def draw_seed(rng):
    """ One integer seed from rng, for libraries taking random_state """
    return int(rng.integers(0, MAX_SEED))
