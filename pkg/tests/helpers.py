"""Shared test fixtures: canonical matrices and seeded random families."""

import numpy as np

import specrad as sr

CYCLIC_3 = [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]


def cyclic_matrix() -> sr.NonnegMatrix:
    return sr.make_matrix(CYCLIC_3)


def random_sparse(rng: np.random.Generator, n: int, sparsity: float = 0.5) -> sr.NonnegMatrix:
    entries = rng.uniform(0.0, 1.0, (n, n))
    entries *= rng.random((n, n)) < sparsity
    return sr.make_matrix(entries)


def random_symmetric(rng: np.random.Generator, n: int) -> sr.SymmetricNonnegMatrix:
    return sr.arithmetic_symmetrization(sr.make_matrix(rng.uniform(0.0, 1.0, (n, n))))
