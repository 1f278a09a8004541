"""
Numerical oracle: invariants of tensor powers of a defining representation.

Builds so(n) / sp(n) as matrices preserving an explicit bilinear form, finds
the invariant subspace of V^{(x)m} as the common kernel of the Lie algebra
action, and returns traces of tensor-factor permutations on it.  Nothing here
touches characters or Laurent polynomials.
"""

import itertools

import numpy as np
import scipy.sparse as sp


def so_basis(n):
    J = np.fliplr(np.eye(n))
    out = []
    for i, j in itertools.combinations(range(n), 2):
        S = np.zeros((n, n))
        S[i, j], S[j, i] = 1, -1
        out.append(J @ S)
    return out, J


def sp_basis(n):
    r = n // 2
    J = np.block([[np.zeros((r, r)), np.eye(r)], [-np.eye(r), np.zeros((r, r))]])
    out = []
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        S = np.zeros((n, n))
        S[i, j] = S[j, i] = 1
        out.append(J @ S)
    return out, J


def _tensor_action(X, m):
    n = X.shape[0]
    X = sp.csr_matrix(X)
    total = sp.csr_matrix((n ** m, n ** m))
    for k in range(m):
        ops = [sp.identity(n, format="csr")] * m
        ops[k] = X
        term = ops[0]
        for o in ops[1:]:
            term = sp.kron(term, o, format="csr")
        total = total + term
    return total


def invariant_subspace(basis, m, tol=1e-8):
    """Orthonormal columns spanning the invariants in V^{(x)m}."""
    n = basis[0].shape[0]
    gram = sp.csr_matrix((n ** m, n ** m))
    for X in basis:
        A = _tensor_action(X, m)
        gram = gram + (A.T @ A)
    vals, vecs = np.linalg.eigh(gram.toarray())
    return vecs[:, vals < tol]


def permutation_matrix(n, m, perm):
    """Operator sending v_1 (x) ... (x) v_m to the factors reordered by ``perm``."""
    size = n ** m
    rows, cols = [], []
    for idx in itertools.product(range(n), repeat=m):
        new = [0] * m
        for a, b in enumerate(perm):
            new[b] = idx[a]
        src = np.ravel_multi_index(idx, (n,) * m)
        dst = np.ravel_multi_index(tuple(new), (n,) * m)
        rows.append(dst)
        cols.append(src)
    return sp.csr_matrix((np.ones(size), (rows, cols)), shape=(size, size))


def trace_on_invariants(basis, m, perm):
    Q = invariant_subspace(basis, m)
    n = basis[0].shape[0]
    P = permutation_matrix(n, m, perm)
    return float(np.trace(Q.T @ (P @ Q))), Q.shape[1]


def flip_pairs(m, c):
    """Permutation swapping factors (0,1), (2,3), ... for the first c pairs."""
    perm = list(range(m))
    for i in range(c):
        perm[2 * i], perm[2 * i + 1] = perm[2 * i + 1], perm[2 * i]
    return perm
