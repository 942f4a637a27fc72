"""Input coercion for the estimator API."""
from __future__ import annotations

import numpy as np

from .graph import Graph, VertexSet, mask_of


def check_graph(X) -> Graph:
    """Return ``X`` as a :class:`Graph`.

    Accepts a ``Graph`` or a square symmetric 0/1 adjacency matrix with a
    zero diagonal (dense array-like or scipy sparse).
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "toarray"):
        X = X.toarray()
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.shape[0] == 0:
        raise ValueError("adjacency matrix is empty")
    if A.dtype == object or not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0/1")
    A = A.astype(bool)
    if np.diag(A).any():
        raise ValueError("adjacency matrix has self-loops on the diagonal")
    if (A != A.T).any():
        raise ValueError("adjacency matrix is not symmetric")
    return Graph(A.shape[0], [mask_of(np.flatnonzero(row).tolist()) for row in A])


def check_vertex_set(g: Graph, s) -> VertexSet:
    """Coerce a VertexSet, a boolean mask of length ``n`` or an index list."""
    if isinstance(s, VertexSet):
        return g.vertex_set(s)
    arr = np.asarray(s)
    if arr.dtype == bool:
        if arr.shape != (g.n,):
            raise ValueError(f"boolean mask must have shape ({g.n},), got {arr.shape}")
        return VertexSet.from_iterable(g.n, np.flatnonzero(arr).tolist())
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("vertex indices must be integers")
    return VertexSet.from_iterable(g.n, arr.astype(int).ravel().tolist())
