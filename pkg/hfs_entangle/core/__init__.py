# Two-qubit linear algebra and entanglement measures
from .entanglement import (
    gibbs_state,
    l1_coherence,
    wootters_concurrence,
)
from .linalg import EigenSystem4, eigendecompose_hermitian, kron

__all__ = [
    "EigenSystem4",
    "eigendecompose_hermitian",
    "gibbs_state",
    "kron",
    "l1_coherence",
    "wootters_concurrence",
]
