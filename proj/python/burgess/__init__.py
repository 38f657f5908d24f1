"""Character sums, Kloosterman sums and central L-values modulo primes."""

import json

from ._core import (
    BurgessError,
    central_value,
    cli,
    divisor_counts,
    gauss_sum,
    is_prime,
    kloosterman,
    offdiag_tail,
    tau,
)
from ._core import verify as _verify


def verify(tuples=100, seed=0):
    """Identity-suite reports as dicts."""
    return [json.loads(line) for line in _verify(tuples, seed)]


__all__ = [
    "BurgessError",
    "central_value",
    "cli",
    "divisor_counts",
    "gauss_sum",
    "is_prime",
    "kloosterman",
    "offdiag_tail",
    "tau",
    "verify",
]
