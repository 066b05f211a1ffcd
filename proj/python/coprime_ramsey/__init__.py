"""Coprime Ramsey numbers: exact values, certificates and table builders.

Table functions return the same CSV text as the ``coprime-ramsey`` CLI.
"""

from ._core import (
    Witness,
    balanced_endpoint_decide,
    nth_prime,
    r_cop,
    r_cop_covering,
    skip2_witness,
    table,
    tables,
    verify,
)

__all__ = [
    "Witness",
    "balanced_endpoint_decide",
    "nth_prime",
    "r_cop",
    "r_cop_covering",
    "skip2_witness",
    "table",
    "tables",
    "verify",
]
