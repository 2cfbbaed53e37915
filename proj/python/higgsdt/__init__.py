"""Exact DT invariants of twisted Higgs bundles."""

from ._core import (
    IntegralityError,
    idt,
    omega,
    oracle_p1,
    partitions,
    run_cli,
    specialize,
    stabilization,
    volume,
)

__all__ = [
    "IntegralityError",
    "idt",
    "omega",
    "oracle_p1",
    "partitions",
    "run_cli",
    "specialize",
    "stabilization",
    "volume",
]
