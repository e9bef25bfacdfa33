"""Exact counts of quasiplatonic cyclic group actions."""

from ._core import (
    DEFAULT_ORACLE_BOUND,
    ConsistencyError,
    DomainError,
    OracleBoundError,
    corollary_constant,
    count_classes,
    dessin_pairs_oracle,
    euler_phi,
    factorize,
    genus,
    is_admissible,
    lloyd_series,
    qc_closed,
    qc_oracle,
    qc_prime_power,
    qc_sum,
    qc_unified,
    r_cyclic,
    range_table,
    report,
    signatures,
    t_value,
    tau1,
    tau2,
    verify,
)

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "ConsistencyError",
    "DomainError",
    "OracleBoundError",
    "corollary_constant",
    "count_classes",
    "dessin_pairs_oracle",
    "euler_phi",
    "factorize",
    "genus",
    "is_admissible",
    "lloyd_series",
    "qc_closed",
    "qc_oracle",
    "qc_prime_power",
    "qc_sum",
    "qc_unified",
    "r_cyclic",
    "range_table",
    "report",
    "signatures",
    "t_value",
    "tau1",
    "tau2",
    "verify",
]
