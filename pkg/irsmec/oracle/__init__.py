"""Independent brute-force re-solvers used for certification."""

from irsmec.oracle.brute import PowerGridResult, exhaustive_p1_oracle, power_grid_oracle_p3
from irsmec.oracle.inner import OracleResult, grid_oracle_p4, lp_oracle_p2

__all__ = [
    "OracleResult",
    "PowerGridResult",
    "exhaustive_p1_oracle",
    "grid_oracle_p4",
    "lp_oracle_p2",
    "power_grid_oracle_p3",
]
