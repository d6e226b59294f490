"""Rate model: TDMA and SIC-NOMA rates, NOMA priority."""

from irsmec.rates.model import (
    ORDERS,
    RadioParams,
    RateTuple,
    UserPair,
    dbm_to_watts,
    noma_priority,
    noma_rates,
    tdma_rate,
)

__all__ = [
    "ORDERS",
    "RadioParams",
    "RateTuple",
    "UserPair",
    "dbm_to_watts",
    "noma_priority",
    "noma_rates",
    "tdma_rate",
]
