"""Reference implementations used to check results."""

from approx_veb.oracles.graphs import oracle_mst_weight, oracle_sssp, to_networkx
from approx_veb.oracles.hull import (
    diameter,
    distance_to_polygon,
    oracle_hull,
    point_in_polygon,
)
from approx_veb.oracles.multiset import OracleMultiset

__all__ = [
    "OracleMultiset",
    "diameter",
    "distance_to_polygon",
    "oracle_hull",
    "oracle_mst_weight",
    "oracle_sssp",
    "point_in_polygon",
    "to_networkx",
]
