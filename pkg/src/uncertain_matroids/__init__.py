"""Minimum-weight bases of matroids whose element weights are only known to lie in given sets."""

from .coloring import Coloring, color_all, f_set, f_star_set, is_blue, is_red
from .errors import ContractError, InputError, MatroidError, UnsupportedInstanceError
from .matroid import (
    DualMatroid,
    ExplicitMatroid,
    GraphicMatroid,
    Matroid,
    MinorMatroid,
    UniformMatroid,
    components,
    contract_delete,
    cospan,
    dual,
    fundamental_circuit,
    greedy_min_basis,
    is_independent,
    span,
)
from .model import Area, Revelation, UncertaintyMatroid, bounds, enumerate_realizations, intersects_open, reveal
from .queries import (
    Neighborhood,
    WitnessStructure,
    compute_witness_structure,
    in_core,
    is_feasible,
    is_minimal_feasible,
    is_witness_set,
    min_cost_feasible_query,
    minimal_feasible_queries,
    mst01_min_queries,
    neighborhood,
    restricted_matroid,
)
from .uob import (
    CertainCore,
    UobLayering,
    certain_weighted_matroid,
    exists_uob,
    find_uob_regret,
    find_uob_structural,
    is_uob,
    uob_layering,
    uob_matroid_independent,
)

__version__ = "0.1.0"
