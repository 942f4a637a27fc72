"""Exact super domination for finite simple graphs."""
from .estimator import SuperDominatingSet, SuperDominationFeatures
from .formulas import (
    BoundInterval,
    NecklaceContent,
    gamma_sp_formula,
    glue_bounds,
    hajos_bounds,
    ncorona_hypotheses,
    ncorona_trivial_upper,
    ncorona_value,
    necklace_count,
    nsp_formula,
)
from .generators import complete, complete_bipartite, cycle, friendship, generate, path, star
from .graph import (
    Graph,
    VertexSet,
    WitnessMap,
    classify_cycle,
    connected_components,
    is_dominating,
    is_super_dominating,
    neighborhood,
)
from .products import GlueSpec, HajosSpec, chain, corona, hajos_sum, neighbourhood_corona, r_glue
from .solver import (
    PartitionDecomposition,
    SizeGuardError,
    SolveResult,
    count_min_super_dom,
    domination_number,
    enumerate_min_super_dom,
    partition_decomposition,
    super_domination_number,
)

__version__ = "0.1.0"
