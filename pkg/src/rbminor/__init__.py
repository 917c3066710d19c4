"""Red/Blue bipartite structure in edge-coloured graphs: certification,
extraction, minor-model correspondence, and the constructive pipelines
built on them."""

from .errors import (
    BudgetExhausted,
    FormulaUndefined,
    HostTooSmall,
    InstanceTooLarge,
    NotAModel,
    NotInLift,
    ParseError,
    PoolExhausted,
)
from .graphs import (
    BLUE,
    RED,
    Bipartition,
    ColoredGraph,
    Graph,
    OddCycle,
    enumerate_cycles,
    is_bipartite,
    subdivide_blue_once,
)
from .rb import (
    RBBipartition,
    ROddCertificate,
    extraction_stats,
    rb_add_vertex,
    rb_certify,
    rb_extract_half,
)
from .models import (
    AuxiliaryGraph,
    MinorModel,
    build_auxiliary,
    canonical_path,
    lift_odd_circuit,
    lift_subgraph,
    minimize_model,
    project_odd_cycle,
)
from .extract import (
    CompatiblePartition,
    ConnectorPath,
    PipelineReport,
    RBCliqueWitness,
    bipartite_minor_pipeline,
    build_projector,
    connect_pair,
    find_compatible_partition,
    greedy_compatible_partition,
    validate_pipeline_report,
)
from .topological import (
    TopologicalModel,
    rb_topological_clique,
    required_host_order,
    swap_colors_at,
    validate_topological_model,
)
from .oracles import (
    hadwiger_oracle,
    max_bipartite_hadwiger,
    max_rb_bipartite_oracle,
    tcl_oracle,
)
from .constructions import (
    BoundEvaluation,
    bce_probability_bound,
    bce_probability_bound_hp,
    bipartite_tk_min_order,
    build_gh,
    derive_seed,
    gh_max_bipartite_hadwiger,
    gh_model,
    random_coloring,
    random_graph,
    theorem_lb_experiment,
    topological_lb_construction,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "Graph",
    "ColoredGraph",
    "Bipartition",
    "OddCycle",
    "is_bipartite",
    "subdivide_blue_once",
    "enumerate_cycles",
    "RBBipartition",
    "ROddCertificate",
    "rb_certify",
    "rb_extract_half",
    "rb_add_vertex",
    "extraction_stats",
    "MinorModel",
    "AuxiliaryGraph",
    "minimize_model",
    "canonical_path",
    "build_auxiliary",
    "lift_subgraph",
    "lift_odd_circuit",
    "project_odd_cycle",
    "CompatiblePartition",
    "find_compatible_partition",
    "greedy_compatible_partition",
    "build_projector",
    "ConnectorPath",
    "RBCliqueWitness",
    "connect_pair",
    "PipelineReport",
    "bipartite_minor_pipeline",
    "validate_pipeline_report",
    "TopologicalModel",
    "rb_topological_clique",
    "validate_topological_model",
    "required_host_order",
    "swap_colors_at",
    "hadwiger_oracle",
    "tcl_oracle",
    "max_bipartite_hadwiger",
    "max_rb_bipartite_oracle",
    "random_graph",
    "random_coloring",
    "derive_seed",
    "build_gh",
    "gh_model",
    "gh_max_bipartite_hadwiger",
    "BoundEvaluation",
    "bce_probability_bound",
    "bce_probability_bound_hp",
    "theorem_lb_experiment",
    "bipartite_tk_min_order",
    "topological_lb_construction",
    "ParseError",
    "InstanceTooLarge",
    "NotAModel",
    "NotInLift",
    "BudgetExhausted",
    "PoolExhausted",
    "HostTooSmall",
    "FormulaUndefined",
]
