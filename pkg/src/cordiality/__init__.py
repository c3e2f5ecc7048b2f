"""Cordiality deficiency measures for simple graphs.

d1(G) is the minimum of delta_v + delta_e over all 0/1 vertex labellings;
d2(G) is the minimum of delta_e over friendly labellings (delta_v <= 1).
A graph is cordial iff d2(G) <= 1. The package pairs an exact exhaustive
solver with closed-form values and constructive witness labellings for
trees, complete graphs, complete multipartite graphs, cycles, wheels and
fans, and speaks graph6 and a plain edge-list format.
"""

from .closed_forms import (
    ClosedFormValue,
    CompleteDerivation,
    JoinBounds,
    MultipartiteDerivation,
    closed_form_complete,
    closed_form_cycle,
    closed_form_fan,
    closed_form_multipartite,
    closed_form_tree,
    closed_form_wheel,
    construct_witness,
    join_upper_bounds,
)
from .engine import (
    SOLVER_CAP,
    ExactResult,
    SweepState,
    available_kernels,
    flip,
    is_cordial,
    is_uniformly_cordial,
    solve_exact,
    solve_naive,
)
from .errors import (
    CapacityError,
    DefectError,
    EdgeListError,
    FormatError,
    Graph6Error,
    ParameterError,
    StructureError,
)
from .formats import (
    ReportRecord,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
    write_records,
)
from .graphs import (
    FamilySpec,
    Graph,
    complete_spec,
    cycle_spec,
    fan_spec,
    generate,
    is_connected,
    join,
    join_spec,
    multipartite_spec,
    path_spec,
    pruefer_decode,
    random_tree,
    star_spec,
    wheel_spec,
)
from .labelling import Labelling, LabellingStats, stats
from .trees import tree_optimal_labelling

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ClosedFormValue",
    "CompleteDerivation",
    "DefectError",
    "EdgeListError",
    "ExactResult",
    "FamilySpec",
    "FormatError",
    "Graph",
    "Graph6Error",
    "JoinBounds",
    "Labelling",
    "LabellingStats",
    "MultipartiteDerivation",
    "ParameterError",
    "ReportRecord",
    "SOLVER_CAP",
    "StructureError",
    "SweepState",
    "available_kernels",
    "closed_form_complete",
    "closed_form_cycle",
    "closed_form_fan",
    "closed_form_multipartite",
    "closed_form_tree",
    "closed_form_wheel",
    "complete_spec",
    "construct_witness",
    "cycle_spec",
    "fan_spec",
    "flip",
    "generate",
    "is_connected",
    "is_cordial",
    "is_uniformly_cordial",
    "join",
    "join_spec",
    "join_upper_bounds",
    "multipartite_spec",
    "parse_edge_list",
    "parse_graph6",
    "path_spec",
    "pruefer_decode",
    "random_tree",
    "solve_exact",
    "solve_naive",
    "star_spec",
    "stats",
    "tree_optimal_labelling",
    "wheel_spec",
    "write_edge_list",
    "write_graph6",
    "write_records",
]
