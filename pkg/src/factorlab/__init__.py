"""Fractional (g,f)-factors, deleted and critical-deleted graph properties,
and the degree conditions that guarantee them."""

from .deficiency import check_id_deleted as criterion_id_deleted
from .deficiency import check_lemma1, check_lemma4, inner_max, slack, witness_slack
from .errors import (
    FactorLabError,
    InsufficientEdgesError,
    InvalidArgumentError,
    InvalidStateError,
    ParseError,
    SizeLimitError,
)
from .experiments import ExperimentConfig, ExperimentReport, random_graph, random_vertex_funcs, run_batch
from .extremal import build_critical_sharpness, build_id_sharpness, critical_chains, id_chains
from .factors import (
    FractionalAssignment,
    VertexFuncs,
    factor_defect_witness,
    has_fractional_factor,
    verify_assignment,
)
from .fileio import parse_graph_file, serialize_graph
from .graph import INFINITY, Graph, build_complete, build_empty, degree_stats, independent_sets, join
from .properties import check_critical_deleted, check_deleted, check_id_deleted, is_critical_deleted, is_deleted, is_id_deleted
from .theorems import RESULTS, ScenarioParams, TheoremVerdict, check_hypotheses, verify_implication
from .witness import DeficiencyWitness

__all__ = [
    "DeficiencyWitness", "ExperimentConfig", "ExperimentReport", "FactorLabError", "FractionalAssignment",
    "Graph", "INFINITY", "InsufficientEdgesError", "InvalidArgumentError", "InvalidStateError", "ParseError",
    "RESULTS", "ScenarioParams", "SizeLimitError", "TheoremVerdict", "VertexFuncs",
    "build_complete", "build_critical_sharpness", "build_empty", "build_id_sharpness", "check_critical_deleted",
    "check_deleted", "check_hypotheses", "check_id_deleted", "check_lemma1", "check_lemma4", "critical_chains",
    "criterion_id_deleted", "degree_stats", "factor_defect_witness", "has_fractional_factor", "id_chains",
    "independent_sets", "inner_max", "is_critical_deleted", "is_deleted", "is_id_deleted", "join",
    "parse_graph_file", "random_graph", "random_vertex_funcs", "run_batch", "serialize_graph", "slack",
    "verify_assignment", "verify_implication", "witness_slack",
]
