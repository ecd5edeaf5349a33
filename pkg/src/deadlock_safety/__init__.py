"""Deadlock safety for store-and-forward networks with finite buffers.

Decide whether a routing state can be fully delivered or is bound to
deadlock, find strong and weak deadlock sets, build freeing plans, and
settle small cases exactly by exhaustive search.
"""

from .decide import (
    Justification,
    NotATree,
    Outcome,
    Verdict,
    decide,
    is_leaf_wise_tree,
    is_wise,
    satisfies_relaxed_wise,
)
from .followers import (
    DeadlockSet,
    FollowerDigraph,
    Kind,
    Strength,
    build_follower_digraph,
    find_deadlock_set,
    free_vertices,
    is_deadlock_set,
    transitive_closure,
    wise_follower_of,
)
from .generator import GenerationInfeasible, GeneratorConfig, Topology, generate_instance
from .instance import (
    InstanceDocument,
    InstanceSyntaxError,
    ValidationError,
    format_plan,
    load_fixture,
    parse_document,
    parse_instance,
    parse_plan,
    serialize,
)
from .model import (
    CapacityExceeded,
    EdgeMissing,
    InfeasibleMove,
    InfeasibleMoveAt,
    ModelError,
    Move,
    MovePlan,
    Network,
    NonSimpleRoute,
    Route,
    RouteStartMismatch,
    State,
    ZeroLengthRoute,
    apply_move,
    apply_plan,
    feasible_moves,
    follower_of,
    potential,
    validate,
)
from .oracle import Limits, OracleOutcome, OracleResult, oracle_decide, search, verify_plan
from .planner import (
    NoSafeStep,
    PreconditionViolated,
    WiseAdvance,
    WiseFollowerSaturated,
    expand_wise_advance,
    freeing_plan,
    select_safe_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
