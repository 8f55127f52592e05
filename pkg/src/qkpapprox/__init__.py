"""Approximate solver for the Quadratic Knapsack Problem.

Decomposes an instance into structured sub-instances solved via knapsack
FPTAS, degree-greedy selection and pluggable densest-k-subgraph backends,
then returns the best candidate re-evaluated on the original instance.
"""

from .classsolvers import (
    ClassOutcome,
    ReplicatedGraph,
    replicate,
    solve_class2,
    solve_class3,
    solve_class4,
    solve_class5,
)
from .decompose import SubInstance, decompose, subinstance_as_qkp
from .dks import (
    EXACT_BACKEND,
    GREEDY_BACKEND,
    DksBackend,
    UGraph,
    dks_exact,
    dks_greedy_peel,
    get_backend,
    solve_dks,
)
from .errors import CapacityError
from .generate import random_instance
from .instance import (
    QkpInstance,
    Solution,
    evaluate,
    instance_from_json_obj,
    instance_to_json_obj,
    is_feasible,
    load_instance,
    save_instance,
    validate,
)
from .knapsack import knapsack_exact, knapsack_fptas
from .oracle import exact_qkp
from .orchestrator import RunReport, SolveConfig, guaranteed_floor, solve
from .preprocess import PreparedInstance, bucket_costs, prepare, prune, round_profits

__version__ = "0.1.0"
