from .branch_bound import enumerate_optima, solve_branch_bound
from .brute import enumerate_bruteforce, solve_bruteforce
from .common import NO_LIMITS, SearchLimits, SolverResult
from .transfer_dp import solve_transfer_dp, solve_transfer_dp_graph, transfer_dp_optimum

__all__ = [
    "SearchLimits", "SolverResult", "NO_LIMITS",
    "solve_bruteforce", "enumerate_bruteforce",
    "solve_branch_bound", "enumerate_optima",
    "solve_transfer_dp", "solve_transfer_dp_graph", "transfer_dp_optimum",
]
