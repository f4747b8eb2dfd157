"""Exact 2-rainbow domination numbers of circulant and generalized Petersen graphs."""
from .errors import RainbowError
from .formulas import (
    BoundResult, C14FormulaValue, construct_c14, gamma_r2_c13, gamma_r2_c14,
    gamma_r2_p5kk, gamma_r2_pn2, regular_lower_bound,
)
from .graphs import (
    Graph, closed_neighborhood, make_circulant, make_custom, make_generalized_petersen,
    open_neighborhood, parse_graph_spec, regular_degree, to_dot,
)
from .rdf import (
    BetaAudit, RainbowAssignment, ValidationReport, beta_audit, format_assignment,
    parse_assignment, rotate, swap_colors, validate_krdf, weight,
)

__version__ = "0.1.0"
