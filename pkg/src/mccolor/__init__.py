"""Vertex 2- and 3-colorings with small monochromatic components on
maximal outerplanar graphs and complete planar 3-trees."""

from .errors import (
    BudgetExhaustedError,
    InvalidInputError,
    InvalidParameterError,
    MccError,
    PreconditionError,
    RecognitionError,
)
from .generators import (
    gen_complete_3tree,
    gen_double_wheel,
    gen_outerpath,
    gen_random_mop,
    gen_snowflake,
    gen_wheel,
)
from .graph import Coloring, Graph, MccReport, max_degree, monochromatic_components, validate_coloring
from .oracle import OracleResult, exact_mcc, exact_mcc_decision
from .outerplanar import build_weak_dual, solve_mcc2
from .schemes import SchemeResult, color_outerpath, color_snowflake, color_wheel
from .tree3 import (
    color_3tree_2colors,
    color_3tree_3colors,
    extract_monochromatic_path,
    extract_outer_wheel,
    plan_levels,
)

__version__ = "0.1.0"
