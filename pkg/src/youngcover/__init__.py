"""Covering Young diagrams with rectangles under row and column budgets."""
from .constructor import (
    build_partition_for,
    build_staircase_partition,
    capacity,
    feasible,
    min_balanced_budget,
    restrict_to_suffix,
)
from .diagram import (
    Cover,
    GenRect,
    LocalityProfile,
    Step,
    YoungDiagram,
    is_cover,
    is_partition,
    locality,
    make_diagram,
    rect,
    rect_in_diagram,
    render_ascii,
    staircase,
    steps,
)
from .oracle import FeasibilityReport, SearchCaps, Verdict, check_witness, exists_local_cover, min_balanced_budget_oracle
from .reduction import compress, expand, merge_reduce, roundtrip_check

__version__ = "0.1.0"
