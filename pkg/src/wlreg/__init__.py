"""Weisfeiler-Leman refinement, rooted pattern counting and treewidth for
checking implicit regularity of strongly regular graphs and association schemes."""

from .counting import (
    CountingError,
    ProperPartition,
    RootedHost,
    aut_size,
    hom_count,
    inj_hom_count,
    proper_quotients,
    quotient,
    rooted_counts,
    sub_count,
)
from .graph import (
    Graph,
    Graph6Error,
    RootedPattern,
    complement,
    disjoint_union,
    generate,
    is_strongly_regular,
    parse_graph6,
    write_graph6,
)
from .patterns import PatternSpec, parse_pattern
from .report import Check, Report
from .suites import run_suite
from .width import WidthResult, htw, rooted_treewidth, treewidth
from .wl import (
    EdgeColoring,
    TupleColoring,
    coherent_closure,
    constituents,
    is_association_scheme,
    is_one_half_regular,
    tuple_color,
    wl2_stable,
    wlk_equivalent,
    wlk_stable,
)

__version__ = "0.1.0"
