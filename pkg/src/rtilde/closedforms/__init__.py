"""Closed formulas for special families, checked against the general methods."""

from rtilde.closedforms.conjecture import ScanRecord, conjecture_scan, factor_modified_fibonacci
from rtilde.closedforms.fibonacci import (
    FibPath,
    FibTree,
    build_fib_tree,
    clr_degree,
    clr_words,
    pagliacci_rtilde,
    pagliacci_word,
    power_word_rtilde,
)
from rtilde.closedforms.heaps import (
    PointConfiguration,
    chain_stats,
    config_to_word,
    general_rtilde_e,
    heap_of,
    parse_configuration,
)
from rtilde.closedforms.ud import CaseTable, UDWord, is_ud_word, ud_rtilde

__all__ = [
    "CaseTable",
    "FibPath",
    "FibTree",
    "PointConfiguration",
    "ScanRecord",
    "UDWord",
    "build_fib_tree",
    "chain_stats",
    "clr_degree",
    "clr_words",
    "config_to_word",
    "conjecture_scan",
    "factor_modified_fibonacci",
    "general_rtilde_e",
    "heap_of",
    "is_ud_word",
    "pagliacci_rtilde",
    "pagliacci_word",
    "parse_configuration",
    "power_word_rtilde",
    "ud_rtilde",
]
