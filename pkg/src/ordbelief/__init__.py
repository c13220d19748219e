"""Belief functions on ordered frames of discernment."""

from .combine import (
    average,
    combine,
    conjunctive,
    dempster,
    jaccard_delta,
    mixed,
    ordered_disjunctive,
    ordered_dubois_prade,
    ordered_dubois_prade_pairwise,
    yager,
)
from .decision import (
    Criterion,
    conflict,
    conflict_multi,
    decide_distance,
    decide_pointwise,
    inclusion_degree,
)
from .documents import emit_mass_document, parse_mass_document
from .exceptions import *  # noqa: F403
from .frame import (
    EMPTY,
    OrderedElement,
    OrderedFrame,
    enumerate_ops,
    interval,
    ordered_union,
    ops_size,
    parse_element,
    singleton,
)
from .fuzzy import FuzzyParams, fuzzy_intersection_cardinality, membership
from .mass import MassFunction, bel, betp, categorical, make_mass, pl, vacuous
from .metric import (
    DissimilarityMatrix,
    ElementDistanceMode,
    belief_distance,
    dissimilarity_matrix,
    fuzzy_matrix,
    jaccard_matrix,
    ordered_matrix,
)

__version__ = "0.1.0"


def __getattr__(name):
    # keeps scikit-learn out of the import path of the CLI
    if name == "OrderedEvidenceFusion":
        from .estimator import OrderedEvidenceFusion

        return OrderedEvidenceFusion
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
