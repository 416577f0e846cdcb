"""Exact computations with real simplicial hyperplane arrangements and their Deligne groupoids."""

from .arrangement import (
    Arrangement,
    Chamber,
    Hyperplane,
    canonicalize_hyperplane,
    enumerate_chambers,
    format_arrangement,
    generator,
    is_essential,
    is_simplicial,
    negate_id,
    opposite_chamber,
    parse_arrangement,
)
from .deligne import (
    DeligneNF,
    GroupoidWord,
    Verdict,
    deligne_nf,
    extend_atom,
    groupoid_equal,
    nf_validate,
    word_problem,
)
from .errors import (
    ArrangementError,
    ZeroNormal,
    DimensionMismatch,
    DuplicateHyperplane,
    UnknownGenerator,
    ParseError,
    ChamberNotFound,
    UnknownChamber,
    NotSimplicial,
    NotAWall,
    EndpointMismatch,
    EmptyPath,
    CapExceeded,
    NoGreedyAtom,
    WrongStart,
    InvalidSimple,
    RecursionMismatch,
)
from .paths import (
    Atom,
    PositivePath,
    WallSet,
    begin_chambers,
    begin_walls,
    begins_with,
    canonical_atom,
    complete_to_opposite,
    end_chambers,
    end_walls,
    ends_with,
    equivalence_class,
    equivalent,
    fraction_form,
    is_atom,
    minimal_paths,
    parse_path,
    target,
    trace,
)
from .shadow import (
    S0,
    DegreeReport,
    OrderedSkeleton,
    SimpleClass,
    classify_simples,
    degree_report,
    inverse_shift,
    orient,
    path_monotone,
    peel_compare,
    signature,
)
from .skeleton import Arrow, ChamberGraph, build_graph
