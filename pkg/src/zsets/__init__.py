"""Z-related (homometric) subsets of the cyclic group Z_N."""

from .core import (
    IntervalContent,
    IntervalVector,
    PattersonPoly,
    PcSet,
    Transform,
    canonical_form,
    complement,
    format_set,
    interval_content,
    interval_function,
    interval_vector,
    invert,
    multiply,
    parse_set,
    patterson,
    transform,
    transpose,
)
from .errors import DomainError, InvariantError, ModulusMismatch, ZSetError
from .homometry import (
    HomometryTuple,
    HomometryVerdict,
    Kind,
    block_family,
    classify,
    dihedral_orbit,
    group_by_content,
    is_z_related,
)
from .constructors import (
    ZPair,
    complement_pair,
    empirical_family,
    interlaced_family,
    multiply_pair,
    multiply_replicate,
    replicate,
    rosenblatt,
)
from .enumeration import CensusTable, TupleCensus, build_table, census, enum_classes, first_tuple_of_multiplicity
from .permgroup import PermGroup, Permutation, apply_to_set, compose, inverse, parse_cycles
from .levi import (
    AutResult,
    ColoredGraph,
    LeviGraph,
    automorphisms,
    build_levi,
    homometric_blocks,
    verify_stabilizes,
    z_automorphism_group,
)

__version__ = "0.1.0"
