"""Two-color partition identities: enumeration, q-series and combinatorial maps."""

from .core import (
    BLUE,
    EMPTY,
    GREEN,
    Color,
    ColoredPartition,
    EnumerationLimitError,
    Family,
    Overpartition,
    Part,
    PartitionStats,
    canonicalize,
    count,
    counting_function,
    enumerate_family,
    is_triangular,
    member,
    stats,
)
from .maps import (
    FixedStaircase,
    MapDomainError,
    ModularDiagram,
    Moved,
    from_modular_diagram,
    from_overpartition,
    modular4_transform,
    pair_merge,
    pair_split,
    paint_colors,
    phi,
    strip_colors,
    theta,
    to_modular_diagram,
    to_overpartition,
)
from .qseries import GfId, PochhammerFactor, TruncatedSeries, family_gf, series_from_factors
from .verify import IdentityId, MapId, Mode, check_identity, check_map, cross_check_gf, full_suite

__version__ = "0.1.0"
