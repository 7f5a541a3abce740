"""Generic extensions of semisimple invariant subspaces of nilpotent operators."""

from .genext import candidate_filter, extension_witness, generator_word, star, star_all, star_power
from .homs import end_dim, hom_dim, orbit_dim, orbit_dim_formula, orbit_dim_via_end
from .objects import (
    ZERO,
    Picket,
    S1Object,
    StripError,
    enumerate_s1,
    enumerate_up_to,
    format_object,
    format_pickets,
    from_pickets,
    make_object,
    parse_object,
    picket,
    render_tableau,
    to_pickets,
)
from .oracle import canonical_rep, classify, enumerate_extensions, verify_generic
from .orders import covers, deg_leq, dom_leq, export_hasse, hom_leq
from .partitions import Partition, add, conjugate, length, n_stat, nat_leq, union

__version__ = "0.1.0"
