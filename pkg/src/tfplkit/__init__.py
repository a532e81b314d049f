"""Exact combinatorics of triangular fully packed loops, Knutson-Tao puzzles
and Littlewood-Richardson coefficients."""

from .bijection import (
    LocalRuleTable,
    RuleTableError,
    check_balanced_characterization,
    default_rule_table,
    derive_rule_tables,
    phi,
    phi_inverse,
    phi_oriented,
    validate_rule_table,
)
from .census import run_census
from .config import Config, load_config
from .dyck import (
    DyckWord,
    catalan,
    conjugate,
    degree,
    diagram_to_word,
    enumerate_dyck,
    hook_product,
    linkpattern_to_word,
    partitions,
    ssyt_count,
    ssyt_count_polynomial,
    ssyt_enumerate,
    word_to_diagram,
    word_to_linkpattern,
)
from .fpl import EnumerationBoundError, GridFPL, a_pi, a_pi_m, enumerate_fpl, fpl_census, link_pattern
from .identities import (
    IdentityReport,
    interpolate_api,
    leading_term_matches,
    verify_api_formula,
    verify_identity_c,
    verify_identity_t,
    verify_identity_tc,
)
from .lr import lr_coefficient, lr_tableaux, schur_product_expand
from .polynomial import Polynomial, interpolate
from .puzzles import Puzzle, enumerate_puzzles, puzzle_count, validate_puzzle
from .render import render_svg
from .tfpl import (
    OrientedTFPLConfig,
    TFPLConfig,
    canonical_orientation,
    classify_paths,
    enumerate_oriented_tfpl,
    enumerate_tfpl,
    reflect,
    tfpl_census,
    tfpl_count,
    tfpl_from_json,
)
from .verification import verify_all

__version__ = "0.1.0"
