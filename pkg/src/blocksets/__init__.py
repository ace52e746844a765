"""Block-set placements over [m]^n, adversarial colourings, and desk-scale searches."""

from .words import (
    CapacityExceeded,
    InvalidSymbol,
    Profile,
    ProfileMismatch,
    Word,
    all_words,
    decode_word,
    encode_word,
    enumerate_with_profile,
    multinomial,
    profile,
)
from .blocks import (
    AmbientTooSmall,
    ArityMismatch,
    EmptyTemplate,
    EqualSize,
    InvalidPlacement,
    MixedSize,
    Placement,
    Template,
    blockset_points,
    enumerate_placements,
    make_placement,
    pattern_of,
    template_from_counts,
    template_from_word,
)
from .colourings import (
    BalancedFamily,
    Colouring,
    ConstantColouring,
    ContributionColouring,
    DomainError,
    InducedColouring,
    IndexOutOfRange,
    ModularCountColouring,
    NotSlotWord,
    ProductColouring,
    SubstitutionMismatch,
    TableColouring,
    balanced_words,
    contribution_colour,
    coordinate_sum_colour,
    flipped_block_word,
    induced_colour,
    product_colouring,
    random_table_colouring,
    slot_word_for,
    substitute,
    table_colouring,
)
from .search import (
    BudgetExceeded,
    ExtractionContradiction,
    HomogeneousSet,
    NotHomogeneous,
    SearchReport,
    SubsetColouring,
    extract_abccba,
    find_monochromatic,
    homogeneous_subset_search,
    induced_subset_colouring,
    verify_absence,
    witness_search,
)
from .lattice import (
    Box,
    CoordinateSumColouring,
    EncodingMismatch,
    GeneratorSet,
    InvalidGenerator,
    LatticeTableColouring,
    SupportOverlap,
    cube,
    l1_ball,
    l1_norm,
    search_generated_ball,
    search_l1_ap,
    word_to_lattice,
)
