"""Tilting modules for quantum sl2 and dimensions of simple modules for
Temperley-Lieb, Jones, and related endomorphism algebras."""
from .algebra_dims import (
    AlgebraDimReport,
    bmw_dims,
    endo_dims,
    endo_semisimple,
    jones_simple_dims,
    tl_cell_dim,
    tl_simple_dims,
)
from .grothendieck import (
    LaurentCharacter,
    WeylVector,
    cg_product,
    expand_in_weyl,
    to_character,
    twisted_product,
    vpower_to_weyl,
    weyl_multiplicity,
    weyl_to_vpower,
)
from .tensor_power import (
    ContractViolation,
    MultiplicityGrid,
    fusion_grid,
    steinberg_column,
    tilt_tensor_v,
    tilting_grid,
    tilting_grid_linear,
    tilting_grid_recurrence,
    weyl_grid,
)
from .tilting_tables import (
    CharZeroRoot,
    Mixed,
    ModularQOne,
    Semisimple,
    TiltingTable,
    get_table,
    regime_from_flags,
)

__version__ = "0.1.0"
