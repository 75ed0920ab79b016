"""Free frontal implicative semilattice extensions of finite frontal Hilbert algebras."""

from hilbext.algebra import (
    FiniteHilbertAlgebra,
    FinitePoset,
    Homomorphism,
    Report,
    UnaryMap,
    check_axioms,
    check_homomorphism,
    enumerate_algebras,
    enumerate_homomorphisms,
    enumerate_posets,
    natural_order,
)
from hilbext.errors import (
    AxiomViolation,
    GuardExceeded,
    HilbextError,
    MalformedTableError,
    PreconditionError,
    SoundnessError,
)
from hilbext.extension import (
    Extension,
    build_extension,
    lift_hom,
    phi,
    universal_factor,
    up_implication,
)
from hilbext.filters import (
    SpectrumPoset,
    all_filters,
    generate_filter,
    is_irreducible,
    separate,
    spectrum,
)
from hilbext.frontal import (
    FrontalAlgebra,
    check_frontal,
    coderivative,
    extend_frontal,
    find_gabbay,
    find_gamma,
    find_successor,
    g_pi,
    gamma_pi,
    maximal_elements,
    poset_successor,
    s_pi,
    tau_pi,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteHilbertAlgebra",
    "FinitePoset",
    "Homomorphism",
    "Report",
    "UnaryMap",
    "check_axioms",
    "check_homomorphism",
    "enumerate_algebras",
    "enumerate_homomorphisms",
    "enumerate_posets",
    "natural_order",
    "AxiomViolation",
    "GuardExceeded",
    "HilbextError",
    "MalformedTableError",
    "PreconditionError",
    "SoundnessError",
    "Extension",
    "build_extension",
    "lift_hom",
    "phi",
    "universal_factor",
    "up_implication",
    "SpectrumPoset",
    "all_filters",
    "generate_filter",
    "is_irreducible",
    "separate",
    "spectrum",
    "FrontalAlgebra",
    "check_frontal",
    "coderivative",
    "extend_frontal",
    "find_gabbay",
    "find_gamma",
    "find_successor",
    "g_pi",
    "gamma_pi",
    "maximal_elements",
    "poset_successor",
    "s_pi",
    "tau_pi",
]
