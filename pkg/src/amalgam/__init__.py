"""Exact workbench for finite commutative rings and their amalgamations.

Layers, bottom up:

* znlinalg  -- canonical linear algebra over Z/N (Howell normal form);
* rings     -- structure-constant rings, homs, basic constructors;
* modules   -- submodules, syzygies, minimal free resolutions;
* spectrum  -- nilradical, idempotents, locality, maximal ideals;
* amalgam   -- f(A)+J subrings, amalgamations A |><|^f J, duplications;
* checks    -- the executable verification harness;
* instances -- the shipped standard instance set;
* dsl / cli -- the declarative text format and command line front end.
"""

__version__ = "0.1.0"

from .znlinalg import (HowellBasis, ZnMatrix, howell, kernel, solve,
                       span_contains, span_equal, span_size)
from .rings import (FiniteRing, ModuleSpec, RingElement, RingHom, product,
                    trivial_extension, trunc_poly, verify_ring, zmod)
from .modules import (CokernelSpec, Ideal, Resolution, Submodule,
                      global_dimension_signature, ideal_span, is_projective,
                      minimal_generators, minimal_resolution, module_equal,
                      module_quotient_presentation, pd_report,
                      submodule_span, syzygy)
from .spectrum import (idempotents, is_field, is_local, is_regular,
                       maximal_ideals, nilradical, quotient_ring,
                       residue_field, units)
from .amalgam import AmalgamObjects, amalgamation, duplication, image_plus_J
from .instances import (standard_duplication, standard_idealization_tower,
                        standard_instances, standard_truncation)

__all__ = [
    "HowellBasis", "ZnMatrix", "howell", "kernel", "solve", "span_contains",
    "span_equal", "span_size",
    "FiniteRing", "ModuleSpec", "RingElement", "RingHom", "product",
    "trivial_extension", "trunc_poly", "verify_ring", "zmod",
    "CokernelSpec", "Ideal", "Resolution", "Submodule",
    "global_dimension_signature", "ideal_span", "is_projective",
    "minimal_generators", "minimal_resolution", "module_equal",
    "module_quotient_presentation", "pd_report", "submodule_span", "syzygy",
    "idempotents", "is_field", "is_local", "is_regular", "maximal_ideals",
    "nilradical", "quotient_ring", "residue_field", "units",
    "AmalgamObjects", "amalgamation", "duplication", "image_plus_J",
    "standard_duplication", "standard_idealization_tower",
    "standard_instances", "standard_truncation",
]
