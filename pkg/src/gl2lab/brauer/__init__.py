from .groups import (GaloisRing, gl2_context, borel_context, torus_context,
                     TorusCharacter, twisted_reduction, field_generator)
from .modules import (GModule, CyclicPresentation, invariants,
                      coinvariants_basis, spin, express_in_basis,
                      mat_inverse)
from .constructions import Setting, label_dual, sym_power_matrix, kron

__all__ = [
    "GaloisRing", "gl2_context", "borel_context", "torus_context",
    "TorusCharacter", "twisted_reduction", "field_generator",
    "GModule", "CyclicPresentation", "invariants", "coinvariants_basis",
    "spin", "express_in_basis", "mat_inverse",
    "Setting", "label_dual", "sym_power_matrix", "kron",
]
