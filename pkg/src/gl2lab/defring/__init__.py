from .precision import Tail, PrecisionExpr, NMIN
from .tables import TABLES, table4, table5
from .verifier import (height_ideal, monodromy_generators,
                       derive_I_generators, change_of_vars_check,
                       multitype_coprime, p_in_q_intersection,
                       elkik_identity, run_table_suite, TableError,
                       CheckResult)

__all__ = [
    "Tail", "PrecisionExpr", "NMIN", "TABLES", "table4", "table5",
    "height_ideal", "monodromy_generators", "derive_I_generators",
    "change_of_vars_check", "multitype_coprime", "p_in_q_intersection",
    "elkik_identity", "run_table_suite", "TableError", "CheckResult",
]
