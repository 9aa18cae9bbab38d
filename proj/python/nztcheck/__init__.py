"""Single-pass instruction sequences over Boolean registers and n-ary OR checkers."""

from ._core import (
    CapExceeded,
    NztError,
    PreconditionError,
    Program,
    ProgramSemanticError,
    ProgramSyntaxError,
    always_one,
    brute_force_check,
    build_psi,
    check_good,
    check_shortest,
    check_very_good,
    chi,
    classify,
    decide,
    eliminate,
    execute,
    exhaustive_min_search,
    fix_register,
    gen_tstnz,
    gen_tstnz_prime,
    is_member_pc,
    is_member_pce,
    min_len,
    parse,
    satisfiable,
    symbolic_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
