"""Shared corpus of H2-algebras used across the test modules."""

from h2jordan import constructions as cons


def h2_algebras(F):
    """(name, J) for every corpus algebra that carries an H2(F) frame."""
    return [
        ("h2f", cons.h2f(F)),
        ("m2plus", cons.m2_plus(F)[0]),
        ("h4f", cons.h4f(F)),
        ("h2_ff_exchange", cons.build_h2_matrix(cons.involutive("ff", "exchange", F))[0]),
        ("spin4", cons.spin_factor(F, 3)[0]),
        ("h2_m2_symplectic", cons.build_h2_matrix(cons.involutive("m2", "symplectic", F))[0]),
        ("h2_dual", cons.build_h2_matrix(cons.involutive("dual", "identity", F))[0]),
    ]


# expected (dim J, dim Z, dim N)
DIMS = {
    "h2f": (3, 1, 0),
    "m2plus": (4, 1, 1),
    "h4f": (10, 3, 1),
    "h2_ff_exchange": (4, 1, 1),
    "spin4": (4, 1, 1),
    "h2_m2_symplectic": (6, 1, 3),
    "h2_dual": (6, 2, 0),
}
