"""Peirce decomposition of a Jordan algebra relative to one idempotent."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, Element, Report
from .linalg import Subspace, kernel


class NotIdempotent(ValueError):
    pass


class NotJordan(ValueError):
    pass


def is_idempotent(A: Algebra, e: Element) -> bool:
    return bool(e) and e * e == e


@dataclass(frozen=True)
class PeirceDecomposition:
    e: Element
    J1: Subspace
    Jhalf: Subspace
    J0: Subspace

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.J1.dim, self.Jhalf.dim, self.J0.dim


def eigenspace(A: Algebra, y: Element, lam) -> Subspace:
    """{x : x*y = lam x} as the kernel of R_y - lam."""
    m = A.right_matrix(y)
    lam = A.field(lam)
    for i in range(A.dim):
        m[i][i] = m[i][i] - lam
    return kernel(m, A.field, A.dim)


def peirce_decompose(A: Algebra, e: Element) -> PeirceDecomposition:
    if not is_idempotent(A, e):
        raise NotIdempotent(f"{e} is not a nonzero idempotent")
    half = A.field.invert(A.field(2))
    J1 = eigenspace(A, e, 1)
    Jhalf = eigenspace(A, e, half)
    J0 = eigenspace(A, e, 0)
    total = J1 + Jhalf + J0
    if J1.dim + Jhalf.dim + J0.dim != A.dim or total.dim != A.dim:
        raise NotJordan(f"eigenspaces of R_e have dims {J1.dim}+{Jhalf.dim}+{J0.dim} "
                        f"and do not fill dimension {A.dim}")
    return PeirceDecomposition(e, J1, Jhalf, J0)


def check_peirce_rules(A: Algebra, pd: PeirceDecomposition) -> Report:
    """Verify the Peirce multiplication rules on basis vectors of the components."""
    zero = Subspace(A.field, A.dim)
    rules = [
        ("J1*J1<=J1", pd.J1, pd.J1, pd.J1),
        ("J0*J0<=J0", pd.J0, pd.J0, pd.J0),
        ("J1*J0=0", pd.J1, pd.J0, zero),
        ("J1*Jhalf<=Jhalf", pd.J1, pd.Jhalf, pd.Jhalf),
        ("J0*Jhalf<=Jhalf", pd.J0, pd.Jhalf, pd.Jhalf),
        ("Jhalf*Jhalf<=J1+J0", pd.Jhalf, pd.Jhalf, pd.J1 + pd.J0),
    ]
    count = 0
    for name, left, right, target in rules:
        for a in left:
            for b in right:
                count += 1
                p = A.mul_coords(a, b)
                if p not in target:
                    return Report("peirce-rules", False, (name,), A.element(p))
    return Report("peirce-rules", True, checked=count)
