"""Split H4(F) along its block H2(F) frame and put it back together.

H4(F) is the 10-dimensional algebra of symmetric 4x4 matrices.  Viewing each
matrix as a 2x2 block matrix exhibits a copy of H2(F) inside it; the script
extracts the coordinate algebra S = Z + N with its bracket, checks the
bracket identities, twists by a square root of -1, rebuilds
H2(F) (x) S0 + Fk (x) S1, and confirms the explicit map back is an
isomorphism.

Run:  python demos/coordinatize_h4.py
"""

from h2jordan import (FieldSpec, decompose, h4f, is_jordan, peirce_decompose,
                      rescale_bracket, verify_bracket_identities)
from h2jordan.h2 import isomorphism_report, reconstruct, transport

F = FieldSpec.prime(13)
J = h4f(F)
e, h = J["e"], J["h"]
print(f"J = {J.name} over {F}, dim {J.dim}")
print(is_jordan(J).line())

pd = peirce_decompose(J, e)
print("Peirce dims of the block idempotent (1, 1/2, 0):", pd.dims)

result = decompose(J, e, h)
S = result.S
print(f"dim Z = {result.Z.dim}, dim N = {result.N.dim}  "
      f"(3*{result.Z.dim} + {result.N.dim} = {J.dim})")
print("the bracket is", "zero" if S.is_zero_bracket else "nonzero")
for line in verify_bracket_identities(S).lines():
    print("  raw     ", line)

eps = F.sqrt_minus_one()
R = rescale_bracket(S, eps)
print(f"twisting by eps = {F.format(eps)} (eps^2 = -1)")
print("  rescaled suite passes:", verify_bracket_identities(R).passed)

J2, f = reconstruct(R, result)
print(f"rebuilt algebra: dim {J2.dim}, {is_jordan(J2).line()}")
print(isomorphism_report(J, J2, f).line())
print("structure of J carried along f equals the rebuilt table:",
      transport(J, f, J2.basis_names).same_structure(J2))
