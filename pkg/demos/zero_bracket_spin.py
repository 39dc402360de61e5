"""The zero-bracket case: algebras of a symmetric bilinear form.

A spin factor F1 + V has an H2(F) frame e = (1 - u)/2, h = v for two
orthonormal vectors u, v.  Its extracted bracket vanishes identically.
Conversely the zero-bracket rebuild is again a bilinear-form algebra over
the associative algebra Z; the script exhibits the form and an explicit
isomorphism.  Over Q there is no square root of -1, which flips the sign of
the form on N; the rebuilt algebra is a different spin factor.

Run:  python demos/zero_bracket_spin.py
"""

from h2jordan import FieldSpec, build_tensor_algebra, decompose, is_associative, spin_factor
from h2jordan.constructions import (BilinearFormData, build_bilinear_form_algebra,
                                    dual_numbers, form_data_from_zero_bracket)
from h2jordan.h2 import isomorphism_report

F = FieldSpec.rational()
examples = {
    "spin factor, dim V = 4": spin_factor(F, 4),
    "free module A^3 over A = F[t]/t^2": build_bilinear_form_algebra(
        BilinearFormData.free(dual_numbers(F), 3)),
}
for title, (J, frame) in examples.items():
    r = decompose(J, frame.e, frame.h)
    print(f"{title}: dim J = {J.dim}, dim Z = {r.Z.dim}, dim N = {r.N.dim}")
    print("  bracket identically zero:", r.S.is_zero_bracket)
    print("  Z associative:", is_associative(r.S.even_algebra()).passed)
    T = build_tensor_algebra(r.S)
    data, L = form_data_from_zero_bracket(r.S)
    B, bframe = build_bilinear_form_algebra(data)
    print(f"  rebuilt tensor algebra (dim {T.dim}) vs form algebra over Z (dim {B.dim}):",
          isomorphism_report(B, T, L).line())
    print("  form on N picks up a sign:", [F.format(c) for c in data.gram[(2 * r.Z.dim,
                                                                            2 * r.Z.dim)]]
          if r.N.dim else "N = 0")
