"""From an associative algebra with involution to a Jordan algebra and back.

Start with M2(F) and the transpose.  Splitting into symmetric and skew parts
gives a graded algebra with the bracket (xy - yx)/4 on every slot; the
associative envelope x*y = xy + 2{x,y} recovers M2(F) exactly.  Hermitian
2x2 matrices over (M2(F), transpose) give back a 10-dimensional Jordan
algebra.  The exchange involution on F + F runs through the same steps and
lands on a 4-dimensional one.

Run:  python demos/envelope_and_hermitian.py
"""

from h2jordan import (FieldSpec, build_h2_matrix, cohn_envelope, involutive, is_jordan, m2,
                      split_involution, verify_bracket_identities)

F = FieldSpec.rational()

for base, star in (("m2", "transpose"), ("m2", "symplectic"), ("ff", "exchange")):
    inv = involutive(base, star, F)
    S = split_involution(inv, total=True)
    print(f"{inv.A.name} with {star}: S0 dim {S.even_dim}, S1 dim {S.odd_dim}")
    print("  bracket identities:", "PASS" if verify_bracket_identities(S) else "FAIL")
    env = cohn_envelope(S)
    print(f"  envelope: dim {env.A.dim}, associative, involution verified")
    if base == "m2" and star == "transpose":
        print("  envelope has the same structure constants as M2(F):",
              env.A.same_structure(m2(F)))
    J, frame = build_h2_matrix(inv)
    print(f"  hermitian 2x2 matrices: dim {J.dim}, {is_jordan(J).line()}")
