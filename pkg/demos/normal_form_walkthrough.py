"""From a nondegenerate critical point to x_1^2 + ... + x_n^2, one truncation
order at a time, with a certificate that recomposes independently.
"""

from charpgeom.algebra.finitefield import FF
from charpgeom.algebra.multipoly import MultiPoly
from charpgeom.normalform import diagonalize_quadratic, normal_form

# ----------------------------------------------------------------------------
# Step 1 in isolation: normalizing a quadratic form.  The hyperbolic plane
# over F_5 needs square roots of 2 and -2, which only exist in F_25; the
# field enlargement is automatic and reported.
# ----------------------------------------------------------------------------
print("=" * 72)
fld = FF(5)
q = [[fld.zero, fld.one], [fld.one, fld.zero]]
diag = diagonalize_quadratic(q, fld)
print("diagonalizing [[0,1],[1,0]] over F_5:")
print(f"  extension degree used: {diag.extension_degree} "
      f"(field of order {diag.fld.order})")
print(f"  C^T Q C = identity re-verified: {diag.verify(q)}")

# ----------------------------------------------------------------------------
# The full normal form: f = x^2 + y^2 + x^2 y at order 4.  One correction
# step (y -> y - x^2/2) suffices, and recomposing at order 5 exposes the
# first uncancelled term, -1/4 x^4.
# ----------------------------------------------------------------------------
print("=" * 72)
x, y = MultiPoly.variables(fld, 2)
f = x ** 2 + y ** 2 + x ** 2 * y
res = normal_form(f, 4)
print(f"normal form of {f.format(['x', 'y'])} at order 4 over F_5:")
print(f"  a0 = {res.a0}")
for step in res.change.steps:
    print(f"  step: {step.describe()}")
print(f"  certificate jet: {res.certificate.to_poly().format(['x', 'y'])}")
print(f"  independent recomposition agrees: {res.verify(f)}")

# ----------------------------------------------------------------------------
# A denser example over F_3 at order 7, where the quadratic part needs the
# field enlarged and several correction degrees fire.
# ----------------------------------------------------------------------------
print("=" * 72)
f3 = FF(3)
a, b, c = MultiPoly.variables(f3, 3)
g = (a * a + b * c + c * c * 2 + a * b * b + c ** 4 + a * b * c * 2)
res3 = normal_form(g, 7)
print(f"normal form of {g.format(['x', 'y', 'z'])} at order 7 over F_3:")
print(f"  extension degree: {res3.extension_degree}")
print(f"  steps: {[s.describe() for s in res3.change.steps]}")
work = g if res3.extension_degree == 1 else g.map_coefficients(
    res3.fld, res3.embed)
print(f"  certificate equals target: {res3.certificate == res3.target}")
print(f"  independent recomposition agrees: {res3.verify(work)}")
