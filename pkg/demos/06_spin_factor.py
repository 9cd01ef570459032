"""The Jordan view: quadric points are exactly the rank-1 projections.

On the pointed even space, squaring is defined by x^2 = t(x) x - q(x) 1 and
the rank-1 projections are the x with x^2 = x and t(x) = 1.  At trace 1 the
squaring identity forces q(x) = 0, so these are precisely the quadric
points; the demo checks the set equality by exhaustive enumeration.

Run with:  python demos/06_spin_factor.py
"""

from quadrics import Field, SpinFactor, verify_projective_space

F3 = Field.prime(3)
sf = SpinFactor(F3, 1)

x0 = sf.space.basis_vector(3)
print("x_0 =", x0.to_strings())
print("  x_0^2 =", sf.jsquare(x0).to_strings(), " t(x_0) =", sf.trace(x0),
      "  -> rank-1 projection:", sf.is_rank_one_projection(x0))

one = sf.one
print("1 =", one.to_strings())
print("  1^2 =", sf.jsquare(one).to_strings(), " t(1) =", sf.trace(one),
      "  -> rank-1 projection:", sf.is_rank_one_projection(one))

# U_x y = B(x, y*) x - q(x) y* satisfies U_1 = id and U_x 1 = x^2.
y = sf.space.vector([1, 2, 0, 1])
print("\nU_1 y = y:", sf.u_operator(one, y) == y)
print("U_y 1 = y^2:", sf.u_operator(y, one) == sf.jsquare(y))

# The projections and the quadric coincide, field by field.
for n, q in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]:
    report = verify_projective_space(Field.of_order(q), n)
    print(f"n={n}, q={q}: idempotents {report['idempotents']:3d} "
          f"= quadric points {report['quadric_points']:3d}  equal: {report['equal']}")
