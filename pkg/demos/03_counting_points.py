"""Counting points of the quadric sum(x_i y_i) = z(1 - z) over finite fields.

The quadric lives in two coordinate models glued by an exact change of
variables, and its point count obeys both a closed form and a recursion
coming from an open/closed cell decomposition.

Run with:  python demos/03_counting_points.py
"""

from quadrics import (
    Field,
    IntrinsicQuadricPoint,
    SplitSpace,
    count_closed_form,
    count_recursive,
    enumerate_quadric,
    from_ambient,
    stratify,
    to_ambient,
)

F3 = Field.prime(3)

# A point of the intrinsic model and its ambient avatar (q = 0, t = 1).
p = IntrinsicQuadricPoint.of(F3, [1], [1], 2)
a = to_ambient(p)
print("intrinsic (x, y, z) = ([1], [1], 2)  ->  ambient w =", a.w.to_strings())
print("round trip:", from_ambient(a) == p)

# Enumerate and compare with the closed form q^(2n) + q^n.
for n, q in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
    space = SplitSpace.pointed_even(Field.of_order(q), n)
    points = enumerate_quadric(space)
    print(f"n={n}, q={q}:  enumerated {len(points):4d}   closed form {count_closed_form(n, q):4d}"
          f"   recursion {count_recursive(n, q):4d}")

# The recursion reflects a cell decomposition: an open cell of size
# q^(2n-1)(q-1) where x_n is a unit, and q copies of the smaller quadric.
space = SplitSpace.pointed_even(F3, 1)
opens = closed = 0
for point in enumerate_quadric(space):
    tag = stratify(point)[0]
    opens += tag == "open_cell"
    closed += tag == "closed_cell"
print(f"\nn=1 over F_3: open cell {opens} = 3*2, closed cell {closed} = 3*|Q_0| = 3*2")
