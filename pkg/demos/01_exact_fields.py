"""A tour of the exact arithmetic layer: prime fields, GF(p^k), rationals.

Run with:  python demos/01_exact_fields.py
"""

from quadrics import Field

# Prime fields are residues with exact modular arithmetic.
F5 = Field.prime(5)
two = F5.element(2)
print("In F_5:  2 + 4 =", two + 4, "   1/2 =", two.inv(), "   -2 =", -two)

# Squares mod 5 are {0, 1, 4}; sqrt returns the enumeration-first root.
print("sqrt(4) in F_5:", F5.element(4).sqrt())
print("sqrt(2) in F_5:", F5.element(2).sqrt(), "(2 is not a square mod 5)")

# Extension fields use a fixed monic irreducible modulus per (p, k).
F4 = Field.extension(2, 2)          # GF(4) = F_2[t] / (t^2 + t + 1)
g = F4.generator
print("\nIn GF(4):  g * g =", g * g, "  (t^2 reduces to t + 1)")
print("Elements in enumeration order:", [str(a) for a in F4.elements()])

# Characteristic 2 makes squaring a bijection: every element has a unique root.
for a in F4.elements():
    print(f"  sqrt({a}) = {a.sqrt()}")

# The rationals are exact too, carried as reduced fractions.
Q = Field.rationals()
print("\nIn Q:  1/2 + 1/3 =", Q.element(1) / 2 + Q.element(1) / 3)

# Serialization round-trips through strings.
a = F4.from_coeffs((1, 1))
print("\nGF(4) element", a, "parses back to", F4.parse_element(str(a)))
