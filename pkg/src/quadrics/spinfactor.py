"""The quadratic Jordan view of the pointed even space: squaring through the
degree-2 identity, the U operator, and rank-1 projections.

On (V, q, 1) with trace t(x) = B(x, 1) and conjugation x* = t(x) 1 - x:

    x^2   = t(x) x - q(x) 1
    U_x y = B(x, y*) x - q(x) y*

These satisfy U_1 = id and U_x 1 = x^2.  The rank-1 projections, the x with
x^2 = x and t(x) = 1, are exactly the points of the quadric: the squaring
identity at t(x) = 1 reads x - q(x) 1 = x, forcing q(x) = 0.
"""

from itertools import product

from .errors import TooLarge
from .quadform import SplitSpace, Vector
from .quadric import is_on_quadric

ENUM_GUARD = 10 ** 8


class SpinFactor:
    """The Jordan structure carried by the pointed even split space."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.space = SplitSpace.pointed_even(field, n)
        self.one = self.space.one_vector()

    def trace(self, x):
        return self.space.trace(x)

    def conjugate(self, x):
        """x* = t(x) 1 - x; an involution fixing the trace."""
        self.space._check_dim(x)
        t = self.space.raw_trace(x.raws)
        f = self.field
        return Vector(f, (f.raw_sub(f.raw_mul(t, o), a)
                          for o, a in zip(self.one.raws, x.raws)))

    def jsquare(self, x):
        """x^2 = t(x) x - q(x) 1."""
        self.space._check_dim(x)
        f = self.field
        t = self.space.raw_trace(x.raws)
        q = self.space.raw_q(x.raws)
        return Vector(f, (f.raw_sub(f.raw_mul(t, a), f.raw_mul(q, o))
                          for a, o in zip(x.raws, self.one.raws)))

    def u_operator(self, x, y):
        """U_x y = B(x, y*) x - q(x) y*."""
        self.space._check_dim(x)
        self.space._check_dim(y)
        f = self.field
        y_conj = self.conjugate(y)
        b = self.space.raw_b(x.raws, y_conj.raws)
        q = self.space.raw_q(x.raws)
        return Vector(f, (f.raw_sub(f.raw_mul(b, a), f.raw_mul(q, c))
                          for a, c in zip(x.raws, y_conj.raws)))

    def is_rank_one_projection(self, x):
        """x^2 = x together with t(x) = 1."""
        self.space._check_dim(x)
        return (self.jsquare(x) == x
                and self.space.raw_trace(x.raws) == self.field.one.rep)

    def __repr__(self):
        return f"SpinFactor(n={self.n}, over {self.field})"


def verify_projective_space(field, n, force=False):
    """Exhaustively compare {x : x^2 = x, t(x) = 1} with the quadric point
    set over a finite field."""
    sf = SpinFactor(field, n)
    space = sf.space
    if not field.is_finite:
        raise TooLarge("the projective-space check enumerates a finite field")
    if not force and field.q ** space.dim > ENUM_GUARD:
        raise TooLarge(f"{field.q}^{space.dim} vectors exceeds the guard")
    idempotents = 0
    quadric_points = 0
    agree = True
    for raws in product(range(field.q), repeat=space.dim):
        v = Vector(field, raws)
        is_idem = sf.is_rank_one_projection(v)
        is_point = is_on_quadric(space, v)
        idempotents += is_idem
        quadric_points += is_point
        agree = agree and (is_idem == is_point)
    return {
        "check": "spin_projective",
        "n": n,
        "field": str(field),
        "idempotents": idempotents,
        "quadric_points": quadric_points,
        "equal": agree,
        "pass": agree,
    }
