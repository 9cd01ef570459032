"""The smooth affine quadric sum(x_i y_i) = z(1 - z) in two coordinate models.

Intrinsic model: triples (x, y, z) with x, y of length n satisfying the
defining equation.  Ambient model: vectors w of length 2n+2 in the pointed
even split space cut out by q(w) = 0 and t(w) = 1.  The change of
coordinates w = (x_1..x_n, 1-z, -y_1..-y_n, z) identifies the two models
over every ring: q(w) = z(1-z) - sum(x_i y_i) and t(w) = 1 identically.
"""

from itertools import product

from .errors import (
    DimensionMismatch,
    InfiniteField,
    InvalidPrimePower,
    InvariantViolation,
    TooLarge,
)
from .fields import FieldElement, is_prime_power
from .quadform import SplitSpace, Vector

ENUM_GUARD = 10 ** 8


class IntrinsicQuadricPoint:
    """A solution (x, y, z) of sum(x_i y_i) = z(1 - z)."""

    __slots__ = ("n", "x", "y", "z")

    def __init__(self, x, y, z):
        if len(x) != len(y):
            raise DimensionMismatch(f"|x| = {len(x)}, |y| = {len(y)}")
        object.__setattr__(self, "n", len(x))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        f = x.field
        lhs = 0
        for a, b in zip(x.raws, y.raws):
            lhs = f.raw_add(lhs, f.raw_mul(a, b))
        rhs = f.raw_mul(z.rep, f.raw_sub(1, z.rep))
        if lhs != rhs:
            raise InvariantViolation("sum(x_i y_i) != z(1 - z)")

    def __setattr__(self, name, value):
        raise AttributeError("IntrinsicQuadricPoint is immutable")

    @property
    def field(self):
        return self.x.field

    @classmethod
    def of(cls, field, x_vals, y_vals, z_val):
        return cls(Vector.of(field, x_vals), Vector.of(field, y_vals),
                   field.element(z_val))

    def __eq__(self, other):
        return (isinstance(other, IntrinsicQuadricPoint) and other.x == self.x
                and other.y == self.y and other.z == self.z)

    def __hash__(self):
        return hash((self.x, self.y, self.z))

    def __repr__(self):
        return (f"IntrinsicQuadricPoint(x={self.x.to_strings()}, "
                f"y={self.y.to_strings()}, z={self.z})")


class AmbientQuadricPoint:
    """A vector of the pointed even space with q = 0 and t = 1."""

    __slots__ = ("n", "w", "space")

    def __init__(self, space, w):
        if space.shape != "pointed_even":
            raise InvariantViolation("ambient points live in the pointed even space")
        space._check_dim(w)
        if space.raw_q(w.raws) != 0:
            raise InvariantViolation("q(w) != 0")
        one = space.field.one.rep
        if space.raw_trace(w.raws) != one:
            raise InvariantViolation("t(w) != 1")
        object.__setattr__(self, "n", space.n)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "space", space)

    def __setattr__(self, name, value):
        raise AttributeError("AmbientQuadricPoint is immutable")

    @property
    def field(self):
        return self.w.field

    def __eq__(self, other):
        return isinstance(other, AmbientQuadricPoint) and other.w == self.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f"AmbientQuadricPoint({self.w.to_strings()})"


def to_ambient(p):
    """w = (x_1..x_n, 1-z, -y_1..-y_n, z); inverse of from_ambient."""
    f = p.field
    space = SplitSpace.pointed_even(f, p.n)
    neg = f.raw_neg
    raws = (p.x.raws + (f.raw_sub(1, p.z.rep),)
            + tuple(neg(b) for b in p.y.raws) + (p.z.rep,))
    return AmbientQuadricPoint(space, Vector(f, raws))


def from_ambient(a):
    """x_i = w_i, y_i = -w_{n+1+i}, z = w_{2n+2}; inverse of to_ambient."""
    f = a.field
    n = a.n
    r = a.w.raws
    neg = f.raw_neg
    return IntrinsicQuadricPoint(
        Vector(f, r[:n]),
        Vector(f, (neg(b) for b in r[n + 1: 2 * n + 1])),
        FieldElement(f, r[2 * n + 1]),
    )


def is_on_quadric(space, v):
    """True iff q(v) = 0 and t(v) = 1."""
    space._check_dim(v)
    return (space.raw_q(v.raws) == 0
            and space.raw_trace(v.raws) == space.field.one.rep)


def base_point(space):
    """The point e_{2n+2}: all coordinates zero except the last, which is 1."""
    return AmbientQuadricPoint(space, space.basis_vector(space.dim - 1))


def enumerate_quadric(space, force=False):
    """All points over a finite field, in deterministic order.

    Enumerates the intrinsic model: for each (x, z) in lexicographic order
    the solutions y of sum(x_i y_i) = z(1-z) form an affine subspace that is
    swept directly, so the cost is proportional to q^(2n) rather than
    q^(2n+2).
    """
    f = space.field
    if not f.is_finite:
        raise InfiniteField("cannot enumerate points over the rationals")
    n = space.n
    if not force and f.q ** (2 * n + 1) > ENUM_GUARD:
        raise TooLarge(f"{f.q}^{2 * n + 1} points exceeds the enumeration guard")
    points = []
    rng = range(f.q)
    for x_raws in product(rng, repeat=n):
        pivot = next((i for i in reversed(range(n)) if x_raws[i]), None)
        for z in rng:
            rhs = f.raw_mul(z, f.raw_sub(1, z))
            if pivot is None:
                if rhs != 0:
                    continue
                y_candidates = product(rng, repeat=n)
            else:
                y_candidates = _hyperplane_solutions(f, x_raws, pivot, rhs, n)
            for y_raws in y_candidates:
                p = IntrinsicQuadricPoint(Vector(f, x_raws), Vector(f, y_raws),
                                          FieldElement(f, z))
                points.append(to_ambient(p))
    return points


def _hyperplane_solutions(f, x_raws, pivot, rhs, n):
    """Solutions y of sum(x_i y_i) = rhs given x_pivot != 0, free y elsewhere."""
    rng = range(f.q)
    free = [i for i in range(n) if i != pivot]
    inv_pivot = f.raw_inv(x_raws[pivot])
    for free_vals in product(rng, repeat=len(free)):
        acc = rhs
        for i, v in zip(free, free_vals):
            acc = f.raw_sub(acc, f.raw_mul(x_raws[i], v))
        y = list(free_vals[:pivot]) + [f.raw_mul(inv_pivot, acc)] + list(free_vals[pivot:])
        yield tuple(y)


def count_closed_form(n, q):
    """q^(2n) + q^n; the n = 0 quadric is two points."""
    _check_count_args(n, q)
    return q ** (2 * n) + q ** n


def count_recursive(n, q):
    """q^(2n-1)(q-1) + q * count(n-1), grounded at count(0) = 2."""
    _check_count_args(n, q)
    total = 2
    for m in range(1, n + 1):
        total = q ** (2 * m - 1) * (q - 1) + q * total
    return total


def _check_count_args(n, q):
    if n < 0:
        raise InvalidPrimePower(f"n = {n} must be nonnegative")
    if is_prime_power(q) is None:
        raise InvalidPrimePower(f"{q} is not a prime power")


def stratify(point):
    """Locate a point in the open cell A^(2n-1) x G_m (x_n != 0) or the
    closed cell Q_(2n-2) x A^1 (x_n = 0), returning the cell coordinates.

    Open cell: ("open_cell", (x_1..x_{n-1}, y_1..y_{n-1}, z), x_n).
    Closed cell: ("closed_cell", (x_<n, y_<n, z), y_n).
    """
    p = from_ambient(point)
    n = p.n
    x, y, z = p.x, p.y, p.z
    if x.raws[n - 1]:
        affine = x.coords[:n - 1] + y.coords[:n - 1] + (z,)
        return "open_cell", affine, x[n - 1]
    lower = (Vector(x.field, x.raws[:n - 1]), Vector(y.field, y.raws[:n - 1]), z)
    return "closed_cell", lower, y[n - 1]


def count_report(n, field=None, q=None, force=False):
    """Counting record used by the command line interface."""
    if field is not None:
        q = field.q
    closed = count_closed_form(n, q)
    rec = count_recursive(n, q)
    report = {"n": n, "field": str(field) if field is not None else str(q),
              "closed_form": closed, "recursive": rec}
    if field is not None and field.is_finite and n >= 1:
        space = SplitSpace.pointed_even(field, n)
        points = enumerate_quadric(space, force=force)
        opens = sum(1 for pt in points if stratify(pt)[0] == "open_cell")
        report["count"] = len(points)
        report["strata"] = {"open": opens, "closed": len(points) - opens}
        report["match"] = (len(points) == closed == rec)
    else:
        report["match"] = (closed == rec)
    return report
