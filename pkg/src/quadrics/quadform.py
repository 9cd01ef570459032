"""Split quadratic spaces, reflections, similitudes, and the Dickson invariant.

Three shapes of split space over a field F:

    even(n):          dim 2n,   q(x) = sum_{i<=n} x_i x_{n+i}
    odd(n):           dim 2n+1, q(x) = sum_{i<=n} x_i x_{n+i} + x_{2n+1}^2
    pointed_even(n):  dim 2n+2, q(x) = sum_{i<=n+1} x_i x_{n+1+i}

The pointed even space carries the distinguished vector 1 = e_{n+1} + e_{2n+2}
with q(1) = 1 and the trace form t(x) = B(x, 1) = x_{n+1} + x_{2n+2}.
"""

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NonUnitNorm,
    NotAnIsometry,
    OddDimension,
    SingularMatrix,
    WrongShape,
)
from .fields import FieldElement

SHAPES = ("even", "odd", "pointed_even")


class Vector:
    """Immutable coordinate vector over a Field, stored as packed raw values."""

    __slots__ = ("field", "raws")

    def __init__(self, field, raws):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raws", tuple(raws))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def of(cls, field, values):
        return cls(field, (field.element(v).rep for v in values))

    @property
    def coords(self):
        return tuple(FieldElement(self.field, r) for r in self.raws)

    def __len__(self):
        return len(self.raws)

    def __getitem__(self, i):
        return FieldElement(self.field, self.raws[i])

    def __add__(self, other):
        self._check(other)
        add = self.field.raw_add
        return Vector(self.field, (add(a, b) for a, b in zip(self.raws, other.raws)))

    def __sub__(self, other):
        self._check(other)
        sub = self.field.raw_sub
        return Vector(self.field, (sub(a, b) for a, b in zip(self.raws, other.raws)))

    def __neg__(self):
        neg = self.field.raw_neg
        return Vector(self.field, (neg(a) for a in self.raws))

    def scale(self, c):
        c = self.field.element(c).rep
        mul = self.field.raw_mul
        return Vector(self.field, (mul(c, a) for a in self.raws))

    def __rmul__(self, c):
        return self.scale(c)

    def _check(self, other):
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if len(other.raws) != len(self.raws):
            raise DimensionMismatch(f"{len(self.raws)} vs {len(other.raws)}")

    @property
    def is_zero(self):
        return not any(self.raws)

    def to_strings(self):
        return [str(c) for c in self.coords]

    def __eq__(self, other):
        return (isinstance(other, Vector) and other.field == self.field
                and other.raws == self.raws)

    def __hash__(self):
        return hash((self.field.key, self.raws))

    def __repr__(self):
        return f"Vector({', '.join(self.to_strings())})"


class SplitSpace:
    """A split quadratic space of one of the three shapes above."""

    __slots__ = ("field", "shape", "n", "dim")

    def __init__(self, field, shape, n):
        if shape not in SHAPES:
            raise WrongShape(f"unknown shape {shape!r}")
        if n < 1:
            raise WrongShape("n must be at least 1")
        self.field = field
        self.shape = shape
        self.n = n
        self.dim = {"even": 2 * n, "odd": 2 * n + 1, "pointed_even": 2 * n + 2}[shape]

    @classmethod
    def even(cls, field, n):
        return cls(field, "even", n)

    @classmethod
    def odd(cls, field, n):
        return cls(field, "odd", n)

    @classmethod
    def pointed_even(cls, field, n):
        return cls(field, "pointed_even", n)

    # -- vectors -----------------------------------------------------------

    def vector(self, values):
        v = Vector.of(self.field, values)
        self._check_dim(v)
        return v

    def zero_vector(self):
        return Vector(self.field, (0,) * self.dim) if self.field.is_finite else \
            Vector.of(self.field, [0] * self.dim)

    def basis_vector(self, i):
        """e_{i+1} in 0-based indexing."""
        vals = [0] * self.dim
        vals[i] = 1
        return Vector.of(self.field, vals)

    def one_vector(self):
        """The distinguished vector with q = 1 for this shape."""
        vals = [0] * self.dim
        n = self.n
        if self.shape == "even":
            vals[n - 1] = 1
            vals[2 * n - 1] = 1
        elif self.shape == "odd":
            vals[2 * n] = 1
        else:
            vals[n] = 1
            vals[2 * n + 1] = 1
        return Vector.of(self.field, vals)

    def enumerate_vectors(self):
        """All vectors in lexicographic order (first coordinate slowest)."""
        from .errors import InfiniteField
        if not self.field.is_finite:
            raise InfiniteField("cannot enumerate vectors over the rationals")
        from itertools import product
        for raws in product(range(self.field.q), repeat=self.dim):
            yield Vector(self.field, raws)

    def _check_dim(self, v):
        if v.field != self.field:
            raise FieldMismatch(f"{self.field} vs {v.field}")
        if len(v.raws) != self.dim:
            raise DimensionMismatch(f"space dim {self.dim}, vector length {len(v.raws)}")

    # -- the form, its polarization, and the trace -------------------------

    def raw_q(self, raws):
        f = self.field
        mul, add = f.raw_mul, f.raw_add
        n = self.n
        if self.shape == "even":
            pairs = ((i, n + i) for i in range(n))
        elif self.shape == "odd":
            pairs = ((i, n + i) for i in range(n))
        else:
            pairs = ((i, n + 1 + i) for i in range(n + 1))
        total = 0
        for i, j in pairs:
            total = add(total, mul(raws[i], raws[j]))
        if self.shape == "odd":
            total = add(total, mul(raws[2 * n], raws[2 * n]))
        return total

    def raw_b(self, u, w):
        f = self.field
        mul, add = f.raw_mul, f.raw_add
        n = self.n
        if self.shape == "pointed_even":
            pairs = [(i, n + 1 + i) for i in range(n + 1)]
        else:
            pairs = [(i, n + i) for i in range(n)]
        total = 0
        for i, j in pairs:
            total = add(total, add(mul(u[i], w[j]), mul(u[j], w[i])))
        if self.shape == "odd":
            two_uw = mul(u[2 * n], w[2 * n])
            total = add(total, add(two_uw, two_uw))
        return total

    def eval_q(self, v):
        self._check_dim(v)
        return FieldElement(self.field, self.raw_q(v.raws))

    def eval_b(self, v, w):
        self._check_dim(v)
        self._check_dim(w)
        return FieldElement(self.field, self.raw_b(v.raws, w.raws))

    def trace(self, v):
        """t(v) = B(v, 1) = v_{n+1} + v_{2n+2}; pointed even shape only."""
        if self.shape != "pointed_even":
            raise WrongShape("trace is defined on the pointed even space")
        self._check_dim(v)
        return FieldElement(self.field, self.raw_trace(v.raws))

    def raw_trace(self, raws):
        return self.field.raw_add(raws[self.n], raws[2 * self.n + 1])

    def __eq__(self, other):
        return (isinstance(other, SplitSpace) and other.field == self.field
                and other.shape == self.shape and other.n == self.n)

    def __hash__(self):
        return hash((self.field.key, self.shape, self.n))

    def __repr__(self):
        return f"SplitSpace({self.shape}, n={self.n}, over {self.field})"


class GroupElement:
    """An invertible square matrix over a Field, acting on column vectors.

    Rows are stored as tuples of packed raw values.  Similitude factor and
    Dickson invariant are cached after first computation against a space.
    """

    __slots__ = ("field", "rows", "cache")

    def __init__(self, field, rows):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "cache", {})
        d = len(self.rows)
        if any(len(r) != d for r in self.rows):
            raise DimensionMismatch("matrix is not square")

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    @classmethod
    def of(cls, field, entries):
        return cls(field, [[field.element(x).rep for x in row] for row in entries])

    @classmethod
    def identity(cls, field, dim):
        return cls(field, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def scalar(cls, field, dim, c):
        c = field.element(c).rep
        return cls(field, [[c if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_columns(cls, field, cols):
        return cls(field, zip(*[c.raws if isinstance(c, Vector) else c for c in cols]))

    @property
    def dim(self):
        return len(self.rows)

    def column(self, j):
        return Vector(self.field, (r[j] for r in self.rows))

    def entries(self):
        return [[FieldElement(self.field, x) for x in row] for row in self.rows]

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")
        f = self.field
        mul, add = f.raw_mul, f.raw_add
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    acc = add(acc, mul(a, b))
                out_row.append(acc)
            out.append(tuple(out_row))
        return GroupElement(f, out)

    def apply(self, v):
        if not isinstance(v, Vector):
            raise TypeError("apply expects a Vector")
        if v.field != self.field:
            raise FieldMismatch(f"{self.field} vs {v.field}")
        if len(v.raws) != self.dim:
            raise DimensionMismatch(f"{self.dim} vs {len(v.raws)}")
        f = self.field
        mul, add = f.raw_mul, f.raw_add
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, v.raws):
                acc = add(acc, mul(a, b))
            out.append(acc)
        return Vector(f, out)

    def _elimination(self):
        """Row-reduce [M | I]; return (rank, det_raw, inverse rows or None)."""
        f = self.field
        d = self.dim
        aug = [list(row) + [1 if i == j else 0 for j in range(d)]
               for i, row in enumerate(self.rows)]
        det = 1
        rank = 0
        for col in range(d):
            piv = next((r for r in range(rank, d) if aug[r][col]), None)
            if piv is None:
                det = 0
                continue
            if piv != rank:
                aug[rank], aug[piv] = aug[piv], aug[rank]
                det = f.raw_neg(det)
            lead = aug[rank][col]
            det = f.raw_mul(det, lead)
            inv_lead = f.raw_inv(lead)
            aug[rank] = [f.raw_mul(inv_lead, x) for x in aug[rank]]
            for r in range(d):
                if r != rank and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [f.raw_sub(x, f.raw_mul(c, y))
                              for x, y in zip(aug[r], aug[rank])]
            rank += 1
        inverse = [tuple(row[d:]) for row in aug] if rank == d else None
        return rank, (det if rank == d else 0), inverse

    def rank(self):
        return self._elimination()[0]

    def det(self):
        return FieldElement(self.field, self._elimination()[1])

    def inverse(self):
        if "inverse" not in self.cache:
            rank, _, inv_rows = self._elimination()
            if inv_rows is None:
                raise SingularMatrix(f"matrix of rank {rank} < {self.dim}")
            self.cache["inverse"] = GroupElement(self.field, inv_rows)
        return self.cache["inverse"]

    @property
    def is_invertible(self):
        try:
            self.inverse()
            return True
        except SingularMatrix:
            return False

    def to_strings(self):
        return [[str(FieldElement(self.field, x)) for x in row] for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and other.field == self.field
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.field.key, self.rows))

    def __repr__(self):
        body = "; ".join(",".join(r) for r in self.to_strings())
        return f"GroupElement[{body}]"


# -- reflections ------------------------------------------------------------

def reflect(space, v, w):
    """r_v(w) = w - B(v, w) v / q(v); requires q(v) invertible."""
    space._check_dim(v)
    space._check_dim(w)
    f = space.field
    qv = space.raw_q(v.raws)
    if not qv:
        raise NonUnitNorm("reflection vector has q = 0")
    c = f.raw_div(space.raw_b(v.raws, w.raws), qv)
    sub, mul = f.raw_sub, f.raw_mul
    return Vector(f, (sub(wi, mul(c, vi)) for wi, vi in zip(w.raws, v.raws)))


def reflection_matrix(space, v):
    """The matrix of r_v, column j the reflection of e_{j+1}."""
    cols = [reflect(space, v, space.basis_vector(j)) for j in range(space.dim)]
    m = GroupElement.from_columns(space.field, cols)
    m.cache["dickson"] = 1
    m.cache["similitude"] = 1
    return m


# -- isometries and similitudes ----------------------------------------------

def _basis_form_values(space):
    d = space.dim
    basis = [tuple(1 if i == j else 0 for i in range(d)) for j in range(d)]
    q_vals = [space.raw_q(b) for b in basis]
    b_vals = {(i, j): space.raw_b(basis[i], basis[j])
              for i in range(d) for j in range(i + 1, d)}
    return q_vals, b_vals


def is_isometry(space, m):
    """True iff m preserves q; checked on basis values and pairings, which
    determine q(mx) = q(x) for all x over any ring."""
    _check_matrix(space, m)
    cols = tuple(zip(*m.rows))
    q_vals, b_vals = _basis_form_values(space)
    for j, col in enumerate(cols):
        if space.raw_q(col) != q_vals[j]:
            return False
    for (i, j), val in b_vals.items():
        if space.raw_b(cols[i], cols[j]) != val:
            return False
    return True


def similitude_factor(space, m):
    """The unit c with q(mx) = c q(x) for all x, or None if there is none."""
    _check_matrix(space, m)
    f = space.field
    cols = tuple(zip(*m.rows))
    q_vals, b_vals = _basis_form_values(space)
    factor = None
    conditions = [(space.raw_q(cols[j]), q_vals[j]) for j in range(space.dim)]
    conditions += [(space.raw_b(cols[i], cols[j]), val)
                   for (i, j), val in b_vals.items()]
    for got, want in conditions:
        if want:
            factor = f.raw_div(got, want)
            break
    if factor is None or not factor:
        return None
    for got, want in conditions:
        if got != f.raw_mul(factor, want):
            return None
    value = FieldElement(f, factor)
    m.cache["similitude"] = factor
    return value


def dickson(space, m):
    """Dickson invariant in {0, 1} of an isometry of an even-dimensional
    split space: rank(m - 1) mod 2 in characteristic 2, else 0 iff det = 1."""
    if space.shape == "odd":
        raise OddDimension("Dickson invariant is exposed on even-rank shapes only")
    _check_matrix(space, m)
    if "dickson" in m.cache:
        return m.cache["dickson"]
    if not is_isometry(space, m):
        raise NotAnIsometry("Dickson invariant of a non-isometry")
    f = space.field
    if f.characteristic == 2:
        shifted = GroupElement(f, [tuple(f.raw_sub(x, 1 if i == j else 0)
                                         for j, x in enumerate(row))
                                   for i, row in enumerate(m.rows)])
        d = shifted.rank() % 2
    else:
        det = m.det().rep
        d = 0 if det == f.one.rep else 1
    m.cache["dickson"] = d
    return d


def _check_matrix(space, m):
    if m.field != space.field:
        raise FieldMismatch(f"{space.field} vs {m.field}")
    if m.dim != space.dim:
        raise DimensionMismatch(f"space dim {space.dim}, matrix dim {m.dim}")
    if not m.is_invertible:
        raise SingularMatrix("matrix is singular")


# -- stabilization embeddings -------------------------------------------------

def embed_odd_to_pointed(v):
    """(x_1..x_{2n+1}) -> (x_1..x_n, x_{2n+1}, x_{n+1}..x_{2n}, x_{2n+1});
    q-preserving, and sends the odd one-vector to the pointed one-vector."""
    d = len(v.raws)
    if d % 2 == 0 or d < 3:
        raise DimensionMismatch(f"expected odd length >= 3, got {d}")
    n = (d - 1) // 2
    r = v.raws
    out = r[:n] + (r[2 * n],) + r[n:2 * n] + (r[2 * n],)
    return Vector(v.field, out)


def embed_even_to_odd(v):
    """Append a final zero coordinate; q-preserving."""
    d = len(v.raws)
    if d % 2 or d < 2:
        raise DimensionMismatch(f"expected even length >= 2, got {d}")
    return Vector(v.field, v.raws + (0,))
