"""Constructive transitivity: reflection words realizing prescribed motions.

Two-case recipe for moving x to y with q(x) = q(y):

  case 1:  q(x - y) invertible: the single reflection r_{x-y} works.
  case 2:  q(x - y) = 0: pick w with q(w), B(x, w), B(y, w) all nonzero and
           set w' = x - r_w(y); then q(w') = B(w,x) B(w,y) / q(w) != 0 and
           r_w(r_{w'}(x)) = y.

For quadric points the reflection vectors are restricted to the trace-0
subspace, so the assembled element fixes 1; a single-reflection word is
post-composed with r_{u*}, u* = e_1 + e_{n+2} (which fixes both 1 and x_0),
to land in the Dickson-0 model.  Every certificate is re-verified before it
is returned.
"""

from itertools import product

from . import action
from .errors import (
    InfiniteField,
    InvariantViolation,
    IsotropicVector,
    NonSquareNorm,
    NormMismatch,
    NotOnQuadric,
    SearchExhausted,
    Unreachable,
)
from .quadform import GroupElement, Vector, dickson, is_isometry, reflection_matrix, similitude_factor
from .quadric import AmbientQuadricPoint, is_on_quadric

DEFAULT_HEIGHT = 5


class TransportCertificate:
    """A reflection word (plus optional scalar) with its assembled matrix.

    The word [v_1, ..., v_m] acts right to left: the assembled element is
    r_{v_1} ... r_{v_m} composed with the scalar, which commutes.  Applying
    it to `source` yields `target`; `verify()` rechecks everything from
    scratch and `verified` records that it was checked at construction.
    """

    __slots__ = ("space", "word", "scalar", "source", "target", "matrix",
                 "dickson", "path", "verified")

    def __init__(self, space, word, scalar, source, target, path):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "word", tuple(word))
        object.__setattr__(self, "scalar", scalar)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "path", path)
        m = GroupElement.identity(space.field, space.dim)
        for v in self.word:
            m = m * reflection_matrix(space, v)
        if scalar is not None:
            m = m * GroupElement.scalar(space.field, space.dim, scalar)
        object.__setattr__(self, "matrix", m)
        # the Dickson invariant is carried for isometric assemblies only
        if space.shape != "odd" and is_isometry(space, m):
            d = dickson(space, m)
        else:
            d = None
        object.__setattr__(self, "dickson", d)
        if not self.verify():
            raise InvariantViolation("transport certificate failed verification")
        object.__setattr__(self, "verified", True)

    def __setattr__(self, name, value):
        raise AttributeError("TransportCertificate is immutable")

    def verify(self):
        """Recheck the certificate: word vectors have invertible norm, the
        assembled matrix moves source to target, and it is an isometry
        (or a similitude with factor scalar^2 when a scalar is present)."""
        space = self.space
        for v in self.word:
            if not space.raw_q(v.raws):
                return False
        if self.matrix.apply(self.source) != self.target:
            return False
        if self.scalar is None or self.scalar == space.field.one:
            if not is_isometry(space, self.matrix):
                return False
        else:
            factor = similitude_factor(space, self.matrix)
            if factor is None or factor != self.scalar * self.scalar:
                return False
        if self.dickson is not None and space.shape != "odd":
            if dickson(space, self.matrix) != self.dickson:
                return False
        return True

    def __len__(self):
        return len(self.word)

    def to_dict(self):
        return {
            "word": [v.to_strings() for v in self.word],
            "scalar": None if self.scalar is None else str(self.scalar),
            "dickson": self.dickson,
            "source": self.source.to_strings(),
            "target": self.target.to_strings(),
            "path": self.path,
            "verified": self.verified,
        }

    def __repr__(self):
        return (f"TransportCertificate(path={self.path}, word_length={len(self.word)}, "
                f"dickson={self.dickson})")


# -- candidate streams -------------------------------------------------------

def _structured_candidates(space):
    """Hyperbolic combinations e_i +/- e_j with the paired index, which have
    q = +/-1 whenever (i, j) is a hyperbolic pair."""
    n, d = space.n, space.dim
    if space.shape == "pointed_even":
        pairs = [(i, n + 1 + i) for i in range(n + 1)]
    else:
        pairs = [(i, n + i) for i in range(n)]
    out = []
    for i, j in pairs:
        for sign in (1, -1):
            vals = [0] * d
            vals[i] = 1
            vals[j] = sign
            v = Vector.of(space.field, vals)
            if v not in out:
                out.append(v)
    if space.shape == "odd":
        out.append(space.basis_vector(d - 1))
    return out


def _full_sweep(space, height):
    """All vectors of the space: lexicographic over a finite field, integer
    coordinates of height <= height over the rationals."""
    f = space.field
    if f.is_finite:
        coords = range(f.q)
    else:
        coords = [f.element(c).rep for c in range(-height, height + 1)]
    for raws in product(coords, repeat=space.dim):
        yield Vector(f, raws)


def _trace_zero_sweep(space, height):
    """Trace-0 vectors: coordinate 2n+2 is forced to -v_{n+1}."""
    f, n, d = space.field, space.n, space.dim
    if f.is_finite:
        coords = range(f.q)
    else:
        coords = [f.element(c).rep for c in range(-height, height + 1)]
    neg = f.raw_neg
    for free in product(coords, repeat=d - 1):
        yield Vector(f, free + (neg(free[n]),))


# -- the transport operations -------------------------------------------------

def reflection_transport(space, x, y, candidates=None, height=DEFAULT_HEIGHT):
    """A verified word of at most two reflections moving x to y.

    Requires q(x) = q(y).  When the difference is anisotropic a single
    reflection suffices; otherwise the auxiliary vector w is searched over
    `candidates` (structured vectors first, then a full sweep by default).
    """
    space._check_dim(x)
    space._check_dim(y)
    f = space.field
    if x == y:
        return TransportCertificate(space, [], None, x, y, "identity")
    qx, qy = space.raw_q(x.raws), space.raw_q(y.raws)
    if qx != qy:
        raise NormMismatch(f"q(x) = {qx} but q(y) = {qy}")
    diff = x - y
    if space.raw_q(diff.raws):
        return TransportCertificate(space, [diff], None, x, y, "case1")
    if candidates is None:
        candidates = list(_structured_candidates(space)) + list(_full_sweep(space, height))
    for w in candidates:
        if not space.raw_q(w.raws):
            continue
        if not space.raw_b(x.raws, w.raws) or not space.raw_b(y.raws, w.raws):
            continue
        w_prime = x - _reflect_vec(space, w, y)
        if not space.raw_q(w_prime.raws):
            # q(w') = B(w,x) B(w,y) / q(w) is nonzero under the search
            # conditions; reaching this line would falsify that identity
            raise InvariantViolation("two-reflection auxiliary vector has q = 0")
        return TransportCertificate(space, [w, w_prime], None, x, y, "case2")
    raise SearchExhausted("no auxiliary vector w with q(w), B(x,w), B(y,w) all nonzero")


def _reflect_vec(space, v, w):
    f = space.field
    c = f.raw_div(space.raw_b(v.raws, w.raws), space.raw_q(v.raws))
    sub, mul = f.raw_sub, f.raw_mul
    return Vector(f, (sub(a, mul(c, b)) for a, b in zip(w.raws, v.raws)))


def dickson_fixer(ctx):
    """u* = e_1 + e_{n+2}: q(u*) = 1, t(u*) = 0, B(u*, x_0) = 0, so r_{u*}
    fixes both 1 and x_0 and flips the Dickson invariant."""
    vals = [0] * ctx.dim
    vals[0] = 1
    vals[ctx.n + 1] = 1
    return Vector.of(ctx.field, vals)


def quadric_transport(ctx, point, height=DEFAULT_HEIGHT, force=False):
    """A verified SO-model certificate moving x_0 to the given quadric point,
    with a trace-0 reflection word of length at most 3 (or a logged BFS word
    when the two-case search is exhausted)."""
    space = ctx.space
    if isinstance(point, AmbientQuadricPoint):
        if point.space != space:
            raise NotOnQuadric("point belongs to a different quadric")
        target = point.w
    else:
        target = point
        if not is_on_quadric(space, target):
            raise NotOnQuadric(f"{target!r} is not on the quadric")
    x0 = ctx.x0
    if target == x0:
        return TransportCertificate(space, [], None, x0, target, "identity")
    diff = target - x0
    if space.raw_q(diff.raws):
        # r_diff moves x_0 to the target but has Dickson 1; compose with r_{u*}
        word = [diff, dickson_fixer(ctx)]
        return TransportCertificate(space, word, None, x0, target, "case1")
    try:
        candidates = _quadric_case2_candidates(ctx, target, height)
        a = next(candidates)
    except StopIteration:
        return _bfs_transport(ctx, target, force=force)
    a_prime = target - _reflect_vec(space, a, x0)
    if space.raw_q(a_prime.raws) == 0 or space.raw_trace(a_prime.raws) != 0:
        raise InvariantViolation("case-2 auxiliary vector violated its guarantees")
    return TransportCertificate(space, [a_prime, a], None, x0, target, "case2")


def _quadric_case2_candidates(ctx, target, height):
    space = ctx.space
    stream = list(_structured_candidates(space)) + list(_trace_zero_sweep(space, height))
    x0_raws = ctx.x0.raws
    for a in stream:
        if space.raw_trace(a.raws):
            continue
        if not space.raw_q(a.raws):
            continue
        if not space.raw_b(target.raws, a.raws):
            continue
        if not space.raw_b(x0_raws, a.raws):
            continue
        yield a


def _bfs_transport(ctx, target, force=False):
    """Breadth-first word search over reflection-pair generators; words come
    out with even length, hence Dickson 0."""
    space, f = ctx.space, ctx.field
    if not f.is_finite:
        raise Unreachable("BFS fallback requires a finite field")
    vectors = action.trace_zero_reflection_vectors(ctx, force=force)
    gens = [(v, f.raw_inv(space.raw_q(v.raws))) for v in vectors]
    anchor = gens[0]
    x0_raws = ctx.x0.raws
    parent = {x0_raws: None}
    frontier = [x0_raws]
    while frontier and target.raws not in parent:
        fresh = []
        for w in frontier:
            for g in gens:
                image = action._raw_reflect(space, (anchor[0].raws, anchor[1]),
                                            action._raw_reflect(space, (g[0].raws, g[1]), w))
                if image not in parent:
                    parent[image] = (w, g[0])
                    fresh.append(image)
        frontier = fresh
    if target.raws not in parent:
        raise Unreachable("BFS exhausted the orbit without reaching the target")
    word = []
    cursor = target.raws
    while parent[cursor] is not None:
        prev, second = parent[cursor]
        word.extend([anchor[0], second])
        cursor = prev
    return TransportCertificate(space, word, None, ctx.x0, target, "bfs")


def similitude_transport(space, v, height=DEFAULT_HEIGHT):
    """A certificate scaling v to norm 1 and reflecting it onto the
    one-vector; fails with NonSquareNorm when 1/q(v) is not a square, the
    rational-point obstruction to similitude transitivity."""
    space._check_dim(v)
    f = space.field
    qv = space.raw_q(v.raws)
    if not qv:
        raise IsotropicVector("q(v) = 0")
    one = space.one_vector()
    if v == one:
        return TransportCertificate(space, [], None, v, one, "identity")
    if not f.is_finite:
        raise InfiniteField("similitude transport searches square roots in finite fields")
    lam = f.raw_sqrt(f.raw_inv(qv))
    if lam is None:
        raise NonSquareNorm(f"1/q(v) = {f.raw_inv(qv)} is not a square")
    scaled = v.scale(f.element(lam))
    inner = reflection_transport(space, scaled, one, height=height)
    scalar = f.element(lam)
    return TransportCertificate(space, inner.word, scalar, v, one,
                                "scaled_" + inner.path)


def transport_all(ctx, height=DEFAULT_HEIGHT, force=False):
    """Certificates for every point of the quadric over a finite field,
    in enumeration order, with path statistics."""
    from .quadric import enumerate_quadric
    points = enumerate_quadric(ctx.space, force=force)
    certs = [quadric_transport(ctx, p, height=height, force=force) for p in points]
    stats = {"identity": 0, "case1": 0, "case2": 0, "bfs": 0}
    for c in certs:
        stats[c.path] += 1
    return certs, stats
