"""Field-point models of the odd orthogonal groups inside the ambient
pointed even space, their action on the quadric, and the verification of
the orbit/stabilizer structure by exact enumeration.

The models, for the pointed even space of dimension 2n+2 over F:

    O-model:   isometries of q fixing the vector 1   (Dickson unrestricted)
    SO-model:  O-model members with Dickson invariant 0
    stabilizer model: SO-model members fixing x_0 = e_{2n+2}

Reflections r_v with t(v) = 0 fix 1, so pairs of them are SO-model members
and generate the whole SO-model; the enumeration routines exploit this and
cross-check the resulting orders against the classical formulas

    |SO_{2n+1}(F_q)| = q^(n^2) * prod_{i=1..n} (q^(2i) - 1)
    |SO_{2n}(F_q)|   = q^(n(n-1)) * (q^n - 1) * prod_{i=1..n-1} (q^(2i) - 1)

whose ratio is q^(2n) + q^n, the point count of the quadric.
"""

from itertools import product

from .errors import (
    DimensionMismatch,
    InvalidPrimePower,
    NotAMember,
    NotOnQuadric,
    QuadricsError,
    TooLarge,
)
from .fields import is_prime_power
from .quadform import (
    GroupElement,
    SplitSpace,
    Vector,
    dickson,
    is_isometry,
    reflection_matrix,
)
from .quadric import AmbientQuadricPoint, base_point, enumerate_quadric

BRUTE_GUARD = 10 ** 9     # candidate cap q^(dim^2) for direct enumeration
CLOSURE_GUARD = 10 ** 6   # largest group order attempted by reflection closure
VECTOR_GUARD = 10 ** 8


class GroupContext:
    """Ambient data for one (n, field) pair: the pointed even space, the
    distinguished vectors 1 and x_0, and the even subspace spanned by
    e_1..e_n, e_{n+2}..e_{2n+1} on which q restricts to the split even form."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.space = SplitSpace.pointed_even(field, n)
        self.even_space = SplitSpace.even(field, n)
        self.dim = self.space.dim
        self.one = self.space.one_vector()
        self.x0 = self.space.basis_vector(self.dim - 1)
        self.even_slots = tuple(range(n)) + tuple(range(n + 1, 2 * n + 1))

    def extend_even(self, m):
        """Extend an even-space matrix by the identity on e_{n+1}, e_{2n+2}."""
        if m.dim != 2 * self.n:
            raise DimensionMismatch(f"expected dim {2 * self.n}, got {m.dim}")
        d = self.dim
        rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        for a, i in enumerate(self.even_slots):
            for b, j in enumerate(self.even_slots):
                rows[i][j] = m.rows[a][b]
        return GroupElement(self.field, rows)

    def restrict_even(self, m):
        """Restrict an ambient matrix to the even subspace slots."""
        return GroupElement(self.field, [[m.rows[i][j] for j in self.even_slots]
                                         for i in self.even_slots])

    def __repr__(self):
        return f"GroupContext(n={self.n}, over {self.field})"


# -- membership predicates -----------------------------------------------

def in_o_odd(ctx, m):
    """Isometry of the ambient form fixing the vector 1."""
    if m.dim != ctx.dim:
        raise DimensionMismatch(f"expected dim {ctx.dim}, got {m.dim}")
    return is_isometry(ctx.space, m) and m.apply(ctx.one) == ctx.one


def in_so_odd(ctx, m):
    """O-model member with ambient Dickson invariant 0."""
    return in_o_odd(ctx, m) and dickson(ctx.space, m) == 0


def in_so_even_stab(ctx, m):
    """SO-model member fixing the base point x_0."""
    return in_so_odd(ctx, m) and m.apply(ctx.x0) == ctx.x0


def act(ctx, m, point):
    """Apply an SO-model element to a quadric point; the image stays on the
    quadric because q is preserved and t(mx) = B(mx, m1) = t(x)."""
    if not isinstance(point, AmbientQuadricPoint) or point.space != ctx.space:
        raise NotOnQuadric("point does not belong to this context's quadric")
    if not in_so_odd(ctx, m):
        raise NotAMember("matrix is not in the SO-model")
    return AmbientQuadricPoint(ctx.space, m.apply(point.w))


# -- reflection vectors and generators -------------------------------------

def structured_trace_zero(ctx):
    """The 2n+1 vectors e_i +/- e_{n+1+i} (i <= n) and e_{n+1} - e_{2n+2};
    each has trace 0 and q = +/-1."""
    f, n, d = ctx.field, ctx.n, ctx.dim
    out = []
    for i in range(n):
        for sign in (1, -1):
            vals = [0] * d
            vals[i] = 1
            vals[n + 1 + i] = sign
            v = Vector.of(f, vals)
            if v not in out:
                out.append(v)
    vals = [0] * d
    vals[n] = 1
    vals[d - 1] = -1
    v = Vector.of(f, vals)
    if v not in out:
        out.append(v)
    return out


def trace_zero_reflection_vectors(ctx, force=False):
    """All trace-0 vectors with q invertible, normalized so the first
    nonzero coordinate is 1 (proportional vectors give the same reflection);
    structured candidates first, then the lexicographic sweep."""
    f, n, d = ctx.field, ctx.n, ctx.dim
    if not f.is_finite:
        raise TooLarge("reflection sweep needs a finite field")
    if not force and f.q ** (d - 1) > VECTOR_GUARD:
        raise TooLarge(f"{f.q}^{d - 1} trace-0 vectors exceeds the sweep guard")
    seen = set()
    out = []

    def push(v):
        key = _normalize_raws(f, v.raws)
        if key is not None and key not in seen:
            if ctx.space.raw_q(key):
                seen.add(key)
                out.append(Vector(f, key))

    for v in structured_trace_zero(ctx):
        push(v)
    neg = f.raw_neg
    for free in product(range(f.q), repeat=d - 1):
        raws = free + (neg(free[n]),)
        push(Vector(f, raws))
    return out


def _normalize_raws(f, raws):
    lead = next((a for a in raws if a), None)
    if lead is None:
        return None
    if lead == 1:
        return tuple(raws)
    c = f.raw_inv(lead)
    mul = f.raw_mul
    return tuple(mul(c, a) for a in raws)


def reflection_generators(ctx, force=False):
    """All distinct reflections r_v with t(v) = 0 and q(v) invertible; each
    fixes 1 and has Dickson invariant 1, so pairs are SO-model members."""
    return [reflection_matrix(ctx.space, v)
            for v in trace_zero_reflection_vectors(ctx, force=force)]


# -- fast raw-matrix kernels ----------------------------------------------

def _kernels(field):
    if field.kind == "prime":
        p = field.p

        def matmul(a, b):
            cols = tuple(zip(*b))
            return tuple(tuple(sum(map(int.__mul__, row, col)) % p for col in cols)
                         for row in a)

        def matvec(a, v):
            return tuple(sum(map(int.__mul__, row, v)) % p for row in a)
    else:
        mul_t, add_t = field._mul, field._add

        def matmul(a, b):
            cols = tuple(zip(*b))
            out = []
            for row in a:
                orow = []
                for col in cols:
                    acc = 0
                    for x, y in zip(row, col):
                        if x and y:
                            acc = add_t[acc][mul_t[x][y]]
                    orow.append(acc)
                out.append(tuple(orow))
            return tuple(out)

        def matvec(a, v):
            out = []
            for row in a:
                acc = 0
                for x, y in zip(row, v):
                    if x and y:
                        acc = add_t[acc][mul_t[x][y]]
                out.append(acc)
            return tuple(out)
    return matmul, matvec


def _mulclose(matmul, gens, seed):
    """Left-multiplication closure of seed (containing the identity) under
    gens; in a finite group this is the subgroup generated."""
    els = set(seed)
    frontier = list(els)
    while frontier:
        fresh = []
        for b in frontier:
            for a in gens:
                c = matmul(a, b)
                if c not in els:
                    els.add(c)
                    fresh.append(c)
        frontier = fresh
    return els


# -- group enumeration ------------------------------------------------------

def enumerate_isometries(space, fix_one=False, fix_x0=False, dickson_value=None,
                         force=False):
    """Direct column-by-column enumeration of all isometries of a split even
    or pointed even space, optionally fixing the one-vector and/or x_0, and
    optionally filtered by Dickson invariant.

    Columns are filled in an order that lets the linear constraints force
    whole columns (m * 1 = 1 forces col_{n+1} once col_{2n+2} is chosen;
    m * x_0 = x_0 pins col_{2n+2}), and candidates are pre-bucketed by their
    q-value.  Images with the correct Gram data are automatically linearly
    independent because the bilinear form is nondegenerate on these shapes.
    """
    f, d = space.field, space.dim
    if space.shape == "odd":
        # the odd pairing degenerates in characteristic 2; odd-rank groups
        # are modeled ambiently as 1-fixing isometries instead
        raise DimensionMismatch("isometry enumeration works on even-rank shapes")
    if not f.is_finite:
        raise TooLarge("group enumeration needs a finite field")
    if not force and f.q ** (d * d) > BRUTE_GUARD:
        raise TooLarge(f"{f.q}^{d * d} candidate matrices exceeds the guard")
    if (fix_one or fix_x0) and space.shape != "pointed_even":
        raise DimensionMismatch("the fixed vectors live in the pointed even space")
    n = space.n

    by_q = {}
    for raws in product(range(f.q), repeat=d):
        by_q.setdefault(space.raw_q(raws), []).append(raws)
    basis = [tuple(1 if i == j else 0 for i in range(d)) for j in range(d)]
    q_ref = [space.raw_q(b) for b in basis]
    b_ref = [[space.raw_b(basis[i], basis[j]) for j in range(d)] for i in range(d)]

    if fix_one:
        order = [d - 1, n] + [j for j in range(d) if j not in (d - 1, n)]
        one_raws = space.one_vector().raws
    else:
        order = list(range(d))
    x0_raws = tuple(1 if i == d - 1 else 0 for i in range(d))

    raw_b, raw_sub = space.raw_b, f.raw_sub
    cols = [None] * d
    results = []

    def place(k):
        if k == d:
            results.append(tuple(zip(*cols)))
            return
        j = order[k]
        if fix_one and j == n:
            forced = tuple(raw_sub(a, b) for a, b in zip(one_raws, cols[d - 1]))
            candidates = (forced,) if space.raw_q(forced) == q_ref[j] else ()
        elif fix_x0 and j == d - 1:
            candidates = (x0_raws,)
        else:
            candidates = by_q.get(q_ref[j], ())
        previous = [(order[i], cols[order[i]]) for i in range(k)]
        for c in candidates:
            if all(raw_b(c, prev) == b_ref[j][i] for i, prev in previous):
                cols[j] = c
                place(k + 1)
        cols[j] = None

    place(0)
    out = [GroupElement(f, rows) for rows in results]
    if dickson_value is not None:
        out = [m for m in out if dickson(space, m) == dickson_value]
    return out


def so_model_closure(ctx, force=False):
    """The SO-model as the closure of reflection pairs, grown generator by
    generator until the order matches the classical formula; returns the
    elements (BFS-discovery deterministic) and the pair generators used."""
    f = ctx.field
    expected = group_order("odd", ctx.n, f.q)
    if not force and expected > CLOSURE_GUARD:
        raise TooLarge(f"group order {expected} exceeds the closure guard")
    matmul, _ = _kernels(f)
    vectors = trace_zero_reflection_vectors(ctx, force=force)
    refls = [reflection_matrix(ctx.space, v).rows for v in vectors]
    anchor = refls[0]
    identity = GroupElement.identity(f, ctx.dim).rows

    els = {identity}
    gens = []
    for r in refls:
        g = matmul(anchor, r)
        if g in els:
            continue
        gens.append(g)
        els = _mulclose(matmul, gens, els)
        if len(els) >= expected:
            break
    if len(els) != expected:
        raise QuadricsError(
            f"reflection closure reached {len(els)} of {expected} elements")
    return els, gens


def enumerate_group(ctx_or_space, model="so_odd", method="auto", dickson_value=None,
                    force=False):
    """Enumerate one of the concrete group models.

    For a GroupContext: model "o_odd" (isometries fixing 1) or "so_odd"
    (plus Dickson 0).  For a SplitSpace: model "isometry" with an optional
    Dickson filter.  method: "direct" (column enumeration), "closure"
    (reflection pairs; SO-model only), or "auto".  When both routes run,
    callers can compare results; results are sorted deterministically.
    """
    if isinstance(ctx_or_space, GroupContext):
        ctx = ctx_or_space
        f = ctx.field
        if model == "o_odd":
            members = enumerate_isometries(ctx.space, fix_one=True, force=force)
        elif model == "so_odd":
            direct_ok = f.q ** (ctx.dim * ctx.dim) <= BRUTE_GUARD
            if method == "direct" or (method == "auto" and direct_ok):
                members = enumerate_isometries(ctx.space, fix_one=True,
                                               dickson_value=0, force=force)
            else:
                rows, _ = so_model_closure(ctx, force=force)
                members = [GroupElement(f, r) for r in rows]
        else:
            raise ValueError(f"unknown context model {model!r}")
    else:
        members = enumerate_isometries(ctx_or_space, dickson_value=dickson_value,
                                       force=force)
    return sorted(members, key=lambda m: m.rows)


def stabilizer(ctx, point, members=None, force=False):
    """All SO-model elements fixing the given quadric point."""
    if members is None:
        members = enumerate_group(ctx, "so_odd", force=force)
    raws = point.w.raws if isinstance(point, AmbientQuadricPoint) else point.raws
    _, matvec = _kernels(ctx.field)
    return [m for m in members if matvec(m.rows, raws) == raws]


def orbit(ctx, start=None, force=False):
    """BFS closure of a quadric point under reflection pairs, i.e. its orbit
    under the SO-model; deterministic discovery order."""
    f = ctx.field
    space = ctx.space
    if start is None:
        start = base_point(space)
    vectors = trace_zero_reflection_vectors(ctx, force=force)
    gens = []
    for v in vectors:
        inv_q = f.raw_inv(space.raw_q(v.raws))
        gens.append((v.raws, inv_q))
    anchor = gens[0]

    def apply_pair(second, w):
        return _raw_reflect(space, anchor, _raw_reflect(space, second, w))

    seen = {start.w.raws}
    ordered = [start.w.raws]
    frontier = [start.w.raws]
    while frontier:
        fresh = []
        for w in frontier:
            for g in gens:
                image = apply_pair(g, w)
                if image not in seen:
                    seen.add(image)
                    ordered.append(image)
                    fresh.append(image)
        frontier = fresh
    return [AmbientQuadricPoint(space, Vector(f, w)) for w in ordered]


def _raw_reflect(space, gen, w):
    v, inv_q = gen
    f = space.field
    c = f.raw_mul(space.raw_b(v, w), inv_q)
    if not c:
        return tuple(w)
    sub, mul = f.raw_sub, f.raw_mul
    return tuple(sub(wi, mul(c, vi)) for wi, vi in zip(w, v))


# -- orders and verification reports ----------------------------------------

def group_order(kind, n, q):
    """Order of the split special orthogonal group over F_q: kind "odd" for
    rank 2n+1, "even_split" for rank 2n."""
    if n < 1:
        raise InvalidPrimePower(f"n = {n} must be positive")
    if is_prime_power(q) is None:
        raise InvalidPrimePower(f"{q} is not a prime power")
    if kind == "odd":
        order = q ** (n * n)
        for i in range(1, n + 1):
            order *= q ** (2 * i) - 1
        return order
    if kind == "even_split":
        order = q ** (n * (n - 1)) * (q ** n - 1)
        for i in range(1, n):
            order *= q ** (2 * i) - 1
        return order
    raise ValueError(f"unknown group kind {kind!r}")


def verify_homogeneous(field, n, force=False):
    """Check, by exhaustive computation over F_q, that the quadric is the
    orbit of x_0 under the SO-model with stabilizer the extended even group:

      (a) orbit(x_0) = all quadric points,
      (b) |stabilizer(x_0)| = |SO_{2n}(F_q)|,
      (c) |orbit| * |stabilizer| = |SO_{2n+1}(F_q)| = |SO-model|,
      (d) stabilizer(x_0) = extend_even(SO_{2n}(F_q)) as sets.
    """
    ctx = GroupContext(field, n)
    q = field.q
    points = enumerate_quadric(ctx.space, force=force)
    orb = orbit(ctx, force=force)
    members = enumerate_group(ctx, "so_odd", force=force)
    stab = stabilizer(ctx, base_point(ctx.space), members=members)
    even_so = enumerate_isometries(ctx.even_space, dickson_value=0, force=force)
    extended = {ctx.extend_even(m) for m in even_so}

    odd_order = group_order("odd", n, q)
    even_order = group_order("even_split", n, q)
    checks = {
        "orbit_covers_quadric": set(p.w for p in orb) == set(p.w for p in points),
        "stabilizer_order": len(stab) == even_order,
        "orbit_stabilizer_product": len(orb) * len(stab) == odd_order == len(members),
        "stabilizer_is_extended_even": set(stab) == extended,
    }
    witnesses = []
    if not checks["orbit_covers_quadric"]:
        missing = [p for p in points if p.w not in set(o.w for o in orb)]
        witnesses = [p.w.to_strings() for p in missing[:3]]
    report = {
        "check": "homogeneous",
        "n": n,
        "field": str(field),
        "quadric_points": len(points),
        "orbit_size": len(orb),
        "stab_size": len(stab),
        "group_size": len(members),
        "group_order": odd_order,
        "even_group_order": even_order,
        "checks": checks,
        "pass": all(checks.values()),
        "witnesses": witnesses,
    }
    return report


def verify_similitude_orbit(field, n, force=False):
    """Orbit of the vector 1 under the group generated by scalar matrices and
    reflection pairs, inside {q != 0}.  In characteristic 2 the orbit is all
    of {q != 0}; in odd characteristic it is exactly the vectors whose norm
    is a nonzero square."""
    space = SplitSpace.pointed_even(field, n)
    f = space.field
    d = space.dim
    if not f.is_finite:
        raise TooLarge("similitude orbit needs a finite field")
    if not force and f.q ** d > VECTOR_GUARD:
        raise TooLarge(f"{f.q}^{d} vectors exceeds the sweep guard")

    nonzero_norm = []
    refl_gens = []
    seen_dirs = set()
    for raws in product(range(f.q), repeat=d):
        qa = space.raw_q(raws)
        if not qa:
            continue
        nonzero_norm.append(raws)
        key = _normalize_raws(f, raws)
        if key not in seen_dirs:
            seen_dirs.add(key)
            refl_gens.append((key, f.raw_inv(space.raw_q(key))))
    scalars = [c for c in range(2, f.q)] if f.q > 2 else []
    anchor = refl_gens[0]

    start = space.one_vector().raws
    seen = {start}
    frontier = [start]
    mul = f.raw_mul
    while frontier:
        fresh = []
        for w in frontier:
            images = [tuple(mul(c, x) for x in w) for c in scalars]
            images += [_raw_reflect(space, anchor, _raw_reflect(space, g, w))
                       for g in refl_gens]
            for image in images:
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh

    if f.characteristic == 2:
        expected = set(nonzero_norm)
    else:
        squares = {f.raw_mul(c, c) for c in range(1, f.q)}
        expected = {raws for raws in nonzero_norm if space.raw_q(raws) in squares}
    report = {
        "check": "similitude",
        "n": n,
        "field": str(field),
        "orbit_size": len(seen),
        "nonzero_norm_vectors": len(nonzero_norm),
        "expected_orbit_size": len(expected),
        "pass": seen == expected,
    }
    return report
