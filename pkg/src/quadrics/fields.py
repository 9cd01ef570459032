"""Exact field arithmetic: prime fields F_p, small extensions GF(p^k), and Q.

Finite field elements are carried as packed integer indices: the residue
for a prime field, sum(c_i * p**i) for the coefficient vector (c_0, ..,
c_{k-1}) of an extension.  Packing keeps vectors and matrices hashable and
cheap to compare; rationals are carried as Fraction.  All representations
are canonical, so equality is representation equality.
"""

from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    NoModulusAvailable,
    NonPrimeCharacteristic,
    UnsupportedSize,
)

ORDER_CAP = 1024
DEGREE_CAP = 4

# One fixed monic irreducible modulus per supported (p, k), written as the
# coefficient tuple (c_0, c_1, ..., c_k) of c_0 + c_1*t + ... + t^k.
MODULI = {
    (2, 2): (1, 1, 1),        # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),     # t^3 + t + 1
    (2, 4): (1, 1, 0, 0, 1),  # t^4 + t + 1
    (3, 2): (1, 0, 1),        # t^2 + 1
    (3, 3): (1, 2, 0, 1),     # t^3 + 2t + 1
    (5, 2): (2, 0, 1),        # t^2 + 2
}


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_prime_power(q):
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return (q, 1)


def _poly_divmod(a, b, p):
    """Quotient and remainder of coefficient lists over F_p, low degree first."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    inv_lead = pow(b[db], -1, p)
    quo = [0] * max(da - db + 1, 1)
    for i in range(da - db, -1, -1):
        c = (a[i + db] * inv_lead) % p
        quo[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return quo, a[:db] if db > 0 else [0]


def _is_irreducible(modulus, p):
    """Exhaustive check for degree <= 4: no factor of degree 1 or 2."""
    k = len(modulus) - 1
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0:
            return False
    if k == 4:
        for c0 in range(p):
            for c1 in range(p):
                _, rem = _poly_divmod(modulus, (c0, c1, 1), p)
                if not any(x % p for x in rem):
                    return False
    return True


class Field:
    """Descriptor of F_p, GF(p^k) with a fixed modulus, or the rationals."""

    __slots__ = (
        "kind", "p", "k", "q", "modulus", "key",
        "_add", "_mul", "_inv", "_neg", "_sqrt", "_hash",
    )

    def __init__(self, kind, p=0, k=1):
        if kind not in ("prime", "extension", "rational"):
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p
        self.k = k
        self._sqrt = None
        if kind == "rational":
            self.q = None
            self.modulus = None
        else:
            if not is_prime(p):
                raise NonPrimeCharacteristic(f"{p} is not prime")
            if k < 1 or k > DEGREE_CAP:
                raise UnsupportedSize(f"extension degree {k} not supported (max {DEGREE_CAP})")
            q = p ** k
            if q > ORDER_CAP:
                raise UnsupportedSize(f"field order {q} exceeds cap {ORDER_CAP}")
            self.q = q
            if kind == "prime":
                self.modulus = None
            else:
                if (p, k) not in MODULI:
                    raise NoModulusAvailable(f"no built-in modulus for GF({p}^{k})")
                self.modulus = MODULI[p, k]
                assert _is_irreducible(self.modulus, p)
                self._build_tables()
        self.key = (kind, p, k)
        self._hash = hash(self.key)

    # -- construction -----------------------------------------------------

    @classmethod
    def prime(cls, p):
        return cls("prime", p, 1)

    @classmethod
    def extension(cls, p, k):
        if k == 1:
            return cls.prime(p)
        return cls("extension", p, k)

    @classmethod
    def rationals(cls):
        return cls("rational", 0, 1)

    @classmethod
    def parse(cls, spec):
        """Build a field from a string such as "5", "2^3", or "Q"."""
        spec = spec.strip()
        if spec in ("Q", "QQ", "rational", "rationals"):
            return cls.rationals()
        if "^" in spec:
            p_str, k_str = spec.split("^", 1)
            return cls.extension(int(p_str), int(k_str))
        return cls.prime(int(spec))

    @classmethod
    def of_order(cls, q):
        pk = is_prime_power(q)
        if pk is None:
            raise NonPrimeCharacteristic(f"{q} is not a prime power")
        return cls.extension(*pk)

    def _build_tables(self):
        p, k, q, mod = self.p, self.k, self.q, self.modulus
        coeffs = [self._unpack_raw(i) for i in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * k - 1)
                ca, cb = coeffs[a], coeffs[b]
                for i in range(k):
                    if ca[i]:
                        for j in range(k):
                            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p
                for i in range(2 * k - 2, k - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j in range(k):
                            prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
                v = self._pack(prod[:k])
                mul[a][b] = v
                mul[b][a] = v
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self._pack([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                add[a][b] = v
                add[b][a] = v
        neg = [self._pack([(-c) % p for c in coeffs[a]]) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._add, self._mul, self._neg, self._inv = add, mul, neg, inv

    def _pack(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + (c % self.p)
        return v

    def _unpack_raw(self, idx):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(idx % self.p)
            idx //= self.p
        return coeffs

    # -- raw arithmetic on packed representations --------------------------

    @property
    def is_finite(self):
        return self.kind != "rational"

    @property
    def characteristic(self):
        return self.p if self.is_finite else 0

    def raw_add(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.p
        if self.kind == "extension":
            return self._add[a][b]
        return a + b

    def raw_sub(self, a, b):
        if self.kind == "prime":
            return (a - b) % self.p
        if self.kind == "extension":
            return self._add[a][self._neg[b]]
        return a - b

    def raw_neg(self, a):
        if self.kind == "prime":
            return (-a) % self.p
        if self.kind == "extension":
            return self._neg[a]
        return -a

    def raw_mul(self, a, b):
        if self.kind == "prime":
            return (a * b) % self.p
        if self.kind == "extension":
            return self._mul[a][b]
        return a * b

    def raw_inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.kind == "prime":
            return pow(a, -1, self.p)
        if self.kind == "extension":
            return self._inv[a]
        return 1 / a

    def raw_div(self, a, b):
        return self.raw_mul(a, self.raw_inv(b))

    def raw_sqrt(self, a):
        """A square root of a, or None; the enumeration-first root is returned."""
        if not self.is_finite:
            raise InfiniteField("square roots are only searched in finite fields")
        if self._sqrt is None:
            table = {}
            for s in range(self.q):
                sq = self.raw_mul(s, s)
                if sq not in table:
                    table[sq] = s
            self._sqrt = table
        return self._sqrt.get(a)

    # -- elements ----------------------------------------------------------

    @property
    def zero(self):
        return FieldElement(self, Fraction(0) if self.kind == "rational" else 0)

    @property
    def one(self):
        return FieldElement(self, Fraction(1) if self.kind == "rational" else 1)

    def element(self, value):
        """Coerce an int, Fraction, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        if self.kind == "rational":
            return FieldElement(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise FieldMismatch(f"{value} is not an integer")
            value = value.numerator
        # integers embed through the prime subfield
        return FieldElement(self, int(value) % self.p)

    def from_coeffs(self, coeffs):
        """Extension element with coefficient vector (c_0, ..., c_{k-1})."""
        if self.kind != "extension":
            raise FieldMismatch("coefficient vectors describe extension elements only")
        if len(coeffs) != self.k:
            raise FieldMismatch(f"expected {self.k} coefficients")
        return FieldElement(self, self._pack(list(coeffs)))

    @property
    def generator(self):
        """The class of t in GF(p^k)."""
        if self.kind != "extension":
            raise FieldMismatch("only extension fields have a polynomial generator")
        return FieldElement(self, self.p)

    def elements(self):
        """All elements in enumeration order: 0 first, then 1, then the rest."""
        if not self.is_finite:
            raise InfiniteField("cannot enumerate the rationals")
        return [FieldElement(self, r) for r in range(self.q)]

    def parse_element(self, text):
        """Inverse of str(element)."""
        text = text.strip()
        if self.kind == "rational":
            return FieldElement(self, Fraction(text))
        if self.kind == "prime":
            return FieldElement(self, int(text) % self.p)
        coeffs = [0] * self.k
        for term in text.split("+"):
            term = term.strip()
            if "*" in term:
                c_str, g_str = term.split("*", 1)
                power = 1 if g_str.strip() == "g" else int(g_str.strip().split("^", 1)[1])
                coeffs[power] = int(c_str) % self.p
            elif term == "g":
                coeffs[1] = 1
            else:
                coeffs[0] = int(term) % self.p
        return self.from_coeffs(coeffs)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.kind == "rational":
            return "Field(Q)"
        if self.kind == "prime":
            return f"Field(F_{self.p})"
        return f"Field(GF({self.p}^{self.k}))"

    def __str__(self):
        if self.kind == "rational":
            return "Q"
        if self.kind == "prime":
            return str(self.p)
        return f"{self.p}^{self.k}"


class FieldElement:
    """Immutable element of a Field, in canonical representation."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.rep
        if isinstance(other, int) or (self.field.kind == "rational" and isinstance(other, Fraction)):
            return self.field.element(other).rep
        return NotImplemented

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_add(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_sub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_sub(rep, self.rep))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_mul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_div(self.rep, rep))

    def __rtruediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.raw_div(rep, self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.raw_neg(self.rep))

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        return FieldElement(self.field, self.field.raw_inv(self.rep))

    def sqrt(self):
        """A square root in the same field, or None if there is none."""
        root = self.field.raw_sqrt(self.rep)
        return None if root is None else FieldElement(self.field, root)

    def is_square(self):
        return self.field.raw_sqrt(self.rep) is not None

    @property
    def is_zero(self):
        return not self.rep

    @property
    def coeffs(self):
        if self.field.kind != "extension":
            raise FieldMismatch("coefficient vectors describe extension elements only")
        return tuple(self.field._unpack_raw(self.rep))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field._hash, self.rep))

    def __bool__(self):
        return bool(self.rep)

    def __str__(self):
        f = self.field
        if f.kind == "prime":
            return str(self.rep)
        if f.kind == "rational":
            return str(self.rep)
        parts = [f"{c}*g^{i}" if i > 1 else (f"{c}*g" if i == 1 else str(c))
                 for i, c in enumerate(self.coeffs)]
        return "+".join(parts)

    def __repr__(self):
        return f"<{self} in {self.field}>"
