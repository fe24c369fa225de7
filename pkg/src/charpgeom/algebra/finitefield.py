"""Exact arithmetic in finite fields F_{p^m} of odd characteristic.

Elements are stored in a fixed polynomial basis over F_p: an element is a
tuple of m integers (c_0, ..., c_{m-1}) representing c_0 + c_1*a + ... where
a is a root of a fixed monic irreducible modulus of degree m.  For m = 1 the
tuple has a single entry and arithmetic degenerates to integers mod p.

The characteristic is restricted to odd primes: every construction downstream
(Hessians, diagonalization of quadratic forms, blow-up multiplicities) needs
2 to be invertible, so p = 2 is rejected at the door.

Frobenius x -> x^p is an automorphism; its inverse (the exact p-th root) is
x -> x^(p^(m-1)).  Square roots use Tonelli-Shanks with a scanned non-residue,
and `FiniteField.extension` produces F_{p^(m*k)} together with an embedding,
which is how callers "enlarge the field" for missing square roots.
"""

import functools
import itertools


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# -- dense univariate arithmetic over F_p on plain int lists (modulus search) --

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a

def _pmulmod(a, b, mod, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
    return _pmod(res, mod, p)

def _pmod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and _ptrim(a):
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, c in enumerate(mod):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _ptrim(a)
    return a

def _ppowmod(a, e, mod, p):
    result = [1]
    base = _pmod(a, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result

def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [c * inv % p for c in b]
        a, b = bm, _pmod(a, bm, p)
    return a

def _is_irreducible(f, p):
    """Monic f of degree m >= 1 over F_p, coefficient list low-to-high."""
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    xq = x
    for _ in range(m):
        xq = _ppowmod(xq, p, f, p)
    if _ptrim([(c - d) % p for c, d in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    # gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    for l in set(_prime_factors(m)):
        xq = x
        for _ in range(m // l):
            xq = _ppowmod(xq, p, f, p)
        diff = [(c - d) % p for c, d in itertools.zip_longest(xq, x, fillvalue=0)]
        g = _pgcd(list(f), _ptrim(diff), p)
        if len(g) != 1:
            return False
    return True

def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out

def _find_modulus(p, m):
    """First monic irreducible of degree m over F_p in lexicographic order."""
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        f = list(tail) + [1]
        if f[0] != 0 and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found (impossible)")


@functools.lru_cache(maxsize=None)
def FF(p, m=1):
    """Cached constructor for F_{p^m} with the deterministic default modulus."""
    return FiniteField(p, m)


class FiniteField:
    """The field F_{p^m}, p an odd prime, in a fixed polynomial basis."""

    def __init__(self, p, m=1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if m < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = tuple(_find_modulus(p, m)) if modulus is None else tuple(modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if m > 1 and not _is_irreducible(list(self.modulus), p):
            raise ValueError("modulus is reducible")
        self.zero = FFElement(self, (0,) * m)
        self.one = FFElement(self, (1,) + (0,) * (m - 1))
        self._generator = None
        self._nonresidue = None

    def __repr__(self):
        return f"FF({self.p})" if self.m == 1 else f"FF({self.p}^{self.m})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element construction ------------------------------------------------

    def elem(self, value):
        """Coerce an int, coefficient sequence, or FFElement of this field."""
        if isinstance(value, FFElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return FFElement(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.m:
            raise ValueError("coefficient vector too long")
        return FFElement(self, coeffs + (0,) * (self.m - len(coeffs)))

    def from_index(self, k):
        """Element number k in the base-p enumeration, 0 <= k < p^m."""
        digits = []
        for _ in range(self.m):
            digits.append(k % self.p)
            k //= self.p
        return FFElement(self, tuple(digits))

    def elements(self):
        """All p^m elements, in the deterministic base-p enumeration order."""
        return (self.from_index(k) for k in range(self.order))

    def coerce(self, value):
        return self.elem(value)

    # -- internal coefficient-tuple arithmetic --------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return (a[0] * b[0] % p,)
        res = [0] * (2 * m - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    res[i + j] = (res[i + j] + ca * cb) % p
        # reduce by the monic modulus
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = res[k]
            if c:
                res[k] = 0
                for i in range(m):
                    res[k - m + i] = (res[k - m + i] - c * mod[i]) % p
        return tuple(res[:m])

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        # a^(q-2) by square-and-multiply on coefficient tuples
        result = self.one.coeffs
        base = a
        e = self.order - 2
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- field-level operations ----------------------------------------------

    def frobenius(self, a):
        """a^p, the arithmetic Frobenius."""
        return a ** self.p

    def generator(self):
        """A fixed generator of the multiplicative group (smallest in order)."""
        if self._generator is None:
            n = self.order - 1
            primes = sorted(set(_prime_factors(n)))
            for k in range(1, self.order):
                g = self.from_index(k)
                if all(g ** (n // l) != self.one for l in primes):
                    self._generator = g
                    break
        return self._generator

    def is_square(self, a):
        if a == self.zero:
            return True
        return a ** ((self.order - 1) // 2) == self.one

    def sqrt(self, a):
        """A square root of a, or None when a is a non-residue.

        Tonelli-Shanks on the cyclic group F_q^*; the needed non-residue is
        the first one in enumeration order, cached.
        """
        if a == self.zero:
            return self.zero
        q = self.order
        if not self.is_square(a):
            return None
        if q % 4 == 3:
            return a ** ((q + 1) // 4)
        if self._nonresidue is None:
            for k in range(1, q):
                c = self.from_index(k)
                if not self.is_square(c):
                    self._nonresidue = c
                    break
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        c = self._nonresidue ** s
        x = a ** ((s + 1) // 2)
        t = a ** s
        m = e
        while t != self.one:
            # least k with t^(2^k) = 1; 0 < k < m
            k, v = 0, t
            while v != self.one:
                v = v * v
                k += 1
            b = c ** (2 ** (m - k - 1))
            m = k
            c = b * b
            x = x * b
            t = t * c
        return x

    def extension(self, k=2):
        """F_{p^(m*k)} plus an embedding function of this field into it.

        The embedding sends the basis generator to a root of this field's
        modulus, found by scanning; scanning is only feasible for small
        fields, which is the regime this artifact works in.
        """
        big = FF(self.p, self.m * k)
        if self.m == 1:
            def embed(a, _big=big):
                return _big.elem(a.coeffs[0])
            return big, embed
        if big.order > 2_000_000:
            raise ValueError(f"extension of {self!r} too large to embed by scanning")
        mod = self.modulus
        root = None
        for cand in big.elements():
            acc = big.zero
            for c in reversed(mod):
                acc = acc * cand + big.elem(c)
            if acc == big.zero:
                root = cand
                break
        assert root is not None, "modulus has a root in any extension of degree m*k"
        pows = [big.one]
        for _ in range(self.m - 1):
            pows.append(pows[-1] * root)
        def embed(a, _big=big, _pows=pows):
            acc = _big.zero
            for c, w in zip(a.coeffs, _pows):
                if c:
                    acc = acc + _big.elem(c) * w
            return acc
        return big, embed

    # -- canonical text encoding ----------------------------------------------

    def format_element(self, a):
        """Integer string for prime-field values, `g^k` otherwise."""
        if all(c == 0 for c in a.coeffs[1:]):
            return str(a.coeffs[0])
        g = self.generator()
        x = g
        for k in range(1, self.order - 1):
            if x == a:
                return f"g^{k}"
            x = x * g
        raise AssertionError("element not in the multiplicative group sweep")

    def parse_element(self, text):
        text = text.strip()
        if text.startswith("g^"):
            return self.generator() ** int(text[2:])
        if text == "g":
            return self.generator()
        return self.elem(int(text))


class FFElement:
    """Immutable element of a FiniteField; full operator arithmetic."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        return f"[{','.join(map(str, self.coeffs))}]"

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field.elem(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        return FFElement(self.field, self.field._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        return FFElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self.field.elem(other) - self

    def __neg__(self):
        return FFElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        return FFElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        return FFElement(self.field, self.field._mul(self.coeffs, self.field._inv(other.coeffs)))

    def __rtruediv__(self, other):
        return self.field.elem(other) / self

    def inverse(self):
        return FFElement(self.field, self.field._inv(self.coeffs))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def pth_root(a):
    """The exact p-th root in F_{p^m}: the inverse of Frobenius.

    Frobenius is an automorphism of order m, so its inverse is the (m-1)-fold
    Frobenius: a^(p^(m-1)).  On the prime field this is the identity.
    """
    field = a.field
    x = a
    for _ in range(field.m - 1):
        x = x ** field.p
    return x
