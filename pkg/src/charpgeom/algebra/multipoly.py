"""Sparse multivariate polynomials over an exact coefficient domain.

Terms are a dict from exponent tuples to nonzero coefficients; the domain is
either a FiniteField or a RatFuncField (anything with zero/one/elem and odd
characteristic p).  Arithmetic is exact; derivatives use char-p exponent
arithmetic, so d(x^p)/dx = 0 comes out of the coefficient reduction and not
out of a special case.

`RatExpr` is an *unreduced* fraction of MultiPolys.  Multivariate gcd is
deliberately avoided: every identity the covering and blow-up machinery needs
(cocycle consistency, differential compatibility, chart overlap agreement) is
decided exactly by cross-multiplication.
"""

import re


class MultiPoly:
    """Sparse polynomial in n variables over an exact domain."""

    __slots__ = ("domain", "n", "terms")

    def __init__(self, domain, n, terms=None):
        self.domain = domain
        self.n = n
        self.terms = {}
        if terms:
            zero = domain.zero
            for exp, c in terms.items():
                if c != zero:
                    self.terms[exp] = c

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, domain, n):
        return cls(domain, n)

    @classmethod
    def const(cls, domain, n, c):
        c = domain.elem(c)
        return cls(domain, n, {(0,) * n: c})

    @classmethod
    def var(cls, domain, n, i, exp=1):
        e = [0] * n
        e[i] = exp
        return cls(domain, n, {tuple(e): domain.one})

    @classmethod
    def monomial(cls, domain, n, exps, c=1):
        return cls(domain, n, {tuple(exps): domain.elem(c)})

    @classmethod
    def variables(cls, domain, n):
        return [cls.var(domain, n, i) for i in range(n)]

    # -- basic queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.n, self.domain.zero)

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d):
        return MultiPoly(self.domain, self.n,
                         {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.domain.zero)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return self.is_zero()
            return self == MultiPoly.const(self.domain, self.n, other)
        return (self.domain == other.domain and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(self.domain, self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        res = dict(self.terms)
        zero = self.domain.zero
        for e, c in other.terms.items():
            s = res.get(e, zero) + c
            if s != zero:
                res[e] = s
            elif e in res:
                del res[e]
        out = MultiPoly(self.domain, self.n)
        out.terms = res
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        out = MultiPoly(self.domain, self.n)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.domain.elem(other)
            if c == self.domain.zero:
                return MultiPoly(self.domain, self.n)
            out = MultiPoly(self.domain, self.n)
            out.terms = {e: a * c for e, a in self.terms.items()}
            return out
        res = {}
        zero = self.domain.zero
        get = res.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = get(e, zero) + c1 * c2
                if s != zero:
                    res[e] = s
                elif e in res:
                    del res[e]
        out = MultiPoly(self.domain, self.n)
        out.terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        result = MultiPoly.const(self.domain, self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        return self * c

    # -- calculus -----------------------------------------------------------------

    def derivative(self, i):
        """Partial derivative; exponent multiplier reduced mod p by the domain."""
        res = {}
        zero = self.domain.zero
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            m = self.domain.elem(e[i])
            if m == zero:
                continue
            ne = list(e)
            ne[i] -= 1
            res[tuple(ne)] = c * m
        out = MultiPoly(self.domain, self.n)
        out.terms = res
        return out

    def gradient(self):
        return [self.derivative(i) for i in range(self.n)]

    # -- evaluation and substitution -------------------------------------------------

    def evaluate(self, point):
        """Value at a tuple of domain elements."""
        acc = self.domain.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * (x ** k)
            acc = acc + v
        return acc

    def subs(self, polys):
        """Full substitution x_i -> polys[i] (MultiPolys over the same domain)."""
        if len(polys) != self.n:
            raise ValueError("substitution needs one polynomial per variable")
        m = polys[0].n
        # cache powers of each substituted variable
        pows = [{0: MultiPoly.const(self.domain, m, 1)} for _ in range(self.n)]
        def power(i, k):
            cache = pows[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * polys[i]
            return cache[k]
        acc = MultiPoly(self.domain, m)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.domain, m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def map_coefficients(self, domain, func):
        """New polynomial over `domain` with coefficients func(c)."""
        out = MultiPoly(domain, self.n)
        zero = domain.zero
        for e, c in self.terms.items():
            v = func(c)
            if v != zero:
                out.terms[e] = v
        return out

    # -- char-p specifics ------------------------------------------------------------

    def is_pth_power(self, pth_root_coeff):
        """Test f = g^p; returns g or None.  Requires char(domain) = p.

        In characteristic p the freshman's dream makes this exact: f is a
        p-th power iff every exponent is divisible by p, with coefficient
        roots supplied by `pth_root_coeff` (perfect coefficient field).
        """
        p = self.domain.p
        root = {}
        for e, c in self.terms.items():
            if any(k % p for k in e):
                return None
            r = pth_root_coeff(c)
            if r is None:
                return None
            root[tuple(k // p for k in e)] = r
        out = MultiPoly(self.domain, self.n)
        out.terms = root
        return out

    # -- text encoding -----------------------------------------------------------------

    def format(self, names=None):
        """Canonical encoding: `c*x1^a1*x2^a2` terms joined by ` + `."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i+1}" for i in range(self.n)]
        bits = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            cs = self.domain.format_element(c)
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            if not factors:
                bits.append(cs)
            elif cs == "1":
                bits.append("*".join(factors))
            else:
                bits.append(cs + "*" + "*".join(factors))
        return " + ".join(bits)

    def __repr__(self):
        return self.format()


_TERM_FACTOR = re.compile(r"^([a-zA-Z]\w*)(?:\^(\d+))?$")


def parse_poly(text, domain, names):
    """Parse the canonical `c*x1^a1*...` encoding (and `-` as a convenience)."""
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    text = text.replace("-", "+-").replace(" ", "")
    acc = MultiPoly(domain, n)
    for raw in text.split("+"):
        if not raw:
            continue
        neg = raw.startswith("-")
        if neg:
            raw = raw[1:]
        coeff = domain.one
        exps = [0] * n
        for factor in raw.split("*"):
            m = _TERM_FACTOR.match(factor)
            if m and m.group(1) in index:
                exps[index[m.group(1)]] += int(m.group(2) or 1)
            else:
                coeff = coeff * domain.elem(_parse_coeff(factor, domain))
        if neg:
            coeff = -coeff
        acc = acc + MultiPoly.monomial(domain, n, exps, coeff)
    return acc


def _parse_coeff(text, domain):
    base = getattr(domain, "base", domain)   # RatFuncField wraps a FiniteField
    if text.startswith("g^") or text == "g":
        return base.parse_element(text)
    return base.elem(int(text))


def hessian_at(f, point):
    """Symmetric matrix of second partials at the point, plus nondegeneracy.

    Rejects characteristic 2 (the quadratic-form normalization downstream
    divides by 2).  Returns (matrix, nondegenerate) where nondegenerate means
    the determinant is nonzero.
    """
    if f.domain.p == 2:
        raise ValueError("Hessians are not supported in characteristic 2")
    n = f.n
    grads = f.gradient()
    mat = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = grads[i].derivative(j).evaluate(point)
            mat[i][j] = v
            mat[j][i] = v
    return mat, bool(det(mat, f.domain))


def det(mat, domain):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(mat)
    a = [row[:] for row in mat]
    zero = domain.zero
    sign = domain.one
    acc = domain.one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != zero:
                piv = r
                break
        if piv is None:
            return zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        acc = acc * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col] != zero:
                factor = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] = a[r][c] - factor * a[col][c]
    return sign * acc


class RatExpr:
    """Unreduced fraction num/den of MultiPolys; equality by cross-multiplying."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = MultiPoly.const(num.domain, num.n, 1)
        if den.is_zero():
            raise ZeroDivisionError("RatExpr with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def of(cls, poly):
        return cls(poly)

    def __add__(self, other):
        other = self._coerce(other)
        return RatExpr(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RatExpr(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatExpr(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatExpr(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RatExpr")
        return RatExpr(self.num * other.den, self.den * other.num)

    def __pow__(self, e):
        if e < 0:
            return RatExpr(self.den, self.num) ** (-e)
        return RatExpr(self.num ** e, self.den ** e)

    def _coerce(self, other):
        if isinstance(other, RatExpr):
            return other
        if isinstance(other, MultiPoly):
            return RatExpr(other)
        return RatExpr(MultiPoly.const(self.num.domain, self.num.n, other))

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    def is_zero(self):
        return self.num.is_zero()

    def derivative(self, i):
        # quotient rule, unreduced
        return RatExpr(self.num.derivative(i) * self.den
                       - self.num * self.den.derivative(i),
                       self.den * self.den)

    def subs(self, exprs):
        """Substitute RatExprs for the variables; exact, fully unreduced."""
        n = self.num.n
        if len(exprs) != n:
            raise ValueError("substitution needs one expression per variable")
        def subs_poly(poly):
            m = exprs[0].num.n
            one = MultiPoly.const(poly.domain, m, 1)
            deg = [poly.degree_in(i) for i in range(n)]
            # common denominator prod den_i^deg_i, numerators scaled to match
            acc = MultiPoly(poly.domain, m)
            for e, c in poly.terms.items():
                term = MultiPoly.const(poly.domain, m, c)
                for i, k in enumerate(e):
                    if deg[i] <= 0:
                        continue
                    term = term * (exprs[i].num ** k) * (exprs[i].den ** (deg[i] - k))
                acc = acc + term
            den = one
            for i in range(n):
                if deg[i] > 0:
                    den = den * (exprs[i].den ** deg[i])
            return acc, den
        num_n, num_d = subs_poly(self.num)
        den_n, den_d = subs_poly(self.den)
        return RatExpr(num_n * den_d, num_d * den_n)

    def __repr__(self):
        if self.den.is_constant():
            return f"({self.num!r})/{self.den!r}"
        return f"({self.num!r})/({self.den!r})"
