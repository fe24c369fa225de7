"""Formal normal form at a nondegenerate critical point.

Brings f with f(0) critical and nondegenerate Hessian to the shape
a_0 + x_1^2 + ... + x_n^2 modulo m^r, entirely within truncated polynomial
arithmetic: first the quadratic part is normalized by an exact congruence
diagonalization (square roots taken in at most one quadratic extension of
the coefficient field, with the extension degree reported), then one
homogeneous correction step per degree r' = 3..r-1 kills the lowest
nonquadratic part, solving 2*sum_i x_i*phi_i = -(degree-r' part) monomial by
monomial.

Each degree-r' monomial is assigned to the highest variable index dividing
it, which pins the correction uniquely and deterministically; any assignment
works, and the certificate below is independent of the choice.

The returned CoordinateChange records every step and the composed total
substitution as a jet tuple; its certificate is the *independent*
recomposition jet_compose(f - a_0, total, r), which callers compare against
sum x_i^2 without trusting the solver's intermediate state.
"""

from dataclasses import dataclass, field as dc_field

from .algebra.finitefield import FiniteField
from .algebra.multipoly import MultiPoly, hessian_at, det
from .algebra.jets import Jet, jet_compose


@dataclass
class Diagonalization:
    """Congruence change C with C^T Q C = identity, over `fld`.

    `fld` may be a quadratic extension of the input field (square roots of
    the diagonal entries); `extension_degree` is 1 or 2 and `embed` maps the
    original field in.
    """

    matrix: list
    fld: FiniteField
    extension_degree: int
    embed: object

    def verify(self, q_matrix):
        n = len(self.matrix)
        emb = self.embed
        q = [[emb(q_matrix[i][j]) for j in range(n)] for i in range(n)]
        c = self.matrix
        fld = self.fld
        for i in range(n):
            for j in range(n):
                acc = fld.zero
                for a in range(n):
                    for b in range(n):
                        acc = acc + c[a][i] * q[a][b] * c[b][j]
                want = fld.one if i == j else fld.zero
                if acc != want:
                    return False
        return True


def diagonalize_quadratic(q_matrix, fld):
    """Invertible C with C^T Q C = I, enlarging the field for square roots.

    Q must be symmetric and nonsingular over F_q with q odd.  Symmetric
    Gaussian congruence produces C0 with C0^T Q C0 diagonal; the rescaling
    to the identity divides each column by a square root of its diagonal
    entry, which exists in F_q or (always) in F_{q^2}.
    """
    n = len(q_matrix)
    p = fld.p
    if p == 2:
        raise ValueError("characteristic 2 is excluded")
    for i in range(n):
        for j in range(n):
            if q_matrix[i][j] != q_matrix[j][i]:
                raise ValueError("matrix is not symmetric")
    if not det(q_matrix, fld):
        raise ValueError("singular quadratic form")
    q = [[q_matrix[i][j] for j in range(n)] for i in range(n)]
    c = [[fld.one if i == j else fld.zero for j in range(n)] for i in range(n)]

    def add_col(dst, src, factor):
        # column operation x_src += factor * x_dst ... applied as congruence:
        # col_dst := col_dst + factor * col_src on both Q (two-sided) and C
        for r in range(n):
            c[r][dst] = c[r][dst] + factor * c[r][src]
        for r in range(n):
            q[r][dst] = q[r][dst] + factor * q[r][src]
        for r in range(n):
            q[dst][r] = q[dst][r] + factor * q[src][r]

    for i in range(n):
        if not q[i][i]:
            # bring a nonzero onto the diagonal: a lower diagonal entry ...
            pivot = next((j for j in range(i + 1, n) if q[j][j]), None)
            if pivot is not None:
                for r in range(n):
                    c[r][i], c[r][pivot] = c[r][pivot], c[r][i]
                q[i], q[pivot] = q[pivot], q[i]
                for r in range(n):
                    q[r][i], q[r][pivot] = q[r][pivot], q[r][i]
            else:
                # all remaining diagonal entries vanish; use an off-diagonal
                j = next((j for j in range(i + 1, n) if q[i][j]), None)
                if j is None:
                    raise ValueError("singular quadratic form")
                add_col(i, j, fld.one)   # now q[i][i] = 2*q_old[i][j] != 0
        inv = q[i][i].inverse()
        for j in range(i + 1, n):
            if q[i][j]:
                add_col(j, i, -q[i][j] * inv)
    diag = [q[i][i] for i in range(n)]

    roots = [fld.sqrt(dv) for dv in diag]
    if all(r is not None for r in roots):
        big, embed, ext = fld, (lambda a: a), 1
    else:
        big, embed = fld.extension(2)
        ext = 2
        roots = [big.sqrt(embed(dv)) for dv in diag]
        assert all(r is not None for r in roots), \
            "every element of F_q is a square in F_{q^2}"
    cc = [[embed(c[i][j]) * roots[j].inverse() for j in range(n)]
          for i in range(n)]
    result = Diagonalization(matrix=cc, fld=big, extension_degree=ext,
                             embed=embed)
    if not result.verify(q_matrix):
        raise AssertionError("diagonalization failed re-verification")
    return result


@dataclass
class ChangeStep:
    """One substitution step: 'linear' (matrix) or 'correction' (degree r')."""

    kind: str
    degree: int = 0
    matrix: list = None
    corrections: dict = dc_field(default_factory=dict)  # var index -> MultiPoly

    def describe(self, names=None):
        if self.kind == "linear":
            return f"linear change by the diagonalizing matrix ({len(self.matrix)}x{len(self.matrix)})"
        vars_touched = sorted(self.corrections)
        return (f"degree-{self.degree} correction on variables "
                f"{[v + 1 for v in vars_touched]}")


@dataclass
class CoordinateChange:
    """Ordered substitution steps plus their composed total as a jet tuple."""

    steps: list
    total: list
    fld: FiniteField
    extension_degree: int
    a0: object
    order: int

    def linear_part(self):
        n = len(self.total)
        return [[self.total[i].coefficient(
                    tuple(1 if k == j else 0 for k in range(n)))
                 for j in range(n)] for i in range(n)]


@dataclass
class NormalFormResult:
    a0: object
    change: CoordinateChange
    fld: FiniteField
    extension_degree: int
    certificate: Jet
    target: Jet
    embed: object = None       # coefficient embedding into fld

    def recompose(self, f_embedded):
        """Independent certificate: jet_compose(f - a0, total, r)."""
        shifted = f_embedded - MultiPoly.const(f_embedded.domain,
                                               f_embedded.n, self.a0)
        return jet_compose(shifted, self.change.total, self.change.order)

    def verify(self, f_embedded):
        return self.recompose(f_embedded) == self.target


def _step_jets(fld, n, order, step):
    if step.kind == "linear":
        jets = []
        for i in range(n):
            terms = {}
            for j in range(n):
                if step.matrix[i][j] != fld.zero:
                    e = [0] * n
                    e[j] = 1
                    terms[tuple(e)] = step.matrix[i][j]
            jets.append(Jet(fld, n, order, terms))
        return jets
    jets = []
    for i in range(n):
        base = Jet.variable(fld, n, i, order)
        corr = step.corrections.get(i)
        if corr is not None:
            base = base + Jet.from_poly(corr, order)
        jets.append(base)
    return jets


def normal_form(f, r):
    """Coordinate change certifying f = a0 + sum x_i^2 mod m^r at the origin.

    Preconditions: gradient(f)(0) = 0, Hessian at 0 nondegenerate, p odd,
    r >= 3.  Returns a NormalFormResult whose certificate jet equals the
    target sum x_i^2 (order r) and re-verifies by independent recomposition.
    """
    fld = f.domain
    n = f.n
    if not isinstance(fld, FiniteField):
        raise TypeError("normal_form expects coefficients in a finite field")
    if fld.p == 2:
        raise ValueError("characteristic 2 is excluded")
    if r < 3:
        raise ValueError("order r must be at least 3")
    origin = tuple(fld.zero for _ in range(n))
    if any(not g.evaluate(origin) == fld.zero for g in f.gradient()):
        raise ValueError("the origin is not a critical point")
    hess, nondeg = hessian_at(f, origin)
    if not nondeg:
        raise ValueError("degenerate Hessian at the origin")
    a0 = f.evaluate(origin)

    # normalize the quadratic part: C^T (H/2) C = I makes it sum x_i^2
    half = fld.elem(2).inverse()
    halfh = [[hess[i][j] * half for j in range(n)] for i in range(n)]
    diag = diagonalize_quadratic(halfh, fld)
    big, embed = diag.fld, diag.embed
    work_f = f.map_coefficients(big, embed) if diag.extension_degree > 1 else f
    a0_big = embed(a0)

    steps = [ChangeStep(kind="linear", matrix=diag.matrix)]
    shifted = work_f - MultiPoly.const(big, n, a0_big)
    g = jet_compose(shifted, _step_jets(big, n, r, steps[0]), r)

    target = Jet(big, n, r)
    for i in range(n):
        e = [0] * n
        e[i] = 2
        target = target + Jet(big, n, r, {tuple(e): big.one})

    two_inv = big.elem(2).inverse()
    for rp in range(3, r):
        part = (g - target).homogeneous_part(rp)
        if not part:
            continue
        corrections = {}
        for exps, coeff in part.items():
            i = max(idx for idx, e in enumerate(exps) if e > 0)
            j = list(exps)
            j[i] -= 1
            mono = MultiPoly.monomial(big, n, tuple(j), -coeff * two_inv)
            corrections[i] = corrections.get(i, MultiPoly(big, n)) + mono
        step = ChangeStep(kind="correction", degree=rp, corrections=corrections)
        steps.append(step)
        g = jet_compose(g, _step_jets(big, n, r, step), r)
        low = g.truncate(rp + 1)
        if low != target.truncate(rp + 1):
            raise AssertionError(f"degree-{rp} correction failed to cancel")
    if g != target:
        raise AssertionError("normal form did not reach the target jet")

    total = _step_jets(big, n, r, steps[0])
    for step in steps[1:]:
        sj = _step_jets(big, n, r, step)
        total = [jet_compose(tj, sj, r) for tj in total]
    change = CoordinateChange(steps=steps, total=total, fld=big,
                              extension_degree=diag.extension_degree,
                              a0=a0_big, order=r)
    result = NormalFormResult(a0=a0_big, change=change, fld=big,
                              extension_degree=diag.extension_degree,
                              certificate=g, target=target, embed=embed)
    if not result.verify(work_f):
        raise AssertionError("normal form failed independent recomposition")
    return result
