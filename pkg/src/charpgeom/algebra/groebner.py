"""Buchberger engine specialized for unit-ideal certificates.

Monomial order: graded reverse lexicographic.  The engine tracks, for every
basis element, its representation in terms of the original generators, so
that a successful membership-of-1 run returns cofactors c_i with
sum c_i * g_i = 1 that re-verify by plain polynomial expansion, with no trust
in the engine itself.

Buchberger terminates in theory; in practice a pair/reduction budget guards
against runaway intermediate growth, and hitting the budget is reported as a
distinct "exhausted" outcome, never conflated with a completed basis that
genuinely lacks a unit (which proves 1 is not in the ideal).
"""

import heapq
import itertools
from dataclasses import dataclass, field

from .multipoly import MultiPoly


def grevlex_key(exps):
    """Sort key: k(a) > k(b) iff a > b in graded reverse lex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def leading_term(poly):
    """(exponents, coefficient) of the grevlex-leading term."""
    if poly.is_zero():
        raise ValueError("zero polynomial has no leading term")
    lm = max(poly.terms, key=grevlex_key)
    return lm, poly.terms[lm]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quotient_monomial(a, b):
    return tuple(x - y for x, y in zip(a, b))


def reduce_poly(f, basis, lead_cache=None):
    """Full reduction of f by the basis.

    Returns (quotients, remainder) with f = sum q_i * basis_i + remainder and
    no remainder term divisible by any basis leading monomial.
    """
    domain, n = f.domain, f.n
    if lead_cache is None:
        lead_cache = [leading_term(b) for b in basis]
    quotients = [MultiPoly(domain, n) for _ in basis]
    rem = MultiPoly(domain, n)
    work = f
    while not work.is_zero():
        lm, lc = leading_term(work)
        for i, (blm, blc) in enumerate(lead_cache):
            if _divides(blm, lm):
                q = MultiPoly.monomial(domain, n, _quotient_monomial(lm, blm),
                                       lc / blc)
                quotients[i] = quotients[i] + q
                work = work - q * basis[i]
                break
        else:
            t = MultiPoly.monomial(domain, n, lm, lc)
            rem = rem + t
            work = work - t
    return quotients, rem


@dataclass
class IdealCertificate:
    """Cofactors witnessing 1 = sum cofactor_i * generator_i."""

    generators: list
    cofactors: list

    def verify(self):
        """Re-verify the witness identity by direct expansion."""
        if not self.generators:
            return False
        domain = self.generators[0].domain
        n = self.generators[0].n
        acc = MultiPoly(domain, n)
        for c, g in zip(self.cofactors, self.generators):
            acc = acc + c * g
        return acc == MultiPoly.const(domain, n, 1)


@dataclass
class MembershipResult:
    """Outcome of a membership-of-1 run.

    status is one of:
      "certificate"  -- 1 is in the ideal; `certificate` re-verifies;
      "not_in_ideal" -- the basis completed with no unit, proving 1 is not
                        in the ideal;
      "exhausted"    -- the pair budget ran out before completion; nothing
                        is decided.
    """

    status: str
    certificate: IdealCertificate = None
    basis: list = field(default_factory=list)
    pairs_processed: int = 0

    @property
    def is_unit_ideal(self):
        return self.status == "certificate"


def buchberger(generators, max_pairs=50000, stop_at_unit=False):
    """Buchberger with representation tracking.

    Returns (status, entries, pairs) where entries is a list of
    (poly, representation list) and status is "done", "unit" (only when
    stop_at_unit and a constant appeared), or "exhausted".
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return "done", [], 0
    domain, n = gens[0].domain, gens[0].n
    entries = []   # (poly monic, rep list)
    for idx, g in enumerate(gens):
        _, lc = leading_term(g)
        inv = lc.inverse()
        rep = [MultiPoly(domain, n) for _ in gens]
        rep[idx] = MultiPoly.const(domain, n, inv)
        entries.append((g * inv, rep))
        if g.is_constant():
            if stop_at_unit:
                return "unit", entries, 0
    lead = [leading_term(e[0]) for e in entries]

    counter = itertools.count()
    heap = []
    def push_pairs(k):
        for i in range(k):
            lmi, lmk = lead[i][0], lead[k][0]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmk))
            # product criterion: coprime leading monomials reduce to zero
            if lcm == tuple(a + b for a, b in zip(lmi, lmk)):
                continue
            heapq.heappush(heap, (grevlex_key(lcm), next(counter), i, k))
    for k in range(len(entries)):
        push_pairs(k)

    pairs = 0
    while heap:
        if pairs >= max_pairs:
            return "exhausted", entries, pairs
        _, _, i, j = heapq.heappop(heap)
        pairs += 1
        fi, repi = entries[i]
        fj, repj = entries[j]
        lmi, _ = lead[i]
        lmj, _ = lead[j]
        lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
        mi = MultiPoly.monomial(domain, n, _quotient_monomial(lcm, lmi), 1)
        mj = MultiPoly.monomial(domain, n, _quotient_monomial(lcm, lmj), 1)
        s = mi * fi - mj * fj
        rep = [mi * a - mj * b for a, b in zip(repi, repj)]
        quotients, rem = reduce_poly(s, [e[0] for e in entries], lead)
        if rem.is_zero():
            continue
        for q, (_, brep) in zip(quotients, entries):
            if not q.is_zero():
                rep = [a - q * b for a, b in zip(rep, brep)]
        _, lc = leading_term(rem)
        inv = lc.inverse()
        rem = rem * inv
        rep = [a * inv for a in rep]
        entries.append((rem, rep))
        lead.append(leading_term(rem))
        if stop_at_unit and rem.is_constant():
            return "unit", entries, pairs
        push_pairs(len(entries) - 1)
    return "done", entries, pairs


def groebner_membership_one(generators, max_pairs=50000):
    """Decide whether 1 lies in the ideal of the generators.

    On success the certificate's cofactors re-verify by expansion.  A
    completed basis with no constant element proves 1 is not in the ideal;
    budget exhaustion is reported as its own status.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return MembershipResult(status="not_in_ideal", basis=[])
    status, entries, pairs = buchberger(gens, max_pairs=max_pairs, stop_at_unit=True)
    basis = [e[0] for e in entries]
    if status == "unit" or any(b.is_constant() and not b.is_zero() for b in basis):
        for poly, rep in entries:
            if poly.is_constant() and not poly.is_zero():
                c = poly.constant_term()
                inv = c.inverse()
                cert = IdealCertificate(generators=gens,
                                        cofactors=[r * inv for r in rep])
                if not cert.verify():
                    raise AssertionError("certificate failed re-verification")
                return MembershipResult(status="certificate", certificate=cert,
                                        basis=basis, pairs_processed=pairs)
    if status == "exhausted":
        return MembershipResult(status="exhausted", basis=basis,
                                pairs_processed=pairs)
    return MembershipResult(status="not_in_ideal", basis=basis,
                            pairs_processed=pairs)


def standard_monomial_count(basis, cap=100000):
    """Number of monomials outside the leading-term ideal, or None.

    Returns None when the ideal is not zero-dimensional (some variable has
    no pure-power leading monomial) or the count would exceed the cap.  For a
    zero-dimensional ideal this is dim_k of the quotient ring, i.e. the
    number of solutions over the algebraic closure counted with multiplicity.
    """
    if not basis:
        return None
    n = basis[0].n
    leads = [leading_term(b)[0] for b in basis if not b.is_zero()]
    bounds = [None] * n
    for lm in leads:
        nz = [i for i in range(n) if lm[i] > 0]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
        elif len(nz) == 0:
            return 0
    if any(b is None for b in bounds):
        return None
    total = 1
    for b in bounds:
        total *= b
        if total > cap:
            return None
    count = 0
    for exps in itertools.product(*[range(b) for b in bounds]):
        if not any(_divides(lm, exps) for lm in leads):
            count += 1
    return count
