"""The center of A_n(F_p) and central annihilators of cyclic modules.

Over F_p the elements x_i^p and d_i^p are central and generate a polynomial
ring; we bookkeep it with fresh variable names X_i <-> x_i^p and Xi_i <->
d_i^p.  The Weyl algebra is a free module of rank p^(2n) over this center,
with basis the monomials x^a d^b, 0 <= a_i, b_i < p; decomposing an operator
over that basis is exact exponent surgery (split every exponent as p*q + r).

The central annihilator of D/I is I itself, intersected with the center.
Two routes are provided:

* exact: present I as a submodule of Z^(p^2n) spanned by the decompositions
  of (basis monomial) * (ideal generator), then take the colon of that
  submodule into the coordinate of 1.  Certified, but the module rank grows
  as p^(2n); a size guard routes oversized inputs away.
* truncated: for rising degree d, compute by linear algebra the space of
  central polynomials of degree <= d that the ideal's normal form kills,
  and stop once the resulting ideal stabilises over a degree window.
"""

from dataclasses import dataclass
from itertools import product

from .cgb import CIdeal, FreeSubmodule, module_colon
from .errors import ExactGuardExceeded, RingMismatch
from .linalg import nullspace
from .mpoly import MPoly, PolyRing
from .orders import GrevLex
from .rings import Zmod, is_prime
from .weyl import WeylOp, is_central

_GREVLEX = GrevLex()

EXACT_GUARD = 64


def twisted_names(n):
    return tuple(f"X{i + 1}" for i in range(n)) + tuple(f"Xi{i + 1}" for i in range(n))


@dataclass(frozen=True)
class FrobeniusTwist:
    """Bookkeeping for the center of A_n(F_p) in twisted coordinates.

    Centrality of the p-th powers is verified on construction; the twisted
    polynomial ring carries names X1..Xn, Xi1..Xin over F_p.
    """

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        F = self.weyl_ring
        for i in range(self.n):
            for gen in (WeylOp.x(F, self.n, i), WeylOp.d(F, self.n, i)):
                res = is_central(gen**self.p)
                if not res.is_central:
                    raise AssertionError(
                        f"p-th power {gen}^{self.p} is not central; broken arithmetic"
                    )

    @property
    def weyl_ring(self):
        return Zmod(self.p)

    @property
    def twisted_ring(self):
        return PolyRing(Zmod(self.p), twisted_names(self.n))

    @property
    def module_rank(self):
        return self.p ** (2 * self.n)

    def basis(self):
        """The residue monomials (a, b), 0 <= entries < p, in a fixed order."""
        return [tuple(t) for t in product(range(self.p), repeat=2 * self.n)]

    def embed(self, poly):
        """A twisted polynomial as the corresponding central operator."""
        if poly.ring != self.twisted_ring:
            raise RingMismatch("polynomial is not in the twisted ring")
        terms = {
            tuple(self.p * e for e in key): c for key, c in poly.terms.items()
        }
        return WeylOp(self.weyl_ring, self.n, terms)

    def decompose(self, op):
        """Coordinates of op in the free basis over the center."""
        if op.ring != self.weyl_ring or op.n != self.n:
            raise RingMismatch("operator is not over F_p in the right arity")
        coords = {}
        for key, c in op.terms.items():
            q = tuple(e // self.p for e in key)
            r = tuple(e % self.p for e in key)
            coords.setdefault(r, {})[q] = c
        ring = self.twisted_ring
        return CentralDecomposition(
            self, {r: MPoly(ring, t) for r, t in coords.items()}
        )

    def recombine(self, dec):
        terms = {}
        for r, poly in dec.coords.items():
            for q, c in poly.terms.items():
                key = tuple(self.p * qi + ri for qi, ri in zip(q, r))
                terms[key] = c
        return WeylOp(self.weyl_ring, self.n, terms)


@dataclass(frozen=True)
class CentralDecomposition:
    """Sparse coordinates over the center: residue monomial -> twisted polynomial."""

    twist: FrobeniusTwist
    coords: dict

    def coordinate(self, residue):
        return self.coords.get(tuple(residue), self.twist.twisted_ring.zero())

    def support(self):
        return sorted(self.coords)


@dataclass(frozen=True)
class AnnihilatorResult:
    ideal: CIdeal
    status: str


def z_module_presentation(ideal, twist):
    """Columns over the center presenting the left ideal inside Z^(p^2n).

    The left ideal, viewed as a module over the center, is spanned by
    (basis monomial) * g over all residue monomials and basis generators g.
    Returns (basis list, columns), each column a tuple of twisted
    polynomials indexed like the basis list.
    """
    B = twist.basis()
    index = {b: i for i, b in enumerate(B)}
    ring = twist.twisted_ring
    zero = ring.zero()
    columns = []
    for g in ideal.groebner_basis():
        for beta in B:
            op = WeylOp.monomial(twist.weyl_ring, twist.n, beta) * g
            dec = twist.decompose(op)
            col = [zero] * len(B)
            for r, poly in dec.coords.items():
                col[index[r]] = poly
            columns.append(tuple(col))
    return B, columns


def central_annihilator_exact(ideal, twist=None, guard=EXACT_GUARD):
    """I intersect Z via the free-module colon; certified generators."""
    twist = twist or FrobeniusTwist(ideal.ring.modulus, ideal.n)
    if guard is not None and twist.module_rank > guard:
        raise ExactGuardExceeded(
            f"module rank {twist.module_rank} exceeds the guard {guard}"
        )
    ring = twist.twisted_ring
    B, columns = z_module_presentation(ideal, twist)
    if not columns:
        return AnnihilatorResult(CIdeal.of([], ring=ring), "exact")
    N = FreeSubmodule.of(columns, rank=len(B), ring=ring)
    e0 = [ring.zero()] * len(B)
    e0[B.index((0,) * (2 * twist.n))] = ring.one()
    J = module_colon(N, tuple(e0))
    return AnnihilatorResult(J, "exact")


def _ideal_equal(I, J):
    """Mutual normal-form membership of the generators."""
    return all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)


def _monomials_up_to(nvars, degree):
    """Exponent tuples of total degree <= degree, in (degree, grevlex) order."""

    def level(d):
        out = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                out.append(tuple(prefix) + (remaining,))
                return
            for e in range(remaining + 1):
                rec(prefix + [e], remaining - e, slots - 1)

        rec([], d, nvars)
        out.sort(key=_GREVLEX.key)
        return out

    monos = []
    for d in range(degree + 1):
        monos.extend(level(d))
    return monos


def truncated_kernel(ideal, twist, degree):
    """Basis of {z central, deg <= degree : z acts as 0 on D/I}.

    left_nf is linear over F_p, so the kernel drops out of one nullspace
    computation over the normal forms of the embedded monomial basis.
    """
    ring = twist.twisted_ring
    monos = _monomials_up_to(2 * twist.n, degree)
    nfs = []
    support = {}
    for e in monos:
        z = MPoly(ring, {e: ring.coeffs.one()})
        nf = ideal.normal_form(twist.embed(z))
        nfs.append(nf)
        for key in nf.terms:
            support.setdefault(key, len(support))
    rows = [[ring.coeffs.zero()] * len(monos) for _ in range(len(support))]
    for j, nf in enumerate(nfs):
        for key, c in nf.terms.items():
            rows[support[key]][j] = c
    if not support:
        # every monomial normal-forms to zero: the whole degree block is killed
        return [MPoly(ring, {e: ring.coeffs.one()}) for e in monos]
    kernel = nullspace(rows, ring.coeffs)
    polys = []
    for v in kernel:
        terms = {e: c for e, c in zip(monos, v) if not ring.coeffs.is_zero(c)}
        polys.append(MPoly(ring, terms))
    return polys


def central_annihilator_truncated(ideal, twist=None, max_degree=None, window=2):
    """Degree-truncated central annihilator with a stabilisation certificate.

    Returns the kernel ideal at the first degree d whose ideal equals the one
    at d + window (status "stabilized(d)"), else the ideal at max_degree
    (status "truncated(max_degree)").  Kernels grow monotonically with the
    degree, so a window of equality certifies the plateau seen so far.
    """
    twist = twist or FrobeniusTwist(ideal.ring.modulus, ideal.n)
    if max_degree is None:
        max_degree = 2 * twist.p
    ring = twist.twisted_ring
    candidates = {}
    for d in range(1, max_degree + 1):
        J = CIdeal.of(truncated_kernel(ideal, twist, d), ring=ring)
        J.groebner_basis()
        candidates[d] = J
        back = d - window
        if back >= 1 and _ideal_equal(candidates[back], J):
            return AnnihilatorResult(candidates[back], f"stabilized({back})")
    return AnnihilatorResult(candidates[max_degree], f"truncated({max_degree})")


def central_annihilator(ideal, twist=None, guard=EXACT_GUARD, max_degree=None, window=2):
    """Route to the exact method within the size guard, else the truncated one."""
    twist = twist or FrobeniusTwist(ideal.ring.modulus, ideal.n)
    if twist.module_rank <= guard:
        return central_annihilator_exact(ideal, twist, guard)
    return central_annihilator_truncated(ideal, twist, max_degree, window)
