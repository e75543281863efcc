"""Brackets on the twisted cotangent ring and coisotropy of ideals.

Two brackets are implemented on F_p[X_1..X_n, Xi_1..Xi_n]:

* the canonical symplectic bracket with {Xi_i, X_j} = delta_ij;
* the deformation bracket: lift both arguments to central operators of the
  Weyl algebra over Z/p^2 (coefficients lifted to [0, p), variables to
  x^p, d^p), take the commutator, and divide by p.

The two agree up to the single global sign -1, which is pinned here and
re-verified by the property suite.
"""

from dataclasses import dataclass
from collections import namedtuple

from .cgb import radical_member
from .errors import NotDeformationDivisible, RingMismatch
from .center import FrobeniusTwist
from .rings import Zmod
from .weyl import WeylOp

DEFORMATION_SIGN = -1


def canonical_bracket(f, g):
    """{f, g} = sum_i (df/dXi_i dg/dX_i - df/dX_i dg/dXi_i) on the twisted ring."""
    if f.ring != g.ring:
        raise RingMismatch("bracket arguments live in different rings")
    if f.ring.nvars % 2 != 0:
        raise ValueError("twisted ring must have an even number of variables")
    n = f.ring.nvars // 2
    out = f.ring.zero()
    for i in range(n):
        out = out + f.partial(n + i) * g.partial(i) - f.partial(i) * g.partial(n + i)
    return out


def _lift_central(poly, twist, ring2):
    """Twisted polynomial -> central operator over Z/p^2 via [0, p) representatives."""
    terms = {}
    for key, c in poly.terms.items():
        big = tuple(twist.p * e for e in key)
        terms[big] = c % twist.p  # already in [0, p); kept explicit
    return WeylOp(ring2, twist.n, terms)


def deformation_bracket(f, g, twist=None):
    """Bracket induced by the Z/p^2 lift: commutator of lifts, divided by p."""
    if f.ring != g.ring:
        raise RingMismatch("bracket arguments live in different rings")
    p = f.ring.coeffs.modulus
    twist = twist or FrobeniusTwist(p, f.ring.nvars // 2)
    if f.ring != twist.twisted_ring:
        raise RingMismatch("arguments are not in the twisted ring of this twist")
    ring2 = Zmod(p * p)
    comm = _lift_central(f, twist, ring2).commutator(_lift_central(g, twist, ring2))
    Fp = twist.weyl_ring
    terms = {}
    for key, c in comm.terms.items():
        if c % p != 0:
            raise NotDeformationDivisible(
                f"commutator coefficient {c} at {key} is not divisible by {p}"
            )
        c = (c // p) % p
        if c:
            terms[key] = c
    quotient = WeylOp(Fp, twist.n, terms)
    dec = twist.decompose(quotient)
    zero_res = (0,) * (2 * twist.n)
    for r in dec.coords:
        if r != zero_res:
            raise NotDeformationDivisible(
                "commutator of central lifts is not central mod p"
            )
    return dec.coordinate(zero_res)


@dataclass(frozen=True)
class BracketContext:
    """A twist plus the pinned sign relating the two brackets."""

    twist: FrobeniusTwist
    sign: int = DEFORMATION_SIGN

    def canonical(self, f, g):
        return canonical_bracket(f, g)

    def deformation(self, f, g):
        return deformation_bracket(f, g, self.twist)

    def signs_match(self, f, g):
        """Whether deformation = sign * canonical holds on this pair."""
        lhs = self.deformation(f, g)
        rhs = canonical_bracket(f, g).scale(
            self.twist.twisted_ring.coeffs.from_int(self.sign)
        )
        return lhs == rhs


CoisotropyVerdict = namedtuple("CoisotropyVerdict", "ok pair bracket_value")


def coisotropy_check(ideal, bracket=canonical_bracket):
    """Whether {g_i, g_j} lies in rad(ideal) for all generator pairs.

    By the Leibniz rule this certifies {J, J} inside rad(J) for the ideal J
    generated by the supplied generators.  On failure the offending pair and
    bracket value are returned.
    """
    gens = list(ideal.gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            val = bracket(gens[i], gens[j])
            if val.is_zero():
                continue
            if not radical_member(val, ideal):
                return CoisotropyVerdict(False, (gens[i], gens[j]), val)
    return CoisotropyVerdict(True, None, None)
