"""Sparse multivariate polynomials over an exact coefficient ring.

Terms are stored as a dict mapping exponent tuples to nonzero coefficient
payloads.  Instances are immutable by convention: no method mutates ``terms``
after construction, so values are safe to share and to use as dict keys.
"""

from dataclasses import dataclass

from .errors import RingMismatch
from .orders import GrevLex, monomial_mul

_GREVLEX = GrevLex()


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring description: coefficient ring plus ordered variable names."""

    coeffs: object
    names: tuple

    @property
    def nvars(self):
        return len(self.names)

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.constant(self.coeffs.one())

    def constant(self, c):
        if self.coeffs.is_zero(c):
            return MPoly(self, {})
        return MPoly(self, {(0,) * self.nvars: c})

    def gen(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} outside 0..{self.nvars - 1}")
        e = [0] * self.nvars
        e[i] = 1
        return MPoly(self, {tuple(e): self.coeffs.one()})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def from_terms(self, items):
        """Build from (exponent tuple, coefficient) pairs, merging duplicates."""
        terms = {}
        for e, c in items:
            if len(e) != self.nvars:
                raise ValueError(f"exponent tuple {e} has wrong length")
            acc = terms.get(e)
            c = self.coeffs.add(acc, c) if acc is not None else c
            if self.coeffs.is_zero(c):
                terms.pop(e, None)
            else:
                terms[e] = c
        return MPoly(self, terms)


class MPoly:
    """A sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.coeffs.zero())

    def total_degree(self):
        """Maximum term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"polynomial rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        R = self.ring.coeffs
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            c = R.add(acc, c) if acc is not None else c
            if R.is_zero(c):
                out.pop(e, None)
            else:
                out[e] = c
        return MPoly(self.ring, out)

    def __neg__(self):
        R = self.ring.coeffs
        return MPoly(self.ring, {e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        R = self.ring.coeffs
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                c = R.mul(c1, c2)
                acc = out.get(e)
                c = R.add(acc, c) if acc is not None else c
                if R.is_zero(c):
                    out.pop(e, None)
                else:
                    out[e] = c
        return MPoly(self.ring, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        R = self.ring.coeffs
        if R.is_zero(c):
            return self.ring.zero()
        return MPoly(self.ring, {e: R.mul(c, v) for e, v in self.terms.items()})

    def term_mul(self, expo, coeff):
        """Multiply by the single term coeff * x^expo."""
        R = self.ring.coeffs
        if R.is_zero(coeff):
            return self.ring.zero()
        return MPoly(
            self.ring,
            {monomial_mul(e, expo): R.mul(coeff, c) for e, c in self.terms.items()},
        )

    def partial(self, i):
        """Formal partial derivative in variable i (exponent times coefficient)."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} outside 0..{self.ring.nvars - 1}")
        R = self.ring.coeffs
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            nc = R.mul(c, R.from_int(e[i]))
            if R.is_zero(nc):
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = nc
        return MPoly(self.ring, out)

    def leading(self, order=_GREVLEX):
        """(exponent, coefficient) of the largest term; ValueError on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order=_GREVLEX, reverse=True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def map_coeffs(self, fn, new_coeffs):
        """Apply fn to every coefficient, landing in the ring new_coeffs."""
        ring = PolyRing(new_coeffs, self.ring.names)
        out = {}
        for e, c in self.terms.items():
            nc = fn(c)
            if not new_coeffs.is_zero(nc):
                out[e] = nc
        return MPoly(ring, out)

    def evaluate(self, point, target):
        """Evaluate at a point with coordinates in the ring ``target``.

        Coefficients are embedded through target.from_base, so this supports
        evaluation of an F_p polynomial at a point over GF(p^k).
        """
        if len(point) != self.ring.nvars:
            raise ValueError("point arity differs from variable count")
        acc = target.zero()
        for e, c in self.terms.items():
            val = target.from_base(c)
            for xi, ei in zip(point, e):
                if ei:
                    pw = xi
                    for _ in range(ei - 1):
                        pw = target.mul(pw, xi)
                    val = target.mul(val, pw)
            acc = target.add(acc, val)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def format(self, symmetric=True):
        return format_terms(
            self.ring.coeffs, self.ring.names, self.sorted_terms(), symmetric
        )

    def __str__(self):
        return self.format(symmetric=True)

    def __repr__(self):
        return f"MPoly({self})"


def format_terms(coeff_ring, names, sorted_items, symmetric=True):
    """Render sorted (exponent, coeff) pairs in the surface syntax.

    Coefficients print through the ring; with symmetric=True, Z/m residues
    above m/2 print as negative integers, which reads naturally and reparses
    to the same element.
    """
    if not sorted_items:
        return "0"
    pieces = []
    for e, c in sorted_items:
        cs = coeff_ring.format_value(c, symmetric=symmetric)
        negative = cs.startswith("-")
        mag = cs[1:] if negative else cs
        vars_part = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(names, e) if k
        )
        if not vars_part:
            body = mag
        elif mag == "1":
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        pieces.append((negative, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out
