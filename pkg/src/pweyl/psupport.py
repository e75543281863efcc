"""From a cyclic D-module presentation to its support report mod p.

The pipeline reduces rational generators mod p, computes a left Groebner
basis, intersects the ideal with the center (exact route within the size
guard, degree-truncated route beyond), and then interrogates the resulting
ideal in the twisted cotangent ring: dimension, coisotropy under the
canonical bracket, the middle-dimension verdict, conicality for the fiber
dilation, and the generic fiber rank from sampled points of the variety.
For comparison the characteristic-zero symbol ideal of the same presentation
is available as well.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import random

from .cgb import CIdeal, krull_dim, radical_member
from .center import (
    EXACT_GUARD,
    FrobeniusTwist,
    central_annihilator_exact,
    central_annihilator_truncated,
    z_module_presentation,
)
from .errors import (
    BadPrime,
    EmptySupport,
    ExactGuardExceeded,
    NoPointsFound,
    RingMismatch,
)
from .linalg import rank as matrix_rank
from .mpoly import MPoly, PolyRing
from .orders import GrevLex, Weighted
from .poisson import canonical_bracket, coisotropy_check
from .rings import QQ, Zmod, extension_field, is_prime
from .weyl import WeylOp
from .wgb import LeftIdeal, initial_weighted

_GREVLEX = GrevLex()

EXHAUSTIVE_POINT_LIMIT = 10_000
RANDOM_POINT_BUDGET = 200


@dataclass(frozen=True)
class DModuleSpec:
    """A cyclic module D/I given by left ideal generators over Q or F_p."""

    n: int
    generators: tuple
    name: str = None

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        ring = self.generators[0].ring
        for g in self.generators:
            if g.is_zero():
                raise ValueError("zero generator in module presentation")
            if g.n != self.n:
                raise ValueError("generator arity differs from n")
            if g.ring != ring:
                raise RingMismatch("generators over mixed coefficient rings")

    @property
    def ring(self):
        return self.generators[0].ring


@dataclass(frozen=True)
class SpecializationContext:
    """Which prime is being used and whether the presentation survives it."""

    prime: int
    denominators: frozenset
    good: bool

    @classmethod
    def analyze(cls, spec, p):
        dens = set()
        if spec.ring == QQ:
            for g in spec.generators:
                for c in g.terms.values():
                    dens.add(Fraction(c).denominator)
        dens.discard(1)
        good = all(d % p != 0 for d in dens)
        return cls(p, frozenset(dens), good)


def specialize_mod_p(spec, p):
    """Coefficientwise reduction of the presentation into A_n(F_p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    F = Zmod(p)
    if spec.ring == F:
        gens = list(spec.generators)
    elif spec.ring == QQ:
        gens = []
        for g in spec.generators:
            terms = {}
            for key, c in g.terms.items():
                c = Fraction(c)
                if c.denominator % p == 0:
                    raise BadPrime(p, c.denominator)
                v = F.from_fraction(c)
                if v:
                    terms[key] = v
            gens.append(WeylOp(F, spec.n, terms))
    else:
        raise RingMismatch(f"cannot specialize coefficients in {spec.ring} to F_{p}")
    gens = [g for g in gens if not g.is_zero()]
    return LeftIdeal.of(gens, ring=F, n=spec.n)


# ---------------------------------------------------------------------------
# conicality
# ---------------------------------------------------------------------------


def fiber_weight_parts(poly):
    """Split into homogeneous parts for the weight (0 on X, 1 on Xi)."""
    n = poly.ring.nvars // 2
    buckets = {}
    for e, c in poly.terms.items():
        buckets.setdefault(sum(e[n:]), {})[e] = c
    return [MPoly(poly.ring, t) for _, t in sorted(buckets.items())]


def dilate_fiber(poly, t):
    """Substitute Xi_i -> t * Xi_i for a scalar t of the coefficient ring."""
    R = poly.ring.coeffs
    n = poly.ring.nvars // 2
    out = {}
    for e, c in poly.terms.items():
        w = sum(e[n:])
        factor = R.one()
        for _ in range(w):
            factor = R.mul(factor, t)
        c = R.mul(c, factor)
        if not R.is_zero(c):
            out[e] = c
    return MPoly(poly.ring, out)


def is_conical(ideal):
    """Whether rad(J) is stable under scaling the fiber variables.

    Each reduced-basis element is split into fiber-weight homogeneous parts;
    the radical is dilation-stable iff every part lies back in rad(J).
    """
    basis = ideal.groebner_basis()
    for g in basis:
        parts = fiber_weight_parts(g)
        if len(parts) == 1:
            continue
        for part in parts:
            if not radical_member(part, ideal):
                return False
    return True


# ---------------------------------------------------------------------------
# generic rank via point sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankSample:
    point: tuple
    degree: int  # extension degree k of the residue field F_(p^k)
    jacobian_rank: int
    fiber_dim: int

    def to_dict(self, field_ring):
        return {
            "point": [field_ring.format_value(c) for c in self.point],
            "field": f"GF({field_ring.characteristic}^{self.degree})"
            if self.degree > 1
            else f"GF({field_ring.characteristic})",
            "jacobian_rank": self.jacobian_rank,
            "fiber_dim": self.fiber_dim,
        }


@dataclass(frozen=True)
class RankResult:
    value: int
    samples: tuple
    sample_dicts: tuple
    agreement: bool


def _points_on_variety(basis, nvars, p, k, rng):
    """F_(p^k)-rational points where every basis element vanishes."""
    K = extension_field(p, k)
    space = K.size**nvars
    points = []
    if space <= EXHAUSTIVE_POINT_LIMIT:
        for idx in range(space):
            pt = []
            rest = idx
            for _ in range(nvars):
                pt.append(K.element_from_index(rest % K.size))
                rest //= K.size
            pt = tuple(pt)
            if all(K.is_zero(g.evaluate(pt, K)) for g in basis):
                points.append(pt)
    else:
        seen = set()
        for _ in range(RANDOM_POINT_BUDGET):
            pt = tuple(K.element_from_index(rng.randrange(K.size)) for _ in range(nvars))
            if pt in seen:
                continue
            seen.add(pt)
            if all(K.is_zero(g.evaluate(pt, K)) for g in basis):
                points.append(pt)
    return K, points


def generic_rank(ideal, twist, annihilator, attempts=5, seed=0, guard=EXACT_GUARD):
    """Modal fiber dimension of D/I over sampled points of the support.

    Points are drawn over F_(p^k), k = 1..3, preferring those where the
    Jacobian of the annihilator's basis reaches its maximal observed rank
    (the smooth locus of the top-dimensional components).  The fiber at a
    point is the cokernel of the evaluated center-module presentation.
    """
    if annihilator.is_unit_ideal():
        raise EmptySupport("unit annihilator: the support is empty")
    if twist.module_rank > guard:
        raise ExactGuardExceeded(
            f"rank computation needs the exact presentation (rank {twist.module_rank})"
        )
    basis = annihilator.groebner_basis()
    nvars = 2 * twist.n
    B, columns = z_module_presentation(ideal, twist)
    rng = random.Random(seed)

    jac = [[g.partial(v) for v in range(nvars)] for g in basis]

    def jacobian_rank(K, pt):
        rows = [[entry.evaluate(pt, K) for entry in row] for row in jac]
        return matrix_rank(rows, K) if rows else 0

    # extend the field until enough points attain the maximal observed
    # Jacobian rank (the smooth locus of the top-dimensional components)
    ranked = []
    for k in (1, 2, 3):
        K, pts = _points_on_variety(basis, nvars, twist.p, k, rng)
        ranked.extend((jacobian_rank(K, pt), k, K, pt) for pt in pts)
        if ranked:
            top = max(r for r, _, _, _ in ranked)
            if sum(1 for r, _, _, _ in ranked if r == top) >= attempts:
                break
    if not ranked:
        raise NoPointsFound("no points of the support over F_(p^k), k <= 3")

    top = max(r for r, _, _, _ in ranked)
    preferred = [item for item in ranked if item[0] == top]
    chosen = preferred[:attempts]

    samples = []
    dicts = []
    for jr, k, K, pt in chosen:
        rows = [[poly.evaluate(pt, K) for poly in col] for col in columns]
        fiber = len(B) - (matrix_rank(rows, K) if rows else 0)
        s = RankSample(pt, k, jr, fiber)
        samples.append(s)
        dicts.append(s.to_dict(K))
    counts = Counter(s.fiber_dim for s in samples)
    best = max(counts.values())
    modal = min(v for v, c in counts.items() if c == best)
    return RankResult(modal, tuple(samples), tuple(dicts), len(counts) == 1)


# ---------------------------------------------------------------------------
# characteristic-zero comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharVariety:
    ideal: CIdeal
    dimension: int
    holonomic: bool


def characteristic_variety(spec):
    """Symbol ideal of the order filtration over Q, with its dimension.

    The left basis is computed under a (0 on x, 1 on d)-weight-refined
    order, making the initial forms of the basis generate the symbol ideal.
    """
    if spec.ring != QQ:
        raise RingMismatch("characteristic variety expects rational coefficients")
    n = spec.n
    weights = (0,) * n + (1,) * n
    ideal = LeftIdeal.of(list(spec.generators), Weighted(weights))
    names = tuple(f"x{i + 1}" for i in range(n)) + tuple(f"xi{i + 1}" for i in range(n))
    ring = PolyRing(QQ, names)
    symbols = [initial_weighted(g, ring) for g in ideal.groebner_basis()]
    C = CIdeal.of(symbols, ring=ring)
    C.groebner_basis()
    dim = krull_dim(C)
    return CharVariety(C, dim, dim == n)


# ---------------------------------------------------------------------------
# the report
# ---------------------------------------------------------------------------

REPORT_SCHEMA = "pweyl-report-v1"


@dataclass(frozen=True)
class SupportReport:
    name: str
    prime: int
    n: int
    annihilator: tuple
    annihilator_status: str
    dimension: int
    coisotropic: bool
    coisotropy_witness: dict
    lagrangian: bool
    conical: bool
    generic_rank: int
    rank_samples: tuple
    notes: tuple

    def to_dict(self):
        return {
            "schema": REPORT_SCHEMA,
            "name": self.name,
            "prime": self.prime,
            "n": self.n,
            "annihilator": list(self.annihilator),
            "annihilator_status": self.annihilator_status,
            "dimension": self.dimension,
            "coisotropic": self.coisotropic,
            "coisotropy_witness": self.coisotropy_witness,
            "lagrangian": self.lagrangian,
            "conical": self.conical,
            "generic_rank": self.generic_rank,
            "rank_samples": [dict(s) for s in self.rank_samples],
            "notes": list(self.notes),
        }


def p_support(
    spec,
    p,
    attempts=5,
    seed=0,
    compute_rank=True,
    method="auto",
    guard=EXACT_GUARD,
    max_degree=None,
    window=2,
):
    """Full support verdict for one presentation at one prime."""
    ideal = specialize_mod_p(spec, p)
    twist = FrobeniusTwist(p, spec.n)
    notes = ["dimension is the top dimension only; equidimensionality not checked"]

    if method == "exact" or (method == "auto" and twist.module_rank <= guard):
        result = central_annihilator_exact(ideal, twist, guard=None)
        exact_route = True
    elif method in ("auto", "truncated"):
        result = central_annihilator_truncated(ideal, twist, max_degree, window)
        exact_route = False
        notes.append("central annihilator from the degree-truncated method")
    else:
        raise ValueError(f"unknown method {method!r}")
    ann = result.ideal

    ann_strings = tuple(str(g) for g in ann.groebner_basis())
    if ann.is_unit_ideal():
        notes.append("unit annihilator: empty support")
        return SupportReport(
            name=spec.name,
            prime=p,
            n=spec.n,
            annihilator=ann_strings,
            annihilator_status=result.status,
            dimension=-1,
            coisotropic=True,
            coisotropy_witness=None,
            lagrangian=False,
            conical=True,
            generic_rank=None,
            rank_samples=(),
            notes=tuple(notes),
        )

    dim = krull_dim(ann)
    verdict = coisotropy_check(ann, canonical_bracket)
    witness = None
    if not verdict.ok:
        witness = {
            "pair": [str(verdict.pair[0]), str(verdict.pair[1])],
            "bracket": str(verdict.bracket_value),
        }
    conical = is_conical(ann)
    lagr = (dim == spec.n) and verdict.ok

    rank_value = None
    rank_samples = ()
    if compute_rank:
        if not exact_route or twist.module_rank > guard:
            notes.append("generic rank unavailable: exact presentation exceeds guard")
        else:
            try:
                rr = generic_rank(ideal, twist, ann, attempts=attempts, seed=seed)
                rank_value = rr.value
                rank_samples = rr.sample_dicts
                if not rr.agreement:
                    notes.append("sampled fiber dimensions disagree; modal value reported")
            except NoPointsFound:
                notes.append("generic rank unavailable: no points found over F_(p^k), k <= 3")
    else:
        notes.append("generic rank not requested")

    return SupportReport(
        name=spec.name,
        prime=p,
        n=spec.n,
        annihilator=ann_strings,
        annihilator_status=result.status,
        dimension=dim,
        coisotropic=verdict.ok,
        coisotropy_witness=witness,
        lagrangian=lagr,
        conical=conical,
        generic_rank=rank_value,
        rank_samples=rank_samples,
        notes=tuple(notes),
    )
