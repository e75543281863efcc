"""Exact computation of p-supports of cyclic modules over the Weyl algebra.

The package reduces a cyclic module over A_n(Q) modulo a prime, intersects
the resulting left ideal with the large center of A_n(F_p), and reports the
geometry of that central annihilator on the twisted cotangent space:
dimension, coisotropy for the canonical symplectic bracket, the Lagrangian
verdict, conicality, and generic fiber ranks, alongside the classical
characteristic variety over Q for comparison.
"""

from .cgb import (
    CIdeal,
    FreeSubmodule,
    buchberger,
    krull_dim,
    module_colon,
    normal_form,
    radical_member,
    syzygies,
)
from .center import (
    AnnihilatorResult,
    CentralDecomposition,
    FrobeniusTwist,
    central_annihilator,
    central_annihilator_exact,
    central_annihilator_truncated,
    twisted_names,
    z_module_presentation,
)
from .corpus import CorpusEntry, load_corpus, run_corpus
from .errors import (
    BadPrime,
    DimensionMismatch,
    DivisionByZero,
    EmptySupport,
    ExactGuardExceeded,
    IndexOutOfRange,
    MixedAlphabets,
    NoPointsFound,
    NonGlobalOrder,
    NotAField,
    NotDeformationDivisible,
    NotUnit,
    ParseError,
    PweylError,
    RingMismatch,
    ZeroInput,
)
from .mpoly import MPoly, PolyRing
from .orders import (
    BlockElimination,
    GrevLex,
    Lex,
    PositionOverTerm,
    TermOverPosition,
    Weighted,
)
from .parser import parse_operator, parse_twisted, parse_weyl
from .poisson import (
    BracketContext,
    canonical_bracket,
    coisotropy_check,
    deformation_bracket,
)
from .psupport import (
    CharVariety,
    DModuleSpec,
    SpecializationContext,
    SupportReport,
    characteristic_variety,
    dilate_fiber,
    generic_rank,
    is_conical,
    p_support,
    specialize_mod_p,
)
from .rings import QQ, GaloisField, Rationals, Zmod, coeff_inv, extension_field, is_prime
from .weyl import WeylOp, is_central, weyl_commutator, weyl_mul, weyl_pow
from .wgb import LeftIdeal, initial_weighted, left_groebner, left_nf

__version__ = "0.1.0"
