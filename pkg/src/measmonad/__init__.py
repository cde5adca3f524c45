"""Exact finitely supported signed measures, the measure monad, and the
vector-valued integrals carried by its algebras."""

from .em_algebra import (
    Algebra,
    barycenter,
    check_algebra_laws,
    check_convexity,
    check_homomorphism,
    check_integration_linearity,
    check_vector_space_axioms,
    derived_add,
    derived_smul,
    free_algebra,
    integrate,
    lift,
    real_algebra,
    vector_algebra,
)
from .errors import (
    BornologyViolation,
    KindMismatch,
    NotAProbabilityMeasure,
    SpaceMismatch,
    SupportViolation,
)
from .laws import LawFailure, LawReport
from .monad import (
    FormalLinComb,
    check_monad_laws,
    check_monad_morphism,
    check_naturality,
    delta_embed,
    dirac,
    evaluation_morphism,
    flatten_formal,
    formal_map,
    functor,
    kappa,
    lift_real,
    map_measure,
    multiplication_morphism,
    unit_formal,
    unit_morphism,
)
from .pettis import (
    Functional,
    check_pettis_algebra,
    enough_pettis_equivalence_check,
    pettis_algebra,
    pettis_integral,
    verify_pettis,
)
from .signed_measure import (
    JordanDecomposition,
    SignedMeasure,
    SimpleFunction,
    add,
    evaluate,
    extend,
    from_atoms,
    integrate_real,
    jordan_hahn,
    pushforward,
    restrict,
    scale,
    simple_approximation,
    total_variation,
    zero_measure,
)
from .spaces import (
    BoundedSet,
    Box,
    FiniteLabeled,
    FiniteSet,
    FormalSpace,
    IntegerLine,
    Interval,
    MeasureBall,
    MeasureSpace,
    Morphism,
    ProductSpace,
    RationalLine,
    RationalVector,
    Space,
    Subspace,
    characteristic_morphism,
    identity,
    is_bounded_member,
    make_morphism,
    make_space,
    point_space,
    product_space,
    projection,
)

__version__ = "0.1.0"
