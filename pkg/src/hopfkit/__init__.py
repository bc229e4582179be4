"""hopfkit: exact computer algebra for finite-dimensional Hopf symmetry.

Computes Hopf images of coactions, decides inner-faithfulness, verifies
Hopf–Galois / quantum-principal-bundle conditions with covariant first-order
calculi, and reduces bundles to effective quantum symmetry, all in exact
arithmetic over Q or a prime field.
"""

from .fields import Fp, PrimeField, QQ, RationalField
from .exactcore import (
    DenseMatrix,
    Subspace,
    TensorIndex,
    kernel,
    preimage_subspace,
    quotient_space,
    rref,
    subspace_intersect,
    subspace_sum,
    subspace_tensor,
)
from .algebra import (
    Algebra,
    AlgebraMorphism,
    check_algebra,
    identity_morphism,
    is_algebra_morphism,
    is_two_sided_ideal,
    quotient_algebra,
    tensor_algebra,
)
from .hopf import (
    HopfAlgebra,
    HopfSubalgebra,
    adjoint_coaction,
    check_hopf,
    coalgebra_closure,
    counit_kernel,
    dual_hopf,
    full_hopf_subalgebra,
    hopf_subalgebra_closure,
    is_cosemisimple,
    tensor_hopf,
)
from .coaction import (
    Coaction,
    Factorization,
    check_coaction,
    coefficient_space,
    coinvariants,
    conjugate_coaction,
    coproduct_coaction,
    factors_through,
    hopf_image,
    is_inner_faithful,
    tensor_coaction,
    trivial_coaction,
)
from .galois import (
    Bundle,
    balanced_tensor,
    canonical_map,
    check_covariant_calculus,
    check_qpb,
    stable_ideal_identities,
    universal_calculus,
    ver_map,
)
from .reduction import (
    BundleMorphism,
    ReducedBundle,
    bundles_equivalent,
    check_bundle_morphism,
    compose_bundle_morphisms,
    hopf_image_reduction,
    identity_bundle_morphism,
    largest_stable_ideal_within,
    quotient_coaction,
    reduce_morphism,
    rigidity_embedding,
)
from . import catalog
from .errors import (
    DimensionError,
    DocumentError,
    HopfkitError,
    NotAnIdealError,
    NotStableError,
    PreconditionError,
    UnsupportedFieldError,
)

__version__ = "0.1.0"
