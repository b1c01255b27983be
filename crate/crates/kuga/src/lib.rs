//! Exact certificates for fiber spaces of abelian varieties over curves
//! uniformized by the upper half plane.
//!
//! The data of such a family is a tuple: generators of a Fuchsian group
//! acting on the base, a representation acting on the fibers, a lattice of
//! real `g x 2` matrices cutting out each fiber torus, and a symmetric
//! positive matrix `S` whose associated pairing `E(alpha, beta) =
//! tr(alpha^t S beta J)` polarizes the fibers.  The crate builds this data
//! from orders in indefinite division quaternion algebras (compact base)
//! and from shear groups in the split algebra (modular, non-compact base),
//! then certifies, exactly wherever the inputs stay inside one real
//! quadratic field and by validated interval arithmetic otherwise:
//!
//! * the structural axioms: `S` symmetric positive definite, the
//!   representation `S`-orthogonal, the lattice of full rank and preserved
//!   by the group with unimodular transport, `E` integral on the lattice;
//! * the two torus conditions at a base point `tau`: invariance of `E`
//!   under the complex structure and positivity of the induced Hermitian
//!   form;
//! * period matrices in Frobenius form with their two period relations;
//! * the isomorphism between the fibers at `tau` and at `gamma tau`;
//! * the trace identity tying `E` to quaternion multiplication, and
//!   commutation of quaternionic endomorphisms with the group action;
//! * the two-sided action of a pair of unit quaternions as a rotation of
//!   four-space, through the tensor decomposition of the definite algebra
//!   with itself.
//!
//! Every check reports into a [`CertificateReport`] whose entries carry a
//! deterministic name and, on failure, a witness naming the violated value.

mod data;
mod elliptic;
mod error;
mod false_elliptic;
mod fiber;
mod form;
mod fuchsian;
mod group;
mod numeric;
mod product;
mod report;
mod riemann;
mod structure;
mod tensor;
mod zlattice;

pub use data::{check_kuga_data, flatten_real_matrix, KugaData};
pub use elliptic::{build_elliptic_family, split_matrix_order};
pub use error::KugaError;
pub use false_elliptic::{
    build_false_elliptic, endomorphism_commutation, shimura_form_identity, BuildOutcome,
    ScaleChoice,
};
pub use fiber::{
    evaluate_generator, fiber_isomorphism, fiber_lattice, period_matrix, FiberIso, FiberLattice,
    PeriodData,
};
pub use form::{e_gram, j2, symplectic_form_e, symplectic_form_e_rational};
pub use fuchsian::{
    apply_real_matrix, complexify, real_times_complex, require_upper_half, FuchsianElement,
};
pub use group::{gamma_lambda, identity_element, GammaLambdaElement};
pub use numeric::{dyadic_exponent, width_label, IntervalMatrix};
pub use product::fiber_product_data;
pub use report::{CertificateReport, CheckEntry, Status};
pub use riemann::riemann_conditions;
pub use structure::{complex_structure, ComplexStructureAtTau};
pub use tensor::{h_tensor_h_iso, su2su2_to_so4, tensor_image};
pub use zlattice::{integral_coordinates, ZLattice};
