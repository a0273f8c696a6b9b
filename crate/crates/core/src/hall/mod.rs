//! Nilpotent representations of the cyclic quiver over prime fields, Hall
//! numbers and polynomials, the Hall algebra in its PBW basis, canonical
//! bases at small weight and decomposition rows.

pub mod algebra;
pub mod canonical;
pub mod count;
pub mod laurent;
pub mod linalg;
pub mod quiver;

pub use algebra::{hall_product, m_form, monomial_to_pbw, orbit_dim, rho_on_hall, PBWVector, Word};
pub use canonical::{canonical_basis, canonical_element, decomposition_row, monomial_rank, CanonicalConfig, CanonicalElement};
pub use count::{hall_number, hall_number_with, hall_polynomial, hall_polynomial_with, HallConfig, HallPolynomial};
pub use laurent::LaurentPoly;
pub use quiver::{build_rep, dim_orbit, QuiverRep, RankTable};
