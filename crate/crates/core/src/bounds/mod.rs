//! Lower bounds, maximality certificates and explicit families of maximal
//! lower bounds.

mod certificate;
mod constrained;
mod pair;
mod stott;

pub(crate) use certificate::require_lower_bound;
pub use certificate::{certify_maximal, is_extreme_certified, is_lower_bound, MaximalityCertificate};
pub use constrained::{constrained_at_vector, maximal_in_lu, ConstrainedBounds};
pub(crate) use pair::invert_checked;
pub use pair::{mlb_mt, normalize_pair, signature_matrix, PairNormalization};
pub use stott::{stott_mx, stott_recover_x, StottParam};
