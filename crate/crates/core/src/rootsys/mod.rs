//! Root systems, Weyl groups, diagram twists and subsystems.

mod cartan;
mod classical;
mod datum;
mod intmat;
mod recognize;
mod subsystem;
mod weyl;

pub use cartan::{diagram_twist, gram_matrix, CartanLabel, Series};
pub use classical::{e_basis, parse_signed_word};
pub use datum::RootDatum;
pub use intmat::IntMat;
pub use recognize::{recognize_type, torus_factor, LeviType};
pub use subsystem::{
    centralizer_of_vector, closure, is_closed, levi_closure, parabolic_from_vector, span_of, standard_levi,
    SubsystemHandle,
};
pub use weyl::{diagram_matrix, dominant_walk, longest_element, TwistedElement, WeylElement};
