pub mod bounds;
pub mod constructions;
pub mod hilbert;
pub mod inverse;
pub mod linalg;
pub mod monomial;
pub mod wlp;
pub mod verify;
pub mod witness;
