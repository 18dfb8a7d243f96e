pub mod analysis;
pub mod catalog;
pub mod cryptosystem;
pub mod decoder;
pub mod error;
pub mod galois;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod polyring;
pub mod qtcode;
pub mod sample;
pub mod twistulant;

pub use error::{Error, Result};
pub use galois::{find_splitting_data, FieldElement, FieldSpec, GaloisField, Gf, SplittingData};
pub use linalg::Matrix;
pub use polyring::{constashift, phi, phi_inv, ring_mul, Poly, QuotientPolyVector};
pub use qtcode::{BoundParams, BoundSearch, Distance, EigenData, Eigencode, GroebnerGenMatrix, HtBound, QtCode};
pub use decoder::{decode, DecodeOutcome, Decoded, DecoderConfig};
pub use twistulant::{standard_form, validate_h_conditions, ParityCheckMatrix, TwistulantMatrix};
pub use oracle::OracleBudget;
