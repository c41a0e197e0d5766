//! Combinatorics of the extended affine Weyl group of `Res GL_n`, Serre
//! weights and their lowest alcove presentations, Deligne-Lusztig
//! presentations, Herzig's predicted weight set and the weight-connectivity
//! graph, together with brute-force reference implementations.
//!
//! Everything is exact integer arithmetic on products of type `A` root data.

pub mod affine_weyl;
pub mod error;
pub mod herzig;
pub mod oracle;
pub mod root_data;
pub mod weights_dl;

pub use affine_weyl::{ExtAffineElt, Generator, ReducedWord, TranslationBox};
pub use error::{Error, Result};
pub use herzig::{ConnectionEdge, ConnectivityGraph, EliminationCertificate, TameParam};
pub use root_data::{FiniteWeylElt, Root, RootDatum, WeightVec};
pub use weights_dl::{DLPresentation, SerrePresentation, SerreWeight};
