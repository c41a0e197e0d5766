//! The extended affine Weyl group `W~ = X*(T) x| W` of `Res GL_n`.
//!
//! Elements are `t_lambda w`. Alcove questions are answered on the image of
//! the interior point `eta / n` of the base alcove `A_0`, scaled by `n` so
//! that every test is an exact integer comparison.

mod elt;
mod length;
mod order;
mod tables;

pub use elt::ExtAffineElt;
pub use length::{omega_element, omega_generator, Gallery, Generator, ReducedWord};
pub use order::{OmegaDecomp, TranslationBox, DEFAULT_INTERVAL_BUDGET};
pub use tables::{single_tables, SingleTables};

pub(crate) use tables::Pick;

#[cfg(test)]
mod tests;
