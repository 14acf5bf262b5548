//! Anyon content of Drinfeld quantum doubles `D(H)` of finite permutation
//! groups: particle spectrum, spins, modular data, fusion rules, braiding,
//! and structural analyses of the resulting fusion tables.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix double precision, which is what the consistency
//! tolerances are tuned for.

pub mod abelian;
pub mod analysis;
pub mod braiding;
pub mod characters;
pub mod double;
pub mod error;
pub mod group;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type CharacterTable64 = characters::CharacterTable<f64>;
pub type CMatrix64 = linalg::CMatrix<f64>;
pub type QuantumDouble64 = double::QuantumDouble<f64>;
pub type ModularData64 = double::ModularData<f64>;
pub type Braiding64<'a> = braiding::Braiding<'a, f64>;
pub type InternalSpace64 = braiding::InternalSpace<f64>;
