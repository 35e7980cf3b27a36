//! Exact computations with morphisms determined by objects over bound
//! quiver algebras.
//!
//! The library constructs, for a bound quiver algebra over a prime field,
//! the unique right-minimal right C-determined morphism with a prescribed
//! image subspace H ⊆ Hom(C,Y); decides whether a given morphism is right
//! determined by an object; computes sufficient and minimal determinators;
//! and derives minimal right almost split morphisms (and Auslander-Reiten
//! sequences) as the special case H = rad End(Z). Finite posets, where
//! determination reduces to an order-theoretic criterion, are handled
//! exhaustively. Everything is exact linear algebra over F_p.
//!
//! ```
//! use detmor::determined::{almost_split_ending_at, GammaSubmodule, construct_determined};
//! use detmor::linalg::PrimeField;
//! use detmor::quiver::{BoundQuiverAlgebra, Quiver};
//! use detmor::rep::Representation;
//!
//! // the path algebra of 1 -> 2 over F_5
//! let quiver = Quiver::new(
//!     vec!["1".into(), "2".into()],
//!     vec![("a".into(), "1".into(), "2".into())],
//! )?;
//! let alg = BoundQuiverAlgebra::new(PrimeField::new(5)?, quiver, vec![])?;
//!
//! // the right minimal right S1-determined morphism with image 0 in
//! // Hom(S1, S1) is the projective cover P(1) ->> S1
//! let s1 = Representation::simple(&alg, 0);
//! let h = GammaSubmodule::zero(&s1, &s1)?;
//! let alpha = construct_determined(&h)?;
//! assert_eq!(alpha.source().dims(), &[1, 1]);
//!
//! // the same morphism, derived as the almost split morphism ending at S1,
//! // sits in the sequence 0 -> S2 -> P(1) -> S1 -> 0
//! let ar = almost_split_ending_at(&s1)?;
//! assert_eq!(ar.sequence.unwrap().kernel.dims(), &[0, 1]);
//! # Ok::<(), detmor::Error>(())
//! ```

pub mod determined;
pub mod error;
pub mod fdalg;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod poset;
pub(crate) mod poly;
pub mod quiver;
pub mod rep;

pub use error::{Error, Result};
