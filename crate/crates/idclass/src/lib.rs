//! Ideal class monoids of numerical semigroups.
//!
//! A numerical semigroup S is a cofinite submonoid of the non-negative
//! integers. Its ideal classes, realized as the ideals of S with minimum 0
//! under addition, form a finite commutative monoid. This crate computes that
//! monoid: classical semigroup invariants (Frobenius number, gaps, Apéry
//! sets, Kunz coordinates, pseudo-Frobenius and special gaps), ideal
//! arithmetic through Apéry tuples, enumeration via the Kunz inequality
//! system, addition tables, Hasse diagrams for inclusion and for the
//! algebraic preorder, classification of irreducible elements, atoms, quarks,
//! primes and idempotents, reduction numbers, canonical ideals, minimal
//! factorizations into irreducibles, and exact poset widths.
//!
//! Everything fast is double-checked: the [`oracle`] module re-derives the
//! same objects from set-level definitions (bitmask arithmetic, antichain
//! enumeration) and the [`verify`] module runs both routes against each other
//! over all semigroups up to a genus bound, together with every cardinality
//! bound and structural characterization the monoid satisfies.
//!
//! ```
//! use idclass::{ClassMonoid, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
//! assert_eq!(s.gaps(), &[1, 2, 4]);
//!
//! let monoid = ClassMonoid::with_table(&s);
//! assert_eq!(monoid.len(), 6);
//! let k = s.canonical_ideal().unwrap();
//! assert_eq!(k.min_generators(), &[0, 2]);
//! ```

pub mod dot;
mod error;
mod ideal;
mod monoid;
pub mod oracle;
pub mod poset;
pub mod report;
mod semigroup;
pub mod verify;

pub use error::Error;
pub use ideal::Ideal;
pub use monoid::{
    BoundCheck, BoundKind, BoundsReport, CharacterizationCheck, ClassMonoid, Classification,
    Factorizations, KunzSystem, Order, QuarkProfile,
};
pub use semigroup::{enumerate_by_genus, GenusTree, NumericalSemigroup, ResidueClass, Symmetry};
