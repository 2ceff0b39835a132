//! Finite unit-ball packings in three dimensions and the combinatorics of
//! their contacts.
//!
//! The crate is organised bottom-up:
//!
//! * [`euclid`]: points, packings, the shared tolerance policy and the packing
//!   JSON interchange format.
//! * [`lattice`]: the face-centered cubic lattice scaled to minimum distance 2,
//!   its obtuse superbase and Voronoi-vector candidates.
//! * [`contact`]: contact graphs and touching pair/triplet/quadruple counts.
//! * [`sphere`]: angular geometry on the unit sphere, the law-of-cosines
//!   chains behind the polygon lemmas, spherical Delaunay triangulation,
//!   triangle typing and irregular-polygon assembly.
//! * [`constructions`]: the octahedral FCC packing and the twelve-point
//!   spherical presets.
//! * [`audit`]: bound evaluators and the numeric audit of the surface-area
//!   constant chain.

pub mod audit;
pub mod constructions;
pub mod contact;
pub mod error;
pub mod euclid;
pub mod lattice;
pub mod sphere;

pub use contact::{ContactCounts, ContactGraph};
pub use error::{Error, Result};
pub use euclid::{Packing, TolerancePolicy, Vec3};
pub use sphere::{CapConfiguration, SpherePoint, SphericalTriangulation};
