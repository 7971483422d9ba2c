//! Exact classification of convex lattice polygons.
//!
//! Everything in this crate works over exact integers (and exact rationals
//! for d-dimensional volumes). The crate is `no_std` and only needs `alloc`;
//! IO, file formats and thread pools live in the `latclass` companion crate.
//!
//! The main pieces:
//!
//! * [`lattice`]: points, hulls, Pick statistics, collinear runs, symmetry
//!   and primitive vectors.
//! * [`unimodular`]: lattice-preserving affine maps, a complete canonical
//!   form for polygons and an independent equivalence oracle.
//! * [`enumeration`]: the census engine counting classes by lattice-point
//!   cardinality or by area.
//! * [`constructions`]: explicit polygon families (area sweeps inside a
//!   square, primitive-vector polygons and their `2^n` assemblies).
//! * [`polytope`]: the d-dimensional family `P(d, w, k)` with exact lattice
//!   counting and volumes.
#![no_std]

extern crate alloc;

pub mod constructions;
pub mod enumeration;
mod error;
pub mod lattice;
pub mod polytope;
pub mod unimodular;

pub use error::{Error, Result};
pub use lattice::{
    convex_hull, hull_closed, primitive_vectors, rabinowitz_holds, Degenerate, Hull, LatticePoint,
    LatticePolygon, LatticeSet, PickStats, Region,
};
pub use constructions::{
    assemble_cardinality, assemble_symmetric, build_m_tau, lemma2_polygon, AssemblyTrace,
    ChoiceVector, MTauMode, Padding,
};
pub use enumeration::{
    census_table, enumerate_area, enumerate_cardinality, Budget, CensusMode, CensusOptions,
    CensusResult, SearchRegion, WorkItem,
};
pub use polytope::{
    lattice_count_d, pdwk_vertices, pdwk_volume, theorem4_witnesses, LatticePointD,
    LatticePolytopeD, RationalVolume,
};
pub use unimodular::{
    canonical_form, equivalence_oracle, invariant_vector, CanonicalForm, EquivalenceGroup,
    InvariantVector, UnimodularAffineMap,
};
