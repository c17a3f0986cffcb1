//! Sequential effect algebras with Boolean, fuzzy, and quantum instances,
//! plus states, partitions, refinements, and partition entropies.
//!
//! The [`algebra`] module defines the instance-agnostic contract (partial
//! sum, sequential product, complement, partitions, refinement), the
//! [`instances`] module realizes it three times, [`spectral`] supplies the
//! Hermitian matrix kernel behind the quantum instance, and [`entropy`]
//! evaluates states and the entropy functionals together with the residuals
//! of the entropy laws.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

pub mod algebra;
pub mod entropy;
pub mod instances;
pub mod spectral;

pub use algebra::{
    orthosum, refine, seq_commutes, MeetError, Partition, PartitionError,
    SequentialEffectAlgebra, SharpMeet,
};
pub use entropy::{
    cond_entropy, cond_prob, entropy, eval_state, refinement_entropy, theorem_residuals,
    xlogx, EntropyOptions, TheoremResiduals,
};
pub use instances::{
    AtomWeights, BooleanElement, BooleanSea, DensityMatrix, FuzzyElement, FuzzySea,
    InstanceError, PointWeights, QuantumEffect, QuantumSea,
};
pub use spectral::{ComplexMatrix, SpectralError};
