//! Instance-agnostic sequential-effect-algebra contract.
//!
//! A sequential effect algebra carries a partial sum `⊕` (defined only when
//! the operands are "summable"), a total sequential product `∘` modeling
//! "measure the left operand, then the right", a complement, and the order
//! induced by `⊕`. Partitions are ordered element lists whose orthosum is
//! the unit; refining one partition by another multiplies them elementwise.
//!
//! Partiality of `⊕` is domain-legitimate, so `try_oplus` returns an
//! `Option` rather than an error: `None` is a value, not a failure.

use thiserror::Error;

/// The contract every instance realizes.
///
/// `distance` induces the instance's approximate equality: exact instances
/// report 0/positive and use tolerance 0, the quantum instance reports the
/// Frobenius metric and tolerates eigensolver noise.
pub trait SequentialEffectAlgebra {
    type Element: Clone + PartialEq + Send + Sync + std::fmt::Debug;
    type State: Clone + Send + Sync + std::fmt::Debug;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;

    /// a ⊕ b when defined, `None` otherwise. Symmetric by axiom.
    fn try_oplus(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element>;

    /// The sequential product a ∘ b. Total.
    fn seq(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// a ∘ b for every b in `bs`. Instances may share per-`a` work.
    fn seq_each(&self, a: &Self::Element, bs: &[Self::Element]) -> Vec<Self::Element> {
        bs.iter().map(|b| self.seq(a, b)).collect()
    }

    /// The unique b with a ⊕ b = one.
    fn complement(&self, a: &Self::Element) -> Self::Element;

    /// True iff some c satisfies a ⊕ c = b, decided by the instance's
    /// direct criterion (subset / pointwise ≤ / PSD difference).
    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool;

    /// True iff a ∧ a' = zero; for quantum effects this is idempotence.
    fn is_sharp(&self, a: &Self::Element) -> bool;

    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64;

    /// Equality slack for this instance; 0 for exact instances.
    fn tolerance(&self) -> f64;

    fn eq_approx(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.distance(a, b) <= self.tolerance()
    }

    /// s(a), the probability the state assigns to the element.
    fn eval(&self, state: &Self::State, a: &Self::Element) -> f64;

    /// The state after the listed elements are measured with outcomes
    /// unobserved: eval(s', b) = Σ_i eval(s, a_i ∘ b) for every b.
    fn state_after(&self, state: &Self::State, elements: &[Self::Element]) -> Self::State;
}

/// Left fold of `try_oplus` over a nonempty list. `None` as soon as any
/// partial sum is undefined; by associativity of defined sums the result
/// does not depend on fold order.
///
/// Panics on an empty list: the empty orthosum is a usage error, not a
/// domain value.
pub fn orthosum<S: SequentialEffectAlgebra>(sea: &S, xs: &[S::Element]) -> Option<S::Element> {
    assert!(!xs.is_empty(), "orthosum requires a nonempty element list");
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = sea.try_oplus(&acc, x)?;
    }
    Some(acc)
}

/// True iff a ∘ b = b ∘ a within the instance tolerance (the two elements
/// are sequentially independent).
pub fn seq_commutes<S: SequentialEffectAlgebra>(
    sea: &S,
    a: &S::Element,
    b: &S::Element,
) -> bool {
    sea.eq_approx(&sea.seq(a, b), &sea.seq(b, a))
}

#[derive(Debug, Error, PartialEq)]
pub enum PartitionError {
    #[error("a partition needs at least one element")]
    Empty,
    #[error("orthosum undefined at element index {index}")]
    UndefinedSum { index: usize },
    #[error("orthosum differs from the unit (distance {distance:.3e})")]
    NotUnit { distance: f64 },
}

/// Ordered list of elements whose orthosum is the unit.
///
/// Order is significant: refinements enumerate products by index, and
/// A ∘ B generally differs from B ∘ A. Duplicates are allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition<E> {
    elements: Vec<E>,
}

impl<E> Partition<E> {
    /// Validates that the elements orthosum to the unit and preserves their
    /// order. Errors name the failing index where one exists.
    pub fn new<S>(sea: &S, elements: Vec<E>) -> Result<Self, PartitionError>
    where
        S: SequentialEffectAlgebra<Element = E>,
        E: Clone + PartialEq,
    {
        if elements.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut acc = elements[0].clone();
        for (index, x) in elements.iter().enumerate().skip(1) {
            acc = sea
                .try_oplus(&acc, x)
                .ok_or(PartitionError::UndefinedSum { index })?;
        }
        let distance = sea.distance(&acc, &sea.one());
        if distance > sea.tolerance() {
            return Err(PartitionError::NotUnit { distance });
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.elements.iter()
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }
}

/// The refinement A ∘ B: all products a_i ∘ b_j in row-major order (i
/// outer, j inner). The result is validated; a failure signals numeric
/// degradation rather than bad input, since the axioms guarantee the
/// refinement of two partitions is a partition.
pub fn refine<S: SequentialEffectAlgebra>(
    sea: &S,
    a: &Partition<S::Element>,
    b: &Partition<S::Element>,
) -> Result<Partition<S::Element>, PartitionError> {
    let mut elements = Vec::with_capacity(a.len() * b.len());
    for ai in a.iter() {
        elements.extend(sea.seq_each(ai, b.elements()));
    }
    Partition::new(sea, elements)
}

#[derive(Debug, Error)]
pub enum MeetError {
    #[error("meet requires sharp elements in this instance")]
    NotSharp,
    #[error(transparent)]
    Spectral(#[from] crate::spectral::SpectralError),
}

/// Meet of sharp elements, for instances that support one. Boolean
/// algebras meet everywhere; the quantum instance meets only projections.
pub trait SharpMeet: SequentialEffectAlgebra {
    fn try_meet(
        &self,
        a: &Self::Element,
        b: &Self::Element,
    ) -> Result<Self::Element, MeetError>;
}
