use super::{InstanceError, MAX_SIZE};
use crate::algebra::{MeetError, SequentialEffectAlgebra, SharpMeet};

/// Subset of the ground set {0, …, n−1}, stored as a bitset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BooleanElement {
    ground_size: usize,
    bits: u64,
}

impl BooleanElement {
    pub fn from_indices(ground_size: usize, indices: &[usize]) -> Result<Self, InstanceError> {
        check_size(ground_size)?;
        let mut bits = 0u64;
        for &index in indices {
            if index >= ground_size {
                return Err(InstanceError::IndexOutOfRange { index, ground_size });
            }
            bits |= 1 << index;
        }
        Ok(Self { ground_size, bits })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.ground_size && self.bits & (1 << index) != 0
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.ground_size).filter(|&i| self.contains(i)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

fn check_size(n: usize) -> Result<(), InstanceError> {
    if n == 0 || n > MAX_SIZE {
        return Err(InstanceError::BadSize(n));
    }
    Ok(())
}

/// Probability weights over the Boolean atoms.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomWeights {
    weights: Vec<f64>,
}

impl AtomWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self, InstanceError> {
        validate_weights(&weights)?;
        Ok(Self { weights })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

pub(crate) fn validate_weights(weights: &[f64]) -> Result<(), InstanceError> {
    let sum: f64 = weights.iter().sum();
    if weights.iter().any(|w| !w.is_finite() || *w < -1e-12) || (sum - 1.0).abs() > 1e-12 {
        return Err(InstanceError::BadWeights { sum });
    }
    Ok(())
}

/// The powerset of {0, …, n−1} with disjoint union as ⊕ and intersection
/// as ∘; every element is sharp and everything commutes.
#[derive(Clone, Copy, Debug)]
pub struct BooleanSea {
    ground_size: usize,
    mask: u64,
}

impl BooleanSea {
    pub fn new(ground_size: usize) -> Result<Self, InstanceError> {
        check_size(ground_size)?;
        let mask = if ground_size == 64 {
            u64::MAX
        } else {
            (1u64 << ground_size) - 1
        };
        Ok(Self { ground_size, mask })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn element(&self, indices: &[usize]) -> Result<BooleanElement, InstanceError> {
        BooleanElement::from_indices(self.ground_size, indices)
    }

    pub fn atom(&self, index: usize) -> BooleanElement {
        self.element(&[index]).expect("atom index within ground")
    }

    fn check(&self, a: &BooleanElement) {
        assert_eq!(
            a.ground_size, self.ground_size,
            "element belongs to a different ground set"
        );
    }
}

impl SequentialEffectAlgebra for BooleanSea {
    type Element = BooleanElement;
    type State = AtomWeights;

    fn zero(&self) -> BooleanElement {
        BooleanElement {
            ground_size: self.ground_size,
            bits: 0,
        }
    }

    fn one(&self) -> BooleanElement {
        BooleanElement {
            ground_size: self.ground_size,
            bits: self.mask,
        }
    }

    fn try_oplus(&self, a: &BooleanElement, b: &BooleanElement) -> Option<BooleanElement> {
        self.check(a);
        self.check(b);
        if a.bits & b.bits != 0 {
            return None;
        }
        Some(BooleanElement {
            ground_size: self.ground_size,
            bits: a.bits | b.bits,
        })
    }

    fn seq(&self, a: &BooleanElement, b: &BooleanElement) -> BooleanElement {
        self.check(a);
        self.check(b);
        BooleanElement {
            ground_size: self.ground_size,
            bits: a.bits & b.bits,
        }
    }

    fn complement(&self, a: &BooleanElement) -> BooleanElement {
        self.check(a);
        BooleanElement {
            ground_size: self.ground_size,
            bits: !a.bits & self.mask,
        }
    }

    fn leq(&self, a: &BooleanElement, b: &BooleanElement) -> bool {
        self.check(a);
        self.check(b);
        a.bits & !b.bits == 0
    }

    fn is_sharp(&self, _a: &BooleanElement) -> bool {
        true
    }

    fn distance(&self, a: &BooleanElement, b: &BooleanElement) -> f64 {
        self.check(a);
        self.check(b);
        (a.bits ^ b.bits).count_ones() as f64
    }

    fn tolerance(&self) -> f64 {
        0.0
    }

    fn eval(&self, state: &AtomWeights, a: &BooleanElement) -> f64 {
        self.check(a);
        a.indices().iter().map(|&i| state.weights[i]).sum()
    }

    fn state_after(&self, state: &AtomWeights, elements: &[BooleanElement]) -> AtomWeights {
        // w'(x) = Σ_i s(a_i ∧ {x}); for a partition each atom lies in
        // exactly one block, so the weights come back unchanged.
        let weights = (0..self.ground_size)
            .map(|x| {
                let atom = self.atom(x);
                elements
                    .iter()
                    .map(|a| self.eval(state, &self.seq(a, &atom)))
                    .sum()
            })
            .collect();
        AtomWeights { weights }
    }
}

impl SharpMeet for BooleanSea {
    fn try_meet(
        &self,
        a: &BooleanElement,
        b: &BooleanElement,
    ) -> Result<BooleanElement, MeetError> {
        Ok(self.seq(a, b))
    }
}
