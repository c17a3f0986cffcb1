use super::InstanceError;
use crate::algebra::SequentialEffectAlgebra;

/// Pointwise comparison slack; fuzzy arithmetic is plain f64, so this only
/// has to absorb summation rounding.
pub const FUZZY_TOL: f64 = 1e-12;

/// Fuzzy subset of a finite ground set: one membership value in [0, 1]
/// per point.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyElement {
    memberships: Vec<f64>,
}

impl FuzzyElement {
    pub fn new(memberships: Vec<f64>) -> Result<Self, InstanceError> {
        for (index, &value) in memberships.iter().enumerate() {
            if !value.is_finite() || !(-FUZZY_TOL..=1.0 + FUZZY_TOL).contains(&value) {
                return Err(InstanceError::BadMembership { index, value });
            }
        }
        let memberships = memberships.into_iter().map(|v| v.clamp(0.0, 1.0)).collect();
        Ok(Self { memberships })
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    pub fn len(&self) -> usize {
        self.memberships.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memberships.is_empty()
    }
}

/// Probability weights over the ground points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointWeights {
    weights: Vec<f64>,
}

impl PointWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self, InstanceError> {
        super::boolean::validate_weights(&weights)?;
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

/// Fuzzy sets on {0, …, n−1}: ⊕ is pointwise sum when it stays at or
/// below 1, ∘ is the pointwise product, complement is 1 − μ.
#[derive(Clone, Copy, Debug)]
pub struct FuzzySea {
    ground_size: usize,
}

impl FuzzySea {
    pub fn new(ground_size: usize) -> Result<Self, InstanceError> {
        if ground_size == 0 {
            return Err(InstanceError::BadSize(ground_size));
        }
        Ok(Self { ground_size })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn element(&self, memberships: Vec<f64>) -> Result<FuzzyElement, InstanceError> {
        if memberships.len() != self.ground_size {
            return Err(InstanceError::BadLength {
                expected: self.ground_size,
                got: memberships.len(),
            });
        }
        FuzzyElement::new(memberships)
    }

    fn check(&self, a: &FuzzyElement) {
        assert_eq!(
            a.len(),
            self.ground_size,
            "element belongs to a different ground set"
        );
    }
}

impl SequentialEffectAlgebra for FuzzySea {
    type Element = FuzzyElement;
    type State = PointWeights;

    fn zero(&self) -> FuzzyElement {
        FuzzyElement {
            memberships: vec![0.0; self.ground_size],
        }
    }

    fn one(&self) -> FuzzyElement {
        FuzzyElement {
            memberships: vec![1.0; self.ground_size],
        }
    }

    fn try_oplus(&self, a: &FuzzyElement, b: &FuzzyElement) -> Option<FuzzyElement> {
        self.check(a);
        self.check(b);
        let mut memberships = Vec::with_capacity(self.ground_size);
        for (x, y) in a.memberships.iter().zip(&b.memberships) {
            let sum = x + y;
            if sum > 1.0 + FUZZY_TOL {
                return None;
            }
            memberships.push(sum.clamp(0.0, 1.0));
        }
        Some(FuzzyElement { memberships })
    }

    fn seq(&self, a: &FuzzyElement, b: &FuzzyElement) -> FuzzyElement {
        self.check(a);
        self.check(b);
        FuzzyElement {
            memberships: a
                .memberships
                .iter()
                .zip(&b.memberships)
                .map(|(x, y)| x * y)
                .collect(),
        }
    }

    fn complement(&self, a: &FuzzyElement) -> FuzzyElement {
        self.check(a);
        FuzzyElement {
            memberships: a.memberships.iter().map(|x| 1.0 - x).collect(),
        }
    }

    fn leq(&self, a: &FuzzyElement, b: &FuzzyElement) -> bool {
        self.check(a);
        self.check(b);
        a.memberships
            .iter()
            .zip(&b.memberships)
            .all(|(x, y)| *x <= y + FUZZY_TOL)
    }

    fn is_sharp(&self, a: &FuzzyElement) -> bool {
        self.check(a);
        a.memberships
            .iter()
            .all(|x| x.abs() <= FUZZY_TOL || (x - 1.0).abs() <= FUZZY_TOL)
    }

    fn distance(&self, a: &FuzzyElement, b: &FuzzyElement) -> f64 {
        self.check(a);
        self.check(b);
        a.memberships
            .iter()
            .zip(&b.memberships)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    fn tolerance(&self) -> f64 {
        FUZZY_TOL
    }

    fn eval(&self, state: &PointWeights, a: &FuzzyElement) -> f64 {
        self.check(a);
        let p: f64 = state
            .weights
            .iter()
            .zip(&a.memberships)
            .map(|(w, mu)| w * mu)
            .sum();
        p.clamp(0.0, 1.0)
    }

    fn state_after(&self, state: &PointWeights, elements: &[FuzzyElement]) -> PointWeights {
        // w'(x) = Σ_i s(a_i ∘ δ_x) = w(x) Σ_i a_i(x); the partition
        // property makes the inner sum 1, so the weights are preserved.
        let weights = (0..self.ground_size)
            .map(|x| {
                let total: f64 = elements.iter().map(|a| a.memberships[x]).sum();
                state.weights[x] * total
            })
            .collect();
        PointWeights { weights }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{orthosum, Partition, PartitionError};

    #[test]
    fn oplus_desk_values() {
        let sea = FuzzySea::new(1).unwrap();
        let a = sea.element(vec![0.3]).unwrap();
        let b = sea.element(vec![0.7]).unwrap();
        assert_eq!(
            sea.try_oplus(&a, &b).unwrap().memberships(),
            &[1.0]
        );
        let c = sea.element(vec![0.6]).unwrap();
        assert!(sea.try_oplus(&c, &c).is_none());
    }

    #[test]
    fn seq_is_pointwise_product() {
        let sea = FuzzySea::new(1).unwrap();
        let a = sea.element(vec![0.3]).unwrap();
        let b = sea.element(vec![0.7]).unwrap();
        assert!((sea.seq(&a, &b).memberships()[0] - 0.21).abs() < 1e-15);
    }

    #[test]
    fn complement_is_one_minus() {
        let sea = FuzzySea::new(2).unwrap();
        let a = sea.element(vec![0.3, 0.9]).unwrap();
        let c = sea.complement(&a);
        assert!((c.memberships()[0] - 0.7).abs() < 1e-15);
        assert!((c.memberships()[1] - 0.1).abs() < 1e-15);
    }

    #[test]
    fn orthosum_overflow_is_undefined() {
        let sea = FuzzySea::new(1).unwrap();
        let xs = vec![
            sea.element(vec![0.3]).unwrap(),
            sea.element(vec![0.3]).unwrap(),
            sea.element(vec![0.5]).unwrap(),
        ];
        assert_eq!(orthosum(&sea, &xs), None);
        assert!(matches!(
            Partition::new(&sea, xs),
            Err(PartitionError::UndefinedSum { index: 2 })
        ));
    }

    #[test]
    fn two_point_partition_is_valid() {
        let sea = FuzzySea::new(1).unwrap();
        let p = Partition::new(
            &sea,
            vec![sea.element(vec![0.3]).unwrap(), sea.element(vec![0.7]).unwrap()],
        );
        assert!(p.is_ok());
    }

    #[test]
    fn sharpness_requires_indicator_values() {
        let sea = FuzzySea::new(3).unwrap();
        assert!(sea.is_sharp(&sea.element(vec![1.0, 0.0, 1.0]).unwrap()));
        assert!(!sea.is_sharp(&sea.element(vec![0.5, 0.0, 1.0]).unwrap()));
    }

    #[test]
    fn seq_commutes_exactly() {
        let sea = FuzzySea::new(3).unwrap();
        let a = sea.element(vec![0.12, 0.98, 0.5]).unwrap();
        let b = sea.element(vec![0.7, 0.33, 0.25]).unwrap();
        assert_eq!(sea.seq(&a, &b), sea.seq(&b, &a));
    }

    #[test]
    fn state_after_preserves_weights() {
        let sea = FuzzySea::new(2).unwrap();
        let s = PointWeights::new(vec![0.25, 0.75]).unwrap();
        let blocks = vec![
            sea.element(vec![0.2, 0.6]).unwrap(),
            sea.element(vec![0.8, 0.4]).unwrap(),
        ];
        let after = sea.state_after(&s, &blocks);
        for (w1, w2) in after.weights().iter().zip(s.weights()) {
            assert!((w1 - w2).abs() < 1e-15);
        }
    }
}
