//! States, conditional probabilities, and the partition entropy
//! functionals, together with the six residuals that certify the entropy
//! laws numerically.
//!
//! Conventions: 0·log 0 = 0, and conditioning on a zero-probability
//! element contributes zero terms (s(b|a) = 0 when s(a) = 0), so no sum
//! ever meets a log of zero.

use serde::{Deserialize, Serialize};

use crate::algebra::{refine, Partition, PartitionError, SequentialEffectAlgebra};

/// Slack accepted around the [0, 1] probability interval before clamping.
const PROB_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyOptions {
    pub log_base: f64,
}

impl EntropyOptions {
    pub fn new(log_base: f64) -> Self {
        assert!(log_base > 1.0, "log base must exceed 1");
        Self { log_base }
    }

    pub fn bits() -> Self {
        Self { log_base: 2.0 }
    }
}

impl Default for EntropyOptions {
    fn default() -> Self {
        Self::bits()
    }
}

/// x·log_base(x) with x·log x = 0 at x = 0. Accepts a ±1e-12 slack band
/// around [0, 1] and clamps it away; anything further out is a usage error.
pub fn xlogx(x: f64, base: f64) -> f64 {
    assert!(base > 1.0, "log base must exceed 1");
    assert!(
        (-PROB_SLACK..=1.0 + PROB_SLACK).contains(&x),
        "xlogx domain violation: {x}"
    );
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 {
        0.0
    } else {
        x * x.ln() / base.ln()
    }
}

/// s(a) for the given state.
pub fn eval_state<S: SequentialEffectAlgebra>(sea: &S, state: &S::State, a: &S::Element) -> f64 {
    sea.eval(state, a)
}

/// s(b|a) = s(a ∘ b)/s(a), and 0 when s(a) = 0. Clamped to [0, 1].
pub fn cond_prob<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    b: &S::Element,
    a: &S::Element,
) -> f64 {
    let marginal = sea.eval(state, a);
    if marginal <= 0.0 {
        return 0.0;
    }
    (sea.eval(state, &sea.seq(a, b)) / marginal).clamp(0.0, 1.0)
}

/// H_s(A) = −Σ_i s(a_i) log s(a_i).
pub fn entropy<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    partition: &Partition<S::Element>,
    opts: EntropyOptions,
) -> f64 {
    let h = -partition
        .iter()
        .map(|a| xlogx(sea.eval(state, a), opts.log_base))
        .sum::<f64>();
    normalize_zero(h)
}

/// H_s(T|G) = −Σ_i Σ_j s(g_i ∘ t_j) log s(t_j|g_i), the entropy of the
/// target partition conditioned by the given one. Terms with zero joint
/// weight contribute nothing.
pub fn cond_entropy<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    target: &Partition<S::Element>,
    given: &Partition<S::Element>,
    opts: EntropyOptions,
) -> f64 {
    let ln_base = opts.log_base.ln();
    let mut h = 0.0;
    for g in given.iter() {
        let marginal = sea.eval(state, g);
        if marginal <= 0.0 {
            continue;
        }
        for joint_element in sea.seq_each(g, target.elements()) {
            let joint = sea.eval(state, &joint_element);
            if joint <= 0.0 {
                continue;
            }
            let conditional = (joint / marginal).clamp(0.0, 1.0);
            if conditional > 0.0 {
                h -= joint * conditional.ln() / ln_base;
            }
        }
    }
    normalize_zero(h)
}

/// H_s(A ∘ B), the entropy of the refinement of A by B.
pub fn refinement_entropy<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    a: &Partition<S::Element>,
    b: &Partition<S::Element>,
    opts: EntropyOptions,
) -> Result<f64, PartitionError> {
    Ok(entropy(sea, state, &refine(sea, a, b)?, opts))
}

fn normalize_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Signed gaps of the six entropy laws. The chain rule should be zero;
/// every other residual is an inequality slack and should be nonnegative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremResiduals {
    /// H_s(A∘B) − H_s(B|A) − H_s(A).
    pub chain_rule: f64,
    /// H_s(A∘B|C) − H_s(A|C).
    pub refine_conditional: f64,
    /// H_{s_A}(B) − H_s(B|A).
    pub posterior_entropy: f64,
    /// H_s(A) + H_{s_A}(B) − H_s(A∘B).
    pub subadditivity: f64,
    /// H_s(A∘B) − max(H_{s_A}(B), H_s(A)).
    pub refine_floor: f64,
    /// H_{s_C}(A|B) + H_s(B|C) − H_s(B∘A|C).
    pub cond_triangle: f64,
}

impl TheoremResiduals {
    pub const LAW_NAMES: [&'static str; 6] = [
        "chain_rule",
        "refine_conditional",
        "posterior_entropy",
        "subadditivity",
        "refine_floor",
        "cond_triangle",
    ];

    pub fn as_array(&self) -> [f64; 6] {
        [
            self.chain_rule,
            self.refine_conditional,
            self.posterior_entropy,
            self.subadditivity,
            self.refine_floor,
            self.cond_triangle,
        ]
    }

    /// The chain rule must vanish within `tol`; the rest must not dip
    /// below −`tol`.
    pub fn law_passes(&self, tol: f64) -> [bool; 6] {
        let r = self.as_array();
        let mut passes = [false; 6];
        passes[0] = r[0].abs() <= tol;
        for i in 1..6 {
            passes[i] = r[i] >= -tol;
        }
        passes
    }

    pub fn all_pass(&self, tol: f64) -> bool {
        self.law_passes(tol).iter().all(|&p| p)
    }
}

/// Evaluates all six law residuals for one (state, A, B, C) triple of
/// partitions. Conditional entropies of refinements substitute the refined
/// element list into the conditional formula, and the posterior state
/// entropies use the state after the conditioning measurement.
pub fn theorem_residuals<S: SequentialEffectAlgebra>(
    sea: &S,
    state: &S::State,
    a: &Partition<S::Element>,
    b: &Partition<S::Element>,
    c: &Partition<S::Element>,
    opts: EntropyOptions,
) -> Result<TheoremResiduals, PartitionError> {
    let ab = refine(sea, a, b)?;
    let ba = refine(sea, b, a)?;

    let state_after_a = sea.state_after(state, a.elements());
    let state_after_c = sea.state_after(state, c.elements());

    let h_a = entropy(sea, state, a, opts);
    let h_ab = entropy(sea, state, &ab, opts);
    let h_b_given_a = cond_entropy(sea, state, b, a, opts);
    let h_after_a_of_b = entropy(sea, &state_after_a, b, opts);
    let h_a_given_c = cond_entropy(sea, state, a, c, opts);
    let h_ab_given_c = cond_entropy(sea, state, &ab, c, opts);
    let h_ba_given_c = cond_entropy(sea, state, &ba, c, opts);
    let h_b_given_c = cond_entropy(sea, state, b, c, opts);
    let h_after_c_a_given_b = cond_entropy(sea, &state_after_c, a, b, opts);

    Ok(TheoremResiduals {
        chain_rule: h_ab - h_b_given_a - h_a,
        refine_conditional: h_ab_given_c - h_a_given_c,
        posterior_entropy: h_after_a_of_b - h_b_given_a,
        subadditivity: h_a + h_after_a_of_b - h_ab,
        refine_floor: h_ab - h_after_a_of_b.max(h_a),
        cond_triangle: h_after_c_a_given_b + h_b_given_c - h_ba_given_c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{AtomWeights, BooleanSea, DensityMatrix, QuantumSea};
    use crate::spectral::ComplexMatrix;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn xlogx_conventions() {
        assert_eq!(xlogx(0.0, 2.0), 0.0);
        assert_eq!(xlogx(1.0, 2.0), 0.0);
        assert!((xlogx(0.5, 2.0) + 0.5).abs() < 1e-15);
        assert_eq!(xlogx(-1e-13, 2.0), 0.0);
    }

    #[test]
    #[should_panic(expected = "domain violation")]
    fn xlogx_rejects_out_of_band() {
        xlogx(1.1, 2.0);
    }

    #[test]
    fn boolean_desk_entropies() {
        let sea = BooleanSea::new(4).unwrap();
        let s = AtomWeights::uniform(4);
        let atoms = Partition::new(&sea, (0..4).map(|i| sea.atom(i)).collect()).unwrap();
        assert!((entropy(&sea, &s, &atoms, EntropyOptions::bits()) - 2.0).abs() < 1e-14);

        let a = Partition::new(
            &sea,
            vec![sea.element(&[0, 1]).unwrap(), sea.element(&[2, 3]).unwrap()],
        )
        .unwrap();
        let b = Partition::new(
            &sea,
            vec![sea.element(&[0, 2]).unwrap(), sea.element(&[1, 3]).unwrap()],
        )
        .unwrap();
        let opts = EntropyOptions::bits();
        assert!((entropy(&sea, &s, &a, opts) - 1.0).abs() < 1e-14);
        assert!((refinement_entropy(&sea, &s, &a, &b, opts).unwrap() - 2.0).abs() < 1e-14);
        // Conditioning an atomic partition on itself costs nothing.
        assert_eq!(cond_entropy(&sea, &s, &atoms, &atoms, opts), 0.0);
    }

    #[test]
    fn cond_prob_desk_values() {
        let sea = BooleanSea::new(4).unwrap();
        let s = AtomWeights::uniform(4);
        let a = sea.element(&[0, 1]).unwrap();
        let b = sea.element(&[0]).unwrap();
        assert!((cond_prob(&sea, &s, &b, &a) - 0.5).abs() < 1e-15);
        // Conditioning on a zero-probability element yields zero.
        let zero_state = AtomWeights::new(vec![0.0, 0.0, 0.5, 0.5]).unwrap();
        assert_eq!(cond_prob(&sea, &zero_state, &b, &a), 0.0);
    }

    #[test]
    fn entropy_of_deterministic_partition_is_zero() {
        let sea = BooleanSea::new(4).unwrap();
        let s = AtomWeights::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let p = Partition::new(
            &sea,
            vec![sea.element(&[0, 1]).unwrap(), sea.element(&[2, 3]).unwrap()],
        )
        .unwrap();
        assert_eq!(entropy(&sea, &s, &p, EntropyOptions::bits()), 0.0);
    }

    #[test]
    fn trivial_partitions_give_zero_residuals() {
        let sea = BooleanSea::new(3).unwrap();
        let s = AtomWeights::uniform(3);
        let unit = Partition::new(&sea, vec![sea.one()]).unwrap();
        let r = theorem_residuals(&sea, &s, &unit, &unit, &unit, EntropyOptions::bits()).unwrap();
        assert_eq!(r.as_array(), [0.0; 6]);
    }

    #[test]
    fn quantum_two_basis_desk_values() {
        let sea = QuantumSea::new(2).unwrap();
        let q1 = sea
            .effect(
                ComplexMatrix::from_rows(&[
                    vec![c(0.5, 0.0), c(0.5, 0.0)],
                    vec![c(0.5, 0.0), c(0.5, 0.0)],
                ])
                .unwrap(),
            )
            .unwrap();
        let q2 = sea.complement(&q1);
        let p1 = sea.effect(ComplexMatrix::from_real_diag(&[0.0, 1.0])).unwrap();
        let p2 = sea.complement(&p1);
        let a = Partition::new(&sea, vec![q1, q2]).unwrap();
        let b = Partition::new(&sea, vec![p1, p2]).unwrap();
        let rho = DensityMatrix::maximally_mixed(2);
        let opts = EntropyOptions::bits();

        let h_a = entropy(&sea, &rho, &a, opts);
        let h_b_given_a = cond_entropy(&sea, &rho, &b, &a, opts);
        let h_ab = refinement_entropy(&sea, &rho, &a, &b, opts).unwrap();
        assert!((h_a - 1.0).abs() < 1e-12);
        assert!((h_b_given_a - 1.0).abs() < 1e-12);
        assert!((h_ab - 2.0).abs() < 1e-12);

        let r = theorem_residuals(&sea, &rho, &a, &b, &Partition::new(&sea, vec![sea.one()]).unwrap(), opts)
            .unwrap();
        assert!(r.chain_rule.abs() < 1e-12);
        assert!(r.all_pass(1e-9));
    }

    #[test]
    fn quantum_cond_prob_and_unit_partitions() {
        let sea = QuantumSea::new(2).unwrap();
        let q1 = sea
            .effect(
                ComplexMatrix::from_rows(&[
                    vec![c(0.5, 0.0), c(0.5, 0.0)],
                    vec![c(0.5, 0.0), c(0.5, 0.0)],
                ])
                .unwrap(),
            )
            .unwrap();
        let p1 = sea.effect(ComplexMatrix::from_real_diag(&[0.0, 1.0])).unwrap();
        let rho = DensityMatrix::maximally_mixed(2);
        // s(P1 | Q1) = tr(ρ · Q1 P1 Q1) / tr(ρ Q1) = (¼)/(½).
        assert!((cond_prob(&sea, &rho, &p1, &q1) - 0.5).abs() < 1e-12);

        // Measuring the trivial partition changes nothing, and conditioning
        // a trivial target costs nothing.
        let unit = Partition::new(&sea, vec![sea.one()]).unwrap();
        let after = sea.state_after(&rho, unit.elements());
        assert!((after.matrix() - rho.matrix()).frobenius_norm() < 1e-12);
        let a = Partition::new(&sea, vec![q1.clone(), sea.complement(&q1)]).unwrap();
        assert!(cond_entropy(&sea, &rho, &unit, &a, EntropyOptions::bits()).abs() < 1e-12);
        let h_a = entropy(&sea, &rho, &a, EntropyOptions::bits());
        let h_a_unit = refinement_entropy(&sea, &rho, &a, &unit, EntropyOptions::bits()).unwrap();
        assert!((h_a_unit - h_a).abs() < 1e-12);
    }

    #[test]
    fn base_change_consistency() {
        let sea = BooleanSea::new(4).unwrap();
        let s = AtomWeights::new(vec![0.4, 0.3, 0.2, 0.1]).unwrap();
        let p = Partition::new(&sea, (0..4).map(|i| sea.atom(i)).collect()).unwrap();
        let h2 = entropy(&sea, &s, &p, EntropyOptions::bits());
        let he = entropy(&sea, &s, &p, EntropyOptions::new(std::f64::consts::E));
        assert!((he - h2 / std::f64::consts::E.log2()).abs() < 1e-12);
    }
}
