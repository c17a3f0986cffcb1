//! Randomized checks of the sequential-effect-algebra axioms on each
//! instance, with per-axiom worst deviations.
//!
//! The additivity and unit laws are checked on unrestricted random inputs.
//! Annihilation is exercised on constructed complementary projection pairs,
//! and the commutation/associativity axioms only state anything when their
//! hypotheses hold, so those run on deliberately commuting families:
//! diagonal effects and random spectral functions of one Hermitian matrix.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sea_core::spectral::{eig_hermitian, ComplexMatrix};
use sea_core::{BooleanSea, FuzzySea, QuantumSea, SequentialEffectAlgebra};

use crate::campaign::{ConfigError, InstanceKind, LawStats};
use crate::gen;

pub const AXIOM_LAWS: [&str; 7] = [
    "sea1_additivity",
    "sea2_unit",
    "sea3_annihilation",
    "sea4_complement_commute",
    "sea4_associativity",
    "sea5_product_commute",
    "sea5_sum_commute",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomsConfig {
    pub instance: InstanceKind,
    pub size: usize,
    pub trials: usize,
    pub seed: u64,
}

impl AxiomsConfig {
    fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        let max = sea_core::instances::MAX_SIZE;
        let ok = match self.instance {
            InstanceKind::Fuzzy => self.size >= 1,
            _ => (1..=max).contains(&self.size),
        };
        if !ok {
            return Err(ConfigError::BadSize {
                instance: self.instance.to_string(),
                size: self.size,
            });
        }
        Ok(())
    }

    /// Pass thresholds per law, in the order of `AXIOM_LAWS`. The exact
    /// instances must come out perfect up to float summation; the quantum
    /// instance tolerates eigensolver noise.
    pub fn thresholds(&self) -> [f64; 7] {
        match self.instance {
            InstanceKind::Boolean => [0.0; 7],
            InstanceKind::Fuzzy => [1e-12, 0.0, 0.0, 1e-12, 1e-12, 1e-12, 1e-12],
            InstanceKind::Quantum => [1e-10, 1e-12, 1e-9, 1e-9, 1e-9, 1e-9, 1e-9],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomsReport {
    pub config: AxiomsConfig,
    pub thresholds: Vec<f64>,
    pub laws: Vec<LawStats>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl AxiomsReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.failures == 0)
    }
}

pub fn check_sea_axioms(config: &AxiomsConfig) -> Result<AxiomsReport, ConfigError> {
    config.validate()?;
    let start = Instant::now();

    let deviations: Vec<[f64; 7]> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = gen::trial_rng(config.seed, trial as u64);
            match config.instance {
                InstanceKind::Boolean => boolean_trial(config.size, &mut rng),
                InstanceKind::Fuzzy => fuzzy_trial(config.size, &mut rng),
                InstanceKind::Quantum => quantum_trial(config.size, trial, &mut rng),
            }
        })
        .collect();

    let thresholds = config.thresholds();
    let mut laws: Vec<LawStats> = AXIOM_LAWS
        .iter()
        .map(|name| LawStats {
            law: (*name).to_string(),
            passes: 0,
            failures: 0,
            worst_residual: 0.0,
            worst_trial: 0,
        })
        .collect();
    for (trial, devs) in deviations.iter().enumerate() {
        for (i, law) in laws.iter_mut().enumerate() {
            if devs[i] <= thresholds[i] {
                law.passes += 1;
            } else {
                law.failures += 1;
            }
            if devs[i] > law.worst_residual {
                law.worst_residual = devs[i];
                law.worst_trial = trial as u64;
            }
        }
    }

    Ok(AxiomsReport {
        config: config.clone(),
        thresholds: thresholds.to_vec(),
        laws,
        runtime_ms: start.elapsed().as_millis(),
    })
}

fn boolean_trial<R: Rng>(n: usize, rng: &mut R) -> [f64; 7] {
    let sea = BooleanSea::new(n).expect("validated size");
    let mask = |rng: &mut R| -> Vec<usize> {
        (0..n).filter(|_| rng.random::<bool>()).collect()
    };
    let a = sea.element(&mask(rng)).unwrap();
    let b = sea.element(&mask(rng)).unwrap();
    let c_ix: Vec<usize> = mask(rng).into_iter().filter(|i| !b.contains(*i)).collect();
    let c = sea.element(&c_ix).unwrap();

    let sum_bc = sea.try_oplus(&b, &c).expect("disjoint by construction");
    let sea1 = sea.distance(
        &sea.seq(&a, &sum_bc),
        &sea
            .try_oplus(&sea.seq(&a, &b), &sea.seq(&a, &c))
            .expect("images of disjoint sets stay disjoint"),
    );
    let sea2 = sea.distance(&sea.seq(&sea.one(), &a), &a);
    let comp = sea.complement(&a);
    let sea3 = sea
        .distance(&sea.seq(&a, &comp), &sea.zero())
        .max(sea.distance(&sea.seq(&comp, &a), &sea.zero()));
    let b_comp = sea.complement(&b);
    let sea4c = sea.distance(&sea.seq(&a, &b_comp), &sea.seq(&b_comp, &a));
    let sea4a = sea.distance(
        &sea.seq(&a, &sea.seq(&b, &c)),
        &sea.seq(&sea.seq(&a, &b), &c),
    );
    let ab = sea.seq(&a, &b);
    let sea5p = sea.distance(&sea.seq(&c, &ab), &sea.seq(&ab, &c));
    let sea5s = sea.distance(&sea.seq(&a, &sum_bc), &sea.seq(&sum_bc, &a));
    [sea1, sea2, sea3, sea4c, sea4a, sea5p, sea5s]
}

fn fuzzy_trial<R: Rng>(n: usize, rng: &mut R) -> [f64; 7] {
    let sea = FuzzySea::new(n).expect("validated size");
    let vector = |rng: &mut R| -> Vec<f64> { (0..n).map(|_| rng.random()).collect() };
    let a = sea.element(vector(rng)).unwrap();
    let raw = vector(rng);
    let t: f64 = rng.random();
    let b = sea.element(raw.iter().map(|x| x * t).collect()).unwrap();
    let c = sea.element(raw.iter().map(|x| x * (1.0 - t)).collect()).unwrap();

    let sum_bc = sea.try_oplus(&b, &c).expect("split sums below one");
    let sea1 = sea.distance(
        &sea.seq(&a, &sum_bc),
        &sea
            .try_oplus(&sea.seq(&a, &b), &sea.seq(&a, &c))
            .expect("products of a split stay summable"),
    );
    let sea2 = sea.distance(&sea.seq(&sea.one(), &a), &a);
    // Sharp pair with disjoint support: an indicator and its complement.
    let indicator = sea
        .element((0..n).map(|_| if rng.random::<bool>() { 1.0 } else { 0.0 }).collect())
        .unwrap();
    let indicator_comp = sea.complement(&indicator);
    let sea3 = sea
        .distance(&sea.seq(&indicator, &indicator_comp), &sea.zero())
        .max(sea.distance(&sea.seq(&indicator_comp, &indicator), &sea.zero()));
    let b_comp = sea.complement(&b);
    let sea4c = sea.distance(&sea.seq(&a, &b_comp), &sea.seq(&b_comp, &a));
    let sea4a = sea.distance(
        &sea.seq(&a, &sea.seq(&b, &c)),
        &sea.seq(&sea.seq(&a, &b), &c),
    );
    let ab = sea.seq(&a, &b);
    let sea5p = sea.distance(&sea.seq(&c, &ab), &sea.seq(&ab, &c));
    let sea5s = sea.distance(&sea.seq(&a, &sum_bc), &sea.seq(&sum_bc, &a));
    [sea1, sea2, sea3, sea4c, sea4a, sea5p, sea5s]
}

fn quantum_trial<R: Rng>(dim: usize, trial: usize, rng: &mut R) -> [f64; 7] {
    let sea = QuantumSea::new(dim).expect("validated size");

    // SEA1 on an unrestricted effect against a scaled summable pair.
    let a = gen::gen_random_effect(&sea, rng);
    let t: f64 = rng.random();
    let b = sea
        .effect(gen::gen_random_effect(&sea, rng).matrix().scaled(t))
        .expect("scaled effect");
    let c = sea
        .effect(gen::gen_random_effect(&sea, rng).matrix().scaled(1.0 - t))
        .expect("scaled effect");
    let sum_bc = sea.try_oplus(&b, &c).expect("scaled pair sums below one");
    let sea1 = sea.distance(
        &sea.seq(&a, &sum_bc),
        &sea
            .try_oplus(&sea.seq(&a, &b), &sea.seq(&a, &c))
            .expect("additivity keeps the sum defined"),
    );

    let sea2 = sea.distance(&sea.seq(&sea.one(), &a), &a);

    // SEA3 on a complementary projection pair: both products must vanish.
    let rank = if dim == 1 { 0 } else { rng.random_range(1..dim) };
    let p = gen::gen_random_projection(&sea, rank, rng);
    let p_comp = sea.complement(&p);
    let sea3 = sea
        .seq(&p, &p_comp)
        .matrix()
        .frobenius_norm()
        .max(sea.seq(&p_comp, &p).matrix().frobenius_norm());

    // Commuting family: diagonal on odd trials, spectral functions of a
    // random Hermitian matrix on even ones.
    let basis = if trial.is_multiple_of(2) {
        let h = gen::ginibre(dim, rng).hermitized();
        eig_hermitian(&h).expect("hermitized Ginibre").eigenvectors().clone()
    } else {
        ComplexMatrix::identity(dim)
    };
    let commuting = |rng: &mut R| {
        let spectrum: Vec<f64> = (0..dim).map(|_| rng.random()).collect();
        let diag = ComplexMatrix::from_real_diag(&spectrum);
        sea.effect((&(&basis * &diag) * &basis.adjoint()).hermitized())
            .expect("conjugated diagonal is an effect")
    };
    let x = commuting(rng);
    let y = commuting(rng);
    let z = commuting(rng);

    let y_comp = sea.complement(&y);
    let sea4c = sea.distance(&sea.seq(&x, &y_comp), &sea.seq(&y_comp, &x));
    let sea4a = sea.distance(
        &sea.seq(&x, &sea.seq(&y, &z)),
        &sea.seq(&sea.seq(&x, &y), &z),
    );
    let xy = sea.seq(&x, &y);
    let sea5p = sea.distance(&sea.seq(&z, &xy), &sea.seq(&xy, &z));
    let half_x = sea.effect(x.matrix().scaled(0.5)).expect("halved effect");
    let half_y = sea.effect(y.matrix().scaled(0.5)).expect("halved effect");
    let sum_xy = sea.try_oplus(&half_x, &half_y).expect("halves sum below one");
    let sea5s = sea.distance(&sea.seq(&z, &sum_xy), &sea.seq(&sum_xy, &z));

    [sea1, sea2, sea3, sea4c, sea4a, sea5p, sea5s]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_instances_pass_their_thresholds() {
        for (instance, size) in [
            (InstanceKind::Boolean, 6),
            (InstanceKind::Fuzzy, 5),
            (InstanceKind::Quantum, 3),
        ] {
            let config = AxiomsConfig {
                instance,
                size,
                trials: 60,
                seed: 11,
                };
            let report = check_sea_axioms(&config).unwrap();
            assert!(
                report.all_passed(),
                "{instance} axioms failed: {:?}",
                report.laws
            );
        }
    }

    #[test]
    fn quantum_dim_one_is_degenerate_but_sound() {
        let config = AxiomsConfig {
            instance: InstanceKind::Quantum,
            size: 1,
            trials: 10,
            seed: 2,
        };
        assert!(check_sea_axioms(&config).unwrap().all_passed());
    }

    #[test]
    fn zero_trials_rejected() {
        let config = AxiomsConfig {
            instance: InstanceKind::Boolean,
            size: 4,
            trials: 0,
            seed: 0,
        };
        assert_eq!(check_sea_axioms(&config).unwrap_err(), ConfigError::NoTrials);
    }
}
