//! Seeded random-case generators for all three instances.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use sea_core::spectral::{eig_hermitian, ComplexMatrix};
use sea_core::{
    AtomWeights, BooleanElement, BooleanSea, DensityMatrix, FuzzyElement, FuzzySea, Partition,
    PointWeights, QuantumEffect, QuantumSea,
};

/// Condition-number cutoff above which a drawn normalizer is rejected.
const CONDITION_CUTOFF: f64 = 1e12;
/// Redraw budget for rejection sampling.
const MAX_REDRAWS: usize = 100;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("generator gave up after {attempts} rejected draws")]
    RetriesExhausted { attempts: usize },
}

/// The RNG stream for one trial: ChaCha keyed by the master seed with the
/// trial index as the stream counter, so trials are independent and any one
/// of them can be replayed without running the others.
pub fn trial_rng(master_seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// d×d matrix of independent standard complex Gaussians.
pub fn ginibre<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Random density matrix ρ = G G† / tr(G G†) with G Ginibre.
pub fn gen_random_density<R: Rng>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = ginibre(dim, rng);
    let gram = &g * &g.adjoint();
    let trace = gram.trace().re;
    DensityMatrix::new(gram.scaled(1.0 / trace)).expect("normalized Gram matrix is a density")
}

/// Random effect with independently uniform spectrum in [0, 1], rotated by
/// the eigenbasis of a random Hermitian matrix.
pub fn gen_random_effect<R: Rng>(sea: &QuantumSea, rng: &mut R) -> QuantumEffect {
    let h = ginibre(sea.dim(), rng).hermitized();
    let basis = eig_hermitian(&h).expect("hermitized Ginibre").eigenvectors().clone();
    let spectrum: Vec<f64> = (0..sea.dim()).map(|_| rng.random()).collect();
    let diag = ComplexMatrix::from_real_diag(&spectrum);
    sea.effect((&(&basis * &diag) * &basis.adjoint()).hermitized())
        .expect("conjugated diagonal stays an effect")
}

/// Random projection of the given rank (0 ≤ rank ≤ d).
pub fn gen_random_projection<R: Rng>(
    sea: &QuantumSea,
    rank: usize,
    rng: &mut R,
) -> QuantumEffect {
    assert!(rank <= sea.dim(), "rank exceeds dimension");
    let h = ginibre(sea.dim(), rng).hermitized();
    let basis = eig_hermitian(&h).expect("hermitized Ginibre").eigenvectors().clone();
    let spectrum: Vec<f64> = (0..sea.dim())
        .map(|i| if i < rank { 1.0 } else { 0.0 })
        .collect();
    let diag = ComplexMatrix::from_real_diag(&spectrum);
    sea.effect((&(&basis * &diag) * &basis.adjoint()).hermitized())
        .expect("conjugated indicator diagonal is a projection")
}

/// Random effect partition of k parts: PSD blocks G_i = M_i M_i†
/// normalized by S^{−1/2} with S their sum, so the parts add to the
/// identity by construction. Draws with cond(S) beyond the cutoff are
/// rejected and redrawn; the redraw count comes back with the partition.
pub fn gen_random_effect_partition<R: Rng>(
    sea: &QuantumSea,
    parts: usize,
    rng: &mut R,
) -> Result<(Partition<QuantumEffect>, usize), GenError> {
    assert!(parts >= 1, "a partition needs at least one part");
    let dim = sea.dim();
    let mut redraws = 0;
    loop {
        if redraws > MAX_REDRAWS {
            return Err(GenError::RetriesExhausted { attempts: redraws });
        }
        let blocks: Vec<ComplexMatrix> = (0..parts)
            .map(|_| {
                let m = ginibre(dim, rng);
                &m * &m.adjoint()
            })
            .collect();
        let mut total = ComplexMatrix::zeros(dim);
        for b in &blocks {
            total = &total + b;
        }
        let eig = match eig_hermitian(&total) {
            Ok(eig) => eig,
            Err(_) => {
                redraws += 1;
                continue;
            }
        };
        if eig.min_eigenvalue() <= 0.0
            || eig.max_eigenvalue() / eig.min_eigenvalue() > CONDITION_CUTOFF
        {
            redraws += 1;
            continue;
        }
        let inv_sqrt = eig.map_spectrum(|lambda| 1.0 / lambda.sqrt());
        let elements: Result<Vec<QuantumEffect>, _> = blocks
            .iter()
            .map(|b| sea.effect((&(&inv_sqrt * b) * &inv_sqrt).hermitized()))
            .collect();
        let elements = match elements {
            Ok(e) => e,
            Err(_) => {
                redraws += 1;
                continue;
            }
        };
        match Partition::new(sea, elements) {
            Ok(partition) => return Ok((partition, redraws)),
            Err(_) => {
                redraws += 1;
                continue;
            }
        }
    }
}

/// Random surjective assignment of the n atoms to k blocks: after a
/// shuffle, the first k atoms seed one block each and the rest land
/// uniformly, so no block is empty.
pub fn gen_random_boolean_partition<R: Rng>(
    sea: &BooleanSea,
    parts: usize,
    rng: &mut R,
) -> Partition<BooleanElement> {
    let n = sea.ground_size();
    assert!(
        (1..=n).contains(&parts),
        "block count must be between 1 and the ground size"
    );
    let mut atoms: Vec<usize> = (0..n).collect();
    atoms.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); parts];
    for (i, atom) in atoms.into_iter().enumerate() {
        if i < parts {
            blocks[i].push(atom);
        } else {
            blocks[rng.random_range(0..parts)].push(atom);
        }
    }
    let elements = blocks.iter().map(|ix| sea.element(ix).unwrap()).collect();
    Partition::new(sea, elements).expect("blocks cover the ground set")
}

/// Random fuzzy partition: an independent random probability vector over
/// the k parts at every ground point, so the memberships at each point sum
/// to one.
pub fn gen_random_fuzzy_partition<R: Rng>(
    sea: &FuzzySea,
    parts: usize,
    rng: &mut R,
) -> Partition<FuzzyElement> {
    assert!(parts >= 1, "a partition needs at least one part");
    let n = sea.ground_size();
    let splits: Vec<Vec<f64>> = (0..n)
        .map(|_| random_probability_vector(parts, rng))
        .collect();
    let elements = (0..parts)
        .map(|k| {
            sea.element(splits.iter().map(|split| split[k]).collect())
                .unwrap()
        })
        .collect();
    Partition::new(sea, elements).expect("pointwise splits sum to one")
}

pub fn gen_random_atom_weights<R: Rng>(n: usize, rng: &mut R) -> AtomWeights {
    AtomWeights::new(random_probability_vector(n, rng)).expect("normalized draws")
}

pub fn gen_random_point_weights<R: Rng>(n: usize, rng: &mut R) -> PointWeights {
    PointWeights::new(random_probability_vector(n, rng)).expect("normalized draws")
}

/// Uniform point of the probability simplex via normalized exponentials.
pub fn random_probability_vector<R: Rng>(len: usize, rng: &mut R) -> Vec<f64> {
    let draws: Vec<f64> = (0..len)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|d| d / total).collect()
}
