//! Shared helpers for the integration tests: seeded generators and
//! oracle computations kept independent of the library code paths they
//! check.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use sea_core::spectral::{eig_hermitian, ComplexMatrix};
use sea_core::{
    AtomWeights, BooleanElement, BooleanSea, FuzzyElement, FuzzySea, Partition, PointWeights,
    QuantumEffect, QuantumSea,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ginibre(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

pub fn random_effect(sea: &QuantumSea, rng: &mut ChaCha8Rng) -> QuantumEffect {
    let g = ginibre(sea.dim(), rng);
    let h = g.hermitized();
    let eig = eig_hermitian(&h).unwrap();
    let spectrum: Vec<f64> = (0..sea.dim()).map(|_| rng.random()).collect();
    let v = eig.eigenvectors().clone();
    let mut m = ComplexMatrix::zeros(sea.dim());
    for (j, lambda) in spectrum.iter().enumerate() {
        let col: Vec<Complex64> = (0..sea.dim()).map(|i| v.entry(i, j)).collect();
        let outer = ComplexMatrix::from_fn(sea.dim(), |r, c| col[r] * col[c].conj());
        m = &m + &outer.scaled(*lambda);
    }
    sea.effect(m.hermitized()).unwrap()
}

pub fn random_projection(sea: &QuantumSea, rank: usize, rng: &mut ChaCha8Rng) -> QuantumEffect {
    let g = ginibre(sea.dim(), rng);
    let h = g.hermitized();
    let eig = eig_hermitian(&h).unwrap();
    let v = eig.eigenvectors().clone();
    let mut m = ComplexMatrix::zeros(sea.dim());
    for j in 0..rank {
        let col: Vec<Complex64> = (0..sea.dim()).map(|i| v.entry(i, j)).collect();
        let outer = ComplexMatrix::from_fn(sea.dim(), |r, c| col[r] * col[c].conj());
        m = &m + &outer;
    }
    sea.effect(m.hermitized()).unwrap()
}

/// Random effect partition: PSD blocks G_i normalized by the inverse
/// square root of their sum.
pub fn random_effect_partition(
    sea: &QuantumSea,
    parts: usize,
    rng: &mut ChaCha8Rng,
) -> Partition<QuantumEffect> {
    let dim = sea.dim();
    loop {
        let blocks: Vec<ComplexMatrix> = (0..parts)
            .map(|_| {
                let g = ginibre(dim, rng);
                &g * &g.adjoint()
            })
            .collect();
        let mut total = ComplexMatrix::zeros(dim);
        for b in &blocks {
            total = &total + b;
        }
        let eig = eig_hermitian(&total).unwrap();
        if eig.min_eigenvalue() <= 0.0 || eig.max_eigenvalue() / eig.min_eigenvalue() > 1e12 {
            continue;
        }
        let inv_sqrt = eig.map_spectrum(|l| 1.0 / l.sqrt());
        let elements: Vec<QuantumEffect> = blocks
            .iter()
            .map(|b| sea.effect((&(&inv_sqrt * b) * &inv_sqrt).hermitized()).unwrap())
            .collect();
        if let Ok(p) = Partition::new(sea, elements) {
            return p;
        }
    }
}

pub fn random_boolean_partition(
    sea: &BooleanSea,
    parts: usize,
    rng: &mut ChaCha8Rng,
) -> Partition<BooleanElement> {
    let n = sea.ground_size();
    assert!(parts <= n);
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
    let elements = blocks
        .iter()
        .map(|ix| sea.element(ix).unwrap())
        .collect();
    Partition::new(sea, elements).unwrap()
}

pub fn random_fuzzy_partition(
    sea: &FuzzySea,
    parts: usize,
    rng: &mut ChaCha8Rng,
) -> Partition<FuzzyElement> {
    let n = sea.ground_size();
    let splits: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let draws: Vec<f64> = (0..parts)
                .map(|_| -(1.0 - rng.random::<f64>()).ln())
                .collect();
            let total: f64 = draws.iter().sum();
            draws.iter().map(|d| d / total).collect()
        })
        .collect();
    let elements = (0..parts)
        .map(|k| sea.element(splits.iter().map(|split| split[k]).collect()).unwrap())
        .collect();
    Partition::new(sea, elements).unwrap()
}

pub fn random_weights(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let draws: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = draws.iter().sum();
    draws.iter().map(|d| d / total).collect()
}

pub fn random_atom_weights(n: usize, rng: &mut ChaCha8Rng) -> AtomWeights {
    AtomWeights::new(random_weights(n, rng)).unwrap()
}

pub fn random_point_weights(n: usize, rng: &mut ChaCha8Rng) -> PointWeights {
    PointWeights::new(random_weights(n, rng)).unwrap()
}

/// Plain triple-loop complex matrix product, independent of the library's
/// linear algebra backend. Used as the oracle for product identities.
pub fn naive_matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    let n = a.dim();
    let ar = a.rows();
    let br = b.rows();
    let mut out = vec![vec![Complex64::ZERO; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::ZERO;
            for k in 0..n {
                acc += ar[i][k] * br[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn frobenius_gap(rows: &[Vec<Complex64>], m: &ComplexMatrix) -> f64 {
    let mut acc = 0.0;
    for (i, row) in rows.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            acc += (z - m.entry(i, j)).norm_sqr();
        }
    }
    acc.sqrt()
}

/// Shannon entropy of a probability vector; the classical oracle.
pub fn shannon(probs: &[f64], base: f64) -> f64 {
    -probs
        .iter()
        .filter(|p| **p > 0.0)
        .map(|p| p * p.ln() / base.ln())
        .sum::<f64>()
}

/// Induced joint distribution p(i, j) over block pairs of two Boolean
/// partitions: the total weight of a_i ∩ b_j, summed atom by atom.
pub fn boolean_joint(
    weights: &[f64],
    a: &Partition<BooleanElement>,
    b: &Partition<BooleanElement>,
) -> Vec<Vec<f64>> {
    a.iter()
        .map(|ai| {
            b.iter()
                .map(|bj| {
                    (0..weights.len())
                        .filter(|&x| ai.contains(x) && bj.contains(x))
                        .map(|x| weights[x])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Every set partition of {0, …, n−1} into nonempty blocks, enumerated via
/// restricted-growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn recurse(rgs: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rgs.len();
        if pos == n {
            let block_count = max_used + 1;
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
            for (i, &label) in rgs.iter().enumerate() {
                blocks[label].push(i);
            }
            out.push(blocks);
            return;
        }
        for label in 0..=max_used + 1 {
            rgs[pos] = label;
            recurse(rgs, pos + 1, max_used.max(label), out);
        }
    }
    if n == 0 {
        return out;
    }
    recurse(&mut rgs, 1, 0, &mut out);
    out
}
