//! Scripted scenario reproductions on the two-basis qubit configuration:
//! two rank-one projection pairs P = {P₁, P₂} and Q = {Q₁, Q₂} measuring
//! complementary bases, where every pairwise meet vanishes. Meet-based
//! refinement and the Bayes property collapse there, while the
//! sequential-product refinement works and the entropy chain rule holds.

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use sea_core::spectral::{join_projections, meet_projections, ComplexMatrix};
use sea_core::{
    cond_entropy, entropy, refine, DensityMatrix, EntropyOptions, Partition, QuantumSea,
    SequentialEffectAlgebra,
};

/// Named scenario outcome: the computed numbers and one verdict per claim,
/// derived only from the recorded values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioRecord {
    pub id: String,
    pub values: IndexMap<String, f64>,
    pub verdicts: IndexMap<String, bool>,
}

impl ScenarioRecord {
    pub fn all_true(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// P₁, P₂: projections onto the coordinate axes; Q₁, Q₂: projections onto
/// the diagonal axes.
fn witness_matrices() -> [ComplexMatrix; 4] {
    let p1 = ComplexMatrix::from_real_diag(&[0.0, 1.0]);
    let p2 = ComplexMatrix::from_real_diag(&[1.0, 0.0]);
    let q1 = ComplexMatrix::from_rows(&[
        vec![c(0.5, 0.0), c(0.5, 0.0)],
        vec![c(0.5, 0.0), c(0.5, 0.0)],
    ])
    .expect("square finite matrix");
    let q2 = ComplexMatrix::from_rows(&[
        vec![c(0.5, 0.0), c(-0.5, 0.0)],
        vec![c(-0.5, 0.0), c(0.5, 0.0)],
    ])
    .expect("square finite matrix");
    [p1, p2, q1, q2]
}

/// Reproduces the two-basis counterexample end to end: vanishing meets,
/// the Bayes contradiction at the maximally mixed state, the working
/// ∘-refinement, and the entropy chain rule values (1, 1, 2) bits.
pub fn scenario_example_2_3() -> ScenarioRecord {
    let [p1, p2, q1, q2] = witness_matrices();
    let sea = QuantumSea::new(2).expect("dimension 2");
    let rho = DensityMatrix::maximally_mixed(2);
    let opts = EntropyOptions::bits();

    let mut values = IndexMap::new();
    let mut verdicts = IndexMap::new();

    // (a) Every pairwise meet is the zero projection.
    let mut max_meet_norm: f64 = 0.0;
    for (pi, pname) in [(&p1, "p1"), (&p2, "p2")] {
        for (qj, qname) in [(&q1, "q1"), (&q2, "q2")] {
            let norm = meet_projections(pi, qj)
                .expect("witness matrices are projections")
                .frobenius_norm();
            values.insert(format!("meet_norm_{pname}_{qname}"), norm);
            max_meet_norm = max_meet_norm.max(norm);
        }
    }
    verdicts.insert("meets_vanish".into(), max_meet_norm <= 1e-10);

    // (b) Bayes contradiction: each s(Qⱼ) is ½ while every meet carries
    // zero weight, so 1 = s(Q₁) + s(Q₂) against 0 through the meets.
    let a_elems = [
        sea.effect(p1.clone()).expect("projection is an effect"),
        sea.effect(p2.clone()).expect("projection is an effect"),
    ];
    let partition_p = Partition::new(&sea, a_elems.to_vec()).expect("P pair sums to I");
    let probes = [
        sea.effect(q1.clone()).expect("projection is an effect"),
        sea.effect(q2.clone()).expect("projection is an effect"),
    ];
    let residuals = crate::bayes::check_bayes(&sea, &rho, &partition_p, &probes)
        .expect("projections admit meets");
    values.insert("bayes_residual_q1".into(), residuals[0]);
    values.insert("bayes_residual_q2".into(), residuals[1]);
    let direct_total: f64 = probes.iter().map(|q| sea.eval(&rho, q)).sum();
    let meet_total = direct_total - residuals.iter().sum::<f64>();
    values.insert("bayes_direct_total".into(), direct_total);
    values.insert("bayes_meet_total".into(), meet_total);
    verdicts.insert(
        "bayes_contradiction".into(),
        residuals.iter().all(|r| (r - 0.5).abs() <= 1e-12)
            && (direct_total - 1.0).abs() <= 1e-12
            && meet_total.abs() <= 1e-12,
    );

    // (c) The ∘-refinement {Qⱼ ∘ Pᵢ} = {½Q₁, ½Q₁, ½Q₂, ½Q₂} is a partition.
    let partition_q = Partition::new(&sea, probes.to_vec()).expect("Q pair sums to I");
    let refined = refine(&sea, &partition_q, &partition_p).expect("refinement stays a partition");
    let expected = [
        sea.effect(q1.scaled(0.5)).expect("half projection"),
        sea.effect(q1.scaled(0.5)).expect("half projection"),
        sea.effect(q2.scaled(0.5)).expect("half projection"),
        sea.effect(q2.scaled(0.5)).expect("half projection"),
    ];
    let element_gap = refined
        .iter()
        .zip(&expected)
        .map(|(got, want)| sea.distance(got, want))
        .fold(0.0, f64::max);
    let mut total = ComplexMatrix::zeros(2);
    for e in refined.iter() {
        total = &total + e.matrix();
    }
    let unit_defect = (&total - &ComplexMatrix::identity(2)).frobenius_norm();
    values.insert("refinement_element_gap".into(), element_gap);
    values.insert("refinement_unit_defect".into(), unit_defect);
    verdicts.insert(
        "refinement_works".into(),
        element_gap <= 1e-10 && unit_defect <= 1e-10,
    );

    // (d) Entropies at the maximally mixed state: H(A) = 1, H(B|A) = 1,
    // H(A∘B) = 2 bits, so the chain rule is exact.
    let h_a = entropy(&sea, &rho, &partition_q, opts);
    let h_b_given_a = cond_entropy(&sea, &rho, &partition_p, &partition_q, opts);
    let h_ab = entropy(&sea, &rho, &refined, opts);
    values.insert("entropy_a".into(), h_a);
    values.insert("entropy_b_given_a".into(), h_b_given_a);
    values.insert("entropy_refinement".into(), h_ab);
    values.insert("chain_residual".into(), h_ab - h_b_given_a - h_a);
    verdicts.insert(
        "entropy_chain".into(),
        (h_a - 1.0).abs() <= 1e-12
            && (h_b_given_a - 1.0).abs() <= 1e-12
            && (h_ab - 2.0).abs() <= 1e-12,
    );

    ScenarioRecord {
        id: "example-2-3".into(),
        values,
        verdicts,
    }
}

/// The lattice side of the same configuration: the distributive law fails
/// by a Frobenius gap of exactly 1, while the orthomodular law holds on
/// nested pairs.
pub fn scenario_nondistributivity() -> ScenarioRecord {
    let [p1, _p2, q1, q2] = witness_matrices();
    let id2 = ComplexMatrix::identity(2);

    let mut values = IndexMap::new();
    let mut verdicts = IndexMap::new();

    // meet(P1, Q1 ∨ Q2) = P1, but the meets distribute to nothing.
    let join_q = join_projections(&q1, &q2).expect("projections");
    let lhs = meet_projections(&p1, &join_q).expect("projections");
    let rhs = join_projections(
        &meet_projections(&p1, &q1).expect("projections"),
        &meet_projections(&p1, &q2).expect("projections"),
    )
    .expect("meets are projections");
    let gap = (&lhs - &rhs).frobenius_norm();
    values.insert("distributive_gap".into(), gap);
    values.insert("lhs_vs_p1".into(), (&lhs - &p1).frobenius_norm());
    values.insert("rhs_norm".into(), rhs.frobenius_norm());
    verdicts.insert("distributivity_fails".into(), (gap - 1.0).abs() <= 1e-10);

    // Orthomodular law b = a ∨ (b ∧ a′) on nested pairs from the same
    // matrices: (P1, I) and (Q1, Q1 ∨ P1).
    let mut worst_orthomodular: f64 = 0.0;
    for (a, b, label) in [
        (p1.clone(), id2.clone(), "p1_under_unit"),
        (
            q1.clone(),
            join_projections(&q1, &p1).expect("projections"),
            "q1_under_join",
        ),
    ] {
        let complement = &id2 - &a;
        let inner = meet_projections(&b, &complement).expect("projections");
        let rebuilt = join_projections(&a, &inner).expect("projections");
        let defect = (&rebuilt - &b).frobenius_norm();
        values.insert(format!("orthomodular_defect_{label}"), defect);
        worst_orthomodular = worst_orthomodular.max(defect);
    }
    verdicts.insert("orthomodular_holds".into(), worst_orthomodular <= 1e-8);

    ScenarioRecord {
        id: "nondistributivity".into(),
        values,
        verdicts,
    }
}
