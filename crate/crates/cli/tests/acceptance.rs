//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured margins (visible under --nocapture).
//!
//! The heavy law campaigns run once in a shared lazy block and are reused
//! by the criteria that read different aspects of the same reports.

use std::sync::LazyLock;
use std::time::{Duration, Instant};

use sea_core::spectral::{eig_hermitian, join_projections, meet_projections, ComplexMatrix};
use sea_core::{cond_entropy, entropy, refine, AtomWeights, BooleanSea, EntropyOptions, Partition};
use sea_verify::{
    check_sea_axioms, run_logsum_fuzz, run_theorem_campaign, scenario_example_2_3,
    scenario_nondistributivity, AxiomsConfig, CampaignConfig, CampaignReport, InstanceKind,
    LogSumConfig,
};

/// Size menu cycling through (2,3,4), (3,4,2), (4,2,3) so every partition
/// slot sees every size in {2,3,4}.
const SIZE_MENU: [usize; 9] = [2, 3, 4, 3, 4, 2, 4, 2, 3];

struct Campaigns {
    quantum: Vec<CampaignReport>,
    boolean: CampaignReport,
    fuzzy: CampaignReport,
    /// Wall-clock time of the quantum and Boolean campaigns together.
    core_runtime: Duration,
}

static CAMPAIGNS: LazyLock<Campaigns> = LazyLock::new(|| {
    let start = Instant::now();
    let quantum = (2..=5)
        .map(|dim| {
            run_theorem_campaign(&CampaignConfig {
                instance: InstanceKind::Quantum,
                size: dim,
                partition_sizes: SIZE_MENU.to_vec(),
                trials: 1000,
                seed: 7,
                tolerance: 1e-9,
                log_base: 2.0,
            })
            .expect("valid config")
        })
        .collect();
    let boolean = run_theorem_campaign(&CampaignConfig {
        instance: InstanceKind::Boolean,
        size: 6,
        partition_sizes: SIZE_MENU.to_vec(),
        trials: 1000,
        seed: 7,
        tolerance: 1e-12,
        log_base: 2.0,
    })
    .expect("valid config");
    let core_runtime = start.elapsed();

    let fuzzy = run_theorem_campaign(&CampaignConfig {
        instance: InstanceKind::Fuzzy,
        size: 5,
        partition_sizes: SIZE_MENU.to_vec(),
        trials: 1000,
        seed: 7,
        tolerance: 1e-9,
        log_base: 2.0,
    })
    .expect("valid config");

    Campaigns {
        quantum,
        boolean,
        fuzzy,
        core_runtime,
    }
});

fn law<'a>(report: &'a CampaignReport, name: &str) -> &'a sea_verify::LawStats {
    report
        .laws
        .iter()
        .find(|l| l.law == name)
        .expect("law present in report")
}

#[test]
fn criterion_1_chain_rule() {
    let campaigns = &*CAMPAIGNS;
    let mut worst_quantum: f64 = 0.0;
    for report in &campaigns.quantum {
        assert_eq!(report.trial_errors, 0);
        let chain = law(report, "chain_rule");
        assert_eq!(
            chain.failures, 0,
            "chain rule failed at dim {} (worst {:.3e})",
            report.config.size, chain.worst_residual
        );
        assert!(chain.worst_residual.abs() <= 1e-9);
        worst_quantum = worst_quantum.max(chain.worst_residual.abs());
    }

    let boolean_chain = law(&campaigns.boolean, "chain_rule");
    assert_eq!(boolean_chain.failures, 0);
    assert!(boolean_chain.worst_residual.abs() <= 1e-12);

    assert!(
        campaigns.core_runtime < Duration::from_secs(60),
        "campaigns took {:?}",
        campaigns.core_runtime
    );
    println!(
        "criterion 1 (chain rule): PASS — worst |r1| quantum {:.3e}, boolean {:.3e}, runtime {:?}",
        worst_quantum,
        boolean_chain.worst_residual.abs(),
        campaigns.core_runtime
    );
}

#[test]
fn criterion_2_inequalities() {
    let campaigns = &*CAMPAIGNS;
    let inequality_laws = [
        "refine_conditional",
        "posterior_entropy",
        "subadditivity",
        "refine_floor",
        "cond_triangle",
    ];
    let mut reports: Vec<&CampaignReport> = campaigns.quantum.iter().collect();
    reports.push(&campaigns.boolean);
    reports.push(&campaigns.fuzzy);

    let mut most_negative: f64 = f64::INFINITY;
    for report in reports {
        assert_eq!(report.trial_errors, 0);
        for name in inequality_laws {
            let stats = law(report, name);
            assert_eq!(
                stats.failures, 0,
                "{name} failed for {} size {} (worst {:.3e})",
                report.config.instance, report.config.size, stats.worst_residual
            );
            assert!(stats.worst_residual >= -1e-9);
            most_negative = most_negative.min(stats.worst_residual);
        }
    }
    println!(
        "criterion 2 (inequalities): PASS — most negative residual {most_negative:.3e} across all instances"
    );
}

#[test]
fn criterion_3_two_basis_reproduction() {
    let record = scenario_example_2_3();

    for pair in ["p1_q1", "p1_q2", "p2_q1", "p2_q2"] {
        assert!(record.values[&format!("meet_norm_{pair}")] <= 1e-10);
    }
    for q in ["q1", "q2"] {
        assert!((record.values[&format!("bayes_residual_{q}")] - 0.5).abs() <= 1e-12);
    }
    assert!((record.values["bayes_direct_total"] - 1.0).abs() <= 1e-12);
    assert!(record.values["bayes_meet_total"].abs() <= 1e-12);
    assert!(record.values["refinement_unit_defect"] <= 1e-10);
    assert!(record.values["refinement_element_gap"] <= 1e-10);
    assert!((record.values["entropy_a"] - 1.0).abs() <= 1e-12);
    assert!((record.values["entropy_b_given_a"] - 1.0).abs() <= 1e-12);
    assert!((record.values["entropy_refinement"] - 2.0).abs() <= 1e-12);
    assert!(record.all_true());
    println!(
        "criterion 3 (two-basis scenario): PASS — entropies ({}, {}, {}) bits",
        record.values["entropy_a"],
        record.values["entropy_b_given_a"],
        record.values["entropy_refinement"]
    );
}

#[test]
fn criterion_4_axiom_suite() {
    let mut summary = Vec::new();
    for (instance, size) in [
        (InstanceKind::Boolean, 6),
        (InstanceKind::Fuzzy, 5),
        (InstanceKind::Quantum, 4),
    ] {
        let report = check_sea_axioms(&AxiomsConfig {
            instance,
            size,
            trials: 500,
            seed: 11,
        })
        .expect("valid config");
        assert!(report.all_passed(), "{instance}: {:?}", report.laws);

        let worst = |name: &str| {
            report
                .laws
                .iter()
                .find(|l| l.law == name)
                .expect("law present")
                .worst_residual
        };
        assert!(worst("sea2_unit") <= 1e-12);
        assert!(worst("sea1_additivity") <= 1e-10);
        assert!(worst("sea3_annihilation") <= 1e-9);
        summary.push(format!(
            "{instance}: sea1 {:.1e}, sea2 {:.1e}, sea3 {:.1e}",
            worst("sea1_additivity"),
            worst("sea2_unit"),
            worst("sea3_annihilation")
        ));
    }
    println!(
        "criterion 4 (axiom suite): PASS — worst deviations {}",
        summary.join("; ")
    );
}

#[test]
fn criterion_5_log_sum_fuzz() {
    let report = run_logsum_fuzz(&LogSumConfig::standard(10_000, 1)).expect("valid config");
    assert!(report.min_residual >= -1e-12, "min {:.3e}", report.min_residual);
    assert!(report.equality_max_abs <= 1e-12);
    println!(
        "criterion 5 (log sum): PASS — min residual {:.3e}, equality max {:.3e}",
        report.min_residual, report.equality_max_abs
    );
}

#[test]
fn criterion_6_boolean_shannon_oracle() {
    fn shannon(probs: &[f64]) -> f64 {
        -probs
            .iter()
            .filter(|p| **p > 0.0)
            .map(|p| p * p.log2())
            .sum::<f64>()
    }

    fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn recurse(
            rgs: &mut Vec<usize>,
            pos: usize,
            max_used: usize,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            let n = rgs.len();
            if pos == n {
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max_used + 1];
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
        let mut out = Vec::new();
        recurse(&mut vec![0; n], 1, 0, &mut out);
        out
    }

    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
    let opts = EntropyOptions::bits();
    let mut worst_gap: f64 = 0.0;
    let mut cases = 0usize;

    for n in 1..=4usize {
        let sea = BooleanSea::new(n).unwrap();
        let partitions: Vec<Partition<_>> = set_partitions(n)
            .iter()
            .map(|blocks| {
                let elements = blocks.iter().map(|b| sea.element(b).unwrap()).collect();
                Partition::new(&sea, elements).unwrap()
            })
            .collect();

        for _ in 0..100 {
            let draws: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let total: f64 = draws.iter().sum();
            let weights: Vec<f64> = draws.iter().map(|d| d / total).collect();
            let state = AtomWeights::new(weights.clone()).unwrap();

            for a in &partitions {
                for b in &partitions {
                    let joint: Vec<Vec<f64>> = a
                        .iter()
                        .map(|ai| {
                            b.iter()
                                .map(|bj| {
                                    (0..n)
                                        .filter(|&x| ai.contains(x) && bj.contains(x))
                                        .map(|x| weights[x])
                                        .sum()
                                })
                                .collect()
                        })
                        .collect();
                    let marginals: Vec<f64> = joint.iter().map(|row| row.iter().sum()).collect();
                    let flat: Vec<f64> = joint.iter().flatten().copied().collect();

                    let gap_h = (entropy(&sea, &state, a, opts) - shannon(&marginals)).abs();
                    let refined = refine(&sea, a, b).unwrap();
                    let gap_r = (entropy(&sea, &state, &refined, opts) - shannon(&flat)).abs();
                    let gap_c = (cond_entropy(&sea, &state, b, a, opts)
                        - (shannon(&flat) - shannon(&marginals)))
                    .abs();
                    for gap in [gap_h, gap_r, gap_c] {
                        assert!(gap <= 1e-12, "oracle gap {gap:.3e} at n={n}");
                        worst_gap = worst_gap.max(gap);
                    }
                    cases += 1;
                }
            }
        }
    }
    println!(
        "criterion 6 (Shannon oracle): PASS — {cases} cases, worst gap {worst_gap:.3e}"
    );
}

#[test]
fn criterion_7_quantum_logic_laws() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
    let mut worst_defect: f64 = 0.0;

    for case in 0..200 {
        let dim = 2 + case % 3; // 2, 3, 4
        let basis_src = sea_verify::gen::ginibre(dim, &mut rng).hermitized();
        let basis = eig_hermitian(&basis_src).unwrap().eigenvectors().clone();
        let outer_rank = rng.random_range(1..=dim);
        let inner_rank = rng.random_range(0..=outer_rank);
        let projector_of = |rank: usize| {
            let spectrum: Vec<f64> = (0..dim)
                .map(|i| if i < rank { 1.0 } else { 0.0 })
                .collect();
            let diag = ComplexMatrix::from_real_diag(&spectrum);
            (&(&basis * &diag) * &basis.adjoint()).hermitized()
        };
        let big = projector_of(outer_rank);
        let small = projector_of(inner_rank);

        // Orthomodular law: R = P ∨ (R ∧ P′) whenever P ≤ R.
        let complement = &ComplexMatrix::identity(dim) - &small;
        let inner = meet_projections(&big, &complement).unwrap();
        let rebuilt = join_projections(&small, &inner).unwrap();
        let defect = (&rebuilt - &big).frobenius_norm();
        assert!(defect <= 1e-8, "orthomodular defect {defect:.3e}");
        worst_defect = worst_defect.max(defect);
    }

    let record = scenario_nondistributivity();
    assert!((record.values["distributive_gap"] - 1.0).abs() <= 1e-10);
    assert!(record.all_true());
    println!(
        "criterion 7 (quantum logic): PASS — worst orthomodular defect {:.3e}, distributivity gap {}",
        worst_defect, record.values["distributive_gap"]
    );
}

#[test]
fn criterion_8_deterministic_reports_across_workers() {
    let dir = tempfile::tempdir().unwrap();
    let args = |workers: &str, path: &std::path::Path| {
        vec![
            "check-theorem".to_string(),
            "--instance".into(),
            "quantum".into(),
            "--dim".into(),
            "3".into(),
            "--sizes".into(),
            "2,3,2".into(),
            "--trials".into(),
            "120".into(),
            "--seed".into(),
            "7".into(),
            "--workers".into(),
            workers.into(),
            "--json".into(),
            path.to_str().unwrap().into(),
        ]
    };

    let single = dir.path().join("workers1.json");
    let parallel = dir.path().join("workers8.json");
    let rerun = dir.path().join("workers1_again.json");
    for (workers, path) in [("1", &single), ("8", &parallel), ("1", &rerun)] {
        let output = std::process::Command::new(env!("CARGO_BIN_EXE_sea"))
            .args(args(workers, path))
            .output()
            .expect("binary runs");
        assert_eq!(output.status.code(), Some(0));
    }

    let single_bytes = std::fs::read(&single).unwrap();
    assert_eq!(single_bytes, std::fs::read(&parallel).unwrap());
    assert_eq!(single_bytes, std::fs::read(&rerun).unwrap());
    println!(
        "criterion 8 (determinism): PASS — byte-identical reports at workers 1 and 8 ({} bytes)",
        single_bytes.len()
    );
}
