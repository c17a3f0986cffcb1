//! Bayes-property probes: a state has the Bayes property when
//! s(b) = Σᵢ s(aᵢ ∧ b) for every probe b. Boolean states always do;
//! projection lattices generally do not, which is what makes meet-based
//! refinements collapse there.

use sea_core::{MeetError, Partition, SharpMeet};

/// Residual s(b) − Σᵢ s(aᵢ ∧ b) for each probe, in probe order. Fails
/// when the instance has no meet for the supplied elements (unsharp
/// quantum operands).
pub fn check_bayes<S: SharpMeet>(
    sea: &S,
    state: &S::State,
    partition: &Partition<S::Element>,
    probes: &[S::Element],
) -> Result<Vec<f64>, MeetError> {
    probes
        .iter()
        .map(|probe| {
            let direct = sea.eval(state, probe);
            let mut through_meets = 0.0;
            for a in partition.iter() {
                through_meets += sea.eval(state, &sea.try_meet(a, probe)?);
            }
            Ok(direct - through_meets)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use sea_core::{AtomWeights, BooleanSea, SequentialEffectAlgebra};

    #[test]
    fn boolean_states_have_the_bayes_property() {
        let sea = BooleanSea::new(6).unwrap();
        let mut rng = gen::trial_rng(4, 0);
        for _ in 0..20 {
            let state = gen::gen_random_atom_weights(6, &mut rng);
            let partition = gen::gen_random_boolean_partition(&sea, 3, &mut rng);
            let probes = vec![
                sea.element(&[0, 2, 4]).unwrap(),
                sea.one(),
                sea.zero(),
            ];
            let residuals = check_bayes(&sea, &state, &partition, &probes).unwrap();
            for r in residuals {
                assert!(r.abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn uniform_dyadic_weights_are_exact() {
        let sea = BooleanSea::new(4).unwrap();
        let state = AtomWeights::uniform(4);
        let partition = sea_core::Partition::new(
            &sea,
            vec![sea.element(&[0, 1]).unwrap(), sea.element(&[2, 3]).unwrap()],
        )
        .unwrap();
        let probes = vec![sea.element(&[1, 2]).unwrap(), sea.one()];
        let residuals = check_bayes(&sea, &state, &partition, &probes).unwrap();
        assert_eq!(residuals, vec![0.0, 0.0]);
    }
}
