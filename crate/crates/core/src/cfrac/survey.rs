//! Empirical frequencies of mixing among random rationals.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{cf_of_rational, excluded_index};
use crate::{Error, Gap, Rational, Result};

/// Denominator of the sampled rationals `p / q`.
pub const SURVEY_DENOMINATOR: i128 = 1_000_000_007;

/// Samples are drawn from `[0, SURVEY_RANGE)`.
const SURVEY_RANGE: i128 = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyStats {
    pub samples: usize,
    pub horizon: usize,
    /// Points `1/n`, outside the parametrization.
    pub excluded: usize,
    pub admitted: usize,
    /// Admitted samples; rationals always give finite gap sets.
    pub sft: usize,
    pub mixing: usize,
    pub non_mixing: usize,
    /// The gcd stayed above 1 on the first `horizon` digits of a longer
    /// expansion.
    pub undecided: usize,
    /// `mixing / admitted`.
    pub mixing_frequency: f64,
}

/// Survey over `samples` uniform draws `p / SURVEY_DENOMINATOR` in `[0, 10)`.
pub fn survey(samples: usize, horizon: usize, seed: u64) -> Result<SurveyStats> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<Rational> = (0..samples)
        .map(|_| {
            let p = rng.gen_range(0..SURVEY_RANGE * SURVEY_DENOMINATOR);
            Rational::new(p, SURVEY_DENOMINATOR)
        })
        .collect();
    survey_values(&values, horizon)
}

/// Survey over the given values.
pub fn survey_values(values: &[Rational], horizon: usize) -> Result<SurveyStats> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    let mut stats = SurveyStats {
        samples: values.len(),
        horizon,
        excluded: 0,
        admitted: 0,
        sft: 0,
        mixing: 0,
        non_mixing: 0,
        undecided: 0,
        mixing_frequency: 0.0,
    };
    for x in values {
        let cf = cf_of_rational(x)?;
        if excluded_index(&cf).is_some() {
            stats.excluded += 1;
            continue;
        }
        stats.admitted += 1;
        stats.sft += 1;
        let digits: Vec<Gap> = std::iter::once(cf.a0).chain(cf.pre.iter().copied()).collect();
        let mut s: Gap = 0;
        let mut g: Gap = 0;
        for &d in digits.iter().take(horizon) {
            s += d;
            g = g.gcd(&(s + 1));
            if g == 1 {
                break;
            }
        }
        if g == 1 {
            stats.mixing += 1;
        } else if digits.len() <= horizon {
            stats.non_mixing += 1;
        } else {
            stats.undecided += 1;
        }
    }
    if stats.admitted > 0 {
        stats.mixing_frequency = stats.mixing as f64 / stats.admitted as f64;
    }
    Ok(stats)
}
