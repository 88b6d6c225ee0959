//! Jumps of the filtration on the special fiber of the Néron model.
//!
//! For each admissible degree `n` the `H^1` character has `g` exponents `d`;
//! the inverse exponents `(-d) mod n` grow affinely in `n` along the progression
//! `n = 1 mod lcm(multiplicities)`, and their slopes are the jumps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::character::{h1_character, EdgeOrientation};
use crate::dual_graph::DualGraph;
use crate::error::{Error, Result};
use crate::hj::resolve;

pub const DEFAULT_SAMPLES: usize = 4;
pub const DEFAULT_N_MIN: u64 = 50;
const MAX_ATTEMPTS: usize = 4;

/// `e(n) = slope * n + offset` for one rank of the sorted inverse exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFit {
    pub slope: BigRational,
    pub offset: BigRational,
}

impl AffineFit {
    pub fn at(&self, n: u64) -> BigRational {
        &self.slope * BigRational::from_integer(BigInt::from(n)) + &self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpSpectrum {
    /// Sorted, with multiplicity.
    pub jumps: Vec<BigRational>,
    pub predicted_denominator: u64,
    pub samples: Vec<u64>,
    /// Sorted inverse exponents for each sample degree.
    pub exponents: Vec<Vec<u64>>,
    pub fits: Vec<AffineFit>,
}

impl JumpSpectrum {
    /// Numerators of the jumps over the predicted denominator.
    pub fn numerators(&self) -> Vec<u64> {
        let den = BigRational::from_integer(BigInt::from(self.predicted_denominator));
        self.jumps
            .iter()
            .map(|j| {
                let scaled = j * &den;
                debug_assert!(scaled.is_integer());
                scaled.to_integer().to_u64().expect("jump in [0, 1)")
            })
            .collect()
    }

    /// Distinct jumps with their multiplicities, ascending.
    pub fn with_multiplicity(&self) -> Vec<(BigRational, usize)> {
        let mut out: Vec<(BigRational, usize)> = Vec::new();
        for j in &self.jumps {
            match out.last_mut() {
                Some((last, k)) if last == j => *k += 1,
                _ => out.push((j.clone(), 1)),
            }
        }
        out
    }
}

/// The first `count` degrees `n >= n_min` with `n = 1 mod lcm(multiplicities)`
/// at which every edge has a shape-regular resolution chain.
pub fn degree_sequence(graph: &DualGraph, count: usize, n_min: u64) -> Result<Vec<u64>> {
    if count < 3 {
        return Err(Error::BadInput(format!("need at least 3 sample degrees, got {count}")));
    }
    let l = graph.multiplicity_lcm();
    let start = n_min.max(2);
    let mut n = start + (1 + l - start % l) % l;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if n >= 2 && edges_regular(graph, n) {
            out.push(n);
        }
        n += l;
    }
    Ok(out)
}

fn edges_regular(graph: &DualGraph, n: u64) -> bool {
    (0..graph.edges().len()).all(|e| {
        EdgeOrientation::of(graph, e)
            .params(graph, n)
            .and_then(|p| resolve(&p))
            .is_ok_and(|c| c.is_shape_regular())
    })
}

/// Each exponent `d` replaced by `(-d) mod n`.
pub fn inverse_exponents(exponents: &[u64], n: u64) -> Vec<u64> {
    exponents.iter().map(|&d| (n - d % n) % n).collect()
}

fn ratio(a: i128, b: i128) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn fit_ranks(samples: &[u64], exponents: &[Vec<u64>]) -> Result<Vec<AffineFit>> {
    let genus = exponents[0].len();
    let (ia, ib) = (samples.len() - 2, samples.len() - 1);
    let (na, nb) = (samples[ia] as i128, samples[ib] as i128);
    let mut fits = Vec::with_capacity(genus);
    for rank in 0..genus {
        let (ea, eb) = (exponents[ia][rank] as i128, exponents[ib][rank] as i128);
        let slope = ratio(eb - ea, nb - na);
        let offset = BigRational::from_integer(BigInt::from(eb)) - &slope * ratio(nb, 1);
        let fit = AffineFit { slope, offset };
        for (n, exps) in samples.iter().zip(exponents).take(ia) {
            let predicted = fit.at(*n);
            let actual = BigRational::from_integer(BigInt::from(exps[rank]));
            if predicted != actual {
                return Err(Error::FitFailed {
                    rank,
                    detail: format!("degree {n}: predicted {predicted}, found {actual}"),
                });
            }
        }
        fits.push(fit);
    }
    Ok(fits)
}

fn spectrum_at(graph: &DualGraph, samples: Vec<u64>) -> Result<JumpSpectrum> {
    let exponents = samples
        .par_iter()
        .map(|&n| {
            let mut e = inverse_exponents(&h1_character(graph, n)?, n);
            e.sort_unstable();
            Ok(e)
        })
        .collect::<Result<Vec<_>>>()?;
    let fits = fit_ranks(&samples, &exponents)?;
    let den = graph.expected_denominator();
    let den_q = BigRational::from_integer(BigInt::from(den));
    let mut jumps = Vec::with_capacity(fits.len());
    for fit in &fits {
        let j = fit.slope.clone();
        if j < BigRational::zero() || j >= BigRational::from_integer(1.into()) {
            return Err(Error::FitFailed {
                rank: jumps.len(),
                detail: format!("slope {j} outside [0, 1)"),
            });
        }
        if !(&j * &den_q).is_integer() {
            return Err(Error::DenominatorViolation {
                jump: j.to_string(),
                denominator: den,
            });
        }
        jumps.push(j);
    }
    jumps.sort();
    Ok(JumpSpectrum {
        jumps,
        predicted_denominator: den,
        samples,
        exponents,
        fits,
    })
}

/// Jumps of the filtration, recovered from `count` sample degrees starting at `n_min`.
///
/// A failed fit is retried from a larger starting degree a bounded number of times.
pub fn jump_spectrum(graph: &DualGraph, count: usize, n_min: u64) -> Result<JumpSpectrum> {
    let violations = graph.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidGraph(violations));
    }
    if graph.genus()? == 0 {
        return Err(Error::BadInput("genus 0 fiber has no jumps".into()));
    }
    let mut start = n_min;
    let mut last_err = None;
    for _ in 0..MAX_ATTEMPTS {
        let samples = degree_sequence(graph, count, start)?;
        let top = *samples.last().unwrap();
        match spectrum_at(graph, samples) {
            Err(e @ Error::FitFailed { .. }) => {
                last_err = Some(e);
                start = top.saturating_mul(2);
            }
            other => return other,
        }
    }
    Err(last_err.unwrap())
}

/// Whether the numerators of the jumps over `ñ`, together with `ñ`, are coprime.
pub fn check_minimality(spectrum: &JumpSpectrum) -> bool {
    spectrum
        .numerators()
        .into_iter()
        .fold(spectrum.predicted_denominator, |g, i| g.gcd(&i))
        == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_graph::fixtures::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn degrees() {
        let iv = type_iv();
        let d = degree_sequence(&iv, 3, 5).unwrap();
        assert_eq!(d[0], 7);
        assert!(d.iter().all(|n| n % 3 == 1));
        assert_eq!(degree_sequence(&smooth(1), 3, 2).unwrap(), vec![2, 3, 4]);
        assert_eq!(degree_sequence(&smooth(1), 3, 0).unwrap(), vec![2, 3, 4]);
        let vi = degree_sequence(&type_vi(), 3, 13).unwrap();
        assert!(vi.iter().all(|n| n % 12 == 1 && *n >= 13));
        assert!(degree_sequence(&iv, 2, 5).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse_exponents(&[5], 7), vec![2]);
        assert_eq!(inverse_exponents(&[0], 9), vec![0]);
        assert_eq!(inverse_exponents(&[10, 4], 13), vec![3, 9]);
    }

    #[test]
    fn spectra() {
        let s = jump_spectrum(&type_iv(), 4, 50).unwrap();
        assert_eq!(s.jumps, vec![q(1, 3)]);
        assert_eq!(s.predicted_denominator, 3);
        assert_eq!(s.samples.len(), 4);
        assert_eq!(s.fits[0].offset, q(-1, 3));
        assert!(check_minimality(&s));

        let s = jump_spectrum(&type_vi(), 4, 50).unwrap();
        assert_eq!(s.jumps, vec![q(1, 4), q(3, 4)]);
        assert_eq!(s.numerators(), vec![1, 3]);
        assert!(check_minimality(&s));

        let s = jump_spectrum(&smooth(1), 4, 50).unwrap();
        assert_eq!(s.jumps, vec![q(0, 1)]);
        assert_eq!(s.predicted_denominator, 1);

        let s = jump_spectrum(&smooth(2), 4, 50).unwrap();
        assert_eq!(s.with_multiplicity(), vec![(q(0, 1), 2)]);
    }

    #[test]
    fn cycles_have_jump_zero() {
        for k in 2..7 {
            assert_eq!(jump_spectrum(&cycle(k), 4, 50).unwrap().jumps, vec![q(0, 1)]);
        }
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(jump_spectrum(&smooth(0), 4, 50).is_err());
    }
}
