//! Sufficient conditions for `alpha ∘ y ∘ alpha⁻¹ = y²` to have only `y = 1`.
//!
//! Three certificates are offered. `A1` quantifies over pairs `(d, r)` with
//! `r >= 3` odd and `d·r ∈ F_d(alpha)`, and needs `g_d = 0` and
//! `gcd(2^d - 1, r) = 1` for each. `A2` is a closed-form condition on the cycle
//! type that implies `A1`. `A3` specializes `A2` to a single `n`-cycle.
//!
//! Every certificate records enough to be replayed without `alpha`:
//! the cycle type, each checked pair with its d-range witness, and the
//! Mersenne divisibility tests. An `Inconclusive` verdict only means the
//! sufficient condition failed; it never claims a non-trivial solution.

use serde::Serialize;

use crate::arith::{gcd, gcd_mersenne, is_prime, mod_pow, prime_divisors};
use crate::cycle_analysis::{cycle_type, d_range_of_type, CycleType};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    OnlyTrivial,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    A1,
    A2,
    A3,
}

/// One `(d, r)` pair of the `A1` quantification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub d: usize,
    pub r: usize,
    /// Cycle lengths of `alpha`, all divisible by `d`, summing to `d·r`.
    pub witness: Vec<usize>,
    pub gd: usize,
    pub gcd: u64,
}

impl PairRecord {
    pub fn passes(&self) -> bool {
        self.gd == 0 && self.gcd == 1
    }
}

/// A test of `p | 2^exponent - 1` for an odd prime `p` dividing a cycle length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MersenneCheck {
    pub length: usize,
    pub p: u64,
    pub exponent: u64,
    pub divisible: bool,
}

/// The first hypothesis found violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    Pair {
        d: usize,
        r: usize,
        gd: usize,
        gcd: u64,
    },
    FixedPoints {
        g1: usize,
    },
    NotCoprime {
        a: usize,
        b: usize,
    },
    Multiplicity {
        length: usize,
        count: usize,
    },
    Mersenne {
        length: usize,
        p: u64,
        exponent: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub degree: usize,
    /// Cycle type of `alpha`, largest part first.
    pub partition: Vec<usize>,
    pub pairs: Vec<PairRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mersenne_checks: Vec<MersenneCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    /// True when the verdict holds because there was nothing to check.
    pub vacuous: bool,
}

/// Whether the odd prime `p` divides `2^e - 1`.
pub fn mersenne_divisible(p: u64, e: u64) -> Result<bool> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("exponent must be at least 1".into()));
    }
    Ok(mod_pow(2, e, p) == 1)
}

fn mersenne_unchecked(p: u64, e: u64) -> bool {
    mod_pow(2, e, p) == 1
}

pub fn certify_a1(alpha: &Permutation) -> Certificate {
    certify_a1_type(&cycle_type(alpha))
}

pub fn certify_a1_type(ty: &CycleType) -> Certificate {
    let n = ty.degree();
    let mut pairs = Vec::new();
    for d in 1..=n {
        let range = d_range_of_type(ty, d).expect("1 <= d <= n");
        for r in (3..).step_by(2).take_while(|r| d * r <= n) {
            if let Some(witness) = range.witness(d * r) {
                pairs.push(PairRecord {
                    d,
                    r,
                    witness,
                    gd: ty.count(d),
                    gcd: gcd_mersenne(d as u64, r as u64),
                });
            }
        }
    }
    let failure = pairs.iter().find(|p| !p.passes()).map(|p| Failure::Pair {
        d: p.d,
        r: p.r,
        gd: p.gd,
        gcd: p.gcd,
    });
    Certificate {
        verdict: verdict_of(&failure),
        theorem: Theorem::A1,
        degree: n,
        partition: ty.partition(),
        vacuous: pairs.is_empty(),
        pairs,
        mersenne_checks: Vec::new(),
        failure,
    }
}

fn verdict_of(failure: &Option<Failure>) -> Verdict {
    if failure.is_some() {
        Verdict::Inconclusive
    } else {
        Verdict::OnlyTrivial
    }
}

fn mersenne_checks_for(lengths: impl Iterator<Item = usize>) -> Vec<MersenneCheck> {
    let mut checks = Vec::new();
    for a in lengths {
        for p in prime_divisors(a as u64).into_iter().filter(|&p| p >= 3) {
            let exponent = a as u64 / p;
            checks.push(MersenneCheck {
                length: a,
                p,
                exponent,
                divisible: mersenne_unchecked(p, exponent),
            });
        }
    }
    checks
}

pub fn certify_a2(alpha: &Permutation) -> Certificate {
    certify_a2_type(&cycle_type(alpha))
}

pub fn certify_a2_type(ty: &CycleType) -> Certificate {
    let lengths: Vec<(usize, usize)> = ty.lengths().collect();
    let mersenne_checks = mersenne_checks_for(lengths.iter().map(|&(a, _)| a));
    let failure = a2_failure(ty, &lengths, &mersenne_checks);
    Certificate {
        verdict: verdict_of(&failure),
        theorem: Theorem::A2,
        degree: ty.degree(),
        partition: ty.partition(),
        pairs: Vec::new(),
        mersenne_checks,
        failure,
        vacuous: false,
    }
}

fn a2_failure(
    ty: &CycleType,
    lengths: &[(usize, usize)],
    checks: &[MersenneCheck],
) -> Option<Failure> {
    if ty.count(1) > 0 {
        return Some(Failure::FixedPoints { g1: ty.count(1) });
    }
    for (i, &(a, _)) in lengths.iter().enumerate() {
        for &(b, _) in &lengths[i + 1..] {
            if gcd(a as u64, b as u64) != 1 {
                return Some(Failure::NotCoprime { a, b });
            }
        }
    }
    if let Some(&(length, count)) = lengths.iter().find(|&&(_, c)| c > 2) {
        return Some(Failure::Multiplicity { length, count });
    }
    checks
        .iter()
        .find(|c| c.divisible)
        .map(|c| Failure::Mersenne {
            length: c.length,
            p: c.p,
            exponent: c.exponent,
        })
}

/// The `A3` certificate for the `n`-cycle of `S_n`.
pub fn certify_a3_cyclic(n: usize) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mersenne_checks = mersenne_checks_for(std::iter::once(n));
    let failure = mersenne_checks
        .iter()
        .find(|c| c.divisible)
        .map(|c| Failure::Mersenne {
            length: n,
            p: c.p,
            exponent: c.exponent,
        });
    Ok(Certificate {
        verdict: verdict_of(&failure),
        theorem: Theorem::A3,
        degree: n,
        partition: vec![n],
        pairs: Vec::new(),
        vacuous: mersenne_checks.is_empty(),
        mersenne_checks,
        failure,
    })
}

/// Every certificate applicable to `alpha`: `A1`, `A2`, and `A3` when
/// `alpha` is a single `n`-cycle.
pub fn certify_all(alpha: &Permutation) -> Vec<Certificate> {
    let ty = cycle_type(alpha);
    let mut out = vec![certify_a1_type(&ty), certify_a2_type(&ty)];
    if ty.count(ty.degree()) == 1 {
        out.push(certify_a3_cyclic(ty.degree()).expect("degree >= 1"));
    }
    out
}

/// Whether some certificate proves `y = 1` is the only solution.
pub fn proves_only_trivial(alpha: &Permutation) -> Option<Certificate> {
    certify_all(alpha)
        .into_iter()
        .find(|c| c.verdict == Verdict::OnlyTrivial)
}

impl Certificate {
    /// Re-derives the verdict from the recorded data alone.
    ///
    /// Each record is checked against the recorded partition: witnesses must
    /// be available cycle lengths divisible by `d` summing to `d·r`, `g_d` and
    /// the gcds are recomputed, and for `A1` the pair list must be the full
    /// quantification. A record that does not hold up is a
    /// [`Error::Verification`].
    pub fn replay(&self) -> Result<Verdict> {
        let ty = CycleType::from_partition(self.degree, &self.partition)
            .map_err(|e| Error::Verification(format!("certificate partition: {e}")))?;
        let failure = match self.theorem {
            Theorem::A1 => {
                for pair in &self.pairs {
                    self.check_pair(&ty, pair)?;
                }
                let expected = certify_a1_type(&ty);
                let listed: Vec<_> = self.pairs.iter().map(|p| (p.d, p.r)).collect();
                let wanted: Vec<_> = expected.pairs.iter().map(|p| (p.d, p.r)).collect();
                if listed != wanted {
                    return Err(Error::Verification("pair list is not exhaustive".into()));
                }
                self.pairs
                    .iter()
                    .find(|p| !p.passes())
                    .map(|p| Failure::Pair {
                        d: p.d,
                        r: p.r,
                        gd: p.gd,
                        gcd: p.gcd,
                    })
            }
            Theorem::A2 | Theorem::A3 => {
                for c in &self.mersenne_checks {
                    let exact = (c.length as u64).is_multiple_of(c.p)
                        && c.exponent * c.p == c.length as u64
                        && c.divisible == mersenne_unchecked(c.p, c.exponent);
                    if !exact || !is_prime(c.p) {
                        return Err(Error::Verification(format!(
                            "mersenne check for p = {} does not replay",
                            c.p
                        )));
                    }
                }
                if self.theorem == Theorem::A2 {
                    let lengths: Vec<_> = ty.lengths().collect();
                    a2_failure(&ty, &lengths, &self.mersenne_checks)
                } else {
                    self.mersenne_checks
                        .iter()
                        .find(|c| c.divisible)
                        .map(|c| Failure::Mersenne {
                            length: c.length,
                            p: c.p,
                            exponent: c.exponent,
                        })
                }
            }
        };
        Ok(verdict_of(&failure))
    }

    fn check_pair(&self, ty: &CycleType, pair: &PairRecord) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::Verification(format!(
                "pair ({}, {}): {why}",
                pair.d, pair.r
            )))
        };
        if pair.r < 3 || pair.r.is_multiple_of(2) {
            return bad("r must be odd and at least 3");
        }
        if pair.witness.iter().sum::<usize>() != pair.d * pair.r {
            return bad("witness does not sum to d·r");
        }
        let mut used = vec![0usize; ty.degree() + 1];
        for &len in &pair.witness {
            if len == 0 || len > ty.degree() || len % pair.d != 0 {
                return bad("witness length not divisible by d");
            }
            used[len] += 1;
            if used[len] > ty.count(len) {
                return bad("witness uses more cycles than alpha has");
            }
        }
        if pair.gd != ty.count(pair.d) {
            return bad("recorded g_d is wrong");
        }
        if pair.gcd != gcd_mersenne(pair.d as u64, pair.r as u64) {
            return bad("recorded gcd is wrong");
        }
        Ok(())
    }
}
