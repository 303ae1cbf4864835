//! The Jantzen sum formula as a characteristic-p irreducibility oracle.
//!
//! For a dominant weight lambda and a prime p, the sum of the characters of
//! the Jantzen filtration layers is
//!
//! ```text
//!   sum_{alpha > 0} sum_{0 < mp < <lam+rho, alpha^vee>}
//!       nu_p(mp) * chi(s_{alpha,mp} . lambda)
//! ```
//!
//! (Jantzen, Representations of Algebraic Groups, II.8.19), where
//! `s_{alpha,mp} . lambda = lambda - (<lam+rho, alpha^vee> - mp) alpha` is the
//! affine dot reflection. The sum vanishes exactly when V(lambda) x F_p is
//! irreducible. Each chi is straightened symbolically, so the whole
//! computation is a walk over signed dominant weights and stays cheap even
//! for E8.

use crate::characters::{euler_characteristic, weyl_dim, Euler, VirtualCharacter};
use crate::error::{Error, Result};
use crate::root_data::{RootSystem, RootSystemType, Weight};
use crate::sweep::{is_prime, primes_below};
use crate::weight_lattice::minuscule_weights;
use num_bigint::BigUint;

/// One inner term of the sum formula: the positive root, the multiple m,
/// the valuation nu_p(mp), and where the Euler characteristic landed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct JantzenTerm {
    /// Simple-root coordinates of alpha.
    pub alpha: Vec<i64>,
    pub m: u64,
    pub valuation: u32,
    pub euler: Euler,
}

/// Full output of one sum-formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JantzenReport {
    pub typ: RootSystemType,
    pub lam: Weight,
    pub prime: u64,
    /// The cancelled value of sum_{i>0} ch V(lambda)^i.
    pub sum: VirtualCharacter,
    pub irreducible: bool,
    pub term_log: Vec<JantzenTerm>,
    /// max_alpha <lam+rho, alpha^vee>; for p at or above this bound the sum
    /// is empty, recorded for auditability.
    pub prime_bound: i64,
}

/// Composition-factor dimensions recoverable from the two-factor pattern:
/// the sum equals a single chi(mu) with mu minuscule, so the filtration is
/// V^1 = L(mu), V^2 = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactorSplit {
    pub socle_weight: Weight,
    pub dim_head: BigUint,
    pub dim_socle: BigUint,
}

fn valuation(p: u64, mut x: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Largest pairing of lam + rho against a positive coroot; the inner sums
/// are empty for every alpha once p reaches this value.
pub fn prime_bound(rs: &RootSystem, lam: &Weight) -> Result<i64> {
    let lam_rho = lam.add(rs.rho());
    let mut bound = 0;
    for alpha in rs.positive_roots() {
        bound = bound.max(rs.pairing(&lam_rho, alpha)?);
    }
    Ok(bound)
}

/// Evaluate the sum formula for V(lambda) at the prime p.
pub fn jantzen_sum(rs: &RootSystem, lam: &Weight, p: u64) -> Result<JantzenReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let lam_rho = lam.add(rs.rho());
    let mut sum = VirtualCharacter::zero();
    let mut term_log = Vec::new();
    let mut bound = 0i64;
    for alpha in rs.positive_roots() {
        let n_alpha = rs.pairing(&lam_rho, alpha)?;
        bound = bound.max(n_alpha);
        let mut mp = p as i64;
        while mp < n_alpha {
            let m = mp as u64 / p;
            let val = 1 + valuation(p, m);
            // s_{alpha,mp} . lambda = lambda - (n_alpha - mp) alpha
            let drop = n_alpha - mp;
            let mu = Weight(
                lam.0
                    .iter()
                    .zip(&alpha.weight_coords.0)
                    .map(|(c, a)| c - drop * a)
                    .collect(),
            );
            let e = euler_characteristic(rs, &mu);
            sum.add_euler(&e, i64::from(val));
            term_log.push(JantzenTerm {
                alpha: alpha.simple_coords.clone(),
                m,
                valuation: val,
                euler: e,
            });
            mp += p as i64;
        }
    }
    let irreducible = sum.is_zero();
    Ok(JantzenReport {
        typ: rs.typ(),
        lam: lam.clone(),
        prime: p,
        sum,
        irreducible,
        term_log,
        prime_bound: bound,
    })
}

/// Is V(lambda) x F_p irreducible?
pub fn irreducible_at(rs: &RootSystem, lam: &Weight, p: u64) -> Result<bool> {
    Ok(jantzen_sum(rs, lam, p)?.irreducible)
}

/// Test every prime below the emptiness bound; above it the sum formula is
/// vacuously zero. Returns the global verdict and the reducible primes.
pub fn globally_irreducible_oracle(rs: &RootSystem, lam: &Weight) -> Result<(bool, Vec<u64>)> {
    let bound = prime_bound(rs, lam)?;
    let mut reducible = Vec::new();
    for p in primes_below(bound.max(0) as u64) {
        if !irreducible_at(rs, lam, p)? {
            reducible.push(p);
        }
    }
    Ok((reducible.is_empty(), reducible))
}

impl JantzenReport {
    /// Extract composition-factor dimensions when the sum is a single
    /// chi(mu) with coefficient 1 and mu minuscule; anything else is
    /// reported raw with no dimension claims.
    pub fn two_factor_split(&self, rs: &RootSystem) -> Result<Option<TwoFactorSplit>> {
        let mut terms = self.sum.terms();
        let Some((mu, 1)) = terms.next() else {
            return Ok(None);
        };
        if terms.next().is_some() {
            return Ok(None);
        }
        if !minuscule_weights(rs).contains(mu) {
            return Ok(None);
        }
        let dim_socle = weyl_dim(rs, mu)?;
        let dim_head = weyl_dim(rs, &self.lam)? - &dim_socle;
        Ok(Some(TwoFactorSplit {
            socle_weight: mu.clone(),
            dim_head,
            dim_socle,
        }))
    }
}

/// dim L(d) for SL_2 in characteristic p: write d in base p and take the
/// product of (digit + 1), per Steinberg's tensor product theorem.
pub fn sl2_dim_l(d: u64, p: u64) -> BigUint {
    let mut dim = BigUint::from(1u32);
    let mut x = d;
    loop {
        dim *= BigUint::from(x % p + 1);
        x /= p;
        if x == 0 {
            return dim;
        }
    }
}

/// V(d) x F_p is irreducible iff d + 1 = c p^e with 0 < c < p.
pub fn sl2_irreducible(d: u64, p: u64) -> bool {
    let mut c = d + 1;
    while c.is_multiple_of(p) {
        c /= p;
    }
    c < p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Family;
    use crate::sweep::dominant_weights;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    fn chi(w: Weight) -> VirtualCharacter {
        let mut vc = VirtualCharacter::zero();
        vc.add_term(w, 1);
        vc
    }

    #[test]
    fn sl2_symmetric_square_at_two() {
        let a1 = rs(Family::A, 1);
        let r = jantzen_sum(&a1, &Weight(vec![2]), 2).unwrap();
        assert!(!r.irreducible);
        assert_eq!(r.sum, chi(Weight(vec![0])));
        assert_eq!(r.prime_bound, 3);
        // Digit criterion agrees: 3 != c * 2^e with c < 2.
        assert!(!sl2_irreducible(2, 2));
    }

    #[test]
    fn minuscule_weights_have_zero_sum() {
        let a3 = rs(Family::A, 3);
        let r = jantzen_sum(&a3, &Weight::fundamental(3, 1), 2).unwrap();
        assert!(r.irreducible);
        assert!(r.sum.is_zero());
    }

    #[test]
    fn e8_adjoint_is_irreducible_at_small_primes() {
        let e8 = rs(Family::E, 8);
        let adjoint = Weight::fundamental(8, 7);
        assert_eq!(prime_bound(&e8, &adjoint).unwrap(), 31);
        for p in [2u64, 3, 29] {
            assert!(irreducible_at(&e8, &adjoint, p).unwrap(), "E8 adjoint at {p}");
        }
    }

    #[test]
    fn spin_plus_vector_weight_for_b3_at_seven() {
        let b3 = rs(Family::B, 3);
        let lam = Weight(vec![1, 0, 1]);
        let r = jantzen_sum(&b3, &lam, 7).unwrap();
        assert!(!r.irreducible);
        assert_eq!(r.sum, chi(Weight::fundamental(3, 2)));
        let split = r.two_factor_split(&b3).unwrap().unwrap();
        assert_eq!(split.dim_socle, BigUint::from(8u32));
        // dim L(omega_1 + omega_3) = 2^3 * (2*3 - 1) = 40.
        assert_eq!(split.dim_head, BigUint::from(40u32));
    }

    #[test]
    fn theorem_b_pattern_for_small_spin_groups() {
        // For 2n+1 prime, the sum at p = 2n+1 is exactly chi(omega_n) and
        // vanishes at every other prime below the bound, giving
        // dim L(omega_1 + omega_n) = 2^n (2n - 1).
        for n in [2usize, 3, 5] {
            let b = rs(Family::B, n);
            let special = (2 * n + 1) as u64;
            assert!(is_prime(special));
            let mut lam = vec![0; n];
            lam[0] = 1;
            lam[n - 1] = 1;
            let lam = Weight(lam);
            for p in primes_below(prime_bound(&b, &lam).unwrap() as u64) {
                let r = jantzen_sum(&b, &lam, p).unwrap();
                if p == special {
                    assert_eq!(r.sum, chi(Weight::fundamental(n, n - 1)), "B_{n} at {p}");
                    let split = r.two_factor_split(&b).unwrap().unwrap();
                    assert_eq!(
                        split.dim_head,
                        BigUint::from((1u64 << n) * (2 * n as u64 - 1))
                    );
                    assert_eq!(split.dim_socle, BigUint::from(1u64 << n));
                } else {
                    assert!(r.irreducible, "B_{n} should be irreducible at {p}");
                }
            }
        }
    }

    #[test]
    fn symplectic_omega2_divisibility() {
        // V(omega_2) for C_n is reducible at p iff p divides n.
        assert!(!irreducible_at(&rs(Family::C, 3), &Weight(vec![0, 1, 0]), 3).unwrap());
        assert!(irreducible_at(&rs(Family::C, 4), &Weight(vec![0, 1, 0, 0]), 3).unwrap());
        for p in [2u64, 3, 5, 7] {
            let b2 = rs(Family::B, 2);
            assert!(irreducible_at(&b2, &Weight(vec![0, 1]), p).unwrap(), "spin B2 at {p}");
        }
    }

    #[test]
    fn oracle_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(
            globally_irreducible_oracle(&a1, &Weight(vec![1])).unwrap(),
            (true, vec![])
        );
        let a2 = rs(Family::A, 2);
        assert_eq!(
            globally_irreducible_oracle(&a2, &Weight(vec![1, 1])).unwrap(),
            (false, vec![3])
        );
        let b2 = rs(Family::B, 2);
        assert_eq!(
            globally_irreducible_oracle(&b2, &Weight(vec![1, 1])).unwrap(),
            (false, vec![5]),
            "sharp witness 5 = 2 * rank + 1 for B_2"
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            jantzen_sum(&a2, &Weight(vec![1, 0]), 6).unwrap_err(),
            Error::NotPrime(6)
        );
        assert!(matches!(
            jantzen_sum(&a2, &Weight(vec![-1, 0]), 2).unwrap_err(),
            Error::NotDominant(_)
        ));
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(sl2_dim_l(5, 2), BigUint::from(4u32));
        assert!(!sl2_irreducible(5, 2));
        assert!(sl2_irreducible(5, 3));
        assert_eq!(sl2_dim_l(0, 7), BigUint::from(1u32));
        assert!(sl2_irreducible(0, 7));
    }

    #[test]
    fn sum_formula_matches_digit_criterion_on_sl2() {
        let a1 = rs(Family::A, 1);
        for d in 0..=60u64 {
            for p in primes_below(24) {
                let by_sum = irreducible_at(&a1, &Weight(vec![d as i64]), p).unwrap();
                assert_eq!(by_sum, sl2_irreducible(d, p), "d={d} p={p}");
            }
        }
    }

    #[test]
    fn term_log_bookkeeping() {
        let b2 = rs(Family::B, 2);
        let lam = Weight(vec![1, 1]);
        let r = jantzen_sum(&b2, &lam, 2).unwrap();
        // Every logged term obeys 0 < mp < <lam+rho, alpha^vee>, and
        // dropping wall terms leaves the sum unchanged.
        let lam_rho = lam.add(b2.rho());
        let mut resum = VirtualCharacter::zero();
        for t in &r.term_log {
            let alpha = b2
                .positive_roots()
                .iter()
                .find(|a| a.simple_coords == t.alpha)
                .unwrap();
            let n_alpha = b2.pairing(&lam_rho, alpha).unwrap();
            let mp = (t.m * r.prime) as i64;
            assert!(0 < mp && mp < n_alpha);
            if t.euler != Euler::Zero {
                resum.add_euler(&t.euler, i64::from(t.valuation));
            }
        }
        assert_eq!(resum, r.sum);
    }

    #[test]
    fn reducible_low_rank_weights_have_small_witness() {
        // Every reducible case at rank <= 3 with small coordinates has a
        // reducible prime at most 2 * rank + 1.
        for typ in RootSystemType::all_up_to_rank(3) {
            let r = RootSystem::build(typ);
            for lam in dominant_weights(&r, 2, 2000) {
                let (glob, primes) = globally_irreducible_oracle(&r, &lam).unwrap();
                if !glob {
                    let bound = 2 * typ.rank as u64 + 1;
                    assert!(
                        primes.iter().any(|&p| p <= bound),
                        "{typ} {lam}: {primes:?} vs bound {bound}"
                    );
                }
            }
        }
    }
}
