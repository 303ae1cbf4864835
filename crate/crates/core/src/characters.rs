//! Exact character-level computations: the Weyl dimension formula, Euler
//! characteristics under the dot action, and Freudenthal weight
//! multiplicities as an independent low-rank oracle.
//!
//! Euler characteristics are kept symbolic — a sign and a dominant weight —
//! and only expanded into dimensions on demand. This is what keeps the
//! Jantzen sum usable at E8 scale.

use crate::error::{Error, Result};
use crate::root_data::{RootSystem, RootSystemType, Weight};
use crate::weight_lattice::{dominant_below, orbit_size_u64};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

/// dim V(lambda) by the Weyl dimension formula, as an exact big integer.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<BigUint> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let lam_rho = lam.add(rs.rho());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        num *= BigInt::from(rs.pairing(&lam_rho, alpha)?);
        den *= BigInt::from(rs.pairing(rs.rho(), alpha)?);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension must clear its denominator");
    assert!(q.is_positive(), "Weyl dimension must be positive");
    Ok(q.to_biguint().unwrap())
}

/// chi(mu) resolved by dot-action straightening: zero when mu + rho lies on
/// a wall, otherwise the sign of the straightening Weyl element together
/// with the dominant weight it lands on.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Euler {
    Zero,
    Term { sign: i32, weight: Weight },
}

pub fn euler_characteristic(rs: &RootSystem, mu: &Weight) -> Euler {
    let shifted = mu.add(rs.rho());
    let rep = rs.dominant_representative(&shifted);
    if rep.weight.0.contains(&0) {
        return Euler::Zero;
    }
    Euler::Term {
        sign: rep.sign,
        weight: rep.weight.sub(rs.rho()),
    }
}

/// A signed formal sum of Euler characteristics chi(nu), nu dominant.
/// Zero coefficients are never stored, so equality is plain map equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
#[serde(transparent)]
pub struct VirtualCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(weight) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_euler(&mut self, e: &Euler, coeff: i64) {
        if let Euler::Term { sign, weight } = e {
            self.add_term(weight.clone(), coeff * i64::from(*sign));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Signed dimension: sum of coeff * dim V(nu), memoized through `cache`.
    pub fn dimension(&self, rs: &RootSystem, cache: &DimCache) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (w, c) in self.terms() {
            acc += BigInt::from(c) * BigInt::from(cache.dim(rs, w)?);
        }
        Ok(acc)
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 || *c < 0 {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "chi{w}")?;
        }
        Ok(())
    }
}

/// Concurrent-read, atomic-insert memo for Weyl dimensions, keyed by
/// (type, weight). Inserting the same key twice is harmless because the
/// value is a pure function of the key.
#[derive(Debug, Default)]
pub struct DimCache {
    inner: RwLock<HashMap<(RootSystemType, Weight), BigUint>>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self, rs: &RootSystem, lam: &Weight) -> Result<BigUint> {
        let key = (rs.typ(), lam.clone());
        if let Some(v) = self.inner.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = weyl_dim(rs, lam)?;
        self.inner.write().unwrap().insert(key, v.clone());
        Ok(v)
    }
}

/// Weight multiplicities of V(lambda) restricted to dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub entries: BTreeMap<Weight, u64>,
}

impl MultiplicityTable {
    /// Sum of multiplicity times orbit size over all dominant weights;
    /// equals dim V(lambda).
    pub fn total_dimension(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut acc = BigUint::zero();
        for (w, &m) in &self.entries {
            acc += BigUint::from(m) * BigUint::from(orbit_size_u64(rs, w)?);
        }
        Ok(acc)
    }
}

/// Freudenthal's recursion over the dominant weights below lambda, exact.
/// Refuses weights whose Weyl dimension exceeds `dim_cap`.
pub fn freudenthal(rs: &RootSystem, lam: &Weight, dim_cap: u64) -> Result<MultiplicityTable> {
    let dim = weyl_dim(rs, lam)?;
    if dim > BigUint::from(dim_cap) {
        return Err(Error::DimCapExceeded {
            dim: dim.to_string(),
            cap: dim_cap,
        });
    }

    // Dominant weights below lambda, processed from lambda downwards.
    let mut poset: Vec<(i64, Weight)> = dominant_below(rs, lam)
        .into_iter()
        .map(|mu| {
            let gap: i64 = rs
                .simple_root_coords(&lam.sub(&mu))
                .iter()
                .map(|c| c.to_integer())
                .sum();
            (gap, mu)
        })
        .collect();
    poset.sort();

    let lam_rho = lam.add(rs.rho());
    let lam_rho_norm = rs.inner_product(&lam_rho, &lam_rho);

    let mut table: BTreeMap<Weight, u64> = BTreeMap::new();
    table.insert(lam.clone(), 1);
    for (gap, mu) in &poset {
        if *gap == 0 {
            continue;
        }
        let mu_rho = mu.add(rs.rho());
        let denom = lam_rho_norm - rs.inner_product(&mu_rho, &mu_rho);
        assert!(denom > Rational64::zero());
        let mut rhs = Rational64::zero();
        for alpha in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let mut shifted = mu.clone();
                for (c, a) in shifted.0.iter_mut().zip(&alpha.weight_coords.0) {
                    *c += k * a;
                }
                let rep = rs.dominant_representative(&shifted).weight;
                let Some(&mult) = table.get(&rep) else {
                    break; // alpha-strings through mu are contiguous
                };
                rhs += Rational64::from_integer(mult as i64)
                    * rs.inner_product(&shifted, &alpha.weight_coords);
                k += 1;
            }
        }
        let m = Rational64::from_integer(2) * rhs / denom;
        assert!(m.is_integer() && *m.numer() > 0, "Freudenthal gave {m} at {mu}");
        table.insert(mu.clone(), m.to_integer() as u64);
    }
    Ok(MultiplicityTable { entries: table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Family;
    use crate::weight_lattice::minuscule_weights;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    fn binomial(n: u64, k: u64) -> BigUint {
        let mut acc = BigUint::one();
        for i in 0..k {
            acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
        }
        acc
    }

    #[test]
    fn weyl_dim_small_cases() {
        for n in 2..=6u64 {
            let b = rs(Family::B, n as usize);
            assert_eq!(
                weyl_dim(&b, &Weight::fundamental(n as usize, 0)).unwrap(),
                BigUint::from(2 * n + 1)
            );
            let mut ends = vec![0; n as usize];
            ends[0] = 1;
            ends[n as usize - 1] = 1;
            assert_eq!(
                weyl_dim(&b, &Weight(ends)).unwrap(),
                BigUint::from(2 * n * (1u64 << n)),
                "dim V(omega_1 + omega_n) = 2n * 2^n for B_n"
            );
        }
        let f4 = rs(Family::F, 4);
        assert_eq!(
            weyl_dim(&f4, &Weight(vec![1, 0, 0, 1])).unwrap(),
            BigUint::from(1053u32)
        );
        let g2 = rs(Family::G, 2);
        assert_eq!(weyl_dim(&g2, &Weight(vec![1, 1])).unwrap(), BigUint::from(64u32));
        let e8 = rs(Family::E, 8);
        assert_eq!(
            weyl_dim(&e8, &Weight::fundamental(8, 7)).unwrap(),
            BigUint::from(248u32)
        );
        assert!(weyl_dim(&g2, &Weight(vec![-1, 0])).is_err());
    }

    #[test]
    fn weyl_dim_cn_ends_closed_form() {
        // dim V(omega_1 + omega_n) for C_n, n >= 4:
        //   7 * 2^(n-1) * n(2n+1)/(n+3) * prod_{i=6}^{n+1} (2i-3)/i
        for n in 4..=6u64 {
            let mut num = BigUint::from(7u32) * BigUint::from(1u64 << (n - 1));
            let mut den = BigUint::one();
            num *= BigUint::from(n * (2 * n + 1));
            den *= BigUint::from(n + 3);
            for i in 6..=n + 1 {
                num *= BigUint::from(2 * i - 3);
                den *= BigUint::from(i);
            }
            let expect = &num / &den;
            assert_eq!(&expect * &den, num, "closed form is an integer");
            let c = rs(Family::C, n as usize);
            let mut ends = vec![0; n as usize];
            ends[0] = 1;
            ends[n as usize - 1] = 1;
            assert_eq!(weyl_dim(&c, &Weight(ends)).unwrap(), expect, "C_{n}");
        }
    }

    #[test]
    fn weyl_dim_bn_wedge_identity() {
        // dim V(omega_i) = C(2n+1, i) for i < n: same character as the i-th
        // exterior power of the natural module.
        for n in 2..=6u64 {
            let b = rs(Family::B, n as usize);
            for i in 1..n {
                assert_eq!(
                    weyl_dim(&b, &Weight::fundamental(n as usize, (i - 1) as usize)).unwrap(),
                    binomial(2 * n + 1, i),
                    "B_{n} omega_{i}"
                );
            }
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(euler_characteristic(&a1, &Weight(vec![-1])), Euler::Zero);
        assert_eq!(
            euler_characteristic(&a1, &Weight(vec![-3])),
            Euler::Term {
                sign: -1,
                weight: Weight(vec![1])
            }
        );
        assert_eq!(
            euler_characteristic(&a1, &Weight(vec![-2])),
            Euler::Term {
                sign: -1,
                weight: Weight(vec![0])
            }
        );
        let b3 = rs(Family::B, 3);
        let dom = Weight(vec![1, 0, 2]);
        assert_eq!(
            euler_characteristic(&b3, &dom),
            Euler::Term {
                sign: 1,
                weight: dom.clone()
            }
        );
        // Dot-action reflection: s_1 . (1,1) in A_2.
        let a2 = rs(Family::A, 2);
        let lam = Weight(vec![1, 1]);
        let shifted = a2.reflect_simple(&lam.add(a2.rho()), 0).sub(a2.rho());
        assert_eq!(
            euler_characteristic(&a2, &shifted),
            Euler::Term {
                sign: -1,
                weight: lam
            }
        );
    }

    #[test]
    fn euler_is_dot_equivariant() {
        // chi(w . mu) = det(w) chi(mu) for words in the simple dot-reflections.
        let c3 = rs(Family::C, 3);
        let mut seed = 0x9e3779b97f4a7c15u64;
        for trial in 0i64..200 {
            let mu = Weight(vec![
                (trial % 5) - 2,
                ((trial / 5) % 5) - 2,
                ((trial / 25) % 5) - 2,
            ]);
            let base = euler_characteristic(&c3, &mu);
            let mut moved = mu.clone();
            let mut sign = 1i32;
            for _ in 0..6 {
                seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let i = (seed >> 33) as usize % 3;
                moved = c3.reflect_simple(&moved.add(c3.rho()), i).sub(c3.rho());
                sign = -sign;
            }
            let turned = euler_characteristic(&c3, &moved);
            match (base, turned) {
                (Euler::Zero, Euler::Zero) => {}
                (
                    Euler::Term { sign: s1, weight: w1 },
                    Euler::Term { sign: s2, weight: w2 },
                ) => {
                    assert_eq!(w1, w2);
                    assert_eq!(s1 * sign, s2);
                }
                other => panic!("equivariance broken: {other:?}"),
            }
        }
    }

    #[test]
    fn virtual_character_bookkeeping() {
        let mut vc = VirtualCharacter::zero();
        assert!(vc.is_zero());
        let w = Weight(vec![1, 0]);
        vc.add_term(w.clone(), 2);
        vc.add_term(w.clone(), -2);
        assert!(vc.is_zero(), "cancelling terms must vanish from storage");
        vc.add_term(w.clone(), 1);
        vc.add_term(Weight(vec![0, 1]), -3);
        assert_eq!(vc.num_terms(), 2);
        assert_eq!(vc.to_string(), "-3chi[0,1]+chi[1,0]");

        let a2 = rs(Family::A, 2);
        let cache = DimCache::new();
        // dim: 1*dim V(1,0) - 3*dim V(0,1) = 3 - 9 = -6.
        assert_eq!(vc.dimension(&a2, &cache).unwrap(), BigInt::from(-6));
        // chi(lambda) as a one-term character has dimension weyl_dim(lambda).
        let mut single = VirtualCharacter::zero();
        single.add_term(Weight(vec![1, 1]), 1);
        assert_eq!(single.dimension(&a2, &cache).unwrap(), BigInt::from(8));
    }

    #[test]
    fn freudenthal_examples() {
        let a2 = rs(Family::A, 2);
        let adjoint = Weight(vec![1, 1]);
        let table = freudenthal(&a2, &adjoint, 10_000).unwrap();
        assert_eq!(table.entries[&Weight::zero(2)], 2, "Cartan dimension");
        assert_eq!(table.entries[&adjoint], 1);
        assert_eq!(table.total_dimension(&a2).unwrap(), BigUint::from(8u32));

        let b3 = rs(Family::B, 3);
        let t = freudenthal(&b3, &Weight::fundamental(3, 1), 10_000).unwrap();
        assert_eq!(t.total_dimension(&b3).unwrap(), BigUint::from(21u32));

        for w in minuscule_weights(&b3) {
            let t = freudenthal(&b3, &w, 10_000).unwrap();
            assert_eq!(t.entries.len(), 1, "minuscule modules have one orbit");
            assert_eq!(t.entries[&w], 1);
        }
    }

    #[test]
    fn dim_cache_is_safe_under_concurrent_use() {
        use rayon::prelude::*;
        let b4 = rs(Family::B, 4);
        let cache = DimCache::new();
        let weights: Vec<Weight> = (0..64)
            .map(|k| Weight(vec![k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1]))
            .collect();
        let dims: Vec<BigUint> = weights
            .par_iter()
            .map(|w| cache.dim(&b4, w).unwrap())
            .collect();
        for (w, d) in weights.iter().zip(&dims) {
            assert_eq!(*d, weyl_dim(&b4, w).unwrap());
        }
    }

    #[test]
    fn freudenthal_respects_dim_cap() {
        let b3 = rs(Family::B, 3);
        match freudenthal(&b3, &Weight(vec![2, 2, 2]), 100) {
            Err(Error::DimCapExceeded { cap: 100, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn freudenthal_total_matches_weyl_dim() {
        for typ in RootSystemType::all_up_to_rank(5) {
            let r = RootSystem::build(typ);
            for lam in crate::sweep::dominant_weights(&r, 2, 10_000) {
                let t = freudenthal(&r, &lam, 10_000).unwrap();
                assert_eq!(
                    t.total_dimension(&r).unwrap(),
                    weyl_dim(&r, &lam).unwrap(),
                    "{typ} {lam}"
                );
            }
        }
        // A few larger spot checks off the coordinate grid.
        let a2 = rs(Family::A, 2);
        for lam in [Weight(vec![7, 3]), Weight(vec![0, 9])] {
            let t = freudenthal(&a2, &lam, 10_000).unwrap();
            assert_eq!(t.total_dimension(&a2).unwrap(), weyl_dim(&a2, &lam).unwrap());
        }
    }
}
