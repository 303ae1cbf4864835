//! Dominance order, minuscule weights, and Weyl orbits.
//!
//! Minuscule weights are computed, not read from a table: a dominant weight
//! is minuscule when it is minimal in the dominance order on dominant
//! weights. The result is cross-checked against the orbit-pairing criterion
//! (all pairings with positive coroots in {0, 1}); any disagreement between
//! the two routes is a bug and trips an assertion.

use crate::error::{Error, Result};
use crate::root_data::{RootSystem, Weight};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use std::collections::{BTreeSet, HashSet, VecDeque};

/// Default cap on explicit Weyl-orbit enumeration.
pub const DEFAULT_ORBIT_CAP: u64 = 1_000_000;

/// Orbit data computed without enumeration: dominant representative, orbit
/// size by the parabolic-stabilizer quotient, and the stabilizing simple
/// reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub dominant_rep: Weight,
    pub orbit_size: BigUint,
    pub stabilizer_indices: Vec<usize>,
}

pub fn is_dominant(lam: &Weight) -> bool {
    lam.is_dominant()
}

/// mu <= lam in the dominance order: lam - mu is a nonnegative integer
/// combination of simple roots, decided exactly via the inverse Cartan
/// matrix.
pub fn dominance_le(rs: &RootSystem, mu: &Weight, lam: &Weight) -> bool {
    let diff = lam.sub(mu);
    rs.simple_root_coords(&diff)
        .iter()
        .all(|c| c.is_integer() && *c.numer() >= 0)
}

/// Does lam - mu lie in the root lattice?
pub fn same_root_lattice_coset(rs: &RootSystem, lam: &Weight, mu: &Weight) -> bool {
    let diff = lam.sub(mu);
    rs.simple_root_coords(&diff).iter().all(|c| c.is_integer())
}

/// All dominant weights mu <= lam. Walks covers of the dominance order
/// restricted to dominant weights; every cover is a positive-root step, so
/// subtracting positive roots and keeping dominant results reaches the whole
/// interval.
pub fn dominant_below(rs: &RootSystem, lam: &Weight) -> Vec<Weight> {
    debug_assert!(lam.is_dominant());
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue: VecDeque<Weight> = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(w) = queue.pop_front() {
        for alpha in rs.positive_roots() {
            let cand = w.sub(&alpha.weight_coords);
            if cand.is_dominant() && seen.insert(cand.clone()) {
                queue.push_back(cand);
            }
        }
    }
    seen.into_iter().collect()
}

/// The minuscule weights of the system, zero included. Computed by dominance
/// minimality below the fundamental weights and cross-checked with the
/// pairing criterion. Memoized per type: the result depends only on the
/// root datum, and the classifier asks for it on every recursion step.
pub fn minuscule_weights(rs: &RootSystem) -> Vec<Weight> {
    use std::collections::HashMap;
    use std::sync::{OnceLock, RwLock};
    type Cache = RwLock<HashMap<crate::root_data::RootSystemType, Vec<Weight>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&rs.typ()) {
        return v.clone();
    }
    let computed = minuscule_weights_uncached(rs);
    cache
        .write()
        .unwrap()
        .insert(rs.typ(), computed.clone());
    computed
}

fn minuscule_weights_uncached(rs: &RootSystem) -> Vec<Weight> {
    let n = rs.rank();
    let mut candidates: BTreeSet<Weight> = BTreeSet::new();
    candidates.insert(Weight::zero(n));
    for i in 0..n {
        for w in dominant_below(rs, &Weight::fundamental(n, i)) {
            candidates.insert(w);
        }
    }
    let minimal: Vec<Weight> = candidates
        .into_iter()
        .filter(|w| dominant_below(rs, w).len() == 1)
        .collect();

    // Independent criterion: <lam, alpha^vee> <= 1 for every positive root.
    for w in &minimal {
        let by_pairing = rs
            .positive_roots()
            .iter()
            .all(|alpha| rs.pairing(w, alpha).unwrap() <= 1);
        assert!(
            by_pairing,
            "dominance-minimal weight {w} fails the pairing criterion"
        );
    }
    // And conversely on the candidate fundamental weights.
    for i in 0..n {
        let w = Weight::fundamental(n, i);
        let by_pairing = rs
            .positive_roots()
            .iter()
            .all(|alpha| rs.pairing(&w, alpha).unwrap() <= 1);
        assert_eq!(
            by_pairing,
            minimal.contains(&w),
            "minusculity routes disagree at {w}"
        );
    }
    minimal
}

/// The unique minuscule weight congruent to `lam` modulo the root lattice.
pub fn minuscule_below(rs: &RootSystem, lam: &Weight) -> Result<Weight> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    minuscule_weights(rs)
        .into_iter()
        .find(|m| same_root_lattice_coset(rs, lam, m))
        .ok_or_else(|| {
            Error::Internal(format!(
                "no minuscule representative in the coset of {lam}"
            ))
        })
}

/// Orbit size and stabilizer without enumeration: the stabilizer of a
/// dominant weight is the parabolic subgroup generated by the simple
/// reflections fixing it.
pub fn orbit_summary(rs: &RootSystem, lam: &Weight) -> Result<OrbitSummary> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let stabilizer_indices: Vec<usize> = (0..rs.rank()).filter(|&i| lam.0[i] == 0).collect();
    let mut stab_order = BigUint::one();
    for comp in rs.levi_subsystem(&stabilizer_indices) {
        stab_order *= RootSystem::build(comp.typ).weyl_group_order();
    }
    let total = rs.weyl_group_order();
    let (orbit_size, rem) = total.div_rem(&stab_order);
    debug_assert!(rem == BigUint::ZERO);
    Ok(OrbitSummary {
        dominant_rep: lam.clone(),
        orbit_size,
        stabilizer_indices,
    })
}

/// Full Weyl orbit of a dominant weight, in a deterministic order: sorted by
/// the height of lam - nu, then lexicographically. Refuses to enumerate
/// orbits larger than `cap` (the summary remains available in the error
/// path via [`orbit_summary`]).
pub fn weyl_orbit(rs: &RootSystem, lam: &Weight, cap: u64) -> Result<Vec<Weight>> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let summary = orbit_summary(rs, lam)?;
    if summary.orbit_size > BigUint::from(cap) {
        return Err(Error::OrbitCapExceeded {
            size: summary.orbit_size.to_string(),
            cap,
        });
    }
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue: Vec<Weight> = vec![lam.clone()];
    seen.insert(lam.clone());
    while let Some(w) = queue.pop() {
        for i in 0..rs.rank() {
            if w.0[i] != 0 {
                let r = rs.reflect_simple(&w, i);
                if seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
    }
    debug_assert_eq!(BigUint::from(seen.len() as u64), summary.orbit_size);
    let mut orbit: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|nu| {
            let coords = rs.simple_root_coords(&lam.sub(&nu));
            let height: i64 = coords
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .sum();
            (height, nu)
        })
        .collect();
    orbit.sort();
    Ok(orbit.into_iter().map(|(_, nu)| nu).collect())
}

/// Orbit size as a plain u64 when it fits; convenience for dimension sums.
pub fn orbit_size_u64(rs: &RootSystem, lam: &Weight) -> Result<u64> {
    let s = orbit_summary(rs, lam)?;
    s.orbit_size
        .to_u64()
        .ok_or_else(|| Error::OrbitCapExceeded {
            size: s.orbit_size.to_string(),
            cap: u64::MAX,
        })
}
