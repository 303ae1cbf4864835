//! Simple root systems of all finite types with exact integer and rational
//! arithmetic: Cartan matrices, positive roots, pairings, the W-invariant
//! bilinear form normalized so long roots have squared length 2, reflections,
//! and Levi subsystem decomposition.
//!
//! Numbering of simple roots follows Bourbaki throughout. Internally all node
//! indices are 0-based; only the CLI layer renders 1-based labels.

use crate::error::{Error, Result};
use crate::linalg::invert_integer_matrix;
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// The nine families of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type: family letter plus rank, validated against the classical
/// rank restrictions (B_n needs n >= 2, C_n needs n >= 3, D_n needs n >= 4,
/// E_n needs n in {6,7,8}, F_4, G_2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint: &'static str = match family {
            Family::A => {
                if rank >= 1 {
                    return Ok(Self { family, rank });
                }
                "n >= 1"
            }
            Family::B => {
                if rank >= 2 {
                    return Ok(Self { family, rank });
                }
                "n >= 2"
            }
            Family::C => {
                if rank >= 3 {
                    return Ok(Self { family, rank });
                }
                "n >= 3"
            }
            Family::D => {
                if rank >= 4 {
                    return Ok(Self { family, rank });
                }
                "n >= 4"
            }
            Family::E => {
                if (6..=8).contains(&rank) {
                    return Ok(Self { family, rank });
                }
                "n in {6,7,8}"
            }
            Family::F => {
                if rank == 4 {
                    return Ok(Self { family, rank });
                }
                "n = 4"
            }
            Family::G => {
                if rank == 2 {
                    return Ok(Self { family, rank });
                }
                "n = 2"
            }
        };
        Err(Error::InvalidRank {
            family: family.letter(),
            rank,
            constraint,
        })
    }

    /// All simple types of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(Self::new(Family::A, n).unwrap());
        }
        for n in 2..=max_rank {
            out.push(Self::new(Family::B, n).unwrap());
        }
        for n in 3..=max_rank {
            out.push(Self::new(Family::C, n).unwrap());
        }
        for n in 4..=max_rank {
            out.push(Self::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            if n <= max_rank {
                out.push(Self::new(Family::E, n).unwrap());
            }
        }
        if max_rank >= 4 {
            out.push(Self::new(Family::F, 4).unwrap());
        }
        if max_rank >= 2 {
            out.push(Self::new(Family::G, 2).unwrap());
        }
        out
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// An integral weight in fundamental-weight coordinates: entry i is
/// the pairing with the i-th simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A root, carried in both coordinate systems: expansion in the simple
/// roots and the image under the Cartan matrix (fundamental-weight
/// coordinates). The two are kept consistent by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Root {
    pub simple_coords: Vec<i64>,
    pub weight_coords: Weight,
    pub is_long: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// Result of straightening a weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantRep {
    pub weight: Weight,
    /// Determinant of the Weyl element applied: (-1)^reflections.
    pub sign: i32,
    /// Number of simple reflections applied.
    pub reflections: u64,
}

/// Immutable root datum for one simple type. All operations on it are pure.
#[derive(Debug, Clone)]
pub struct RootSystem {
    typ: RootSystemType,
    /// cartan[i][j] = <alpha_j, alpha_i^vee>.
    cartan: Vec<Vec<i64>>,
    /// Minimal positive integer symmetrizers: d_i proportional to
    /// (alpha_i, alpha_i), with short roots getting 1.
    sym: Vec<i64>,
    /// Squared-length ratio long/short: 1, 2, or 3.
    ratio: i64,
    inv_cartan: Vec<Vec<Rational64>>,
    positive_roots: Vec<Root>,
    rho: Weight,
    highest_root_idx: usize,
    highest_short_idx: usize,
}

/// Dynkin diagram edges (0-based node pairs with bond multiplicity) and the
/// set of short nodes, per Bourbaki numbering.
fn diagram(typ: RootSystemType) -> (Vec<(usize, usize, i64)>, Vec<usize>) {
    let n = typ.rank;
    match typ.family {
        Family::A => ((0..n.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect(), vec![]),
        Family::B => {
            let mut e: Vec<(usize, usize, i64)> =
                (0..n - 2).map(|i| (i, i + 1, 1)).collect();
            e.push((n - 2, n - 1, 2));
            (e, vec![n - 1])
        }
        Family::C => {
            let mut e: Vec<(usize, usize, i64)> =
                (0..n - 2).map(|i| (i, i + 1, 1)).collect();
            e.push((n - 2, n - 1, 2));
            (e, (0..n - 1).collect())
        }
        Family::D => {
            let mut e: Vec<(usize, usize, i64)> =
                (0..n - 3).map(|i| (i, i + 1, 1)).collect();
            e.push((n - 3, n - 2, 1));
            e.push((n - 3, n - 1, 1));
            (e, vec![])
        }
        Family::E => {
            let mut e = vec![(0, 2, 1), (2, 3, 1), (3, 4, 1), (1, 3, 1)];
            for i in 4..n - 1 {
                e.push((i, i + 1, 1));
            }
            (e, vec![])
        }
        Family::F => (vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)], vec![2, 3]),
        Family::G => (vec![(0, 1, 3)], vec![0]),
    }
}

/// The Cartan matrix of a simple type, entries cartan[i][j] = <alpha_j, alpha_i^vee>.
pub fn cartan_matrix(typ: RootSystemType) -> Vec<Vec<i64>> {
    let n = typ.rank;
    let (edges, short) = diagram(typ);
    let ratio = edges.iter().map(|&(_, _, m)| m).max().unwrap_or(1);
    let d: Vec<i64> = (0..n)
        .map(|i| if short.contains(&i) { 1 } else { ratio })
        .collect();
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    for &(i, j, _) in &edges {
        // <alpha_j, alpha_i^vee> = -1 when alpha_i is at least as long,
        // otherwise the bond multiplicity shows up in the short root's row.
        a[i][j] = -std::cmp::max(1, d[j] / d[i]);
        a[j][i] = -std::cmp::max(1, d[i] / d[j]);
    }
    a
}

impl RootSystem {
    /// Construct the complete root datum. Positive roots are generated by
    /// closing the simple roots under all simple reflections and kept in a
    /// deterministic order (height, then lexicographic simple coordinates).
    pub fn build(typ: RootSystemType) -> Self {
        let n = typ.rank;
        let cartan = cartan_matrix(typ);
        let (edges, short) = diagram(typ);
        let ratio = edges.iter().map(|&(_, _, m)| m).max().unwrap_or(1);
        let sym: Vec<i64> = (0..n)
            .map(|i| if short.contains(&i) { 1 } else { ratio })
            .collect();
        let inv_cartan = invert_integer_matrix(&cartan);

        // Reflection-orbit closure starting from the simple roots gives all
        // of Phi; filter to the positive half afterwards.
        let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push(e);
        }
        while let Some(r) = queue.pop() {
            // weight coordinate k of the root r is sum_j cartan[k][j] * r[j]
            let wc: Vec<i64> = (0..n)
                .map(|k| (0..n).map(|j| cartan[k][j] * r[j]).sum())
                .collect();
            for i in 0..n {
                let mut refl = r.clone();
                refl[i] -= wc[i];
                if seen.insert(refl.clone()) {
                    queue.push(refl);
                }
            }
        }
        let mut positives: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let positive_roots: Vec<Root> = positives
            .into_iter()
            .map(|sc| {
                let wc: Vec<i64> = (0..n)
                    .map(|k| (0..n).map(|j| cartan[k][j] * sc[j]).sum())
                    .collect();
                // (beta, beta) = sum_i sc_i * (d_i / ratio) * wc_i
                let mut len2 = Rational64::zero();
                for i in 0..n {
                    len2 += Rational64::new(sc[i] * sym[i] * wc[i], ratio);
                }
                let is_long = len2 == Rational64::from_integer(2);
                Root {
                    simple_coords: sc,
                    weight_coords: Weight(wc),
                    is_long,
                }
            })
            .collect();

        let highest_root_idx = positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_long)
            .max_by_key(|(_, r)| r.height())
            .map(|(i, _)| i)
            .expect("every root system has a long root");
        let highest_short_idx = if ratio == 1 {
            highest_root_idx
        } else {
            positive_roots
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_long)
                .max_by_key(|(_, r)| r.height())
                .map(|(i, _)| i)
                .expect("non-simply-laced systems have short roots")
        };

        let rs = RootSystem {
            typ,
            cartan,
            sym,
            ratio,
            inv_cartan,
            positive_roots,
            rho: Weight(vec![1; n]),
            highest_root_idx,
            highest_short_idx,
        };
        debug_assert!(rs.positive_roots[rs.highest_root_idx].weight_coords.is_dominant());
        debug_assert!(rs.positive_roots[rs.highest_short_idx].weight_coords.is_dominant());
        rs
    }

    pub fn typ(&self) -> RootSystemType {
        self.typ
    }

    pub fn rank(&self) -> usize {
        self.typ.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    /// Squared-length ratio between long and short roots (1 for simply-laced).
    pub fn length_ratio(&self) -> i64 {
        self.ratio
    }

    pub fn inv_cartan(&self) -> &[Vec<Rational64>] {
        &self.inv_cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The Weyl vector rho = sum of fundamental weights.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// <lam, alpha^vee> for an arbitrary root alpha, exact.
    pub fn pairing(&self, lam: &Weight, alpha: &Root) -> Result<i64> {
        self.check_rank(lam)?;
        // alpha^vee = sum_i m_i d_i / dlen(alpha) * alpha_i^vee, with
        // dlen = ratio for long roots and 1 for short ones.
        let dlen = if alpha.is_long { self.ratio } else { 1 };
        let mut acc = Rational64::zero();
        for i in 0..self.rank() {
            acc += Rational64::new(alpha.simple_coords[i] * self.sym[i], dlen)
                * Rational64::from_integer(lam.0[i]);
        }
        debug_assert!(acc.is_integer(), "coroot pairing must be integral");
        Ok(acc.to_integer())
    }

    /// Expansion of a weight in the simple-root basis (rational in general).
    pub fn simple_root_coords(&self, w: &Weight) -> Vec<Rational64> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.inv_cartan[i][j] * Rational64::from_integer(w.0[j]))
                    .sum()
            })
            .collect()
    }

    /// The W-invariant symmetric bilinear form with (alpha, alpha) = 2 for
    /// long roots, evaluated exactly.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Rational64 {
        // b(x, y) = sum_j eps_j c_j(x) m_j(y) where y = sum m_j alpha_j and
        // eps_j = (alpha_j, alpha_j)/2 = d_j / ratio.
        let m = self.simple_root_coords(y);
        let mut acc = Rational64::zero();
        for j in 0..self.rank() {
            acc += Rational64::new(self.sym[j], self.ratio)
                * Rational64::from_integer(x.0[j])
                * m[j];
        }
        acc
    }

    /// s_alpha(lam) = lam - <lam, alpha^vee> alpha.
    pub fn reflect(&self, lam: &Weight, alpha: &Root) -> Result<Weight> {
        let p = self.pairing(lam, alpha)?;
        Ok(Weight(
            lam.0
                .iter()
                .zip(&alpha.weight_coords.0)
                .map(|(c, a)| c - p * a)
                .collect(),
        ))
    }

    /// Reflection in the i-th simple root, in weight coordinates.
    pub fn reflect_simple(&self, lam: &Weight, i: usize) -> Weight {
        let c = lam.0[i];
        let n = self.rank();
        Weight(
            (0..n)
                .map(|k| lam.0[k] - c * self.cartan[k][i])
                .collect(),
        )
    }

    /// The unique dominant weight in the W-orbit of `lam`, together with the
    /// determinant of the straightening Weyl element and the number of simple
    /// reflections applied. Repeatedly reflects at a negative coordinate;
    /// termination is guaranteed because each step raises the weight.
    pub fn dominant_representative(&self, lam: &Weight) -> DominantRep {
        let mut w = lam.clone();
        let mut reflections = 0u64;
        loop {
            match w.0.iter().position(|&c| c < 0) {
                None => {
                    let sign = if reflections.is_multiple_of(2) { 1 } else { -1 };
                    return DominantRep {
                        weight: w,
                        sign,
                        reflections,
                    };
                }
                Some(i) => {
                    w = self.reflect_simple(&w, i);
                    reflections += 1;
                }
            }
        }
    }

    /// The unique maximal long root.
    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root_idx]
    }

    /// The unique maximal short root; coincides with the highest root for
    /// simply-laced types.
    pub fn highest_short_root(&self) -> &Root {
        &self.positive_roots[self.highest_short_idx]
    }

    /// |W| from the classical degree products.
    pub fn weyl_group_order(&self) -> BigUint {
        fn factorial(n: usize) -> BigUint {
            (1..=n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
        }
        let n = self.rank();
        match self.typ.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => factorial(n) << n,
            Family::D => factorial(n) << (n - 1),
            Family::E => match n {
                6 => BigUint::from(51_840u64),
                7 => BigUint::from(2_903_040u64),
                _ => BigUint::from(696_729_600u64),
            },
            Family::F => BigUint::from(1152u64),
            Family::G => BigUint::from(12u64),
        }
    }

    /// Dual Coxeter number h^vee = 1 + <rho, highest_root^vee>.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self
            .pairing(&self.rho, self.highest_root())
            .expect("rho has the right rank")
    }

    /// Decompose the sub-Dynkin diagram on `j_nodes` (0-based, any order)
    /// into connected components, identifying each component's simple type
    /// and the embedding from component node positions (in the component's
    /// own Bourbaki numbering) to ambient indices. Rank-2 double-bond
    /// components are canonicalized as B2 (= C2 with nodes swapped).
    pub fn levi_subsystem(&self, j_nodes: &[usize]) -> Vec<LeviComponent> {
        let mut nodes: Vec<usize> = j_nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let adjacent = |i: usize, j: usize| i != j && self.cartan[i][j] != 0;

        // Connected components, each listed with ascending ambient indices.
        let mut unvisited: Vec<usize> = nodes.clone();
        let mut components: Vec<Vec<usize>> = Vec::new();
        while let Some(&start) = unvisited.first() {
            let mut comp = vec![start];
            let mut frontier = vec![start];
            unvisited.retain(|&x| x != start);
            while let Some(v) = frontier.pop() {
                let next: Vec<usize> = unvisited
                    .iter()
                    .copied()
                    .filter(|&u| adjacent(v, u))
                    .collect();
                for u in next {
                    unvisited.retain(|&x| x != u);
                    comp.push(u);
                    frontier.push(u);
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components.sort_by_key(|c| c[0]);

        components
            .into_iter()
            .map(|comp| self.classify_component(&comp))
            .collect()
    }

    /// Identify one connected subdiagram. The returned embedding is verified
    /// against the component type's Cartan matrix, so a wrong structural
    /// guess cannot escape.
    fn classify_component(&self, comp: &[usize]) -> LeviComponent {
        let n = comp.len();
        if n == 1 {
            return LeviComponent {
                typ: RootSystemType::new(Family::A, 1).unwrap(),
                embedding: comp.to_vec(),
            };
        }
        let adjacent = |i: usize, j: usize| i != j && self.cartan[i][j] != 0;
        let neighbors = |v: usize| -> Vec<usize> {
            comp.iter().copied().filter(|&u| adjacent(v, u)).collect()
        };
        let branch = comp.iter().copied().find(|&v| neighbors(v).len() >= 3);

        let candidate_embeddings: Vec<Vec<usize>> = if let Some(b) = branch {
            vec![self.branched_embedding(comp, b, &neighbors)]
        } else {
            // A path: walk from each endpoint; prefer the orientation that
            // starts at the smaller ambient index.
            let mut ends: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&v| neighbors(v).len() == 1)
                .collect();
            ends.sort_unstable();
            assert_eq!(ends.len(), 2, "a connected non-branched diagram is a path");
            let walk = |start: usize| -> Vec<usize> {
                let mut path = vec![start];
                let mut prev = None;
                let mut cur = start;
                while path.len() < n {
                    let next = neighbors(cur)
                        .into_iter()
                        .find(|&u| Some(u) != prev)
                        .expect("path continues");
                    path.push(next);
                    prev = Some(cur);
                    cur = next;
                }
                path
            };
            vec![walk(ends[0]), walk(ends[1])]
        };

        let families = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
        for emb in &candidate_embeddings {
            for fam in families {
                let Ok(typ) = RootSystemType::new(fam, n) else {
                    continue;
                };
                if self.embedding_matches(typ, emb) {
                    return LeviComponent {
                        typ,
                        embedding: emb.clone(),
                    };
                }
            }
        }
        unreachable!("connected subdiagram of a finite Dynkin diagram must classify")
    }

    fn branched_embedding(
        &self,
        comp: &[usize],
        branch: usize,
        neighbors: &dyn Fn(usize) -> Vec<usize>,
    ) -> Vec<usize> {
        let n = comp.len();
        // Walk each arm away from the branch node.
        let mut arms: Vec<Vec<usize>> = neighbors(branch)
            .into_iter()
            .map(|first| {
                let mut arm = vec![first];
                let mut prev = branch;
                let mut cur = first;
                while let Some(next) = neighbors(cur).into_iter().find(|&u| u != prev) {
                    arm.push(next);
                    prev = cur;
                    cur = next;
                }
                arm
            })
            .collect();
        arms.sort_by_key(|arm| (arm.len(), arm[0]));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();

        let mut emb = vec![usize::MAX; n];
        match (lens[0], lens[1], lens[2]) {
            (1, 1, tail_len) => {
                // D_n: positions 0..n-3 form the tail path ending at the
                // branch node (position n-3); the two short arms are the
                // fork leaves n-2, n-1 in ascending ambient order.
                let tail = &arms[2];
                emb[n - 3] = branch;
                for (k, &v) in tail.iter().enumerate() {
                    // tail[0] is adjacent to the branch = position n-4.
                    emb[n - 4 - k] = v;
                }
                let mut leaves = [arms[0][0], arms[1][0]];
                leaves.sort_unstable();
                emb[n - 2] = leaves[0];
                emb[n - 1] = leaves[1];
                if tail_len == 1 {
                    // All three arms have length 1 (D_4): put the smallest
                    // leaf on the tail position for a canonical choice.
                    let mut leaves = [arms[0][0], arms[1][0], arms[2][0]];
                    leaves.sort_unstable();
                    emb[0] = leaves[0];
                    emb[1] = branch;
                    emb[2] = leaves[1];
                    emb[3] = leaves[2];
                }
            }
            (1, 2, _) => {
                // E_6, E_7 or E_8: branch node is position 3, the length-1
                // arm is position 1, the length-2 arm holds positions (2, 0),
                // and the long arm runs 4, 5, ...
                emb[3] = branch;
                emb[1] = arms[0][0];
                emb[2] = arms[1][0];
                emb[0] = arms[1][1];
                for (k, &v) in arms[2].iter().enumerate() {
                    emb[4 + k] = v;
                }
            }
            _ => unreachable!("no finite type has this branching"),
        }
        debug_assert!(emb.iter().all(|&v| v != usize::MAX));
        emb
    }

    /// Does the ambient Cartan matrix restricted along `emb` equal the
    /// standard Cartan matrix of `typ`?
    fn embedding_matches(&self, typ: RootSystemType, emb: &[usize]) -> bool {
        let want = cartan_matrix(typ);
        let n = emb.len();
        for p in 0..n {
            for q in 0..n {
                if self.cartan[emb[p]][emb[q]] != want[p][q] {
                    return false;
                }
            }
        }
        true
    }
}

/// A connected component of a Levi subsystem: its simple type and the map
/// from component node positions to ambient simple-root indices (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviComponent {
    pub typ: RootSystemType,
    pub embedding: Vec<usize>,
}
