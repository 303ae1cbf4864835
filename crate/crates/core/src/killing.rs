//! Reduced Killing form machinery: Gram matrices of the invariant form on
//! character lattices of isogeny quotients, the minimal scaling factor e
//! that makes the form integral and indivisible on the quotient's Lie
//! algebra, and discriminants deciding nondegeneracy over every field.
//!
//! The reduced Killing form b is the Killing form divided by twice the dual
//! Coxeter number, normalized so (alpha, alpha) = 2 on long roots. On the
//! Chevalley Z-form, b pairs the root vectors x_beta, x_{-beta} to
//! 2/(beta,beta) and restricts to the cocharacter lattice of the maximal
//! torus; the full discriminant is the product of both contributions.

use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, matrix_content, rational_det};
use crate::root_data::{Family, RootSystem, RootSystemType, Weight};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

/// The isogeny quotients whose reduced Killing form we compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientSpec {
    /// Simply connected G; the torus lattice is the coroot lattice.
    SimplyConnected(RootSystemType),
    /// Adjoint G; the torus lattice is the coweight lattice.
    Adjoint(RootSystemType),
    /// SO_{2n} for n >= 4: the vector quotient of Spin_{2n}.
    SpecialOrthogonalEven { n: usize },
    /// HSpin_{2n} for even n >= 4: the half-spin quotient of Spin_{2n}.
    HalfSpin { n: usize },
    /// SL_n / mu_m for m dividing n, m > 1.
    SpecialLinearQuotient { n: u64, m: u64 },
}

impl QuotientSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            QuotientSpec::SimplyConnected(_) | QuotientSpec::Adjoint(_) => Ok(()),
            QuotientSpec::SpecialOrthogonalEven { n } => {
                if n >= 4 {
                    Ok(())
                } else {
                    Err(Error::InvalidQuotient(format!("SO_{} needs n >= 4", 2 * n)))
                }
            }
            QuotientSpec::HalfSpin { n } => {
                if n >= 4 && n % 2 == 0 {
                    Ok(())
                } else {
                    Err(Error::InvalidQuotient(format!(
                        "HSpin_{} needs even n >= 4",
                        2 * n
                    )))
                }
            }
            QuotientSpec::SpecialLinearQuotient { n, m } => {
                if n >= 2 && m > 1 && m <= n && n % m == 0 {
                    Ok(())
                } else {
                    Err(Error::InvalidQuotient(format!(
                        "SL_{n}/mu_{m} needs m | n and m > 1"
                    )))
                }
            }
        }
    }

    /// Root system the quotient lives over.
    pub fn ambient(&self) -> Result<RootSystemType> {
        self.validate()?;
        match *self {
            QuotientSpec::SimplyConnected(t) | QuotientSpec::Adjoint(t) => Ok(t),
            QuotientSpec::SpecialOrthogonalEven { n } | QuotientSpec::HalfSpin { n } => {
                RootSystemType::new(Family::D, n)
            }
            QuotientSpec::SpecialLinearQuotient { n, .. } => {
                RootSystemType::new(Family::A, n as usize - 1)
            }
        }
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuotientSpec::SimplyConnected(t) => write!(f, "SimplyConnected({t})"),
            QuotientSpec::Adjoint(t) => write!(f, "Adjoint({t})"),
            QuotientSpec::SpecialOrthogonalEven { n } => write!(f, "SO({})", 2 * n),
            QuotientSpec::HalfSpin { n } => write!(f, "HSpin({})", 2 * n),
            QuotientSpec::SpecialLinearQuotient { n, m } => write!(f, "SL({n})/mu({m})"),
        }
    }
}

/// The reduced Killing form restricted to the torus lattice of a quotient:
/// basis in fundamental-weight coordinates, the rational Gram matrix of b,
/// the minimal integer e >= 1 with e*b integral and indivisible on the full
/// Lie algebra, and both determinants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeForm {
    pub ambient: RootSystemType,
    pub basis: Vec<Weight>,
    pub gram_form: Vec<Vec<BigRational>>,
    pub e_factor: BigRational,
    /// e * gram_form, integral.
    pub gram_scaled: Vec<Vec<BigInt>>,
    /// det of gram_form (the discriminant of b on the lattice).
    pub det_form: BigRational,
    /// det of gram_scaled.
    pub det_scaled: BigInt,
    /// e * b(x_beta, x_{-beta}) over positive roots.
    pub root_pair_values: Vec<BigInt>,
}

/// Nondegeneracy verdict for the reduced Killing form of a quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingReport {
    pub spec: QuotientSpec,
    pub lattice: LatticeForm,
    pub globally_nondegenerate: bool,
    pub degenerate_primes: Vec<u64>,
}

/// The bordered Cartan matrix determinant identity: an A_r Cartan block with
/// border entries a and corner b has determinant b(r+1) - a^2 r.
pub fn det_a(r: usize, a: i64, b: i64) -> BigInt {
    assert!(r >= 1);
    let size = r + 1;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for i in 0..r {
        m[i][i] = BigInt::from(2);
        if i + 1 < r {
            m[i][i + 1] = BigInt::from(-1);
            m[i + 1][i] = BigInt::from(-1);
        }
    }
    m[0][r] = BigInt::from(a);
    m[r][0] = BigInt::from(a);
    m[r][r] = BigInt::from(b);
    bareiss_det(&m)
}

fn weight_scaled(rank: usize, node: usize, scale: i64) -> Weight {
    let mut v = vec![0; rank];
    v[node] = scale;
    Weight(v)
}

fn simple_root_weight(rs: &RootSystem, i: usize) -> Weight {
    Weight((0..rs.rank()).map(|k| rs.cartan()[k][i]).collect())
}

/// Coroot alpha_i^vee = (ratio / d_i) alpha_i in weight coordinates.
fn coroot_weight(rs: &RootSystem, i: usize) -> Weight {
    let scale = rs.length_ratio() / rs.symmetrizers()[i];
    let alpha = simple_root_weight(rs, i);
    Weight(alpha.0.iter().map(|&c| scale * c).collect())
}

/// Construct the torus lattice basis of a quotient, ordered so the Gram
/// matrix matches the bordered det_a block shape where applicable.
pub fn lattice_of(spec: &QuotientSpec) -> Result<LatticeForm> {
    spec.validate()?;
    let ambient = spec.ambient()?;
    let rs = RootSystem::build(ambient);
    let rank = rs.rank();
    let basis: Vec<Weight> = match *spec {
        QuotientSpec::SimplyConnected(_) => (0..rank).map(|i| coroot_weight(&rs, i)).collect(),
        QuotientSpec::Adjoint(_) => (0..rank)
            .map(|i| weight_scaled(rank, i, rs.length_ratio() / rs.symmetrizers()[i]))
            .collect(),
        QuotientSpec::SpecialOrthogonalEven { n } => {
            // alpha_1, ..., alpha_{n-1}, omega_1: bordered A_{n-1} shape.
            let mut b: Vec<Weight> = (0..n - 1).map(|i| simple_root_weight(&rs, i)).collect();
            b.push(Weight::fundamental(n, 0));
            b
        }
        QuotientSpec::HalfSpin { n } => {
            // omega_n first, then alpha_2, ..., alpha_n: the first row and
            // column read (n/4, 0, ..., 0, 1) against a D_{n-1} block.
            let mut b = vec![Weight::fundamental(n, n - 1)];
            b.extend((1..n).map(|i| simple_root_weight(&rs, i)));
            b
        }
        QuotientSpec::SpecialLinearQuotient { n, m } => {
            // alpha_{n-1}, ..., alpha_2 and (n/m) omega_{n-1}: the reversed
            // block puts the generator pairing at the border position.
            let mut b: Vec<Weight> = (1..rank).rev().map(|i| simple_root_weight(&rs, i)).collect();
            b.push(weight_scaled(rank, rank - 1, (n / m) as i64));
            b
        }
    };

    let gram_form: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| {
                    let v = rs.inner_product(x, y);
                    BigRational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))
                })
                .collect()
        })
        .collect();
    let det_form = rational_det(&gram_form);

    // Minimal integer e clearing all denominators.
    let mut e = BigInt::one();
    for row in &gram_form {
        for x in row {
            e = e.lcm(x.denom());
        }
    }
    let gram_scaled: Vec<Vec<BigInt>> = gram_form
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = x * BigRational::from_integer(e.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    let root_pair_values: Vec<BigInt> = rs
        .positive_roots()
        .iter()
        .map(|beta| {
            let val = if beta.is_long { 1 } else { rs.length_ratio() };
            &e * BigInt::from(val)
        })
        .collect();
    // Indivisibility of e*b on the whole Lie algebra: gcd over the torus
    // Gram and the root-vector pairings must be 1, otherwise no scaling
    // makes the form both integral and indivisible.
    let mut content = matrix_content(&gram_scaled);
    for v in &root_pair_values {
        content = content.gcd(v);
    }
    if content != BigInt::one() {
        return Err(Error::Internal(format!(
            "no valid scaling factor for {spec}: content {content}"
        )));
    }

    let mut det_scaled = det_form.clone();
    for _ in 0..basis.len() {
        det_scaled *= BigRational::from_integer(e.clone());
    }
    debug_assert!(det_scaled.is_integer());
    Ok(LatticeForm {
        ambient,
        basis,
        gram_form,
        e_factor: BigRational::from_integer(e),
        gram_scaled,
        det_form,
        det_scaled: det_scaled.to_integer(),
        root_pair_values,
    })
}

/// The minimal e >= 1 making e*b integer-valued and indivisible on the
/// quotient's Lie algebra.
pub fn e_factor(spec: &QuotientSpec) -> Result<BigRational> {
    Ok(lattice_of(spec)?.e_factor)
}

fn prime_divisors(x: &BigInt) -> Vec<u64> {
    let mut n = x.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.to_u64().expect("small prime"));
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("discriminants here have small prime factors"));
    }
    out
}

/// Decide nondegeneracy of the reduced Killing form over every field. The
/// discriminant of the scaled form on the full Lie algebra is the torus
/// determinant times the squared product of the root-vector pairings; the
/// form is globally nondegenerate exactly when that is a unit.
pub fn classify_killing(spec: &QuotientSpec) -> Result<KillingReport> {
    let lattice = lattice_of(spec)?;
    let mut disc = lattice.det_scaled.clone();
    for v in &lattice.root_pair_values {
        disc *= v * v;
    }
    let degenerate_primes = prime_divisors(&disc);
    Ok(KillingReport {
        spec: *spec,
        globally_nondegenerate: degenerate_primes.is_empty(),
        lattice,
        degenerate_primes,
    })
}
