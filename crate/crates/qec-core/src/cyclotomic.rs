//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Values are stored over the power basis `1, ζ_n, ..., ζ_n^{φ(n)-1}` with
//! rational coefficients, reduced modulo the n-th cyclotomic polynomial
//! `Φ_n`. Reduction makes the representation canonical: two equal values at
//! the same order have identical coefficient vectors. Values at different
//! orders are compared by embedding both into `Q(ζ_lcm)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Coefficients of `Φ_n`, ascending degree, length `φ(n) + 1`, monic.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut cache: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in divisors(n) {
        // x^d - 1 divided by the product of Φ_e for proper divisors e of d.
        let mut poly = alloc::vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for e in divisors(d) {
            if e < d {
                poly = int_poly_exact_div(&poly, &cache[&e]);
            }
        }
        cache.insert(d, poly);
    }
    cache.remove(&n).unwrap()
}

/// Exact division of integer polynomials (ascending coefficients); panics if
/// the division is not exact. Used only on cyclotomic-polynomial towers
/// where exactness is guaranteed.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = alloc::vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            let t = di * &c;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// An exact element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    /// Length `φ(order)`; reduced mod `Φ_order`.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: alloc::vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: alloc::vec![r],
        }
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        Cyclotomic::from_rational(BigRational::from_integer(k.into()))
    }

    /// `ζ_n^k`, reduced to canonical form at order `n`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let e = k.rem_euclid(n as i64) as u64;
        let mut dense = alloc::vec![BigRational::zero(); e as usize + 1];
        dense[e as usize] = BigRational::one();
        Cyclotomic::reduce(n, dense)
    }

    /// Builds a value at order `n` from a dense polynomial in `ζ_n`
    /// (ascending powers), reducing mod `Φ_n`.
    fn reduce(order: u64, mut dense: Vec<BigRational>) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_polynomial(order);
        // Polynomial remainder by the monic Φ_order.
        while dense.len() > phi {
            let top = dense.len() - 1;
            let c = dense[top].clone();
            dense.pop();
            if c.is_zero() {
                continue;
            }
            let base = top - phi;
            for (i, m) in modulus.iter().take(phi).enumerate() {
                let t = BigRational::from_integer(m.clone()) * &c;
                dense[base + i] -= t;
            }
        }
        dense.resize(phi, BigRational::zero());
        Cyclotomic {
            order,
            coeffs: dense,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients over the power basis of `Q(ζ_order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rewrites the value at order `m`, where `order | m`.
    pub fn embedded(&self, m: u64) -> Self {
        assert!(m % self.order == 0, "can only embed into a multiple order");
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut dense = alloc::vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Cyclotomic::reduce(m, dense)
    }

    fn at_common_order(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic, u64) {
        let l = num_integer::lcm(self.order, other.order);
        (self.embedded(l), other.embedded(l), l)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b, l) = self.at_common_order(other);
        Cyclotomic {
            order: l,
            coeffs: a
                .coeffs
                .iter()
                .zip(b.coeffs.iter())
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b, l) = self.at_common_order(other);
        let mut dense = alloc::vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[i + j] += x * y;
            }
        }
        Cyclotomic::reduce(l, dense)
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.order;
        let mut dense = alloc::vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = ((n as i64 - i as i64) % n as i64) as usize % n as usize;
            dense[e] += c;
        }
        Cyclotomic::reduce(n, dense)
    }

    /// `|z|^2 = z * conj(z)`, always rational for the values used here only
    /// when the product collapses; returned as a cyclotomic in general.
    pub fn norm_squared(&self) -> Cyclotomic {
        self.mul(&self.conj())
    }

    /// Extracts the value as a rational number, failing when the reduced
    /// form has support outside the constant basis vector.
    pub fn as_rational(&self) -> Result<BigRational> {
        if self.coeffs[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotRational);
        }
        Ok(self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Result<BigInt> {
        let r = self.as_rational()?;
        if !r.is_integer() {
            return Err(Error::NotRational);
        }
        Ok(r.to_integer())
    }

    /// Rewrites the value at the smallest order containing it. Normalization
    /// is explicit and never happens implicitly during arithmetic.
    pub fn normalized(&self) -> Cyclotomic {
        for d in divisors(self.order) {
            if d == self.order {
                break;
            }
            if let Some(v) = self.try_descend(d) {
                return v;
            }
        }
        self.clone()
    }

    /// Attempts to express the value in `Q(ζ_d)` for `d | order` by solving
    /// the embedding system exactly.
    fn try_descend(&self, d: u64) -> Option<Cyclotomic> {
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        // Columns: embedding of each basis vector ζ_d^j into Q(ζ_order).
        let mut cols = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let base = Cyclotomic::root_of_unity(d, j as i64).embedded(self.order);
            cols.push(base.coeffs);
        }
        // Solve cols * x = self.coeffs by Gaussian elimination over Q.
        let mut aug: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..phi_d {
            let Some(r) = (pivot_row..phi_n).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = aug[pivot_row][col].clone();
            for c in col..=phi_d {
                let v = aug[pivot_row][c].clone() / &inv;
                aug[pivot_row][c] = v;
            }
            for r in 0..phi_n {
                if r != pivot_row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=phi_d {
                        let t = &aug[pivot_row][c] * &f;
                        aug[r][c] -= t;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == phi_n {
                break;
            }
        }
        // Inconsistent system: some zero row with nonzero rhs.
        for r in pivot_row..phi_n {
            if !aug[r][phi_d].is_zero() {
                return None;
            }
        }
        let mut x = alloc::vec![BigRational::zero(); phi_d];
        for (i, col) in pivots.iter().enumerate() {
            x[*col] = aug[i][phi_d].clone();
        }
        Some(Cyclotomic { order: d, coeffs: x })
    }

    /// Deterministic total order used for reproducible sorting. Not a
    /// mathematically meaningful order; compares coefficient vectors at the
    /// common embedding order.
    pub fn canonical_cmp(&self, other: &Cyclotomic) -> Ordering {
        let (a, b, _) = self.at_common_order(other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.at_common_order(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z{}", self.order)?;
                } else {
                    write!(f, "z{}^{}", self.order, i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials_are_classical() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(&c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), [-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), [1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), [1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), [1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), [1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), [1, 0, -1, 0, 1]);
    }

    #[test]
    fn trivial_and_half_turn_roots() {
        assert_eq!(zeta(1, 0), Cyclotomic::one());
        assert_eq!(zeta(2, 1), Cyclotomic::from_integer(-1));
        // ζ_6^3 = -1 after reduction mod Φ_6.
        assert_eq!(zeta(6, 3), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let s = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(s, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn conjugation_of_i() {
        assert_eq!(zeta(4, 1).conj(), zeta(4, 3));
        // Conjugation is an involution.
        let v = zeta(12, 5).add(&Cyclotomic::from_integer(2));
        assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn rationality_detection() {
        assert!(zeta(5, 1).as_rational().is_err());
        assert_eq!(
            zeta(6, 3).as_rational().unwrap(),
            BigRational::from_integer((-1).into())
        );
        let half = Cyclotomic::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.as_rational().unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(half.as_integer().is_err());
    }

    #[test]
    fn roots_have_stated_multiplicative_order() {
        for n in 1..=12u64 {
            for k in 0..n as i64 {
                let z = zeta(n, k);
                let expected = n / num_integer::gcd(n, k.rem_euclid(n as i64) as u64);
                let mut pow = Cyclotomic::one();
                let mut ord = 0;
                for m in 1..=n {
                    pow = pow.mul(&z);
                    if pow == Cyclotomic::one() {
                        ord = m;
                        break;
                    }
                }
                assert_eq!(ord, expected, "order of ζ_{n}^{k}");
            }
        }
    }

    #[test]
    fn embedding_preserves_value() {
        let v = zeta(3, 1);
        let w = v.embedded(12);
        assert_eq!(v, w);
        assert_eq!(w.order(), 12);
        assert_eq!(w.normalized().order(), 3);
    }

    #[test]
    fn normalization_finds_minimal_order() {
        // ζ_8^2 = i lives at order 4.
        let v = zeta(8, 2);
        let n = v.normalized();
        assert_eq!(n.order(), 4);
        assert_eq!(n, zeta(4, 1));
        // ζ_8 itself does not descend.
        assert_eq!(zeta(8, 1).normalized().order(), 8);
        // A rational combination descends all the way to order 1.
        let r = zeta(8, 1).mul(&zeta(8, 7)); // = 1
        assert_eq!(r.normalized().order(), 1);
    }

    #[test]
    fn cross_order_arithmetic() {
        // ζ_2 * ζ_3 = ζ_6^5: lcm embedding.
        let p = zeta(2, 1).mul(&zeta(3, 1));
        assert_eq!(p, zeta(6, 5));
        // ζ_4 + conj(ζ_4) = 0.
        assert!(zeta(4, 1).add(&zeta(4, 1).conj()).is_zero());
    }
}
