//! Laurent polynomials over the integers: the ring `Z[q^±]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q^±]`, stored sparsely as exponent → nonzero coefficient.
///
/// The map never holds a zero coefficient, so equality of values is equality
/// of representations. All arithmetic is exact.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// `c * q^k`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^k`.
    pub fn q_power(exp: i64) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in iter {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// True iff the value is a unit of `Z[q^±]`, i.e. `±q^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exponent/coefficient pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division: returns `Some(self / div)` when `div` divides `self`
    /// in `Z[q^±]`, `None` otherwise.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Normalize both to ordinary polynomials with nonzero constant term.
        let a_shift = self.min_exp().unwrap();
        let d_shift = div.min_exp().unwrap();
        let mut rem: Vec<BigInt> = dense(&self.shifted(-a_shift));
        let d: Vec<BigInt> = dense(&div.shifted(-d_shift));
        let d_deg = d.len() - 1;
        let d_lead = &d[d_deg];
        if rem.len() < d.len() {
            return None;
        }
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d_deg].clone();
            if lead.is_zero() {
                continue;
            }
            if (&lead % d_lead) != BigInt::zero() {
                return None;
            }
            let q = lead / d_lead;
            for (i, di) in d.iter().enumerate() {
                let t = di * &q;
                rem[k + i] -= t;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + a_shift - d_shift, c)),
        ))
    }
}

fn dense(p: &LaurentPoly) -> Vec<BigInt> {
    let deg = p.max_exp().unwrap_or(0);
    debug_assert!(p.min_exp().unwrap_or(0) >= 0);
    let mut v = alloc::vec![BigInt::zero(); deg as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $assign<&LaurentPoly> for LaurentPoly {
            fn $assign_method(&mut self, rhs: &LaurentPoly) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
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
            let coeff_part = if mag.is_one() && e != 0 {
                String::new()
            } else {
                alloc::format!("{mag}")
            };
            let exp_part = match e {
                0 => String::new(),
                1 => String::from("q"),
                _ => alloc::format!("q^{e}"),
            };
            if coeff_part.is_empty() {
                write!(f, "{exp_part}")?;
            } else if exp_part.is_empty() {
                write!(f, "{coeff_part}")?;
            } else {
                write!(f, "{coeff_part}*{exp_part}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
