//! Permutations of `{0, ..., n-1}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image array: point `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::Invalid(alloc::format!(
                    "image array {images:?} is not a bijection"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = alloc::vec![false; degree];
        for cycle in cycles {
            if cycle.iter().any(|&p| p as usize >= degree) {
                return Err(Error::Invalid(alloc::format!(
                    "cycle point out of range for degree {degree}"
                )));
            }
            if cycle.len() < 2 {
                continue;
            }
            for i in 0..cycle.len() {
                let a = cycle[i] as usize;
                let b = cycle[(i + 1) % cycle.len()];
                if moved[a] {
                    return Err(Error::Invalid(alloc::format!(
                        "point {a} appears in two cycles"
                    )));
                }
                moved[a] = true;
                images[a] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u16 == p)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0u16; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn order(&self) -> u32 {
        let mut p = self.clone();
        let mut ord = 1;
        while !p.is_identity() {
            p = p.compose(self);
            ord += 1;
        }
        ord
    }

    /// Disjoint cycles of length at least 2, each rotated to start with its
    /// least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u16);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_construction_and_display() {
        let p = Perm::from_cycles(4, &[alloc::vec![0, 1, 2]]).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 3);
        assert_eq!(alloc::format!("{p}"), "(0 1 2)");
        assert_eq!(alloc::format!("{}", Perm::identity(5)), "e");
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[alloc::vec![1, 2]]).unwrap();
        // (a∘b)(1) = a(2) = 2 — b first.
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn inverse_and_order() {
        let p = Perm::from_cycles(5, &[alloc::vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.inverse().order(), 4);
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        assert!(Perm::from_cycles(3, &[alloc::vec![0, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[alloc::vec![0, 1], alloc::vec![1, 2]]).is_err());
        assert!(Perm::from_images(alloc::vec![0, 0, 1]).is_err());
    }
}
