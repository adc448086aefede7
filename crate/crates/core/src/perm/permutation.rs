use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::PermError;

/// A permutation of `0..n`, stored as its image array.
///
/// Products compose left to right: `x^(a*b) = (x^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(PermError::PointOutOfRange { point: x, degree: n });
                }
                if touched[x] {
                    return Err(PermError::NotABijection);
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i]] = g.images[x];
        }
        Permutation { images }
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::from(1u32), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Order as a machine integer; the lcm of cycle lengths of a permutation
    /// of degree at most a few hundred always fits.
    pub fn order_u64(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    /// Restriction to `points`, which must be a union of cycles; point
    /// `points[i]` becomes `i`.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut index = vec![usize::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i;
        }
        let images: Option<Vec<usize>> = points
            .iter()
            .map(|&p| {
                let q = index[self.images[p]];
                (q != usize::MAX).then_some(q)
            })
            .collect();
        images.map(|images| Permutation { images })
    }

    /// Embeds into degree `n >= degree()`, fixing the new points.
    pub fn extend_to(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }

    /// Action on `offset..offset+degree` inside a larger degree `n`.
    pub fn shifted(&self, offset: usize, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).image(0), 2);
        assert_eq!(b.compose(&a).image(0), 1);
    }

    #[test]
    fn inverse_and_order() {
        let p = Permutation::from_cycles(7, &[&[0, 1, 2], &[3, 4, 5, 6]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), BigUint::from(12u32));
        assert!(p.pow(12).is_identity());
        assert!(!p.pow(6).is_identity());
        assert_eq!(p.cycle_type(), vec![3, 4]);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let p = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let g = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let c = p.conjugate_by(&g);
        assert_eq!(c, g.inverse().compose(&p).compose(&g));
        assert_eq!(c.cycles(), vec![vec![0, 2]]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn display() {
        let p = Permutation::from_cycles(5, &[&[3, 4], &[0, 2, 1]]).unwrap();
        assert_eq!(p.to_string(), "(0 2 1)(3 4)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }
}
