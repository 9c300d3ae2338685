use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored as its image array, acting on the right:
/// `x^(p*q) = (x^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::NonBijection(format!(
                    "image {x} of point {i} is outside 0..{n}"
                )));
            }
            if seen[x] {
                return Err(Error::NonBijection(format!("point {x} is hit twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint (or overlapping, composed left to right) cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::PointOutOfRange {
                        point: x.max(y),
                        degree,
                    });
                }
                images[x] = y;
            }
            p = &p * &Permutation::new(images)?;
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^other = other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Self {
        let n = self.images.len();
        let mut out = vec![0u32; n];
        for i in 0..n {
            // (i^other)^(other⁻¹ self other) = (i^self)^other
            out[other.images[i] as usize] = other.images[self.images[i] as usize];
        }
        Permutation { images: out }
    }

    /// Multiplicative order of the element.
    pub fn order(&self) -> u128 {
        let mut seen = vec![false; self.images.len()];
        let mut lcm: u128 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u128;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lcm = lcm / gcd(lcm, len) * len;
        }
        lcm
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0usize;
        for start in 0..self.images.len() {
            let mut x = start;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions.is_multiple_of(2)
    }

    /// Image of a point set, sorted ascending.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Disjoint cycle decomposition, each cycle starting at its least point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint union action: `self` on the first block of points, `other` shifted after it.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.images.len() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| rhs.images[x as usize])
                .collect(),
        }
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::NonBijection(_))
        ));
        assert!(matches!(
            Permutation::new(vec![0, 3, 1]),
            Err(Error::NonBijection(_))
        ));
    }

    #[test]
    fn right_action_composition() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&b * &a).apply(0), 1);
    }

    #[test]
    fn conjugation_matches_product() {
        let a = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let g = Permutation::from_cycles(5, &[&[0, 3], &[2, 4]]).unwrap();
        let direct = &(&g.inverse() * &a) * &g;
        assert_eq!(a.conjugate_by(&g), direct);
        assert_eq!(a.conjugate_by(&g).cycles(), vec![vec![1, 4, 3]]);
    }

    #[test]
    fn element_order_and_parity() {
        let p = Permutation::from_cycles(6, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
    }

    #[test]
    fn serde_is_the_image_array() {
        let p = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[1,2,3,0]");
        let back: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}
