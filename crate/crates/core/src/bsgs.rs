//! Stabiliser chains built by the deterministic Schreier–Sims algorithm.
//!
//! Base points are chosen as a caller-supplied prefix followed by the first moved
//! point of whichever generator or sifted residue forces a new level. Transversals are
//! stored as Schreier trees (one generator label per orbit point), so memory stays
//! linear in the degree per level.

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: usize,
    pub(crate) gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    pub(crate) orbit: Vec<usize>,
    label: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base_point: usize, gens: Vec<Permutation>) -> Self {
        let inv_gens = gens.iter().map(Permutation::inverse).collect();
        let mut level = Level {
            base_point,
            gens,
            inv_gens,
            orbit: Vec::new(),
            label: vec![NOT_IN_ORBIT; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn add_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.label.iter_mut().for_each(|l| *l = NOT_IN_ORBIT);
        self.orbit.clear();
        self.label[self.base_point] = ROOT;
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.label[y] == NOT_IN_ORBIT {
                    self.label[y] = k as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    #[inline]
    pub(crate) fn in_orbit(&self, point: usize) -> bool {
        self.label[point] != NOT_IN_ORBIT
    }

    /// Transversal element `u` with `base_point^u = point`.
    pub(crate) fn representative(&self, point: usize) -> Permutation {
        let mut labels = Vec::new();
        let mut x = point;
        while self.label[x] != ROOT {
            let k = self.label[x] as usize;
            labels.push(k);
            x = self.inv_gens[k].apply(x);
        }
        let mut u = Permutation::identity(self.label.len());
        for &k in labels.iter().rev() {
            u = &u * &self.gens[k];
        }
        u
    }

    /// Returns `h · u⁻¹` where `u` is the transversal element for `point`.
    pub(crate) fn strip(&self, mut h: Permutation, point: usize) -> Permutation {
        let mut x = point;
        while self.label[x] != ROOT {
            let k = self.label[x] as usize;
            h = &h * &self.inv_gens[k];
            x = self.inv_gens[k].apply(x);
        }
        h
    }

    /// True when the Schreier generator for (point, generator k) is trivially the identity.
    fn tree_edge(&self, point: usize, k: usize) -> bool {
        let y = self.gens[k].apply(point);
        self.label[y] == k as u32 && self.inv_gens[k].apply(y) == point
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Bsgs {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl Bsgs {
    pub(crate) fn build(
        degree: usize,
        generators: &[Permutation],
        prefix: &[usize],
        known_order: Option<u128>,
    ) -> Bsgs {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().expect("non-identity generator"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let level_gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, level_gens));
        }
        let mut bsgs = Bsgs { degree, levels };
        if bsgs.matches_order(known_order) {
            return bsgs;
        }

        let mut cur = bsgs.levels.len() as isize - 1;
        while cur >= 0 {
            let l = cur as usize;
            let mut extended: Option<usize> = None;
            'scan: for oi in 0..bsgs.levels[l].orbit.len() {
                let beta = bsgs.levels[l].orbit[oi];
                for k in 0..bsgs.levels[l].gens.len() {
                    if bsgs.levels[l].tree_edge(beta, k) {
                        continue;
                    }
                    let level = &bsgs.levels[l];
                    let s = &level.gens[k];
                    let image = s.apply(beta);
                    let h = level.strip(&level.representative(beta) * s, image);
                    let (residue, j) = bsgs.sift(h, l + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == bsgs.levels.len() {
                        let b = residue.first_moved_point().expect("non-identity residue");
                        bsgs.levels.push(Level::new(degree, b, Vec::new()));
                    }
                    for m in (l + 1)..=j {
                        bsgs.levels[m].add_generator(residue.clone());
                    }
                    extended = Some(j);
                    break 'scan;
                }
            }
            match extended {
                Some(j) => {
                    if bsgs.matches_order(known_order) {
                        break;
                    }
                    cur = j as isize;
                }
                None => cur -= 1,
            }
        }
        // Trailing levels with trivial orbits carry no information unless they came from the prefix.
        while bsgs.levels.len() > prefix.len()
            && bsgs.levels.last().is_some_and(|lv| lv.orbit.len() == 1)
        {
            bsgs.levels.pop();
        }
        bsgs
    }

    fn matches_order(&self, known: Option<u128>) -> bool {
        known.is_some_and(|k| self.order() == k)
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Sifts `h` starting at level `from`; returns the residue and the index of the level
    /// where sifting stopped (`levels.len()` when every level was passed).
    pub(crate) fn sift(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = h.apply(level.base_point);
            if !level.in_orbit(image) {
                return (h, i);
            }
            h = level.strip(h, image);
        }
        (h, self.levels.len())
    }

    pub(crate) fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift(p.clone(), 0);
        residue.is_identity()
    }

    pub(crate) fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Generators of the pointwise stabiliser of the first `depth` base points.
    pub(crate) fn stabiliser_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }
}
