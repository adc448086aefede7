use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::{PermError, Permutation};
use crate::graph::Partition;

#[derive(Clone)]
struct Level {
    point: usize,
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the level's base point to `p`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

/// A permutation group with a base and strong generating set.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    /// Equality as subgroups of the same symmetric group.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order == other.order
            && other.generators.iter().all(|g| self.contains(g))
    }
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<(), PermError> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(PermError::DegreeMismatch {
            expected: degree,
            got: g.degree(),
        }),
        None => Ok(()),
    }
}

impl PermGroup {
    /// Builds the group generated by `gens` with deterministic Schreier–Sims.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermError> {
        PermGroup::with_base(degree, gens, &[])
    }

    /// Like [`PermGroup::new`], but the base starts with `prefix`.
    pub fn with_base(
        degree: usize,
        gens: Vec<Permutation>,
        prefix: &[usize],
    ) -> Result<Self, PermError> {
        check_degrees(degree, &gens)?;
        if let Some(&p) = prefix.iter().find(|&&p| p >= degree) {
            return Err(PermError::PointOutOfRange { point: p, degree });
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in &gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for s in &strong {
            if base.iter().all(|&b| s.image(b) == b) {
                base.push(s.support()[0]);
            }
        }
        let mut group = PermGroup {
            degree,
            generators: gens,
            base,
            strong,
            levels: Vec::new(),
            order: BigUint::one(),
        };
        group.init_levels();
        group.schreier_sims();
        group.finish();
        Ok(group)
    }

    /// Wraps a known base and strong generating set without running
    /// Schreier–Sims. The caller guarantees that `strong` is a strong
    /// generating set relative to `base`.
    pub fn from_strong_generators(
        degree: usize,
        strong: Vec<Permutation>,
        base: Vec<usize>,
    ) -> Result<Self, PermError> {
        check_degrees(degree, &strong)?;
        let strong: Vec<Permutation> = strong.into_iter().filter(|g| !g.is_identity()).collect();
        let mut group = PermGroup {
            degree,
            generators: strong.clone(),
            base,
            strong,
            levels: Vec::new(),
            order: BigUint::one(),
        };
        group.init_levels();
        group.finish();
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    fn init_levels(&mut self) {
        self.levels = self
            .base
            .iter()
            .map(|&point| Level {
                point,
                gens: Vec::new(),
                orbit: Vec::new(),
                transversal: Vec::new(),
                inverse: Vec::new(),
            })
            .collect();
        for i in 0..self.levels.len() {
            self.recompute_level(i);
        }
    }

    fn recompute_level(&mut self, i: usize) {
        let fixed = &self.base[..i];
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| fixed.iter().all(|&b| self.strong[s].image(b) == b))
            .collect();
        let point = self.levels[i].point;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[point] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            k += 1;
            for &s in &gens {
                let q = self.strong[s].image(p);
                if transversal[q].is_none() {
                    let u = transversal[p].as_ref().unwrap().compose(&self.strong[s]);
                    transversal[q] = Some(u);
                    orbit.push(q);
                }
            }
        }
        let inverse = transversal
            .iter()
            .map(|t| t.as_ref().map(Permutation::inverse))
            .collect();
        let level = &mut self.levels[i];
        level.gens = gens;
        level.orbit = orbit;
        level.transversal = transversal;
        level.inverse = inverse;
    }

    fn sift_from(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let p = h.image(self.levels[l].point);
            match &self.levels[l].inverse[p] {
                None => return (h, l),
                Some(inv) => h = h.compose(inv),
            }
        }
        let depth = self.levels.len();
        (h, depth)
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut dropped = None;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            'scan: for &p in &orbit {
                for &s in &gens {
                    let q = self.strong[s].image(p);
                    let level = &self.levels[lvl];
                    let g = level.transversal[p]
                        .as_ref()
                        .unwrap()
                        .compose(&self.strong[s])
                        .compose(level.inverse[q].as_ref().unwrap());
                    if g.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(g, lvl + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        if j == self.levels.len() {
                            let point = h.support()[0];
                            self.base.push(point);
                            self.levels.push(Level {
                                point,
                                gens: Vec::new(),
                                orbit: Vec::new(),
                                transversal: Vec::new(),
                                inverse: Vec::new(),
                            });
                        }
                        self.strong.push(h);
                        for l in lvl + 1..=j {
                            self.recompute_level(l);
                        }
                        dropped = Some(j);
                        break 'scan;
                    }
                }
            }
            match dropped {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        for l in 0..self.levels.len() {
            self.recompute_level(l);
        }
    }

    fn finish(&mut self) {
        self.order = self
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Orbit lengths along the stabilizer chain.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn check_perm(&self, g: &Permutation) -> Result<(), PermError> {
        check_degrees(self.degree, std::slice::from_ref(g))
    }

    fn check_point(&self, p: usize) -> Result<(), PermError> {
        if p < self.degree {
            Ok(())
        } else {
            Err(PermError::PointOutOfRange {
                point: p,
                degree: self.degree,
            })
        }
    }

    /// Sifts `g` through the chain, returning the residue and the level at
    /// which sifting stopped.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(g);
        j == self.levels.len() && h.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        (0..gens.len()).all(|i| {
            (i + 1..gens.len()).all(|j| gens[i].compose(&gens[j]) == gens[j].compose(&gens[i]))
        })
    }

    pub fn orbit(&self, p: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(p)?;
        let mut seen = vec![false; self.degree];
        seen[p] = true;
        let mut orbit = vec![p];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Orbit partition of `0..degree`, blocks sorted by smallest point.
    pub fn orbits(&self) -> Partition {
        let mut label: Vec<usize> = (0..self.degree).collect();
        fn find(label: &mut [usize], mut x: usize) -> usize {
            while label[x] != x {
                label[x] = label[label[x]];
                x = label[x];
            }
            x
        }
        for g in &self.generators {
            for x in 0..self.degree {
                let (a, b) = (find(&mut label, x), find(&mut label, g.image(x)));
                if a != b {
                    label[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..self.degree).map(|x| find(&mut label, x)).collect();
        Partition::from_labels(&labels)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Same group with a base beginning with `prefix`.
    pub fn rebase(&self, prefix: &[usize]) -> Result<PermGroup, PermError> {
        let mut g = PermGroup::with_base(self.degree, self.strong.clone(), prefix)?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    /// Subgroup fixing the first `i` base points, from the existing chain.
    fn level_subgroup(&self, i: usize) -> PermGroup {
        let strong: Vec<Permutation> = if i < self.levels.len() {
            self.levels[i]
                .gens
                .iter()
                .map(|&s| self.strong[s].clone())
                .collect()
        } else {
            Vec::new()
        };
        PermGroup::from_strong_generators(self.degree, strong, self.base[i.min(self.base.len())..].to_vec())
            .expect("chain levels share the degree")
    }

    pub fn point_stabilizer(&self, v: usize) -> Result<PermGroup, PermError> {
        self.pointwise_stabilizer(&[v])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup, PermError> {
        for &p in points {
            self.check_point(p)?;
        }
        let g = self.rebase(points)?;
        let mut distinct = points.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        Ok(g.level_subgroup(distinct.len()))
    }

    /// Decides whether some element maps the set `s` onto the set `t`.
    pub fn setwise_image_test(&self, s: &[usize], t: &[usize]) -> Result<bool, PermError> {
        let mut s = s.to_vec();
        let mut t = t.to_vec();
        for &p in s.iter().chain(t.iter()) {
            self.check_point(p)?;
        }
        s.sort_unstable();
        s.dedup();
        t.sort_unstable();
        t.dedup();
        if s.len() != t.len() {
            return Ok(false);
        }
        let g = self.rebase(&s)?;
        let mut in_t = vec![false; self.degree];
        for &p in &t {
            in_t[p] = true;
        }
        fn search(g: &PermGroup, in_t: &[bool], depth: usize, level: usize, w: &Permutation) -> bool {
            if level == depth {
                return true;
            }
            let lv = &g.levels[level];
            lv.orbit.iter().any(|&p| {
                in_t[w.image(p)] && {
                    let next = lv.transversal[p].as_ref().unwrap().compose(w);
                    search(g, in_t, depth, level + 1, &next)
                }
            })
        }
        Ok(search(&g, &in_t, s.len(), 0, &self.identity()))
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in &self.levels {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = level.transversal[p].as_ref().unwrap().compose(&g);
        }
        g
    }

    /// All elements, in chain order. Only sensible for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![self.identity()];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for g in &out {
                for &p in &level.orbit {
                    next.push(g.compose(level.transversal[p].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// Position of `g` in the mixed-radix numbering of the chain.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut h = g.clone();
        let mut rank: u64 = 0;
        for level in &self.levels {
            let p = h.image(level.point);
            let inv = level.inverse[p].as_ref()?;
            let idx = level.orbit.iter().position(|&q| q == p)? as u64;
            rank = rank * level.orbit.len() as u64 + idx;
            h = h.compose(inv);
        }
        h.is_identity().then_some(rank)
    }

    /// Orbits and transversals along the chain, top level first.
    pub(crate) fn chain_levels(&self) -> impl Iterator<Item = (&[usize], &[Option<Permutation>])> {
        self.levels
            .iter()
            .map(|l| (l.orbit.as_slice(), l.transversal.as_slice()))
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn unrank(&self, mut rank: u64) -> Permutation {
        let mut g = self.identity();
        for level in self.levels.iter().rev() {
            let len = level.orbit.len() as u64;
            let p = level.orbit[(rank % len) as usize];
            rank /= len;
            g = g.compose(level.transversal[p].as_ref().unwrap());
        }
        g
    }

    /// Group generated by `self` and `extra`.
    pub fn extend(&self, extra: &[Permutation]) -> Result<PermGroup, PermError> {
        check_degrees(self.degree, extra)?;
        let new: Vec<&Permutation> = extra.iter().filter(|g| !self.contains(g)).collect();
        let mut generators = self.generators.clone();
        generators.extend(extra.iter().cloned());
        if new.is_empty() {
            let mut g = self.clone();
            g.generators = generators;
            return Ok(g);
        }
        let mut strong = self.strong.clone();
        strong.extend(new.into_iter().cloned());
        let mut g = PermGroup::with_base(self.degree, strong, &self.base)?;
        g.generators = generators;
        Ok(g)
    }

    /// Smallest subgroup containing `xs` that is normalized by `self`.
    pub fn normal_closure(&self, xs: &[Permutation]) -> Result<PermGroup, PermError> {
        check_degrees(self.degree, xs)?;
        let mut n = PermGroup::new(self.degree, xs.to_vec())?;
        let mut k = 0;
        while k < n.generators.len() {
            let x = n.generators[k].clone();
            k += 1;
            for g in &self.generators {
                let c = x.conjugate_by(g);
                if !n.contains(&c) {
                    n = n.extend(&[c])?;
                }
            }
        }
        Ok(n)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let c = gens[i].commutator(&gens[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators share the degree")
    }

    pub fn is_solvable(&self) -> bool {
        let mut g = self.clone();
        loop {
            if g.is_trivial() {
                return true;
            }
            let d = g.derived_subgroup();
            if d.order == g.order {
                return false;
            }
            g = d;
        }
    }

    pub fn is_normal_subgroup_of(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && self
                .generators
                .iter()
                .all(|x| g.generators.iter().all(|h| self.contains(&x.conjugate_by(h))))
    }

    /// Given the image of each generator under an action on `target_degree`
    /// points, returns the image group and the kernel of the action.
    pub fn action_homomorphism(
        &self,
        images: &[Permutation],
        target_degree: usize,
    ) -> Result<(PermGroup, PermGroup), PermError> {
        check_degrees(target_degree, images)?;
        assert_eq!(images.len(), self.generators.len(), "one image per generator");
        let n = self.degree;
        let total = n + target_degree;
        let combined: Vec<Permutation> = self
            .generators
            .iter()
            .zip(images)
            .map(|(g, img)| {
                let mut v = g.images().to_vec();
                v.extend(img.images().iter().map(|&x| x + n));
                Permutation::from_vec_unchecked(v)
            })
            .collect();
        let prefix: Vec<usize> = (n..total).collect();
        let big = PermGroup::with_base(total, combined, &prefix)?;
        let depth = target_degree;
        let strong: Vec<Permutation> = if depth < big.levels.len() {
            big.levels[depth]
                .gens
                .iter()
                .map(|&s| {
                    Permutation::from_vec_unchecked(big.strong[s].images()[..n].to_vec())
                })
                .collect()
        } else {
            Vec::new()
        };
        let kernel = PermGroup::from_strong_generators(n, strong, big.base[depth..].to_vec())?;
        let image = PermGroup::new(target_degree, images.to_vec())?;
        debug_assert_eq!(&image.order * &kernel.order, self.order);
        Ok((image, kernel))
    }

    /// Action on a union of orbits `points`; point `points[i]` becomes `i`.
    pub fn restrict_to(&self, points: &[usize]) -> Result<PermGroup, PermError> {
        let images: Option<Vec<Permutation>> =
            self.generators.iter().map(|g| g.restrict(points)).collect();
        let images = images.ok_or(PermError::NotAnOrbit)?;
        PermGroup::new(points.len(), images)
    }

    /// Action on a list of disjoint blocks, together with its kernel.
    pub fn induced_action(
        &self,
        blocks: &[Vec<usize>],
    ) -> Result<(PermGroup, PermGroup), PermError> {
        let mut block_of = vec![usize::MAX; self.degree];
        for (i, b) in blocks.iter().enumerate() {
            for &p in b {
                self.check_point(p)?;
                if block_of[p] != usize::MAX {
                    return Err(PermError::BlocksNotInvariant);
                }
                block_of[p] = i;
            }
        }
        let mut images = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut img = Vec::with_capacity(blocks.len());
            for b in blocks {
                if b.is_empty() {
                    return Err(PermError::BlocksNotInvariant);
                }
                let target = block_of[g.image(b[0])];
                if target == usize::MAX
                    || blocks[target].len() != b.len()
                    || b.iter().any(|&p| block_of[g.image(p)] != target)
                {
                    return Err(PermError::BlocksNotInvariant);
                }
                img.push(target);
            }
            images.push(Permutation::new(img).map_err(|_| PermError::BlocksNotInvariant)?);
        }
        self.action_homomorphism(&images, blocks.len())
    }

    /// Checks that `g` fixes every point in `points`.
    pub fn fixes_all(g: &Permutation, points: &[usize]) -> bool {
        points.iter().all(|&p| g.image(p) == p)
    }

    pub fn check_element(&self, g: &Permutation) -> Result<(), PermError> {
        self.check_perm(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::constructions::{cyclic, symmetric, wreath_with_sym};

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn four_cycle_has_order_four() {
        let g = PermGroup::new(4, vec![cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), &BigUint::from(4u32));
    }

    #[test]
    fn empty_generating_set() {
        let g = PermGroup::new(6, vec![]).unwrap();
        assert!(g.is_trivial());
        assert_eq!(g.orbits().len(), 6);
    }

    #[test]
    fn degree_mismatch() {
        let err = PermGroup::new(4, vec![Permutation::identity(3)]).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { expected: 4, got: 3 });
    }

    #[test]
    fn symmetric_orders() {
        for n in 1..=7 {
            let g = symmetric(n);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order_u64(), Some(fact));
        }
    }

    #[test]
    fn membership() {
        let g = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert!(g.contains(&cyc(5, &[&[0, 2, 4, 1, 3]])));
        assert!(!g.contains(&cyc(5, &[&[0, 1]])));
    }

    #[test]
    fn stabilizers() {
        let s5 = symmetric(5);
        assert_eq!(s5.point_stabilizer(2).unwrap().order_u64(), Some(24));
        assert_eq!(s5.pointwise_stabilizer(&[0, 1, 2]).unwrap().order_u64(), Some(2));
        let stab = s5.point_stabilizer(2).unwrap();
        assert!(stab.generators().iter().all(|g| g.image(2) == 2));
    }

    #[test]
    fn setwise_images() {
        let c6 = cyclic(6);
        assert!(c6.setwise_image_test(&[0, 2], &[1, 3]).unwrap());
        assert!(!c6.setwise_image_test(&[0, 2], &[0, 3]).unwrap());
        assert!(!c6.setwise_image_test(&[0], &[0, 1]).unwrap());
        assert!(c6.setwise_image_test(&[], &[]).unwrap());
    }

    #[test]
    fn wreath_block_action() {
        let w = wreath_with_sym(&cyclic(2), 3);
        let blocks = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        let (image, kernel) = w.induced_action(&blocks).unwrap();
        assert_eq!(image.order_u64(), Some(6));
        assert_eq!(kernel.order_u64(), Some(8));
        let bad = vec![vec![0, 2], vec![1, 3], vec![4, 5]];
        assert_eq!(w.induced_action(&bad).unwrap_err(), PermError::BlocksNotInvariant);
    }

    #[test]
    fn elements_and_rank() {
        let s4 = symmetric(4);
        let els = s4.elements();
        assert_eq!(els.len(), 24);
        let mut ranks: Vec<u64> = els.iter().map(|g| s4.rank(g).unwrap()).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..24).collect::<Vec<_>>());
    }

    #[test]
    fn derived_series() {
        let s4 = symmetric(4);
        let a4 = s4.derived_subgroup();
        assert_eq!(a4.order_u64(), Some(12));
        assert_eq!(a4.derived_subgroup().order_u64(), Some(4));
        assert!(s4.is_solvable());
        assert!(!symmetric(5).is_solvable());
    }
}
