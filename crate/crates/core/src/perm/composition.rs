//! Composition factors, minimal faithful degrees and the classes Γ_d.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{PermError, PermGroup, Permutation};

/// Default bound on `|G|` accepted by [`composition_factors`].
pub const DEFAULT_ORDER_CAP: u64 = 10_000_000;
/// Largest simple group whose simplicity is certified by class enumeration.
pub const SIMPLICITY_CAP: u64 = 1_000_000;
/// Largest non-alternating simple factor whose minimal degree is searched.
pub const MIN_DEGREE_CAP: u64 = 10_000;
const COSET_CAP: usize = 200_000;
const RANDOM_NORMAL_TRIES: usize = 24;
const EMBEDDING_NODE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorKind {
    Cyclic { p: u64 },
    Alternating { m: usize },
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionFactor {
    #[serde(flatten)]
    pub kind: FactorKind,
    #[serde(with = "crate::util::decimal")]
    pub order: BigUint,
    /// A faithful permutation representation, kept for `Other` factors.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl CompositionFactor {
    pub fn cyclic(p: u64) -> Self {
        CompositionFactor {
            kind: FactorKind::Cyclic { p },
            order: BigUint::from(p),
            witness: None,
        }
    }

    pub fn alternating(m: usize) -> Self {
        CompositionFactor {
            kind: FactorKind::Alternating { m },
            order: half_factorial(m),
            witness: None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self.kind, FactorKind::Cyclic { .. })
    }

    pub fn witness_group(&self) -> Option<PermGroup> {
        self.witness
            .as_ref()
            .map(|w| PermGroup::new(w.degree, w.generators.clone()).expect("stored witness"))
    }

    fn sort_key(&self) -> (u8, BigUint) {
        let tag = match self.kind {
            FactorKind::Cyclic { .. } => 0,
            FactorKind::Alternating { .. } => 1,
            FactorKind::Other => 2,
        };
        (tag, self.order.clone())
    }
}

impl std::fmt::Display for CompositionFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            FactorKind::Cyclic { p } => write!(f, "C{p}"),
            FactorKind::Alternating { m } => write!(f, "A{m}"),
            FactorKind::Other => write!(f, "simple({})", self.order),
        }
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn half_factorial(m: usize) -> BigUint {
    factorial(m) / 2u32
}

/// Prime factorization of `n`, assuming every prime factor is at most
/// `bound`. Primes are listed with multiplicity in ascending order.
pub fn small_prime_factors(n: &BigUint, bound: usize) -> Vec<u64> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while !n.is_one() && !n.is_zero() {
        if p as usize > bound.max(2) {
            panic!("order has a prime factor above {bound}");
        }
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            out.push(p);
            n /= &bp;
        }
        p += 1;
    }
    out
}

fn primes_of(n: &BigUint, bound: usize) -> Vec<u64> {
    let mut ps = small_prime_factors(n, bound);
    ps.dedup();
    ps
}

#[derive(Clone, Debug)]
pub struct CompositionOptions {
    pub order_cap: BigUint,
    pub seed: u64,
}

impl Default for CompositionOptions {
    fn default() -> Self {
        CompositionOptions {
            order_cap: BigUint::from(DEFAULT_ORDER_CAP),
            seed: 0x5eed,
        }
    }
}

/// Composition factors of `g` with the default order cap.
pub fn composition_factors(g: &PermGroup) -> Result<Vec<CompositionFactor>, PermError> {
    composition_factors_with(g, &CompositionOptions::default())
}

pub fn composition_factors_with(
    g: &PermGroup,
    opts: &CompositionOptions,
) -> Result<Vec<CompositionFactor>, PermError> {
    if g.order() > &opts.order_cap {
        return Err(PermError::GroupTooLarge {
            order: g.order().to_string(),
            cap: opts.order_cap.to_string(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    factors_rec(g, &mut out, &mut rng)?;
    out.sort_by_key(CompositionFactor::sort_key);
    Ok(out)
}

fn moved_points(g: &PermGroup) -> Vec<usize> {
    (0..g.degree())
        .filter(|&p| g.generators().iter().any(|s| s.image(p) != p))
        .collect()
}

fn factors_rec(
    g: &PermGroup,
    out: &mut Vec<CompositionFactor>,
    rng: &mut ChaCha8Rng,
) -> Result<(), PermError> {
    if g.is_trivial() {
        return Ok(());
    }
    let moved = moved_points(g);
    if moved.len() < g.degree() {
        return factors_rec(&g.restrict_to(&moved)?, out, rng);
    }
    let n = g.degree();
    if g.is_abelian() {
        out.extend(small_prime_factors(g.order(), n).into_iter().map(CompositionFactor::cyclic));
        return Ok(());
    }
    let orbits = g.orbits();
    if orbits.len() > 1 {
        let orbit = &orbits.blocks()[0];
        let images: Vec<Permutation> = g
            .generators()
            .iter()
            .map(|s| s.restrict(orbit).expect("orbit is invariant"))
            .collect();
        let (image, kernel) = g.action_homomorphism(&images, orbit.len())?;
        factors_rec(&image, out, rng)?;
        return factors_rec(&kernel, out, rng);
    }
    if let Some(blocks) = nontrivial_blocks(g) {
        let (image, kernel) = g.induced_action(&blocks)?;
        factors_rec(&image, out, rng)?;
        return factors_rec(&kernel, out, rng);
    }
    let derived = g.derived_subgroup();
    if derived.order() < g.order() {
        let index = g.order() / derived.order();
        out.extend(small_prime_factors(&index, n).into_iter().map(CompositionFactor::cyclic));
        return factors_rec(&derived, out, rng);
    }
    if g.order() == &half_factorial(n) {
        out.push(CompositionFactor::alternating(n));
        return Ok(());
    }
    match proper_normal_subgroup(g, rng)? {
        NormalSearch::Found(normal) => {
            let quotient = coset_action(g, &normal)?;
            factors_rec(&normal, out, rng)?;
            factors_rec(&quotient, out, rng)
        }
        NormalSearch::Simple { element_orders } => {
            out.push(classify_simple(g, &element_orders));
            Ok(())
        }
    }
}

/// Some block system with blocks of size strictly between 1 and n, found by
/// merging `0` with each other point in turn and closing under the group.
pub fn nontrivial_blocks(g: &PermGroup) -> Option<Vec<Vec<usize>>> {
    let n = g.degree();
    if n < 4 {
        return None;
    }
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for a in 1..n {
        let mut uf: Vec<usize> = (0..n).collect();
        uf[a] = 0;
        let mut classes = n - 1;
        let mut queue = vec![(0usize, a)];
        while let Some((x, y)) = queue.pop() {
            for s in g.generators() {
                let (rx, ry) = (find(&mut uf, s.image(x)), find(&mut uf, s.image(y)));
                if rx != ry {
                    uf[rx.max(ry)] = rx.min(ry);
                    classes -= 1;
                    queue.push((rx, ry));
                }
            }
            if classes == 1 {
                break;
            }
        }
        if classes > 1 {
            let labels: Vec<usize> = (0..n).map(|x| find(&mut uf, x)).collect();
            return Some(crate::graph::Partition::from_labels(&labels).blocks().to_vec());
        }
    }
    None
}

enum NormalSearch {
    Found(PermGroup),
    Simple { element_orders: Vec<u64> },
}

fn proper_normal_subgroup(
    g: &PermGroup,
    rng: &mut ChaCha8Rng,
) -> Result<NormalSearch, PermError> {
    for _ in 0..RANDOM_NORMAL_TRIES {
        let x = g.random_element(rng);
        let o = x.order_u64();
        if o == 1 {
            continue;
        }
        let p = small_prime_factors(&BigUint::from(o), g.degree())[0];
        let y = x.pow(o / p);
        let normal = g.normal_closure(&[y])?;
        if normal.order() < g.order() {
            return Ok(NormalSearch::Found(normal));
        }
    }
    let order = match g.order_u64() {
        Some(o) if o <= SIMPLICITY_CAP => o,
        _ => {
            return Err(PermError::GroupTooLarge {
                order: g.order().to_string(),
                cap: SIMPLICITY_CAP.to_string(),
            })
        }
    };
    let mut seen = vec![false; order as usize];
    let mut element_orders = Vec::new();
    for r in 0..order {
        if seen[r as usize] {
            continue;
        }
        let rep = g.unrank(r);
        seen[r as usize] = true;
        let mut stack = vec![rep.clone()];
        while let Some(x) = stack.pop() {
            for s in g.generators() {
                let c = x.conjugate_by(s);
                let rc = g.rank(&c).expect("conjugate lies in the group") as usize;
                if !seen[rc] {
                    seen[rc] = true;
                    stack.push(c);
                }
            }
        }
        element_orders.push(rep.order_u64());
        if !rep.is_identity() {
            let normal = g.normal_closure(&[rep])?;
            if normal.order() < g.order() {
                return Ok(NormalSearch::Found(normal));
            }
        }
    }
    Ok(NormalSearch::Simple { element_orders })
}

fn classify_simple(g: &PermGroup, element_orders: &[u64]) -> CompositionFactor {
    let order = g.order().clone();
    if let Some(p) = order.to_u64().filter(|_| primes_of(&order, g.degree()).len() == 1) {
        return CompositionFactor::cyclic(p);
    }
    let mut m = 5;
    loop {
        let h = half_factorial(m);
        if h > order {
            break;
        }
        // A8 and PSL(3,4) share the order 20160; only A8 has elements of order 15.
        if h == order && (m != 8 || element_orders.contains(&15)) {
            return CompositionFactor::alternating(m);
        }
        m += 1;
    }
    CompositionFactor {
        kind: FactorKind::Other,
        order,
        witness: Some(Witness {
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }),
    }
}

/// Canonical element of the right coset `N x`: the element whose tuple of
/// images of the base of `N` is lexicographically smallest.
fn coset_key(normal: &PermGroup, x: &Permutation) -> Permutation {
    let mut x = x.clone();
    for (orbit, transversal) in normal.chain_levels() {
        let best = *orbit.iter().min_by_key(|&&p| x.image(p)).unwrap();
        x = transversal[best].as_ref().unwrap().compose(&x);
    }
    x
}

/// The quotient `G/N` as a permutation group on the right cosets of `N`.
pub fn coset_action(g: &PermGroup, normal: &PermGroup) -> Result<PermGroup, PermError> {
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let id = coset_key(normal, &g.identity());
    index.insert(id.clone(), 0);
    let mut reps = vec![id];
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); g.generators().len()];
    let mut k = 0;
    while k < reps.len() {
        let x = reps[k].clone();
        for (si, s) in g.generators().iter().enumerate() {
            let key = coset_key(normal, &x.compose(s));
            let next = reps.len();
            let j = *index.entry(key.clone()).or_insert(next);
            if j == next {
                if reps.len() >= COSET_CAP {
                    return Err(PermError::GroupTooLarge {
                        order: g.order().to_string(),
                        cap: format!("{COSET_CAP} cosets"),
                    });
                }
                reps.push(key);
            }
            images[si].push(j);
        }
        k += 1;
    }
    let gens = images
        .into_iter()
        .map(Permutation::new)
        .collect::<Result<Vec<_>, _>>()?;
    PermGroup::new(reps.len(), gens)
}

/// Smallest number of points on which the factor acts faithfully.
pub fn min_faithful_degree(f: &CompositionFactor) -> Result<usize, PermError> {
    match f.kind {
        FactorKind::Cyclic { p } => Ok(p as usize),
        FactorKind::Alternating { m } => Ok(m),
        FactorKind::Other => {
            let t = f.witness_group().ok_or(PermError::MissingWitness)?;
            let order = match t.order_u64() {
                Some(o) if o <= MIN_DEGREE_CAP => o,
                _ => {
                    return Err(PermError::GroupTooLarge {
                        order: t.order().to_string(),
                        cap: MIN_DEGREE_CAP.to_string(),
                    })
                }
            };
            for k in 5..t.degree() {
                if !(factorial(k) % order).is_zero() {
                    continue;
                }
                if embeds_in_symmetric(&t, k)? {
                    return Ok(k);
                }
            }
            Ok(t.degree())
        }
    }
}

/// Whether the simple group `t` has a faithful action on `k` points.
fn embeds_in_symmetric(t: &PermGroup, k: usize) -> Result<bool, PermError> {
    let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
    let (a, b) = generating_pair(t, &mut rng);
    let relators = short_relators(&a, &b);
    let oa = a.order_u64();
    let target = t.order().clone();
    let mut budget = EMBEDDING_NODE_BUDGET;
    for alpha in representatives_of_order(k, oa) {
        let alpha_inv = alpha.inverse();
        let mut beta = vec![usize::MAX; k];
        let mut beta_inv = vec![usize::MAX; k];
        let mut found = None;
        extend_beta(
            &alpha,
            &alpha_inv,
            &mut beta,
            &mut beta_inv,
            0,
            &relators,
            &mut budget,
            &mut |beta| {
                let alpha_beta = [alpha.clone(), Permutation::from_vec_unchecked(beta.to_vec())];
                let image = PermGroup::new(k, alpha_beta.to_vec()).expect("degree k");
                if image.order() != &target {
                    return false;
                }
                let n = t.degree();
                let diag: Vec<Permutation> = [&a, &b]
                    .iter()
                    .zip(&alpha_beta)
                    .map(|(x, y)| {
                        let mut v = x.images().to_vec();
                        v.extend(y.images().iter().map(|&i| i + n));
                        Permutation::from_vec_unchecked(v)
                    })
                    .collect();
                PermGroup::new(n + k, diag).expect("degree n+k").order() == &target
            },
            &mut found,
        );
        if found.is_some() {
            return Ok(true);
        }
        if budget == 0 {
            return Err(PermError::SearchBudgetExceeded);
        }
    }
    Ok(false)
}

fn generating_pair(t: &PermGroup, rng: &mut ChaCha8Rng) -> (Permutation, Permutation) {
    loop {
        let a = t.random_element(rng);
        let b = t.random_element(rng);
        if PermGroup::new(t.degree(), vec![a.clone(), b.clone()])
            .expect("same degree")
            .order()
            == t.order()
        {
            return (a, b);
        }
    }
}

/// Letters: 0 = a, 1 = A, 2 = b, 3 = B (capitals are inverses).
fn short_relators(a: &Permutation, b: &Permutation) -> Vec<Vec<u8>> {
    let letters = [a.clone(), a.inverse(), b.clone(), b.inverse()];
    let mut words: Vec<Vec<u8>> = vec![vec![0], vec![2]];
    let mut frontier = words.clone();
    for _ in 1..4 {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..4u8 {
                if l ^ 1 == *w.last().unwrap() {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut relators: Vec<Vec<u8>> = Vec::new();
    for w in words {
        let g = w
            .iter()
            .fold(Permutation::identity(a.degree()), |acc, &l| acc.compose(&letters[l as usize]));
        let o = g.order_u64() as usize;
        if w.len() * o <= 48 {
            relators.push(w.iter().copied().cycle().take(w.len() * o).collect());
        }
    }
    relators.sort_by_key(Vec::len);
    relators.dedup();
    relators
}

/// One permutation of degree `k` for every cycle type with the given order.
fn representatives_of_order(k: usize, order: u64) -> Vec<Permutation> {
    let mut out = Vec::new();
    fn rec(k: usize, max_part: usize, order: u64, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let used: usize = parts.iter().sum();
        if used == k {
            let l = parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)));
            if l == order {
                out.push(parts.clone());
            }
            return;
        }
        for p in (1..=max_part.min(k - used)).rev() {
            if order.is_multiple_of(p as u64) {
                parts.push(p);
                rec(k, p, order, parts, out);
                parts.pop();
            }
        }
    }
    let mut types = Vec::new();
    rec(k, k, order, &mut Vec::new(), &mut types);
    for parts in types {
        let mut images: Vec<usize> = (0..k).collect();
        let mut start = 0;
        for p in parts {
            for i in 0..p {
                images[start + i] = start + (i + 1) % p;
            }
            start += p;
        }
        out.push(Permutation::from_vec_unchecked(images));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_beta(
    alpha: &Permutation,
    alpha_inv: &Permutation,
    beta: &mut Vec<usize>,
    beta_inv: &mut Vec<usize>,
    i: usize,
    relators: &[Vec<u8>],
    budget: &mut u64,
    accept: &mut dyn FnMut(&[usize]) -> bool,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() || *budget == 0 {
        return;
    }
    *budget -= 1;
    let k = beta.len();
    if i == k {
        if accept(beta) {
            *found = Some(beta.clone());
        }
        return;
    }
    for j in 0..k {
        if beta_inv[j] != usize::MAX {
            continue;
        }
        beta[i] = j;
        beta_inv[j] = i;
        if relators_consistent(alpha, alpha_inv, beta, beta_inv, relators) {
            extend_beta(alpha, alpha_inv, beta, beta_inv, i + 1, relators, budget, accept, found);
        }
        beta[i] = usize::MAX;
        beta_inv[j] = usize::MAX;
        if found.is_some() {
            return;
        }
    }
}

fn relators_consistent(
    alpha: &Permutation,
    alpha_inv: &Permutation,
    beta: &[usize],
    beta_inv: &[usize],
    relators: &[Vec<u8>],
) -> bool {
    let k = beta.len();
    relators.iter().all(|r| {
        (0..k).all(|start| {
            let mut x = start;
            for &l in r {
                x = match l {
                    0 => alpha.image(x),
                    1 => alpha_inv.image(x),
                    2 => beta[x],
                    _ => beta_inv[x],
                };
                if x == usize::MAX {
                    return true;
                }
            }
            x == start
        })
    })
}

/// True iff every non-abelian composition factor of `g` acts faithfully on
/// at most `d` points.
pub fn is_gamma_d(g: &PermGroup, d: usize) -> Result<bool, PermError> {
    is_gamma_d_with(g, d, &CompositionOptions::default())
}

pub fn is_gamma_d_with(
    g: &PermGroup,
    d: usize,
    opts: &CompositionOptions,
) -> Result<bool, PermError> {
    Ok(min_gamma_degree_with(g, opts)? <= d.max(1))
}

/// Smallest `d >= 1` with `g` in Γ_d.
pub fn min_gamma_degree(g: &PermGroup) -> Result<usize, PermError> {
    min_gamma_degree_with(g, &CompositionOptions::default())
}

pub fn min_gamma_degree_with(g: &PermGroup, opts: &CompositionOptions) -> Result<usize, PermError> {
    if g.is_solvable() {
        return Ok(1);
    }
    factors_min_gamma_degree(&composition_factors_with(g, opts)?)
}

/// Smallest `d >= 1` such that all non-abelian factors listed act on `d` points.
pub fn factors_min_gamma_degree(factors: &[CompositionFactor]) -> Result<usize, PermError> {
    let mut d = 1;
    for f in factors.iter().filter(|f| !f.is_abelian()) {
        d = d.max(min_faithful_degree(f)?);
    }
    Ok(d)
}

/// True iff every prime dividing `|g|` exceeds `bound`.
pub fn prime_factors_exceed(g: &PermGroup, bound: u64) -> bool {
    primes_of(g.order(), g.degree()).iter().all(|&p| p > bound)
}

/// Distinct primes dividing `|g|`.
pub fn order_primes(g: &PermGroup) -> Vec<u64> {
    primes_of(g.order(), g.degree())
}

/// Transitive on `orbit` with `|g[orbit]| = |orbit|`.
pub fn is_regular_on(g: &PermGroup, orbit: &[usize]) -> Result<bool, PermError> {
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() || g.orbit(sorted[0])? != sorted {
        return Err(PermError::NotAnOrbit);
    }
    let induced = g.restrict_to(&sorted)?;
    Ok(induced.order() == &BigUint::from(sorted.len()))
}

/// Only the identity fixes a point, equivalently every orbit has length `|g|`.
pub fn is_semiregular(g: &PermGroup) -> bool {
    g.orbits()
        .blocks()
        .iter()
        .all(|o| &BigUint::from(o.len()) == g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::constructions::*;

    fn names(fs: &[CompositionFactor]) -> Vec<String> {
        fs.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn symmetric_four() {
        assert_eq!(
            names(&composition_factors(&symmetric(4)).unwrap()),
            ["C2", "C2", "C2", "C3"]
        );
    }

    #[test]
    fn cyclic_twelve() {
        assert_eq!(names(&composition_factors(&cyclic(12)).unwrap()), ["C2", "C2", "C3"]);
    }

    #[test]
    fn alternating_five() {
        assert_eq!(names(&composition_factors(&alternating(5)).unwrap()), ["A5"]);
        assert_eq!(names(&composition_factors(&symmetric(6)).unwrap()), ["C2", "A6"]);
    }

    #[test]
    fn cap_is_enforced() {
        let opts = CompositionOptions {
            order_cap: BigUint::from(100u32),
            ..Default::default()
        };
        assert!(matches!(
            composition_factors_with(&symmetric(5), &opts),
            Err(PermError::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn coset_quotient() {
        let s4 = symmetric(4);
        let v4 = s4.derived_subgroup().derived_subgroup();
        let q = coset_action(&s4, &v4).unwrap();
        assert_eq!((q.degree(), q.order_u64()), (6, Some(6)));
    }

    #[test]
    fn simple_group_classification() {
        // PSL(2,7) acting on the 7 points of the Fano plane.
        let a = Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let b = Permutation::from_cycles(7, &[&[1, 2, 4], &[3, 6, 5]]).unwrap();
        let c = Permutation::from_cycles(7, &[&[2, 4], &[5, 6]]).unwrap();
        let g = PermGroup::new(7, vec![a, b, c]).unwrap();
        assert_eq!(g.order_u64(), Some(168));
        let fs = composition_factors(&g).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].kind, FactorKind::Other);
        assert_eq!(min_faithful_degree(&fs[0]).unwrap(), 7);
    }

    #[test]
    fn gamma_membership() {
        assert!(is_gamma_d(&symmetric(4), 1).unwrap());
        assert!(!is_gamma_d(&alternating(5), 4).unwrap());
        assert!(is_gamma_d(&alternating(5), 5).unwrap());
        assert!(!is_gamma_d(&alternating(6), 5).unwrap());
    }

    #[test]
    fn regularity_predicates() {
        let c7 = cyclic(7);
        assert!(is_regular_on(&c7, &(0..7).collect::<Vec<_>>()).unwrap());
        assert!(c7.is_abelian());
        assert!(prime_factors_exceed(&c7, 6));
        let d4 = dihedral(4);
        assert!(!is_regular_on(&d4, &[0, 1, 2, 3]).unwrap());
        assert!(is_semiregular(&PermGroup::trivial(3)));
        assert_eq!(is_regular_on(&d4, &[0, 1]), Err(PermError::NotAnOrbit));
    }
}
