//! Standard permutation groups and product constructions.

use super::{PermGroup, Permutation};

fn build(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).expect("generators share the degree")
}

/// Cyclic group generated by the rotation `i -> i+1 mod n`.
pub fn cyclic(n: usize) -> PermGroup {
    let rot = Permutation::from_vec_unchecked((0..n).map(|i| (i + 1) % n).collect());
    build(n, vec![rot])
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let rot = Permutation::from_vec_unchecked((0..n).map(|i| (i + 1) % n).collect());
    let refl = Permutation::from_vec_unchecked((0..n).map(|i| (n - i) % n).collect());
    build(n, vec![rot, refl])
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let rot = Permutation::from_vec_unchecked((0..n).map(|i| (i + 1) % n).collect());
    let swap = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
    build(n, vec![rot, swap])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
        .collect();
    build(n, gens)
}

/// Disjoint-union action of `a x b` on `deg(a) + deg(b)` points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, n)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), n)));
    build(n, gens)
}

/// Imprimitive action of `a wr S_t` on `deg(a) * t` points; copy `i`
/// occupies `i*deg(a) .. (i+1)*deg(a)`.
pub fn wreath_with_sym(a: &PermGroup, t: usize) -> PermGroup {
    let d = a.degree();
    let n = d * t;
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, n)).collect();
    if t >= 2 {
        let block = |perm: &dyn Fn(usize) -> usize| {
            Permutation::from_vec_unchecked((0..n).map(|x| perm(x / d) * d + x % d).collect())
        };
        gens.push(block(&|i| (i + 1) % t));
        gens.push(block(&|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }));
    }
    build(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn product_orders() {
        let p = direct_product(&cyclic(2), &cyclic(3));
        assert_eq!(p.order_u64(), Some(6));
        assert!(p.is_abelian());
        let w = wreath_with_sym(&cyclic(2), 3);
        assert_eq!((w.degree(), w.order_u64()), (6, Some(48)));
        let a = dihedral(5);
        assert_eq!(wreath_with_sym(&a, 1), a);
    }

    #[test]
    fn large_wreath_order_is_exact() {
        let w = wreath_with_sym(&symmetric(4), 6);
        let expected = BigUint::from(24u32).pow(6) * BigUint::from(720u32);
        assert_eq!(w.order(), &expected);
    }

    #[test]
    fn classical_orders() {
        assert_eq!(alternating(5).order_u64(), Some(60));
        assert_eq!(dihedral(6).order_u64(), Some(12));
        assert_eq!(cyclic(1).order_u64(), Some(1));
    }
}
