//! Structure trees certifying membership in Θ_d.
//!
//! Θ_d contains the trivial group and is closed under direct products,
//! wreath products with symmetric top groups, and extensions by Γ_d groups.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::composition::{factors_min_gamma_degree, min_gamma_degree_with, CompositionOptions};
use super::{CompositionFactor, PermError, PermGroup, Permutation};

/// Serializable description of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub degree: usize,
    #[serde(with = "crate::util::decimal")]
    pub order: BigUint,
    pub generators: Vec<Permutation>,
}

impl GroupData {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupData {
            degree: g.degree(),
            order: g.order().clone(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup, PermError> {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafTag {
    Abelian,
    GammaPart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum StructureTree {
    Trivial,
    Leaf {
        tag: LeafTag,
        group: GroupData,
    },
    Direct {
        #[serde(with = "crate::util::decimal")]
        order: BigUint,
        children: Vec<StructureTree>,
    },
    WreathSym {
        #[serde(with = "crate::util::decimal")]
        order: BigUint,
        t: usize,
        child: Box<StructureTree>,
    },
    ExtensionBy {
        #[serde(with = "crate::util::decimal")]
        order: BigUint,
        kernel: Box<StructureTree>,
        quotient: GroupData,
        /// Absent when the quotient exceeded the composition-factor cap.
        quotient_factors: Option<Vec<CompositionFactor>>,
    },
}

fn factorial(t: usize) -> BigUint {
    (1..=t).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

impl StructureTree {
    pub fn leaf(group: &PermGroup) -> StructureTree {
        if group.is_trivial() {
            return StructureTree::Trivial;
        }
        let tag = if group.is_abelian() {
            LeafTag::Abelian
        } else {
            LeafTag::GammaPart
        };
        StructureTree::Leaf {
            tag,
            group: GroupData::from_group(group),
        }
    }

    pub fn direct(children: Vec<StructureTree>) -> StructureTree {
        let order = children.iter().map(StructureTree::declared_order).product();
        StructureTree::Direct { order, children }
    }

    pub fn wreath_sym(child: StructureTree, t: usize) -> StructureTree {
        let order = child.declared_order().pow(t as u32) * factorial(t);
        StructureTree::WreathSym {
            order,
            t,
            child: Box::new(child),
        }
    }

    pub fn extension_by(
        kernel: StructureTree,
        quotient: &PermGroup,
        quotient_factors: Option<Vec<CompositionFactor>>,
    ) -> StructureTree {
        StructureTree::ExtensionBy {
            order: kernel.declared_order() * quotient.order(),
            kernel: Box::new(kernel),
            quotient: GroupData::from_group(quotient),
            quotient_factors,
        }
    }

    /// The order recorded at this node.
    pub fn declared_order(&self) -> BigUint {
        match self {
            StructureTree::Trivial => BigUint::one(),
            StructureTree::Leaf { group, .. } => group.order.clone(),
            StructureTree::Direct { order, .. }
            | StructureTree::WreathSym { order, .. }
            | StructureTree::ExtensionBy { order, .. } => order.clone(),
        }
    }

    /// Order computed bottom-up from the node formulas.
    pub fn tree_order(&self) -> BigUint {
        match self {
            StructureTree::Trivial => BigUint::one(),
            StructureTree::Leaf { group, .. } => group.order.clone(),
            StructureTree::Direct { children, .. } => {
                children.iter().map(StructureTree::tree_order).product()
            }
            StructureTree::WreathSym { t, child, .. } => {
                child.tree_order().pow(*t as u32) * factorial(*t)
            }
            StructureTree::ExtensionBy {
                kernel, quotient, ..
            } => kernel.tree_order() * &quotient.order,
        }
    }

    /// Checks every declared order against its children and every stored
    /// group order against a fresh stabilizer chain.
    pub fn check_consistency(&self) -> Result<(), PermError> {
        let bad = |what: &str| Err(PermError::InconsistentTree(what.to_string()));
        match self {
            StructureTree::Trivial => Ok(()),
            StructureTree::Leaf { tag, group } => {
                let g = group.to_group()?;
                if g.order() != &group.order {
                    return bad("leaf order differs from its group");
                }
                if (*tag == LeafTag::Abelian) != g.is_abelian() {
                    return bad("leaf tag does not match the group");
                }
                Ok(())
            }
            StructureTree::Direct { order, children } => {
                children.iter().try_for_each(StructureTree::check_consistency)?;
                let p: BigUint = children.iter().map(StructureTree::declared_order).product();
                if &p != order {
                    return bad("direct product order");
                }
                Ok(())
            }
            StructureTree::WreathSym { order, t, child } => {
                child.check_consistency()?;
                if *t == 0 || &(child.declared_order().pow(*t as u32) * factorial(*t)) != order {
                    return bad("wreath product order");
                }
                Ok(())
            }
            StructureTree::ExtensionBy {
                order,
                kernel,
                quotient,
                ..
            } => {
                kernel.check_consistency()?;
                if quotient.to_group()?.order() != &quotient.order {
                    return bad("quotient order differs from its group");
                }
                if &(kernel.declared_order() * &quotient.order) != order {
                    return bad("extension order");
                }
                Ok(())
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + match self {
            StructureTree::Trivial | StructureTree::Leaf { .. } => 0,
            StructureTree::Direct { children, .. } => children.iter().map(StructureTree::size).sum(),
            StructureTree::WreathSym { child, .. } => child.size(),
            StructureTree::ExtensionBy { kernel, .. } => kernel.size(),
        }
    }
}

/// Whether every constructor in `tree` is legal for Θ_d.
pub fn certify_theta(tree: &StructureTree, d: usize) -> Result<bool, PermError> {
    certify_theta_with(tree, d, &CompositionOptions::default())
}

pub fn certify_theta_with(
    tree: &StructureTree,
    d: usize,
    opts: &CompositionOptions,
) -> Result<bool, PermError> {
    tree.check_consistency()?;
    Ok(min_theta_degree_with(tree, opts)? <= d.max(1))
}

/// Smallest `d >= 1` for which [`certify_theta`] succeeds.
pub fn min_theta_degree(tree: &StructureTree) -> Result<usize, PermError> {
    min_theta_degree_with(tree, &CompositionOptions::default())
}

fn min_theta_degree_with(tree: &StructureTree, opts: &CompositionOptions) -> Result<usize, PermError> {
    match tree {
        StructureTree::Trivial => Ok(1),
        StructureTree::Leaf { tag: LeafTag::Abelian, .. } => Ok(1),
        StructureTree::Leaf { group, .. } => min_gamma_degree_with(&group.to_group()?, opts),
        StructureTree::Direct { children, .. } => children
            .iter()
            .try_fold(1, |d, c| Ok(d.max(min_theta_degree_with(c, opts)?))),
        StructureTree::WreathSym { child, .. } => min_theta_degree_with(child, opts),
        StructureTree::ExtensionBy {
            kernel,
            quotient,
            quotient_factors,
            ..
        } => {
            let q = match quotient_factors {
                Some(fs) => factors_min_gamma_degree(fs)?,
                None => min_gamma_degree_with(&quotient.to_group()?, opts)?,
            };
            Ok(q.max(min_theta_degree_with(kernel, opts)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::constructions::{alternating, cyclic};

    #[test]
    fn direct_of_cyclic_leaves() {
        let c5 = StructureTree::leaf(&cyclic(5));
        let t = StructureTree::direct(vec![c5.clone(), c5]);
        assert_eq!(t.tree_order(), BigUint::from(25u32));
        assert!(certify_theta(&t, 1).unwrap());
    }

    #[test]
    fn wreath_of_c2() {
        let t = StructureTree::wreath_sym(StructureTree::leaf(&cyclic(2)), 3);
        assert_eq!(t.tree_order(), BigUint::from(48u32));
        assert!(certify_theta(&t, 1).unwrap());
    }

    #[test]
    fn alternating_leaf_needs_six_points() {
        let t = StructureTree::leaf(&alternating(6));
        assert!(!certify_theta(&t, 5).unwrap());
        assert!(certify_theta(&t, 6).unwrap());
        assert_eq!(min_theta_degree(&t).unwrap(), 6);
    }

    #[test]
    fn inconsistent_order_is_rejected() {
        let t = StructureTree::Direct {
            order: BigUint::from(7u32),
            children: vec![StructureTree::leaf(&cyclic(5))],
        };
        assert!(matches!(certify_theta(&t, 3), Err(PermError::InconsistentTree(_))));
    }

    #[test]
    fn trivial_tree() {
        assert_eq!(StructureTree::Trivial.tree_order(), BigUint::one());
    }
}
