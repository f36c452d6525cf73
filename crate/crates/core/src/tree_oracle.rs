//! Brute-force enumeration of all numerical semigroups by genus, used as an
//! independent oracle for the counting formulas.
//!
//! The semigroups form a tree rooted at the gap-free semigroup: the children
//! of S are S minus one minimal generator larger than the Frobenius number,
//! so each child has genus one higher and every semigroup of genus g sits at
//! depth g. Candidate generators beyond f live in (f, f + m] (anything past
//! f + m is m plus a member), and a child's Frobenius number never exceeds
//! twice its genus minus one, which caps every position at 2 * 127 - 1 and
//! lets a node pack its membership bits into four words.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::census::{phi_ratio, rational_ratio, CensusRow};
use crate::construction::type_of;
use crate::error::{Error, Result};
use crate::limits::{Limits, MAX_TREE_GENUS};
use crate::semigroup::{GapSemigroup, MemberBits, SemigroupClass};
use crate::type_space::TypeDescriptor;

/// Genus at which the walk switches from one stack to one task per subtree.
const FRONTIER_GENUS: u32 = 16;

/// One semigroup in the enumeration tree: membership bits over [0, 255]
/// (positions past the Frobenius number all set) plus cached statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeNode {
    words: [u64; 4],
    genus: u32,
    mult: u32,
    frob: i32,
}

impl TreeNode {
    /// The gap-free semigroup, root of the tree.
    fn root() -> Self {
        TreeNode {
            words: [u64::MAX; 4],
            genus: 0,
            mult: 1,
            frob: -1,
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u32 {
        self.mult
    }

    /// Largest gap, or -1 at the root.
    pub fn frobenius(&self) -> i32 {
        self.frob
    }

    fn is_member(&self, x: u32) -> bool {
        self.words[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    /// Frobenius class from the cached statistics.
    pub fn classify(&self) -> SemigroupClass {
        let (f, m) = (self.frob as i64, self.mult as i64);
        if f < 2 * m {
            SemigroupClass::FLt2M
        } else if f < 3 * m {
            SemigroupClass::FBetween2M3M
        } else {
            SemigroupClass::FGt3M
        }
    }

    /// Whether x > f is a minimal generator: not the sum of two nonzero
    /// members, tested against y in [m, x/2].
    fn is_minimal_generator(&self, x: u32) -> bool {
        let mut y = self.mult;
        while 2 * y <= x {
            if self.is_member(y) && self.is_member(x - y) {
                return false;
            }
            y += 1;
        }
        true
    }

    /// The minimal generators beyond the Frobenius number, i.e. the child
    /// edges of this node.
    fn child_generators(&self) -> Vec<u32> {
        if self.frob < 0 {
            // The gap-free semigroup: its only generator is 1.
            return vec![1];
        }
        let f = self.frob as u32;
        let hi = (f + self.mult).min(2 * self.genus + 1);
        (f + 1..=hi)
            .filter(|&x| self.is_minimal_generator(x))
            .collect()
    }

    /// Remove the generator x > f, producing the child with Frobenius x.
    fn child(&self, x: u32) -> TreeNode {
        let mut words = self.words;
        words[(x / 64) as usize] &= !(1u64 << (x % 64));
        TreeNode {
            words,
            genus: self.genus + 1,
            // Removing the multiplicity only happens in a gap-free tail,
            // where the next member is x + 1.
            mult: if x == self.mult { x + 1 } else { self.mult },
            frob: x as i32,
        }
    }

    /// Convert to the public semigroup representation.
    pub fn to_semigroup(&self) -> GapSemigroup {
        if self.frob < 0 {
            return GapSemigroup::nat0();
        }
        let f = self.frob as u64;
        let n_words = ((f + 1) as usize).div_ceil(64);
        let mut words = self.words[..n_words].to_vec();
        let spare = n_words * 64 - (f + 1) as usize;
        if spare > 0 {
            *words.last_mut().expect("non-empty") &= u64::MAX >> spare;
        }
        GapSemigroup::from_member_bits(MemberBits { words }, f, self.genus as u64)
    }
}

fn guard_tree(g_max: u32, limits: &Limits) -> Result<()> {
    if g_max > limits.tree_genus.min(MAX_TREE_GENUS) {
        return Err(Error::EnumerationTooLarge {
            what: "tree genus",
            requested: g_max as u64,
            ceiling: limits.tree_genus.min(MAX_TREE_GENUS) as u64,
        });
    }
    Ok(())
}

/// Walk every semigroup of genus <= g_max, in a deterministic depth-first
/// order, calling the visitor on each node.
pub fn visit<F: FnMut(&TreeNode)>(g_max: u32, limits: &Limits, mut f: F) -> Result<()> {
    guard_tree(g_max, limits)?;
    let mut stack = vec![TreeNode::root()];
    while let Some(node) = stack.pop() {
        f(&node);
        if node.genus < g_max {
            for x in node.child_generators() {
                stack.push(node.child(x));
            }
        }
    }
    Ok(())
}

/// All semigroups of genus <= g_max, grouped by genus.
pub fn enumerate_by_genus(g_max: u32, limits: &Limits) -> Result<Vec<Vec<GapSemigroup>>> {
    let mut buckets: Vec<Vec<GapSemigroup>> = vec![Vec::new(); g_max as usize + 1];
    visit(g_max, limits, |node| {
        buckets[node.genus as usize].push(node.to_semigroup());
    })?;
    Ok(buckets)
}

/// Per-genus totals of the tree walk, split by Frobenius class.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ClassTotals {
    pub all: u64,
    pub f_lt_2m: u64,
    pub f_between_2m_3m: u64,
    pub f_gt_3m: u64,
}

impl ClassTotals {
    fn record(&mut self, class: SemigroupClass) {
        self.all += 1;
        match class {
            SemigroupClass::FLt2M => self.f_lt_2m += 1,
            SemigroupClass::FBetween2M3M => self.f_between_2m_3m += 1,
            SemigroupClass::FGt3M => self.f_gt_3m += 1,
        }
    }

    fn merge(&mut self, other: &ClassTotals) {
        self.all += other.all;
        self.f_lt_2m += other.f_lt_2m;
        self.f_between_2m_3m += other.f_between_2m_3m;
        self.f_gt_3m += other.f_gt_3m;
    }

    /// Semigroups with f < 3m: the two classes the counting formulas cover.
    pub fn f_lt_3m(&self) -> u64 {
        self.f_lt_2m + self.f_between_2m_3m
    }
}

/// Count all semigroups of each genus 0..=g_max by Frobenius class. Subtrees
/// below `FRONTIER_GENUS` are walked in parallel; totals are exact either way.
pub fn class_totals(g_max: u32, limits: &Limits) -> Result<Vec<ClassTotals>> {
    guard_tree(g_max, limits)?;
    let fg = g_max.min(FRONTIER_GENUS);
    let mut totals = vec![ClassTotals::default(); g_max as usize + 1];
    let mut frontier = Vec::new();
    let mut stack = vec![TreeNode::root()];
    while let Some(node) = stack.pop() {
        if node.genus == fg {
            frontier.push(node);
            continue;
        }
        totals[node.genus as usize].record(node.classify());
        for x in node.child_generators() {
            stack.push(node.child(x));
        }
    }
    let tail = frontier
        .par_iter()
        .map(|node| subtree_totals(node, g_max))
        .reduce(
            || vec![ClassTotals::default(); (g_max - fg) as usize + 1],
            |mut acc, sub| {
                for (a, s) in acc.iter_mut().zip(&sub) {
                    a.merge(s);
                }
                acc
            },
        );
    for (g, sub) in (fg..=g_max).zip(&tail) {
        totals[g as usize].merge(sub);
    }
    Ok(totals)
}

/// Tally one subtree sequentially, indexed from the subtree root's genus.
fn subtree_totals(root: &TreeNode, g_max: u32) -> Vec<ClassTotals> {
    let base = root.genus;
    let mut totals = vec![ClassTotals::default(); (g_max - base) as usize + 1];
    let mut stack = vec![*root];
    while let Some(node) = stack.pop() {
        totals[(node.genus - base) as usize].record(node.classify());
        if node.genus < g_max {
            for x in node.child_generators() {
                stack.push(node.child(x));
            }
        }
    }
    totals
}

/// Census rows g = 1..=g_max computed entirely from the tree walk: n_g is
/// the full count, t_g the f < 3m part, with ratios to `places` decimals.
pub fn census_table(g_max: u32, places: u32, limits: &Limits) -> Result<Vec<CensusRow>> {
    let totals = class_totals(g_max, limits)?;
    Ok((1..=g_max as u64)
        .map(|g| {
            let n = BigUint::from(totals[g as usize].all);
            let t = BigUint::from(totals[g as usize].f_lt_3m());
            CensusRow {
                genus: g,
                n_phi: Some(phi_ratio(&n, g, places)),
                t_phi: phi_ratio(&t, g, places),
                t_over_n: Some(rational_ratio(&t, &n, places)),
                n: Some(n),
                t,
            }
        })
        .collect())
}

/// Genus-g census split one level finer: the middle Frobenius class is
/// bucketed by type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusBuckets {
    pub genus: u32,
    pub f_lt_2m: u64,
    pub f_gt_3m: u64,
    pub middle_by_type: BTreeMap<TypeDescriptor, u64>,
}

impl GenusBuckets {
    /// Total with 2m < f < 3m.
    pub fn middle_total(&self) -> u64 {
        self.middle_by_type.values().sum()
    }

    /// All genus-g semigroups.
    pub fn total(&self) -> u64 {
        self.f_lt_2m + self.f_gt_3m + self.middle_total()
    }
}

/// Walk the tree and bucket the semigroups of genus exactly g.
pub fn bucket_counts(g: u32, limits: &Limits) -> Result<GenusBuckets> {
    let mut buckets = GenusBuckets {
        genus: g,
        f_lt_2m: 0,
        f_gt_3m: 0,
        middle_by_type: BTreeMap::new(),
    };
    visit(g, limits, |node| {
        if node.genus != g {
            return;
        }
        match node.classify() {
            SemigroupClass::FLt2M => buckets.f_lt_2m += 1,
            SemigroupClass::FGt3M => buckets.f_gt_3m += 1,
            SemigroupClass::FBetween2M3M => {
                let t = type_of(&node.to_semigroup()).expect("class was checked");
                *buckets.middle_by_type.entry(t).or_insert(0) += 1;
            }
        }
    })?;
    Ok(buckets)
}
