//! Numerical semigroups: cofinite subsets of the naturals containing 0 and
//! closed under addition, represented by their finite gap set.

use std::fmt;

use crate::error::{Error, Result};

/// Position of the Frobenius number relative to the multiplicity. The
/// Frobenius number of a semigroup with gaps is never a positive multiple of
/// the multiplicity, so the three classes are exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemigroupClass {
    /// f < 2m (includes the gap-free semigroup, where f = -1).
    FLt2M,
    /// 2m < f < 3m.
    FBetween2M3M,
    /// f > 3m.
    FGt3M,
}

/// A numerical semigroup. Membership bits are stored for `[0, frobenius]`;
/// every larger integer is a member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapSemigroup {
    words: Vec<u64>, // membership bits on [0, frob]; empty when frob < 0
    frob: i64,
    genus: u64,
    mult: u64,
}

/// Whether the complement of `gaps` (a finite set of positive integers) is
/// closed under addition, i.e. whether `gaps` is the gap set of a numerical
/// semigroup. A set containing 0 is rejected.
pub fn is_closed(gaps: &[u64]) -> bool {
    if gaps.is_empty() {
        return true;
    }
    if gaps.contains(&0) {
        return false;
    }
    let f = *gaps.iter().max().expect("non-empty");
    let mut members = MemberBits::all_ones(f);
    for &g in gaps {
        members.clear(g);
    }
    members_closed(&members, f)
}

/// Closure test on an explicit membership bit vector over [0, f]: every sum
/// of two nonzero members that lands in [0, f] must be a member (sums beyond
/// f are members automatically).
fn members_closed(members: &MemberBits, f: u64) -> bool {
    for a in 1..=f {
        if !members.test(a) {
            continue;
        }
        let mut b = a;
        while a + b <= f {
            if members.test(b) && !members.test(a + b) {
                return false;
            }
            b += 1;
        }
    }
    true
}

impl GapSemigroup {
    /// The gap-free semigroup (all naturals); genus 0, Frobenius -1.
    pub fn nat0() -> Self {
        GapSemigroup {
            words: Vec::new(),
            frob: -1,
            genus: 0,
            mult: 1,
        }
    }

    /// Build from a gap set, validating that the complement is closed under
    /// addition. Duplicates are tolerated; 0 is rejected.
    pub fn from_gaps<I: IntoIterator<Item = u64>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.is_empty() {
            return Ok(Self::nat0());
        }
        if gaps[0] == 0 {
            return Err(Error::InvalidGapSet("0 is always a member".into()));
        }
        let f = *gaps.last().expect("non-empty");
        let mut members = MemberBits::all_ones(f);
        for &g in &gaps {
            members.clear(g);
        }
        if !members_closed(&members, f) {
            return Err(Error::InvalidGapSet(
                "complement is not closed under addition".into(),
            ));
        }
        Ok(Self::from_member_bits(members, f, gaps.len() as u64))
    }

    /// Internal constructor from membership bits on [0, f]. The caller
    /// guarantees closure; `genus` is the number of zero bits in [1, f].
    pub(crate) fn from_member_bits(members: MemberBits, f: u64, genus: u64) -> Self {
        debug_assert!(!members.test(f), "the Frobenius number must be a gap");
        let mult = members.smallest_nonzero_member().unwrap_or(f + 1);
        GapSemigroup {
            words: members.words,
            frob: f as i64,
            genus,
            mult,
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.mult
    }

    /// Largest gap, or -1 for the gap-free semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frob
    }

    /// Membership test.
    pub fn is_member(&self, x: u64) -> bool {
        if x as i64 > self.frob {
            return true;
        }
        self.words[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    /// Which of the three Frobenius classes this semigroup falls in.
    pub fn classify(&self) -> SemigroupClass {
        let m = self.mult as i64;
        if self.frob < 2 * m {
            SemigroupClass::FLt2M
        } else if self.frob < 3 * m {
            // f = 2m is impossible: it would be a sum of two members.
            debug_assert_ne!(self.frob, 2 * m);
            SemigroupClass::FBetween2M3M
        } else {
            debug_assert_ne!(self.frob, 3 * m);
            SemigroupClass::FGt3M
        }
    }

    /// The gaps in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.genus as usize);
        for x in 1..=self.frob.max(0) as u64 {
            if !self.is_member(x) {
                out.push(x);
            }
        }
        out
    }

    /// The members up to and including `hi`, in increasing order.
    pub fn members_up_to(&self, hi: u64) -> Vec<u64> {
        (0..=hi).filter(|&x| self.is_member(x)).collect()
    }

    /// Comma-separated members through the Frobenius number, then the first
    /// tail member and an ellipsis, e.g. `0,5,7,10,12,14...`.
    pub fn members_string(&self) -> String {
        let tail_start = (self.frob + 1) as u64;
        let parts: Vec<String> = self
            .members_up_to(tail_start)
            .into_iter()
            .map(|x| x.to_string())
            .collect();
        format!("{}...", parts.join(","))
    }

    /// Comma-separated gap list, empty for the gap-free semigroup.
    pub fn gaps_string(&self) -> String {
        self.gaps()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for GapSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.members_string())
    }
}

impl fmt::Debug for GapSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GapSemigroup(gaps: {})", self.gaps_string())
    }
}

/// Growable membership bit vector over [0, f], canonical: bits above f in
/// the last word are zero, so derived Eq/Hash on the words are exact.
#[derive(Clone)]
pub(crate) struct MemberBits {
    pub(crate) words: Vec<u64>,
}

impl MemberBits {
    /// All of [0, f] marked as members.
    pub(crate) fn all_ones(f: u64) -> Self {
        let n = (f + 1) as usize;
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        let spare = words.len() * 64 - n;
        if spare > 0 {
            *words.last_mut().expect("non-empty") >>= spare;
        }
        MemberBits { words }
    }

    pub(crate) fn zeros(f: u64) -> Self {
        let n = (f + 1) as usize;
        MemberBits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub(crate) fn set(&mut self, i: u64) {
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    pub(crate) fn clear(&mut self, i: u64) {
        self.words[(i / 64) as usize] &= !(1 << (i % 64));
    }

    pub(crate) fn test(&self, i: u64) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn smallest_nonzero_member(&self) -> Option<u64> {
        for (i, &w) in self.words.iter().enumerate() {
            let w = if i == 0 { w & !1 } else { w };
            if w != 0 {
                return Some(i as u64 * 64 + w.trailing_zeros() as u64);
            }
        }
        None
    }
}
