/// Resource ceilings for the operations whose cost grows exponentially.
///
/// The defaults keep every guarded call below roughly 10^8 enumerated
/// objects: prefix-set enumeration costs ~3^(k/2) per k and the semigroup
/// tree holds ~phi^g nodes up to genus g. Callers that accept longer runs
/// pass [`Limits::lifted`], which moves each ceiling to its structural
/// maximum (bit-width of the packed representations).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest genus accepted by the exact/upper type-sum formulas.
    pub formula_genus: u32,
    /// Largest k accepted by exponent-histogram enumeration.
    pub histogram_k: u32,
    /// Largest genus accepted by full semigroup-tree enumeration.
    pub tree_genus: u32,
}

/// Prefix sets are stored in one 64-bit word, so k never exceeds 63.
pub const MAX_K: u32 = 63;
/// Tree nodes store membership for [0, 256); children stay in range while
/// the Frobenius number is at most 2g + 1, hence genus at most 127.
pub const MAX_TREE_GENUS: u32 = 127;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            formula_genus: 36,
            histogram_k: 48,
            tree_genus: 32,
        }
    }
}

impl Limits {
    /// Ceilings at the structural maxima of the packed representations.
    pub fn lifted() -> Self {
        Limits {
            formula_genus: u32::MAX,
            histogram_k: MAX_K,
            tree_genus: MAX_TREE_GENUS,
        }
    }
}
