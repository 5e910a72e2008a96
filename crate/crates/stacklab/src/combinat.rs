//! Direct enumeration of unimodal sequences, partitions, and Frobenius
//! symbols, with the size-preserving bijections connecting them.
//!
//! A unimodal sequence is stored in canonical form: a weakly increasing
//! ascent `a`, a summit `c`, and a weakly decreasing descent `b`, where the
//! summit sits at the last occurrence of the maximum (so every descent part
//! is strictly below `c`, while ascent parts may equal it).  Enumeration is
//! exhaustive and exact; it exists to cross-check the generating-function
//! routes, so it refuses sizes above [`ENUMERATION_BOUND`] unless forced.

use std::fmt;

use crate::{Error, Result};

/// Families of unimodal sequences distinguished by their flank conditions.
///
/// With ascent `a`, summit `c`, descent `b` in canonical form:
/// * `Stack`: no further condition;
/// * `Receding`: both flanks contain every value `1 ..= c-1`;
/// * `Shifted`: the ascent contains every value `1 ..= c-1`;
/// * `Strict`: both flanks are strictly monotone and stay below `c`;
/// * `SemiStrict`: the ascent is strictly increasing below `c`, the descent
///   weakly decreasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StackVariant {
    Stack,
    Receding,
    Shifted,
    Strict,
    SemiStrict,
}

/// Default ceiling on exhaustive enumeration size.
pub const ENUMERATION_BOUND: usize = 40;

/// Canonical unimodal sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodalSequence {
    a: Vec<usize>,
    c: usize,
    b: Vec<usize>,
}

impl UnimodalSequence {
    /// Builds a sequence after checking the canonical shape: `a` weakly
    /// increasing with parts at most `c`, `b` weakly decreasing with parts
    /// strictly below `c`, and `c >= 1`.
    pub fn new(a: Vec<usize>, c: usize, b: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidObject {
            kind: "unimodal sequence",
            reason,
        };
        if c == 0 {
            return Err(invalid("summit must be positive".into()));
        }
        if a.first().is_some_and(|&p| p == 0) || !a.windows(2).all(|w| w[0] <= w[1]) {
            return Err(invalid(format!("ascent {a:?} must be weakly increasing and positive")));
        }
        if a.last().is_some_and(|&p| p > c) {
            return Err(invalid(format!("ascent part exceeds summit {c}")));
        }
        if !b.windows(2).all(|w| w[0] >= w[1]) || b.last().is_some_and(|&p| p == 0) {
            return Err(invalid(format!("descent {b:?} must be weakly decreasing and positive")));
        }
        if b.first().is_some_and(|&p| p >= c) {
            return Err(invalid(format!(
                "descent part reaches the summit {c}; the summit must be the last maximum"
            )));
        }
        Ok(UnimodalSequence { a, c, b })
    }

    fn new_unchecked(a: Vec<usize>, c: usize, b: Vec<usize>) -> Self {
        let s = UnimodalSequence { a, c, b };
        debug_assert!(
            UnimodalSequence::new(s.a.clone(), s.c, s.b.clone()).is_ok(),
            "enumeration produced a non-canonical sequence"
        );
        s
    }

    pub fn ascent(&self) -> &[usize] {
        &self.a
    }

    pub fn summit(&self) -> usize {
        self.c
    }

    pub fn descent(&self) -> &[usize] {
        &self.b
    }

    /// Sum of all parts.
    pub fn size(&self) -> usize {
        self.a.iter().sum::<usize>() + self.c + self.b.iter().sum::<usize>()
    }

    /// All parts in display order: ascent, summit, descent.
    pub fn parts(&self) -> Vec<usize> {
        let mut v = self.a.clone();
        v.push(self.c);
        v.extend(&self.b);
        v
    }

    /// How many parts equal the maximum.  The descent never contributes in
    /// canonical form.
    pub fn max_multiplicity(&self) -> usize {
        self.a.iter().filter(|&&p| p == self.c).count() + 1
    }

    /// Whether the sequence satisfies the flank conditions of `variant`.
    pub fn satisfies(&self, variant: StackVariant) -> bool {
        let strict_ascent =
            || self.a.windows(2).all(|w| w[0] < w[1]) && self.a.last().is_none_or(|&p| p < self.c);
        match variant {
            StackVariant::Stack => true,
            StackVariant::Receding => {
                contains_all_below(&self.a, self.c) && contains_all_below(&self.b, self.c)
            }
            StackVariant::Shifted => contains_all_below(&self.a, self.c),
            StackVariant::Strict => strict_ascent() && self.b.windows(2).all(|w| w[0] > w[1]),
            StackVariant::SemiStrict => strict_ascent(),
        }
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, paren_at: usize) -> fmt::Result {
        let parts = self.parts();
        let wide = parts.iter().any(|&p| p > 9);
        for (i, p) in parts.iter().enumerate() {
            if wide && i > 0 {
                write!(f, " ")?;
            }
            if i == paren_at {
                write!(f, "({p})")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Renders the parts with the summit parenthesized, e.g. `1123(3)221`.
impl fmt::Display for UnimodalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, self.a.len())
    }
}

/// A unimodal sequence together with a choice of which maximal part is the
/// summit; `mark` is the zero-based index among the occurrences of the
/// maximum, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedStack {
    pub seq: UnimodalSequence,
    pub mark: usize,
}

impl fmt::Display for MarkedStack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.seq.parts();
        let max = self.seq.summit();
        let pos = parts
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == max)
            .map(|(i, _)| i)
            .nth(self.mark)
            .expect("mark within multiplicity");
        self.seq.render(f, pos)
    }
}

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition after checking the parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p > 0);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidObject {
                kind: "partition",
                reason: format!("parts {parts:?} must be positive and weakly decreasing"),
            })
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Side length of the largest square of cells in the diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// True when the `k`-th part equals `k`, for `k` the Durfee side; the
    /// diagram then has a corner cell sitting exactly on the diagonal.
    pub fn kth_part_is_k(&self) -> bool {
        let k = self.durfee();
        k >= 1 && self.parts[k - 1] == k
    }

    /// The Frobenius symbol: arm lengths and leg lengths along the diagonal.
    ///
    /// Errors on the empty partition, which has no diagonal cell.
    pub fn to_frobenius(&self) -> Result<FrobeniusSymbol> {
        let k = self.durfee();
        if k == 0 {
            return Err(Error::InvalidObject {
                kind: "partition",
                reason: "the empty partition has no Frobenius symbol".into(),
            });
        }
        let alpha: Vec<usize> = (0..k).map(|i| self.parts[i] - (i + 1)).collect();
        let beta: Vec<usize> = (0..k).map(|j| conjugate_part(&self.parts, j + 1) - (j + 1)).collect();
        FrobeniusSymbol::new(alpha, beta)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", strs.join("+"))
    }
}

/// Number of parts of `parts` that are at least `col`.
fn conjugate_part(parts: &[usize], col: usize) -> usize {
    parts.iter().take_while(|&&p| p >= col).count()
}

/// Frobenius symbol: two strictly decreasing rows of nonnegative integers
/// of equal length, recording arms above and legs below the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrobeniusSymbol {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl FrobeniusSymbol {
    /// Builds a symbol after checking both rows are strictly decreasing and
    /// of equal nonzero length.
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidObject {
            kind: "Frobenius symbol",
            reason,
        };
        if alpha.is_empty() || alpha.len() != beta.len() {
            return Err(invalid(format!(
                "rows must have equal nonzero length, got {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        for row in [&alpha, &beta] {
            if !row.windows(2).all(|w| w[0] > w[1]) {
                return Err(invalid(format!("row {row:?} must be strictly decreasing")));
            }
        }
        Ok(FrobeniusSymbol { alpha, beta })
    }

    pub fn top_row(&self) -> &[usize] {
        &self.alpha
    }

    pub fn bottom_row(&self) -> &[usize] {
        &self.beta
    }

    /// Diagonal length of the underlying partition.
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Size of the underlying partition.
    pub fn size(&self) -> usize {
        self.rank() + self.alpha.iter().sum::<usize>() + self.beta.iter().sum::<usize>()
    }

    /// True when the top row ends in a zero.
    pub fn has_zero_in_top_row(&self) -> bool {
        self.alpha.last() == Some(&0)
    }

    /// The partition whose diagonal data this symbol records.
    pub fn to_partition(&self) -> Partition {
        let k = self.rank();
        let mut parts: Vec<usize> = (0..k).map(|i| self.alpha[i] + i + 1).collect();
        for row in k + 1.. {
            let len = (0..k).filter(|&j| self.beta[j] + j + 1 >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
        }
        Partition::new(parts).expect("a Frobenius symbol always rebuilds a partition")
    }
}

/// Renders the two rows as `3 2 0 / 4 2 1`.
impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", row(&self.alpha), row(&self.beta))
    }
}

/// All partitions of `n` in descending lexicographic order of part lists;
/// `partitions(0)` is the single empty partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(n, n, &mut cur, &mut out);
    out
}

fn descend(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=left.min(max)).rev() {
        cur.push(p);
        descend(left - p, p, cur, out);
        cur.pop();
    }
}

/// Calls `f` for every canonical sequence of the variant and size, in
/// unsorted generation order.
fn visit_sequences(variant: StackVariant, n: usize, f: &mut impl FnMut(UnimodalSequence)) {
    for c in 1..=n {
        let rest = n - c;
        for ascent_sum in 0..=rest {
            let descent_sum = rest - ascent_sum;
            let ascents = flank_lists(variant, ascent_sum, c, true);
            if ascents.is_empty() {
                continue;
            }
            let descents = flank_lists(variant, descent_sum, c, false);
            for a in &ascents {
                for b in &descents {
                    let mut b = b.clone();
                    b.reverse();
                    f(UnimodalSequence::new_unchecked(a.clone(), c, b));
                }
            }
        }
    }
}

/// Valid flank part lists (ascending order) of the given sum for one side
/// of a summit `c`.
fn flank_lists(variant: StackVariant, sum: usize, c: usize, is_ascent: bool) -> Vec<Vec<usize>> {
    let (max_part, strict, need_all) = match (variant, is_ascent) {
        (StackVariant::Stack, true) => (c, false, false),
        (StackVariant::Stack, false) => (c - 1, false, false),
        (StackVariant::Receding, true) => (c, false, true),
        (StackVariant::Receding, false) => (c - 1, false, true),
        (StackVariant::Shifted, true) => (c, false, true),
        (StackVariant::Shifted, false) => (c - 1, false, false),
        (StackVariant::Strict, _) => (c - 1, true, false),
        (StackVariant::SemiStrict, true) => (c - 1, true, false),
        (StackVariant::SemiStrict, false) => (c - 1, false, false),
    };
    let mut out = Vec::new();
    let mut cur = Vec::new();
    ascend_lists(sum, 1, max_part, strict, &mut cur, &mut out);
    if need_all {
        out.retain(|list| contains_all_below(list, c));
    }
    out
}

fn ascend_lists(
    left: usize,
    min: usize,
    max: usize,
    strict: bool,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for p in min..=left.min(max) {
        cur.push(p);
        ascend_lists(left - p, if strict { p + 1 } else { p }, max, strict, cur, out);
        cur.pop();
    }
}

/// True when every value `1 ..= c-1` occurs in `list`.
fn contains_all_below(list: &[usize], c: usize) -> bool {
    (1..c).all(|v| list.contains(&v))
}

fn check_bound(n: usize, force: bool) -> Result<()> {
    if !force && n > ENUMERATION_BOUND {
        Err(Error::SizeBound {
            n,
            bound: ENUMERATION_BOUND,
        })
    } else {
        Ok(())
    }
}

/// Every canonical sequence of the variant and size, sorted by summit, then
/// ascent, then descent, lexicographically.  Size `0` yields nothing: the
/// empty sequence is not materialized.  Sizes above [`ENUMERATION_BOUND`]
/// are refused unless `force` is set.
pub fn enumerate(variant: StackVariant, n: usize, force: bool) -> Result<Vec<UnimodalSequence>> {
    check_bound(n, force)?;
    let mut out = Vec::new();
    visit_sequences(variant, n, &mut |s| out.push(s));
    out.sort_by(|x, y| (x.c, &x.a, &x.b).cmp(&(y.c, &y.a, &y.b)));
    Ok(out)
}

/// Number of canonical sequences of the variant and size, by exhaustive
/// generation without storing them.
pub fn count_by_enumeration(variant: StackVariant, n: usize, force: bool) -> Result<u64> {
    check_bound(n, force)?;
    let mut count = 0u64;
    visit_sequences(variant, n, &mut |_| count += 1);
    Ok(count)
}

/// Number of (sequence, summit choice) pairs: each sequence is counted once
/// per occurrence of its maximum.  Only the variants whose ascent may repeat
/// the maximum distinguish this from a plain count.
///
/// # Panics
/// Panics for `Strict` and `SemiStrict`, where the maximum is always unique.
pub fn count_with_summits(variant: StackVariant, n: usize, force: bool) -> Result<u64> {
    assert!(
        matches!(
            variant,
            StackVariant::Stack | StackVariant::Receding | StackVariant::Shifted
        ),
        "summit multiplicity is only meaningful when the maximum can repeat"
    );
    check_bound(n, force)?;
    let mut count = 0u64;
    visit_sequences(variant, n, &mut |s| count += s.max_multiplicity() as u64);
    Ok(count)
}

/// Reads a partition diagram along its diagonals into a marked receding
/// stack: the diagonal lengths left of the main diagonal form the ascent,
/// the main diagonal the marked summit, the diagonals to its right the
/// descent.
///
/// Errors on the empty partition.
pub fn receding_summit_from_partition(p: &Partition) -> Result<MarkedStack> {
    if p.parts().is_empty() {
        return Err(Error::InvalidObject {
            kind: "partition",
            reason: "the empty partition has no diagonal reading".into(),
        });
    }
    let rows = p.parts().len();
    let mut below = vec![0usize; rows];
    let mut above = vec![0usize; p.parts()[0]];
    let mut main = 0usize;
    for (i, &len) in p.parts().iter().enumerate() {
        for j in 0..len {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Greater => below[i - j - 1] += 1,
                Equal => main += 1,
                Less => above[j - i - 1] += 1,
            }
        }
    }
    below.truncate(below.iter().position(|&d| d == 0).unwrap_or(below.len()));
    above.truncate(above.iter().position(|&d| d == 0).unwrap_or(above.len()));

    // Ascent reads the far left diagonal first; mark index counts the
    // ascent parts that already equal the summit value.
    let ascent_raw: Vec<usize> = below.iter().rev().copied().collect();
    let mark = ascent_raw.iter().filter(|&&d| d == main).count();
    let mut full = ascent_raw;
    full.push(main);
    full.extend(&above);
    let last_max = full.iter().rposition(|&p| p == main).unwrap();
    let seq = UnimodalSequence::new(
        full[..last_max].to_vec(),
        main,
        full[last_max + 1..].to_vec(),
    )?;
    debug_assert!(seq.satisfies(StackVariant::Receding));
    Ok(MarkedStack { seq, mark })
}

/// Rebuilds the partition whose diagonal reading is the given marked
/// receding stack; the inverse of [`receding_summit_from_partition`].
///
/// Errors when the sequence is not a receding stack or the mark exceeds the
/// multiplicity of the maximum.
pub fn partition_from_receding_summit(ms: &MarkedStack) -> Result<Partition> {
    if !ms.seq.satisfies(StackVariant::Receding) {
        return Err(Error::InvalidObject {
            kind: "marked stack",
            reason: format!("{} is not a receding stack", ms.seq),
        });
    }
    if ms.mark >= ms.seq.max_multiplicity() {
        return Err(Error::InvalidObject {
            kind: "marked stack",
            reason: format!(
                "mark {} out of range for multiplicity {}",
                ms.mark,
                ms.seq.max_multiplicity()
            ),
        });
    }
    let parts = ms.seq.parts();
    let max = ms.seq.summit();
    let marked_pos = parts
        .iter()
        .enumerate()
        .filter(|(_, &p)| p == max)
        .map(|(i, _)| i)
        .nth(ms.mark)
        .unwrap();

    // Diagonal lengths: index 0 is the main diagonal, negative side first.
    let below: Vec<usize> = parts[..marked_pos].iter().rev().copied().collect();
    let main = parts[marked_pos];
    let above: Vec<usize> = parts[marked_pos + 1..].to_vec();

    let mut rows = Vec::new();
    for i in 1.. {
        let mut len = 0usize;
        if i <= main {
            len += 1;
        }
        for (d, &count) in below.iter().enumerate() {
            let t = i as i64 - (d as i64 + 1);
            if t >= 1 && t as usize <= count {
                len += 1;
            }
        }
        len += above.iter().filter(|&&count| count >= i).count();
        if len == 0 {
            break;
        }
        rows.push(len);
    }
    let p = Partition::new(rows)?;
    debug_assert_eq!(receding_summit_from_partition(&p).unwrap(), *ms);
    Ok(p)
}
