use std::collections::BTreeSet;

use crate::arith::pow;
use crate::error::{Error, Result};
use crate::graph::Chord;

use super::digits::DigitVector;

/// `q(x) = b^x + 2x`, the vertex where block `x-1` ends and block `x` starts.
pub fn q_value(b: u64, x: u64) -> Result<u64> {
    pow(b, x, "q(x) = b^x + 2x")?
        .checked_add(2 * x)
        .ok_or(Error::Overflow("q(x) = b^x + 2x"))
}

/// A fan on an interval of the host path.
///
/// Vertices `i ..= i + 2 + b^(e+1) - b^e`, all outer edges `{j, j+1}` in that
/// range, and `b` base chords `{i, i + 2 + j*b^e}` for `j < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    b: u64,
    base_point: u64,
    level: u64,
    stride: u64,
    last: u64,
}

impl Block {
    pub fn new(b: u64, base_point: u64, level: u64) -> Result<Self> {
        if b < 3 {
            return Err(Error::InvalidInput(format!("block base must be >= 3, got {b}")));
        }
        if base_point < 1 {
            return Err(Error::InvalidInput("block base point must be >= 1".into()));
        }
        let stride = pow(b, level, "block stride b^e")?;
        let top = pow(b, level + 1, "block size b^(e+1)")?;
        let last = (top - stride)
            .checked_add(base_point + 2)
            .ok_or(Error::Overflow("block end vertex"))?;
        Ok(Block { b, base_point, level, stride, last })
    }

    pub fn base(&self) -> u64 {
        self.b
    }

    pub fn base_point(&self) -> u64 {
        self.base_point
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// `b^e`, the gap between consecutive base-chord endpoints.
    pub fn stride(&self) -> u64 {
        self.stride
    }

    pub fn first_vertex(&self) -> u64 {
        self.base_point
    }

    pub fn last_vertex(&self) -> u64 {
        self.last
    }

    pub fn vertex_count(&self) -> u64 {
        self.last - self.base_point + 1
    }

    pub fn outer_edge_count(&self) -> u64 {
        self.last - self.base_point
    }

    /// Far endpoint of base chord `j`.
    pub fn chord_end(&self, j: u64) -> u64 {
        self.base_point + 2 + j * self.stride
    }

    pub fn base_chords(&self) -> impl Iterator<Item = Chord> + '_ {
        (0..self.b).map(move |j| Chord::new(self.base_point, self.chord_end(j)))
    }

    /// Base chords whose far endpoint is at most `limit`.
    pub fn base_chords_up_to(&self, limit: u64) -> impl Iterator<Item = Chord> + '_ {
        self.base_chords().filter(move |c| c.hi() <= limit)
    }
}

/// Path from `q(e)` to `q(e+1)` inside block `G_b(q(e), e)`: the base chord
/// `{q(e), q(e+1) - c*b^e}` followed by `c*b^e` outer edges.
pub fn block_path(b: u64, e: u64, c: u64) -> Result<Vec<u64>> {
    if c >= b {
        return Err(Error::InvalidInput(format!("digit {c} out of range for base {b}")));
    }
    let block = Block::new(b, q_value(b, e)?, e)?;
    let end = q_value(b, e + 1)?;
    debug_assert_eq!(end, block.last_vertex());
    let entry = end - c * block.stride();
    let mut path = Vec::with_capacity((c * block.stride() + 2) as usize);
    path.push(block.base_point());
    path.extend(entry..=end);
    Ok(path)
}

/// Concatenated block paths for digits `c_0, c_1, ...`: a path from vertex 1
/// to `q(width)` of length `width + sum c_e b^e` using one base chord per block.
pub fn digit_path(b: u64, digits: &DigitVector) -> Result<Vec<u64>> {
    if digits.base() != b {
        return Err(Error::InvalidInput(format!("digits {digits} are not base {b}")));
    }
    let mut path = vec![1u64];
    let mut stride = 1u64;
    for (e, &c) in digits.digits().iter().enumerate() {
        let end = q_value(b, e as u64 + 1)?;
        path.extend(end - c * stride..=end);
        stride = stride.checked_mul(b).ok_or(Error::Overflow("digit path stride"))?;
    }
    Ok(path)
}

/// The chain of blocks `G_b(q(e), e)` for `e < k`.
#[derive(Debug, Clone)]
pub struct BlockChain {
    b: u64,
    blocks: Vec<Block>,
    chords: BTreeSet<Chord>,
}

pub fn build_h(b: u64, k: u64) -> Result<BlockChain> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("block chain needs k >= 2, got {k}")));
    }
    let mut blocks = Vec::with_capacity(k as usize);
    let mut chords = BTreeSet::new();
    for e in 0..k {
        let block = Block::new(b, q_value(b, e)?, e)?;
        for c in block.base_chords() {
            if !chords.insert(c) {
                return Err(Error::Invariant(format!("chord {c} shared between blocks")));
            }
        }
        blocks.push(block);
    }
    Ok(BlockChain { b, blocks, chords })
}

impl BlockChain {
    pub fn base(&self) -> u64 {
        self.b
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn chords(&self) -> &BTreeSet<Chord> {
        &self.chords
    }

    pub fn chord_count(&self) -> u64 {
        self.chords.len() as u64
    }

    /// Size of the union of the blocks' vertex intervals.
    pub fn vertex_count(&self) -> u64 {
        let mut ranges: Vec<(u64, u64)> =
            self.blocks.iter().map(|bl| (bl.first_vertex(), bl.last_vertex())).collect();
        ranges.sort_unstable();
        let mut total = 0;
        let mut covered_to = 0u64;
        for (lo, hi) in ranges {
            let start = lo.max(covered_to + 1);
            if hi >= start {
                total += hi - start + 1;
                covered_to = hi;
            }
        }
        total
    }

    /// Outer edges of all blocks plus all base chords. Fails if two blocks
    /// share an outer edge, which would make the union count wrong.
    pub fn edge_count(&self) -> Result<u64> {
        let mut spans: Vec<(u64, u64)> =
            self.blocks.iter().map(|bl| (bl.first_vertex(), bl.last_vertex())).collect();
        spans.sort_unstable();
        for w in spans.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(Error::Invariant("blocks share an outer edge".into()));
            }
        }
        let outer: u64 = self.blocks.iter().map(Block::outer_edge_count).sum();
        Ok(outer + self.chord_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chords(list: &[(u64, u64)]) -> Vec<Chord> {
        list.iter().map(|&(a, b)| Chord::new(a, b)).collect()
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_value(4, 3).unwrap(), 70);
        assert_eq!(q_value(4, 0).unwrap(), 1);
        assert_eq!(q_value(4, 2).unwrap(), 20);
        assert!(q_value(10, 20).is_err());
    }

    #[test]
    fn figure_one_blocks() {
        let g = Block::new(4, 6, 1).unwrap();
        assert_eq!(g.base_chords().collect::<Vec<_>>(), chords(&[(6, 8), (6, 12), (6, 16), (6, 20)]));
        let g = Block::new(4, 1, 0).unwrap();
        assert_eq!(g.base_chords().collect::<Vec<_>>(), chords(&[(1, 3), (1, 4), (1, 5), (1, 6)]));
        assert_eq!(g.last_vertex(), 6);
    }

    #[test]
    fn block_counts() {
        for b in 3..8 {
            for e in 0..4 {
                let g = Block::new(b, 5, e).unwrap();
                assert_eq!(g.base_chords().count() as u64, b);
                assert_eq!(g.outer_edge_count(), b.pow(e as u32 + 1) - b.pow(e as u32) + 2);
                assert!(g.base_chords().all(|c| c.lo() == 5));
            }
        }
        assert!(Block::new(2, 1, 0).is_err());
        assert!(Block::new(3, 0, 0).is_err());
    }

    #[test]
    fn block_path_examples() {
        let p = block_path(4, 1, 1).unwrap();
        assert_eq!(p, vec![6, 16, 17, 18, 19, 20]);
        assert_eq!(p.len() - 1, 5);

        let p = block_path(4, 2, 3).unwrap();
        assert_eq!(&p[..3], &[20, 22, 23]);
        assert_eq!(*p.last().unwrap(), 70);
        assert_eq!(p.len() - 1, 49);

        assert_eq!(block_path(5, 2, 0).unwrap(), vec![29, q_value(5, 3).unwrap()]);
        assert!(block_path(4, 1, 4).is_err());
    }

    #[test]
    fn h_counts() {
        let h = build_h(4, 4).unwrap();
        assert_eq!(h.vertex_count(), 264);
        assert_eq!(h.edge_count().unwrap(), 279);
        assert_eq!(h.chord_count(), 16);

        let h = build_h(3, 2).unwrap();
        assert_eq!(h.vertex_count(), 13);
        assert_eq!(h.edge_count().unwrap(), 18);
    }

    #[test]
    fn h_4_3_chords() {
        let h = build_h(4, 3).unwrap();
        let expected = chords(&[
            (1, 3), (1, 4), (1, 5), (1, 6),
            (6, 8), (6, 12), (6, 16), (6, 20),
            (20, 22), (20, 38), (20, 54), (20, 70),
        ]);
        assert_eq!(h.chords().iter().copied().collect::<Vec<_>>(), expected);
    }

    fn chords_on(h: &BlockChain, path: &[u64]) -> Vec<Chord> {
        path.windows(2).map(|w| Chord::new(w[0], w[1])).filter(|c| h.chords().contains(c)).collect()
    }

    #[test]
    fn digit_paths_in_h_4_4() {
        let h = build_h(4, 4).unwrap();
        // Digits (1,1,3) use the chords {1,5}, {6,16}, {20,22}: 2 + 5 + 49 = 56 edges.
        let path = digit_path(4, &DigitVector::new(4, vec![1, 1, 3]).unwrap()).unwrap();
        assert_eq!(path.len() - 1, 56);
        assert_eq!((path[0], *path.last().unwrap()), (1, 70));
        assert_eq!(chords_on(&h, &path), chords(&[(1, 5), (6, 16), (20, 22)]));

        // Length 52 needs 49 = 1 + 0*4 + 3*16.
        let path = digit_path(4, &DigitVector::from_value(49, 4, 3).unwrap()).unwrap();
        assert_eq!(path.len() - 1, 52);
        assert_eq!(chords_on(&h, &path), chords(&[(1, 5), (6, 20), (20, 22)]));
    }

    #[test]
    fn consecutive_blocks_meet_at_q() {
        let h = build_h(5, 4).unwrap();
        for (e, w) in h.blocks().windows(2).enumerate() {
            assert_eq!(w[0].last_vertex(), w[1].first_vertex());
            assert_eq!(w[1].first_vertex(), q_value(5, e as u64 + 1).unwrap());
        }
    }
}
