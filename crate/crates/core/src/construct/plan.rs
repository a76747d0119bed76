use std::collections::BTreeSet;

use crate::arith::{ceil_root, pow};
use crate::error::{Error, Result};
use crate::graph::{Chord, ChordedCycle};

use super::block::{digit_path, q_value, Block};
use super::digits::DigitVector;
use super::tail::Gadget;

/// Which family produced a cycle length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Digit path from 1 to `m`, closed by the chord `{m, 1}`.
    Short { digits: DigitVector },
    /// Digit path from 1 to `m`, then top-block chord `j` and the host path to `n`.
    Long { j: u64, digits: DigitVector },
    /// Host cycle with tail gadgets spliced in.
    Tail { gadgets: Vec<Gadget> },
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::Short { .. } => "L1",
            Provenance::Long { .. } => "L2",
            Provenance::Tail { .. } => "tail",
        }
    }
}

/// Unique `alpha` in `0..=b-2` with `m + 2 + alpha*s <= n < m + 2 + (alpha+1)*s`,
/// `s = b^(k-1)`. Also checks `n + 1 <= (alpha + 2)*s + 2k`.
pub fn compute_alpha(n: u64, k: u64, b: u64, m: u64) -> Result<u64> {
    let s = pow(b, k - 1, "b^(k-1)")?;
    let floor = m + 2;
    if n < floor {
        return Err(Error::Invariant(format!("n = {n} is below m + 2 = {floor}")));
    }
    let alpha = (n - floor) / s;
    if alpha > b - 2 {
        return Err(Error::Invariant(format!("alpha = {alpha} exceeds b - 2 = {}", b - 2)));
    }
    let reach = (alpha + 2)
        .checked_mul(s)
        .and_then(|v| v.checked_add(2 * k))
        .ok_or(Error::Overflow("(alpha+2) b^(k-1) + 2k"))?;
    if n + 1 > reach {
        return Err(Error::Invariant(format!(
            "coverage gap: n + 1 = {} > (alpha+2) b^(k-1) + 2k = {reach}",
            n + 1
        )));
    }
    Ok(alpha)
}

/// Every derived parameter of the truncated block chain on `1..=n`, and its chords.
#[derive(Debug, Clone)]
pub struct ConstructionPlan {
    n: u64,
    k: u64,
    b: u64,
    q: Vec<u64>,
    alpha: u64,
    top_stride: u64,
    chords: BTreeSet<Chord>,
}

impl ConstructionPlan {
    /// Smallest `n` the construction accepts for this `k`.
    pub fn threshold(k: u64) -> Result<u64> {
        pow(k + 2, k, "(k+2)^k")
    }

    pub fn build(n: u64, k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidInput(format!("k must be >= 2, got {k}")));
        }
        let required = Self::threshold(k)?;
        if n < required {
            return Err(Error::BelowThreshold { n, k, required });
        }
        let b = ceil_root(n, k)?;
        let bk = pow(b, k, "b^k")?;
        let top_stride = pow(b, k - 1, "b^(k-1)")?;
        let below = pow(b - 1, k, "(b-1)^k")?;
        if !(below < n && n <= bk && n > top_stride + 2 * k) {
            return Err(Error::Invariant(format!("b = {b} does not bracket n = {n} for k = {k}")));
        }
        let q = (0..=k).map(|x| q_value(b, x)).collect::<Result<Vec<_>>>()?;
        let m = q[k as usize - 1];
        let alpha = compute_alpha(n, k, b, m)?;

        let mut chords = BTreeSet::new();
        for e in 0..k - 1 {
            let block = Block::new(b, q[e as usize], e)?;
            chords.extend(block.base_chords());
        }
        let top = Block::new(b, m, k - 1)?;
        let survivors: Vec<Chord> = top.base_chords_up_to(n).collect();
        if survivors.len() as u64 != alpha + 1 {
            return Err(Error::Invariant(format!(
                "top block keeps {} chords, expected alpha + 1 = {}",
                survivors.len(),
                alpha + 1
            )));
        }
        chords.extend(survivors);
        // Already present when k = 2: it is the last base chord of the first block.
        chords.insert(Chord::new(1, m));

        let plan = ConstructionPlan { n, k, b, q, alpha, top_stride, chords };
        if plan.chords.len() as u64 > k * b + 1 {
            return Err(Error::Invariant(format!(
                "{} plan chords exceed k*b + 1 = {}",
                plan.chords.len(),
                k * b + 1
            )));
        }
        Ok(plan)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `ceil(n^(1/k))`.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// `q(0), ..., q(k)`.
    pub fn q(&self) -> &[u64] {
        &self.q
    }

    /// `q(k-1)`, where the digit paths end.
    pub fn m(&self) -> u64 {
        self.q[self.k as usize - 1]
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// `b^(k-1)`.
    pub fn top_stride(&self) -> u64 {
        self.top_stride
    }

    pub fn chords(&self) -> &BTreeSet<Chord> {
        &self.chords
    }

    pub fn graph(&self) -> ChordedCycle {
        ChordedCycle::with_chords(self.n, self.chords.iter().copied())
            .expect("plan chords are valid by construction")
    }

    /// Smallest length this plan decodes; 2 is never a cycle length.
    pub fn min_length(&self) -> u64 {
        self.k.max(3)
    }

    /// Longest length this plan decodes; longer ones go to the tail gadgets.
    pub fn max_length(&self) -> u64 {
        self.n - self.k
    }

    /// Largest length closed by the chord `{m, 1}`.
    pub fn short_max(&self) -> u64 {
        self.k + self.top_stride - 1
    }

    /// Smallest length routed through the truncated top block.
    pub fn long_min(&self) -> u64 {
        self.n + 1 - self.k - (self.alpha + 1) * self.top_stride
    }

    fn digits(&self, value: u64) -> Result<DigitVector> {
        DigitVector::from_value(value, self.b, self.k as usize - 1)
    }

    /// Path `1 -> m` of length `(k-1) + value(digits)` through the lower blocks.
    pub fn path_p(&self, digits: &DigitVector) -> Result<Vec<u64>> {
        if digits.base() != self.b || digits.width() as u64 != self.k - 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} base-{} digits, got {digits}",
                self.k - 1,
                self.b
            )));
        }
        digit_path(self.b, digits)
    }

    /// Path `m -> m + 2 + j*b^(k-1) -> ... -> n -> 1`.
    pub fn path_q(&self, j: u64) -> Result<Vec<u64>> {
        if j > self.alpha {
            return Err(Error::InvalidInput(format!(
                "top-block chord {j} does not survive truncation (alpha = {})",
                self.alpha
            )));
        }
        let entry = self.m() + 2 + j * self.top_stride;
        let mut path = Vec::with_capacity((self.n - entry + 3) as usize);
        path.push(self.m());
        path.extend(entry..=self.n);
        path.push(1);
        Ok(path)
    }

    fn check_length(&self, l: u64) -> Result<()> {
        if l == 2 && self.k == 2 {
            return Err(Error::DegenerateLength);
        }
        if l < self.min_length() || l > self.max_length() {
            return Err(Error::LengthOutOfRange {
                length: l,
                lo: self.min_length(),
                hi: self.max_length(),
            });
        }
        Ok(())
    }

    /// Vertex sequence of a cycle of length `l` with exactly `k` plan chords.
    /// Short lengths win when both families reach `l`.
    pub fn decode(&self, l: u64) -> Result<(Vec<u64>, Provenance)> {
        self.check_length(l)?;
        if l <= self.short_max() {
            let digits = self.digits(l - self.k)?;
            let cycle = self.path_p(&digits)?;
            return Ok((cycle, Provenance::Short { digits }));
        }
        // l = n + 1 - k - (j+1)s + v with 0 <= v < s.
        let deficit = self.n + 1 - self.k - l;
        let s = self.top_stride;
        let j = deficit.div_ceil(s) - 1;
        if j > self.alpha {
            return Err(Error::Invariant(format!("length {l} needs top chord {j} > alpha")));
        }
        let digits = self.digits((j + 1) * s - deficit)?;
        let mut cycle = self.path_p(&digits)?;
        let tail = self.path_q(j)?;
        cycle.extend_from_slice(&tail[1..tail.len() - 1]);
        Ok((cycle, Provenance::Long { j, digits }))
    }
}
