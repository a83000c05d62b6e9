//! Partitions in a bounding box, binary strings, and the bookkeeping shared by
//! every other module: partial sums, minimal degrees, and per-column dimer
//! counts.
//!
//! A partition with at most `k` parts, each at most `n - k`, is identified
//! with a binary string of length `n` carrying `k` one-letters. Positions are
//! numbered `1..=n` from the right of the written word, so the string for the
//! partition `mu` has ones exactly at `l_i = mu[k+1-i] + i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient pair `(k, n)`: `k` rows / particles on a cylinder of
/// circumference `n`. Partitions live in the `k x (n - k)` box.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxShape {
    k: usize,
    n: usize,
}

impl BoxShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n < 3 || k > n {
            return Err(Error::InvalidBox { k, n });
        }
        Ok(BoxShape { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Box width `k' = n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    /// The transposed box, home of conjugate partitions.
    pub fn conjugate(&self) -> BoxShape {
        BoxShape {
            k: self.width(),
            n: self.n,
        }
    }

    /// Convenience constructor for a partition in this box.
    pub fn partition(&self, parts: &[usize]) -> Result<Partition> {
        Partition::new(*self, parts.to_vec())
    }

    /// Convenience constructor for a composition in this box.
    pub fn composition(&self, parts: &[usize]) -> Result<Composition> {
        Composition::new(*self, parts.to_vec())
    }

    pub fn empty_partition(&self) -> Partition {
        Partition {
            parts: Vec::new(),
            shape: *self,
        }
    }

    fn check_match(&self, other: &BoxShape) -> Result<()> {
        if self != other {
            return Err(Error::BoxMismatch {
                k1: self.k,
                n1: self.n,
                k2: other.k,
                n2: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoxShape(k={}, n={})", self.k, self.n)
    }
}

/// A partition inside a box, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
    shape: BoxShape,
}

impl Partition {
    pub fn new(shape: BoxShape, mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if parts.len() > shape.k {
            return Err(Error::TooManyParts {
                len: parts.len(),
                k: shape.k,
            });
        }
        if let Some(&first) = parts.first() {
            if first > shape.width() {
                return Err(Error::PartOutOfBox {
                    part: first,
                    width: shape.width(),
                    k: shape.k,
                    n: shape.n,
                });
            }
        }
        Ok(Partition { parts, shape })
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    /// Nonzero parts, weakly decreasing.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Parts padded with zeros to length `k`.
    pub fn padded(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(self.shape.k, 0);
        v
    }

    /// `|mu|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.parts.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// The transposed Young diagram, living in the conjugate box.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.part(1))
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition {
            parts,
            shape: self.shape.conjugate(),
        }
    }

    /// Binary string with ones at `l_i = mu[k+1-i] + i`.
    pub fn to_binary_string(&self) -> BinaryString {
        let k = self.shape.k;
        let padded = self.padded();
        let mut bits = vec![false; self.shape.n];
        for i in 1..=k {
            let pos = padded[k - i] + i;
            bits[pos - 1] = true;
        }
        BinaryString { bits }
    }

    /// Multiplicity of the value `v >= 1` among the parts.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let joined = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{joined}")
    }
}

/// A length-`n` word of zeros and ones. Position 1 is the rightmost letter of
/// the written form `b_n ... b_2 b_1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString {
    bits: Vec<bool>,
}

impl BinaryString {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        BinaryString { bits }
    }

    /// Build from 1-based positions of the one-letters.
    pub fn from_ones(n: usize, ones: &[usize]) -> Result<Self> {
        let mut bits = vec![false; n];
        for &pos in ones {
            if pos < 1 || pos > n {
                return Err(Error::Parse(format!("position {pos} outside 1..={n}")));
            }
            bits[pos - 1] = true;
        }
        Ok(BinaryString { bits })
    }

    /// Parse the written form `b_n ... b_1`, e.g. `"110101100"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars().rev() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Parse(format!("invalid letter {c:?} in {s:?}"))),
            }
        }
        if bits.is_empty() {
            return Err(Error::Parse("empty binary string".into()));
        }
        Ok(BinaryString { bits })
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Letter at 1-based position `pos`.
    pub fn bit(&self, pos: usize) -> bool {
        self.bits[pos - 1]
    }

    /// Letter at position `pos` taken mod `n`, with `0` reading as `n`.
    pub fn bit_cyclic(&self, pos: usize) -> bool {
        let n = self.bits.len();
        let p = pos % n;
        self.bits[if p == 0 { n - 1 } else { p - 1 }]
    }

    /// Ascending 1-based positions of the one-letters.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&p| self.bit(p)).collect()
    }

    /// Partial sums from the bottom: entry `i-1` holds the number of
    /// one-letters at positions `1..=i`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        self.bits
            .iter()
            .map(|&b| {
                acc += usize::from(b);
                acc
            })
            .collect()
    }

    /// Partial sums from the top: entry `i-1` holds the number of one-letters
    /// at positions `n+1-i ..= n`. Related to [`Self::partial_sums`] by
    /// `top[i] = weight - bottom[n-i]`.
    pub fn partial_sums_top_down(&self) -> Vec<usize> {
        let mut acc = 0;
        self.bits
            .iter()
            .rev()
            .map(|&b| {
                acc += usize::from(b);
                acc
            })
            .collect()
    }

    /// Position-wise complement; weight `k` becomes weight `n - k`. Reading
    /// the complement in the opposite position order gives the string of the
    /// conjugate partition.
    pub fn complement(&self) -> BinaryString {
        BinaryString {
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    /// Inverse of [`Partition::to_binary_string`]; the string must carry
    /// exactly `shape.k()` one-letters.
    pub fn to_partition(&self, shape: BoxShape) -> Result<Partition> {
        if self.n() != shape.n {
            return Err(Error::Parse(format!(
                "string length {} does not match box circumference {}",
                self.n(),
                shape.n
            )));
        }
        let ones = self.ones();
        if ones.len() != shape.k {
            return Err(Error::WrongWeight {
                expected: shape.k,
                actual: ones.len(),
            });
        }
        let k = shape.k;
        let mut parts = vec![0usize; k];
        for (idx, &l) in ones.iter().enumerate() {
            let i = idx + 1;
            parts[k - i] = l - i;
        }
        Partition::new(shape, parts)
    }
}

impl fmt::Display for BinaryString {
    /// Writes the string in the order `b_n ... b_1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in self.bits.iter().rev() {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryString({self})")
    }
}

/// An ordered tuple of `k` row sizes, each at most `n - k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
    shape: BoxShape,
}

impl Composition {
    pub fn new(shape: BoxShape, parts: Vec<usize>) -> Result<Self> {
        if parts.len() != shape.k {
            return Err(Error::WrongLength {
                len: parts.len(),
                k: shape.k,
            });
        }
        for &p in &parts {
            if p > shape.width() {
                return Err(Error::PartOutOfBox {
                    part: p,
                    width: shape.width(),
                    k: shape.k,
                    n: shape.n,
                });
            }
        }
        Ok(Composition { parts, shape })
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts sorted decreasingly, as a partition.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(self.shape, parts).expect("sorted parts of a composition fit the box")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{:?}", self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let joined = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{joined}")
    }
}

/// Boundary data of a pair `(mu, nu)`: partial-sum profiles and the minimal
/// number of boundary crossings over all configurations joining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPair {
    pub mu: Partition,
    pub nu: Partition,
    pub partial_sums_mu: Vec<usize>,
    pub partial_sums_nu: Vec<usize>,
    pub d_min: usize,
}

/// Partial-sum profiles of `mu` and `nu` together with
/// `d_min = max_i (n_i(nu) - n_i(mu))`, raised if necessary so that the
/// minimal dimer count `n * d_min + |nu| - |mu|` is nonnegative.
pub fn boundary_pair(mu: &Partition, nu: &Partition) -> Result<BoundaryPair> {
    mu.shape().check_match(&nu.shape())?;
    let n = mu.shape().n() as i64;
    let sums_mu = mu.to_binary_string().partial_sums();
    let sums_nu = nu.to_binary_string().partial_sums();
    let mut d_min = sums_mu
        .iter()
        .zip(&sums_nu)
        .map(|(&m, &v)| v as i64 - m as i64)
        .max()
        .unwrap_or(0)
        .max(0);
    while n * d_min + nu.size() as i64 - (mu.size() as i64) < 0 {
        d_min += 1;
    }
    Ok(BoundaryPair {
        mu: mu.clone(),
        nu: nu.clone(),
        partial_sums_mu: sums_mu,
        partial_sums_nu: sums_nu,
        d_min: d_min as usize,
    })
}

impl BoundaryPair {
    /// `n * d_min + |nu| - |mu|`, the total number of horizontal dimers in a
    /// minimal configuration.
    pub fn minimal_dimer_count(&self) -> usize {
        let n = self.mu.shape().n() as i64;
        let v = n * self.d_min as i64 + self.nu.size() as i64 - self.mu.size() as i64;
        debug_assert!(v >= 0);
        v as usize
    }
}

/// The degree `d = (|lambda| + |mu| - |nu|) / n`, provided the numerator is
/// nonnegative and divisible by `n`. Absence means the configuration count is
/// zero, not an error.
pub fn degree(lambda_total: usize, mu: &Partition, nu: &Partition) -> Option<usize> {
    let n = mu.shape().n() as i64;
    let num = lambda_total as i64 + mu.size() as i64 - nu.size() as i64;
    if num < 0 || num % n != 0 {
        None
    } else {
        Some((num / n) as usize)
    }
}

/// Column occupation profile at degree `d`. `theta[i-1]` is the number of
/// horizontal dimers that flux conservation forces into column `i` of any
/// configuration from `b^mu` to `b^nu` with `d` boundary crossings:
/// crossings of the cut between columns `i` and `i+1` must balance the change
/// in occupation of positions `1..=i`, so `theta_i = d + n_i(mu) - n_i(nu)`.
/// In particular `theta_n = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaProfile {
    pub theta: Vec<i64>,
    pub mask: Vec<bool>,
}

pub fn theta_profile(pair: &BoundaryPair, d: usize) -> ThetaProfile {
    let theta: Vec<i64> = pair
        .partial_sums_mu
        .iter()
        .zip(&pair.partial_sums_nu)
        .map(|(&m, &v)| d as i64 + m as i64 - v as i64)
        .collect();
    let mask = theta.iter().map(|&t| t > 0).collect();
    ThetaProfile { theta, mask }
}

impl ThetaProfile {
    /// `Theta_i` with the cyclic convention `Theta_{n+1} = Theta_1`.
    pub fn mask_cyclic(&self, i: usize) -> bool {
        let n = self.mask.len();
        let p = i % n;
        self.mask[if p == 0 { n - 1 } else { p - 1 }]
    }

    pub fn all_positive(&self) -> bool {
        self.mask.iter().all(|&m| m)
    }
}

/// All partitions in the box, in lexicographic order of their padded parts.
pub fn partitions_in_box(shape: BoxShape) -> Vec<Partition> {
    fn rec(shape: BoxShape, maxpart: usize, slots: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(shape, acc.clone()).expect("generated partition fits"));
        if slots == 0 {
            return;
        }
        let last = acc.last().copied().unwrap_or(maxpart);
        for p in 1..=last.min(maxpart) {
            acc.push(p);
            rec(shape, maxpart, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(shape, shape.width(), shape.k(), &mut acc, &mut out);
    out.sort();
    out
}

/// All compositions in the box: `(n-k+1)^k` tuples in odometer order.
pub fn compositions_in_box(shape: BoxShape) -> Vec<Composition> {
    let k = shape.k();
    let w = shape.width();
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(Composition::new(shape, cur.clone()).expect("generated composition fits"));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < w {
                cur[i] += 1;
                for slot in cur.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// All weight-`r` binary strings of length `n`, ordered by ascending one-sets.
pub fn binary_strings(n: usize, r: usize) -> Vec<BinaryString> {
    let mut out = Vec::new();
    let mut ones = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, ones: &mut Vec<usize>, out: &mut Vec<BinaryString>) {
        if ones.len() == r {
            out.push(BinaryString::from_ones(n, ones).expect("positions in range"));
            return;
        }
        let remaining = r - ones.len();
        for p in start..=(n - remaining + 1) {
            ones.push(p);
            rec(n, r, p + 1, ones, out);
            ones.pop();
        }
    }
    if r <= n {
        rec(n, r, 1, &mut ones, &mut out);
    }
    out
}
