//! Row-transfer representation of periodic perfect matchings on the
//! honeycomb cylinder.
//!
//! A configuration is a chain of `k` binary strings. One row with `r`
//! horizontal dimers moves the particles (one-letters) weakly to the right
//! with total displacement `r`; a particle may never reach the old position
//! of the next particle around the cylinder, and a particle passing position
//! `n` wraps and counts one boundary crossing. Since each particle advances
//! by less than the full circumference it wraps at most once per row.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{degree, BinaryString, BoxShape, Composition, Partition};
use crate::crystals::TensorVertex;
use crate::error::{Error, Result};

/// Horizontal dimers sit on the particle's own column and the following
/// `m - 1` columns; the alternate convention shifts them one step ahead.
const DIMER_OFFSET: usize = if cfg!(feature = "alt-dimer-positions") {
    1
} else {
    0
};

/// One row of particle displacements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowMove {
    displacements: Vec<usize>,
    crossings: usize,
}

impl RowMove {
    /// Displacement of each particle, bottom-string order.
    pub fn displacements(&self) -> &[usize] {
        &self.displacements
    }

    /// Number of particles that wrapped past the boundary in this row.
    pub fn crossings(&self) -> usize {
        self.crossings
    }

    /// Total horizontal dimers laid in this row.
    pub fn dimer_count(&self) -> usize {
        self.displacements.iter().sum()
    }
}

/// A full dimer configuration: `k + 1` particle levels joined by `k` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerConfiguration {
    shape: BoxShape,
    levels: Vec<BinaryString>,
    moves: Vec<RowMove>,
    row_dimers: Vec<BinaryString>,
}

impl DimerConfiguration {
    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    /// Levels bottom to top; `levels()[0]` is `b^mu`, the last is `b^nu`.
    pub fn levels(&self) -> &[BinaryString] {
        &self.levels
    }

    pub fn moves(&self) -> &[RowMove] {
        &self.moves
    }

    /// Per-row strings whose one-letters mark horizontal dimers.
    pub fn row_dimers(&self) -> &[BinaryString] {
        &self.row_dimers
    }

    /// Total number of dimers crossing the boundary seam.
    pub fn total_crossings(&self) -> usize {
        self.moves.iter().map(|m| m.crossings).sum()
    }

    /// Per-row dimer counts, bottom to top.
    pub fn row_counts(&self) -> Vec<usize> {
        self.moves.iter().map(|m| m.dimer_count()).collect()
    }

    /// The crystal vertex recording each row's horizontal dimers. The top
    /// row is the leftmost tensor factor: that orientation is the one whose
    /// signatures are fixed by the boundary strings alone.
    pub fn to_crystal_vertex(&self) -> TensorVertex {
        let mut factors = self.row_dimers.clone();
        factors.reverse();
        TensorVertex::new(factors)
    }

    /// Key for the stable ordering of configuration lists.
    pub fn sort_key(&self) -> String {
        self.levels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn to_repr(&self) -> DimerConfigurationRepr {
        DimerConfigurationRepr {
            n: self.shape.n(),
            k: self.shape.k(),
            levels: self.levels.iter().map(|l| l.to_string()).collect(),
            rows: self
                .moves
                .iter()
                .zip(&self.row_dimers)
                .map(|(mv, dim)| RowRepr {
                    dimers: dim.to_string(),
                    crossings: mv.crossings,
                })
                .collect(),
        }
    }

    /// Rebuild a configuration from its serialized form, validating every
    /// row against the transfer rule.
    pub fn from_repr(repr: &DimerConfigurationRepr) -> Result<Self> {
        let shape = BoxShape::new(repr.k, repr.n)?;
        if repr.levels.len() != repr.k + 1 || repr.rows.len() != repr.k {
            return Err(Error::Parse(format!(
                "expected {} levels and {} rows",
                repr.k + 1,
                repr.k
            )));
        }
        let levels: Vec<BinaryString> = repr
            .levels
            .iter()
            .map(|s| BinaryString::parse(s))
            .collect::<Result<_>>()?;
        let mut moves = Vec::with_capacity(repr.k);
        let mut row_dimers = Vec::with_capacity(repr.k);
        for (i, row) in repr.rows.iter().enumerate() {
            let dimers = BinaryString::parse(&row.dimers)?;
            let r = dimers.weight();
            let found = raw_row_moves(&levels[i], r)
                .into_iter()
                .find(|succ| succ.target == levels[i + 1] && succ.dimers == dimers);
            match found {
                Some(succ) if succ.mv.crossings == row.crossings => {
                    moves.push(succ.mv);
                    row_dimers.push(succ.dimers);
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "row {} is not a valid transfer step",
                        i + 1
                    )))
                }
            }
        }
        Ok(DimerConfiguration {
            shape,
            levels,
            moves,
            row_dimers,
        })
    }
}

/// Serialized form of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimerConfigurationRepr {
    pub n: usize,
    pub k: usize,
    pub levels: Vec<String>,
    pub rows: Vec<RowRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRepr {
    pub dimers: String,
    pub crossings: usize,
}

struct RowSuccessor {
    target: BinaryString,
    mv: RowMove,
    dimers: BinaryString,
}

/// All one-row successors, without the public range check on `r`. Requests
/// larger than the box width simply have no solutions.
fn raw_row_moves(u: &BinaryString, r: usize) -> Vec<RowSuccessor> {
    let n = u.n();
    let ones = u.ones();
    let k = ones.len();
    let mut out = Vec::new();
    if k == 0 {
        if r == 0 {
            out.push(RowSuccessor {
                target: u.clone(),
                mv: RowMove {
                    displacements: Vec::new(),
                    crossings: 0,
                },
                dimers: BinaryString::from_bits(vec![false; n]),
            });
        }
        return out;
    }
    // gap[j] = cover distance to the next particle; displacements stay below it
    let gaps: Vec<usize> = (0..k)
        .map(|j| {
            if j + 1 < k {
                ones[j + 1] - ones[j]
            } else {
                ones[0] + n - ones[k - 1]
            }
        })
        .collect();
    let suffix_max: Vec<usize> = {
        let mut v = vec![0; k + 1];
        for j in (0..k).rev() {
            v[j] = v[j + 1] + (gaps[j] - 1);
        }
        v
    };
    let mut m = vec![0usize; k];
    emit_moves(u, &ones, &gaps, &suffix_max, 0, r, &mut m, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn emit_moves(
    u: &BinaryString,
    ones: &[usize],
    gaps: &[usize],
    suffix_max: &[usize],
    j: usize,
    remaining: usize,
    m: &mut Vec<usize>,
    out: &mut Vec<RowSuccessor>,
) {
    let k = ones.len();
    let n = u.n();
    if j == k {
        if remaining > 0 {
            return;
        }
        let mut target_bits = vec![false; n];
        let mut dimer_bits = vec![false; n];
        let mut crossings = 0;
        for (idx, &l) in ones.iter().enumerate() {
            let dest = l + m[idx];
            if dest > n {
                crossings += 1;
            }
            target_bits[(dest - 1) % n] = true;
            for step in l..dest {
                let col = (step + DIMER_OFFSET - 1) % n;
                debug_assert!(!dimer_bits[col], "horizontal dimers never collide");
                dimer_bits[col] = true;
            }
        }
        out.push(RowSuccessor {
            target: BinaryString::from_bits(target_bits),
            mv: RowMove {
                displacements: m.clone(),
                crossings,
            },
            dimers: BinaryString::from_bits(dimer_bits),
        });
        return;
    }
    if remaining > suffix_max[j] {
        return;
    }
    for step in 0..gaps[j].min(remaining + 1) {
        m[j] = step;
        emit_moves(u, ones, gaps, suffix_max, j + 1, remaining - step, m, out);
    }
}

/// Target strings and crossing counts of one row, without the public range
/// check; the ring multiplication routes every `h_r` through this.
pub(crate) fn row_targets(u: &BinaryString, r: usize) -> Vec<(BinaryString, usize)> {
    raw_row_moves(u, r)
        .into_iter()
        .map(|s| (s.target, s.mv.crossings))
        .collect()
}

/// Every string reachable from `u` by one row with exactly `r` horizontal
/// dimers, together with the move that realizes it.
pub fn row_successors(
    u: &BinaryString,
    shape: BoxShape,
    r: usize,
) -> Result<Vec<(BinaryString, RowMove)>> {
    if u.n() != shape.n() || u.weight() != shape.k() {
        return Err(Error::WrongWeight {
            expected: shape.k(),
            actual: u.weight(),
        });
    }
    if r > shape.width() {
        return Err(Error::RowSizeOutOfRange {
            r,
            max: shape.width(),
        });
    }
    Ok(raw_row_moves(u, r)
        .into_iter()
        .map(|s| (s.target, s.mv))
        .collect())
}

struct ChainSearch<'a> {
    alpha: &'a [usize],
    target: &'a BinaryString,
    nu_size: usize,
    n: usize,
    k: usize,
    /// suffix_rest[i] = sum of alpha[i..]
    suffix_rest: Vec<usize>,
    /// suffix_cross_max[i] = max future crossings from row i on
    suffix_cross_max: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl ChainSearch<'_> {
    fn feasible(&self, level: usize, weight: i64) -> bool {
        // the remaining rows add suffix_rest[level] dimers and subtract n per
        // future crossing; the final weight must hit |nu|
        let rest = self.suffix_rest[level] as i64;
        let need = weight + rest - self.nu_size as i64;
        if need < 0 || need % self.n as i64 != 0 {
            return false;
        }
        (need / self.n as i64) <= self.suffix_cross_max[level] as i64
    }

    fn run<F: FnMut(&[BinaryString], &[RowMove], &[BinaryString])>(
        &mut self,
        levels: &mut Vec<BinaryString>,
        moves: &mut Vec<RowMove>,
        dimers: &mut Vec<BinaryString>,
        weight: i64,
        sink: &mut F,
    ) -> Result<()> {
        let level = moves.len();
        if level == self.k {
            if levels[level] == *self.target {
                sink(levels, moves, dimers);
            }
            return Ok(());
        }
        if !self.feasible(level, weight) {
            return Ok(());
        }
        let r = self.alpha[level];
        for succ in raw_row_moves(&levels[level], r) {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Err(Error::BudgetExceeded {
                        needed: self.nodes as u128,
                        budget: b,
                    });
                }
            }
            let new_weight = weight + r as i64 - (self.n * succ.mv.crossings) as i64;
            levels.push(succ.target);
            moves.push(succ.mv);
            dimers.push(succ.dimers);
            self.run(levels, moves, dimers, new_weight, sink)?;
            levels.pop();
            moves.pop();
            dimers.pop();
        }
        Ok(())
    }
}

fn search_chains<F: FnMut(&[BinaryString], &[RowMove], &[BinaryString])>(
    mu: &Partition,
    nu: &Partition,
    alpha: &Composition,
    budget: Option<u64>,
    sink: &mut F,
) -> Result<()> {
    let shape = mu.shape();
    if shape != nu.shape() || shape != alpha.shape() {
        return Err(Error::BoxMismatch {
            k1: shape.k(),
            n1: shape.n(),
            k2: nu.shape().k(),
            n2: nu.shape().n(),
        });
    }
    // divisibility: without it there is nothing to search
    if degree(alpha.total(), mu, nu).is_none() {
        return Ok(());
    }
    let k = shape.k();
    let parts = alpha.parts();
    let mut suffix_rest = vec![0usize; k + 1];
    let mut suffix_cross_max = vec![0usize; k + 1];
    for i in (0..k).rev() {
        suffix_rest[i] = suffix_rest[i + 1] + parts[i];
        suffix_cross_max[i] = suffix_cross_max[i + 1] + parts[i].min(k);
    }
    let target = nu.to_binary_string();
    let mut search = ChainSearch {
        alpha: parts,
        target: &target,
        nu_size: nu.size(),
        n: shape.n(),
        k,
        suffix_rest,
        suffix_cross_max,
        nodes: 0,
        budget,
    };
    let mut levels = vec![mu.to_binary_string()];
    let mut moves = Vec::new();
    let mut dimers = Vec::new();
    search.run(&mut levels, &mut moves, &mut dimers, mu.size() as i64, sink)
}

/// All configurations with boundary strings `b^mu`, `b^nu` and row sizes
/// `alpha`, in the stable order (lexicographic by concatenated levels).
pub fn enumerate_configurations(
    mu: &Partition,
    nu: &Partition,
    alpha: &Composition,
) -> Result<Vec<DimerConfiguration>> {
    enumerate_with_budget(mu, nu, alpha, None)
}

/// Same as [`enumerate_configurations`] with a cap on search nodes.
pub fn enumerate_configurations_with_budget(
    mu: &Partition,
    nu: &Partition,
    alpha: &Composition,
    budget: u64,
) -> Result<Vec<DimerConfiguration>> {
    enumerate_with_budget(mu, nu, alpha, Some(budget))
}

fn enumerate_with_budget(
    mu: &Partition,
    nu: &Partition,
    alpha: &Composition,
    budget: Option<u64>,
) -> Result<Vec<DimerConfiguration>> {
    let shape = mu.shape();
    let mut out = Vec::new();
    search_chains(mu, nu, alpha, budget, &mut |levels, moves, dimers| {
        out.push(DimerConfiguration {
            shape,
            levels: levels.to_vec(),
            moves: moves.to_vec(),
            row_dimers: dimers.to_vec(),
        });
    })?;
    out.sort_by_key(|c| c.sort_key());
    Ok(out)
}

/// `|Gamma_alpha(mu, nu)|` without materializing configurations.
pub fn count_configurations(mu: &Partition, nu: &Partition, alpha: &Composition) -> u64 {
    let mut count = 0u64;
    search_chains(mu, nu, alpha, None, &mut |_, _, _| count += 1)
        .expect("unbudgeted search cannot fail after shape check");
    count
}

/// Counts for every composition class, keyed by composition; zero classes are
/// omitted. The sum over the map is the total `|Gamma(mu, nu)|`.
pub fn enumerate_all(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Composition, u64>> {
    if mu.shape() != nu.shape() {
        return Err(Error::BoxMismatch {
            k1: mu.shape().k(),
            n1: mu.shape().n(),
            k2: nu.shape().k(),
            n2: nu.shape().n(),
        });
    }
    let mut out = BTreeMap::new();
    for alpha in crate::combinatorics::compositions_in_box(mu.shape()) {
        let c = count_configurations(mu, nu, &alpha);
        if c > 0 {
            out.insert(alpha, c);
        }
    }
    Ok(out)
}

/// The smallest `|alpha|` with a nonempty class, found by scanning totals
/// upward, together with one witness composition per minimal class.
pub fn minimal_nonempty_total(mu: &Partition, nu: &Partition) -> Option<(usize, Vec<Composition>)> {
    let shape = mu.shape();
    let max_total = shape.k() * shape.width();
    for total in 0..=max_total {
        let witnesses: Vec<Composition> = crate::combinatorics::compositions_in_box(shape)
            .into_iter()
            .filter(|a| a.total() == total)
            .filter(|a| count_configurations(mu, nu, a) > 0)
            .collect();
        if !witnesses.is_empty() {
            return Some((total, witnesses));
        }
    }
    None
}

/// Lozenge orientation of one strip cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LozengeKind {
    /// Covers a vertical dimer (a particle exiting the row).
    Vertical,
    /// Covers a horizontal dimer.
    Horizontal,
    /// No dimer in this cell.
    Background,
}

/// Render cell: 1-based row (bottom to top) and column, plus the seam flag
/// for horizontal tiles that wrap from column `n` into column 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LozengeCell {
    pub row: usize,
    pub col: usize,
    pub kind: LozengeKind,
    pub straddles_seam: bool,
}

/// Deterministic render data: every cell of the `k x n` strip exactly once,
/// row-major from the bottom row.
pub fn to_lozenge_cells(config: &DimerConfiguration) -> Vec<LozengeCell> {
    let n = config.shape.n();
    let mut out = Vec::with_capacity(config.shape.k() * n);
    for (i, mv) in config.moves.iter().enumerate() {
        let row = i + 1;
        let ones = config.levels[i].ones();
        let mut kinds = vec![(LozengeKind::Background, false); n];
        for (j, &l) in ones.iter().enumerate() {
            let m = mv.displacements[j];
            for step in l..l + m {
                let col = (step + DIMER_OFFSET - 1) % n;
                kinds[col] = (LozengeKind::Horizontal, step % n == 0);
            }
            let land = (l + m - 1) % n;
            kinds[land] = (LozengeKind::Vertical, false);
        }
        for (c, &(kind, straddle)) in kinds.iter().enumerate() {
            out.push(LozengeCell {
                row,
                col: c + 1,
                kind,
                straddles_seam: straddle,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compositions_in_box, partitions_in_box};

    fn boxed(k: usize, n: usize) -> BoxShape {
        BoxShape::new(k, n).unwrap()
    }

    #[test]
    fn zero_row_is_identity() {
        let shape = boxed(2, 5);
        let mu = shape.partition(&[2, 1]).unwrap();
        let u = mu.to_binary_string();
        let succ = row_successors(&u, shape, 0).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].0, u);
        assert_eq!(succ[0].1.crossings(), 0);
    }

    #[test]
    fn single_particle_wraps() {
        let shape = boxed(1, 3);
        let u = BinaryString::from_ones(3, &[3]).unwrap();
        let succ = row_successors(&u, shape, 1).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].0.ones(), vec![1]);
        assert_eq!(succ[0].1.crossings(), 1);
    }

    #[test]
    fn classical_pieri_from_vacuum() {
        // h_2 adds a horizontal 2-strip: from the vacuum only (2) is
        // reachable; (1,1) would stack two boxes in one column
        let shape = boxed(2, 4);
        let mu = shape.empty_partition();
        let u = mu.to_binary_string();
        let succ = row_successors(&u, shape, 2).unwrap();
        let targets: Vec<Partition> = succ
            .iter()
            .map(|(w, _)| w.to_partition(shape).unwrap())
            .collect();
        assert_eq!(targets.len(), 1);
        assert_eq!(targets[0].parts(), &[2]);
        assert!(succ.iter().all(|(_, mv)| mv.crossings() == 0));

        let one = shape.partition(&[1]).unwrap();
        let succ = row_successors(&one.to_binary_string(), shape, 1).unwrap();
        let mut names: Vec<String> = succ
            .iter()
            .map(|(w, _)| w.to_partition(shape).unwrap().to_string())
            .collect();
        names.sort();
        assert_eq!(names, vec!["1,1".to_string(), "2".to_string()]);
    }

    #[test]
    fn row_size_out_of_range_is_an_error() {
        let shape = boxed(2, 4);
        let u = shape.empty_partition().to_binary_string();
        assert!(matches!(
            row_successors(&u, shape, 3),
            Err(Error::RowSizeOutOfRange { r: 3, max: 2 })
        ));
    }

    #[test]
    fn identity_chain_is_unique() {
        let shape = boxed(3, 6);
        let mu = shape.partition(&[2, 1]).unwrap();
        let alpha = shape.composition(&[0, 0, 0]).unwrap();
        let configs = enumerate_configurations(&mu, &mu, &alpha).unwrap();
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].total_crossings(), 0);
        assert!(configs[0]
            .row_dimers()
            .iter()
            .all(|d| d.weight() == 0));
    }

    #[test]
    fn single_wrap_chain() {
        let shape = boxed(1, 3);
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        let alpha = shape.composition(&[1]).unwrap();
        let configs = enumerate_configurations(&mu, &nu, &alpha).unwrap();
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].total_crossings(), 1);
        assert_eq!(count_configurations(&mu, &nu, &alpha), 1);
    }

    #[test]
    fn divisibility_gate() {
        let shape = boxed(1, 3);
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        for r in [0usize, 2] {
            let alpha = shape.composition(&[r]).unwrap();
            assert_eq!(count_configurations(&mu, &nu, &alpha), 0);
        }
    }

    #[test]
    fn enumerate_all_tiny_boxes() {
        let shape = boxed(1, 3);
        let vac = shape.empty_partition();
        let all = enumerate_all(&vac, &vac).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all.values().sum::<u64>(), 1);

        let mu = shape.partition(&[2]).unwrap();
        let all = enumerate_all(&mu, &vac).unwrap();
        assert_eq!(all.len(), 1);
        let (alpha, count) = all.iter().next().unwrap();
        assert_eq!(alpha.parts(), &[1]);
        assert_eq!(*count, 1);
    }

    #[test]
    fn crossing_totals_follow_the_degree_formula() {
        for n in 3..=5 {
            for k in 0..=n.min(3) {
                let shape = boxed(k, n);
                let parts = partitions_in_box(shape);
                for mu in &parts {
                    for nu in &parts {
                        for alpha in compositions_in_box(shape) {
                            let configs = enumerate_configurations(mu, nu, &alpha).unwrap();
                            match degree(alpha.total(), mu, nu) {
                                None => assert!(configs.is_empty()),
                                Some(d) => {
                                    for c in &configs {
                                        assert_eq!(c.total_crossings(), d);
                                        assert_eq!(
                                            c.row_counts(),
                                            alpha.parts().to_vec()
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn full_box_class_from_vacuum_is_empty() {
        // the vacuum-to-vacuum class with every row full dies against the
        // seam: the bottom particle can never clear its neighbour
        let shape = boxed(2, 4);
        let vac = shape.empty_partition();
        let alpha = shape.composition(&[2, 2]).unwrap();
        assert_eq!(count_configurations(&vac, &vac, &alpha), 0);
    }

    #[test]
    fn lozenge_cells_cover_the_strip() {
        let shape = boxed(1, 3);
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        let alpha = shape.composition(&[1]).unwrap();
        let config = &enumerate_configurations(&mu, &nu, &alpha).unwrap()[0];
        let cells = to_lozenge_cells(config);
        assert_eq!(cells.len(), 3);
        let horizontal: Vec<_> = cells
            .iter()
            .filter(|c| c.kind == LozengeKind::Horizontal)
            .collect();
        assert_eq!(horizontal.len(), 1);
        assert!(horizontal[0].straddles_seam);

        // all-vertical chain: no horizontal tiles at all
        let id_alpha = shape.composition(&[0]).unwrap();
        let config = &enumerate_configurations(&mu, &mu, &id_alpha).unwrap()[0];
        let cells = to_lozenge_cells(config);
        assert!(cells.iter().all(|c| c.kind != LozengeKind::Horizontal));
        assert_eq!(
            cells
                .iter()
                .filter(|c| c.kind == LozengeKind::Vertical)
                .count(),
            1
        );
    }

    #[test]
    fn repr_round_trip() {
        let shape = boxed(2, 4);
        let mu = shape.partition(&[1]).unwrap();
        let nu = shape.partition(&[2, 1]).unwrap();
        let alpha = shape.composition(&[1, 1]).unwrap();
        for config in enumerate_configurations(&mu, &nu, &alpha).unwrap() {
            let repr = config.to_repr();
            let back = DimerConfiguration::from_repr(&repr).unwrap();
            assert_eq!(back, config);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let shape = boxed(3, 6);
        let mu = shape.empty_partition();
        let nu = shape.partition(&[3, 2, 1]).unwrap();
        let alpha = shape.composition(&[3, 2, 1]).unwrap();
        let err = enumerate_configurations_with_budget(&mu, &nu, &alpha, 1).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
