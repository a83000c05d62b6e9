//! Level-one Kirillov-Reshetikhin crystals of affine type A, their tensor
//! products, and the combinatorial R-matrix.
//!
//! The vertex set of `B_r` is the weight-`r` binary strings of length `n`.
//! The operator `f_i` moves a one-letter from position `i` to position
//! `i + 1` (position `n` wraps to 1); `e_i` is its inverse. On a tensor
//! product, `e_i` acts on the left factor when `eps_i(left) > phi_i(right)`
//! and `f_i` when `eps_i(left) >= phi_i(right)`, the right factor otherwise.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::json;

use crate::combinatorics::{
    binary_strings, boundary_pair, degree, theta_profile, BinaryString, Partition,
};
use crate::error::{Error, Result};

/// A vertex of `B_r`; the level is the string's weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KRVertex {
    string: BinaryString,
}

impl KRVertex {
    pub fn new(string: BinaryString) -> Self {
        KRVertex { string }
    }

    pub fn string(&self) -> &BinaryString {
        &self.string
    }

    pub fn level(&self) -> usize {
        self.string.weight()
    }

    /// The anchor vertex `u_r` with ones packed at positions `1..=r`.
    pub fn anchor(n: usize, r: usize) -> Self {
        let ones: Vec<usize> = (1..=r).collect();
        KRVertex {
            string: BinaryString::from_ones(n, &ones).expect("anchor positions fit"),
        }
    }
}

impl fmt::Debug for KRVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KRVertex({})", self.string)
    }
}

/// An ordered tensor product of KR vertices, leftmost factor first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorVertex {
    factors: Vec<BinaryString>,
}

impl TensorVertex {
    pub fn new(factors: Vec<BinaryString>) -> Self {
        TensorVertex { factors }
    }

    pub fn factors(&self) -> &[BinaryString] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor weights, left to right.
    pub fn weights(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.weight()).collect()
    }

    /// Written forms joined by `|`; empty product renders as `e`.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "e".into();
        }
        self.factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for TensorVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVertex({})", self.name())
    }
}

impl fmt::Display for TensorVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Path-length data `eps_i`, `phi_i` for every color `i` in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureVector {
    pub eps: Vec<u32>,
    pub phi: Vec<u32>,
}

impl SignatureVector {
    fn zeros(n: usize) -> Self {
        SignatureVector {
            eps: vec![0; n],
            phi: vec![0; n],
        }
    }
}

/// `f_i` on a single string: swap the letters at positions `i` and `i + 1`
/// (cyclically) when they read `1, 0`.
pub fn f_single(b: &BinaryString, i: usize) -> Option<BinaryString> {
    let n = b.n();
    debug_assert!((1..=n).contains(&i));
    let next = i % n + 1;
    if b.bit(i) && !b.bit(next) {
        let mut bits: Vec<bool> = (1..=n).map(|p| b.bit(p)).collect();
        bits[i - 1] = false;
        bits[next - 1] = true;
        Some(BinaryString::from_bits(bits))
    } else {
        None
    }
}

/// Inverse of [`f_single`]: moves a one-letter from position `i + 1` to `i`.
pub fn e_single(b: &BinaryString, i: usize) -> Option<BinaryString> {
    let n = b.n();
    debug_assert!((1..=n).contains(&i));
    let next = i % n + 1;
    if !b.bit(i) && b.bit(next) {
        let mut bits: Vec<bool> = (1..=n).map(|p| b.bit(p)).collect();
        bits[i - 1] = true;
        bits[next - 1] = false;
        Some(BinaryString::from_bits(bits))
    } else {
        None
    }
}

fn single_signature(b: &BinaryString) -> SignatureVector {
    let n = b.n();
    let mut sig = SignatureVector::zeros(n);
    for i in 1..=n {
        let next = i % n + 1;
        if b.bit(i) && !b.bit(next) {
            sig.phi[i - 1] = 1;
        }
        if !b.bit(i) && b.bit(next) {
            sig.eps[i - 1] = 1;
        }
    }
    sig
}

/// Signatures of every suffix `factors[j..]`; entry `k` is the empty tensor.
fn suffix_signatures(v: &TensorVertex, n: usize) -> Vec<SignatureVector> {
    let k = v.factors.len();
    let mut out = vec![SignatureVector::zeros(n); k + 1];
    for j in (0..k).rev() {
        let left = single_signature(&v.factors[j]);
        let right = &out[j + 1];
        let mut combined = SignatureVector::zeros(n);
        for c in 0..n {
            combined.phi[c] = left.phi[c] + right.phi[c].saturating_sub(left.eps[c]);
            combined.eps[c] = right.eps[c] + left.eps[c].saturating_sub(right.phi[c]);
        }
        out[j] = combined;
    }
    out
}

/// `eps_i` and `phi_i` of a tensor vertex for all colors, by folding the
/// two-factor rule.
pub fn signature(v: &TensorVertex) -> SignatureVector {
    let n = tensor_n(v);
    suffix_signatures(v, n).swap_remove(0)
}

fn tensor_n(v: &TensorVertex) -> usize {
    v.factors.first().map(|f| f.n()).unwrap_or(1)
}

/// `f_i` on a tensor vertex: acts on the leftmost factor `j` with
/// `eps_i(b_j) >= phi_i(b_{j+1} x ... x b_k)`.
pub fn f_tensor(v: &TensorVertex, i: usize) -> Option<TensorVertex> {
    apply_tensor(v, i, true)
}

/// `e_i` on a tensor vertex: like [`f_tensor`] with a strict comparison.
pub fn e_tensor(v: &TensorVertex, i: usize) -> Option<TensorVertex> {
    apply_tensor(v, i, false)
}

fn apply_tensor(v: &TensorVertex, i: usize, lowering: bool) -> Option<TensorVertex> {
    let k = v.factors.len();
    if k == 0 {
        return None;
    }
    let n = tensor_n(v);
    let suffixes = suffix_signatures(v, n);
    let mut chosen = k - 1;
    for j in 0..k - 1 {
        let left = single_signature(&v.factors[j]).eps[i - 1];
        let right = suffixes[j + 1].phi[i - 1];
        let acts_here = if lowering { left >= right } else { left > right };
        if acts_here {
            chosen = j;
            break;
        }
    }
    let moved = if lowering {
        f_single(&v.factors[chosen], i)
    } else {
        e_single(&v.factors[chosen], i)
    }?;
    let mut factors = v.factors.clone();
    factors[chosen] = moved;
    Some(TensorVertex { factors })
}

/// The Dynkin rotation: every one-letter advances one position around the
/// cylinder (with the `omega-backward` feature it retreats instead). Applied
/// factorwise; `omega^n` is the identity.
pub fn omega(v: &TensorVertex) -> TensorVertex {
    TensorVertex {
        factors: v.factors.iter().map(omega_string).collect(),
    }
}

pub fn omega_string(b: &BinaryString) -> BinaryString {
    let n = b.n();
    let mut bits = vec![false; n];
    for pos in 1..=n {
        if b.bit(pos) {
            let dest = if cfg!(feature = "omega-backward") {
                if pos == 1 {
                    n
                } else {
                    pos - 1
                }
            } else {
                pos % n + 1
            };
            bits[dest - 1] = true;
        }
    }
    BinaryString::from_bits(bits)
}

/// The signature a vertex of `B_lambda` must carry to encode a configuration
/// from `b^mu` to `b^nu`: at color `i`, lowering capacity sits exactly where
/// the top boundary has a particle at position `i + 1` and column `i` holds
/// a dimer, raising capacity where the bottom boundary has a particle at
/// position `i + 1` and column `i + 1` holds a dimer. So
/// `phi_i = b^nu_{i+1} Theta_i` and `eps_i = b^mu_{i+1} Theta_{i+1}`, all
/// indices cyclic. `None` when the degree does not exist.
pub fn boundary_signature(
    mu: &Partition,
    nu: &Partition,
    lambda_total: usize,
) -> Result<Option<SignatureVector>> {
    let d = match degree(lambda_total, mu, nu) {
        Some(d) => d,
        None => return Ok(None),
    };
    let pair = boundary_pair(mu, nu)?;
    let theta = theta_profile(&pair, d);
    let n = mu.shape().n();
    let b_mu = mu.to_binary_string();
    let b_nu = nu.to_binary_string();
    let mut sig = SignatureVector::zeros(n);
    for i in 1..=n {
        if theta.mask_cyclic(i) && b_nu.bit_cyclic(i + 1) {
            sig.phi[i - 1] = 1;
        }
        if theta.mask_cyclic(i + 1) && b_mu.bit_cyclic(i + 1) {
            sig.eps[i - 1] = 1;
        }
    }
    Ok(Some(sig))
}

/// Whether the vertex carries exactly the boundary signature of `(mu, nu)`.
/// This is necessary for encoding a configuration but not sufficient:
/// mirror-ordered factor tuples can share a full signature vector, and only
/// one of them threads correctly through the R-matrix.
pub fn has_boundary_signature(v: &TensorVertex, mu: &Partition, nu: &Partition) -> Result<bool> {
    let total: usize = v.weights().iter().sum();
    let required = boundary_signature(mu, nu, total)?;
    if v.is_empty() {
        // the empty product has every eps and phi zero
        return Ok(matches!(
            required,
            Some(sig) if sig.eps.iter().all(|&e| e == 0) && sig.phi.iter().all(|&p| p == 0)
        ));
    }
    Ok(match required {
        Some(required) => signature(v) == required,
        None => false,
    })
}

/// Full membership test for the boundary vertex set: the signature condition
/// together with the R-threading identity.
pub fn is_boundary_vertex(v: &TensorVertex, mu: &Partition, nu: &Partition) -> Result<bool> {
    Ok(has_boundary_signature(v, mu, nu)? && r_boundary_identity_holds(v, mu, nu))
}

/// All vertices of `B_lambda` carrying the boundary signature of `(mu, nu)`.
/// Scans the full Cartesian product, so keep the factor sizes moderate.
pub fn select_b_lambda(
    mu: &Partition,
    nu: &Partition,
    lambda: &[usize],
) -> Result<Vec<TensorVertex>> {
    let n = mu.shape().n();
    let total: usize = lambda.iter().sum();
    let required = match boundary_signature(mu, nu, total)? {
        Some(sig) => sig,
        None => return Ok(Vec::new()),
    };
    if lambda.is_empty() {
        let trivial = TensorVertex::new(Vec::new());
        return Ok(if is_boundary_vertex(&trivial, mu, nu)? {
            vec![trivial]
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::new();
    let factor_sets: Vec<Vec<BinaryString>> =
        lambda.iter().map(|&r| binary_strings(n, r)).collect();
    let mut current = Vec::with_capacity(lambda.len());
    cartesian_scan(&factor_sets, &mut current, &mut |factors| {
        let v = TensorVertex {
            factors: factors.to_vec(),
        };
        if signature(&v) == required && r_boundary_identity_holds(&v, mu, nu) {
            out.push(v);
        }
    });
    Ok(out)
}

fn cartesian_scan<F: FnMut(&[BinaryString])>(
    sets: &[Vec<BinaryString>],
    current: &mut Vec<BinaryString>,
    visit: &mut F,
) {
    if current.len() == sets.len() {
        visit(current);
        return;
    }
    for item in &sets[current.len()] {
        current.push(item.clone());
        cartesian_scan(sets, current, visit);
        current.pop();
    }
}

type RKey = (usize, usize, usize);
type RMap = HashMap<(BinaryString, BinaryString), (BinaryString, BinaryString)>;

fn r_cache() -> &'static Mutex<HashMap<RKey, Arc<RMap>>> {
    static CACHE: OnceLock<Mutex<HashMap<RKey, Arc<RMap>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The combinatorial R-matrix `B_r x B_s -> B_s x B_r` applied to one pair.
///
/// The bijection is computed once per `(n, r, s)` and cached: the anchor
/// `u_r x u_s` is matched against every vertex of the flipped product with
/// the same signature, each candidate is grown by breadth-first traversal
/// matching edge colors, and exactly one candidate must survive as a total
/// color-preserving bijection. Anything else panics: it signals a broken
/// crystal convention, not bad input.
pub fn combinatorial_r(
    left: &BinaryString,
    right: &BinaryString,
) -> (BinaryString, BinaryString) {
    let n = left.n();
    assert_eq!(n, right.n(), "R-matrix factors must share the circumference");
    let (r, s) = (left.weight(), right.weight());
    let map = r_bijection(n, r, s);
    map.get(&(left.clone(), right.clone()))
        .cloned()
        .unwrap_or_else(|| panic!("R bijection for (n={n}, r={r}, s={s}) is not total"))
}

fn r_bijection(n: usize, r: usize, s: usize) -> Arc<RMap> {
    if let Some(found) = r_cache().lock().unwrap().get(&(n, r, s)) {
        return found.clone();
    }
    let built = Arc::new(build_r_bijection(n, r, s));
    r_cache().lock().unwrap().insert((n, r, s), built.clone());
    built
}

fn pair_vertex(a: &BinaryString, b: &BinaryString) -> TensorVertex {
    TensorVertex {
        factors: vec![a.clone(), b.clone()],
    }
}

fn build_r_bijection(n: usize, r: usize, s: usize) -> RMap {
    let anchor = pair_vertex(
        KRVertex::anchor(n, r).string(),
        KRVertex::anchor(n, s).string(),
    );
    let anchor_sig = signature(&anchor);
    let candidates: Vec<TensorVertex> = {
        let left_set = binary_strings(n, s);
        let right_set = binary_strings(n, r);
        let mut v = Vec::new();
        for a in &left_set {
            for b in &right_set {
                let cand = pair_vertex(a, b);
                if signature(&cand) == anchor_sig {
                    v.push(cand);
                }
            }
        }
        v
    };
    let domain_size = binary_strings(n, r).len() * binary_strings(n, s).len();
    let mut survivors: Vec<RMap> = Vec::new();
    for cand in candidates {
        if let Some(map) = grow_isomorphism(&anchor, &cand, n, domain_size) {
            survivors.push(map);
        }
    }
    match survivors.len() {
        1 => survivors.pop().unwrap(),
        count => panic!(
            "expected a unique R bijection for (n={n}, r={r}, s={s}), found {count} candidates"
        ),
    }
}

/// Extend `anchor -> image` along all colored edges; `None` when the edge
/// structures disagree or the extension fails to be a total bijection.
fn grow_isomorphism(
    anchor: &TensorVertex,
    image: &TensorVertex,
    n: usize,
    domain_size: usize,
) -> Option<RMap> {
    let mut map: HashMap<TensorVertex, TensorVertex> = HashMap::new();
    let mut seen_images: HashMap<TensorVertex, TensorVertex> = HashMap::new();
    let mut queue = VecDeque::new();
    map.insert(anchor.clone(), image.clone());
    seen_images.insert(image.clone(), anchor.clone());
    queue.push_back(anchor.clone());
    while let Some(x) = queue.pop_front() {
        let y = map[&x].clone();
        for i in 1..=n {
            for lowering in [true, false] {
                let (xi, yi) = if lowering {
                    (f_tensor(&x, i), f_tensor(&y, i))
                } else {
                    (e_tensor(&x, i), e_tensor(&y, i))
                };
                match (xi, yi) {
                    (None, None) => {}
                    (Some(xn), Some(yn)) => {
                        if let Some(prev) = map.get(&xn) {
                            if *prev != yn {
                                return None;
                            }
                        } else {
                            if let Some(other) = seen_images.get(&yn) {
                                if *other != xn {
                                    return None;
                                }
                            }
                            map.insert(xn.clone(), yn.clone());
                            seen_images.insert(yn, xn.clone());
                            queue.push_back(xn);
                        }
                    }
                    _ => return None,
                }
            }
        }
    }
    if map.len() != domain_size || seen_images.len() != domain_size {
        return None;
    }
    Some(
        map.into_iter()
            .map(|(k, v)| {
                (
                    (k.factors[0].clone(), k.factors[1].clone()),
                    (v.factors[0].clone(), v.factors[1].clone()),
                )
            })
            .collect(),
    )
}

/// Threads a front factor through the whole tensor by successive two-factor
/// R applications, returning the transformed tensor and the emitted back
/// factor.
pub fn r_lambda(front: &BinaryString, v: &TensorVertex) -> (TensorVertex, BinaryString) {
    let mut carry = front.clone();
    let mut factors = Vec::with_capacity(v.factors.len());
    for factor in &v.factors {
        let (out, next_carry) = combinatorial_r(&carry, factor);
        factors.push(out);
        carry = next_carry;
    }
    (TensorVertex { factors }, carry)
}

/// The R-threading identity: `b` encodes a configuration from `b^mu` to
/// `b^nu` exactly when threading the complement of the top boundary string
/// through the rotated vertex reproduces the vertex and emits the complement
/// of the bottom boundary string,
/// `R_lambda(comp(b^nu) x omega(b)) = b x comp(b^mu)`.
/// The complements carry weight `n - k`, so the threaded factor lives in
/// `B_{n-k}`; reading a complement in the opposite position order gives the
/// conjugate partition's string.
pub fn r_boundary_identity_holds(v: &TensorVertex, mu: &Partition, nu: &Partition) -> bool {
    let front = nu.to_binary_string().complement();
    let expected_back = mu.to_binary_string().complement();
    let (threaded, back) = r_lambda(&front, &omega(v));
    threaded == *v && back == expected_back
}

/// A fully built tensor-product crystal graph.
pub struct CrystalGraph {
    n: usize,
    weights: Vec<usize>,
    vertices: Vec<TensorVertex>,
    index: HashMap<TensorVertex, usize>,
    /// `edges[color - 1][v]` is the target of the `f_color` edge out of `v`.
    edges: Vec<Vec<Option<usize>>>,
}

impl CrystalGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn vertices(&self) -> &[TensorVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
            .iter()
            .map(|per_color| per_color.iter().flatten().count())
            .sum()
    }

    pub fn f_edge(&self, v: usize, color: usize) -> Option<usize> {
        self.edges[color - 1][v]
    }

    pub fn index_of(&self, v: &TensorVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Connectivity under all colors, edges taken in both directions.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let size = self.vertices.len();
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); size];
        for per_color in &self.edges {
            for (src, tgt) in per_color.iter().enumerate() {
                if let Some(t) = tgt {
                    reverse[*t].push(src);
                }
            }
        }
        let mut seen = vec![false; size];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            let forward = self
                .edges
                .iter()
                .filter_map(|per_color| per_color[v])
                .collect::<Vec<_>>();
            for w in forward.into_iter().chain(reverse[v].iter().copied()) {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        visited == size
    }
}

/// Builds `B_{w_1} x ... x B_{w_k}` with every `f_i` edge. The vertex count
/// `prod C(n, w_j)` must stay within the budget.
pub fn build_crystal_graph(n: usize, weights: &[usize], budget: u64) -> Result<CrystalGraph> {
    let mut size: u128 = 1;
    for &w in weights {
        if w > n {
            return Err(Error::RowSizeOutOfRange { r: w, max: n });
        }
        size = size.saturating_mul(binomial_u128(n, w));
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget,
            });
        }
    }
    let factor_sets: Vec<Vec<BinaryString>> =
        weights.iter().map(|&w| binary_strings(n, w)).collect();
    let mut vertices = Vec::with_capacity(size as usize);
    let mut current = Vec::new();
    cartesian_scan(&factor_sets, &mut current, &mut |factors| {
        vertices.push(TensorVertex {
            factors: factors.to_vec(),
        });
    });
    let index: HashMap<TensorVertex, usize> = vertices
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut edges = vec![vec![None; vertices.len()]; n];
    for (vi, v) in vertices.iter().enumerate() {
        for color in 1..=n {
            if let Some(target) = f_tensor(v, color) {
                let ti = index[&target];
                edges[color - 1][vi] = Some(ti);
            }
        }
    }
    Ok(CrystalGraph {
        n,
        weights: weights.to_vec(),
        vertices,
        index,
        edges,
    })
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Graphviz rendering with one labelled edge per Kashiwara arrow; vertex
/// order is lexicographic on the written factor strings.
pub fn crystal_graph_dot(graph: &CrystalGraph) -> String {
    let mut names: Vec<(String, usize)> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.name(), i))
        .collect();
    names.sort();
    let mut out = String::from("digraph crystal {\n  rankdir=BT;\n");
    for (name, _) in &names {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for (name, i) in &names {
        for color in 1..=graph.n {
            if let Some(t) = graph.f_edge(*i, color) {
                out.push_str(&format!(
                    "  \"{name}\" -> \"{}\" [label=\"{color}\"];\n",
                    graph.vertices[t].name()
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// JSON rendering with the same deterministic vertex order as the DOT form.
pub fn crystal_graph_json(graph: &CrystalGraph) -> serde_json::Value {
    let mut names: Vec<(String, usize)> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.name(), i))
        .collect();
    names.sort();
    let rank: BTreeMap<usize, usize> = names
        .iter()
        .enumerate()
        .map(|(rank, (_, i))| (*i, rank))
        .collect();
    let vertices: Vec<String> = names.iter().map(|(name, _)| name.clone()).collect();
    let mut edges = Vec::new();
    for (_, i) in &names {
        for color in 1..=graph.n {
            if let Some(t) = graph.f_edge(*i, color) {
                edges.push(json!({
                    "from": rank[i],
                    "to": rank[&t],
                    "color": color,
                }));
            }
        }
    }
    json!({
        "n": graph.n,
        "weights": graph.weights,
        "vertices": vertices,
        "edges": edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::BoxShape;

    fn bs(s: &str) -> BinaryString {
        BinaryString::parse(s).unwrap()
    }

    #[test]
    fn f_single_examples() {
        assert_eq!(f_single(&bs("011"), 2), Some(bs("101")));
        assert_eq!(f_single(&bs("011"), 1), None);
        assert_eq!(f_single(&bs("100"), 3), Some(bs("001")));
        assert_eq!(e_single(&bs("001"), 3), Some(bs("100")));
    }

    #[test]
    fn e_and_f_invert_each_other() {
        for n in 3..=5 {
            for r in 0..=n {
                for b in binary_strings(n, r) {
                    for i in 1..=n {
                        if let Some(fb) = f_single(&b, i) {
                            assert_eq!(e_single(&fb, i), Some(b.clone()));
                        }
                        if let Some(eb) = e_single(&b, i) {
                            assert_eq!(f_single(&eb, i), Some(b.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anchor_signature() {
        // u_r: phi_r = 1, eps vanishes on classical colors; the affine color
        // carries eps_n = 1 whenever 0 < r < n
        let n = 5;
        for r in 1..n {
            let u = KRVertex::anchor(n, r);
            let sig = single_signature(u.string());
            for i in 1..n {
                assert_eq!(sig.phi[i - 1], u32::from(i == r), "phi_{i} of u_{r}");
                assert_eq!(sig.eps[i - 1], 0, "eps_{i} of u_{r}");
            }
            assert_eq!(sig.eps[n - 1], 1);
        }
    }

    #[test]
    fn tensor_signature_counts_operator_applications() {
        // two routes to eps/phi: the closed fold and raw iteration
        for weights in [vec![1, 1], vec![2, 1], vec![1, 2, 1]] {
            let n = 4;
            let sets: Vec<Vec<BinaryString>> =
                weights.iter().map(|&w| binary_strings(n, w)).collect();
            let mut current = Vec::new();
            cartesian_scan(&sets, &mut current, &mut |factors| {
                let v = TensorVertex::new(factors.to_vec());
                let sig = signature(&v);
                for i in 1..=n {
                    let mut up = 0u32;
                    let mut cursor = v.clone();
                    while let Some(next) = e_tensor(&cursor, i) {
                        cursor = next;
                        up += 1;
                    }
                    assert_eq!(sig.eps[i - 1], up, "eps_{i} of {v:?}");
                    let mut down = 0u32;
                    let mut cursor = v.clone();
                    while let Some(next) = f_tensor(&cursor, i) {
                        cursor = next;
                        down += 1;
                    }
                    assert_eq!(sig.phi[i - 1], down, "phi_{i} of {v:?}");
                }
            });
        }
    }

    #[test]
    fn tensor_tie_breaks_as_printed() {
        // eps_1(left) = phi_1(right) = 1: f commits to the left factor and
        // dies there, e commits to the right factor and dies there
        let v = TensorVertex::new(vec![bs("010"), bs("001")]);
        assert_eq!(f_tensor(&v, 1), None);
        assert_eq!(e_tensor(&v, 1), None);
        // with the opposite tie-breaks both would act: f on the right,
        // e on the left
        assert!(f_single(&bs("001"), 1).is_some());
        assert!(e_single(&bs("010"), 1).is_some());
    }

    #[test]
    fn crystal_axiom_on_tensors() {
        let n = 4;
        let sets = [binary_strings(n, 2), binary_strings(n, 1)];
        for a in &sets[0] {
            for b in &sets[1] {
                let v = TensorVertex::new(vec![a.clone(), b.clone()]);
                for i in 1..=n {
                    if let Some(w) = f_tensor(&v, i) {
                        assert_eq!(e_tensor(&w, i), Some(v.clone()));
                    }
                    if let Some(w) = e_tensor(&v, i) {
                        assert_eq!(f_tensor(&w, i), Some(v.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn omega_rotates_forward() {
        let b = bs("100");
        assert_eq!(omega_string(&b).ones(), vec![1]);
        let mut v = TensorVertex::new(vec![bs("0101"), bs("0011")]);
        let original = v.clone();
        for _ in 0..4 {
            v = omega(&v);
        }
        assert_eq!(v, original);
        assert_eq!(omega_string(&bs("000")), bs("000"));
    }

    #[test]
    fn boundary_selection_trivial_cases() {
        let shape = BoxShape::new(2, 5).unwrap();
        let vac = shape.empty_partition();
        let selected = select_b_lambda(&vac, &vac, &[0, 0]).unwrap();
        assert_eq!(selected.len(), 1);
        assert!(selected[0].factors().iter().all(|f| f.weight() == 0));

        // degree absent: empty selection
        let one = shape.partition(&[1]).unwrap();
        assert!(select_b_lambda(&vac, &one, &[0, 0]).unwrap().is_empty());
    }

    #[test]
    fn boundary_selection_single_wrap() {
        let shape = BoxShape::new(1, 3).unwrap();
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        let selected = select_b_lambda(&mu, &nu, &[1]).unwrap();
        assert_eq!(selected.len(), 1);
        assert_eq!(selected[0].factors()[0], bs("100"));
    }

    #[test]
    fn r_matrix_fixes_the_diagonal_anchor() {
        let u = KRVertex::anchor(4, 2);
        let (a, b) = combinatorial_r(u.string(), u.string());
        assert_eq!(a, *u.string());
        assert_eq!(b, *u.string());
    }

    #[test]
    fn r_matrix_is_a_bijection_with_inverse() {
        let n = 4;
        for (r, s) in [(1, 2), (2, 1), (0, 2), (2, 3)] {
            let mut images = std::collections::HashSet::new();
            for a in binary_strings(n, r) {
                for b in binary_strings(n, s) {
                    let (c, d) = combinatorial_r(&a, &b);
                    assert_eq!(c.weight(), s);
                    assert_eq!(d.weight(), r);
                    assert!(images.insert((c.clone(), d.clone())));
                    let (back_l, back_r) = combinatorial_r(&c, &d);
                    assert_eq!((back_l, back_r), (a.clone(), b.clone()));
                }
            }
        }
    }

    #[test]
    fn r_matrix_resolves_the_wrap_instance() {
        // threading the conjugate boundary through the rotated dimer vertex
        // must reproduce the vertex and emit the conjugate top boundary
        let (out_left, out_right) = combinatorial_r(&bs("110"), &bs("001"));
        assert_eq!(out_left, bs("100"));
        assert_eq!(out_right, bs("011"));
    }

    #[test]
    fn r_boundary_identity_on_the_wrap_instance() {
        let shape = BoxShape::new(1, 3).unwrap();
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        let v = TensorVertex::new(vec![bs("100")]);
        assert!(r_boundary_identity_holds(&v, &mu, &nu));
        let wrong = TensorVertex::new(vec![bs("010")]);
        assert!(!r_boundary_identity_holds(&wrong, &mu, &nu));
    }

    #[test]
    fn small_graph_shapes() {
        let g = build_crystal_graph(3, &[1], 1000).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());

        let g = build_crystal_graph(4, &[2, 1], 1000).unwrap();
        assert_eq!(g.vertex_count(), 24);
        assert!(g.is_connected());

        assert!(matches!(
            build_crystal_graph(9, &[4, 4, 4], 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn graph_exports_are_deterministic() {
        let g = build_crystal_graph(3, &[1], 1000).unwrap();
        let dot = crystal_graph_dot(&g);
        assert!(dot.contains("\"001\" -> \"010\" [label=\"1\"]"));
        assert_eq!(dot, crystal_graph_dot(&g));
        let js = crystal_graph_json(&g);
        assert_eq!(js["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(js["edges"].as_array().unwrap().len(), 3);
    }
}
