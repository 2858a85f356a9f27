//! Definition-level construction of the weakly zero-divisor graph of Z_n.
//!
//! Two distinct nonzero zero-divisors `x`, `y` are adjacent when some nonzero
//! `w ∈ ann(x)` and nonzero `z ∈ ann(y)` satisfy `w·z ≡ 0 (mod n)`. Zero is
//! excluded from the annihilators: with it allowed every pair is adjacent.
//!
//! Everything here works from ring arithmetic only and serves as ground truth
//! for the divisor-class construction in [`crate::structure`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::numtheory::{gcd_unchecked, MAX_N};

/// `build_dense_oracle` refuses moduli above this.
pub const ORACLE_MAX_N: u64 = 5000;

/// Up to this modulus the oracle also runs the literal full-scan definition
/// and checks it against the reduced witness search.
pub const LITERAL_CHECK_MAX_N: u64 = 100;

/// Simple undirected graph on ring elements with a dense bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    pub n: u64,
    vertices: Vec<u64>,
    words: usize,
    bits: Vec<u64>,
}

impl DenseGraph {
    /// Edgeless graph on the given vertices, which must be ascending.
    pub fn new(n: u64, vertices: Vec<u64>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let words = vertices.len().div_ceil(64);
        let bits = vec![0; words * vertices.len()];
        DenseGraph {
            n,
            vertices,
            words,
            bits,
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn index_of(&self, value: u64) -> Option<usize> {
        self.vertices.binary_search(&value).ok()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loop at vertex {}", self.vertices[i]);
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.order()).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> u64 {
        self.degrees().iter().sum::<u64>() / 2
    }

    /// Neighbour indices of vertex `i`, ascending.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Edges as index pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Edges as pairs of ring elements.
    pub fn edge_values(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges().map(|(i, j)| (self.vertices[i], self.vertices[j]))
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

/// Nonzero annihilator of `x` in Z_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorSet {
    pub n: u64,
    pub x: u64,
    pub elements: Vec<u64>,
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {n}")));
    }
    // ring products stay below n² and must fit in u64
    if n.checked_mul(n).is_none() || n > MAX_N {
        return Err(Error::Overflow("n² for ring products"));
    }
    Ok(())
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    a * b % n
}

/// Nonzero zero-divisors of Z_n, ascending.
pub fn zero_divisors(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {n}")));
    }
    Ok((1..n).filter(|&x| gcd_unchecked(x, n) > 1).collect())
}

/// Nonzero `t` with `t·x ≡ 0 (mod n)`, by full scan over `t ∈ [1, n−1]`.
pub fn annihilator(n: u64, x: u64) -> Result<AnnihilatorSet> {
    check_modulus(n)?;
    if x == 0 || x >= n {
        return Err(Error::InvalidArgument(format!("element {x} outside [1, {}]", n - 1)));
    }
    let elements = (1..n).filter(|&t| mul_mod(t, x, n) == 0).collect();
    Ok(AnnihilatorSet { n, x, elements })
}

fn check_pair(n: u64, x: u64, y: u64) -> Result<()> {
    check_modulus(n)?;
    if x == y {
        return Err(Error::InvalidArgument(format!(
            "adjacency needs distinct vertices, got {x} twice"
        )));
    }
    for v in [x, y] {
        if v == 0 || v >= n || gcd_unchecked(v, n) == 1 {
            return Err(Error::NotAZeroDivisor { n, value: v });
        }
    }
    Ok(())
}

/// Adjacency test with its first witness `(w, z)`, scanning `w` then `z` ascending.
///
/// Uses `ann*(x) = { a·(n/g) : 1 ≤ a < g }` with `g = gcd(x, n)`: for each `a`
/// the least admissible `b` is `gx·gy / gcd(gx·gy, a·n)`.
pub fn wzd_adjacent(n: u64, x: u64, y: u64) -> Result<Option<(u64, u64)>> {
    check_pair(n, x, y)?;
    Ok(reduced_witness(n, gcd_unchecked(x, n), gcd_unchecked(y, n)))
}

fn reduced_witness(n: u64, gx: u64, gy: u64) -> Option<(u64, u64)> {
    let prod = u128::from(gx) * u128::from(gy);
    for a in 1..gx {
        let an = u128::from(a) * u128::from(n);
        let b = prod / gcd_u128(prod, an);
        if b < u128::from(gy) {
            return Some((a * (n / gx), b as u64 * (n / gy)));
        }
    }
    None
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Adjacency straight from the definition: scan both annihilators, then the
/// full double loop.
pub fn wzd_adjacent_literal(n: u64, x: u64, y: u64) -> Result<Option<(u64, u64)>> {
    check_pair(n, x, y)?;
    let ann_x = annihilator(n, x)?;
    let ann_y = annihilator(n, y)?;
    for &w in &ann_x.elements {
        for &z in &ann_y.elements {
            if mul_mod(w, z, n) == 0 {
                return Ok(Some((w, z)));
            }
        }
    }
    Ok(None)
}

/// Builds the graph pair by pair from the adjacency rule.
///
/// Witnesses depend only on `(gcd(x,n), gcd(y,n))` because the nonzero
/// annihilator does, so they are memoized on that key. For `n ≤ 100` every
/// pair is re-checked with [`wzd_adjacent_literal`].
pub fn build_dense_oracle(n: u64) -> Result<DenseGraph> {
    check_modulus(n)?;
    if n > ORACLE_MAX_N {
        return Err(Error::GuardRefusal {
            what: "dense oracle",
            size: n,
            limit: ORACLE_MAX_N,
        });
    }
    let vertices = zero_divisors(n)?;
    let gcds: Vec<u64> = vertices.iter().map(|&x| gcd_unchecked(x, n)).collect();
    let mut graph = DenseGraph::new(n, vertices);
    let mut memo: HashMap<(u64, u64), bool> = HashMap::new();
    let literal = n <= LITERAL_CHECK_MAX_N;
    for i in 0..graph.order() {
        for j in i + 1..graph.order() {
            let adjacent = *memo
                .entry((gcds[i], gcds[j]))
                .or_insert_with(|| reduced_witness(n, gcds[i], gcds[j]).is_some());
            if literal {
                let (x, y) = (graph.vertices[i], graph.vertices[j]);
                if wzd_adjacent_literal(n, x, y)?.is_some() != adjacent {
                    return Err(Error::OracleDisagreement { n, x, y });
                }
            }
            if adjacent {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}
