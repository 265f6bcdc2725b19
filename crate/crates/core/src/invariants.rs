//! Pointwise evaluation of the invariant `F(x_1,...,x_m,y)` along two
//! independent routes:
//!
//! - [`f_value`]: the generating-function path. `F` is the sum over subsets
//!   `I` of `{1..m}` with `|I| <= m-2` of a coefficient extraction `R_I`
//!   from a product of rising factorials and tree-function series
//!   ([`r_i_series_value`]).
//! - [`f_graph_oracle`]: a direct sum over localization graphs
//!   ([`LocGraph`]) with exact edge, vertex and rubber factors
//!   ([`graph_contribution`]).
//!
//! The two must agree on every point of the parameter space; the test
//! suites check that they do.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{factorial, int_pow, neg_one_pow, Int, Rat};
use crate::combinatorics::{
    partitions_ge2, rising_factorial_coeffs, unmarked_degree_multisets, RisingFactorialTable,
};
use crate::error::Error;
use crate::series::{exp_alpha_w_over_pow, q_d_dq, w_rational_to_qseries, QSeries, WPoly};

/// A subset of the mark indices `{1..m}`, stored as a bitmask over the
/// 0-based indices. Ordered by size first, then by bits, so listings come
/// out smallest-subsets-first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MarkSet(u32);

impl MarkSet {
    pub fn empty() -> Self {
        MarkSet(0)
    }

    pub fn full(m: usize) -> Self {
        assert!(m <= 32);
        if m == 32 {
            MarkSet(u32::MAX)
        } else {
            MarkSet((1u32 << m) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> Self {
        MarkSet(bits)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i < 32);
            bits |= 1 << i;
        }
        MarkSet(bits)
    }

    /// Builds a set from the 1-based indices used in output and on the
    /// command line, validating them against `m`.
    pub fn from_one_based(indices: &[usize], m: usize) -> Result<Self, Error> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > m {
                return Err(Error::MarkIndexOutOfRange { index: i, m });
            }
            bits |= 1 << (i - 1);
        }
        Ok(MarkSet(bits))
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32usize).filter(|&i| self.contains(i))
    }

    /// 0-based member indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based member indices, ascending.
    pub fn one_based(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn complement(&self, m: usize) -> MarkSet {
        MarkSet(Self::full(m).0 & !self.0)
    }

    pub fn validate(&self, m: usize) -> Result<(), Error> {
        match self.iter().find(|&i| i >= m) {
            Some(i) => Err(Error::MarkIndexOutOfRange { index: i + 1, m }),
            None => Ok(()),
        }
    }

    /// Every subset of `{1..m}`, by ascending bitmask.
    pub fn all_subsets(m: usize) -> impl Iterator<Item = MarkSet> {
        assert!(m < 32);
        (0..(1u32 << m)).map(MarkSet)
    }
}

impl PartialOrd for MarkSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

impl fmt::Display for MarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// An evaluation point `(x_1 >= ... >= x_m >= 0; y >= 1)`.
///
/// Construction sorts the coordinates descending (the invariant is
/// symmetric in the insertions) and requires `y >= 1`. Membership in the
/// parameter space additionally needs `1 + sum(x) >= y`; it is queried via
/// [`LatticePoint::in_parameter_space`], not assumed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    x: Vec<u32>,
    y: u32,
}

impl LatticePoint {
    pub fn new(mut x: Vec<u32>, y: u32) -> Result<Self, Error> {
        if y == 0 {
            return Err(Error::InvalidDegree(y));
        }
        x.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LatticePoint { x, y })
    }

    /// Number of marked insertions.
    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn y(&self) -> u32 {
        self.y
    }

    pub fn sum_x(&self) -> u64 {
        self.x.iter().map(|&v| v as u64).sum()
    }

    /// `1 + sum(x) >= y`.
    pub fn in_parameter_space(&self) -> bool {
        1 + self.sum_x() >= self.y as u64
    }

    /// Exponent of the equivariant parameter: `1 + sum(x) - y`.
    pub fn t_exponent(&self) -> i64 {
        1 + self.sum_x() as i64 - self.y as i64
    }

    /// `sum_{i in I} x_i`.
    pub fn resonance_sum(&self, subset: MarkSet) -> u64 {
        subset.iter().map(|i| self.x[i] as u64).sum()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.x.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "; {})", self.y)
    }
}

/// The coefficient extraction `R_I` at the point `p`:
///
/// ```text
/// R_I = [prod_{j in I^c} w_j^{x_j} q^mu]
///       prod_{j in I^c} (w_j+1)_{x_j}
///       sum_{partitions {B_1..B_s} of I^c, |B_r| >= 2}
///         (-1)^{s+|I|-1} y^{s+|I|-2}
///         e^{-mu W} / (1-W)^{|I|}
///         prod_r O_{z_r}^{|B_r|-2} ( W/(1-W)^3 )
/// ```
///
/// with `mu = y - sum_{i in I}(x_i + 1)`, `z_r = sum_{j in B_r} w_j` and
/// `O_z = (W/(1-W)) d/dW + z`. A negative `mu` makes the extraction zero.
/// For `I = {1..m}` the value is
/// `[q^mu] (-1)^{m-1} y^{m-2} e^{-mu W} / (1-W)^m` instead.
pub fn r_i_series_value(p: &LatticePoint, subset: MarkSet) -> Result<Rat, Error> {
    r_i_series_value_with_order(p, subset, 0)
}

/// [`r_i_series_value`] with a minimum truncation order. Results are exact
/// and independent of the order; the parameter only raises the internal
/// truncation, which is never taken below the required power of `q`.
pub fn r_i_series_value_with_order(
    p: &LatticePoint,
    subset: MarkSet,
    min_order: usize,
) -> Result<Rat, Error> {
    let m = p.m();
    subset.validate(m)?;
    let y = p.y();
    let il = subset.len();

    let shifted: u64 = subset.iter().map(|i| p.x[i] as u64 + 1).sum();
    let mu_signed = y as i64 - shifted as i64;
    if mu_signed < 0 {
        // no negative powers of q exist in the series
        return Ok(Rat::zero());
    }
    let mu = mu_signed as usize;
    let order = min_order.max(mu);

    if il == m {
        let series = exp_alpha_w_over_pow(-(mu as i64), m as u32, order);
        return Ok(neg_one_pow(m as i64 - 1) * Rat::from(y).pow(m as i64 - 2) * series.coeff(mu));
    }
    if il + 1 == m {
        // the complement has one element, so there is no partition into
        // blocks of size >= 2
        return Ok(Rat::zero());
    }

    let comp = subset.complement(m).indices();
    let tables: Vec<RisingFactorialTable> = comp
        .iter()
        .map(|&j| rising_factorial_coeffs(p.x[j]))
        .collect();

    // Z_k = (q d/dq)^k applied to the series of W/(1-W)^3
    let max_k = comp.len().saturating_sub(2);
    let mut z_series: Vec<QSeries> = Vec::with_capacity(max_k + 1);
    z_series.push(w_rational_to_qseries(&WPoly::identity(), 0, 3, order));
    for _ in 1..=max_k {
        z_series.push(q_d_dq(z_series.last().unwrap()));
    }

    let envelope = exp_alpha_w_over_pow(-(mu as i64), il as u32, order);

    let mut value = Rat::zero();
    for partition in partitions_ge2(&comp) {
        let s = partition.len();

        // Product over blocks of the expanded operator
        //   O_z^k (W/(1-W)^3) = sum_i C(k,i) z^i Z_{k-i},
        // kept as a map from w-exponent vectors (indexed along comp) to
        // q-series. Exponents above x_j cannot reach the extracted
        // monomial, so those terms are dropped immediately.
        let mut acc: BTreeMap<Vec<u32>, QSeries> = BTreeMap::new();
        acc.insert(vec![0; comp.len()], QSeries::one(order));

        for block in partition.blocks() {
            let positions: Vec<usize> = block
                .iter()
                .map(|&mark| comp.iter().position(|&c| c == mark).unwrap())
                .collect();
            let caps: Vec<u32> = block.iter().map(|&mark| p.x[mark]).collect();
            let k = block.len() - 2;

            let mut factor: Vec<(Vec<u32>, Rat, usize)> = Vec::new();
            let mut tuple = vec![0u32; block.len()];
            exponent_tuples(k as u32, &caps, 0, &mut tuple, &mut |e, total| {
                let mut denom = factorial((k as u32 - total) as u64);
                for &ej in e {
                    denom *= factorial(ej as u64);
                }
                let coeff = Rat::new(factorial(k as u64), denom);
                factor.push((e.to_vec(), coeff, k - total as usize));
            });

            let mut next: BTreeMap<Vec<u32>, QSeries> = BTreeMap::new();
            for (exp, series) in &acc {
                for (block_exp, coeff, z_index) in &factor {
                    let mut new_exp = exp.clone();
                    for (pos, e) in positions.iter().zip(block_exp) {
                        new_exp[*pos] += e;
                    }
                    let contribution = series.mul(&z_series[*z_index]).scale(coeff);
                    match next.get_mut(&new_exp) {
                        Some(existing) => *existing = existing.add(&contribution),
                        None => {
                            next.insert(new_exp, contribution);
                        }
                    }
                }
            }
            acc = next;
        }

        // Extract [prod w_j^{x_j}]: the rising factorial over each j in
        // I^c supplies the complementary power with coefficient
        // A_{x_j}^{x_j - e_j}.
        let mut extracted = QSeries::zero(order);
        for (exp, series) in &acc {
            let mut a_coeff = Rat::one();
            for (pos, &e) in exp.iter().enumerate() {
                let need = p.x[comp[pos]] as i64 - e as i64;
                a_coeff *= Rat::from(tables[pos].coeff(need));
                if a_coeff.is_zero() {
                    break;
                }
            }
            if !a_coeff.is_zero() {
                extracted = extracted.add(&series.scale(&a_coeff));
            }
        }

        let coefficient = extracted.mul(&envelope).coeff(mu);
        let sign = neg_one_pow((s + il) as i64 - 1);
        let y_power = Rat::from(y).pow((s + il) as i64 - 2);
        value += sign * y_power * coefficient;
    }
    Ok(value)
}

/// Enumerates tuples `e` (aligned with `caps`) of nonnegative integers with
/// `sum(e) <= budget` and `e[j] <= caps[j]`, reporting each with its total.
fn exponent_tuples(
    budget: u32,
    caps: &[u32],
    pos: usize,
    tuple: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32], u32),
) {
    if pos == caps.len() {
        let total: u32 = tuple.iter().sum();
        emit(tuple, total);
        return;
    }
    let used: u32 = tuple[..pos].iter().sum();
    for e in 0..=(budget - used).min(caps[pos]) {
        tuple[pos] = e;
        exponent_tuples(budget, caps, pos + 1, tuple, emit);
    }
    tuple[pos] = 0;
}

/// The invariant `F` at a parameter-space point, summing `R_I` over all
/// subsets with `|I| <= m - 2`. The full equivariant invariant is
/// `F * t^{1 + sum(x) - y}`.
pub fn f_value(p: &LatticePoint) -> Result<Rat, Error> {
    f_value_with_order(p, 0)
}

/// [`f_value`] with a minimum series truncation order (see
/// [`r_i_series_value_with_order`]).
pub fn f_value_with_order(p: &LatticePoint, min_order: usize) -> Result<Rat, Error> {
    let m = p.m();
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    if !p.in_parameter_space() {
        return Err(Error::OutsideParameterSpace {
            bound: 1 + p.sum_x(),
            y: p.y,
        });
    }
    let mut total = Rat::zero();
    for subset in MarkSet::all_subsets(m) {
        if subset.len() + 2 <= m {
            total += r_i_series_value_with_order(p, subset, min_order)?;
        }
    }
    Ok(total)
}

/// Combinatorial type of a torus-fixed locus: marked points distributed
/// over vertices as singletons (one mark, which forces the edge degree to
/// be at least `x_i + 1`) and blocks (two or more marks), plus unmarked
/// vertices, with positive edge degrees summing to `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocGraph {
    /// `(mark index, edge degree)`, with `degree >= x_mark + 1`.
    pub singletons: Vec<(usize, u32)>,
    /// `(mark indices, edge degree)` with at least two marks each.
    pub blocks: Vec<(Vec<usize>, u32)>,
    /// Edge degrees of unmarked vertices, descending.
    pub unmarked: Vec<u32>,
    /// Order of the permutation symmetry group of the unmarked degrees.
    pub aut: Int,
}

impl LocGraph {
    pub fn total_degree(&self) -> u64 {
        self.singletons.iter().map(|&(_, d)| d as u64).sum::<u64>()
            + self.blocks.iter().map(|&(_, d)| d as u64).sum::<u64>()
            + self.unmarked.iter().map(|&d| d as u64).sum::<u64>()
    }
}

fn visit_loc_graphs(p: &LatticePoint, emit: &mut impl FnMut(LocGraph)) {
    let m = p.m();
    let y = p.y() as u64;
    for singleton_set in MarkSet::all_subsets(m) {
        let singletons = singleton_set.indices();
        // each singleton mark needs degree >= x_i + 1; smaller degrees
        // contribute zero and are skipped outright
        let singleton_min: u64 = singletons.iter().map(|&i| p.x[i] as u64 + 1).sum();
        if singleton_min > y {
            continue;
        }
        let comp = singleton_set.complement(m).indices();
        for partition in partitions_ge2(&comp) {
            let blocks = partition.blocks();
            if singleton_min + blocks.len() as u64 > y {
                continue;
            }
            let mut degrees: Vec<u32> = Vec::with_capacity(singletons.len() + blocks.len());
            assign_degrees(p, &singletons, blocks, &mut degrees, emit);
        }
    }
}

fn assign_degrees(
    p: &LatticePoint,
    singletons: &[usize],
    blocks: &[Vec<usize>],
    degrees: &mut Vec<u32>,
    emit: &mut impl FnMut(LocGraph),
) {
    let slot = degrees.len();
    let total_slots = singletons.len() + blocks.len();
    let assigned: u64 = degrees.iter().map(|&d| d as u64).sum();
    if slot == total_slots {
        let remainder = (p.y() as u64 - assigned) as u32;
        for (unmarked, aut) in unmarked_degree_multisets(remainder) {
            emit(LocGraph {
                singletons: singletons
                    .iter()
                    .zip(&degrees[..singletons.len()])
                    .map(|(&i, &d)| (i, d))
                    .collect(),
                blocks: blocks
                    .iter()
                    .zip(&degrees[singletons.len()..])
                    .map(|(b, &d)| (b.clone(), d))
                    .collect(),
                unmarked,
                aut,
            });
        }
        return;
    }
    let min_here = if slot < singletons.len() {
        p.x[singletons[slot]] as u64 + 1
    } else {
        1
    };
    // leave room for the minimum degree of every later slot
    let later_min: u64 = (slot + 1..total_slots)
        .map(|t| {
            if t < singletons.len() {
                p.x[singletons[t]] as u64 + 1
            } else {
                1
            }
        })
        .sum();
    let budget = p.y() as u64 - assigned;
    if min_here + later_min > budget {
        return;
    }
    let max_here = budget - later_min;
    for d in (min_here..=max_here).rev() {
        degrees.push(d as u32);
        assign_degrees(p, singletons, blocks, degrees, emit);
        degrees.pop();
    }
}

/// All localization graphs for the point `p`, each combinatorial type
/// exactly once. Small-scale convenience; the oracle itself streams.
pub fn enumerate_loc_graphs(p: &LatticePoint) -> Vec<LocGraph> {
    let mut out = Vec::new();
    visit_loc_graphs(p, &mut |g| out.push(g));
    out
}

/// The exact (t-stripped) contribution of one localization graph:
///
/// ```text
/// [prod_{i in I^c} w_i^{x_i}] prod_{i in I^c} (w_i+1)_{x_i}
///   (-1)^{k_1+|I|-1} y^{k_1+|I|-2}
///   prod_{singletons} d^{d-x-1} / (d-x-1)!
///   (1/|Aut|) prod_{unmarked} ( -y d^{d-1} / d! )
///   prod_{blocks} (d^{d+1} / d!) (sum_{i in block} w_i + d)^{|block|-2}
/// ```
pub fn graph_contribution(graph: &LocGraph, p: &LatticePoint) -> Rat {
    debug_assert_eq!(graph.total_degree(), p.y() as u64);
    let y = p.y();
    let k1 = graph.blocks.len();
    let il = graph.singletons.len();

    let mut value = neg_one_pow((k1 + il) as i64 - 1) * Rat::from(y).pow((k1 + il) as i64 - 2)
        / Rat::from(graph.aut.clone());

    for &(mark, d) in &graph.singletons {
        debug_assert!(d > p.x[mark]);
        let e = (d - p.x[mark] - 1) as u64;
        value *= Rat::new(int_pow(&Int::from(d), e), factorial(e));
    }
    for &d in &graph.unmarked {
        value *=
            -Rat::from(y) * Rat::new(int_pow(&Int::from(d), d as u64 - 1), factorial(d as u64));
    }
    for (block, d) in &graph.blocks {
        value *= Rat::new(int_pow(&Int::from(*d), *d as u64 + 1), factorial(*d as u64));
        value *= block_vertex_factor(block, *d, &p.x);
    }
    value
}

/// The monomial extraction attached to a block vertex, expanded through
/// string and dilaton relations into
///
/// ```text
/// sum over (s_i >= 0, sum s_i <= n-2) of
///   (n-2)! / ((n-2-sum)! prod s_i!) d^{n-2-sum} prod_i A_{x_i}^{x_i-s_i}
/// ```
fn block_vertex_factor(block: &[usize], d: u32, x: &[u32]) -> Rat {
    let n = block.len();
    debug_assert!(n >= 2);
    let k = (n - 2) as u32;
    let tables: Vec<RisingFactorialTable> = block
        .iter()
        .map(|&i| rising_factorial_coeffs(x[i]))
        .collect();
    let caps: Vec<u32> = block.iter().map(|&i| x[i].min(k)).collect();
    let mut total = Rat::zero();
    let mut tuple = vec![0u32; n];
    exponent_tuples(k, &caps, 0, &mut tuple, &mut |s, used| {
        let mut term = Rat::new(factorial(k as u64), factorial((k - used) as u64))
            * Rat::from(int_pow(&Int::from(d), (k - used) as u64));
        for (j, &sj) in s.iter().enumerate() {
            term *= Rat::from(tables[j].coeff(x[block[j]] as i64 - sj as i64))
                / Rat::from(factorial(sj as u64));
        }
        total += term;
    });
    total
}

/// Independent evaluation of `F` as the sum of [`graph_contribution`] over
/// every localization graph of `p`. Must agree with [`f_value`].
pub fn f_graph_oracle(p: &LatticePoint) -> Result<Rat, Error> {
    let m = p.m();
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    if !p.in_parameter_space() {
        return Err(Error::OutsideParameterSpace {
            bound: 1 + p.sum_x(),
            y: p.y,
        });
    }
    let mut total = Rat::zero();
    visit_loc_graphs(p, &mut |g| total += graph_contribution(&g, p));
    Ok(total)
}

/// The stationary descendant value at the dimension boundary: for
/// `d = 1 + sum(l)` the non-equivariant invariant equals
/// `d^{m-2} / (l_1! ... l_m!)`. Defined for any `m >= 1`; at `m = 1` the
/// negative power of `d` is an exact rational.
pub fn descendant_value(l: &[u32]) -> Rat {
    assert!(!l.is_empty(), "need at least one insertion");
    let d: u64 = 1 + l.iter().map(|&v| v as u64).sum::<u64>();
    let mut value = Rat::from(d).pow(l.len() as i64 - 2);
    for &li in l {
        value /= Rat::from(factorial(li as u64));
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(x: &[u32], y: u32) -> LatticePoint {
        LatticePoint::new(x.to_vec(), y).unwrap()
    }

    #[test]
    fn mark_set_basics() {
        let s = MarkSet::from_one_based(&[1, 3], 4).unwrap();
        assert_eq!(s.indices(), vec![0, 2]);
        assert_eq!(s.one_based(), vec![1, 3]);
        assert_eq!(s.complement(4).one_based(), vec![2, 4]);
        assert_eq!(s.to_string(), "{1,3}");
        assert!(MarkSet::from_one_based(&[5], 4).is_err());
        assert!(MarkSet::from_one_based(&[0], 4).is_err());
        assert_eq!(MarkSet::all_subsets(3).count(), 8);
    }

    #[test]
    fn lattice_point_canonicalizes() {
        let p = point(&[1, 3, 0], 2);
        assert_eq!(p.x(), &[3, 1, 0]);
        assert_eq!(p.t_exponent(), 3);
        assert!(p.in_parameter_space());
        assert!(LatticePoint::new(vec![1], 0).is_err());
        assert!(!point(&[0, 0], 5).in_parameter_space());
    }

    #[test]
    fn r_i_m2_empty_set_is_one() {
        for (x1, x2, y) in [(0, 0, 1), (3, 2, 4), (5, 5, 11), (10, 0, 7)] {
            let p = point(&[x1, x2], y);
            assert!(p.in_parameter_space());
            assert_eq!(
                r_i_series_value(&p, MarkSet::empty()).unwrap(),
                Rat::one(),
                "at {p}"
            );
        }
    }

    #[test]
    fn r_i_negative_exponent_vanishes() {
        // y - x_1 - 1 < 0
        let p = point(&[3, 1, 0], 2);
        assert_eq!(
            r_i_series_value(&p, MarkSet::from_indices(&[0])).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn r_i_large_subsets_vanish_on_parameter_space() {
        for m in 2..=4usize {
            for y in 1..=4u32 {
                let p = point(&vec![1; m], y);
                if !p.in_parameter_space() {
                    continue;
                }
                for subset in MarkSet::all_subsets(m) {
                    if subset.len() + 2 > m {
                        assert_eq!(
                            r_i_series_value(&p, subset).unwrap(),
                            Rat::zero(),
                            "m = {m}, I = {subset}, p = {p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn r_i_rejects_bad_subset() {
        let p = point(&[1, 1], 2);
        assert!(r_i_series_value(&p, MarkSet::from_indices(&[3])).is_err());
    }

    #[test]
    fn f_value_fixtures() {
        assert_eq!(f_value(&point(&[3, 2], 4)).unwrap(), Rat::one());
        assert_eq!(f_value(&point(&[1, 1, 1], 2)).unwrap(), Rat::from(6));
        assert_eq!(f_value(&point(&[3, 1, 0], 2)).unwrap(), Rat::from(9));
    }

    #[test]
    fn f_value_domain_errors() {
        assert!(matches!(
            f_value(&point(&[0, 0], 5)),
            Err(Error::OutsideParameterSpace { .. })
        ));
        assert!(matches!(
            f_value(&point(&[4], 2)),
            Err(Error::TooFewMarks(1))
        ));
    }

    #[test]
    fn m2_flatness_sample() {
        for x1 in 0..=6u32 {
            for x2 in 0..=x1 {
                for y in 1..=(1 + x1 + x2) {
                    let p = point(&[x1, x2], y);
                    assert_eq!(f_value(&p).unwrap(), Rat::one(), "at {p}");
                }
            }
        }
    }

    #[test]
    fn graph_enumeration_fixtures() {
        let graphs = enumerate_loc_graphs(&point(&[0, 0], 1));
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].blocks, vec![(vec![0, 1], 1)]);
        assert!(graphs[0].singletons.is_empty());
        assert!(graphs[0].unmarked.is_empty());

        let graphs = enumerate_loc_graphs(&point(&[0, 0], 2));
        assert_eq!(graphs.len(), 3);
        assert!(graphs
            .iter()
            .any(|g| g.blocks == vec![(vec![0, 1], 2)] && g.unmarked.is_empty()));
        assert!(graphs
            .iter()
            .any(|g| g.blocks == vec![(vec![0, 1], 1)] && g.unmarked == vec![1]));
        assert!(graphs
            .iter()
            .any(|g| g.singletons == vec![(0, 1), (1, 1)] && g.blocks.is_empty()));

        let graphs = enumerate_loc_graphs(&point(&[0, 0, 0], 1));
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].blocks, vec![(vec![0, 1, 2], 1)]);
    }

    #[test]
    fn graph_degrees_always_sum_to_y() {
        let p = point(&[1, 1, 0], 4);
        let graphs = enumerate_loc_graphs(&p);
        assert!(!graphs.is_empty());
        for g in &graphs {
            assert_eq!(g.total_degree(), 4);
            for &(mark, d) in &g.singletons {
                assert!(d > p.x()[mark]);
            }
            for (block, _) in &g.blocks {
                assert!(block.len() >= 2);
            }
        }
    }

    #[test]
    fn graph_contribution_fixtures() {
        let p = point(&[0, 0], 1);
        let g = LocGraph {
            singletons: vec![],
            blocks: vec![(vec![0, 1], 1)],
            unmarked: vec![],
            aut: Int::from(1),
        };
        assert_eq!(graph_contribution(&g, &p), Rat::one());

        // an unmarked vertex of degree 1 multiplies by -y
        let p2 = point(&[0, 0], 2);
        let g2 = LocGraph {
            singletons: vec![],
            blocks: vec![(vec![0, 1], 1)],
            unmarked: vec![1],
            aut: Int::from(1),
        };
        assert_eq!(graph_contribution(&g2, &p2), -Rat::one());

        // boundary singleton degree d = x + 1 contributes a factor 1
        let p3 = point(&[1, 1, 0], 3);
        let g3 = LocGraph {
            singletons: vec![(2, 1)],
            blocks: vec![(vec![0, 1], 2)],
            unmarked: vec![],
            aut: Int::from(1),
        };
        // sign (-1)^{1+1-1} = -1, y^0 = 1, block 2^3/2! = 4,
        // [w1 w2] (w1+1)(w2+1)(w1+w2+2)^0 = 1, so the total is -4
        assert_eq!(graph_contribution(&g3, &p3), Rat::from(-4));
    }

    #[test]
    fn oracle_fixtures() {
        assert_eq!(f_graph_oracle(&point(&[0, 0], 1)).unwrap(), Rat::one());
        assert_eq!(f_graph_oracle(&point(&[1, 1], 3)).unwrap(), Rat::one());
        assert_eq!(f_graph_oracle(&point(&[1, 1, 1], 2)).unwrap(), Rat::from(6));
    }

    #[test]
    fn oracle_agrees_with_series_path_small() {
        for m in 2..=3usize {
            for xs in crate::combinatorics::descending_tuples(m, 3) {
                for y in 1..=4u32 {
                    let p = LatticePoint::new(xs.clone(), y).unwrap();
                    if !p.in_parameter_space() {
                        continue;
                    }
                    assert_eq!(f_value(&p).unwrap(), f_graph_oracle(&p).unwrap(), "at {p}");
                }
            }
        }
    }

    #[test]
    fn full_sum_vanishes_outside_parameter_space() {
        // y >= sum(x_i + 1): the sum of R_I over all subsets is zero
        for (xs, y) in [(vec![0u32, 0], 2u32), (vec![1, 0], 4), (vec![0, 0, 0], 3)] {
            let m = xs.len();
            let p = LatticePoint::new(xs, y).unwrap();
            assert!(p.y() as u64 >= p.sum_x() + m as u64);
            let mut total = Rat::zero();
            for subset in MarkSet::all_subsets(m) {
                total += r_i_series_value(&p, subset).unwrap();
            }
            assert_eq!(total, Rat::zero(), "at {p}");
        }
    }

    #[test]
    fn descendant_values() {
        assert_eq!(descendant_value(&[1, 1]), Rat::one());
        assert_eq!(descendant_value(&[2]), Rat::ratio(1, 6));
        assert_eq!(descendant_value(&[2, 1, 0]), Rat::from(2));
    }
}
