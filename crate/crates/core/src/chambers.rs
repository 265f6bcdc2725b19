//! The chamber structure of the parameter space and the closed polynomial
//! form of the invariant.
//!
//! The parameter space of points `(x_1 >= ... >= x_m >= 0; y >= 1)` with
//! `1 + sum(x) >= y` is cut by the resonance walls `sum_{i in I} x_i = y`
//! over subsets `1 <= |I| <= m-2`. On the closure of each chamber the
//! invariant `F` agrees with a polynomial of total degree at most `2m-4`:
//!
//! - [`r_i_poly`] expands one coefficient extraction `R_I` into its
//!   polynomial form, valid wherever `sum_{i in I} x_i <= y`;
//! - [`chamber_poly`] sums those over the subsets lying below `y` in the
//!   chamber ([`ChamberSig`]);
//! - [`wall_crossing_poly`] is the difference of the two polynomials on
//!   either side of one wall, and equals `r_i_poly` for that wall;
//! - [`totally_negative_poly`] is the closed form
//!   `y^{m-2} C(1 + sum(x) - y + m - 2, m - 2)` valid on the chamber where
//!   every resonance sum stays below `y`.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{factorial, falling_product, int_pow, neg_one_pow, FallingProduct, Int, Rat};
use crate::combinatorics::{descending_tuples, partitions_ge2, stirling_poly};
use crate::error::Error;
use crate::invariants::{LatticePoint, MarkSet};
use crate::series::q_poly;
use crate::unipoly::UniPoly;

/// Exponent vector of one monomial; the last slot is the power of `y`,
/// the first `m` slots are the powers of `x_1 .. x_m`. Ordered by total
/// degree first (graded lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial over [`Rat`] in `x_1, ..., x_m, y`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    marks: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(marks: usize) -> Self {
        MultiPoly {
            marks,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(marks: usize, c: Rat) -> Self {
        let mut p = Self::zero(marks);
        p.insert(Monomial(vec![0; marks + 1]), c);
        p
    }

    pub fn one(marks: usize) -> Self {
        Self::constant(marks, Rat::one())
    }

    /// The variable `x_{i+1}` (0-based `i < m`).
    pub fn xvar(marks: usize, i: usize) -> Self {
        assert!(i < marks);
        Self::var_index(marks, i)
    }

    /// The variable `y`.
    pub fn yvar(marks: usize) -> Self {
        Self::var_index(marks, marks)
    }

    fn var_index(marks: usize, index: usize) -> Self {
        let mut exps = vec![0; marks + 1];
        exps[index] = 1;
        let mut p = Self::zero(marks);
        p.insert(Monomial(exps), Rat::one());
        p
    }

    /// Substitutes a univariate polynomial into variable `index`
    /// (`0..m` for the `x` variables, `m` for `y`).
    pub fn from_unipoly(marks: usize, index: usize, poly: &UniPoly) -> Self {
        assert!(index <= marks);
        let mut p = Self::zero(marks);
        for (k, c) in poly.terms() {
            let mut exps = vec![0; marks + 1];
            exps[index] = k as u32;
            p.insert(Monomial(exps), c.clone());
        }
        p
    }

    pub fn marks(&self) -> usize {
        self.marks
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rat {
        assert_eq!(exponents.len(), self.marks + 1);
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, monomial: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&monomial) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&monomial);
                }
            }
            None => {
                self.terms.insert(monomial, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.marks, other.marks);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            marks: self.marks,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.marks);
        }
        MultiPoly {
            marks: self.marks,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.marks, other.marks);
        let mut out = Self::zero(self.marks);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.marks);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at integer coordinates.
    pub fn eval(&self, x: &[u32], y: u32) -> Rat {
        assert_eq!(x.len(), self.marks);
        let mut total = Rat::zero();
        for (mono, c) in &self.terms {
            let mut term = c.clone();
            for (index, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if index < self.marks { x[index] } else { y };
                term *= Rat::from(int_pow(&Int::from(base), e as u64));
            }
            total += term;
        }
        total
    }

    pub fn eval_point(&self, p: &LatticePoint) -> Rat {
        self.eval(p.x(), p.y())
    }
}

impl FallingProduct for MultiPoly {
    fn one_like(&self) -> Self {
        Self::one(self.marks)
    }
    fn mul_with(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn sub_one(&self) -> Self {
        self.sub(&Self::one(self.marks))
    }
}

impl fmt::Display for MultiPoly {
    /// Expanded monomial form, highest graded-lex terms first, e.g.
    /// `-1/2*y^2 + x1*y + 1/2*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (mono, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (index, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                if index < self.marks {
                    vars.push_str(&format!("x{}", index + 1));
                } else {
                    vars.push('y');
                }
                if e > 1 {
                    vars.push_str(&format!("^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{magnitude}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// All resonance subsets for `m` marks: `1 <= |I| <= m-2`, ordered by size
/// then by lowest indices.
pub fn resonances(m: usize) -> Vec<MarkSet> {
    let mut out: Vec<MarkSet> = MarkSet::all_subsets(m)
        .filter(|s| !s.is_empty() && s.len() + 2 <= m)
        .collect();
    out.sort();
    out
}

/// Which side of each resonance wall a chamber lies on: `below` holds the
/// subsets with `sum_{i in I} x_i < y` throughout the chamber. The empty
/// subset is below every `y >= 1` and is left implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChamberSig {
    m: usize,
    below: BTreeSet<MarkSet>,
}

impl ChamberSig {
    pub fn new(m: usize, below: BTreeSet<MarkSet>) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::TooFewMarks(m));
        }
        for subset in &below {
            subset.validate(m)?;
            if subset.is_empty() || subset.len() + 2 > m {
                return Err(Error::NotAResonance {
                    size: subset.len(),
                    m,
                });
            }
        }
        Ok(ChamberSig { m, below })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Resonances with `sum x_i < y` in the chamber.
    pub fn below(&self) -> &BTreeSet<MarkSet> {
        &self.below
    }

    /// Resonances with `sum x_i > y` in the chamber.
    pub fn above(&self) -> Vec<MarkSet> {
        resonances(self.m)
            .into_iter()
            .filter(|s| !self.below.contains(s))
            .collect()
    }

    /// Subset consistency: a subset of a below-resonance has a smaller sum,
    /// so it must be below as well.
    pub fn is_monotone(&self) -> bool {
        for subset in &self.below {
            for sub in MarkSet::all_subsets(self.m) {
                if sub.bits() & subset.bits() == sub.bits()
                    && !sub.is_empty()
                    && sub.len() + 2 <= self.m
                    && !self.below.contains(&sub)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `p` lies in the closed chamber (weak inequalities).
    pub fn contains_in_closure(&self, p: &LatticePoint) -> bool {
        if p.m() != self.m || !p.in_parameter_space() {
            return false;
        }
        resonances(self.m).into_iter().all(|subset| {
            let sum = p.resonance_sum(subset);
            if self.below.contains(&subset) {
                sum <= p.y() as u64
            } else {
                sum >= p.y() as u64
            }
        })
    }
}

/// Location of a parameter-space point relative to the resonance walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointLocation {
    /// Interior of the chamber with the given signature.
    Interior(ChamberSig),
    /// On one or more walls; the point lies in the closure of every
    /// chamber obtained by distributing `walls` across the two sides.
    OnWall {
        below: BTreeSet<MarkSet>,
        walls: Vec<MarkSet>,
    },
}

/// Classifies a parameter-space point by the sign of `y - sum_{i in I} x_i`
/// over every resonance subset.
pub fn chamber_of(p: &LatticePoint) -> Result<PointLocation, Error> {
    let m = p.m();
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    if !p.in_parameter_space() {
        return Err(Error::OutsideParameterSpace {
            bound: 1 + p.sum_x(),
            y: p.y(),
        });
    }
    let mut below = BTreeSet::new();
    let mut walls = Vec::new();
    for subset in resonances(m) {
        use std::cmp::Ordering::*;
        match p.resonance_sum(subset).cmp(&(p.y() as u64)) {
            Less => {
                below.insert(subset);
            }
            Equal => walls.push(subset),
            Greater => {}
        }
    }
    if walls.is_empty() {
        Ok(PointLocation::Interior(ChamberSig { m, below }))
    } else {
        Ok(PointLocation::OnWall { below, walls })
    }
}

/// Per-block datum of the expansion: a choice of exponents `a_j` on the
/// block with `sum a_j <= |B| - 2`.
struct BlockChoice {
    a: Vec<u32>,
    multinomial: Rat,
    z_order: u32,
}

fn block_choices(block_len: usize, budget: u32) -> Vec<BlockChoice> {
    fn rec(len: usize, budget: u32, tuple: &mut Vec<u32>, out: &mut Vec<BlockChoice>, kb: u32) {
        if tuple.len() == len {
            let total: u32 = tuple.iter().sum();
            let mut denom = factorial((kb - total) as u64);
            for &a in tuple.iter() {
                denom *= factorial(a as u64);
            }
            out.push(BlockChoice {
                a: tuple.clone(),
                multinomial: Rat::new(factorial(kb as u64), denom),
                z_order: kb - total,
            });
            return;
        }
        let used: u32 = tuple.iter().sum();
        for a in 0..=(budget - used) {
            tuple.push(a);
            rec(len, budget, tuple, out, kb);
            tuple.pop();
        }
    }
    let mut out = Vec::new();
    rec(block_len, budget, &mut Vec::new(), &mut out, budget);
    out
}

/// The polynomial form of the coefficient extraction `R_I`, of total
/// degree at most `2m-4`, valid at every parameter-space point with
/// `sum_{i in I} x_i <= y` (and vanishing on the strip
/// `sum x_i <= y < sum (x_i + 1)` where the series extraction is zero).
///
/// Built by the explicit expansion: Stirling polynomials supply the
/// rising-factorial coefficients, the `Q_k` polynomials supply the
/// operator numerators, and each `W^D` term turns into a falling-product
/// binomial via the closed coefficient formula. In the `s = 1, I = empty`
/// case the prefactor `1/y` cancels symbolically against the one factor of
/// the falling product that is identically `y`.
pub fn r_i_poly(m: usize, subset: MarkSet) -> Result<MultiPoly, Error> {
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    subset.validate(m)?;
    let il = subset.len();
    if il + 2 > m {
        return Err(Error::SubsetTooLarge {
            size: il,
            limit: m as i64 - 2,
        });
    }

    let comp = subset.complement(m).indices();
    let y_poly = MultiPoly::yvar(m);

    // mu = y - sum_{i in I} (x_i + 1) as a polynomial
    let mut mu_poly = y_poly.clone();
    for i in subset.iter() {
        mu_poly = mu_poly.sub(&MultiPoly::xvar(m, i));
    }
    mu_poly = mu_poly.sub(&MultiPoly::constant(m, Rat::from(il as i64)));

    let mut stirling_cache: BTreeMap<u32, UniPoly> = BTreeMap::new();

    let mut result = MultiPoly::zero(m);
    for partition in partitions_ge2(&comp) {
        let blocks = partition.blocks();
        let s = blocks.len();
        let sign = neg_one_pow((s + il) as i64 - 1);
        let special = s == 1 && il == 0;

        let per_block: Vec<Vec<BlockChoice>> = blocks
            .iter()
            .map(|b| block_choices(b.len(), (b.len() - 2) as u32))
            .collect();

        let mut indices = vec![0usize; s];
        loop {
            let choices: Vec<&BlockChoice> = indices
                .iter()
                .zip(&per_block)
                .map(|(&i, v)| &v[i])
                .collect();

            let mut coefficient = sign.clone();
            let mut stirling_factor = MultiPoly::one(m);
            let mut w_numerator = UniPoly::one();
            let mut b_sum = il;
            for (block, choice) in blocks.iter().zip(&choices) {
                coefficient *= &choice.multinomial;
                for (&mark, &a) in block.iter().zip(&choice.a) {
                    let poly = stirling_cache
                        .entry(a)
                        .or_insert_with(|| stirling_poly(a))
                        .clone();
                    stirling_factor = stirling_factor.mul(&MultiPoly::from_unipoly(m, mark, &poly));
                }
                w_numerator = w_numerator
                    .mul(&UniPoly::identity())
                    .mul(&q_poly(choice.z_order));
                // 2|B| - 1 - 2 sum_{j in B} a_j = 3 + 2 (|B| - 2 - sum a)
                b_sum += 3 + 2 * choice.z_order as usize;
            }
            // b_sum = |I| + sum_r (2|B_r| - 1 - 2 sum_{j in B_r} a_j)
            let count = b_sum - 2;
            let count_fact = Rat::from(factorial(count as u64));

            let mut inner = MultiPoly::zero(m);
            for (d_power, c) in w_numerator.terms() {
                if special {
                    // Y = count + y - D; the factor at offset count - D is
                    // exactly y and cancels the 1/y prefactor
                    let skip = count - d_power;
                    debug_assert!(d_power >= 1 && skip < count);
                    let mut product = MultiPoly::one(m);
                    for t in 0..count {
                        if t == skip {
                            continue;
                        }
                        let shift = skip as i64 - t as i64;
                        product =
                            product.mul(&y_poly.add(&MultiPoly::constant(m, Rat::from(shift))));
                    }
                    inner = inner.add(&product.scale(&(c / &count_fact)));
                } else {
                    // X = count + mu - D, expanded as a falling product
                    let x_poly = mu_poly.add(&MultiPoly::constant(
                        m,
                        Rat::from(count as i64 - d_power as i64),
                    ));
                    let fp = falling_product(&x_poly, count as u64);
                    inner = inner.add(&fp.scale(&(c / &count_fact)));
                }
            }
            if !special {
                inner = inner.mul(&y_poly.pow((s + il - 2) as u32));
            }
            result = result.add(&stirling_factor.mul(&inner).scale(&coefficient));

            // advance the mixed-radix index over per-block choices
            let mut carry = 0;
            loop {
                if carry == s {
                    break;
                }
                indices[carry] += 1;
                if indices[carry] < per_block[carry].len() {
                    break;
                }
                indices[carry] = 0;
                carry += 1;
            }
            if carry == s {
                break;
            }
        }
    }
    Ok(result)
}

/// The chamber polynomial: the sum of [`r_i_poly`] over the empty set and
/// every below-resonance of the signature. Total degree at most `2m-4`.
pub fn chamber_poly(sig: &ChamberSig) -> MultiPoly {
    let m = sig.m;
    let mut total = r_i_poly(m, MarkSet::empty()).expect("empty subset is always valid");
    for subset in &sig.below {
        total = total.add(&r_i_poly(m, *subset).expect("validated resonance"));
    }
    total
}

/// The wall-crossing polynomial across `H_I`: the difference
/// `P_{c1} - P_{c2}` where `sum_{i in I} x_i < y` holds in `c1`. Equals
/// [`r_i_poly`] of the wall subset.
pub fn wall_crossing_poly(m: usize, subset: MarkSet) -> Result<MultiPoly, Error> {
    subset.validate(m)?;
    if subset.is_empty() || subset.len() + 2 > m {
        return Err(Error::NotAResonance {
            size: subset.len(),
            m,
        });
    }
    r_i_poly(m, subset)
}

/// Signature of the totally negative chamber: every resonance below `y`.
pub fn totally_negative_sig(m: usize) -> Result<ChamberSig, Error> {
    ChamberSig::new(m, resonances(m).into_iter().collect())
}

/// Closed form on the totally negative chamber:
/// `y^{m-2} * prod_{j=0}^{m-3} (1 + sum(x) - y + m - 2 - j) / (m-2)!`,
/// i.e. `y^{m-2} C(1 + sum(x) - y + m - 2, m - 2)` wherever
/// `1 + sum(x) - y >= 0`. The constant `1` for `m = 2`.
pub fn totally_negative_poly(m: usize) -> Result<MultiPoly, Error> {
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    let mut start = MultiPoly::constant(m, Rat::from(m as i64 - 1));
    for i in 0..m {
        start = start.add(&MultiPoly::xvar(m, i));
    }
    start = start.sub(&MultiPoly::yvar(m));
    let product = falling_product(&start, m as u64 - 2);
    Ok(MultiPoly::yvar(m)
        .pow(m as u32 - 2)
        .mul(&product)
        .scale(&Rat::from(factorial(m as u64 - 2)).recip()))
}

/// All chamber signatures realized by a parameter-space lattice point with
/// every coordinate at most `bound`, each with the first witness found.
/// Purely empirical: no completeness claim beyond the bound. Sorted with
/// the most-below signatures (the totally negative chamber) first.
pub fn enumerate_chambers(m: usize, bound: u32) -> Result<Vec<(ChamberSig, LatticePoint)>, Error> {
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    assert!(bound >= 1);
    let mut found: BTreeMap<ChamberSig, LatticePoint> = BTreeMap::new();
    // scan small coordinates first so witnesses stay small
    for xs in descending_tuples(m, bound).iter().rev() {
        for y in 1..=bound {
            let p = LatticePoint::new(xs.clone(), y).expect("y >= 1");
            if !p.in_parameter_space() {
                continue;
            }
            if let PointLocation::Interior(sig) = chamber_of(&p)? {
                found.entry(sig).or_insert(p);
            }
        }
    }
    let mut out: Vec<(ChamberSig, LatticePoint)> = found.into_iter().collect();
    out.sort_by(|a, b| {
        b.0.below
            .len()
            .cmp(&a.0.below.len())
            .then_with(|| a.0.cmp(&b.0))
    });
    Ok(out)
}

/// A certified pair of neighbouring chambers: signatures differing in the
/// single resonance `wall`, with a shared lattice point on that wall (and
/// strictly inside with respect to every other resonance).
#[derive(Clone, Debug)]
pub struct AdjacentPair {
    /// The side where `sum_{i in wall} x_i < y`.
    pub below_side: ChamberSig,
    /// The side where `sum_{i in wall} x_i > y`.
    pub above_side: ChamberSig,
    pub wall: MarkSet,
    pub witness: LatticePoint,
}

/// Finds certified adjacent pairs among the given chambers. Candidate
/// pairs differ in exactly one resonance; certification requires a wall
/// lattice point (coordinates at most `bound`) lying in both closures.
pub fn adjacent_chamber_pairs(
    chambers: &[(ChamberSig, LatticePoint)],
    bound: u32,
) -> Vec<AdjacentPair> {
    let mut out = Vec::new();
    for (i, (sig_a, _)) in chambers.iter().enumerate() {
        for (sig_b, _) in chambers.iter().skip(i + 1) {
            let diff: Vec<MarkSet> = sig_a
                .below
                .symmetric_difference(&sig_b.below)
                .copied()
                .collect();
            let [wall] = diff.as_slice() else { continue };
            let (below_side, above_side) = if sig_a.below.contains(wall) {
                (sig_a, sig_b)
            } else {
                (sig_b, sig_a)
            };
            let common: BTreeSet<MarkSet> = below_side
                .below
                .intersection(&above_side.below)
                .copied()
                .collect();
            if let Some(witness) = wall_witness(below_side.m, *wall, &common, bound) {
                out.push(AdjacentPair {
                    below_side: below_side.clone(),
                    above_side: above_side.clone(),
                    wall: *wall,
                    witness,
                });
            }
        }
    }
    out
}

fn wall_witness(
    m: usize,
    wall: MarkSet,
    common_below: &BTreeSet<MarkSet>,
    bound: u32,
) -> Option<LatticePoint> {
    for xs in descending_tuples(m, bound).iter().rev() {
        for y in 1..=bound {
            let p = LatticePoint::new(xs.clone(), y).expect("y >= 1");
            if !p.in_parameter_space() {
                continue;
            }
            if p.resonance_sum(wall) != y as u64 {
                continue;
            }
            let consistent = resonances(m).into_iter().all(|subset| {
                if subset == wall {
                    true
                } else if common_below.contains(&subset) {
                    p.resonance_sum(subset) < y as u64
                } else {
                    p.resonance_sum(subset) > y as u64
                }
            });
            if consistent {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::f_value;

    fn point(x: &[u32], y: u32) -> LatticePoint {
        LatticePoint::new(x.to_vec(), y).unwrap()
    }

    fn set(indices: &[usize]) -> MarkSet {
        MarkSet::from_indices(indices)
    }

    /// `(y - x_i)(y - x_i - 1) / 2` as a polynomial.
    fn half_square(m: usize, i: usize) -> MultiPoly {
        let d = MultiPoly::yvar(m).sub(&MultiPoly::xvar(m, i));
        d.mul(&d.sub(&MultiPoly::one(m))).scale(&Rat::ratio(1, 2))
    }

    /// The four m = 3 chamber polynomials in expanded form:
    /// `P = y (x1+x2+x3+2-y) + sum over crossed walls of half_square`.
    fn m3_table() -> Vec<MultiPoly> {
        let m = 3;
        let mut sum_x = MultiPoly::constant(m, Rat::from(2));
        for i in 0..m {
            sum_x = sum_x.add(&MultiPoly::xvar(m, i));
        }
        let tn = MultiPoly::yvar(m).mul(&sum_x.sub(&MultiPoly::yvar(m)));
        let c1 = tn.add(&half_square(m, 0));
        let c2 = c1.add(&half_square(m, 1));
        let c3 = c2.add(&half_square(m, 2));
        vec![tn, c1, c2, c3]
    }

    #[test]
    fn multipoly_basics() {
        let m = 2;
        let p = MultiPoly::xvar(m, 0)
            .mul(&MultiPoly::yvar(m))
            .add(&MultiPoly::constant(m, Rat::from(-3)));
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.eval(&[4, 7], 5), Rat::from(17));
        assert_eq!(p.to_string(), "x1*y - 3");
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&p).total_degree(), 0);
    }

    #[test]
    fn multipoly_display_order() {
        let m = 1;
        // y^2 stays ahead of x1 in graded-lex with y last
        let p = MultiPoly::yvar(m)
            .pow(2)
            .scale(&Rat::ratio(-1, 2))
            .add(&MultiPoly::xvar(m, 0));
        assert_eq!(p.to_string(), "-1/2*y^2 + x1");
    }

    #[test]
    fn resonance_lists() {
        assert!(resonances(2).is_empty());
        let m3: Vec<String> = resonances(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(m3, ["{1}", "{2}", "{3}"]);
        assert_eq!(resonances(4).len(), 10);
    }

    #[test]
    fn chamber_classification() {
        // all resonance sums below y
        let loc = chamber_of(&point(&[1, 1, 1], 2)).unwrap();
        match loc {
            PointLocation::Interior(sig) => {
                assert_eq!(sig.below().len(), 3);
                assert!(sig.is_monotone());
            }
            _ => panic!("expected interior"),
        }

        let loc = chamber_of(&point(&[3, 1, 0], 2)).unwrap();
        match loc {
            PointLocation::Interior(sig) => {
                assert_eq!(
                    sig.below().iter().copied().collect::<Vec<_>>(),
                    vec![set(&[1]), set(&[2])]
                );
            }
            _ => panic!("expected interior"),
        }

        let loc = chamber_of(&point(&[2, 1, 0], 2)).unwrap();
        match loc {
            PointLocation::OnWall { walls, .. } => assert_eq!(walls, vec![set(&[0])]),
            _ => panic!("expected wall"),
        }

        assert!(chamber_of(&point(&[0, 0], 5)).is_err());
    }

    #[test]
    fn r_i_poly_m2_is_one() {
        let p = r_i_poly(2, MarkSet::empty()).unwrap();
        assert_eq!(p, MultiPoly::one(2));
    }

    #[test]
    fn r_i_poly_m3_singleton() {
        // R_{1} as a polynomial is -(y - x1)(y - x1 - 1)/2
        let p = r_i_poly(3, set(&[0])).unwrap();
        assert_eq!(p, half_square(3, 0).neg());
    }

    #[test]
    fn r_i_poly_m3_empty() {
        // y(y+1)/2 + sum_j x_j(x_j+1)/2; together with the three singleton
        // polynomials this reassembles the chamber table below
        let p = r_i_poly(3, MarkSet::empty()).unwrap();
        let m = 3;
        let y = MultiPoly::yvar(m);
        let mut expected = y.mul(&y.add(&MultiPoly::one(m))).scale(&Rat::ratio(1, 2));
        for i in 0..m {
            let x = MultiPoly::xvar(m, i);
            expected = expected.add(&x.mul(&x.add(&MultiPoly::one(m))).scale(&Rat::ratio(1, 2)));
        }
        assert_eq!(p, expected);
    }

    #[test]
    fn chamber_polys_match_m3_table() {
        let table = m3_table();
        let sigs = [
            vec![set(&[0]), set(&[1]), set(&[2])],
            vec![set(&[1]), set(&[2])],
            vec![set(&[2])],
            vec![],
        ];
        for (expected, below) in table.iter().zip(&sigs) {
            let sig = ChamberSig::new(3, below.iter().copied().collect()).unwrap();
            assert_eq!(&chamber_poly(&sig), expected);
        }
    }

    #[test]
    fn wall_crossing_fixtures() {
        assert_eq!(
            wall_crossing_poly(3, set(&[1])).unwrap(),
            half_square(3, 1).neg()
        );
        assert_eq!(
            wall_crossing_poly(3, set(&[2])).unwrap(),
            half_square(3, 2).neg()
        );
        assert!(wall_crossing_poly(3, set(&[0, 1])).is_err());
        assert!(wall_crossing_poly(3, MarkSet::empty()).is_err());
    }

    #[test]
    fn totally_negative_fixtures() {
        assert_eq!(totally_negative_poly(2).unwrap(), MultiPoly::one(2));
        assert_eq!(totally_negative_poly(3).unwrap(), m3_table()[0]);

        let p4 = totally_negative_poly(4).unwrap();
        assert_eq!(p4.eval(&[1, 1, 1, 1], 5), Rat::from(25));
        assert_eq!(
            p4.eval(&[1, 1, 1, 1], 5),
            f_value(&point(&[1, 1, 1, 1], 5)).unwrap()
        );
    }

    #[test]
    fn totally_negative_equals_chamber_sum() {
        for m in 2..=4usize {
            let sig = totally_negative_sig(m).unwrap();
            assert_eq!(
                chamber_poly(&sig),
                totally_negative_poly(m).unwrap(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn chamber_enumeration_counts() {
        let two = enumerate_chambers(2, 4).unwrap();
        assert_eq!(two.len(), 1);
        assert!(two[0].0.below().is_empty());

        let three = enumerate_chambers(3, 4).unwrap();
        assert_eq!(three.len(), 4);
        // most negative first
        assert_eq!(three[0].0.below().len(), 3);
        assert_eq!(three[3].0.below().len(), 0);
        for (sig, witness) in &three {
            assert!(sig.is_monotone());
            match chamber_of(witness).unwrap() {
                PointLocation::Interior(found) => assert_eq!(&found, sig),
                _ => panic!("witness on a wall"),
            }
        }
    }

    #[test]
    fn adjacency_and_wall_continuity_m3() {
        let chambers = enumerate_chambers(3, 5).unwrap();
        let pairs = adjacent_chamber_pairs(&chambers, 5);
        assert_eq!(pairs.len(), 3);
        for pair in &pairs {
            let diff = chamber_poly(&pair.below_side).sub(&chamber_poly(&pair.above_side));
            assert_eq!(diff, wall_crossing_poly(3, pair.wall).unwrap());
            assert_eq!(diff.eval_point(&pair.witness), Rat::zero());
        }
    }

    #[test]
    fn chamber_polys_evaluate_to_f_on_closures_m3() {
        let chambers = enumerate_chambers(3, 4).unwrap();
        for (sig, _) in &chambers {
            let poly = chamber_poly(sig);
            for xs in descending_tuples(3, 4) {
                for y in 1..=5u32 {
                    let p = LatticePoint::new(xs.clone(), y).unwrap();
                    if !p.in_parameter_space() || !sig.contains_in_closure(&p) {
                        continue;
                    }
                    assert_eq!(poly.eval_point(&p), f_value(&p).unwrap(), "at {p}");
                }
            }
        }
    }

    #[test]
    fn degree_bounds() {
        for m in 2..=4usize {
            let limit = 2 * m as u32 - 4;
            for subset in MarkSet::all_subsets(m) {
                if subset.len() + 2 > m {
                    continue;
                }
                assert!(r_i_poly(m, subset).unwrap().total_degree() <= limit);
            }
            assert!(totally_negative_poly(m).unwrap().total_degree() <= limit);
        }
    }
}
