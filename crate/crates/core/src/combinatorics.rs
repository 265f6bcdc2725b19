//! Combinatorial building blocks: Stirling-number tables from rising
//! factorials, set partitions whose blocks all have at least two elements,
//! and integer-partition enumeration with automorphism multiplicities.

use crate::arith::{binom_conv, factorial, falling_product, int_pow, neg_one_pow, Int, Rat};
use crate::unipoly::UniPoly;

/// Coefficients `A[b]` of the rising factorial
/// `(w+1)_l = (w+1)(w+2)...(w+l) = sum_b A[b] w^b`.
///
/// The `A[b]` are (unsigned) Stirling numbers; in particular `A[l] = 1` and
/// `A[0] = l!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RisingFactorialTable {
    l: u32,
    coeffs: Vec<Int>,
}

impl RisingFactorialTable {
    pub fn l(&self) -> u32 {
        self.l
    }

    /// `A[b]`, or zero outside `0..=l`.
    pub fn coeff(&self, b: i64) -> Int {
        if b < 0 {
            return Int::from(0);
        }
        self.coeffs.get(b as usize).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Evaluates `(w+1)_l` from the stored coefficients.
    pub fn eval(&self, w: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * w + Rat::from(c.clone());
        }
        acc
    }
}

/// Expands `(w+1)_l` into its coefficient table.
pub fn rising_factorial_coeffs(l: u32) -> RisingFactorialTable {
    let mut coeffs = vec![Int::from(1)];
    for t in 1..=l {
        // multiply by (w + t)
        let mut next = vec![Int::from(0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] += c * Int::from(t);
        }
        coeffs = next;
    }
    RisingFactorialTable { l, coeffs }
}

/// The polynomial in `x` of degree at most `2a` that equals `A_x^{x-a}`
/// (the coefficient of `w^{x-a}` in `(w+1)_x`) for every integer `x >= a`,
/// and vanishes at the integers `0 <= x < a`:
///
/// ```text
/// A_x^{x-a} = sum_{e=0}^{a} sum_{f=0}^{e}
///     (-1)^{f+a} C(e,f) C(x+e, a+e) C(x+a+1, a-e) f^{a+e} / e!
/// ```
///
/// The binomials with symbolic top entry are expanded as falling products,
/// so the result is a genuine polynomial. `0^0 = 1` here (the `f = 0` term
/// survives only when `a = e = 0`).
pub fn stirling_poly(a: u32) -> UniPoly {
    let x = UniPoly::identity();
    let mut result = UniPoly::zero();
    for e in 0..=a {
        let upper = falling_product(&x.add(&UniPoly::constant(Rat::from(e))), (a + e) as u64);
        let lower = falling_product(&x.add(&UniPoly::constant(Rat::from(a + 1))), (a - e) as u64);
        let shape = upper.mul(&lower);
        let denom = Rat::from(factorial(e as u64))
            * Rat::from(factorial((a + e) as u64))
            * Rat::from(factorial((a - e) as u64));
        for f in 0..=e {
            let power = if a + e == 0 {
                Int::from(1)
            } else {
                int_pow(&Int::from(f), (a + e) as u64)
            };
            let scalar =
                neg_one_pow((f + a) as i64) * binom_conv(e as i64, f as i64) * Rat::from(power)
                    / &denom;
            result = result.add(&shape.scale(&scalar));
        }
    }
    result
}

/// A partition of a finite index set into blocks of size at least two.
///
/// Canonical form: each block ascending, blocks ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition2 {
    blocks: Vec<Vec<usize>>,
}

impl Partition2 {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        if items.len() - i < k {
            break;
        }
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn partitions_ge2_rec(remaining: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Partition2>) {
    if remaining.is_empty() {
        out.push(Partition2 {
            blocks: acc.clone(),
        });
        return;
    }
    let first = remaining[0];
    let rest = &remaining[1..];
    // The least remaining element anchors its block; choose its co-members
    // (at least one, so every block has size >= 2), larger sets first.
    for size in (1..=rest.len()).rev() {
        for mates in combinations(rest, size) {
            let mut block = Vec::with_capacity(size + 1);
            block.push(first);
            block.extend_from_slice(&mates);
            let next: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|e| !mates.contains(e))
                .collect();
            acc.push(block);
            partitions_ge2_rec(&next, acc, out);
            acc.pop();
        }
    }
}

/// All partitions of `j` into blocks of size at least two, in canonical
/// order. A one-element set has none; the empty set has exactly one (the
/// partition with no blocks).
pub fn partitions_ge2(j: &[usize]) -> impl Iterator<Item = Partition2> {
    let mut elements = j.to_vec();
    elements.sort_unstable();
    elements.dedup();
    let mut out = Vec::new();
    let mut acc = Vec::new();
    partitions_ge2_rec(&elements, &mut acc, &mut out);
    out.into_iter()
}

/// All multisets of positive integers summing to `total` (the integer
/// partitions of `total`, parts descending), each with the order of its
/// permutation-symmetry group: the product over distinct values of
/// (multiplicity)!. `total = 0` yields the empty multiset with order 1.
pub fn unmarked_degree_multisets(total: u32) -> impl Iterator<Item = (Vec<u32>, Int)> {
    fn aut_order(parts: &[u32]) -> Int {
        let mut order = Int::from(1);
        let mut run = 0u64;
        for (i, &p) in parts.iter().enumerate() {
            run += 1;
            if i + 1 == parts.len() || parts[i + 1] != p {
                order *= factorial(run);
                run = 0;
            }
        }
        order
    }

    fn rec(total: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Int)>) {
        if total == 0 {
            out.push((current.clone(), aut_order(current)));
            return;
        }
        for part in (1..=max_part.min(total)).rev() {
            current.push(part);
            rec(total - part, part, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(total, total.max(1), &mut current, &mut out);
    out.into_iter()
}

/// All weakly decreasing tuples `(x_1 >= ... >= x_m)` with entries in
/// `0..=max`, in lexicographically decreasing order.
pub fn descending_tuples(m: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(slots: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            out.push(current.clone());
            return;
        }
        for v in (0..=cap).rev() {
            current.push(v);
            rec(slots - 1, v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_factorial_tables() {
        assert_eq!(rising_factorial_coeffs(0).coeffs(), &[Int::from(1)]);
        assert_eq!(
            rising_factorial_coeffs(2).coeffs(),
            &[Int::from(2), Int::from(3), Int::from(1)]
        );
        // (w+1)(w+2)(w+3) = w^3 + 6w^2 + 11w + 6, expanded by hand
        assert_eq!(
            rising_factorial_coeffs(3).coeffs(),
            &[Int::from(6), Int::from(11), Int::from(6), Int::from(1)]
        );
        for l in 0..=12u32 {
            let table = rising_factorial_coeffs(l);
            assert_eq!(table.coeff(l as i64), Int::from(1));
            assert_eq!(table.coeff(0), factorial(l as u64));
        }
    }

    #[test]
    fn rising_factorial_eval_matches_product() {
        // sum_b A_l^b w^b reproduces (w+1)_l at sampled integer points
        let mut state = 0x9e3779b97f4a7c15u64;
        for l in 0..=12u32 {
            let table = rising_factorial_coeffs(l);
            for _ in 0..20 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let w = Rat::from((state % 61) as i64 - 30);
                let mut direct = Rat::one();
                for t in 1..=l {
                    direct *= &w + Rat::from(t);
                }
                assert_eq!(table.eval(&w), direct, "l = {l}, w = {w}");
            }
        }
    }

    #[test]
    fn stirling_poly_special_values() {
        assert_eq!(stirling_poly(0), UniPoly::one());
        assert_eq!(stirling_poly(1).eval(&Rat::from(2)), Rat::from(3));
        assert_eq!(stirling_poly(2).eval(&Rat::from(1)), Rat::zero());
    }

    #[test]
    fn stirling_poly_matches_tables() {
        for a in 0..=5u32 {
            let poly = stirling_poly(a);
            assert!(poly.degree() <= 2 * a as usize);
            for x in 0..=12u32 {
                let expected = if x < a {
                    Rat::zero()
                } else {
                    Rat::from(rising_factorial_coeffs(x).coeff((x - a) as i64))
                };
                assert_eq!(
                    poly.eval(&Rat::from(x)),
                    expected,
                    "A_x^(x-a) mismatch at a = {a}, x = {x}"
                );
            }
        }
    }

    /// Brute-force oracle: all set partitions of {0..n-1} via assignment
    /// vectors in restricted-growth form, filtered to blocks of size >= 2.
    fn brute_force_ge2(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn rec(n: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
            if assign.len() == n {
                let nblocks = assign.iter().max().map_or(0, |m| m + 1);
                let mut blocks = vec![Vec::new(); nblocks];
                for (elem, &b) in assign.iter().enumerate() {
                    blocks[b].push(elem);
                }
                if blocks.iter().all(|b| b.len() >= 2) {
                    out.push(blocks);
                }
                return;
            }
            let next_free = assign.iter().max().map_or(0, |m| m + 1);
            for b in 0..=next_free {
                assign.push(b);
                rec(n, assign, out);
                assign.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn partitions_ge2_small_sets() {
        let one: Vec<Partition2> = partitions_ge2(&[4]).collect();
        assert!(one.is_empty());

        let two: Vec<Partition2> = partitions_ge2(&[1, 2]).collect();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].blocks(), &[vec![1, 2]]);

        let three: Vec<Partition2> = partitions_ge2(&[1, 2, 3]).collect();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].blocks(), &[vec![1, 2, 3]]);

        let four: Vec<Partition2> = partitions_ge2(&[1, 2, 3, 4]).collect();
        let blocks: Vec<&[Vec<usize>]> = four.iter().map(|p| p.blocks()).collect();
        assert_eq!(
            blocks,
            vec![
                &[vec![1, 2, 3, 4]][..],
                &[vec![1, 2], vec![3, 4]][..],
                &[vec![1, 3], vec![2, 4]][..],
                &[vec![1, 4], vec![2, 3]][..],
            ]
        );

        let empty: Vec<Partition2> = partitions_ge2(&[]).collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn partitions_ge2_counts_match_brute_force() {
        let expected = [1usize, 1, 4, 11, 41];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 2;
            let elements: Vec<usize> = (0..n).collect();
            let fast: Vec<Partition2> = partitions_ge2(&elements).collect();
            assert_eq!(fast.len(), count, "count for |J| = {n}");
            let mut slow = brute_force_ge2(n);
            slow.sort();
            let mut fast_blocks: Vec<Vec<Vec<usize>>> =
                fast.iter().map(|p| p.blocks().to_vec()).collect();
            fast_blocks.sort();
            assert_eq!(fast_blocks, slow, "partition sets differ for |J| = {n}");
        }
    }

    #[test]
    fn unmarked_multisets_small_totals() {
        let zero: Vec<_> = unmarked_degree_multisets(0).collect();
        assert_eq!(zero, vec![(vec![], Int::from(1))]);

        let three: Vec<_> = unmarked_degree_multisets(3).collect();
        assert_eq!(
            three,
            vec![
                (vec![3], Int::from(1)),
                (vec![2, 1], Int::from(1)),
                (vec![1, 1, 1], Int::from(6)),
            ]
        );

        let four: Vec<_> = unmarked_degree_multisets(4).collect();
        let two_two = four.iter().find(|(p, _)| p == &vec![2, 2]).unwrap();
        assert_eq!(two_two.1, Int::from(2));
    }

    #[test]
    fn unmarked_multisets_count_compositions() {
        // sum over multisets of the number of distinct orderings equals the
        // number of compositions of `total`: 2^(total-1) for total >= 1.
        for total in 0..=15u32 {
            let mut orderings = Rat::zero();
            for (parts, aut) in unmarked_degree_multisets(total) {
                orderings += Rat::from(factorial(parts.len() as u64)) / Rat::from(aut);
            }
            let expected = if total == 0 {
                Rat::one()
            } else {
                Rat::from(Int::from(1) << (total - 1))
            };
            assert_eq!(orderings, expected, "total = {total}");
        }
    }

    #[test]
    fn descending_tuples_ordered() {
        let tuples = descending_tuples(3, 2);
        assert_eq!(tuples.len(), 10); // multisets of size 3 from {0,1,2}
        assert!(tuples.iter().all(|t| t.windows(2).all(|w| w[0] >= w[1])));
        assert_eq!(tuples[0], vec![2, 2, 2]);
        assert_eq!(tuples.last().unwrap(), &vec![0, 0, 0]);
    }
}
