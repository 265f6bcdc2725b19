//! Truncated exact power series in `q` and the calculus of the tree function
//!
//! ```text
//! W(q) = sum_{n>=1} n^{n-1} q^n / n!
//! ```
//!
//! which is the compositional inverse of `q = W e^{-W}` (and equals
//! `-LambertW(-q)`). Provides:
//!
//! - [`QSeries`]: truncated power series with exact rational coefficients
//! - [`tree_series`]: the expansion of `W(q)`
//! - [`exp_alpha_w_over_pow`]: the expansion of `e^{aW} / (1-W)^b`
//! - [`q_d_dq`]: the Euler operator `q d/dq`, which acts as
//!   `(W/(1-W)) d/dW` on series in `W`
//! - [`q_poly`]: the numerator polynomials `Q_k` with
//!   `(q d/dq)^k (W/(1-W)^3) = W Q_k(W) / (1-W)^{2k+3}`
//! - [`comb_coeff`]: the closed form
//!   `[q^mu] W^a e^{-mu W} / (1-W)^b = C(b-2+mu-a, b-2)`

use std::sync::Mutex;

use crate::arith::{binom_conv, factorial, int_pow, Int, Rat};
use crate::unipoly::UniPoly;

/// Polynomial in the symbol `W` with exact rational coefficients.
pub type WPoly = UniPoly;

/// Power series in `q`, exact through `q^order` and truncated beyond.
///
/// The coefficient vector always has length `order + 1`. Binary operations
/// truncate to the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from explicit coefficients `c_0 .. c_N`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics when `n` exceeds the truncation order;
    /// coefficients beyond the order are unknown, not zero.
    pub fn coeff(&self, n: usize) -> Rat {
        assert!(
            n <= self.order(),
            "coefficient {n} beyond truncation order {}",
            self.order()
        );
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        QSeries {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        QSeries {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(
            !c0.is_zero(),
            "series with zero constant term has no inverse"
        );
        let inv0 = c0.recip();
        let mut coeffs = vec![Rat::zero(); self.coeffs.len()];
        coeffs[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &coeffs[n - k];
            }
            coeffs[n] = -(acc * &inv0);
        }
        QSeries { coeffs }
    }

    /// `exp` of a series with zero constant term, via the recurrence
    /// `n f_n = sum_{k=1}^{n} k g_k f_{n-k}` coming from `f' = g' f`.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "exp needs a zero constant term to stay rational"
        );
        let mut coeffs = vec![Rat::zero(); self.coeffs.len()];
        coeffs[0] = Rat::one();
        for n in 1..self.coeffs.len() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += Rat::from(k as i64) * &self.coeffs[k] * &coeffs[n - k];
                }
            }
            coeffs[n] = acc / Rat::from(n as i64);
        }
        QSeries { coeffs }
    }
}

/// The tree function `W(q) = sum_{n>=1} n^{n-1} q^n / n!` through `q^order`.
pub fn tree_series(order: usize) -> QSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = Rat::new(int_pow(&Int::from(n), n as u64 - 1), factorial(n as u64));
    }
    QSeries { coeffs }
}

/// The Euler operator `q d/dq`: multiplies the n-th coefficient by `n`.
pub fn q_d_dq(f: &QSeries) -> QSeries {
    QSeries {
        coeffs: f
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| Rat::from(n as i64) * c)
            .collect(),
    }
}

/// The q-expansion of `e^{alpha W(q)} / (1 - W(q))^b` through `q^order`.
///
/// For `b = 1` the coefficient of `q^n` is `(n + alpha)^n / n!`.
pub fn exp_alpha_w_over_pow(alpha: i64, b: u32, order: usize) -> QSeries {
    let w = tree_series(order);
    let e = w.scale(&Rat::from(alpha)).exp();
    if b == 0 {
        return e;
    }
    let geom = QSeries::one(order).sub(&w).inverse();
    e.mul(&geom.pow(b))
}

static Q_POLY_CACHE: Mutex<Vec<WPoly>> = Mutex::new(Vec::new());

/// The polynomial `Q_k` with
/// `((W/(1-W)) d/dW)^k (W/(1-W)^3) = W Q_k(W) / (1-W)^{2k+3}`
/// and `deg Q_k <= k`.
///
/// Applying `(W/(1-W)) d/dW` to `W Q_m / (1-W)^{2m+3}` and collecting the
/// numerator over `(1-W)^{2m+5}` gives the recursion
///
/// ```text
/// Q_0     = 1
/// Q_{m+1} = (1-W) Q_m + W (1-W) Q_m' + (2m+3) W Q_m
/// ```
pub fn q_poly(k: u32) -> WPoly {
    let mut cache = Q_POLY_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(WPoly::one());
    }
    while cache.len() <= k as usize {
        let m = cache.len() - 1;
        let prev = cache.last().unwrap();
        let w = WPoly::identity();
        let one_minus_w = WPoly::one().sub(&w);
        let next = one_minus_w
            .mul(prev)
            .add(&w.mul(&one_minus_w).mul(&prev.derivative()))
            .add(&w.mul(prev).scale(&Rat::from(2 * m as i64 + 3)));
        cache.push(next);
    }
    cache[k as usize].clone()
}

/// Closed form for the coefficient extraction
/// `[q^mu] W^a e^{-mu W} / (1-W)^b = C(b-2+mu-a, b-2)`,
/// with the binomial taken under the extended convention of
/// [`binom_conv`]. Requires `b >= 1`.
pub fn comb_coeff(a: u64, mu: u64, b: u64) -> Rat {
    assert!(b >= 1, "comb_coeff needs b >= 1");
    binom_conv(b as i64 - 2 + mu as i64 - a as i64, b as i64 - 2)
}

/// Substitutes `W -> tree_series(order)` into `numerator` and multiplies by
/// `e^{alpha W} / (1-W)^b`; evaluates expressions of the shape
/// `P(W) e^{alpha W} / (1-W)^b` as q-series.
pub fn w_rational_to_qseries(
    numerator: &WPoly,
    exp_alpha: i64,
    pow_b: u32,
    order: usize,
) -> QSeries {
    let w = tree_series(order);
    let mut acc = QSeries::zero(order);
    for c in (0..=numerator.degree()).rev().map(|k| numerator.coeff(k)) {
        acc = acc.mul(&w).add(&QSeries::constant(c, order));
    }
    acc.mul(&exp_alpha_w_over_pow(exp_alpha, pow_b, order))
}
