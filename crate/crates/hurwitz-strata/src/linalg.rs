//! Dense exact linear algebra over the rationals: rank, characteristic
//! polynomials, Sturm-certified real root isolation, and spectral-radius
//! estimates with explicit error bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.get(k, j);
                    *out.get_mut(i, j) += term;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn scale(&self, factor: &BigRational) -> Matrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= factor;
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(keep_rows.len(), keep_cols.len());
        for (i, &r) in keep_rows.iter().enumerate() {
            for (j, &c) in keep_cols.iter().enumerate() {
                *out.get_mut(i, j) = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Maximum absolute row sum; an upper bound for every eigenvalue
    /// modulus.
    pub fn infinity_norm(&self) -> BigRational {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).abs())
                    .sum::<BigRational>()
            })
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Maximum absolute column sum; also an eigenvalue modulus bound.
    pub fn one_norm(&self) -> BigRational {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).abs())
                    .sum::<BigRational>()
            })
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Rank by Gaussian elimination, exactly.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            for c in 0..m.cols {
                m.data.swap(rank * m.cols + c, pr * m.cols + c);
            }
            let inv = m.get(rank, col).recip();
            for c in col..m.cols {
                let scaled = m.get(rank, c) * &inv;
                *m.get_mut(rank, c) = scaled;
            }
            for r in 0..m.rows {
                if r != rank && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let delta = &factor * m.get(rank, c);
                        *m.get_mut(r, c) -= delta;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Characteristic polynomial by the Faddeev–LeVerrier recurrence,
    /// ascending coefficients with leading coefficient one.
    pub fn charpoly(&self) -> Vec<BigRational> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -m.trace() / BigRational::from_integer(BigInt::from(k));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                *m.get_mut(i, i) += &c;
            }
        }
        coeffs
    }
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
}

fn poly_degree(p: &[BigRational]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_degree(b);
    let lead = b[db].clone();
    while poly_degree(&r) >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = poly_degree(&r);
        let factor = &r[dr] / &lead;
        let shift = dr - db;
        for i in 0..=db {
            let delta = &factor * &b[i];
            r[i + shift] -= delta;
        }
        r[dr] = BigRational::zero();
        poly_trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !(y.len() == 1 && y[0].is_zero()) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x[poly_degree(&x)].clone();
    for c in &mut x {
        *c /= &lead;
    }
    x
}

fn poly_divide_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_degree(b);
    let da = poly_degree(&r);
    if da < db {
        return vec![BigRational::zero()];
    }
    let mut q = vec![BigRational::zero(); da - db + 1];
    let lead = b[db].clone();
    while poly_degree(&r) >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = poly_degree(&r);
        let factor = &r[dr] / &lead;
        let shift = dr - db;
        q[shift] = factor.clone();
        for i in 0..=db {
            let delta = &factor * &b[i];
            r[i + shift] -= delta;
        }
        r[dr] = BigRational::zero();
        poly_trim(&mut r);
    }
    q
}

fn squarefree_part(p: &[BigRational]) -> Vec<BigRational> {
    let g = poly_gcd(p, &poly_derivative(p));
    if poly_degree(&g) == 0 {
        return p.to_vec();
    }
    poly_divide_exact(p, &g)
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![p.to_vec(), poly_derivative(p)];
    loop {
        let last = &chain[chain.len() - 1];
        if poly_degree(last) == 0 || (last.len() == 1 && last[0].is_zero()) {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let mut r = poly_rem(prev, last);
        for c in &mut r {
            *c = -c.clone();
        }
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut count = 0usize;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = poly_eval(p, x);
        if v.is_zero() {
            continue;
        }
        let sign = v.is_positive();
        if let Some(prev) = last {
            if prev != sign {
                count += 1;
            }
        }
        last = Some(sign);
    }
    count
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
fn roots_in(chain: &[Vec<BigRational>], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// Real roots counted with multiplicity.
fn real_root_count_with_multiplicity(p: &[BigRational]) -> usize {
    let mut q = p.to_vec();
    poly_trim(&mut q);
    let mut count = 0usize;
    while poly_degree(&q) >= 1 {
        let sf = squarefree_part(&q);
        let chain = sturm_chain(&sf);
        let b = cauchy_bound(&q);
        count += roots_in(&chain, &(-b.clone()), &b);
        q = poly_gcd(&q, &poly_derivative(&q));
    }
    count
}

/// Strict bound on every root modulus: `1 + max |c_i| / |lead|`.
fn cauchy_bound(p: &[BigRational]) -> BigRational {
    let d = poly_degree(p);
    let lead = p[d].abs();
    let max = p[..d]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max / lead
}

fn half(x: &BigRational) -> BigRational {
    x / BigRational::from_integer(BigInt::from(2))
}

/// The rational with smallest denominator in `[lo, hi]`.
fn simplest_rational_in(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    let floor_lo = lo.floor();
    if &floor_lo == lo {
        return floor_lo;
    }
    if floor_lo.clone() + BigRational::one() <= *hi {
        return floor_lo + BigRational::one();
    }
    let inner = simplest_rational_in(
        &(hi - floor_lo.clone()).recip(),
        &(lo - floor_lo.clone()).recip(),
    );
    floor_lo + inner.recip()
}

struct RootBracket {
    lo: BigRational,
    hi: BigRational,
    exact: Option<BigRational>,
    refinements: usize,
}

/// Brackets the largest real root of a squarefree polynomial, refining by
/// bisection and recognizing an exact rational root when the bracket
/// pins one down.
fn largest_real_root(sf: &[BigRational], refinements: usize) -> Option<RootBracket> {
    let chain = sturm_chain(sf);
    let b = cauchy_bound(sf);
    let mut lo = -b.clone();
    let hi_end = b.clone();
    if roots_in(&chain, &lo, &hi_end) == 0 {
        return None;
    }
    let mut hi = hi_end.clone();
    for step in 0..refinements {
        let mid = half(&(lo.clone() + hi.clone()));
        if roots_in(&chain, &mid, &hi_end) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
        if step >= 8 && step % 8 == 0 {
            let cand = simplest_rational_in(&lo, &hi);
            if poly_eval(sf, &cand).is_zero() && roots_in(&chain, &cand, &hi_end) == 0 {
                return Some(RootBracket {
                    lo: cand.clone(),
                    hi: cand.clone(),
                    exact: Some(cand),
                    refinements: step + 1,
                });
            }
        }
    }
    let cand = simplest_rational_in(&lo, &hi);
    if poly_eval(sf, &cand).is_zero() && roots_in(&chain, &cand, &hi_end) == 0 {
        return Some(RootBracket {
            lo: cand.clone(),
            hi: cand.clone(),
            exact: Some(cand),
            refinements,
        });
    }
    Some(RootBracket {
        lo,
        hi,
        exact: None,
        refinements,
    })
}

/// Reflects `p(x)` to `p(-x)`.
fn reflect(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect()
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let term = x * y;
            out[i + j] += term;
        }
    }
    out
}

/// How a spectral radius estimate was produced and how tight it is.
#[derive(Clone, Debug, PartialEq)]
pub enum RadiusMethod {
    /// The radius is an eigenvalue recognized exactly; `value == bound`.
    ExactRationalRoot,
    /// Certified bisection bracket around a real eigenvalue known to
    /// realize the radius.
    SturmBisection { refinements: usize },
    /// Complex eigenvalues may dominate: `value` is the largest real
    /// eigenvalue modulus (zero if none), `bound` a matrix norm.
    NormBound,
    /// Floating-point power iteration, with exact rational
    /// Collatz–Wielandt bounds when the matrix is nonnegative.
    PowerIteration { iterations: usize, residual: f64 },
}

/// A two-sided enclosure `value <= radius <= bound` of the spectral
/// radius, with the method that certified it.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusEstimate {
    pub value: BigRational,
    pub bound: BigRational,
    pub method: RadiusMethod,
}

impl RadiusEstimate {
    pub fn is_exact(&self) -> bool {
        self.value == self.bound
    }
}

const EXACT_DIMENSION_LIMIT: usize = 30;
const BISECTION_REFINEMENTS: usize = 96;

/// Spectral radius of a square matrix. Dimensions up to 30 go through the
/// exact characteristic polynomial: for nonnegative matrices the radius
/// is its largest real root, for all-real spectra the largest root of
/// `p(x)p(-x)`, and otherwise a certified enclosure between the largest
/// real eigenvalue modulus and a matrix norm. Larger matrices use power
/// iteration.
pub fn spectral_radius(m: &Matrix) -> RadiusEstimate {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return RadiusEstimate {
            value: BigRational::zero(),
            bound: BigRational::zero(),
            method: RadiusMethod::ExactRationalRoot,
        };
    }
    if n > EXACT_DIMENSION_LIMIT {
        return power_iteration(m);
    }
    let p = m.charpoly();
    let nonneg = m.is_nonnegative();
    let all_real = real_root_count_with_multiplicity(&p) == n;
    let norm = m.infinity_norm().min(m.one_norm());
    if nonneg || all_real {
        let target = if nonneg {
            squarefree_part(&p)
        } else {
            squarefree_part(&poly_mul(&p, &reflect(&p)))
        };
        let bracket = largest_real_root(&target, BISECTION_REFINEMENTS)
            .expect("a real spectrum has a largest root");
        if let Some(exact) = bracket.exact {
            return RadiusEstimate {
                value: exact.clone(),
                bound: exact,
                method: RadiusMethod::ExactRationalRoot,
            };
        }
        return RadiusEstimate {
            value: bracket.lo.max(BigRational::zero()),
            bound: bracket.hi,
            method: RadiusMethod::SturmBisection {
                refinements: bracket.refinements,
            },
        };
    }
    let sf = squarefree_part(&poly_mul(&p, &reflect(&p)));
    let lower = match largest_real_root(&sf, BISECTION_REFINEMENTS) {
        Some(bracket) => bracket.lo.max(BigRational::zero()),
        None => BigRational::zero(),
    };
    RadiusEstimate {
        value: lower,
        bound: norm,
        method: RadiusMethod::NormBound,
    }
}

const POWER_ITERATIONS: usize = 400;

fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

fn power_iteration(m: &Matrix) -> RadiusEstimate {
    let n = m.rows();
    let mf: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).to_f64().unwrap_or(0.0)).collect())
        .collect();
    let mut x = vec![1.0f64; n];
    let mut lambda = 0.0f64;
    for _ in 0..POWER_ITERATIONS {
        let y: Vec<f64> = mf
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        let norm = y.iter().map(|v| v.abs()).fold(0.0f64, f64::max);
        if norm == 0.0 {
            return RadiusEstimate {
                value: BigRational::zero(),
                bound: m.infinity_norm().min(m.one_norm()),
                method: RadiusMethod::PowerIteration {
                    iterations: POWER_ITERATIONS,
                    residual: 0.0,
                },
            };
        }
        lambda = norm;
        x = y.into_iter().map(|v| v / norm).collect();
    }
    let y: Vec<f64> = mf
        .iter()
        .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
        .collect();
    let residual = y
        .iter()
        .zip(&x)
        .map(|(a, b)| (a - lambda * b).abs())
        .fold(0.0f64, f64::max);
    if m.is_nonnegative() {
        // Collatz–Wielandt: for any positive vector v,
        // min_i (Mv)_i / v_i <= radius <= max_i (Mv)_i / v_i, evaluated
        // here in exact arithmetic on a rational snapshot of the iterate.
        let floor = 1e-9f64;
        let v: Vec<BigRational> = x
            .iter()
            .map(|&c| rational_from_f64(if c > floor { c } else { floor }))
            .collect();
        let mv = m.apply(&v);
        let ratios: Vec<BigRational> = mv.iter().zip(&v).map(|(a, b)| a / b).collect();
        let lo = ratios.iter().min().cloned().unwrap_or_else(BigRational::zero);
        let hi = ratios.iter().max().cloned().unwrap_or_else(BigRational::zero);
        return RadiusEstimate {
            value: lo,
            bound: hi.min(m.infinity_norm().min(m.one_norm())),
            method: RadiusMethod::PowerIteration {
                iterations: POWER_ITERATIONS,
                residual,
            },
        };
    }
    RadiusEstimate {
        value: rational_from_f64(lambda).max(BigRational::zero()),
        bound: m.infinity_norm().min(m.one_norm()),
        method: RadiusMethod::PowerIteration {
            iterations: POWER_ITERATIONS,
            residual,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zero(3, 5).rank(), 0);
        assert_eq!(Matrix::from_integers(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(
            Matrix::from_integers(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).rank(),
            1
        );
        assert_eq!(
            Matrix::from_integers(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).rank(),
            3
        );
    }

    #[test]
    fn charpoly_matches_hand_expansion() {
        let m = Matrix::from_integers(&[&[1, 0, 2], &[0, 2, 0], &[1, 0, 0]]);
        assert_eq!(m.charpoly(), vec![q(4), q(0), q(-3), q(1)]);
    }

    #[test]
    fn radius_of_the_reference_pushforward_matrix() {
        let m = Matrix::from_integers(&[&[1, 0, 2], &[0, 2, 0], &[1, 0, 0]]);
        let est = spectral_radius(&m);
        assert!(est.is_exact());
        assert_eq!(est.value, q(2));
        assert_eq!(est.method, RadiusMethod::ExactRationalRoot);
    }

    #[test]
    fn radius_edge_cases() {
        let est = spectral_radius(&Matrix::identity(5));
        assert_eq!((est.value, est.bound), (q(1), q(1)));
        let est = spectral_radius(&Matrix::zero(3, 3));
        assert_eq!((est.value, est.bound), (q(0), q(0)));
        let est = spectral_radius(&Matrix::from_integers(&[&[0, 1], &[0, 0]]));
        assert_eq!((est.value, est.bound), (q(0), q(0)));
        let est = spectral_radius(&Matrix::zero(0, 0));
        assert!(est.is_exact());
    }

    #[test]
    fn negative_dominant_eigenvalue_is_still_the_radius() {
        let m = Matrix::from_integers(&[&[-3, 0], &[0, 2]]);
        let est = spectral_radius(&m);
        assert!(est.is_exact());
        assert_eq!(est.value, q(3));
    }

    #[test]
    fn rational_eigenvalues_come_out_exact() {
        let m = Matrix::from_rows(vec![vec![qr(1, 2)]]);
        let est = spectral_radius(&m);
        assert!(est.is_exact());
        assert_eq!(est.value, qr(1, 2));
    }

    #[test]
    fn irrational_radius_gets_a_tight_bracket() {
        let m = Matrix::from_integers(&[&[0, 2], &[1, 0]]);
        let est = spectral_radius(&m);
        assert!(!est.is_exact());
        assert!(matches!(est.method, RadiusMethod::SturmBisection { .. }));
        assert!(est.value.clone() * est.value.clone() <= q(2));
        assert!(est.bound.clone() * est.bound.clone() >= q(2));
        let width = est.bound - est.value;
        assert!(width < qr(1, 1_000_000_000));
    }

    #[test]
    fn rotation_matrix_reports_a_norm_bound() {
        let m = Matrix::from_integers(&[&[0, -1], &[1, 0]]);
        let est = spectral_radius(&m);
        assert_eq!(est.method, RadiusMethod::NormBound);
        assert_eq!(est.value, q(0));
        assert_eq!(est.bound, q(1));
    }

    #[test]
    fn power_iteration_certifies_a_large_cycle() {
        let n = 31;
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut((i + 1) % n, i) = q(3);
        }
        let est = spectral_radius(&m);
        assert!(matches!(est.method, RadiusMethod::PowerIteration { .. }));
        assert!(est.value <= q(3) && q(3) <= est.bound);
        assert!(est.bound - est.value < qr(1, 1000));
    }

    #[test]
    fn power_iteration_on_the_all_ones_matrix() {
        let n = 40;
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *m.get_mut(i, j) = q(1);
            }
        }
        let est = spectral_radius(&m);
        assert!(est.value <= q(n as i64) && q(n as i64) <= est.bound);
        assert!(est.bound.clone() - est.value.clone() < qr(1, 1000));
    }

    #[test]
    fn submatrix_and_norms() {
        let m = Matrix::from_integers(&[&[1, -2, 3], &[0, 4, 0], &[5, 0, -6]]);
        assert_eq!(m.infinity_norm(), q(11));
        assert_eq!(m.one_norm(), q(9));
        let s = m.submatrix(&[0, 2], &[0, 2]);
        assert_eq!(s, Matrix::from_integers(&[&[1, 3], &[5, -6]]));
    }
}
