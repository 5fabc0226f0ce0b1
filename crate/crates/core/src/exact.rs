//! Exact rational scalars and small dense linear algebra.
//!
//! Everything downstream (brackets, connections, curvature, soliton systems)
//! runs on [`Q`] so that case distinctions like `beta == 0` are exact sign
//! tests, never float comparisons. Floats appear only in [`mat_exp`] when the
//! argument is not nilpotent.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational scalar. `num_rational` keeps values reduced with a positive
/// denominator after every operation.
pub type Q = BigRational;

/// Integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/d`, `d != 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Coordinate vector in the fixed frame.
pub type V3 = [Q; 3];

pub fn v3_zero() -> V3 {
    std::array::from_fn(|_| Q::zero())
}

pub fn v3(a: Q, b: Q, c: Q) -> V3 {
    [a, b, c]
}

pub fn v3_add(x: &V3, y: &V3) -> V3 {
    std::array::from_fn(|i| &x[i] + &y[i])
}

pub fn v3_sub(x: &V3, y: &V3) -> V3 {
    std::array::from_fn(|i| &x[i] - &y[i])
}

pub fn v3_scale(s: &Q, x: &V3) -> V3 {
    std::array::from_fn(|i| s * &x[i])
}

pub fn v3_is_zero(x: &V3) -> bool {
    x.iter().all(Q::is_zero)
}

/// Dense row-major matrix of rationals. Small (usually 3x3 or 9x9); no
/// sparsity, no pivot tolerances.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// 3x3 matrix from an integer array, mostly for tests.
    pub fn from_i64(a: [[i64; 3]; 3]) -> Self {
        Mat::from_fn(3, 3, |r, c| q(a[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: &Q) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| s * self.at(r, c))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Mat::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.at(r, k) * other.at(k, c)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square());
        // Fraction-free would be overkill at this size; plain elimination.
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Q::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            det *= m.at(col, col).clone();
            let inv = m.at(col, col).recip();
            for c in col..n {
                let v = m.at(col, c) * &inv;
                *m.at_mut(col, c) = v;
            }
            for r in col + 1..n {
                let f = m.at(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.at(r, c) - &f * m.at(col, c);
                    *m.at_mut(r, c) = v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Row-major entries as f64, for handing off to the float path.
    pub fn to_f64(&self) -> FMat {
        assert!(self.is_square());
        FMat {
            n: self.rows,
            data: self.data.iter().map(rational_to_f64).collect(),
        }
    }
}

pub fn rational_to_f64(x: &Q) -> f64 {
    x.to_f64()
        .unwrap_or_else(|| x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap())
}

/// Reduced row echelon form: returns the echelon matrix and the pivot columns
/// in ascending order. Pivoting is the first nonzero entry of each column;
/// exact arithmetic needs no magnitude-based pivot choice, and keeping the
/// column order fixed makes the free-column kernel convention canonical.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.at(r, c).recip();
        for j in c..cols {
            let v = a.at(r, j) * &inv;
            *a.at_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in c..cols {
                let v = a.at(i, j) - &f * a.at(r, j);
                *a.at_mut(i, j) = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Exact basis of `{ v : m v = 0 }` in the RREF free-column convention: one
/// basis vector per free column, with a 1 there and 0 in the other free
/// columns. An empty (0-row) matrix constrains nothing.
pub fn nullspace(m: &Mat) -> Vec<Vec<Q>> {
    let (e, pivots) = rref(m);
    let cols = m.cols;
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -e.at(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Solution set of `a x = b`, exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    Empty,
    Point(Vec<Q>),
    Family { particular: Vec<Q>, kernel: Vec<Vec<Q>> },
}

impl AffineSolution {
    pub fn particular(&self) -> Option<&Vec<Q>> {
        match self {
            AffineSolution::Empty => None,
            AffineSolution::Point(p) => Some(p),
            AffineSolution::Family { particular, .. } => Some(particular),
        }
    }

    pub fn kernel(&self) -> &[Vec<Q>] {
        match self {
            AffineSolution::Family { kernel, .. } => kernel,
            _ => &[],
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            AffineSolution::Empty => None,
            AffineSolution::Point(_) => Some(0),
            AffineSolution::Family { kernel, .. } => Some(kernel.len()),
        }
    }
}

/// Gaussian elimination on the augmented system. The particular solution is
/// the RREF-canonical one (all free variables zero).
pub fn solve_affine(a: &Mat, b: &[Q]) -> AffineSolution {
    assert_eq!(a.rows, b.len(), "solve_affine: a.rows must equal len(b)");
    let cols = a.cols;
    let aug = Mat::from_fn(a.rows, cols + 1, |r, c| {
        if c < cols {
            a.at(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (e, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return AffineSolution::Empty;
    }
    let mut particular = vec![Q::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = e.at(row, cols).clone();
    }
    let kernel = nullspace(a);
    if kernel.is_empty() {
        AffineSolution::Point(particular)
    } else {
        AffineSolution::Family { particular, kernel }
    }
}

/// True iff `m^k = 0` for some `k <= rows(m)`.
pub fn is_nilpotent(m: &Mat) -> bool {
    assert!(m.is_square());
    let mut p = m.clone();
    for _ in 0..m.rows {
        if p.is_zero() {
            return true;
        }
        p = p.mul(m);
    }
    p.is_zero()
}

/// Matrix exponential `exp(t m)`. Nilpotent arguments get the exact finite
/// polynomial; everything else goes through float scaling-and-squaring.
#[derive(Clone, Debug)]
pub enum MatExp {
    /// Exact value; `t m` was nilpotent so the series terminates.
    Polynomial(Mat),
    /// Float evaluation via Pade + scaling-and-squaring.
    Numeric(FMat),
}

impl MatExp {
    pub fn to_f64(&self) -> FMat {
        match self {
            MatExp::Polynomial(m) => m.to_f64(),
            MatExp::Numeric(m) => m.clone(),
        }
    }
}

pub fn mat_exp(m: &Mat, t: &Q) -> MatExp {
    assert!(m.is_square(), "mat_exp needs a square matrix");
    let n = m.rows;
    let scaled = m.scale(t);
    if is_nilpotent(&scaled) {
        let mut sum = Mat::identity(n);
        let mut term = Mat::identity(n);
        for k in 1..=n {
            term = term.mul(&scaled).scale(&qr(1, k as i64));
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
        }
        MatExp::Polynomial(sum)
    } else {
        MatExp::Numeric(expm(&scaled.to_f64()))
    }
}

/// Small square f64 matrix used only by the float exponential path.
#[derive(Clone, Debug)]
pub struct FMat {
    n: usize,
    data: Vec<f64>,
}

impl FMat {
    pub fn zeros(n: usize) -> Self {
        FMat {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FMat::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        FMat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    pub fn mul(&self, other: &FMat) -> FMat {
        assert_eq!(self.n, other.n);
        FMat::from_fn(self.n, |r, c| {
            (0..self.n).map(|k| self.at(r, k) * other.at(k, c)).sum()
        })
    }

    pub fn add(&self, other: &FMat) -> FMat {
        FMat::from_fn(self.n, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &FMat) -> FMat {
        FMat::from_fn(self.n, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: f64) -> FMat {
        FMat::from_fn(self.n, |r, c| s * self.at(r, c))
    }

    pub fn one_norm(&self) -> f64 {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.at(r, c).abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &FMat) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Solve `self X = rhs` by LU with partial pivoting.
    pub fn solve(&self, rhs: &FMat) -> FMat {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let mut a = self.data.clone();
        let mut x = rhs.data.clone();
        for col in 0..n {
            let p = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .abs()
                        .partial_cmp(&a[j * n + col].abs())
                        .unwrap()
                })
                .unwrap();
            if a[p * n + col] == 0.0 {
                panic!("singular system in FMat::solve");
            }
            if p != col {
                for c in 0..n {
                    a.swap(p * n + c, col * n + c);
                    x.swap(p * n + c, col * n + c);
                }
            }
            let piv = a[col * n + col];
            for r in col + 1..n {
                let f = a[r * n + col] / piv;
                if f == 0.0 {
                    continue;
                }
                for c in col..n {
                    a[r * n + c] -= f * a[col * n + c];
                }
                for c in 0..n {
                    x[r * n + c] -= f * x[col * n + c];
                }
            }
        }
        // back substitution
        for col in (0..n).rev() {
            let piv = a[col * n + col];
            for c in 0..n {
                x[col * n + c] /= piv;
            }
            for r in 0..col {
                let f = a[r * n + col];
                for c in 0..n {
                    x[r * n + c] -= f * x[col * n + c];
                }
            }
        }
        FMat { n, data: x }
    }
}

/// Pade(13) scaling-and-squaring, after Higham's revisited algorithm.
/// More than enough accuracy for 3x3 arguments at the 1e-12 level.
pub fn expm(a: &FMat) -> FMat {
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    const THETA13: f64 = 5.371920351148152;

    let norm = a.one_norm();
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let a = a.scale(0.5f64.powi(squarings as i32));
    let n = a.dim();
    let ident = FMat::identity(n);

    let a2 = a.mul(&a);
    let a4 = a2.mul(&a2);
    let a6 = a4.mul(&a2);

    let w1 = a6.scale(B[13]).add(&a4.scale(B[11])).add(&a2.scale(B[9]));
    let w = a6
        .mul(&w1)
        .add(&a6.scale(B[7]))
        .add(&a4.scale(B[5]))
        .add(&a2.scale(B[3]))
        .add(&ident.scale(B[1]));
    let u = a.mul(&w);

    let z1 = a6.scale(B[12]).add(&a4.scale(B[10])).add(&a2.scale(B[8]));
    let v = a6
        .mul(&z1)
        .add(&a6.scale(B[6]))
        .add(&a4.scale(B[4]))
        .add(&a2.scale(B[2]))
        .add(&ident.scale(B[0]));

    // exp(a) ~= (V - U)^{-1} (V + U)
    let mut r = v.sub(&u).solve(&v.add(&u));
    for _ in 0..squarings {
        r = r.mul(&r);
    }
    r
}
