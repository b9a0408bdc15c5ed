//! Small dense integer matrices: products, unimodular inversion, adjugates
//! and Smith normal form. Sizes here never exceed a handful of rows, so the
//! storage is a flat row-major `Vec<i64>`.

use num_rational::Ratio;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_flat(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "incompatible shapes");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: i64) {
        for j in 0..self.cols {
            let s = self[(src, j)];
            self[(dst, j)] += factor * s;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: i64) {
        for i in 0..self.rows {
            let s = self[(i, src)];
            self[(i, dst)] += factor * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Inverse of a square integer matrix with determinant ±1, computed with
/// integer row operations only. Returns `None` when the matrix is not
/// unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let n = m.rows;
    assert_eq!(n, m.cols, "square matrix required");
    let mut a = m.clone();
    let mut inv = IntMatrix::identity(n);
    for c in 0..n {
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let nonzero: Vec<usize> = (c..n).filter(|&i| a[(i, c)] != 0).collect();
            if nonzero.is_empty() {
                return None;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| (a[(i, c)].abs(), i)).unwrap();
            if nonzero.len() == 1 {
                a.swap_rows(c, piv);
                inv.swap_rows(c, piv);
                break;
            }
            for &i in &nonzero {
                if i != piv {
                    let q = a[(i, c)] / a[(piv, c)];
                    a.add_row(i, piv, -q);
                    inv.add_row(i, piv, -q);
                }
            }
        }
        match a[(c, c)] {
            1 => {}
            -1 => {
                a.negate_row(c);
                inv.negate_row(c);
            }
            _ => return None,
        }
        for i in 0..n {
            if i != c && a[(i, c)] != 0 {
                let q = a[(i, c)];
                a.add_row(i, c, -q);
                inv.add_row(i, c, -q);
            }
        }
    }
    Some(inv)
}

/// Determinant and adjugate of a square integer matrix, so that
/// `m * adj = det * I`.
pub fn det_and_adjugate(m: &IntMatrix) -> (i64, IntMatrix) {
    let n = m.rows;
    assert_eq!(n, m.cols, "square matrix required");
    let mut a: Vec<Ratio<i64>> = m.data.iter().map(|&x| Ratio::from_integer(x)).collect();
    let mut inv: Vec<Ratio<i64>> = IntMatrix::identity(n)
        .data
        .iter()
        .map(|&x| Ratio::from_integer(x))
        .collect();
    let zero = Ratio::from_integer(0);
    let mut det = Ratio::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a[i * n + c] != zero) else {
            // Singular: the adjugate is not needed anywhere in this crate.
            return (0, IntMatrix::zeros(n, n));
        };
        if p != c {
            for j in 0..n {
                a.swap(p * n + j, c * n + j);
                inv.swap(p * n + j, c * n + j);
            }
            det = -det;
        }
        let piv = a[c * n + c];
        det *= piv;
        for j in 0..n {
            a[c * n + j] /= piv;
            inv[c * n + j] /= piv;
        }
        for i in 0..n {
            let f = a[i * n + c];
            if i == c || f == zero {
                continue;
            }
            for j in 0..n {
                let (ac, ic) = (a[c * n + j], inv[c * n + j]);
                a[i * n + j] -= f * ac;
                inv[i * n + j] -= f * ic;
            }
        }
    }
    assert!(det.is_integer());
    let det = det.to_integer();
    let adj = inv
        .iter()
        .map(|x| {
            let v = *x * det;
            assert!(v.is_integer());
            v.to_integer()
        })
        .collect();
    (det, IntMatrix::from_flat(n, n, adj))
}

/// Smith normal form `left * a * right = diag(d_1, ..., d_k, 0...)` with
/// `d_i | d_{i+1}` and all `d_i >= 0`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub left: IntMatrix,
    pub diag: Vec<i64>,
    pub right: IntMatrix,
}

/// Pivoting is deterministic: the smallest nonzero absolute value wins, ties
/// broken by row-major position.
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_entry(&d, t, (t..m).flat_map(|i| (t..n).map(move |j| (i, j))))
        else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let piv = d[(t, t)];
            for i in t + 1..m {
                let q = d[(i, t)] / piv;
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
            }
            for j in t + 1..n {
                let q = d[(t, j)] / piv;
                if q != 0 {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
            }
            let cross = (t + 1..m)
                .map(|i| (i, t))
                .chain((t + 1..n).map(|j| (t, j)));
            if let Some((i, j)) = smallest_entry(&d, t, cross) {
                // A remainder survived; move it onto the diagonal and repeat.
                if i != t {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                } else {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                continue;
            }
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| d[(i, j)] % piv != 0);
            match bad {
                Some((i, _)) => {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let diag = (0..m.min(n)).map(|i| d[(i, i)]).collect();
    Smith { left: u, diag, right: v }
}

fn smallest_entry(
    d: &IntMatrix,
    _t: usize,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), i64)> = None;
    for (i, j) in cells {
        let x = d[(i, j)].abs();
        if x != 0 && best.map_or(true, |(_, b)| x < b) {
            best = Some(((i, j), x));
        }
    }
    best.map(|(c, _)| c)
}
