//! Small exact dense linear algebra over integers and rationals.

use num_traits::{One, Zero};

use crate::scalar::{gcd_all, Rat, Scalar};

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every division is exact.
pub fn det<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    if n == 2 {
        return m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of an integer matrix (rows need not be square).
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            let row: Vec<T> =
                m[i].iter().zip(&m[r]).map(|(x, y)| x.clone() * a.clone() - y.clone() * b.clone()).collect();
            let g = gcd_all(&row);
            m[i] = if g.is_zero() || g.is_one() { row } else { row.into_iter().map(|x| x / g.clone()).collect() };
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Integer vector orthogonal to the `d - 1` given rows of length `d`
/// (generalized cross product). Zero iff the rows are linearly dependent.
pub fn cross_normal<T: Scalar>(rows: &[Vec<T>], d: usize) -> Vec<T> {
    debug_assert_eq!(rows.len() + 1, d);
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<T>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let m = det(minor);
            if j % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// Solves `S · X = D` for square `S` over the rationals. Returns `None` when
/// `S` is singular.
pub fn solve_rational<T: Scalar>(s: &[Vec<Rat<T>>], d: &[Vec<Rat<T>>]) -> Option<Vec<Vec<Rat<T>>>> {
    let n = s.len();
    let mut aug: Vec<Vec<Rat<T>>> = s.iter().zip(d).map(|(l, r)| l.iter().chain(r.iter()).cloned().collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for v in aug[c].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant of a square rational matrix.
pub fn det_rational<T: Scalar>(m: &[Vec<Rat<T>>]) -> Rat<T> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut acc = Rat::<T>::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(c, p);
            acc = -acc;
        }
        acc = acc * a[c][c].clone();
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone() / pivot[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
    }
    acc
}
