//! Exact linear algebra: rational matrices and integer row lattices
//! (Hermite normal form, membership, kernels of linear forms).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMat = Vec<Vec<BigRational>>;

pub fn qmat_identity(n: usize) -> QMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

pub fn qmat_mul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let p = &a[i][t] * &b[t][j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn qmat_vec_mul(a: &QMat, v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(r, x)| r * x).sum())
        .collect()
}

/// Row vector times matrix.
pub fn vec_qmat_mul(v: &[BigRational], a: &QMat) -> Vec<BigRational> {
    let m = a[0].len();
    (0..m)
        .map(|j| v.iter().zip(a).map(|(x, row)| x * &row[j]).sum())
        .collect()
}

pub fn qmat_transpose(a: &QMat) -> QMat {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn qmat_det(a: &QMat) -> BigRational {
    let n = a.len();
    let mut m: QMat = a.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Solve A x = b exactly. Returns None when A is singular.
pub fn qmat_solve(a: &QMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let pv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &pv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn qmat_inverse(a: &QMat) -> Option<QMat> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigRational> = (0..n)
            .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
            .collect();
        cols.push(qmat_solve(a, &e)?);
    }
    // cols[j] is the j-th column of the inverse
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            out[i][j] = col[i].clone();
        }
    }
    Some(out)
}

/// Row-style Hermite normal form of the row lattice spanned by `rows`
/// (entries integer). Returns the canonical basis: `rank` rows, pivot
/// columns strictly increasing, positive pivots, entries above each pivot
/// reduced to [0, pivot).
pub fn hnf_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut r = 0usize;
    for c in 0..ncols {
        if r >= m.len() {
            break;
        }
        loop {
            // find row with smallest nonzero |entry| in column c at or below r
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if m[i][c].abs() < m[b][c].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let b = match best {
                Some(b) => b,
                None => break,
            };
            m.swap(r, b);
            let pivot = m[r][c].clone();
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = div_round_to_zero(&m[i][c], &pivot);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let t = &q * &m[r][j];
                        m[i][j] -= t;
                    }
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                if m[r][c].is_negative() {
                    for j in 0..ncols {
                        m[r][j] = -m[r][j].clone();
                    }
                }
                r += 1;
                break;
            }
        }
    }
    m.truncate(r);
    // reduce entries above pivots
    let pivots: Vec<usize> = m
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    for i in (0..m.len()).rev() {
        let pc = pivots[i];
        let pv = m[i][pc].clone();
        for u in 0..i {
            let q = m[u][pc].div_floor(&pv);
            if !q.is_zero() {
                for j in 0..m[0].len() {
                    let t = &q * &m[i][j];
                    m[u][j] -= t;
                }
            }
        }
    }
    m
}

fn div_round_to_zero(a: &BigInt, b: &BigInt) -> BigInt {
    a / b
}

/// Canonical HNF basis of the row lattice spanned by rational rows:
/// clears denominators, runs integer HNF, scales back.
pub fn hnf_rows_rational(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    if rows.is_empty() {
        return vec![];
    }
    let mut den = BigInt::one();
    for row in rows {
        for x in row {
            den = den.lcm(x.denom());
        }
    }
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect();
    let h = hnf_rows(&int_rows);
    h.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::new(x, den.clone()))
                .collect()
        })
        .collect()
}

/// Integer kernel of the linear form t: basis of {c in Z^n : <c, t> = 0}.
/// Returns n-1 rows when t != 0 (n rows when t = 0).
pub fn kernel_of_form(t: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = t.len();
    if t.iter().all(|x| x.is_zero()) {
        return (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
    }
    // Column-style HNF on the single row: find unimodular U with t*U = (g, 0, ..., 0);
    // kernel basis = columns 1..n of U, read as coordinate vectors.
    let mut u = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect::<Vec<BigInt>>()
        })
        .collect::<Vec<_>>();
    let mut v = t.to_vec();
    loop {
        // smallest nonzero |v[i]| to position 0 by column swap
        let mut best: Option<usize> = None;
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) => {
                    if v[i].abs() < v[b].abs() {
                        best = Some(i)
                    }
                }
            }
        }
        let b = best.unwrap();
        v.swap(0, b);
        for row in u.iter_mut() {
            row.swap(0, b);
        }
        let pivot = v[0].clone();
        let mut done = true;
        for i in 1..n {
            if v[i].is_zero() {
                continue;
            }
            let q = &v[i] / &pivot;
            if !q.is_zero() {
                let t0 = &q * &v[0];
                v[i] -= t0;
                for row in u.iter_mut() {
                    let t1 = &q * &row[0];
                    row[i] -= t1;
                }
            }
            if !v[i].is_zero() {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    // kernel = columns 1..n of u
    (1..n)
        .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::br;

    fn row(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| br(x)).collect()
    }

    #[test]
    fn inverse_roundtrip() {
        let a: QMat = vec![row(&[2, 1]), row(&[7, 4])];
        let inv = qmat_inverse(&a).unwrap();
        assert_eq!(qmat_mul(&a, &inv), qmat_identity(2));
    }

    #[test]
    fn determinant() {
        let a: QMat = vec![row(&[2, 1]), row(&[7, 4])];
        assert_eq!(qmat_det(&a), br(1));
        let b: QMat = vec![row(&[1, 2]), row(&[2, 4])];
        assert_eq!(qmat_det(&b), br(0));
    }

    #[test]
    fn hnf_canonical() {
        let rows = vec![
            vec![BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(2), BigInt::from(5)],
            vec![BigInt::from(6), BigInt::from(11)],
        ];
        let h = hnf_rows(&rows);
        assert_eq!(h.len(), 2);
        // lattice spanned by (4,6),(2,5): det = 8; HNF = [[2,1],[0,4]]
        assert_eq!(h[0], vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(h[1], vec![BigInt::from(0), BigInt::from(4)]);
    }

    #[test]
    fn kernel_of_linear_form() {
        let t = vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)];
        let k = kernel_of_form(&t);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: BigInt = v.iter().zip(&t).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        // the kernel basis must be primitive: HNF determinant-free sanity
        let h = hnf_rows(&k);
        assert_eq!(h.len(), 2);
    }
}
