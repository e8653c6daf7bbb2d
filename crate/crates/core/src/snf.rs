//! Smith normal form over the integers, with both transformation matrices,
//! and exact solution of square integer linear systems.

/// `u * a * v = d` with `d` diagonal and each diagonal entry dividing the
/// next. All arithmetic in `i128`; inputs in this crate are small Cartan-like
/// matrices, far from overflow.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: Vec<Vec<i128>>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> Snf {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix expected");
    let mut d: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u = identity(n);
    let mut v = identity(n);

    for t in 0..n {
        loop {
            // Move a minimal nonzero entry of the trailing block to (t, t).
            let Some((pi, pj)) = pivot(&d, t, n) else {
                break;
            };
            if pi != t {
                d.swap(pi, t);
                u.swap(pi, t);
            }
            if pj != t {
                for row in d.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    row_sub(&mut d, i, t, q);
                    row_sub(&mut u, i, t, q);
                }
                if d[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    col_sub(&mut d, j, t, q);
                    col_sub(&mut v, j, t, q);
                }
                if d[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // Enforce the divisibility chain on the rest of the block.
                let mut fixed = true;
                'outer: for i in t + 1..n {
                    for j in t + 1..n {
                        if d[i][j] % d[t][t] != 0 {
                            // Fold row i into row t and retry the pivot step.
                            for jj in 0..n {
                                d[t][jj] += d[i][jj];
                                u[t][jj] += u[i][jj];
                            }
                            fixed = false;
                            break 'outer;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
        }
        if t < n && d[t][t] < 0 {
            for j in 0..n {
                d[t][j] = -d[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }
    Snf { d, u, v }
}

/// Integer solution `x` of `a x = b`, if one exists.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let snf = smith_normal_form(a);
    // a x = b  <=>  d (v^{-1} x) = u b.
    let ub: Vec<i128> = (0..n)
        .map(|i| (0..n).map(|j| snf.u[i][j] * b[j] as i128).sum())
        .collect();
    let mut y = vec![0i128; n];
    for i in 0..n {
        let di = snf.d[i][i];
        if di == 0 {
            if ub[i] != 0 {
                return None;
            }
        } else {
            if ub[i] % di != 0 {
                return None;
            }
            y[i] = ub[i] / di;
        }
    }
    let x: Vec<i128> = (0..n)
        .map(|i| (0..n).map(|j| snf.v[i][j] * y[j]).sum())
        .collect();
    Some(x.into_iter().map(|c| c as i64).collect())
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn pivot(d: &[Vec<i128>], t: usize, n: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if d[i][j] != 0
                && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

fn row_sub(m: &mut [Vec<i128>], i: usize, t: usize, q: i128) {
    for j in 0..m.len() {
        m[i][j] -= q * m[t][j];
    }
}

fn col_sub(m: &mut [Vec<i128>], j: usize, t: usize, q: i128) {
    for row in m.iter_mut() {
        row[j] -= q * row[t];
    }
}
