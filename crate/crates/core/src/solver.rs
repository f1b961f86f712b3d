//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL iteration with eigenvector accumulation.
//!
//! This is the classic tred2/tql2 pair (Bowdler, Martin, Reinsch & Wilkinson,
//! Num. Math. 11, 1968) written against 0-based storage. Output order and
//! eigenvector signs are canonicalized here so that identical input produces
//! bit-identical output on a given platform.

/// Iterations allowed per eigenvalue before giving up.
pub(crate) const MAX_QL_ITERATIONS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Convergence {
    pub index: usize,
    pub iterations: usize,
}

pub(crate) struct SymEigen {
    /// Eigenvalues in non-decreasing order.
    pub values: Vec<f64>,
    /// `vectors[j]` is the unit eigenvector paired with `values[j]`. Each is
    /// sign-normalized: the entry of largest magnitude is positive, ties
    /// broken by lowest index.
    pub vectors: Vec<Vec<f64>>,
}

/// Full eigendecomposition of a symmetric matrix given as rows.
/// The strict lower triangle is read; symmetry is the caller's contract.
pub(crate) fn symmetric_eigen(mut a: Vec<Vec<f64>>) -> Result<SymEigen, Convergence> {
    let n = a.len();
    if n == 0 {
        return Ok(SymEigen {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut a, &mut d, &mut e);
    ql_implicit_shift(&mut d, &mut e, &mut a)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap().then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| a[row][col]).collect())
        .collect();
    for v in &mut vectors {
        normalize_sign(v);
    }
    Ok(SymEigen { values, vectors })
}

pub(crate) fn normalize_sign(v: &mut [f64]) {
    let mut idx = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[idx].abs() {
            idx = i;
        }
    }
    if v[idx] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Householder reduction to tridiagonal form (tred2). On return `d` holds the
/// diagonal, `e[1..]` the subdiagonal, and `a` the accumulated orthogonal
/// transformation (applied to QL rotations afterwards it becomes the
/// eigenvector matrix).
// Index-driven loops mirror the classical algorithm statement; rewriting them
// with iterators would obscure the row/column bookkeeping.
#[allow(clippy::needless_range_loop)]
fn tridiagonalize(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..i].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..i {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let u: Vec<f64> = a[i][..i].to_vec();
                let mut f_acc = 0.0;
                for j in 0..i {
                    a[j][i] = u[j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j][k] * u[k];
                    }
                    for k in (j + 1)..i {
                        g_acc += a[k][j] * u[k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * u[j];
                }
                let hh = f_acc / (h + h);
                for j in 0..i {
                    let fj = u[j];
                    e[j] -= hh * fj;
                    let gj = e[j];
                    for k in 0..=j {
                        let t = fj * e[k] + gj * u[k];
                        a[j][k] -= t;
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i][k] * a[k][j];
                }
                for k in 0..i {
                    let t = g * a[k][i];
                    a[k][j] -= t;
                }
            }
        }
        d[i] = a[i][i];
        a[i][i] = 1.0;
        for j in 0..i {
            a[j][i] = 0.0;
            a[i][j] = 0.0;
        }
    }
}

/// QL iteration with implicit shifts (tql2), rotating the columns of `z`.
fn ql_implicit_shift(d: &mut [f64], e: &mut [f64], z: &mut [Vec<f64>]) -> Result<(), Convergence> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == MAX_QL_ITERATIONS {
                return Err(Convergence {
                    index: l,
                    iterations: iter,
                });
            }
            iter += 1;

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut bailed = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // rotation underflowed; deflate and restart this eigenvalue
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    bailed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    f = row[i + 1];
                    let zi = row[i];
                    row[i + 1] = s * zi + c * f;
                    row[i] = c * zi - s * f;
                }
            }
            if bailed {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
