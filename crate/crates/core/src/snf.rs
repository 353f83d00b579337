//! Smith normal form over Z, used to put `X / Q^vee` into canonical shape.

/// The row transform and invariant factors of a Smith decomposition
/// `U · A · V = diag(d_1, ..., d_k)` of an integer matrix `A` (rows × cols).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    /// Unimodular `rows × rows` matrix, row-major.
    pub row_transform: Vec<i64>,
    /// Nonnegative diagonal entries, `d_i | d_{i+1}` for the nonzero ones.
    pub diagonal: Vec<i64>,
    pub rows: usize,
}

/// Computes the Smith form of `a`, given as a list of rows.
pub fn smith(a: &[Vec<i64>]) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut u: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();

    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        // Pivot: smallest nonzero |entry| in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t].div_euclid(m[t][t]);
            if q != 0 {
                row_axpy(&mut m, i, t, -q);
                row_axpy(&mut u, i, t, -q);
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = m[t][j].div_euclid(m[t][t]);
            if q != 0 {
                for row in m.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold an offending row into the pivot row and retry.
        let p = m[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0)) {
            row_axpy(&mut m, t, i, 1);
            row_axpy(&mut u, t, i, 1);
            continue;
        }
        if p < 0 {
            m[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
        t += 1;
    }

    Smith {
        row_transform: u.into_iter().flatten().collect(),
        diagonal: (0..steps).map(|i| m[i][i]).collect(),
        rows,
    }
}

fn row_axpy(m: &mut [Vec<i64>], dst: usize, src: usize, c: i64) {
    let s = m[src].clone();
    for (d, x) in m[dst].iter_mut().zip(s) {
        *d += c * x;
    }
}
