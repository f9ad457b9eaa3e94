//! Integer row/column reduction for presenting finite abelian groups as
//! products of cyclic groups.

/// A diagonalized presentation `Z^r / rowspace(R) ≅ ⊕ Z/d_i`.
///
/// `R W` has the same row space as a diagonal matrix with entries `d_i`, with
/// `W` unimodular; `w_inv` is its inverse.
#[derive(Clone, Debug)]
pub(crate) struct Diagonalized {
    diagonal: Vec<i64>,
    w: Vec<Vec<i64>>,
    w_inv: Vec<Vec<i64>>,
}

impl Diagonalized {
    /// Orders of the nontrivial cyclic factors, in column order.
    pub fn orders(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Coordinates in the cyclic decomposition of the class of `c`.
    pub fn coords(&self, c: &[i64]) -> Vec<i64> {
        let r = self.diagonal.len();
        (0..r)
            .filter(|&j| self.diagonal[j] > 1)
            .map(|j| {
                let y: i64 = (0..r).map(|i| c[i] * self.w[i][j]).sum();
                y.rem_euclid(self.diagonal[j])
            })
            .collect()
    }

    /// A preimage in `Z^r` of the given cyclic coordinates.
    pub fn lift(&self, y: &[i64]) -> Vec<i64> {
        let r = self.diagonal.len();
        let mut full = vec![0; r];
        let mut it = y.iter();
        for (j, slot) in full.iter_mut().enumerate() {
            if self.diagonal[j] > 1 {
                *slot = *it.next().expect("coordinate count matches");
            }
        }
        (0..r)
            .map(|j| (0..r).map(|i| full[i] * self.w_inv[i][j]).sum())
            .collect()
    }
}

/// Diagonalize a relation matrix with `cols` generators. The relations must
/// have full column rank so that the presented group is finite.
pub(crate) fn diagonalize(relations: &[Vec<i64>], cols: usize) -> Diagonalized {
    let mut a: Vec<Vec<i64>> = relations.to_vec();
    let rows = a.len();
    let mut w = identity(cols);
    let mut w_inv = identity(cols);

    let swap_cols = |a: &mut Vec<Vec<i64>>, w: &mut Vec<Vec<i64>>, w_inv: &mut Vec<Vec<i64>>, x: usize, y: usize| {
        if x == y {
            return;
        }
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in w.iter_mut() {
            row.swap(x, y);
        }
        w_inv.swap(x, y);
    };
    // col_j -= q * col_t
    let col_op = |a: &mut Vec<Vec<i64>>, w: &mut Vec<Vec<i64>>, w_inv: &mut Vec<Vec<i64>>, t: usize, j: usize, q: i64| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in w.iter_mut() {
            row[j] -= q * row[t];
        }
        let src = w_inv[j].clone();
        for (x, s) in w_inv[t].iter_mut().zip(src) {
            *x += q * s;
        }
    };

    let mut diagonal = vec![0; cols];
    for t in 0..cols.min(rows) {
        let Some((pi, pj)) = min_entry(&a, t, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut w, &mut w_inv, t, pj);
        loop {
            let p = a[t][t];
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    col_op(&mut a, &mut w, &mut w_inv, t, j, q);
                }
            }
            let row_rest = (t + 1..rows).filter(|&i| a[i][t] != 0).min_by_key(|&i| a[i][t].abs());
            let col_rest = (t + 1..cols).filter(|&j| a[t][j] != 0).min_by_key(|&j| a[t][j].abs());
            match (row_rest, col_rest) {
                (None, None) => break,
                (Some(i), _) => a.swap(t, i),
                (None, Some(j)) => swap_cols(&mut a, &mut w, &mut w_inv, t, j),
            }
        }
        diagonal[t] = a[t][t].abs();
    }
    assert!(
        diagonal.iter().all(|&d| d > 0),
        "relation matrix must have full column rank"
    );
    Diagonalized { diagonal, w, w_inv }
}

/// Generators of the lattice `{c ∈ Z^r : Σ c_j gens_j ≡ 0 (mod moduli)}`.
pub(crate) fn integer_kernel(gens: &[Vec<i64>], moduli: &[i64]) -> Vec<Vec<i64>> {
    let r = gens.len();
    let k = moduli.len();
    let mut rows: Vec<(Vec<i64>, Vec<i64>)> = gens
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let mut right = vec![0; r];
            right[j] = 1;
            (s.clone(), right)
        })
        .chain(moduli.iter().enumerate().map(|(i, &d)| {
            let mut left = vec![0; k];
            left[i] = d;
            (left, vec![0; r])
        }))
        .collect();
    for col in 0..k {
        loop {
            let Some(p) = (0..rows.len())
                .filter(|&i| rows[i].0[col] != 0)
                .min_by_key(|&i| rows[i].0[col].abs())
            else {
                break;
            };
            let pivot = rows[p].clone();
            let mut clean = true;
            for (i, row) in rows.iter_mut().enumerate() {
                if i == p || row.0[col] == 0 {
                    continue;
                }
                let q = row.0[col] / pivot.0[col];
                for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                    *x -= q * y;
                }
                for (x, y) in row.1.iter_mut().zip(&pivot.1) {
                    *x -= q * y;
                }
                if row.0[col] != 0 {
                    clean = false;
                }
            }
            if clean {
                rows.swap_remove(p);
                break;
            }
        }
    }
    rows.into_iter()
        .map(|(_, right)| right)
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn min_entry(a: &[Vec<i64>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, &x) in row.iter().enumerate().skip(c0) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
