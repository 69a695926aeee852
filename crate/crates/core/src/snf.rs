//! Smith normal form over the integers, for the small boundary matrices of a
//! ribbon graph's cell structure.

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
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

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` (all positive), so
/// `r` is the rank and any `d_i > 1` signals torsion in the cokernel.
pub fn invariant_factors(matrix: &IntMatrix) -> Vec<i64> {
    let (m, n) = (matrix.rows, matrix.cols);
    let mut a: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..n).map(|j| matrix[(i, j)] as i128).collect())
        .collect();
    let mut factors = Vec::new();

    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| (a[i][j].abs(), i, j))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..n {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t onto the pivot
            let mut best = (a[t][t].abs(), t, t);
            for i in t + 1..m {
                if a[i][t] != 0 && a[i][t].abs() < best.0 {
                    best = (a[i][t].abs(), i, t);
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 && a[t][j].abs() < best.0 {
                    best = (a[t][j].abs(), t, j);
                }
            }
            let (_, i, j) = best;
            if i != t {
                a.swap(t, i);
            } else if j != t {
                for row in a.iter_mut() {
                    row.swap(t, j);
                }
            }
        }
        factors.push(a[t][t].unsigned_abs() as i64);
    }
    factors
}

pub fn rank(matrix: &IntMatrix) -> usize {
    invariant_factors(matrix).len()
}
