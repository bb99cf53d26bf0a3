//! Symplectic normal form of an integer skew form under unimodular congruence.

/// `P B P^T = B'` with `B'` block diagonal: pairs `(2k, 2k+1)` carry
/// `d_k > 0` at `(2k, 2k+1)`, remaining rows are zero.
#[derive(Clone, Debug)]
pub struct SkewNormalForm {
    pub p: Vec<Vec<i64>>,
    pub p_inv: Vec<Vec<i64>>,
    pub blocks: Vec<i64>,
    pub reduced: Vec<Vec<i64>>,
}

struct Work {
    b: Vec<Vec<i64>>,
    p: Vec<Vec<i64>>,
    pinv: Vec<Vec<i64>>,
}

impl Work {
    /// Basis change `e_m <- e_m + c e_j`.
    fn add(&mut self, m: usize, j: usize, c: i64) {
        if c == 0 {
            return;
        }
        let n = self.b.len();
        for k in 0..n {
            let v = self.b[j][k];
            self.b[m][k] += c * v;
        }
        for k in 0..n {
            let v = self.b[k][j];
            self.b[k][m] += c * v;
        }
        for k in 0..n {
            let v = self.p[j][k];
            self.p[m][k] += c * v;
        }
        for k in 0..n {
            let v = self.pinv[k][m];
            self.pinv[k][j] -= c * v;
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.b.swap(i, j);
        for row in self.b.iter_mut() {
            row.swap(i, j);
        }
        self.p.swap(i, j);
        for row in self.pinv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate(&mut self, i: usize) {
        let n = self.b.len();
        for k in 0..n {
            self.b[i][k] = -self.b[i][k];
            self.b[k][i] = -self.b[k][i];
            self.p[i][k] = -self.p[i][k];
            self.pinv[k][i] = -self.pinv[k][i];
        }
    }

    /// Smallest nonzero `|b[i][j]|` with `i, j >= start`.
    fn min_entry(&self, start: usize) -> Option<(usize, usize)> {
        let n = self.b.len();
        let mut best: Option<(usize, usize)> = None;
        for i in start..n {
            for j in start..n {
                let v = self.b[i][j].abs();
                if v != 0 && best.is_none_or(|(a, c)| v < self.b[a][c].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn skew_normal_form(rows: &[Vec<i32>]) -> SkewNormalForm {
    let n = rows.len();
    let ident = |n: usize| {
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect::<Vec<Vec<i64>>>()
    };
    let mut w = Work {
        b: rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect(),
        p: ident(n),
        pinv: ident(n),
    };
    let mut blocks = Vec::new();
    let mut start = 0;
    while start + 1 < n {
        let Some((i, j)) = w.min_entry(start) else {
            break;
        };
        w.swap(start, i);
        let j = if j == start { i } else { j };
        w.swap(start + 1, j);
        if w.b[start][start + 1] < 0 {
            w.negate(start + 1);
        }
        // Euclid on rows start, start+1 until both clear the rest
        loop {
            let d = w.b[start][start + 1];
            let mut reduced = true;
            for k in start + 2..n {
                // e_k <- e_k - (b[k][start+1]/d) e_start  clears b[k][start+1]
                let c1 = w.b[k][start + 1].div_euclid(d);
                w.add(k, start, -c1);
                let c0 = w.b[start][k].div_euclid(d);
                w.add(k, start + 1, -c0);
                if w.b[k][start + 1] != 0 || w.b[start][k] != 0 {
                    reduced = false;
                }
            }
            if reduced {
                break;
            }
            // a smaller remainder exists: move it into the pivot block
            let (mut bi, mut bj, mut bv) = (0, 0, i64::MAX);
            for k in start + 2..n {
                for (r, v) in [(start + 1, w.b[k][start + 1]), (start, w.b[start][k])] {
                    if v != 0 && v.abs() < bv {
                        (bi, bj, bv) = (k, r, v.abs());
                    }
                }
            }
            if bj == start {
                // b[start][bi] small: replace partner
                w.swap(start + 1, bi);
            } else {
                // b[bi][start+1] small: replace leader
                w.swap(start, bi);
            }
            if w.b[start][start + 1] < 0 {
                w.negate(start + 1);
            }
        }
        blocks.push(w.b[start][start + 1]);
        start += 2;
    }
    SkewNormalForm {
        p: w.p,
        p_inv: w.pinv,
        blocks,
        reduced: w.b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
    }

    fn check(rows: &[Vec<i32>]) {
        let nf = skew_normal_form(rows);
        let n = rows.len();
        let b: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        assert_eq!(mul(&mul(&nf.p, &b), &transpose(&nf.p)), nf.reduced);
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        assert_eq!(mul(&nf.p, &nf.p_inv), id);
        for i in 0..n {
            for j in 0..n {
                let expect = match (i / 2 < nf.blocks.len(), j / 2 == i / 2) {
                    (true, true) if i % 2 == 0 && j == i + 1 => nf.blocks[i / 2],
                    (true, true) if i % 2 == 1 && j + 1 == i => -nf.blocks[i / 2],
                    _ => 0,
                };
                assert_eq!(nf.reduced[i][j], expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn small_forms() {
        check(&[vec![0, 1], vec![-1, 0]]);
        check(&[vec![0, 2, 1], vec![-2, 0, 1], vec![-1, -1, 0]]);
        check(&[
            vec![0, 1, -1, 0],
            vec![-1, 0, 1, 1],
            vec![1, -1, 0, 2],
            vec![0, -1, -2, 0],
        ]);
        check(&[vec![0, 0], vec![0, 0]]);
    }
}
