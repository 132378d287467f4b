//! Small exact linear algebra: integer lattices (Hermite form, kernels,
//! determinants) and rational rank.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

fn gcd_ext(a: i128, b: i128) -> (i128, i128, i128) {
    // returns (g, x, y) with a x + b y = g >= 0
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let qt = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
        (old_t, t) = (t, old_t - qt * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// A subgroup of `Z^n` in row Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    /// Echelon rows with positive pivots, entries above pivots reduced.
    rows: Vec<Vec<i128>>,
}

impl IntLattice {
    pub fn new(dim: usize, generators: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut lattice = IntLattice { dim, rows: Vec::new() };
        let gens: Vec<Vec<i128>> = generators
            .into_iter()
            .map(|g| {
                assert_eq!(g.len(), dim, "generator length mismatch");
                g.into_iter().map(|x| x as i128).collect()
            })
            .collect();
        lattice.rows = hermite_rows(dim, gens);
        lattice
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
    }

    /// Membership by reduction against the echelon rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.rows {
            let piv = row.iter().position(|&x| x != 0).unwrap();
            if v[..piv].iter().any(|&x| x != 0) {
                return false;
            }
            if v[piv] % row[piv] != 0 {
                return false;
            }
            let k = v[piv] / row[piv];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= k * b;
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_lattice(&self, other: &IntLattice) -> bool {
        other.basis().iter().all(|b| self.contains(b))
    }

    pub fn join(&self, other: &IntLattice) -> IntLattice {
        IntLattice::new(self.dim, self.basis().into_iter().chain(other.basis()))
    }
}

fn hermite_rows(dim: usize, mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut out: Vec<Vec<i128>> = Vec::new();
    let mut col = 0;
    while col < dim && !rows.is_empty() {
        // gcd-combine every row with nonzero entry in `col`
        let mut pivot: Option<Vec<i128>> = None;
        let mut rest = Vec::new();
        for r in rows.drain(..) {
            if r[col] == 0 {
                if r.iter().any(|&x| x != 0) {
                    rest.push(r);
                }
                continue;
            }
            match pivot.take() {
                None => pivot = Some(r),
                Some(p) => {
                    let (g, x, y) = gcd_ext(p[col], r[col]);
                    let (a, b) = (p[col] / g, r[col] / g);
                    let new_p: Vec<i128> = p.iter().zip(&r).map(|(u, v)| x * u + y * v).collect();
                    let new_r: Vec<i128> = p.iter().zip(&r).map(|(u, v)| b * u - a * v).collect();
                    if new_r.iter().any(|&x| x != 0) {
                        rest.push(new_r);
                    }
                    pivot = Some(new_p);
                }
            }
        }
        rows = rest;
        if let Some(mut p) = pivot {
            if p[col] < 0 {
                p.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(p);
        }
        col += 1;
    }
    // reduce entries above pivots
    for i in 0..out.len() {
        let piv = out[i].iter().position(|&x| x != 0).unwrap();
        let pv = out[i][piv];
        for j in 0..i {
            let k = out[j][piv].div_euclid(pv);
            if k != 0 {
                let row_i = out[i].clone();
                for (a, b) in out[j].iter_mut().zip(&row_i) {
                    *a -= k * b;
                }
            }
        }
    }
    out
}

/// A Z-basis of `{x ∈ Z^n : A x = 0}` for an `m × n` integer matrix.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let m = a.len();
    // Column reduction of A, tracking the unimodular transform U (A U = H).
    let mut h: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    let mut pivot_col = 0;
    for row in 0..m {
        if pivot_col >= n {
            break;
        }
        // bring gcd of h[row][pivot_col..] into pivot_col
        for c in pivot_col + 1..n {
            if h[row][c] == 0 {
                continue;
            }
            let (av, bv) = (h[row][pivot_col], h[row][c]);
            let (g, x, y) = gcd_ext(av, bv);
            let (s, t) = (av / g, bv / g);
            // new col_p = x col_p + y col_c ; new col_c = -t col_p + s col_c
            for mat in [&mut h, &mut u] {
                for r in mat.iter_mut() {
                    let (cp, cc) = (r[pivot_col], r[c]);
                    r[pivot_col] = x * cp + y * cc;
                    r[c] = -t * cp + s * cc;
                }
            }
        }
        if h[row][pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    (pivot_col..n).map(|c| u.iter().map(|r| r[c] as i64).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Invariant factors of `Z^dim / ⟨rows⟩`, nontrivial ones only, `0` for a free
/// summand, in divisibility order.
pub fn quotient_invariants(rows: &[Vec<i64>], dim: usize) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let nr = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(dim) {
        // pivot: smallest nonzero entry in the trailing block
        let Some((pi, pj)) = (t..nr)
            .flat_map(|i| (t..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut changed = false;
            for i in t + 1..nr {
                let k = m[i][t].div_euclid(p);
                if k != 0 {
                    let row_t = m[t].clone();
                    for (a, b) in m[i].iter_mut().zip(&row_t) {
                        *a -= k * b;
                    }
                }
                if m[i][t] != 0 {
                    changed = true;
                }
            }
            for j in t + 1..dim {
                let k = m[t][j].div_euclid(p);
                if k != 0 {
                    for r in m.iter_mut() {
                        r[j] -= k * r[t];
                    }
                }
                if m[t][j] != 0 {
                    changed = true;
                }
            }
            if !changed {
                // enforce divisibility of the remaining block
                let bad = (t + 1..nr).flat_map(|i| (t + 1..dim).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let row_i = m[i].clone();
                        for (a, b) in m[t].iter_mut().zip(&row_i) {
                            *a += b;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t to the pivot
            let (bi, bj) = (t..nr)
                .map(|i| (i, t))
                .chain((t..dim).map(|j| (t, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
                .expect("pivot row or column nonzero");
            m.swap(t, bi);
            for r in m.iter_mut() {
                r.swap(t, bj);
            }
        }
        diag.push(m[t][t].unsigned_abs() as u64);
        t += 1;
    }
    let mut out: Vec<u64> = diag.into_iter().filter(|&d| d != 1).collect();
    out.extend(std::iter::repeat_n(0, dim - t));
    out
}

/// Rank of a rational matrix.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != Rational::from_integer(0)) else {
            continue;
        };
        m.swap(rank, p);
        let pv = m[rank][col];
        for i in 0..m.len() {
            if i != rank && m[i][col] != Rational::from_integer(0) {
                let f = m[i][col] / pv;
                let pivot_row = m[rank].clone();
                for (a, b) in m[i].iter_mut().zip(&pivot_row) {
                    *a -= f * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_membership() {
        let l = IntLattice::new(2, vec![vec![4, 2], vec![6, 0]]);
        assert!(l.contains(&[-2, 2]));
        assert!(!l.contains(&[2, 2]));
        assert!(l.contains(&[0, 6]));
        assert!(!l.contains(&[0, 2]));
        assert!(!l.contains(&[1, 0]));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn kernel_is_saturated() {
        let a = vec![vec![2, 4, 6]];
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(2 * v[0] + 4 * v[1] + 6 * v[2], 0);
        }
        // (−2, 1, 0) and (−3, 0, 1) generate the kernel; check both are in span
        let l = IntLattice::new(3, k);
        assert!(l.contains(&[-2, 1, 0]));
        assert!(l.contains(&[-3, 0, 1]));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]]), 6);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn smith_invariants() {
        assert_eq!(quotient_invariants(&[vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
        assert_eq!(quotient_invariants(&[vec![2, 0], vec![0, 3]], 2), vec![6]);
        assert_eq!(quotient_invariants(&[vec![0, 1]], 2), vec![0]);
        assert_eq!(quotient_invariants(&[], 1), vec![0]);
        assert!(quotient_invariants(&[vec![1, 0], vec![0, -1]], 2).is_empty());
    }

    #[test]
    fn ranks() {
        let r = |x: i64| Rational::from_integer(x);
        assert_eq!(rational_rank(&[vec![r(1), r(2)], vec![r(2), r(4)]]), 1);
        assert_eq!(rational_rank(&[vec![r(1), r(0)], vec![r(0), r(3)]]), 2);
    }
}
