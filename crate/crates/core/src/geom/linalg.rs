//! Small exact linear algebra over rationals and integers.
//!
//! Matrices are dense row-major `Vec<Vec<_>>`; sizes in this crate stay below
//! a few dozen rows, so no effort is spent on asymptotics.

use super::num::{dot, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form; returns pivot column per pivot row.
pub fn rref(mat: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for c2 in 0..cols {
                    let t = &mat[r][c2] * &f;
                    mat[i][c2] = &mat[i][c2] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mat: &[Vec<Rat>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Solves `A x = b`; returns one solution if consistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(vec![]);
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent if a pivot lands in the augmented column.
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the kernel of `A` (column vectors of length `cols`).
pub fn kernel(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square rational matrix.
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    if n == 0 {
        return Rat::one();
    }
    assert_eq!(a[0].len(), n, "det: matrix not square");
    let mut m = a.to_vec();
    let mut result = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            result = -result;
        }
        result *= m[c][c].clone();
        let inv = m[c][c].clone();
        for i in (c + 1)..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &inv;
                for c2 in c..n {
                    let t = &m[c][c2] * &f;
                    m[i][c2] = &m[i][c2] - &t;
                }
            }
        }
    }
    result
}

/// Determinant of a square integer matrix (via rationals; exact).
pub fn det_int(a: &[Vec<Int>]) -> Int {
    let aq: Vec<Vec<Rat>> = a
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let d = det(&aq);
    assert!(d.is_integer(), "integer matrix has integer determinant");
    d.to_integer()
}

/// Inverse of a square rational matrix, if invertible.
pub fn inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| dot(row, x)).collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for (k, x) in row.iter().enumerate() {
                        acc += x * &b[k][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Row-style Hermite normal form of an integer matrix.
///
/// Returns `(h, u)` with `u` unimodular and `u * a = h`; `h` is upper
/// staircase with positive pivots and reduced entries above pivots.
pub fn hnf(a: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h = a.to_vec();
    let mut u: Vec<Vec<Int>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        // Euclidean elimination below row r in column c.
        loop {
            let mut min_row = None;
            for i in r..rows {
                if !h[i][c].is_zero() {
                    let better = match min_row {
                        None => true,
                        Some(m) => h[i][c].abs() < h[m as usize][c].abs(),
                    };
                    if better {
                        min_row = Some(i as isize);
                    }
                }
            }
            let Some(m) = min_row else {
                break;
            };
            let m = m as usize;
            h.swap(r, m);
            u.swap(r, m);
            let mut done = true;
            for i in (r + 1)..rows {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    for j in 0..cols {
                        let t = &h[r][j] * &q;
                        h[i][j] = &h[i][j] - &t;
                    }
                    for j in 0..rows {
                        let t = &u[r][j] * &q;
                        u[i][j] = &u[i][j] - &t;
                    }
                    if !h[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < rows && !h[r][c].is_zero() {
            if h[r][c].is_negative() {
                for j in 0..cols {
                    h[r][j] = -h[r][j].clone();
                }
                for j in 0..rows {
                    u[r][j] = -u[r][j].clone();
                }
            }
            // Reduce entries above the pivot.
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &h[r][j] * &q;
                        h[i][j] = &h[i][j] - &t;
                    }
                    for j in 0..rows {
                        let t = &u[r][j] * &q;
                        u[i][j] = &u[i][j] - &t;
                    }
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
    }
    (h, u)
}

/// Elementary divisors (Smith normal form diagonal, nonzero part).
pub fn elementary_divisors(a: &[Vec<Int>]) -> Vec<Int> {
    let mut m = a.to_vec();
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut divisors = Vec::new();
    let mut top = 0;
    'outer: while top < rows.min(cols) {
        // Find a nonzero pivot in the submatrix.
        let mut pivot = None;
        'search: for i in top..rows {
            for j in top..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break 'outer;
        };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }
        // Clear row and column by Euclidean steps until pivot divides all.
        loop {
            let mut changed = false;
            for i in (top + 1)..rows {
                if !m[i][top].is_zero() {
                    let q = m[i][top].div_floor(&m[top][top]);
                    for j in top..cols {
                        let t = &m[top][j] * &q;
                        m[i][j] = &m[i][j] - &t;
                    }
                    if !m[i][top].is_zero() {
                        m.swap(top, i);
                        changed = true;
                    }
                }
            }
            for j in (top + 1)..cols {
                if !m[top][j].is_zero() {
                    let q = m[top][j].div_floor(&m[top][top]);
                    for i in top..rows {
                        let t = &m[i][top] * &q;
                        m[i][j] = &m[i][j] - &t;
                    }
                    if !m[top][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(top, j);
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // Ensure divisibility of the remaining block by the pivot.
        let mut fixed = true;
        'div: for i in (top + 1)..rows {
            for j in (top + 1)..cols {
                if !(&m[i][j] % &m[top][top]).is_zero() {
                    for jj in top..cols {
                        let t = m[i][jj].clone();
                        m[top][jj] = &m[top][jj] + &t;
                    }
                    fixed = false;
                    break 'div;
                }
            }
        }
        if !fixed {
            continue;
        }
        divisors.push(m[top][top].abs());
        top += 1;
    }
    divisors
}

/// Saturated integer kernel basis of an integer matrix (as rows).
pub fn int_kernel(a: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    // HNF of the transpose-augmented identity: rows of u mapping to zero rows
    // of h span the integer kernel, and they are automatically saturated.
    let at: Vec<Vec<Int>> = transpose(a);
    let mut aug: Vec<Vec<Int>> = Vec::new();
    let _ = at;
    // Work with rows = candidate kernel vectors: apply hnf to [a^T | I]-style
    // construction: treat each standard basis row e_i of Z^cols, map through a.
    // Row i of `mapped` is a * e_i = column i of a.
    for i in 0..cols {
        let mut row: Vec<Int> = a.iter().map(|r| r[i].clone()).collect();
        let mut id = vec![Int::zero(); cols];
        id[i] = Int::one();
        row.extend(id);
        aug.push(row);
    }
    let (h, _) = hnf(&aug);
    let arows = a.len();
    let mut kernel_rows = Vec::new();
    for row in &h {
        if row[..arows].iter().all(|x| x.is_zero()) && row[arows..].iter().any(|x| !x.is_zero()) {
            kernel_rows.push(row[arows..].to_vec());
        }
    }
    kernel_rows
}

/// Extends a saturated lattice `span` (rows, rank k) to a basis of `Z^n`.
///
/// Returns `(span_basis, complement_basis)`: the concatenation is a basis of
/// `Z^n`. Requires the row span to be saturated (primitive sublattice).
pub fn lattice_complement(span: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    assert!(!span.is_empty());
    let n = span[0].len();
    let (h, _) = hnf(span);
    let basis: Vec<Vec<Int>> = h
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let k = basis.len();
    // Greedily extend with standard basis vectors keeping determinant-friendly
    // structure: pick e_j whose addition increases the rank, then verify the
    // full matrix is unimodular; fix up via HNF if not.
    let mut full = basis.clone();
    for j in 0..n {
        if full.len() == n {
            break;
        }
        let mut e = vec![Int::zero(); n];
        e[j] = Int::one();
        let mut candidate = full.clone();
        candidate.push(e.clone());
        let rq: Vec<Vec<Rat>> = candidate
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        if rank(&rq) == candidate.len() {
            full.push(e);
        }
    }
    assert_eq!(full.len(), n, "failed to extend to full rank");
    let d = det_int(&full).abs();
    if !d.is_one() {
        // The standard-basis completion is not unimodular against the span
        // lattice; repair the complement part using the dual description.
        // Solve via HNF of the transpose: find u unimodular with u*full' in
        // HNF, then replace complement rows by preimages of unit rows.
        let comp = complement_by_duality(&basis, n);
        let mut candidate = basis.clone();
        candidate.extend(comp.clone());
        let d2 = det_int(&candidate).abs();
        assert!(d2.is_one(), "duality completion must be unimodular");
        return (basis, comp);
    }
    let comp = full[k..].to_vec();
    (basis, comp)
}

fn complement_by_duality(basis: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    // The saturation of the row span is ker of the dual covectors; compute an
    // integer basis of covectors vanishing on `basis`, then a complement is a
    // preimage basis of Z^{n-k} under those covectors.
    let covectors = int_kernel(basis);
    // Rows y with <covector_i, y> = delta pattern: solve over Z via HNF.
    // Build matrix C (rows covectors) and find integer right-inverse.
    let k = basis.len();
    let m = n - k;
    assert_eq!(covectors.len(), m);
    // Solve C * X^T = I_m over the integers; existence because covectors are
    // a saturated system.
    let mut result = Vec::new();
    for i in 0..m {
        let target: Vec<Rat> = (0..m)
            .map(|j| {
                if i == j {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        let cq: Vec<Vec<Rat>> = covectors
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        let sol = solve(&cq, &target).expect("covector system is solvable");
        // May be rational; make integral by adjusting within the span lattice.
        let ints = integral_point_in_coset(&sol, basis);
        result.push(ints);
    }
    result
}

/// Given rational x and a saturated integer lattice L (rows), finds an integer
/// vector in x + span_Q(L) if one exists.
fn integral_point_in_coset(x: &[Rat], lattice: &[Vec<Int>]) -> Vec<Int> {
    // Solve x + sum t_i l_i integral for rational t, then round within the
    // lattice: since L is saturated, solutions over Q can be corrected to Z.
    // Set up: denominator-clearing approach via HNF of L.
    let n = x.len();
    let (h, _) = hnf(lattice);
    let rows: Vec<Vec<Int>> = h
        .into_iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut y: Vec<Rat> = x.to_vec();
    // Use the staircase structure to clear fractional parts at pivot columns.
    for row in &rows {
        let pivot_col = row.iter().position(|v| !v.is_zero()).unwrap();
        let pivot = Rat::from_integer(row[pivot_col].clone());
        let frac = &y[pivot_col] - Rat::from_integer(y[pivot_col].floor().to_integer());
        let _ = frac;
        // Choose t so that y[pivot_col] becomes integral: t = -frac(y)/pivot
        // adjusted to rational; integrality of the rest is then forced by
        // saturation (verified below).
        let t = -(&y[pivot_col] - Rat::from_integer(y[pivot_col].floor().to_integer())) / &pivot;
        for j in 0..n {
            y[j] = &y[j] + &t * Rat::from_integer(row[j].clone());
        }
    }
    let out: Vec<Int> = y
        .iter()
        .map(|v| {
            assert!(v.is_integer(), "coset has no integral point");
            v.to_integer()
        })
        .collect();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::num::{qvec, zvec};

    #[test]
    fn solve_and_kernel() {
        let a = vec![qvec(&[1, 2, 3]), qvec(&[2, 4, 6])];
        let b = qvec(&[6, 12]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(dot(&a[0], &x), b[0]);
        assert_eq!(kernel(&a).len(), 2);
        assert!(solve(&a, &qvec(&[1, 0])).is_none());
    }

    #[test]
    fn det_examples() {
        let a = vec![qvec(&[2, 0]), qvec(&[0, 3])];
        assert_eq!(det(&a), Rat::from_integer(Int::from(6)));
        let b = vec![qvec(&[1, 2]), qvec(&[2, 4])];
        assert_eq!(det(&b), Rat::zero());
    }

    #[test]
    fn hnf_unimodular_transform() {
        let a = vec![zvec(&[2, 4, 4]), zvec(&[-6, 6, 12]), zvec(&[10, 4, 16])];
        let (h, u) = hnf(&a);
        assert_eq!(det_int(&u).abs(), Int::one());
        // u * a == h
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Int::zero();
                for k in 0..3 {
                    acc += &u[i][k] * &a[k][j];
                }
                assert_eq!(acc, h[i][j]);
            }
        }
    }

    #[test]
    fn smith_divisors() {
        let a = vec![zvec(&[2, 0]), zvec(&[0, 3])];
        assert_eq!(elementary_divisors(&a), vec![Int::from(1), Int::from(6)]);
        let b = vec![zvec(&[1, 0]), zvec(&[0, 1])];
        assert_eq!(elementary_divisors(&b), vec![Int::from(1), Int::from(1)]);
        let c = vec![zvec(&[1, 2]), zvec(&[1, 2])]; // rank 1
        assert_eq!(elementary_divisors(&c), vec![Int::from(1)]);
    }

    #[test]
    fn kernel_is_saturated() {
        // Kernel of (1 1 2) in Z^3: contains (1,-1,0), (0,2,-1); saturation
        // check: (1,1,-1) = ((1,-1,0)+(0,2,-1))... the HNF rows must generate
        // the full integer kernel.
        let a = vec![zvec(&[1, 1, 2])];
        let k = int_kernel(&a);
        assert_eq!(k.len(), 2);
        for row in &k {
            assert!(dot_zz(&a[0], row).is_zero());
        }
        // Index of generated lattice in saturation must be 1.
        assert!(elementary_divisors(&k).iter().all(|d| d.is_one()));
    }

    #[test]
    fn complement_extends_basis() {
        let span = vec![zvec(&[1, 1, 0, -2])];
        let (b, c) = lattice_complement(&span);
        let mut full = b.clone();
        full.extend(c);
        assert_eq!(det_int(&full).abs(), Int::one());
    }

    use crate::geom::num::dot_zz;
}
