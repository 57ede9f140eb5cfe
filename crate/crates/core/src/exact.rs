//! Exact rational arithmetic: linear system solving, matrix rank, and a small
//! simplex-based linear programming kernel over `BigRational`.
//!
//! Everything here is dense and unoptimized; problem sizes in this crate are
//! tiny (a handful of states, actions, messages), so exactness beats speed.

use num::{BigInt, BigRational, Signed, Zero};

pub type Rat = BigRational;

/// Shorthand for `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parse a rational written as `p/q` or a plain integer `p`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Render a rational in the `p/q` form used by every file format in this
/// crate (plain `p` when the denominator is one).
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Outcome of exactly solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinSolve {
    Unique(Vec<Rat>),
    Infeasible,
    /// Consistent but rank-deficient; carries one particular solution and the
    /// dimension of the solution family.
    Underdetermined { particular: Vec<Rat>, nullity: usize },
}

/// Gauss-Jordan elimination with exact pivots.
pub fn solve_linear(a: &[Vec<Rat>], b: &[Rat]) -> LinSolve {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    for i in r..rows {
        if !m[i][cols].is_zero() {
            return LinSolve::Infeasible;
        }
    }

    let mut x = vec![Rat::zero(); cols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[k][cols].clone();
    }
    if pivot_cols.len() == cols {
        LinSolve::Unique(x)
    } else {
        LinSolve::Underdetermined { particular: x, nullity: cols - pivot_cols.len() }
    }
}

/// Rank of a rational matrix.
pub fn matrix_rank(a: &[Vec<Rat>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for i in rank + 1..rows {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in c..cols {
                    let sub = &f * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Result of a linear program in the form used by [`maximize`].
#[derive(Debug, Clone)]
pub enum Lp {
    Optimal { value: Rat, x: Vec<Rat> },
    Infeasible,
    Unbounded,
}

/// Maximize `c . x` subject to `a_eq x = b_eq`, `a_ge x >= b_ge`, `x >= 0`.
///
/// Two-phase simplex with Bland's rule, all pivots exact.
pub fn maximize(
    c: &[Rat],
    a_eq: &[Vec<Rat>],
    b_eq: &[Rat],
    a_ge: &[Vec<Rat>],
    b_ge: &[Rat],
) -> Lp {
    let n = c.len();
    // Standard form: append one surplus variable per >= row.
    let n_slack = a_ge.len();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for (row, b) in a_eq.iter().zip(b_eq) {
        assert_eq!(row.len(), n);
        let mut r = row.clone();
        r.extend(std::iter::repeat(Rat::zero()).take(n_slack));
        rows.push(r);
        rhs.push(b.clone());
    }
    for (k, (row, b)) in a_ge.iter().zip(b_ge).enumerate() {
        assert_eq!(row.len(), n);
        let mut r = row.clone();
        for j in 0..n_slack {
            r.push(if j == k { -Rat::one() } else { Rat::zero() });
        }
        rows.push(r);
        rhs.push(b.clone());
    }
    let total = n + n_slack;
    // Make rhs nonnegative.
    for (row, b) in rows.iter_mut().zip(rhs.iter_mut()) {
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            *b = -b.clone();
        }
    }
    let m = rows.len();
    // Phase 1 tableau with one artificial per row.
    let width = total + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, (row, b)) in rows.iter().zip(&rhs).enumerate() {
        let mut r = vec![Rat::zero(); width + 1];
        r[..total].clone_from_slice(row);
        r[total + i] = Rat::one();
        r[width] = b.clone();
        t.push(r);
    }
    let mut basis: Vec<usize> = (total..width).collect();
    // Phase 1: maximize -(sum of artificials). With the artificial basis the
    // reduced-cost row is the column sum over original variables, zero on the
    // artificials themselves.
    let mut obj = vec![Rat::zero(); width + 1];
    for i in 0..m {
        for j in 0..=width {
            let add = t[i][j].clone();
            obj[j] += add;
        }
    }
    for k in 0..m {
        obj[total + k] = Rat::zero();
    }
    if !run_simplex(&mut t, &mut basis, &mut obj, total) {
        unreachable!("phase 1 is always bounded");
    }
    if !obj[width].is_zero() {
        return Lp::Infeasible;
    }
    // Drive any artificial variables out of the basis.
    for i in 0..m {
        if basis[i] >= total {
            if let Some(j) = (0..total).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, &mut obj, i, j);
            }
        }
    }
    // Phase 2 objective over the original variables.
    let mut obj2 = vec![Rat::zero(); width + 1];
    for (j, cj) in c.iter().enumerate() {
        obj2[j] = cj.clone();
    }
    // Express objective in terms of nonbasic variables.
    for i in 0..m {
        let bj = basis[i];
        if bj < total && !obj2[bj].is_zero() {
            let f = obj2[bj].clone();
            for j in 0..=width {
                let sub = &f * &t[i][j];
                obj2[j] -= sub;
            }
        }
    }
    if !run_simplex(&mut t, &mut basis, &mut obj2, total) {
        return Lp::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[i][width].clone();
        }
    }
    let value = -obj2[width].clone();
    Lp::Optimal { value, x }
}

/// Feasibility of `a_eq x = b_eq`, `a_ge x >= b_ge`, `x >= 0`.
pub fn feasible(a_eq: &[Vec<Rat>], b_eq: &[Rat], a_ge: &[Vec<Rat>], b_ge: &[Rat], n: usize) -> Option<Vec<Rat>> {
    let c = vec![Rat::zero(); n];
    match maximize(&c, a_eq, b_eq, a_ge, b_ge) {
        Lp::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

use num::One;

/// Bland-rule simplex on a tableau whose objective row is to be maximized
/// (entries are reduced costs; we pivot while some cost over the first
/// `eligible` columns is positive). Returns false on unboundedness.
fn run_simplex(t: &mut Vec<Vec<Rat>>, basis: &mut Vec<usize>, obj: &mut Vec<Rat>, eligible: usize) -> bool {
    let m = t.len();
    let width = obj.len() - 1;
    loop {
        let Some(col) = (0..eligible).find(|&j| obj[j].is_positive()) else {
            return true;
        };
        // Ratio test, Bland tie-break on basis index.
        let mut best: Option<(Rat, usize)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][width] / &t[i][col];
                match &best {
                    None => best = Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < *r || (ratio == *r && basis[i] < basis[*bi]) {
                            best = Some((ratio, i));
                        }
                    }
                }
            }
        }
        let Some((_, row)) = best else {
            return false;
        };
        pivot(t, basis, obj, row, col);
    }
}

fn pivot(t: &mut Vec<Vec<Rat>>, basis: &mut Vec<usize>, obj: &mut Vec<Rat>, row: usize, col: usize) {
    let width = obj.len() - 1;
    let piv = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= piv.clone();
    }
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for j in 0..=width {
                let sub = &f * &t[row][j];
                t[i][j] -= sub;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for j in 0..=width {
            let sub = &f * &t[row][j];
            obj[j] -= sub;
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_unique() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![rint(1), rint(1)], vec![rint(1), rint(-1)]];
        let b = vec![rint(3), rint(1)];
        assert_eq!(solve_linear(&a, &b), LinSolve::Unique(vec![rint(2), rint(1)]));
    }

    #[test]
    fn solve_infeasible_and_underdetermined() {
        let a = vec![vec![rint(1), rint(1)], vec![rint(2), rint(2)]];
        assert_eq!(solve_linear(&a, &[rint(1), rint(3)]), LinSolve::Infeasible);
        match solve_linear(&a, &[rint(1), rint(2)]) {
            LinSolve::Underdetermined { nullity, .. } => assert_eq!(nullity, 1),
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn rank_small() {
        let a = vec![vec![rint(1), rint(2)], vec![rint(2), rint(4)], vec![rint(0), rint(1)]];
        assert_eq!(matrix_rank(&a), 2);
    }

    #[test]
    fn lp_basic() {
        // max x + y st x + 2y <= 4, x <= 3  (as >= with negated rows), x,y >= 0
        let c = [rint(1), rint(1)];
        let a_ge = vec![vec![rint(-1), rint(-2)], vec![rint(-1), rint(0)]];
        let b_ge = vec![rint(-4), rint(-3)];
        match maximize(&c, &[], &[], &a_ge, &b_ge) {
            Lp::Optimal { value, .. } => assert_eq!(value, rat(7, 2)),
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn lp_infeasible() {
        // x = 1 and x = 2
        let a_eq = vec![vec![rint(1)], vec![rint(1)]];
        let b_eq = vec![rint(1), rint(2)];
        assert!(matches!(maximize(&[rint(0)], &a_eq, &b_eq, &[], &[]), Lp::Infeasible));
    }

    #[test]
    fn lp_simplex_feasibility_on_simplex() {
        // Belief simplex in 3 coordinates with a dominance cut.
        let a_eq = vec![vec![rint(1), rint(1), rint(1)]];
        let b_eq = vec![rint(1)];
        let a_ge = vec![vec![rint(1), rint(-1), rint(0)]];
        let b_ge = vec![rint(0)];
        let x = feasible(&a_eq, &b_eq, &a_ge, &b_ge, 3).expect("feasible");
        assert_eq!(x.iter().cloned().sum::<Rat>(), rint(1));
    }
}
