//! Fox n-colorings by exact integer linear algebra.
//!
//! Arcs are maximal over-strands of the PD code; each crossing imposes
//! `2*(over arc) - (under-in arc) - (under-out arc) = 0 mod n`. The count
//! of solutions is computed both by integer diagonalization (Smith-style)
//! and, for prime moduli, by nullity over the prime field; the two paths
//! are cross-checked.

use std::collections::BTreeMap;

use crate::diagram::{tangle::Tangle, LinkDiagram};
use crate::error::Error;
use crate::notation::Fraction;

/// The coloring relation matrix: one row per crossing, one column per arc;
/// crossing-free circles contribute free columns.
pub struct ColoringSystem {
    pub matrix: Vec<Vec<i64>>,
    pub arcs: usize,
    pub free_columns: usize,
}

pub fn coloring_system(d: &LinkDiagram) -> ColoringSystem {
    // arcs: union edges through over-strand passages
    let mut parent: Vec<usize> = (0..d.edge_count()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != c {
            let n = parent[c];
            parent[c] = r;
            c = n;
        }
        r
    }
    for t in d.crossings() {
        let (b, dd) = (t[1], t[3]);
        let rb = find(&mut parent, b);
        let rd = find(&mut parent, dd);
        if rb != rd {
            parent[rb] = rd;
        }
    }
    let mut arc_index: BTreeMap<usize, usize> = BTreeMap::new();
    for e in 0..d.edge_count() {
        let r = find(&mut parent, e);
        let next = arc_index.len();
        arc_index.entry(r).or_insert(next);
    }
    let arcs = arc_index.len();
    let mut matrix = Vec::with_capacity(d.crossing_count());
    for t in d.crossings() {
        let mut row = vec![0i64; arcs];
        let over = arc_index[&find(&mut parent, t[1])];
        let uin = arc_index[&find(&mut parent, t[0])];
        let uout = arc_index[&find(&mut parent, t[2])];
        row[over] += 2;
        row[uin] -= 1;
        row[uout] -= 1;
        matrix.push(row);
    }
    ColoringSystem { matrix, arcs, free_columns: d.free_circles() }
}

/// Diagonalizes an integer matrix by unimodular row and column operations
/// (no divisibility chain needed for solution counting).
fn diagonalize(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut r0 = 0;
    let mut c0 = 0;
    while r0 < rows && c0 < cols {
        // minimal absolute value pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in r0..rows {
            for c in c0..cols {
                if m[r][c] != 0
                    && pivot.map_or(true, |(pr, pc)| m[r][c].abs() < m[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(r0, pr);
        for row in &mut m {
            row.swap(c0, pc);
        }
        loop {
            let p = m[r0][c0];
            let mut clean = true;
            for r in (r0 + 1)..rows {
                let f = m[r][c0] / p;
                if f != 0 {
                    for c in c0..cols {
                        m[r][c] -= f * m[r0][c];
                    }
                }
                if m[r][c0] != 0 {
                    clean = false;
                }
            }
            for c in (c0 + 1)..cols {
                let f = m[r0][c] / p;
                if f != 0 {
                    for r in r0..rows {
                        m[r][c] -= f * m[r][c0];
                    }
                }
                if m[r0][c] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // a nonzero remainder became the new smaller pivot candidate
            let mut best = (r0, c0);
            for r in r0..rows {
                for c in c0..cols {
                    if m[r][c] != 0 && m[r][c].abs() < m[best.0][best.1].abs() {
                        best = (r, c);
                    }
                }
            }
            m.swap(r0, best.0);
            for row in &mut m {
                row.swap(c0, best.1);
            }
        }
        diag.push(m[r0][c0].abs());
        r0 += 1;
        c0 += 1;
    }
    diag
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Number of Fox n-colorings (including the constant ones).
pub fn col_n(d: &LinkDiagram, n: i64) -> Result<u128, Error> {
    if n < 2 {
        return Err(Error::Invalid("coloring modulus must be at least 2".into()));
    }
    let sys = coloring_system(d);
    let count = count_solutions(&sys, n);
    if is_prime(n) {
        let nullity = nullity_mod_p(&sys.matrix, n) + sys.free_columns;
        let by_field = (n as u128).pow(nullity as u32);
        debug_assert_eq!(count, by_field, "integer and mod-p paths disagree");
    }
    Ok(count)
}

fn count_solutions(sys: &ColoringSystem, n: i64) -> u128 {
    let diag = diagonalize(sys.matrix.clone());
    let rank = diag.len();
    let mut count: u128 = 1;
    for &d in &diag {
        count *= gcd(d, n) as u128;
    }
    let free = sys.arcs - rank + sys.free_columns;
    count * (n as u128).pow(free as u32)
}

fn nullity_mod_p(matrix: &[Vec<i64>], p: i64) -> usize {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut m: Vec<Vec<i64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][c] % p != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][c], p);
        for v in &mut m[rank] {
            *v = (*v * inv).rem_euclid(p);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for cc in 0..cols {
                    m[r][cc] = (m[r][cc] - f * m[rank][cc]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    cols - rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // p prime
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Index into the Lemma 2.3 table: a twist count or the infinity tangle.
pub type TwistIndex = Option<i64>;

/// For prime `n`, the table of `col_n(([i] * [j])^N)` over
/// `i, j in {infinity, 0, ..., n-1}`.
pub fn lemma23_table(n: i64) -> Result<BTreeMap<(TwistIndex, TwistIndex), u128>, Error> {
    if !is_prime(n) || !(2..=13).contains(&n) {
        return Err(Error::Invalid("lemma23_table needs a prime modulus in 2..=13".into()));
    }
    let indices: Vec<TwistIndex> =
        std::iter::once(None).chain((0..n).map(Some)).collect();
    let mut table = BTreeMap::new();
    for &i in &indices {
        for &j in &indices {
            let mut t = tangle_of(i);
            t.attach_right(tangle_of(j));
            let d = t.closure_n();
            table.insert((i, j), col_n(&d, n)?);
        }
    }
    Ok(table)
}

fn tangle_of(i: TwistIndex) -> Tangle {
    match i {
        None => Tangle::infinity(),
        Some(k) => Tangle::from_fraction(&Fraction::from_int(k)),
    }
}
