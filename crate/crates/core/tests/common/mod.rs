//! Oracles shared by several test targets.
#![allow(dead_code)]

fn pascal_parity(max: usize) -> Vec<Vec<bool>> {
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for a in 1..=max {
        let prev = &rows[a - 1];
        let mut row = vec![1u64; a + 1];
        for b in 1..a {
            row[b] = (prev[b - 1] + prev[b]) % 2;
        }
        rows.push(row);
    }
    rows.into_iter().map(|r| r.into_iter().map(|x| x % 2 == 1).collect()).collect()
}

/// Literal reading of the admissibility condition for groups without a
/// free leading generator.
pub fn brute_admissible(d: &[u32], k: &[u32]) -> Vec<Vec<u32>> {
    let parity = pascal_parity(64);
    let r = d.len();
    let mut all = vec![vec![]];
    for i in 0..r {
        let mut next = Vec::new();
        for t in &all {
            for x in 0..=k[i] {
                let mut u: Vec<u32> = t.clone();
                u.push(x);
                next.push(u);
            }
        }
        all = next;
    }
    all.into_iter()
        .filter(|j| {
            (0..r).all(|i| {
                (0..=d[i]).all(|l| {
                    !parity[d[i] as usize][l as usize]
                        || (0..r).all(|m| {
                            (0..8).all(|s| d[i] + l != (1 << s) * d[m] || j[m] <= j[i] + s)
                        })
                })
            })
        })
        .collect()
}

/// `prod (1 - t^{d 2^j})` divided by `prod (1 - t^d)` by long division.
pub fn poincare_by_division(d: &[u32], j: &[u32]) -> Vec<u64> {
    let mut num = vec![1i64];
    let mut den = vec![1i64];
    let mul = |p: &[i64], e: usize| {
        let mut out = vec![0i64; p.len() + e];
        for (i, &c) in p.iter().enumerate() {
            out[i] += c;
            out[i + e] -= c;
        }
        out
    };
    for (&di, &ji) in d.iter().zip(j) {
        num = mul(&num, (di as usize) << ji);
        den = mul(&den, di as usize);
    }
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![0i64; qlen];
    let mut rem = num.clone();
    for i in 0..qlen {
        let c = rem[i] / den[0];
        q[i] = c;
        for (k, &dc) in den.iter().enumerate() {
            rem[i + k] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&x| x == 0));
    q.into_iter().map(|c| u64::try_from(c).unwrap()).collect()
}

