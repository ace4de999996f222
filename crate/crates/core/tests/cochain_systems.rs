//! The cocycle spaces against the naive systems over all group elements,
//! solved with a separate elimination routine.

use covquot::catalog;
use covquot::cohomology::{h1_space, h2_space};
use covquot::module::FlModule;

fn rank_mod(mut rows: Vec<Vec<u64>>, l: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(l)) else { continue };
        rows.swap(rank, p);
        let inv = (1..l).find(|x| x * rows[rank][c] % l == 1).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % l;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (l - f) * y) % l;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Entry `(i, j)` of the action of `h`.
fn act(m: &FlModule, h: usize, i: usize, j: usize) -> u64 {
    m.matrix(h).get(i, j) as u64
}

/// `dim Z^1` and `dim B^1` from `δc(a, b) = a·c(b) − c(ab) + c(a)` over
/// all pairs, with `c` normalized.
fn naive_degree_one(m: &FlModule) -> (usize, usize) {
    let g = m.group();
    let (n, d, l) = (g.order(), m.dim(), m.l() as u64);
    let unknowns = (n - 1) * d;
    let var = |x: usize, i: usize| (x - 1) * d + i;
    let mut rows = Vec::new();
    for a in 1..n {
        for b in 1..n {
            for i in 0..d {
                let mut row = vec![0u64; unknowns];
                for j in 0..d {
                    row[var(b, j)] = (row[var(b, j)] + act(m, a, i, j)) % l;
                }
                let ab = g.mul(a, b);
                if ab != 0 {
                    row[var(ab, i)] = (row[var(ab, i)] + l - 1) % l;
                }
                row[var(a, i)] = (row[var(a, i)] + 1) % l;
                rows.push(row);
            }
        }
    }
    let z1 = unknowns - rank_mod(rows, l);
    // B^1 is the image of m ↦ (g ↦ g·m − m)
    let image: Vec<Vec<u64>> = (0..d)
        .map(|j| {
            let mut v = vec![0u64; unknowns];
            for x in 1..n {
                for i in 0..d {
                    v[var(x, i)] = (act(m, x, i, j) + l - u64::from(i == j)) % l;
                }
            }
            v
        })
        .collect();
    (z1, rank_mod(image, l))
}

/// `dim Z^2` and `dim B^2` for normalized cochains over all triples.
fn naive_degree_two(m: &FlModule) -> (usize, usize) {
    let g = m.group();
    let (n, d, l) = (g.order(), m.dim(), m.l() as u64);
    let unknowns = (n - 1) * (n - 1) * d;
    let var = |x: usize, y: usize, i: usize| ((x - 1) * (n - 1) + (y - 1)) * d + i;
    let mut rows = Vec::new();
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                for i in 0..d {
                    let mut row = vec![0u64; unknowns];
                    for j in 0..d {
                        row[var(b, c, j)] = (row[var(b, c, j)] + act(m, a, i, j)) % l;
                    }
                    let (ab, bc) = (g.mul(a, b), g.mul(b, c));
                    if ab != 0 {
                        row[var(ab, c, i)] = (row[var(ab, c, i)] + l - 1) % l;
                    }
                    if bc != 0 {
                        row[var(a, bc, i)] = (row[var(a, bc, i)] + 1) % l;
                    }
                    row[var(a, b, i)] = (row[var(a, b, i)] + l - 1) % l;
                    rows.push(row);
                }
            }
        }
    }
    let z2 = unknowns - rank_mod(rows, l);
    // B^2: δ of the normalized unit 1-cochains
    let mut image = Vec::new();
    for x in 1..n {
        for k in 0..d {
            let c = |y: usize, i: usize| u64::from(y == x && i == k);
            let mut v = vec![0u64; unknowns];
            for a in 1..n {
                for b in 1..n {
                    let ab = g.mul(a, b);
                    for i in 0..d {
                        let mut s = (0..d).map(|j| act(m, a, i, j) * c(b, j)).sum::<u64>();
                        s += l - c(ab, i) + c(a, i);
                        v[var(a, b, i)] = s % l;
                    }
                }
            }
            image.push(v);
        }
    }
    (z2, rank_mod(image, l))
}

fn small_modules() -> impl Iterator<Item = &'static catalog::CatalogModule> {
    catalog::modules()
        .iter()
        .filter(|m| m.module.group().order() <= 12 && m.module.dim() <= 3)
}

#[test]
fn degree_one_matches_the_full_system() {
    let mut seen = 0;
    for cm in small_modules() {
        let (z1, b1) = naive_degree_one(&cm.module);
        let space = h1_space(&cm.module);
        assert_eq!(space.cocycles().dim(), z1, "{}", cm.name);
        assert_eq!(space.coboundaries().dim(), b1, "{}", cm.name);
        assert_eq!(space.dim(), z1 - b1, "{}", cm.name);
        seen += 1;
    }
    assert!(seen > 100);
}

#[test]
fn degree_two_matches_the_full_system() {
    let mut seen = 0;
    for cm in small_modules().filter(|m| m.module.group().order() <= 10) {
        let (z2, b2) = naive_degree_two(&cm.module);
        let space = h2_space(&cm.module);
        assert_eq!(space.cocycles().dim(), z2, "{}", cm.name);
        assert_eq!(space.coboundaries().dim(), b2, "{}", cm.name);
        seen += 1;
    }
    assert!(seen > 50);
}
