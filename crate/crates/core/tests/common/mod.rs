#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use num_bigint::BigInt;

use toric_deform::deform::{build_deformation, DeformationData};
use toric_deform::fan::standard::{hirzebruch, p1_power, projective_space};
use toric_deform::fan::Fan;
use toric_deform::scrolls::{scroll_fan, ScrollSpec};
use toric_deform::triples::{default_bound, enumerate_triples};

pub fn scroll(a: &[i64]) -> Fan {
    scroll_fan(&ScrollSpec::new(a.to_vec()).unwrap())
}

/// Fans used across the suites, with names for messages.
pub fn suite_fans() -> Vec<(String, Fan)> {
    let mut out = vec![
        ("P2".to_string(), projective_space(2)),
        ("P3".to_string(), projective_space(3)),
        ("P1xP1xP1".to_string(), p1_power(3)),
    ];
    for n in 0..=5 {
        out.push((format!("F{n}"), hirzebruch(n)));
    }
    for a in [[2, 1, 0], [3, 1, 0], [2, 0, 0], [3, 3, 0]] {
        out.push((format!("F{a:?}"), scroll(&a)));
    }
    out
}

/// Every deformation from the admissible triples of the suite fans.
pub fn suite_deformations() -> Vec<(String, Fan, DeformationData)> {
    let mut out = Vec::new();
    for (name, fan) in suite_fans() {
        for t in enumerate_triples(&fan, default_bound(&fan)).unwrap() {
            let d = build_deformation(&fan, &t).unwrap();
            out.push((name.clone(), fan.clone(), d));
        }
    }
    out
}

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for j in c..cols {
                    let v = m[rank][j].clone() * f.clone();
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over the rationals.
pub fn rational_det(rows: &[Vec<i64>]) -> BigRational {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..n {
            let f = m[i][c].clone() / m[c][c].clone();
            for j in c..n {
                let v = m[c][j].clone() * f.clone();
                m[i][j] -= v;
            }
        }
    }
    det
}

pub fn abs_is_one(x: &BigRational) -> bool {
    x.abs().is_one()
}
