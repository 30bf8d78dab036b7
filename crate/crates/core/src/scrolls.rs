//! Rational normal scrolls `F(a_1, ..., a_n)` over the projective line.
//!
//! Ray layout (0-based): ray 0 and ray 1 are the base rays, ray `2 + i` is
//! the fiber ray of entry `a_i`. In `N = Z^n`:
//!
//! * ray 0 is `e_1`;
//! * ray 1 is `-e_1 + sum_{i < n} (a_i - a_n) e_{i+1}`;
//! * fiber ray `i < n` is `e_{i+1}` and fiber ray `n` is `-(e_2 + ... + e_n)`.
//!
//! The class group grading is then `[[1, 1, -a_1, ..., -a_n], [0, 0, 1, ..., 1]]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fan::Fan;
use crate::intlin::solve_integer;
use crate::triples::{check_admissible, AdmissibleTriple};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScrollError {
    #[error("a scroll needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("cannot parse scroll entries: {0}")]
    Parse(String),
    #[error("entry index {0} out of range")]
    Index(usize),
    #[error("entries {i} and {j} differ by {gap}, need at least 2")]
    GapTooSmall { i: usize, j: usize, gap: i64 },
    #[error("step {step} outside 1..={max}")]
    BadStep { step: i64, max: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScrollSpec {
    pub a: Vec<i64>,
}

impl ScrollSpec {
    pub fn new(a: Vec<i64>) -> Result<Self, ScrollError> {
        if a.len() < 2 {
            return Err(ScrollError::TooShort(a.len()));
        }
        Ok(ScrollSpec { a })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

impl FromStr for ScrollSpec {
    type Err = ScrollError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let a = s
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| ScrollError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        ScrollSpec::new(a)
    }
}

impl fmt::Display for ScrollSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "F({})", parts.join(","))
    }
}

pub const BASE_1: usize = 0;
pub const BASE_2: usize = 1;

pub fn fiber_ray(i: usize) -> usize {
    2 + i
}

pub fn scroll_fan(s: &ScrollSpec) -> Fan {
    let n = s.n();
    let an = s.a[n - 1];
    let unit = |k: usize| -> Vec<i64> { (0..n).map(|j| i64::from(j == k)).collect() };
    let mut rays = vec![unit(0)];
    let mut twist = vec![0; n];
    twist[0] = -1;
    for i in 0..n - 1 {
        twist[i + 1] = s.a[i] - an;
    }
    rays.push(twist);
    for i in 0..n - 1 {
        rays.push(unit(i + 1));
    }
    rays.push((0..n).map(|j| if j == 0 { 0 } else { -1 }).collect());
    let mut cones = Vec::new();
    for b in [BASE_1, BASE_2] {
        for f in 0..n {
            let mut c = vec![b];
            c.extend((0..n).filter(|&g| g != f).map(fiber_ray));
            cones.push(c);
        }
    }
    Fan::new(n, rays, cones).expect("scroll fan is valid")
}

/// Subtract the minimum and sort non-increasing.
pub fn normalize(s: &ScrollSpec) -> ScrollSpec {
    let min = *s.a.iter().min().expect("nonempty");
    let mut a: Vec<i64> = s.a.iter().map(|x| x - min).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    ScrollSpec { a }
}

pub fn is_rigid(s: &ScrollSpec) -> bool {
    normalize(s).a.iter().all(|&x| x <= 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollMove {
    pub from: ScrollSpec,
    pub to: ScrollSpec,
    pub i: usize,
    pub j: usize,
    pub step: i64,
    /// Admissible triple on `scroll_fan(from)`.
    pub triple: AdmissibleTriple,
}

impl ScrollMove {
    /// Re-derives the move from its endpoints and re-checks the triple.
    pub fn revalidate(&self) -> bool {
        match one_step(&self.from, self.i, self.j, self.step) {
            Ok(again) => again == *self && check_admissible(&scroll_fan(&self.from), &self.triple).is_ok(),
            Err(_) => false,
        }
    }
}

/// Moves `step` from entry `i` to entry `j` (0-based). The triple has
/// `rho` the fiber ray of `i`, `C` the first base ray, and values
/// `-step`, `step - gap` on the base rays, `-1` on fiber `i`, `+1` on
/// fiber `j` and `0` on the other fibers.
pub fn one_step(s: &ScrollSpec, i: usize, j: usize, step: i64) -> Result<ScrollMove, ScrollError> {
    let n = s.n();
    for k in [i, j] {
        if k >= n {
            return Err(ScrollError::Index(k));
        }
    }
    let gap = s.a[i] - s.a[j];
    if i == j || gap < 2 {
        return Err(ScrollError::GapTooSmall { i, j, gap });
    }
    if step < 1 || step > gap - 1 {
        return Err(ScrollError::BadStep { step, max: gap - 1 });
    }
    let fan = scroll_fan(s);
    let mut values = vec![0; n + 2];
    values[BASE_1] = -step;
    values[BASE_2] = step - gap;
    values[fiber_ray(i)] = -1;
    values[fiber_ray(j)] = 1;
    let m = solve_integer(&fan.ray_matrix().transpose(), &values).expect("values satisfy the class group relations");
    let triple = AdmissibleTriple { m, rho: fiber_ray(i), component: vec![BASE_1] };
    check_admissible(&fan, &triple).expect("scroll triple is admissible");
    let mut to = s.a.clone();
    to[i] -= step;
    to[j] += step;
    Ok(ScrollMove { from: s.clone(), to: ScrollSpec { a: to }, i, j, step, triple })
}

/// Unit moves from a largest entry to a zero entry of the normalized spec,
/// renormalizing after each move, until the spec is rigid.
pub fn path_to_rigid(s: &ScrollSpec) -> Vec<ScrollMove> {
    let mut cur = normalize(s);
    let mut path = Vec::new();
    while !is_rigid(&cur) {
        let j = cur.n() - 1;
        let mv = one_step(&cur, 0, j, 1).expect("non-rigid normalized spec has gap at least 2");
        cur = normalize(&mv.to);
        path.push(mv);
    }
    path
}

/// `(1^r, 0^(n-r))` with `r = sum a_i mod n`.
pub fn rigid_target(s: &ScrollSpec) -> ScrollSpec {
    let n = s.n() as i64;
    let r = s.a.iter().sum::<i64>().rem_euclid(n);
    ScrollSpec { a: (0..n).map(|k| i64::from(k < r)).collect() }
}

/// Normalized specs with `n` entries in `0..=max`.
pub fn normalized_specs(n: usize, max: i64) -> Vec<ScrollSpec> {
    fn rec(prefix: &mut Vec<i64>, left: usize, cap: i64, out: &mut Vec<ScrollSpec>) {
        if left == 1 {
            prefix.push(0);
            out.push(ScrollSpec { a: prefix.clone() });
            prefix.pop();
            return;
        }
        for x in 0..=cap {
            prefix.push(x);
            rec(prefix, left - 1, x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, max, &mut out);
    out
}
