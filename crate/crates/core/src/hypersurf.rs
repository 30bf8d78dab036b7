//! Lifting homogeneous polynomials to the total space of a deformation.
//!
//! A monomial `S^e` of `X` lifts when `e = nu * x` for some `x >= 0`; the
//! lift is then `T^x` with `T1` exponent zero.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::deform::{hilbert_basis_dets, t_label, DeformationData};
use crate::fan::{cox_data, Fan, FanError};
use crate::intlin::{kernel_basis, solve_integer, solve_nonneg_line, IntVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("class has {got} coordinates, class group has rank {rank}")]
    ClassDimension { got: usize, rank: usize },
    #[error("the set of monomials of this class is infinite (ray {0} has no opposite cone)")]
    UnboundedFiber(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("monomial {index} has class {got:?}, expected {expected:?}")]
    WrongClass { index: usize, got: IntVec, expected: IntVec },
    #[error("monomial {index} has exponent length {got}, expected {expected}")]
    ExponentLength { index: usize, got: usize, expected: usize },
}

/// Polynomial in `S1, ..., Sr` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial {
    pub terms: Vec<(i64, IntVec)>,
}

impl Polynomial {
    /// Parses sums like `2*S1^3*S4 - S2*S3 + 5`. Every exponent vector has
    /// length `r`.
    pub fn parse(text: &str, r: usize) -> Result<Self, LiftError> {
        let err = |what: &str| LiftError::Parse(format!("{what} in {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Polynomial { terms: vec![] });
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        pieces.push(&compact[start..]);
        let mut terms = Vec::new();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-1, &piece[1..]),
                Some(b'+') => (1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(err("empty term"));
            }
            let mut coeff = sign;
            let mut exps = vec![0i64; r];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('S') {
                    let (idx, pow) = match var.split_once('^') {
                        Some((i, p)) => (i, p.parse::<i64>().map_err(|_| err("bad exponent"))?),
                        None => (var, 1),
                    };
                    let i: usize = idx.parse().map_err(|_| err("bad variable"))?;
                    if i == 0 || i > r || pow < 0 {
                        return Err(err(&format!("variable S{idx}^{pow} out of range")));
                    }
                    exps[i - 1] += pow;
                } else {
                    coeff *= factor.parse::<i64>().map_err(|_| err("bad coefficient"))?;
                }
            }
            terms.push((coeff, exps));
        }
        Ok(Polynomial { terms })
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, coeff: i64, first: bool, factors: Vec<String>) -> fmt::Result {
    let sign = if coeff < 0 { "-" } else { "+" };
    if first {
        if coeff < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let c = coeff.abs();
    match (c, factors.is_empty()) {
        (_, true) => write!(f, "{c}"),
        (1, false) => write!(f, "{}", factors.join("*")),
        _ => write!(f, "{c}*{}", factors.join("*")),
    }
}

fn factors(names: &[String], exps: &[i64]) -> Vec<String> {
    names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e != 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let r = self.terms[0].1.len();
        let names: Vec<String> = (0..r).map(crate::deform::s_label).collect();
        for (k, (c, e)) in self.terms.iter().enumerate() {
            write_monomial(f, *c, k == 0, factors(&names, e))?;
        }
        Ok(())
    }
}

/// `Q_X^{-1}(w)` intersected with the nonnegative orthant, sorted.
pub fn riemann_roch_points(fan: &Fan, w: &[i64]) -> Result<Vec<IntVec>, LiftError> {
    let cox = cox_data(fan)?;
    let q = &cox.q;
    if w.len() != q.rows() {
        return Err(LiftError::ClassDimension { got: w.len(), rank: q.rows() });
    }
    let r = fan.n_rays();
    // y > 0 with P y = 0: each -v_i is a nonnegative combination of the
    // rays of some cone, giving a relation positive at i
    let mut y = vec![0i64; r];
    for i in 0..r {
        let minus: IntVec = fan.ray(i).iter().map(|x| -x).collect();
        let found = (0..fan.max_cones().len()).find_map(|c| {
            let x = solve_integer(&fan.cone_matrix(c), &minus)?;
            x.iter().all(|&v| v >= 0).then(|| (c, x))
        });
        let (c, x) = found.ok_or(LiftError::UnboundedFiber(i))?;
        y[i] += 1;
        for (k, &j) in fan.max_cones()[c].iter().enumerate() {
            y[j] += x[k];
        }
    }
    // y = Q^t c, so y . e = c . w on the fiber
    let c = solve_integer(&q.transpose(), &y).expect("relations are spanned by the grading rows");
    let total: i64 = c.iter().zip(w).map(|(a, b)| a * b).sum();
    if total < 0 {
        return Ok(vec![]);
    }
    let cone = fan
        .max_cones()
        .iter()
        .find(|c| c.len() == fan.dim())
        .expect("smooth fan has full cones");
    let rest: Vec<usize> = (0..r).filter(|i| !cone.contains(i)).collect();
    let q_rest = q.select_cols(&rest);
    let q_cone = q.select_cols(cone);
    let limits: Vec<i64> = cone.iter().map(|&j| total / y[j]).collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; cone.len()];
    loop {
        let used = q_cone.mul_vec(&cur);
        let rhs: IntVec = w.iter().zip(&used).map(|(a, b)| a - b).collect();
        if let Some(x) = solve_integer(&q_rest, &rhs) {
            if x.iter().all(|&v| v >= 0) {
                let mut e = vec![0; r];
                for (k, &j) in cone.iter().enumerate() {
                    e[j] = cur[k];
                }
                for (k, &j) in rest.iter().enumerate() {
                    e[j] = x[k];
                }
                out.push(e);
            }
        }
        let mut k = 0;
        while k < cur.len() {
            if cur[k] < limits[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == cur.len() {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// `x >= 0` with `nu * x = e`, if one exists.
pub fn is_liftable(d: &DeformationData, e: &[i64]) -> Option<IntVec> {
    let k = kernel_basis(&d.nu);
    let k = k.into_iter().next().unwrap_or_else(|| vec![0; d.nu.cols()]);
    let x = solve_nonneg_line(&d.nu, e, &k).ok()??;
    debug_assert_eq!(d.nu.mul_vec(&x), e);
    Some(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialLift {
    pub coefficient: i64,
    pub exponent: IntVec,
    pub liftable: bool,
    /// Exponents on the `U` variables; the `T1` exponent is zero.
    pub preimage: Option<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftResult {
    /// Ambient variable labels, without `T1`.
    pub variables: Vec<String>,
    pub monomials: Vec<MonomialLift>,
    /// Index of the first monomial that does not lift.
    pub first_failure: Option<usize>,
}

impl LiftResult {
    pub fn all_liftable(&self) -> bool {
        self.first_failure.is_none()
    }

    /// The lifted polynomial, when every monomial lifts.
    pub fn lifted(&self) -> Option<LiftedPolynomial> {
        if !self.all_liftable() {
            return None;
        }
        Some(LiftedPolynomial {
            variables: self.variables.clone(),
            terms: self
                .monomials
                .iter()
                .map(|m| (m.coefficient, m.preimage.clone().expect("liftable")))
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftedPolynomial {
    pub variables: Vec<String>,
    pub terms: Vec<(i64, IntVec)>,
}

impl fmt::Display for LiftedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, e)) in self.terms.iter().enumerate() {
            write_monomial(f, *c, k == 0, factors(&self.variables, e))?;
        }
        Ok(())
    }
}

/// Lifts each monomial of `poly`, which must be homogeneous of class `w`.
pub fn lift_polynomial(
    fan: &Fan,
    d: &DeformationData,
    w: &[i64],
    poly: &Polynomial,
) -> Result<LiftResult, LiftError> {
    let q = cox_data(fan)?.q;
    if w.len() != q.rows() {
        return Err(LiftError::ClassDimension { got: w.len(), rank: q.rows() });
    }
    let mut monomials = Vec::new();
    let mut first_failure = None;
    for (index, (c, e)) in poly.terms.iter().enumerate() {
        if e.len() != fan.n_rays() {
            return Err(LiftError::ExponentLength { index, got: e.len(), expected: fan.n_rays() });
        }
        let got = q.mul_vec(e);
        if got != w {
            return Err(LiftError::WrongClass { index, got, expected: w.to_vec() });
        }
        let preimage = is_liftable(d, e);
        if preimage.is_none() && first_failure.is_none() {
            first_failure = Some(index);
        }
        monomials.push(MonomialLift {
            coefficient: *c,
            exponent: e.clone(),
            liftable: preimage.is_some(),
            preimage,
        });
    }
    let variables = d.columns().into_iter().map(|c| t_label(Some(c))).collect();
    Ok(LiftResult { variables, monomials, first_failure })
}

/// Deleting `(2,rho)` or `(3,rho)` from `nu` leaves a unimodular matrix.
pub fn hilbert_basis_check(d: &DeformationData) -> bool {
    let (a, b) = hilbert_basis_dets(d);
    a.abs() == 1 && b.abs() == 1
}
