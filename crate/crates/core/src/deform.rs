//! One-parameter deformations attached to admissible triples.
//!
//! For an admissible triple `(m, rho, C)` the ambient toric variety has ray
//! matrix `P`, whose columns are a base column `T1` followed by one column
//! per index `(k, i)` in `U1, ..., U4`. The total space is cut out by a
//! trinomial in the Cox ring of the ambient variety, and setting `T1 = 0`
//! recovers the original variety.
//!
//! Lattice coordinates: `N` splits as `Z + K` with `K = ker m`, using the
//! section `gamma(t) = -t * v_rho` and the projection
//! `pi(v) = v + m(v) v_rho`. The embedding of `N` into the ambient lattice is
//! `iota(v) = (m(v), m(v), pi(v), 0)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fan::{Fan, FanError};
use crate::intlin::{
    cokernel_map, determinant, dot, kernel_basis, rank, smith_normal_form, solve_integer, IntMat,
    IntVec,
};
use crate::report::Check;
use crate::triples::{check_admissible, AdmissibleTriple, TripleError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeformError {
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error("ambient cone {cone} is not unimodular")]
    NotUnimodular { cone: usize },
    #[error("ambient fan: {0}")]
    Fan(#[from] FanError),
}

/// Splitting `0 -> K -> N -> Z -> 0` of `m`, with `gamma(-1) = v_rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub m: IntVec,
    pub rho: usize,
    /// Columns form a basis of `K = ker m`, in Hermite normal form.
    pub k_basis: IntMat,
    gamma_unit: IntVec,
}

impl Splitting {
    pub fn new(fan: &Fan, m: &[i64], rho: usize) -> Self {
        let n = fan.dim();
        let k = kernel_basis(&IntMat::from_rows(n, &[m]));
        Splitting {
            m: m.to_vec(),
            rho,
            k_basis: IntMat::from_cols(n, &k),
            gamma_unit: fan.ray(rho).iter().map(|x| -x).collect(),
        }
    }

    pub fn rank_k(&self) -> usize {
        self.k_basis.cols()
    }

    pub fn gamma(&self, t: i64) -> IntVec {
        self.gamma_unit.iter().map(|x| t * x).collect()
    }

    /// `v - gamma(m(v))` in `K` coordinates.
    pub fn proj(&self, v: &[i64]) -> IntVec {
        let g = self.gamma(dot(&self.m, v));
        let w: IntVec = v.iter().zip(&g).map(|(a, b)| a - b).collect();
        solve_integer(&self.k_basis, &w).expect("projection lands in K")
    }

    pub fn k_vector(&self, coords: &[i64]) -> IntVec {
        self.k_basis.mul_vec(coords)
    }
}

/// Index sets `U1, ..., U4`, stored as ascending ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UIndex {
    pub u1: Vec<usize>,
    pub u2: Vec<usize>,
    pub u3: Vec<usize>,
    pub u4: Vec<usize>,
}

impl UIndex {
    /// `a_i = m(v_i)` classified into blocks; `rho` lands in both `U2` and `U3`.
    pub fn new(values: &[i64], rho: usize, component: &[usize]) -> Self {
        let mut u = UIndex { u1: vec![], u2: vec![], u3: vec![], u4: vec![] };
        for (i, &a) in values.iter().enumerate() {
            if a > 0 {
                u.u1.push(i);
            } else if a == 0 {
                u.u4.push(i);
            } else {
                if i == rho || component.contains(&i) {
                    u.u2.push(i);
                }
                if !component.contains(&i) {
                    u.u3.push(i);
                }
            }
        }
        u
    }

    /// `(block, ray)` pairs in column order of `Ptilde`.
    pub fn columns(&self) -> Vec<(usize, usize)> {
        [(1, &self.u1), (2, &self.u2), (3, &self.u3), (4, &self.u4)]
            .into_iter()
            .flat_map(|(b, v)| v.iter().map(move |&i| (b, i)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.u1.len() + self.u2.len() + self.u3.len() + self.u4.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Variable name of a column: `T1` or `T(k,i)` with 1-based ray `i`.
pub fn t_label(column: Option<(usize, usize)>) -> String {
    match column {
        None => "T1".into(),
        Some((k, i)) => format!("T({},{})", k, i + 1),
    }
}

pub fn s_label(ray: usize) -> String {
    format!("S{}", ray + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: i64,
    /// One exponent per ambient variable, `T1` first.
    pub exponents: IntVec,
}

/// `T1 * prod_{U1} T^a - prod_{U2} T^{-a} + prod_{U3} T^{-a}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trinomial {
    pub variables: Vec<String>,
    pub terms: [Term; 3],
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            let sign = if t.coefficient < 0 { "-" } else { "+" };
            if n == 0 {
                if t.coefficient < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors: Vec<String> = self
                .variables
                .iter()
                .zip(&t.exponents)
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationData {
    pub triple: AdmissibleTriple,
    pub values: IntVec,
    pub splitting: Splitting,
    pub u: UIndex,
    /// `(n + 2) x (1 + |U|)`; column 0 is `T1`.
    pub p: IntMat,
    /// `p` without its first column and last row.
    pub ptilde: IntMat,
    /// Grading of the ambient Cox ring, `coker(Ptilde^t)`, on the `U` columns.
    pub qtilde: IntMat,
    /// Column indices of `p` (0 is `T1`) of each ambient maximal cone, in
    /// the order of the fan's maximal cones.
    pub ambient_cones: Vec<Vec<usize>>,
    pub trinomial: Trinomial,
    /// `|U| x r`.
    pub psi: IntMat,
    /// `r x |U|`, the transpose of `psi`.
    pub nu: IntMat,
}

impl DeformationData {
    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.u.columns()
    }

    /// Labels of the columns of `p`.
    pub fn variables(&self) -> Vec<String> {
        std::iter::once(t_label(None))
            .chain(self.columns().into_iter().map(|c| t_label(Some(c))))
            .collect()
    }

    /// Column of `p` holding `(block, ray)`.
    pub fn column_of(&self, block: usize, ray: usize) -> Option<usize> {
        self.columns().iter().position(|&c| c == (block, ray)).map(|j| j + 1)
    }

    /// `iota(v) = (m(v), m(v), pi(v), 0)`.
    pub fn iota(&self, v: &[i64]) -> IntVec {
        let a = dot(&self.triple.m, v);
        let mut out = vec![a, a];
        out.extend(self.splitting.proj(v));
        out.push(0);
        out
    }

    /// Exponent difference (on the `U` columns) of the `U2` and `U3` terms.
    pub fn binomial_exponent(&self) -> IntVec {
        let t = &self.trinomial.terms;
        t[1].exponents[1..].iter().zip(&t[2].exponents[1..]).map(|(a, b)| a - b).collect()
    }
}

pub fn build_deformation(fan: &Fan, t: &AdmissibleTriple) -> Result<DeformationData, DeformError> {
    check_admissible(fan, t)?;
    let n = fan.dim();
    let r = fan.n_rays();
    let rho = t.rho;
    let values = fan.evaluate(&t.m);
    let splitting = Splitting::new(fan, &t.m, rho);
    let u = UIndex::new(&values, rho, &t.component);
    let cols = u.columns();
    let kr = splitting.rank_k();
    let height = 2 + kr + 1;

    let mut p = IntMat::zeros(height, 1 + cols.len());
    for (row, x) in [(0, 1), (1, 1), (height - 1, 1)] {
        p.set(row, 0, x);
    }
    for (j, &(block, i)) in cols.iter().enumerate() {
        let a = values[i];
        if block == 1 || block == 2 {
            p.set(0, j + 1, a);
        }
        if block == 1 || block == 3 {
            p.set(1, j + 1, a);
        }
        for (q, x) in splitting.proj(fan.ray(i)).into_iter().enumerate() {
            p.set(2 + q, j + 1, x);
        }
    }
    let ptilde = IntMat::from_rows(
        cols.len(),
        &(0..height - 1).map(|i| p.row(i)[1..].to_vec()).collect::<Vec<_>>(),
    );
    let qtilde = cokernel_map(&ptilde.transpose()).grading;

    let col = |block: usize, i: usize| cols.iter().position(|&c| c == (block, i)).expect("column exists") + 1;
    let in_c = |i: usize| t.component.contains(&i);
    let mut ambient_cones = Vec::new();
    for cone in fan.max_cones() {
        let mut s: BTreeSet<usize> = BTreeSet::new();
        s.insert(0);
        for &i in cone {
            let a = values[i];
            if i == rho {
                s.insert(col(2, i));
                s.insert(col(3, i));
            } else if a > 0 {
                s.insert(col(1, i));
            } else if a == 0 {
                s.insert(col(4, i));
            } else if in_c(i) {
                s.insert(col(2, i));
            } else {
                s.insert(col(3, i));
            }
        }
        if cone.iter().any(|&i| in_c(i)) {
            s.insert(col(3, rho));
        } else {
            s.insert(col(2, rho));
        }
        ambient_cones.push(s.into_iter().collect::<Vec<_>>());
    }
    for (c, cone) in ambient_cones.iter().enumerate() {
        if cone.len() != n + 2 || determinant(&p.select_cols(cone)).abs() != 1 {
            return Err(DeformError::NotUnimodular { cone: c });
        }
    }

    let nvars = 1 + cols.len();
    let mut terms = [
        Term { coefficient: 1, exponents: vec![0; nvars] },
        Term { coefficient: -1, exponents: vec![0; nvars] },
        Term { coefficient: 1, exponents: vec![0; nvars] },
    ];
    terms[0].exponents[0] = 1;
    for (j, &(block, i)) in cols.iter().enumerate() {
        match block {
            1 => terms[0].exponents[j + 1] = values[i],
            2 => terms[1].exponents[j + 1] = -values[i],
            3 => terms[2].exponents[j + 1] = -values[i],
            _ => {}
        }
    }
    let variables = std::iter::once(t_label(None))
        .chain(cols.iter().map(|&c| t_label(Some(c))))
        .collect();
    let trinomial = Trinomial { variables, terms };

    let mut psi = IntMat::zeros(cols.len(), r);
    for (i, &a) in values.iter().enumerate() {
        let mut add = |block: usize, ray: usize, x: i64| {
            let j = col(block, ray) - 1;
            psi.set(j, i, psi.get(j, i) + x);
        };
        if i == rho {
            add(2, i, 1);
            add(3, i, 1);
        } else if a > 0 {
            add(1, i, 1);
        } else if a == 0 {
            add(4, i, 1);
        } else if in_c(i) {
            add(2, i, 1);
            add(3, rho, -a);
        } else {
            add(3, i, 1);
            add(2, rho, -a);
        }
    }
    let nu = psi.transpose();

    Ok(DeformationData {
        triple: t.clone(),
        values,
        splitting,
        u,
        p,
        ptilde,
        qtilde,
        ambient_cones,
        trinomial,
        psi,
        nu,
    })
}

/// Image of a ring variable under `eta`: `T1 -> 0`, `T(k,i) -> prod S^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaEntry {
    pub variable: String,
    /// `None` for `T1`, which maps to zero.
    pub image: Option<IntVec>,
}

/// The substitution `eta`, written out rule by rule.
///
/// `T(2,rho) -> S_rho * prod S_j^{-a_j}` over negative rays outside
/// `C` and other than `rho`; `T(3,rho) -> S_rho * prod S_j^{-a_j}` over
/// `C`; every other `T(k,j) -> S_j`.
pub fn eta_map(d: &DeformationData) -> Vec<EtaEntry> {
    let r = d.values.len();
    let rho = d.triple.rho;
    let mut out = vec![EtaEntry { variable: t_label(None), image: None }];
    for (block, j) in d.columns() {
        let mut e = vec![0; r];
        e[j] = 1;
        if j == rho && (block == 2 || block == 3) {
            for (i, &a) in d.values.iter().enumerate() {
                let in_c = d.triple.component.contains(&i);
                let wanted = if block == 2 { !in_c && i != rho } else { in_c };
                if a < 0 && wanted {
                    e[i] -= a;
                }
            }
        }
        out.push(EtaEntry { variable: t_label(Some((block, j))), image: Some(e) });
    }
    out
}

/// Applies `eta` to a monomial given by exponents on the ambient variables
/// (`T1` first). `None` when the image is zero.
pub fn eta_monomial(eta: &[EtaEntry], exponents: &[i64]) -> Option<IntVec> {
    let r = eta.iter().find_map(|e| e.image.as_ref().map(Vec::len)).unwrap_or(0);
    let mut out = vec![0; r];
    for (entry, &x) in eta.iter().zip(exponents) {
        if x == 0 {
            continue;
        }
        let img = entry.image.as_ref()?;
        for (o, v) in out.iter_mut().zip(img) {
            *o += x * v;
        }
    }
    Some(out)
}

/// Rays are the columns of `p`, maximal cones the ambient cones.
pub fn ambient_fan(d: &DeformationData) -> Result<Fan, DeformError> {
    let rays = d.p.transpose().to_rows();
    let fan = Fan::new(d.p.rows(), rays, d.ambient_cones.clone())?;
    for c in 0..fan.max_cones().len() {
        if determinant(&fan.cone_matrix(c)).abs() != 1 {
            return Err(DeformError::NotUnimodular { cone: c });
        }
    }
    Ok(fan)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralFiberReport {
    pub checks: Vec<Check>,
}

impl CentralFiberReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn iota_cone_membership(fan: &Fan, d: &DeformationData) -> Option<String> {
    for (c, cone) in fan.max_cones().iter().enumerate() {
        let basis = d.p.select_cols(&d.ambient_cones[c]);
        let mut coeffs = Vec::new();
        for &i in cone {
            match solve_integer(&basis, &d.iota(fan.ray(i))) {
                Some(x) if x.iter().all(|&v| v >= 0) => coeffs.push(x),
                _ => return Some(format!("cone {c}, ray {i}")),
            }
        }
        // the slice of the ambient cone by iota(N) is exactly iota(cone)
        // when every ray owns a coordinate no other ray uses
        for (k, x) in coeffs.iter().enumerate() {
            let own = (0..x.len()).any(|q| x[q] > 0 && coeffs.iter().enumerate().all(|(l, y)| l == k || y[q] == 0));
            if !own {
                return Some(format!("cone {c}, ray {}: slice is larger than the cone", cone[k]));
            }
        }
    }
    None
}

fn n0_identification(fan: &Fan, d: &DeformationData) -> Option<String> {
    let h = d.p.rows();
    let mut u = vec![0; h];
    u[0] = -1;
    u[1] = 1;
    let mut last = vec![0; h];
    last[h - 1] = 1;
    let n0 = kernel_basis(&IntMat::from_rows(h, &[u, last]));
    let n = fan.dim();
    if n0.len() != n {
        return Some(format!("N0 has rank {}", n0.len()));
    }
    let n0m = IntMat::from_cols(h, &n0);
    let image: Vec<IntVec> = (0..n)
        .map(|j| d.iota(&(0..n).map(|i| i64::from(i == j)).collect::<Vec<_>>()))
        .collect();
    let im = IntMat::from_cols(h, &image);
    for (j, v) in image.iter().enumerate() {
        if solve_integer(&n0m, v).is_none() {
            return Some(format!("iota(e{}) is not in N0", j + 1));
        }
    }
    let snf = smith_normal_form(&im);
    if snf.rank() != n || snf.invariant_factors().iter().any(|&x| x != 1) {
        return Some("iota is not a saturated embedding".into());
    }
    None
}

fn diagram_commutes(fan: &Fan, d: &DeformationData) -> Option<String> {
    let left = d.ptilde.mul(&d.psi.neg());
    for i in 0..fan.n_rays() {
        let v = fan.ray(i);
        let mut bottom: IntVec = d.iota(v).iter().map(|x| -x).collect();
        bottom.pop();
        if left.col(i) != bottom {
            return Some(format!("ray {i}: {:?} != {:?}", left.col(i), bottom));
        }
    }
    None
}

fn cox_cones_map(fan: &Fan, d: &DeformationData) -> Option<String> {
    for (c, cone) in fan.max_cones().iter().enumerate() {
        for &i in cone {
            let img = d.psi.col(i);
            for (j, &x) in img.iter().enumerate() {
                if x < 0 || (x > 0 && !d.ambient_cones[c].contains(&(j + 1))) {
                    return Some(format!("cone {c}, ray {i}"));
                }
            }
        }
    }
    None
}

/// Combinatorial checks that the fiber over `T1 = 0` is the original variety.
pub fn verify_central_fiber(fan: &Fan, d: &DeformationData) -> CentralFiberReport {
    CentralFiberReport {
        checks: vec![
            Check::new("iota_cone_membership", iota_cone_membership(fan, d)),
            Check::new("n0_identification", n0_identification(fan, d)),
            Check::new("diagram_commutes", diagram_commutes(fan, d)),
            Check::new("cox_cone_mapping", cox_cones_map(fan, d)),
        ],
    }
}

/// Algebraic checks on `eta`, `nu` and the ambient grading.
pub fn verify_maps(fan: &Fan, d: &DeformationData) -> Vec<Check> {
    let mut checks = Vec::new();
    let eta = eta_map(d);
    let agrees = eta[1..]
        .iter()
        .enumerate()
        .find(|(j, e)| e.image.as_ref() != Some(&d.nu.col(*j)))
        .map(|(_, e)| format!("{} differs from its nu column", e.variable));
    checks.push(Check::new("eta_matches_nu", agrees));

    let t = &d.trinomial.terms;
    let binomial = match (eta_monomial(&eta, &t[1].exponents), eta_monomial(&eta, &t[2].exponents)) {
        (Some(a), Some(b)) if a == b => None,
        (a, b) => Some(format!("{a:?} != {b:?}")),
    };
    checks.push(Check::new("eta_kernel_binomial", binomial));
    let leading = eta_monomial(&eta, &t[0].exponents).map(|e| format!("T1 term maps to {e:?}"));
    checks.push(Check::new("eta_kills_t1_term", leading));

    let diff = d.binomial_exponent();
    let mut kernel_failure = None;
    if d.nu.mul_vec(&diff).iter().any(|&x| x != 0) {
        kernel_failure = Some("nu does not kill the binomial".to_string());
    } else if d.qtilde.mul_vec(&diff).iter().any(|&x| x != 0) {
        kernel_failure = Some("binomial is not homogeneous".to_string());
    } else {
        let k = kernel_basis(&d.nu);
        let g = crate::intlin::gcd_slice(&diff);
        let prim: IntVec = diff.iter().map(|x| x / g.max(1)).collect();
        let neg: IntVec = prim.iter().map(|x| -x).collect();
        if k.len() != 1 || (k[0] != prim && k[0] != neg) {
            kernel_failure = Some(format!("ker nu is {k:?}"));
        }
    }
    checks.push(Check::new("nu_kernel", kernel_failure));
    checks.push(Check::new("nu_bar_isomorphism", nu_bar_failure(fan, d)));

    let full = cokernel_map(&d.p.transpose());
    let deg_t1 = full.grading.col(0);
    let t1 = deg_t1.iter().any(|&x| x != 0).then(|| format!("deg T1 = {deg_t1:?}"));
    checks.push(Check::new("deg_t1_zero", t1));
    checks
}

fn nu_bar_failure(fan: &Fan, d: &DeformationData) -> Option<String> {
    let amb = cokernel_map(&d.ptilde.transpose());
    if !amb.is_free() {
        return Some(format!("ambient class group has torsion {:?}", amb.invariants));
    }
    let base = cokernel_map(&fan.ray_matrix().transpose());
    if !base.is_free() || base.free_rank() != amb.free_rank() {
        return Some("class groups have different ranks".into());
    }
    let k = amb.free_rank();
    let section: Vec<IntVec> = (0..k)
        .map(|i| {
            let e: IntVec = (0..k).map(|j| i64::from(i == j)).collect();
            solve_integer(&amb.grading, &e).expect("grading is onto")
        })
        .collect();
    let s = IntMat::from_cols(d.nu.cols(), &section);
    let m = base.grading.mul(&d.nu).mul(&s);
    // compatibility: nu maps the ambient relations into the base relations
    let rel = base.grading.mul(&d.nu).mul(&d.ptilde.transpose());
    if !rel.is_zero() {
        return Some("nu does not descend to class groups".into());
    }
    if k > 0 && (rank(&m) != k || determinant(&m).abs() != 1) {
        return Some(format!("induced map {m:?} is not invertible"));
    }
    None
}

/// Deleting the columns `(2,rho)` and `(3,rho)` from `nu` in turn leaves a
/// unimodular square matrix each time. Returns the two determinants.
pub fn hilbert_basis_dets(d: &DeformationData) -> (i64, i64) {
    let rho = d.triple.rho;
    let c2 = d.column_of(2, rho).expect("(2,rho) column") - 1;
    let c3 = d.column_of(3, rho).expect("(3,rho) column") - 1;
    let det = |j: usize| {
        let m = d.nu.remove_col(j);
        if m.rows() == m.cols() {
            determinant(&m)
        } else {
            0
        }
    };
    (det(c2), det(c3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard::*;
    use crate::triples::triples_at_degree;

    fn fn_triple(n: i64, alpha: i64) -> (Fan, DeformationData) {
        let fan = hirzebruch(n);
        let t = AdmissibleTriple { m: vec![-alpha, -1], rho: 1, component: vec![0] };
        let d = build_deformation(&fan, &t).unwrap();
        (fan, d)
    }

    #[test]
    fn splitting_invariants() {
        let fan = hirzebruch(3);
        let s = Splitting::new(&fan, &[-2, -1], 1);
        assert_eq!(dot(&s.m, &s.gamma(1)), 1);
        assert_eq!(s.proj(&s.gamma(5)), vec![0]);
        for v in [[1, 0], [0, 1], [-1, 3], [4, -7]] {
            let back = s.k_vector(&s.proj(&v));
            let g = s.gamma(dot(&s.m, &v));
            let sum: IntVec = back.iter().zip(&g).map(|(a, b)| a + b).collect();
            assert_eq!(sum, v.to_vec());
        }
    }

    #[test]
    fn hirzebruch_matrices() {
        let (_, d) = fn_triple(2, 1);
        assert_eq!(d.columns(), vec![(1, 3), (2, 0), (2, 1), (3, 1), (3, 2)]);
        assert_eq!(
            d.ptilde,
            IntMat::from_rows(5, &[[1, -1, -1, 0, 0], [1, 0, 0, -1, -1], [0, 1, 0, 0, -1]])
        );
        assert_eq!(
            d.nu,
            IntMat::from_rows(5, &[[0, 1, 0, 1, 0], [0, 0, 1, 1, 0], [0, 0, 1, 0, 1], [1, 0, 0, 0, 0]])
        );
        assert_eq!(d.p.col(0), vec![1, 1, 0, 1]);
        assert_eq!(d.p.row(3), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(d.trinomial.to_string(), "T1*T(1,4) - T(2,1)*T(2,2) + T(3,2)*T(3,3)");
        let (_, d) = fn_triple(5, 2);
        assert_eq!(d.trinomial.to_string(), "T1*T(1,4) - T(2,1)^2*T(2,2) + T(3,2)*T(3,3)^3");
    }

    #[test]
    fn ambient_cones_of_f2() {
        let (fan, d) = fn_triple(2, 1);
        // cone {3,4} in 1-based labels is max cone 2
        let labels: Vec<String> = d.ambient_cones[2]
            .iter()
            .map(|&c| d.variables()[c].clone())
            .collect();
        assert_eq!(labels, vec!["T1", "T(1,4)", "T(2,2)", "T(3,3)"]);
        let amb = ambient_fan(&d).unwrap();
        assert_eq!(amb.dim(), 4);
        assert_eq!(amb.max_cones().len(), fan.max_cones().len());
        assert!(amb.max_cones().iter().all(|c| c.len() == 4 && c[0] == 0));
    }

    #[test]
    fn eta_images() {
        let (_, d) = fn_triple(3, 1);
        let eta = eta_map(&d);
        let find = |label: &str| eta.iter().find(|e| e.variable == label).unwrap().image.clone();
        assert_eq!(find("T(2,2)"), Some(vec![0, 1, 2, 0]));
        assert_eq!(find("T(3,2)"), Some(vec![1, 1, 0, 0]));
        assert_eq!(find("T(1,4)"), Some(vec![0, 0, 0, 1]));
        assert_eq!(find("T1"), None);
        assert_eq!(eta_monomial(&eta, &d.trinomial.terms[0].exponents), None);
    }

    #[test]
    fn central_fiber_and_maps() {
        for (n, alpha) in [(2, 1), (3, 1), (3, 2), (5, 2)] {
            let (fan, d) = fn_triple(n, alpha);
            let report = verify_central_fiber(&fan, &d);
            assert!(report.passed(), "{report:?}");
            for c in verify_maps(&fan, &d) {
                assert!(c.passed, "{c:?}");
            }
            let (a, b) = hilbert_basis_dets(&d);
            assert_eq!((a.abs(), b.abs()), (1, 1));
        }
        let (_, d) = fn_triple(2, 1);
        assert_eq!(d.iota(&[0, 1]), vec![-1, -1, 0, 0]);
        let e4 = d.ptilde.mul(&d.psi.neg()).col(3);
        assert_eq!(e4, vec![-1, -1, 0]);
    }

    #[test]
    fn all_triples_of_small_fans() {
        for fan in [hirzebruch(2), hirzebruch(3), hirzebruch(4)] {
            for m in crate::triples::degree_box(&fan, 6).unwrap() {
                for t in triples_at_degree(&fan, &m) {
                    let d = build_deformation(&fan, &t).unwrap();
                    assert!(verify_central_fiber(&fan, &d).passed());
                    assert!(verify_maps(&fan, &d).iter().all(|c| c.passed));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_triples() {
        let fan = hirzebruch(2);
        let t = AdmissibleTriple { m: vec![-1, -1], rho: 1, component: vec![0, 2] };
        assert!(matches!(build_deformation(&fan, &t), Err(DeformError::Triple(_))));
    }
}
