//! Graded tangent cohomology `H^1(X, T_X)_m` by a Čech complex.
//!
//! The cover is by the affine charts of the maximal cones, with alternating
//! cochains on strictly increasing tuples of cones. The chart of a face `c`
//! carries, in degree `m`, the vector fields `chi^m d_v` that are regular on
//! it:
//!
//! * all `v` in `N_Q` when `m(v_i) >= 0` on every ray of `c`;
//! * the line `Q v_rho` when exactly one ray `rho` of `c` has `m = -1` and
//!   all others are nonnegative;
//! * nothing otherwise.
//!
//! All bases are integral, so the boundary maps are integer matrices in
//! local coordinates and ranks are exact.

use serde::Serialize;
use thiserror::Error;

use crate::fan::Fan;
use crate::intlin::{dot, rank, IntMat, IntVec};
use crate::triples::{check_admissible, AdmissibleTriple, TripleError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("degree has {got} coordinates, fan has dimension {dim}")]
    Dimension { got: usize, dim: usize },
    #[error("restriction from {from:?} to {to:?} leaves the local sections")]
    Restriction { from: Vec<usize>, to: Vec<usize> },
    #[error("cocycle entry at cones ({0}, {1}) is not a local section")]
    NotASection(usize, usize),
    #[error("triple has degree {got:?}, expected {expected:?}")]
    WrongDegree { got: IntVec, expected: IntVec },
    #[error(transparent)]
    Triple(#[from] TripleError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionSpace {
    Full,
    Line(usize),
    Zero,
}

/// Degree-`m` vector fields regular on the chart of a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSections {
    pub cone: Vec<usize>,
    pub degree: IntVec,
    pub space: SectionSpace,
    /// Columns span the space; integral.
    pub basis: Vec<IntVec>,
}

impl LocalSections {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in [`LocalSections::basis`], if `v` lies in the space.
    pub fn coordinates(&self, v: &[i64], fan: &Fan) -> Option<IntVec> {
        match self.space {
            SectionSpace::Full => Some(v.to_vec()),
            SectionSpace::Zero => v.iter().all(|&x| x == 0).then(Vec::new),
            SectionSpace::Line(rho) => {
                let r = fan.ray(rho);
                // r is primitive, so the multiplier is an integer if it exists
                let k = r.iter().position(|&x| x != 0)?;
                if v[k] % r[k] != 0 {
                    return None;
                }
                let c = v[k] / r[k];
                v.iter().zip(r).all(|(&a, &b)| a == c * b).then(|| vec![c])
            }
        }
    }
}

pub fn local_sections(fan: &Fan, cone: &[usize], m: &[i64]) -> LocalSections {
    let n = fan.dim();
    let mut minus_one = None;
    let mut space = SectionSpace::Full;
    for &i in cone {
        match dot(m, fan.ray(i)) {
            v if v >= 0 => {}
            -1 if minus_one.is_none() => minus_one = Some(i),
            _ => {
                space = SectionSpace::Zero;
                break;
            }
        }
    }
    if space == SectionSpace::Full {
        if let Some(rho) = minus_one {
            space = SectionSpace::Line(rho);
        }
    }
    let basis = match space {
        SectionSpace::Full => (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
        SectionSpace::Line(rho) => vec![fan.ray(rho).to_vec()],
        SectionSpace::Zero => Vec::new(),
    };
    LocalSections { cone: cone.to_vec(), degree: m.to_vec(), space, basis }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// The Čech complex `C^0 -> C^1 -> C^2` in one degree.
#[derive(Clone, Debug)]
pub struct GradedCechComplex {
    pub degree: IntVec,
    /// Pairs `(i, j)`, `i < j`, of maximal cone indices.
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
    pub c0: Vec<LocalSections>,
    pub c1: Vec<LocalSections>,
    pub c2: Vec<LocalSections>,
    /// `dim C^1 x dim C^0`, in local coordinates.
    pub d0: IntMat,
    /// `dim C^2 x dim C^1`, in local coordinates.
    pub d1: IntMat,
    offsets1: Vec<usize>,
}

fn offsets(parts: &[LocalSections]) -> Vec<usize> {
    let mut out = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    out.push(0);
    for p in parts {
        acc += p.dim();
        out.push(acc);
    }
    out
}

impl GradedCechComplex {
    pub fn build(fan: &Fan, m: &[i64]) -> Result<Self, CohomologyError> {
        if m.len() != fan.dim() {
            return Err(CohomologyError::Dimension { got: m.len(), dim: fan.dim() });
        }
        let cones = fan.max_cones();
        let k = cones.len();
        let pairs: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let triples: Vec<(usize, usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).flat_map(move |j| (j + 1..k).map(move |l| (i, j, l))))
            .collect();
        let c0: Vec<LocalSections> = cones.iter().map(|c| local_sections(fan, c, m)).collect();
        let c1: Vec<LocalSections> = pairs
            .iter()
            .map(|&(i, j)| local_sections(fan, &intersect(&cones[i], &cones[j]), m))
            .collect();
        let c2: Vec<LocalSections> = triples
            .iter()
            .map(|&(i, j, l)| {
                local_sections(fan, &intersect(&intersect(&cones[i], &cones[j]), &cones[l]), m)
            })
            .collect();
        let (o0, o1, o2) = (offsets(&c0), offsets(&c1), offsets(&c2));
        let pair_index = |i: usize, j: usize| -> usize {
            // position of (i, j) in the lexicographic pair list
            i * k - i * (i + 1) / 2 + (j - i - 1)
        };

        // (d0 s)_{ij} = s_j - s_i
        let mut d0 = IntMat::zeros(o1[pairs.len()], o0[k]);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            for (src, sign) in [(j, 1i64), (i, -1)] {
                for (b, vec) in c0[src].basis.iter().enumerate() {
                    let coords = c1[p].coordinates(vec, fan).ok_or_else(|| CohomologyError::Restriction {
                        from: c0[src].cone.clone(),
                        to: c1[p].cone.clone(),
                    })?;
                    for (r, x) in coords.into_iter().enumerate() {
                        d0.set(o1[p] + r, o0[src] + b, sign * x);
                    }
                }
            }
        }

        // (d1 c)_{ijl} = c_{jl} - c_{il} + c_{ij}
        let mut d1 = IntMat::zeros(o2[triples.len()], o1[pairs.len()]);
        for (t, &(i, j, l)) in triples.iter().enumerate() {
            for (src, sign) in [(pair_index(j, l), 1i64), (pair_index(i, l), -1), (pair_index(i, j), 1)] {
                for (b, vec) in c1[src].basis.iter().enumerate() {
                    let coords = c2[t].coordinates(vec, fan).ok_or_else(|| CohomologyError::Restriction {
                        from: c1[src].cone.clone(),
                        to: c2[t].cone.clone(),
                    })?;
                    for (r, x) in coords.into_iter().enumerate() {
                        let cur = d1.get(o2[t] + r, o1[src] + b);
                        d1.set(o2[t] + r, o1[src] + b, cur + sign * x);
                    }
                }
            }
        }

        Ok(GradedCechComplex { degree: m.to_vec(), pairs, triples, c0, c1, c2, d0, d1, offsets1: o1 })
    }

    pub fn dim_c1(&self) -> usize {
        self.d0.rows()
    }

    /// `dim ker d1 - rank d0`.
    pub fn h1_dimension(&self) -> usize {
        if self.dim_c1() == 0 {
            return 0;
        }
        self.dim_c1() - rank(&self.d1) - rank(&self.d0)
    }

    /// `d1 * d0 == 0`.
    pub fn is_complex(&self) -> bool {
        self.d1.mul(&self.d0).is_zero()
    }

    /// Local-coordinate vector in `C^1` of a cocycle.
    fn cochain_vector(&self, fan: &Fan, cocycle: &Cocycle) -> Result<IntVec, CohomologyError> {
        let mut out = vec![0; self.dim_c1()];
        for e in &cocycle.entries {
            let p = self
                .pairs
                .iter()
                .position(|&pr| pr == (e.sigma, e.tau))
                .expect("cocycle entries use increasing cone pairs");
            let v: IntVec = fan.ray(cocycle.rho).iter().map(|&x| x * e.coefficient).collect();
            let coords = self.c1[p].coordinates(&v, fan).ok_or(CohomologyError::NotASection(e.sigma, e.tau))?;
            for (r, x) in coords.into_iter().enumerate() {
                out[self.offsets1[p] + r] = x;
            }
        }
        Ok(out)
    }
}

pub fn h1_dimension(fan: &Fan, m: &[i64]) -> Result<usize, CohomologyError> {
    Ok(GradedCechComplex::build(fan, m)?.h1_dimension())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleEntry {
    pub sigma: usize,
    pub tau: usize,
    /// `alpha(sigma, tau)`, so the entry is `alpha * d_{m, rho}`.
    pub coefficient: i64,
}

/// `xi(m, rho, C)`: entries `alpha(sigma, tau) * d_{m,rho}` on pairs of
/// maximal cones, where `alpha` is `1` if only `sigma` meets `C`, `-1` if
/// only `tau` does, and `0` otherwise. Zero entries are omitted; only pairs
/// with `sigma < tau` are stored (the other order is the negative).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub degree: IntVec,
    pub rho: usize,
    pub entries: Vec<CocycleEntry>,
}

impl Cocycle {
    pub fn alpha(&self, sigma: usize, tau: usize) -> i64 {
        let (a, b, s) = if sigma < tau { (sigma, tau, 1) } else { (tau, sigma, -1) };
        self.entries
            .iter()
            .find(|e| e.sigma == a && e.tau == b)
            .map_or(0, |e| s * e.coefficient)
    }
}

/// Builds `xi(m, rho, C)` and checks it is a cocycle of local sections.
pub fn triple_cocycle(fan: &Fan, t: &AdmissibleTriple) -> Result<Cocycle, CohomologyError> {
    check_admissible(fan, t)?;
    let meets: Vec<bool> = fan
        .max_cones()
        .iter()
        .map(|c| c.iter().any(|i| t.component.contains(i)))
        .collect();
    let k = meets.len();
    let mut entries = Vec::new();
    for s in 0..k {
        for u in s + 1..k {
            let coefficient = i64::from(meets[s]) - i64::from(meets[u]);
            if coefficient != 0 {
                entries.push(CocycleEntry { sigma: s, tau: u, coefficient });
            }
        }
    }
    let cocycle = Cocycle { degree: t.m.clone(), rho: t.rho, entries };
    let complex = GradedCechComplex::build(fan, &t.m)?;
    let v = complex.cochain_vector(fan, &cocycle)?;
    assert!(
        complex.d1.mul_vec(&v).iter().all(|&x| x == 0),
        "xi(m, rho, C) is not closed"
    );
    Ok(cocycle)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub degree: IntVec,
    pub h1_dim: usize,
    pub span_rank: usize,
    pub spans: bool,
}

/// Rank of the classes of the triples' cocycles in `H^1_m`, compared with
/// `dim H^1_m`.
pub fn span_check(fan: &Fan, m: &[i64], triples: &[AdmissibleTriple]) -> Result<SpanReport, CohomologyError> {
    let complex = GradedCechComplex::build(fan, m)?;
    let h1_dim = complex.h1_dimension();
    let mut cols = Vec::new();
    for t in triples {
        if t.m != m {
            return Err(CohomologyError::WrongDegree { got: t.m.clone(), expected: m.to_vec() });
        }
        cols.push(complex.cochain_vector(fan, &triple_cocycle(fan, t)?)?);
    }
    let span_rank = if cols.is_empty() || complex.dim_c1() == 0 {
        0
    } else {
        let base = rank(&complex.d0);
        rank(&complex.d0.hcat(&IntMat::from_cols(complex.dim_c1(), &cols))) - base
    };
    Ok(SpanReport { degree: m.to_vec(), h1_dim, span_rank, spans: span_rank == h1_dim })
}

/// Whether a single triple's cocycle is a nonzero class.
pub fn is_nontrivial_class(fan: &Fan, t: &AdmissibleTriple) -> Result<bool, CohomologyError> {
    Ok(span_check(fan, &t.m, std::slice::from_ref(t))?.span_rank == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard::*;
    use crate::triples::{degree_box, default_bound, triples_at_degree};

    #[test]
    fn local_section_cases() {
        let f2 = hirzebruch(2);
        assert_eq!(local_sections(&f2, &[], &[-5, 3]).dim(), 2);
        let ls = local_sections(&f2, &[2, 3], &[-1, -1]);
        assert_eq!(ls.space, SectionSpace::Line(2));
        assert_eq!(ls.basis, vec![vec![-1, 2]]);
        assert_eq!(local_sections(&f2, &[0, 1], &[-1, -1]).dim(), 0);
        assert_eq!(local_sections(&f2, &[0], &[-2, 0]).dim(), 0);
    }

    #[test]
    fn hirzebruch_two_degree_minus_one() {
        let f2 = hirzebruch(2);
        let c = GradedCechComplex::build(&f2, &[-1, -1]).unwrap();
        assert!(c.is_complex());
        assert_eq!(c.h1_dimension(), 1);
        assert_eq!(h1_dimension(&f2, &[0, 0]).unwrap(), 0);
    }

    #[test]
    fn projective_plane_is_rigid() {
        let p2 = projective_space(2);
        for m in degree_box(&p2, 3).unwrap() {
            assert_eq!(h1_dimension(&p2, &m).unwrap(), 0, "m = {m:?}");
        }
    }

    #[test]
    fn cocycle_alpha_and_antisymmetry() {
        let f2 = hirzebruch(2);
        let t = AdmissibleTriple { m: vec![-1, -1], rho: 1, component: vec![0] };
        let xi = triple_cocycle(&f2, &t).unwrap();
        // cones {0,1}, {1,2}, {2,3}, {0,3}; ray 0 lies in cones 0 and 3
        for s in 0..4 {
            for u in 0..4 {
                let meets = |c: usize| f2.max_cones()[c].contains(&0);
                let want = i64::from(meets(s)) - i64::from(meets(u));
                assert_eq!(xi.alpha(s, u), want);
                assert_eq!(xi.alpha(s, u), -xi.alpha(u, s));
            }
        }
        assert_eq!(xi.entries.len(), 4);
    }

    #[test]
    fn hirzebruch_span() {
        let f2 = hirzebruch(2);
        let ts = triples_at_degree(&f2, &[-1, -1]);
        assert_eq!(ts.len(), 2);
        let r = span_check(&f2, &[-1, -1], &ts).unwrap();
        assert_eq!((r.h1_dim, r.span_rank, r.spans), (1, 1, true));
        for t in &ts {
            assert!(is_nontrivial_class(&f2, t).unwrap());
        }
        let empty = span_check(&f2, &[0, 0], &[]).unwrap();
        assert!(empty.spans);

        let f3 = hirzebruch(3);
        for m in [[-1, -1], [-2, -1]] {
            let r = span_check(&f3, &m, &triples_at_degree(&f3, &m)).unwrap();
            assert_eq!((r.h1_dim, r.spans), (1, true));
        }
    }

    #[test]
    fn hirzebruch_total_h1() {
        for n in 1..=4 {
            let fan = hirzebruch(n);
            let total: usize = degree_box(&fan, default_bound(&fan))
                .unwrap()
                .iter()
                .map(|m| h1_dimension(&fan, m).unwrap())
                .sum();
            assert_eq!(total as i64, n - 1);
        }
    }

    #[test]
    fn rejects_non_admissible_triple() {
        let p2 = projective_space(2);
        let t = AdmissibleTriple { m: vec![-1, -1], rho: 0, component: vec![1] };
        assert!(matches!(triple_cocycle(&p2, &t), Err(CohomologyError::Triple(_))));
    }
}
