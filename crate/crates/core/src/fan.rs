//! Simplicial fans and the Cox construction data of their toric varieties.
//!
//! A [`Fan`] is given by primitive ray generators and maximal cones (index
//! sets into the ray list). Ray order is input order everywhere: the columns
//! of `P_X`, the variables `S_1, ..., S_r` of the Cox ring and every index set
//! produced downstream follow it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlin::{self, cokernel_map, determinant, dot, gcd_slice, IntMat, IntVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FanError {
    #[error("fan dimension must be at least 1")]
    ZeroDimension,
    #[error("ray {ray} has {len} coordinates, expected {dim}")]
    RayDimension { ray: usize, len: usize, dim: usize },
    #[error("zero ray {0}")]
    ZeroRay(usize),
    #[error("non-primitive ray {0}")]
    NonPrimitiveRay(usize),
    #[error("duplicate ray {ray} (same as ray {first})")]
    DuplicateRay { ray: usize, first: usize },
    #[error("empty cone {0}")]
    EmptyCone(usize),
    #[error("cone {cone} references ray {index}, but there are only {rays} rays")]
    BadConeIndex { cone: usize, index: usize, rays: usize },
    #[error("cone {cone} lists ray {index} twice")]
    RepeatedConeIndex { cone: usize, index: usize },
    #[error("ray {0} lies in no maximal cone")]
    UnusedRay(usize),
    #[error("fan is not smooth: cone {0} is not unimodular")]
    NotSmooth(usize),
    #[error("fan is not complete")]
    NotComplete,
    #[error("class group has torsion {0:?}")]
    Torsion(Vec<i64>),
    #[error("invalid fan file: {0}")]
    Schema(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// On-disk fan schema: `{"dim": n, "rays": [[..],..], "max_cones": [[..],..]}`
/// with 0-based ray indices.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFan {
    dim: usize,
    rays: Vec<IntVec>,
    max_cones: Vec<Vec<usize>>,
}

impl TryFrom<RawFan> for Fan {
    type Error = FanError;

    fn try_from(raw: RawFan) -> Result<Self, Self::Error> {
        Fan::new(raw.dim, raw.rays, raw.max_cones)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFan")]
pub struct Fan {
    dim: usize,
    rays: Vec<IntVec>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Checks the structural invariants. Cone index lists are sorted; the
    /// order of rays and of cones is kept.
    pub fn new(dim: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Self, FanError> {
        if dim == 0 {
            return Err(FanError::ZeroDimension);
        }
        let mut seen: BTreeMap<&[i64], usize> = BTreeMap::new();
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(FanError::RayDimension { ray: i, len: r.len(), dim });
            }
            match gcd_slice(r) {
                0 => return Err(FanError::ZeroRay(i)),
                1 => {}
                _ => return Err(FanError::NonPrimitiveRay(i)),
            }
            if let Some(&first) = seen.get(r.as_slice()) {
                return Err(FanError::DuplicateRay { ray: i, first });
            }
            seen.insert(r, i);
        }
        let mut used = vec![false; rays.len()];
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.into_iter().enumerate() {
            if cone.is_empty() {
                return Err(FanError::EmptyCone(c));
            }
            let mut sorted = cone;
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(FanError::RepeatedConeIndex { cone: c, index: w[0] });
                }
            }
            for &i in &sorted {
                if i >= rays.len() {
                    return Err(FanError::BadConeIndex { cone: c, index: i, rays: rays.len() });
                }
                used[i] = true;
            }
            cones.push(sorted);
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(FanError::UnusedRay(i));
        }
        Ok(Fan { dim, rays, max_cones: cones })
    }

    pub fn from_json(text: &str) -> Result<Self, FanError> {
        serde_json::from_str(text).map_err(|e| {
            // structural errors come back wrapped in a serde message
            FanError::Schema(e.to_string())
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, FanError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| FanError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fan serialization cannot fail")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i]
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// `m(v_i)` for every ray.
    pub fn evaluate(&self, m: &[i64]) -> IntVec {
        self.rays.iter().map(|r| dot(m, r)).collect()
    }

    /// `P_X`: the `n x r` matrix whose columns are the rays.
    pub fn ray_matrix(&self) -> IntMat {
        IntMat::from_cols(self.dim, &self.rays)
    }

    /// Matrix whose columns are the rays of maximal cone `c`.
    pub fn cone_matrix(&self, c: usize) -> IntMat {
        let cols: Vec<&IntVec> = self.max_cones[c].iter().map(|&i| &self.rays[i]).collect();
        IntMat::from_cols(self.dim, &cols)
    }

    /// Applies a relabeling: new ray `i` is old ray `ray_perm[i]`, new cone
    /// `j` is old cone `cone_perm[j]`.
    pub fn permuted(&self, ray_perm: &[usize], cone_perm: &[usize]) -> Fan {
        let mut inv = vec![0; ray_perm.len()];
        for (new, &old) in ray_perm.iter().enumerate() {
            inv[old] = new;
        }
        let rays = ray_perm.iter().map(|&o| self.rays[o].clone()).collect();
        let cones = cone_perm
            .iter()
            .map(|&o| self.max_cones[o].iter().map(|&i| inv[i]).collect())
            .collect();
        Fan::new(self.dim, rays, cones).expect("relabeling preserves validity")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub smooth: bool,
    pub complete: bool,
    pub simplicial: bool,
}

fn is_simplicial_cone(fan: &Fan, c: usize) -> bool {
    intlin::rank(&fan.cone_matrix(c)) == fan.max_cones[c].len()
}

/// A cone is smooth when its rays extend to a lattice basis, i.e. all
/// invariant factors of its ray matrix are 1.
fn is_smooth_cone(fan: &Fan, c: usize) -> bool {
    let snf = intlin::smith_normal_form(&fan.cone_matrix(c));
    let f = snf.invariant_factors();
    f.len() == fan.max_cones[c].len() && f.iter().all(|&x| x == 1)
}

pub fn validate(fan: &Fan) -> FanReport {
    let simplicial = (0..fan.max_cones.len()).all(|c| is_simplicial_cone(fan, c));
    let smooth = simplicial && (0..fan.max_cones.len()).all(|c| is_smooth_cone(fan, c));
    let complete = simplicial && is_complete(fan);
    FanReport { smooth, complete, simplicial }
}

/// Completeness via facet pairing: the fan is pure of full dimension, each
/// codimension-one face of a maximal cone is shared by exactly two maximal
/// cones lying on opposite sides of it, and the dual graph is connected.
/// In dimension 2 the rays must also go once around the origin.
///
/// This criterion is not a point-covering test; it is exact for simplicial
/// fans whose maximal cones form an oriented pseudomanifold winding once,
/// which covers smooth projective fans.
fn is_complete(fan: &Fan) -> bool {
    let n = fan.dim;
    let cones = &fan.max_cones;
    if cones.is_empty() || cones.iter().any(|c| c.len() != n) {
        return false;
    }
    // facet -> [(cone, orientation sign of the opposite ray)]
    let mut facets: BTreeMap<Vec<usize>, Vec<(usize, i64)>> = BTreeMap::new();
    for (ci, cone) in cones.iter().enumerate() {
        for skip in 0..n {
            let facet: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            let mut cols: Vec<&IntVec> = facet.iter().map(|&i| &fan.rays[i]).collect();
            cols.push(&fan.rays[cone[skip]]);
            let side = determinant(&IntMat::from_cols(n, &cols)).signum();
            if side == 0 {
                return false;
            }
            facets.entry(facet).or_default().push((ci, side));
        }
    }
    let mut adj = vec![Vec::new(); cones.len()];
    for owners in facets.values() {
        if owners.len() != 2 || owners[0].1 == owners[1].1 {
            return false;
        }
        adj[owners[0].0].push(owners[1].0);
        adj[owners[1].0].push(owners[0].0);
    }
    let mut seen = vec![false; cones.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(c) = queue.pop_front() {
        for &d in &adj[c] {
            if !seen[d] {
                seen[d] = true;
                queue.push_back(d);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    if n == 2 {
        return winds_once(fan);
    }
    true
}

/// Rays sorted by angle must pair up into exactly the maximal cones, each
/// spanning an angle below pi.
fn winds_once(fan: &Fan) -> bool {
    let half = |v: &[i64]| if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    let cross = |a: &[i64], b: &[i64]| a[0] * b[1] - a[1] * b[0];
    let mut order: Vec<usize> = (0..fan.rays.len()).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (&fan.rays[i], &fan.rays[j]);
        half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
    });
    let r = order.len();
    if r < 3 {
        return false;
    }
    let mut expected = BTreeSet::new();
    for k in 0..r {
        let (i, j) = (order[k], order[(k + 1) % r]);
        if cross(&fan.rays[i], &fan.rays[j]) <= 0 {
            return false;
        }
        expected.insert(if i < j { vec![i, j] } else { vec![j, i] });
    }
    let actual: BTreeSet<Vec<usize>> = fan.max_cones.iter().cloned().collect();
    actual == expected && actual.len() == fan.max_cones.len()
}

/// Cox construction data of a smooth complete toric variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxData {
    /// `n x r`, columns are the rays in input order.
    pub p: IntMat,
    /// Grading map `Z^r -> Cl(X)`, in Hermite normal form.
    pub q: IntMat,
    pub cl_rank: usize,
    /// Ray index sets of the irrelevant ideal's generators: the complement
    /// of each maximal cone.
    pub irrelevant_components: Vec<Vec<usize>>,
}

pub fn cox_data(fan: &Fan) -> Result<CoxData, FanError> {
    let report = validate(fan);
    if let Some(c) = (0..fan.max_cones.len()).find(|&c| !is_smooth_cone(fan, c)) {
        return Err(FanError::NotSmooth(c));
    }
    if !report.complete {
        return Err(FanError::NotComplete);
    }
    let p = fan.ray_matrix();
    let ck = cokernel_map(&p.transpose());
    if !ck.is_free() {
        let torsion = ck.invariants.iter().copied().filter(|&d| d != 0).collect();
        return Err(FanError::Torsion(torsion));
    }
    let r = fan.n_rays();
    let irrelevant_components = fan
        .max_cones
        .iter()
        .map(|cone| (0..r).filter(|i| !cone.contains(i)).collect())
        .collect();
    Ok(CoxData {
        cl_rank: ck.free_rank(),
        q: ck.grading,
        p,
        irrelevant_components,
    })
}

/// A maximal cone containing all the given rays.
pub fn cone_containing(fan: &Fan, rays: &[usize]) -> Option<usize> {
    fan.max_cones
        .iter()
        .position(|cone| rays.iter().all(|i| cone.binary_search(i).is_ok()))
}

/// Minimal sets of rays that do not lie in a common cone (primitive
/// collections). Their variables generate the minimal primes of the
/// irrelevant ideal. Exponential in the number of rays; meant for small fans.
pub fn primitive_collections(fan: &Fan) -> Vec<Vec<usize>> {
    let r = fan.n_rays();
    assert!(r < 24, "primitive collections: too many rays");
    let is_face = |mask: u32| {
        fan.max_cones.iter().any(|cone| {
            let cm: u32 = cone.iter().map(|&i| 1u32 << i).sum();
            mask & !cm == 0
        })
    };
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << r) {
        if is_face(mask) {
            continue;
        }
        let minimal = (0..r)
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| is_face(mask & !(1 << i)));
        if minimal {
            out.push((0..r).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>());
        }
    }
    out.sort();
    out
}

/// Common constructors used throughout tests and examples.
pub mod standard {
    use super::Fan;

    /// Projective space `P^n`.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        Fan::new(n, rays, cones).expect("valid fan")
    }

    /// Hirzebruch surface `F_n` with rays `(1,0), (0,1), (-1,n), (0,-1)`.
    pub fn hirzebruch(n: i64) -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, n], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .expect("valid fan")
    }

    /// Product of `k` projective lines.
    pub fn p1_power(k: usize) -> Fan {
        let mut rays = Vec::new();
        for i in 0..k {
            for s in [1, -1] {
                let mut v = vec![0; k];
                v[i] = s;
                rays.push(v);
            }
        }
        let cones = (0..1usize << k)
            .map(|bits| (0..k).map(|i| 2 * i + ((bits >> i) & 1)).collect())
            .collect();
        Fan::new(k, rays, cones).expect("valid fan")
    }
}
