//! Marker graphs and admissible triples.
//!
//! For a degree `m` and a ray `rho` with `m(rho) = -1`, the marker graph has
//! as vertices the other rays on which `m` is negative, joined when they lie
//! in a common cone. A triple `(m, rho, C)` is admissible when `C` is a
//! connected component of that graph other than the whole vertex set.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fan::{cone_containing, Fan};
use crate::intlin::{dot, solve_integer, IntMat, IntVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("degree has {got} coordinates, fan has dimension {dim}")]
    Dimension { got: usize, dim: usize },
    #[error("ray index {0} out of range")]
    BadRay(usize),
    #[error("m(rho) = {0}, expected -1")]
    NotMinusOne(i64),
    #[error("component {0:?} is not a proper connected component of the marker graph")]
    NotAComponent(Vec<usize>),
    #[error("component index {index} out of range ({count} admissible components)")]
    BadComponentIndex { index: usize, count: usize },
    #[error("fan has no unimodular maximal cone to parametrize degrees")]
    NoUnimodularCone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerGraph {
    pub rho: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Sorted ascending inside, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdmissibleTriple {
    pub m: IntVec,
    pub rho: usize,
    #[serde(rename = "C")]
    pub component: Vec<usize>,
}

pub fn marker_graph(fan: &Fan, m: &[i64], rho: usize) -> Result<MarkerGraph, TripleError> {
    if m.len() != fan.dim() {
        return Err(TripleError::Dimension { got: m.len(), dim: fan.dim() });
    }
    if rho >= fan.n_rays() {
        return Err(TripleError::BadRay(rho));
    }
    let values = fan.evaluate(m);
    if values[rho] != -1 {
        return Err(TripleError::NotMinusOne(values[rho]));
    }
    Ok(graph_from_values(fan, &values, rho))
}

fn graph_from_values(fan: &Fan, values: &[i64], rho: usize) -> MarkerGraph {
    let vertices: Vec<usize> = (0..fan.n_rays()).filter(|&i| i != rho && values[i] < 0).collect();
    let mut edges = Vec::new();
    let mut uf = UnionFind::<usize>::new(vertices.len());
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if cone_containing(fan, &[vertices[a], vertices[b]]).is_some() {
                edges.push((vertices[a], vertices[b]));
                uf.union(a, b);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut rep_of: Vec<Option<usize>> = vec![None; vertices.len()];
    for (k, &v) in vertices.iter().enumerate() {
        match rep_of[labels[k]] {
            Some(c) => components[c].push(v),
            None => {
                rep_of[labels[k]] = Some(components.len());
                components.push(vec![v]);
            }
        }
    }
    // vertices are ascending, so components are already ordered by their
    // smallest vertex and sorted internally
    MarkerGraph { rho, vertices, edges, components }
}

/// Components that are proper subsets of the vertex set.
pub fn admissible_components(g: &MarkerGraph) -> Vec<Vec<usize>> {
    if g.components.len() < 2 {
        return Vec::new();
    }
    g.components.clone()
}

/// Checks that `t` is an admissible triple of `fan`.
pub fn check_admissible(fan: &Fan, t: &AdmissibleTriple) -> Result<(), TripleError> {
    let g = marker_graph(fan, &t.m, t.rho)?;
    if admissible_components(&g).contains(&t.component) {
        Ok(())
    } else {
        Err(TripleError::NotAComponent(t.component.clone()))
    }
}

/// The triple with the `index`-th admissible component of the marker graph.
pub fn triple_from_component_index(
    fan: &Fan,
    m: &[i64],
    rho: usize,
    index: usize,
) -> Result<AdmissibleTriple, TripleError> {
    let comps = admissible_components(&marker_graph(fan, m, rho)?);
    let component = comps
        .get(index)
        .cloned()
        .ok_or(TripleError::BadComponentIndex { index, count: comps.len() })?;
    Ok(AdmissibleTriple { m: m.to_vec(), rho, component })
}

/// `2 * (1 + max |ray coordinate|)`. A heuristic: no bound on the degrees
/// carrying admissible triples is known in general.
pub fn default_bound(fan: &Fan) -> i64 {
    let max = fan.rays().iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    2 * (1 + max)
}

/// All `m` in `M` with `|m(v_i)| <= bound` for every ray, in lexicographic
/// order.
///
/// Degrees are parametrized by their values on the rays of a unimodular
/// maximal cone, so the fan must have one with `dim` rays.
pub fn degree_box(fan: &Fan, bound: i64) -> Result<Vec<IntVec>, TripleError> {
    let n = fan.dim();
    let cone = (0..fan.max_cones().len())
        .find(|&c| {
            fan.max_cones()[c].len() == n && crate::intlin::determinant(&fan.cone_matrix(c)).abs() == 1
        })
        .ok_or(TripleError::NoUnimodularCone)?;
    // rows of `basis_t` are the cone's rays; m = basis_t^{-1} * values
    let basis_t = fan.cone_matrix(cone).transpose();
    let inverse_cols: Vec<IntVec> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            solve_integer(&basis_t, &e).expect("unimodular cone has an integral inverse")
        })
        .collect();
    let inverse = IntMat::from_cols(n, &inverse_cols);
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    let mut out: Vec<IntVec> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut values = vec![0i64; n];
            for v in values.iter_mut() {
                *v = (code % side) as i64 - bound;
                code /= side;
            }
            let m = inverse.mul_vec(&values);
            fan.rays().iter().all(|r| dot(&m, r).abs() <= bound).then_some(m)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Admissible triples with degree in [`degree_box`], for every `rho` with
/// `m(rho) = -1`. Sorted by `(m, rho, C)`.
pub fn enumerate_triples(fan: &Fan, bound: i64) -> Result<Vec<AdmissibleTriple>, TripleError> {
    let degrees = degree_box(fan, bound)?;
    let mut out: Vec<AdmissibleTriple> = degrees
        .par_iter()
        .flat_map_iter(|m| triples_at_degree(fan, m))
        .collect();
    out.sort();
    Ok(out)
}

/// Admissible triples of a fixed degree.
pub fn triples_at_degree(fan: &Fan, m: &[i64]) -> Vec<AdmissibleTriple> {
    let values = fan.evaluate(m);
    let mut out = Vec::new();
    for rho in (0..fan.n_rays()).filter(|&i| values[i] == -1) {
        let g = graph_from_values(fan, &values, rho);
        for component in admissible_components(&g) {
            out.push(AdmissibleTriple { m: m.to_vec(), rho, component });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard::*;

    #[test]
    fn hirzebruch_marker_graph() {
        for n in 2..6 {
            for alpha in 1..n {
                let g = marker_graph(&hirzebruch(n), &[-alpha, -1], 1).unwrap();
                assert_eq!(g.vertices, vec![0, 2]);
                assert!(g.edges.is_empty());
                assert_eq!(g.components, vec![vec![0], vec![2]]);
                assert_eq!(admissible_components(&g), vec![vec![0], vec![2]]);
            }
        }
    }

    #[test]
    fn projective_plane_marker_graph() {
        // m(e1) = -1, m(e2) = -1, m(-e1-e2) = 2
        let g = marker_graph(&projective_space(2), &[-1, -1], 0).unwrap();
        assert_eq!(g.vertices, vec![1]);
        assert_eq!(g.components, vec![vec![1]]);
        assert!(admissible_components(&g).is_empty());
    }

    #[test]
    fn empty_graph() {
        // m = (-1, 0) on F_2: only ray 0 is negative
        let g = marker_graph(&hirzebruch(2), &[-1, 0], 0).unwrap();
        assert!(g.vertices.is_empty());
        assert!(admissible_components(&g).is_empty());
    }

    #[test]
    fn rejects_wrong_value_at_rho() {
        assert_eq!(marker_graph(&hirzebruch(2), &[-1, -1], 3), Err(TripleError::NotMinusOne(1)));
    }

    fn brute_force_triples(fan: &Fan, bound: i64) -> Vec<AdmissibleTriple> {
        // independent route: scan a coordinate box that contains the ray box,
        // build components by flood fill
        let n = fan.dim();
        let mut out = Vec::new();
        let side = 2 * bound * 4 + 1;
        for code in 0..side.pow(n as u32) {
            let mut c = code;
            let m: Vec<i64> = (0..n)
                .map(|_| {
                    let v = c % side - 4 * bound;
                    c /= side;
                    v
                })
                .collect();
            let vals: Vec<i64> = fan.rays().iter().map(|r| r.iter().zip(&m).map(|(a, b)| a * b).sum()).collect();
            if vals.iter().any(|v| v.abs() > bound) {
                continue;
            }
            for rho in 0..fan.n_rays() {
                if vals[rho] != -1 {
                    continue;
                }
                let verts: Vec<usize> = (0..fan.n_rays()).filter(|&i| i != rho && vals[i] < 0).collect();
                let mut comp = vec![usize::MAX; verts.len()];
                let mut comps: Vec<Vec<usize>> = Vec::new();
                for s in 0..verts.len() {
                    if comp[s] != usize::MAX {
                        continue;
                    }
                    let id = comps.len();
                    let mut stack = vec![s];
                    comp[s] = id;
                    let mut members = vec![];
                    while let Some(x) = stack.pop() {
                        members.push(verts[x]);
                        for y in 0..verts.len() {
                            let adjacent = fan.max_cones().iter().any(|c| c.contains(&verts[x]) && c.contains(&verts[y]));
                            if comp[y] == usize::MAX && adjacent {
                                comp[y] = id;
                                stack.push(y);
                            }
                        }
                    }
                    members.sort();
                    comps.push(members);
                }
                if comps.len() >= 2 {
                    for c in comps {
                        out.push(AdmissibleTriple { m: m.clone(), rho, component: c });
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn hirzebruch_two_triples() {
        let f2 = hirzebruch(2);
        let ts = enumerate_triples(&f2, 3).unwrap();
        assert_eq!(ts, brute_force_triples(&f2, 3));
        assert_eq!(
            ts,
            vec![
                AdmissibleTriple { m: vec![-1, -1], rho: 1, component: vec![0] },
                AdmissibleTriple { m: vec![-1, -1], rho: 1, component: vec![2] },
            ]
        );
    }

    #[test]
    fn hirzebruch_triple_count() {
        for n in 1..=5 {
            let fan = hirzebruch(n);
            let ts = enumerate_triples(&fan, n.max(1) + 1).unwrap();
            assert_eq!(ts.len() as i64, 2 * (n - 1), "F_{n}");
            assert_eq!(ts, brute_force_triples(&fan, n.max(1) + 1));
            for t in &ts {
                check_admissible(&fan, t).unwrap();
                assert!(!t.component.contains(&t.rho));
            }
        }
    }

    #[test]
    fn projective_plane_has_no_triples() {
        for b in 1..=4 {
            assert!(enumerate_triples(&projective_space(2), b).unwrap().is_empty());
        }
        assert!(brute_force_triples(&projective_space(2), 3).is_empty());
    }

    #[test]
    fn default_bound_of_hirzebruch() {
        assert_eq!(default_bound(&hirzebruch(3)), 8);
    }

    #[test]
    fn degree_box_matches_direct_scan() {
        let fan = hirzebruch(3);
        let b = 4;
        let got = degree_box(&fan, b).unwrap();
        let mut want = Vec::new();
        for x in -20..=20 {
            for y in -20..=20 {
                if fan.evaluate(&[x, y]).iter().all(|v| v.abs() <= b) {
                    want.push(vec![x, y]);
                }
            }
        }
        assert_eq!(got, want);
    }
}
