//! The graded quivers derived from a Dynkin quiver: the Ginzburg quiver
//! `Q̂`, the cohomology-level quiver `Ω_Q` with its relation ideal `J`, and
//! the extension `Ω̄_Q` with formal inverses of the `v`-arrows and ideal `J̄`.

use crate::dynkin::{involution, CoxeterData, DynkinQuiver, Involution};
use crate::error::Error;
use crate::path::{GradedElement, Path};
use crate::{Coef, Result};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    /// Degree-0 arrow of `Q`.
    U,
    /// Reversed arrow of degree −1.
    UStar,
    /// `v_{i,φ(i)}` of degree `−N(i)−1`; payload is `i`.
    V(usize),
    /// Formal inverse `v⁻¹_{i,φ(i)}` of degree `N(i)+1`; payload is `i`.
    VInv(usize),
    /// Ginzburg loop `t_i` of degree −2; payload is `i`.
    Loop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedArrow {
    pub name: String,
    pub kind: ArrowKind,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

/// Vertices and graded arrows; arrow ids are indices into `arrows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuiver {
    pub vertices: Vec<usize>,
    pub arrows: Vec<GradedArrow>,
    by_name: HashMap<String, usize>,
}

impl GradedQuiver {
    fn new(vertices: Vec<usize>) -> Self {
        GradedQuiver {
            vertices,
            arrows: Vec::new(),
            by_name: HashMap::new(),
        }
    }

    fn push(&mut self, name: String, kind: ArrowKind, source: usize, target: usize, degree: i64) -> usize {
        let id = self.arrows.len();
        assert!(
            self.by_name.insert(name.clone(), id).is_none(),
            "duplicate arrow name {name}"
        );
        self.arrows.push(GradedArrow {
            name,
            kind,
            source,
            target,
            degree,
        });
        id
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Id of the degree-0 or degree−1 `u`-arrow `s → t`, if present.
    pub fn u_arrow(&self, s: usize, t: usize) -> Option<usize> {
        self.arrow_id(&format!("u({s},{t})"))
    }

    pub fn v_arrow(&self, i: usize) -> Option<usize> {
        self.arrow_id(&format!("v({i})"))
    }

    pub fn v_inv_arrow(&self, i: usize) -> Option<usize> {
        self.arrow_id(&format!("v_inv({i})"))
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(id, _)| id)
    }
}

/// Homogeneous generators of a two-sided ideal, with human-readable labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub generators: Vec<GradedElement>,
    pub labels: Vec<String>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn one() -> Coef {
    Coef::from_integer(1.into())
}

fn minus_one() -> Coef {
    Coef::from_integer((-1).into())
}

/// Add `Q`'s arrows at degree 0 and their reversals at degree −1.
fn push_u_arrows(gq: &mut GradedQuiver, q: &DynkinQuiver) {
    let mut sorted = q.arrows.clone();
    sorted.sort_unstable();
    for &(s, t) in &sorted {
        gq.push(format!("u({s},{t})"), ArrowKind::U, s, t, 0);
    }
    for &(s, t) in &sorted {
        gq.push(format!("u({t},{s})"), ArrowKind::UStar, t, s, -1);
    }
}

/// The vertex relation at `i`: `Σ_{α: i→j} α*α − Σ_{β: k→i} ββ*`, a loop of
/// degree −1.  `None` when the vertex has no incident edges.
fn vertex_relation(gq: &GradedQuiver, q: &DynkinQuiver, i: usize) -> Option<GradedElement> {
    let mut rel = GradedElement::zero(i, i, -1);
    let mut touched = false;
    for &(s, t) in &q.arrows {
        if s == i {
            // α: i→t, term α*α
            let alpha = gq.u_arrow(i, t).unwrap();
            let alpha_star = gq.u_arrow(t, i).unwrap();
            let p = Path::from_arrows(gq, vec![alpha, alpha_star], i).unwrap();
            rel.add_term(p, one()).unwrap();
            touched = true;
        } else if t == i {
            // β: s→i, term −ββ*
            let beta = gq.u_arrow(s, i).unwrap();
            let beta_star = gq.u_arrow(i, s).unwrap();
            let p = Path::from_arrows(gq, vec![beta_star, beta], i).unwrap();
            rel.add_term(p, minus_one()).unwrap();
            touched = true;
        }
    }
    if touched {
        Some(rel)
    } else {
        None
    }
}

/// `Ω_Q` and the ideal `J`.
///
/// `Ω_Q` is `Q̄` (arrows of `Q` at degree 0, reversals at degree −1) plus one
/// arrow `v(i): i → φ(i)` of degree `−N(i)−1` per vertex.  `J` is generated
/// by the vertex relations and, for every `u`-arrow `α: i → j` of `Q̄`, the
/// commutation relation `α·v_{φ(i),i} − v_{φ(j),j}·φ(α)`.
pub fn build_omega(q: &DynkinQuiver) -> Result<(GradedQuiver, RelationSet, Involution, Vec<usize>)> {
    let phi = involution(q)?;
    let cox = CoxeterData::new(q);
    let n = q.rank;
    let shifts: Vec<usize> = (1..=n)
        .map(|i| cox.shift_exponent(q, &phi, i))
        .collect::<Result<_>>()?;

    let mut gq = GradedQuiver::new((1..=n).collect());
    push_u_arrows(&mut gq, q);
    for i in 1..=n {
        let deg = -(shifts[i - 1] as i64) - 1;
        gq.push(format!("v({i})"), ArrowKind::V(i), i, phi.apply(i), deg);
    }

    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=n {
        if let Some(rel) = vertex_relation(&gq, q, i) {
            generators.push(rel);
            labels.push(format!("vertex({i})"));
        }
    }
    // commutation relations for every u-arrow of Q̄ (both degrees)
    let u_ids: Vec<usize> = gq
        .arrows
        .iter()
        .enumerate()
        .filter(|(_, a)| matches!(a.kind, ArrowKind::U | ArrowKind::UStar))
        .map(|(id, _)| id)
        .collect();
    for id in u_ids {
        let (i, j) = (gq.arrows[id].source, gq.arrows[id].target);
        let v_src = gq.v_arrow(phi.apply(i)).unwrap(); // v_{φ(i),i}: φ(i) → i
        let v_tgt = gq.v_arrow(phi.apply(j)).unwrap(); // v_{φ(j),j}: φ(j) → j
        let phi_alpha = gq.u_arrow(phi.apply(i), phi.apply(j)).ok_or_else(|| {
            Error::OrientationNotPhiCompatible
        })?;
        let lhs = Path::from_arrows(&gq, vec![v_src, id], phi.apply(i))?;
        let rhs = Path::from_arrows(&gq, vec![phi_alpha, v_tgt], phi.apply(i))?;
        if lhs.degree != rhs.degree {
            return Err(Error::OrientationNotPhiCompatible);
        }
        let mut rel = GradedElement::zero(phi.apply(i), j, lhs.degree);
        rel.add_term(lhs, one())?;
        rel.add_term(rhs, minus_one())?;
        generators.push(rel);
        labels.push(format!("commute({})", gq.arrows[id].name));
    }

    Ok((gq, RelationSet { generators, labels }, phi, shifts))
}

/// `Ω̄_Q` and `J̄`: adds `v_inv(i): φ(i) → i` of degree `N(i)+1` and the
/// invertibility relations `v⁻¹v − e_i`, `vv⁻¹ − e_{φ(i)}`.
pub fn build_omega_bar(
    omega: &GradedQuiver,
    j: &RelationSet,
    phi: &Involution,
    shifts: &[usize],
) -> Result<(GradedQuiver, RelationSet)> {
    let mut gq = omega.clone();
    let n = gq.vertices.len();
    for i in 1..=n {
        let deg = shifts[i - 1] as i64 + 1;
        gq.push(format!("v_inv({i})"), ArrowKind::VInv(i), phi.apply(i), i, deg);
    }
    let mut generators = j.generators.clone();
    let mut labels = j.labels.clone();
    for i in 1..=n {
        let v = gq.v_arrow(i).unwrap();
        let vinv = gq.v_inv_arrow(i).unwrap();
        // v⁻¹ v − e_i  (loop at i)
        let mut rel = GradedElement::zero(i, i, 0);
        rel.add_term(Path::from_arrows(&gq, vec![v, vinv], i)?, one())?;
        rel.add_term(Path::idempotent(i), minus_one())?;
        generators.push(rel);
        labels.push(format!("inv_left({i})"));
        // v v⁻¹ − e_{φ(i)}  (loop at φ(i))
        let pi = phi.apply(i);
        let mut rel = GradedElement::zero(pi, pi, 0);
        rel.add_term(Path::from_arrows(&gq, vec![vinv, v], pi)?, one())?;
        rel.add_term(Path::idempotent(pi), minus_one())?;
        generators.push(rel);
        labels.push(format!("inv_right({i})"));
    }
    Ok((gq, RelationSet { generators, labels }))
}

/// The differential of the Ginzburg dg algebra on generators: only the
/// loops `t_i` have a nonzero image.
#[derive(Debug, Clone)]
pub struct DerivationTable {
    /// arrow id → `d(arrow)`, one entry per arrow of `Q̂`.
    pub images: Vec<Option<GradedElement>>,
}

/// `Q̂` (arrows of `Q` at 0, reversals at −1, loops `t_i` at −2) together
/// with the differential `d t_i = Σ(α*α − ββ*)`.
pub fn build_ginzburg(q: &DynkinQuiver) -> (GradedQuiver, DerivationTable) {
    let n = q.rank;
    let mut gq = GradedQuiver::new((1..=n).collect());
    push_u_arrows(&mut gq, q);
    for i in 1..=n {
        gq.push(format!("t({i})"), ArrowKind::Loop(i), i, i, -2);
    }
    let mut images = vec![None; gq.arrows.len()];
    for (id, arrow) in gq.arrows.clone().iter().enumerate() {
        if let ArrowKind::Loop(i) = arrow.kind {
            let img = vertex_relation(&gq, q, *&i).unwrap_or_else(|| GradedElement::zero(i, i, -1));
            images[id] = Some(img);
        }
    }
    (gq, DerivationTable { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::from_short_name;

    #[test]
    fn omega_a5_matches_paper_degrees() {
        let q = from_short_name("A5").unwrap();
        let (gq, j, _, shifts) = build_omega(&q).unwrap();
        assert_eq!(shifts, vec![1, 2, 3, 4, 5]);
        // 4 u-arrows, 4 stars, 5 v-arrows
        assert_eq!(gq.arrows.len(), 13);
        let vdegs: Vec<i64> = (1..=5).map(|i| gq.arrows[gq.v_arrow(i).unwrap()].degree).collect();
        assert_eq!(vdegs, vec![-2, -3, -4, -5, -6]);
        // 5 vertex relations + 8 commutation relations
        assert_eq!(j.len(), 13);
    }

    #[test]
    fn omega_a1_is_a_single_loop() {
        let q = from_short_name("A1").unwrap();
        let (gq, j, _, _) = build_omega(&q).unwrap();
        assert_eq!(gq.arrows.len(), 1);
        let v = &gq.arrows[gq.v_arrow(1).unwrap()];
        assert_eq!((v.source, v.target, v.degree), (1, 1, -2));
        assert!(j.is_empty());
    }

    #[test]
    fn omega_e6_counts_and_degrees() {
        let q = from_short_name("E6").unwrap();
        let (gq, j, _, _) = build_omega(&q).unwrap();
        // 5 u + 5 u* + 6 v
        assert_eq!(gq.arrows.len(), 16);
        let vdegs: Vec<i64> = (1..=6).map(|i| gq.arrows[gq.v_arrow(i).unwrap()].degree).collect();
        assert_eq!(vdegs, vec![-5, -7, -6, -7, -8, -9]);
        // vertex-4 relation has three signed terms
        let idx = j.labels.iter().position(|l| l == "vertex(4)").unwrap();
        assert_eq!(j.generators[idx].terms.len(), 3);
        // 6 vertex relations + 10 commutation relations
        assert_eq!(j.len(), 16);
    }

    #[test]
    fn relations_are_homogeneous() {
        for name in ["A2", "A5", "D4", "D5", "E6", "E7"] {
            let q = from_short_name(name).unwrap();
            let (_, j, _, _) = build_omega(&q).unwrap();
            for (gen, label) in j.generators.iter().zip(&j.labels) {
                for p in gen.terms.keys() {
                    assert_eq!(p.degree, gen.degree, "{name} {label}");
                    assert_eq!(p.source, gen.source, "{name} {label}");
                    assert_eq!(p.target, gen.target, "{name} {label}");
                }
            }
        }
    }

    #[test]
    fn omega_bar_a5() {
        let q = from_short_name("A5").unwrap();
        let (gq, j, phi, shifts) = build_omega(&q).unwrap();
        let (bar, jbar) = build_omega_bar(&gq, &j, &phi, &shifts).unwrap();
        assert_eq!(bar.arrows.len(), 18);
        assert_eq!(jbar.len(), j.len() + 10);
        let invdegs: Vec<i64> = (1..=5)
            .map(|i| bar.arrows[bar.v_inv_arrow(i).unwrap()].degree)
            .collect();
        assert_eq!(invdegs, vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn omega_bar_a1_loop_degrees() {
        let q = from_short_name("A1").unwrap();
        let (gq, j, phi, shifts) = build_omega(&q).unwrap();
        let (bar, _) = build_omega_bar(&gq, &j, &phi, &shifts).unwrap();
        assert_eq!(bar.arrows[bar.v_arrow(1).unwrap()].degree, -2);
        assert_eq!(bar.arrows[bar.v_inv_arrow(1).unwrap()].degree, 2);
    }

    #[test]
    fn omega_bar_e6_inverse_degrees() {
        let q = from_short_name("E6").unwrap();
        let (gq, j, phi, shifts) = build_omega(&q).unwrap();
        let (bar, _) = build_omega_bar(&gq, &j, &phi, &shifts).unwrap();
        let invdegs: Vec<i64> = (1..=6)
            .map(|i| bar.arrows[bar.v_inv_arrow(i).unwrap()].degree)
            .collect();
        assert_eq!(invdegs, vec![5, 7, 6, 7, 8, 9]);
    }

    #[test]
    fn ginzburg_a2_differential() {
        let q = from_short_name("A2").unwrap();
        let (gq, d) = build_ginzburg(&q);
        assert_eq!(gq.arrows.len(), 4);
        let t1 = gq.arrow_id("t(1)").unwrap();
        let t2 = gq.arrow_id("t(2)").unwrap();
        // dt_1 = α*α, a single positive term; dt_2 = −αα*
        let dt1 = d.images[t1].as_ref().unwrap();
        assert_eq!(dt1.terms.len(), 1);
        assert!(dt1.terms.values().next().unwrap() == &Coef::from_integer(1.into()));
        let dt2 = d.images[t2].as_ref().unwrap();
        assert_eq!(dt2.terms.len(), 1);
        assert!(dt2.terms.values().next().unwrap() == &Coef::from_integer((-1).into()));
    }

    #[test]
    fn ginzburg_a1_trivial_differential() {
        let q = from_short_name("A1").unwrap();
        let (gq, d) = build_ginzburg(&q);
        let t1 = gq.arrow_id("t(1)").unwrap();
        assert!(d.images[t1].as_ref().unwrap().is_zero());
    }

    #[test]
    fn ginzburg_d4_center_has_three_terms() {
        let q = from_short_name("D4").unwrap();
        let (gq, d) = build_ginzburg(&q);
        let tc = gq.arrow_id("t(2)").unwrap(); // vertex 2 is the branch vertex of D4
        assert_eq!(d.images[tc].as_ref().unwrap().terms.len(), 3);
    }
}
