//! Exact degreewise hom-space computation for a graded path algebra with
//! monomial-free homogeneous relations.
//!
//! The algebra must have all arrow degrees ≤ 0 with an acyclic degree-0
//! subquiver and all relation degrees < 0.  Under those hypotheses the
//! degree-`−p` part of `KΩ/J` from a fixed source is computed inductively:
//! every path of degree `−p` into `j` is an arrow `γ` into `j` applied to an
//! already-reduced element of a shallower layer (or, for degree-0 `γ`, of an
//! earlier vertex of the same layer), and the relation rows at stage `(j,p)`
//! are the generators ending at `j` applied to reduced bases of the layers
//! they reach back to.  Eliminating those rows yields a basis of actual
//! paths together with the matrices by which each arrow acts, so products
//! and normal forms never touch the (exponentially large) free algebra.
//!
//! `enumerate_paths` and `dense_hom_dim` implement the brute-force
//! definition directly and serve as an independent oracle at small degrees.

use crate::error::Error;
use crate::linalg::{RowReducer, SparseRow};
use crate::path::{GradedElement, Path};
use crate::quiver::{GradedQuiver, RelationSet};
use crate::{Coef, Result};
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

/// One degreewise slice of the reduced algebra from a fixed source vertex.
#[derive(Debug, Clone, Default)]
struct Layer {
    /// target vertex → representative paths forming a basis
    basis: HashMap<usize, Vec<Path>>,
    /// `(arrow id, basis index at the arrow's source)` → expansion over the
    /// basis at the arrow's target in this layer
    action: HashMap<(usize, usize), Vec<(usize, Coef)>>,
}

/// The graded algebra `KΩ/J` with cached per-source layer data.
///
/// Layers are computed lazily and memoized; the cache lives behind a
/// `RefCell`, so a `HomAlgebra` is not `Sync`.
pub struct HomAlgebra {
    pub quiver: GradedQuiver,
    pub relations: RelationSet,
    /// vertices in a topological order of the degree-0 arrows
    topo: Vec<usize>,
    relations_by_target: HashMap<usize, Vec<usize>>,
    layers: RefCell<HashMap<usize, Vec<Layer>>>,
}

/// Topological order of the vertices under degree-0 arrows (smallest vertex
/// first among ties), or the participating vertices of a cycle.
fn zero_degree_topo(quiver: &GradedQuiver) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = quiver.vertices.len();
    let mut indeg = vec![0usize; n + 1];
    for a in &quiver.arrows {
        if a.degree == 0 {
            indeg[a.target] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut done = vec![false; n + 1];
    while let Some(&v) = ready.iter().min() {
        ready.retain(|&w| w != v);
        done[v] = true;
        order.push(v);
        for a in &quiver.arrows {
            if a.degree == 0 && a.source == v {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((1..=n).filter(|&v| !done[v]).collect())
    }
}

impl HomAlgebra {
    pub fn new(quiver: GradedQuiver, relations: RelationSet) -> Result<Self> {
        for a in &quiver.arrows {
            if a.degree > 0 {
                return Err(Error::ZeroDegreeCycle(format!(
                    "arrow {} has positive degree {}",
                    a.name, a.degree
                )));
            }
        }
        let topo = zero_degree_topo(&quiver).map_err(|cyc| {
            Error::ZeroDegreeCycle(format!("degree-0 cycle through vertices {cyc:?}"))
        })?;
        let mut relations_by_target: HashMap<usize, Vec<usize>> = HashMap::new();
        for (idx, gen) in relations.generators.iter().enumerate() {
            if gen.degree >= 0 {
                return Err(Error::UnsupportedShape(format!(
                    "relation {} has degree {} >= 0",
                    relations.labels[idx], gen.degree
                )));
            }
            relations_by_target.entry(gen.target).or_default().push(idx);
        }
        Ok(HomAlgebra {
            quiver,
            relations,
            topo,
            relations_by_target,
            layers: RefCell::new(HashMap::new()),
        })
    }

    fn ensure_layers(&self, source: usize, depth: usize) {
        let mut cache = self.layers.borrow_mut();
        let layers = cache.entry(source).or_default();
        while layers.len() <= depth {
            let p = layers.len();
            let next = self.compute_layer(source, p, layers);
            layers.push(next);
        }
    }

    fn compute_layer(&self, source: usize, p: usize, layers: &[Layer]) -> Layer {
        let mut current = Layer::default();
        let basis_len = |layer: &Layer, v: usize| layer.basis.get(&v).map_or(0, |b| b.len());
        for &j in &self.topo {
            // ---- candidates: (arrow into j, basis index at its source) ----
            // the unit candidate e_source appears only at layer 0
            let mut cand: Vec<Option<(usize, usize)>> = Vec::new();
            if p == 0 && j == source {
                cand.push(None);
            }
            for (arrow_id, arrow) in self.quiver.arrows.iter().enumerate() {
                if arrow.target != j {
                    continue;
                }
                let d = (-arrow.degree) as usize;
                if d > p {
                    continue;
                }
                let q = p - d;
                let src_layer = if q == p { &current } else { &layers[q] };
                for m in 0..basis_len(src_layer, arrow.source) {
                    cand.push(Some((arrow_id, m)));
                }
            }
            let col_of: HashMap<(usize, usize), usize> = cand
                .iter()
                .enumerate()
                .filter_map(|(col, c)| c.map(|key| (key, col)))
                .collect();

            // ---- relation rows ----
            let mut red = RowReducer::new();
            if let Some(rel_ids) = self.relations_by_target.get(&j) {
                for &rid in rel_ids {
                    let rel = &self.relations.generators[rid];
                    let dr = (-rel.degree) as usize;
                    if dr > p {
                        continue;
                    }
                    let q0 = p - dr;
                    let nb = basis_len(&layers[q0], rel.source);
                    for m0 in 0..nb {
                        let mut row: SparseRow = SparseRow::new();
                        for (path, coef) in &rel.terms {
                            let mut vec: Vec<(usize, Coef)> = vec![(m0, Coef::one())];
                            let mut at_layer = q0;
                            let last = path.arrows.len() - 1;
                            for (k, &a) in path.arrows.iter().enumerate() {
                                let d = (-self.quiver.arrows[a].degree) as usize;
                                if k == last {
                                    for (m, c) in &vec {
                                        let col = col_of[&(a, *m)];
                                        let entry =
                                            row.entry(col).or_insert_with(Coef::zero);
                                        *entry = &*entry + &(coef * c);
                                        if entry.is_zero() {
                                            row.remove(&col);
                                        }
                                    }
                                } else {
                                    at_layer += d;
                                    let dest = if at_layer == p { &current } else { &layers[at_layer] };
                                    let mut acc: BTreeMap<usize, Coef> = BTreeMap::new();
                                    for (m, c) in &vec {
                                        if let Some(expr) = dest.action.get(&(a, *m)) {
                                            for (idx, ac) in expr {
                                                let entry =
                                                    acc.entry(*idx).or_insert_with(Coef::zero);
                                                *entry = &*entry + &(c * ac);
                                                if entry.is_zero() {
                                                    acc.remove(idx);
                                                }
                                            }
                                        }
                                    }
                                    vec = acc.into_iter().collect();
                                    if vec.is_empty() {
                                        break;
                                    }
                                }
                            }
                        }
                        red.insert(row);
                    }
                }
            }
            red.normalize();

            // ---- split candidates into basis and eliminated ----
            let mut basis_paths: Vec<Path> = Vec::new();
            let mut basis_idx_of_col: HashMap<usize, usize> = HashMap::new();
            for (col, c) in cand.iter().enumerate() {
                if red.is_pivot(col) {
                    continue;
                }
                let idx = basis_paths.len();
                basis_idx_of_col.insert(col, idx);
                match c {
                    None => basis_paths.push(Path::idempotent(source)),
                    Some((arrow_id, m)) => {
                        let arrow = &self.quiver.arrows[*arrow_id];
                        let q = p - (-arrow.degree) as usize;
                        let src_layer = if q == p { &current } else { &layers[q] };
                        let src_path = &src_layer.basis[&arrow.source][*m];
                        basis_paths.push(src_path.extend(&self.quiver, *arrow_id));
                        current
                            .action
                            .insert((*arrow_id, *m), vec![(idx, Coef::one())]);
                    }
                }
            }
            for (col, c) in cand.iter().enumerate() {
                if !red.is_pivot(col) {
                    continue;
                }
                let (arrow_id, m) = c.expect("unit candidate cannot be eliminated");
                let row = red.pivot_row(col).unwrap();
                let expr: Vec<(usize, Coef)> = row
                    .iter()
                    .filter(|(&c2, _)| c2 != col)
                    .map(|(&c2, v)| (basis_idx_of_col[&c2], -v.clone()))
                    .collect();
                current.action.insert((arrow_id, m), expr);
            }
            if !basis_paths.is_empty() {
                current.basis.insert(j, basis_paths);
            }
        }
        current
    }

    /// `dim Hom(i, j)` in the given degree.
    pub fn hom_dim(&self, from: usize, to: usize, degree: i64) -> usize {
        if degree > 0 {
            return 0;
        }
        let p = (-degree) as usize;
        self.ensure_layers(from, p);
        self.layers.borrow()[&from][p]
            .basis
            .get(&to)
            .map_or(0, |b| b.len())
    }

    /// Representative paths forming a basis of the given hom degree.
    pub fn hom_basis(&self, from: usize, to: usize, degree: i64) -> Vec<Path> {
        if degree > 0 {
            return Vec::new();
        }
        let p = (-degree) as usize;
        self.ensure_layers(from, p);
        self.layers.borrow()[&from][p]
            .basis
            .get(&to)
            .cloned()
            .unwrap_or_default()
    }

    /// Coordinates of a path over `hom_basis(path.source, path.target,
    /// path.degree)`.
    pub fn reduce_path(&self, path: &Path) -> Vec<(usize, Coef)> {
        let p = (-path.degree) as usize;
        self.ensure_layers(path.source, p);
        let cache = self.layers.borrow();
        let layers = &cache[&path.source];
        // locate the unit of layer 0 at the source
        let unit = layers[0]
            .basis
            .get(&path.source)
            .and_then(|b| b.iter().position(|q| q.is_idempotent()));
        let Some(unit) = unit else {
            return Vec::new();
        };
        let mut vec: Vec<(usize, Coef)> = vec![(unit, Coef::one())];
        let mut at_layer = 0usize;
        for &a in &path.arrows {
            at_layer += (-self.quiver.arrows[a].degree) as usize;
            let dest = &layers[at_layer];
            let mut acc: BTreeMap<usize, Coef> = BTreeMap::new();
            for (m, c) in &vec {
                if let Some(expr) = dest.action.get(&(a, *m)) {
                    for (idx, ac) in expr {
                        let entry = acc.entry(*idx).or_insert_with(Coef::zero);
                        *entry = &*entry + &(c * ac);
                        if entry.is_zero() {
                            acc.remove(idx);
                        }
                    }
                }
            }
            vec = acc.into_iter().collect();
            if vec.is_empty() {
                break;
            }
        }
        vec
    }

    /// Dense coordinate vector of an element over the basis of its degree.
    pub fn coordinates(&self, elem: &GradedElement) -> Vec<Coef> {
        let dim = self.hom_dim(elem.source, elem.target, elem.degree);
        let mut out = vec![Coef::zero(); dim];
        for (path, c) in &elem.terms {
            for (idx, v) in self.reduce_path(path) {
                out[idx] = &out[idx] + &(c * &v);
            }
        }
        out
    }

    /// Normal form: the same element rewritten over basis paths.
    pub fn normal_form(&self, elem: &GradedElement) -> GradedElement {
        let basis = self.hom_basis(elem.source, elem.target, elem.degree);
        let coords = self.coordinates(elem);
        let mut out = GradedElement::zero(elem.source, elem.target, elem.degree);
        for (idx, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term(basis[idx].clone(), c).expect("basis path endpoints");
            }
        }
        out
    }

    /// True when the element lies in `J`.
    pub fn is_zero(&self, elem: &GradedElement) -> bool {
        self.coordinates(elem).iter().all(|c| c.is_zero())
    }

    /// `later ∘ earlier` in normal form (`earlier` applied first).
    pub fn multiply(&self, later: &GradedElement, earlier: &GradedElement) -> Result<GradedElement> {
        if earlier.target != later.source {
            return Err(Error::NotComposable(format!(
                "product of {}→{} after {}→{}",
                later.source, later.target, earlier.source, earlier.target
            )));
        }
        let mut out = GradedElement::zero(
            earlier.source,
            later.target,
            earlier.degree + later.degree,
        );
        for (pb, cb) in &earlier.terms {
            for (pa, ca) in &later.terms {
                out.add_term(pa.compose(pb)?, ca * cb)?;
            }
        }
        Ok(self.normal_form(&out))
    }
}

/// All paths `from → to` of the exact degree, by depth-first search.
///
/// Rejects quivers where the search would not terminate: a positive-degree
/// arrow or a cycle of degree-0 arrows.
pub fn enumerate_paths(
    quiver: &GradedQuiver,
    from: usize,
    to: usize,
    degree: i64,
) -> Result<Vec<Path>> {
    for a in &quiver.arrows {
        if a.degree > 0 {
            return Err(Error::ZeroDegreeCycle(format!(
                "arrow {} has positive degree {}",
                a.name, a.degree
            )));
        }
    }
    zero_degree_topo(quiver)
        .map_err(|cyc| Error::ZeroDegreeCycle(format!("degree-0 cycle through vertices {cyc:?}")))?;
    let mut out = Vec::new();
    if degree > 0 {
        return Ok(out);
    }
    let mut stack: Vec<Path> = vec![Path::idempotent(from)];
    while let Some(p) = stack.pop() {
        if p.degree == degree && p.target == to {
            out.push(p.clone());
        }
        for (id, a) in quiver.arrows.iter().enumerate() {
            if a.source == p.target && p.degree + a.degree >= degree {
                stack.push(p.extend(quiver, id));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Brute-force hom dimension: paths of the degree minus the rank of the
/// degreewise slice of the two-sided ideal spanned by `a ∘ r ∘ b`.
pub fn dense_hom_dim(
    quiver: &GradedQuiver,
    relations: &RelationSet,
    from: usize,
    to: usize,
    degree: i64,
) -> Result<usize> {
    let paths = enumerate_paths(quiver, from, to, degree)?;
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut red = RowReducer::new();
    for rel in &relations.generators {
        let spare = degree - rel.degree; // total degree left for a and b
        for deg_b in spare..=0 {
            let deg_a = spare - deg_b;
            let rights = enumerate_paths(quiver, from, rel.source, deg_b)?;
            if rights.is_empty() {
                continue;
            }
            let lefts = enumerate_paths(quiver, rel.target, to, deg_a)?;
            for b in &rights {
                for a in &lefts {
                    let mut row = SparseRow::new();
                    for (t, c) in &rel.terms {
                        let full = a.compose(&t.compose(b)?)?;
                        let col = index[&full];
                        let entry = row.entry(col).or_insert_with(Coef::zero);
                        *entry = &*entry + c;
                        if entry.is_zero() {
                            row.remove(&col);
                        }
                    }
                    red.insert(row);
                }
            }
        }
    }
    Ok(paths.len() - red.rank())
}
