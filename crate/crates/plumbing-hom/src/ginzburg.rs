//! Cohomology of the (cohomologically graded) Ginzburg dg algebra of a
//! Dynkin quiver, used as an independent oracle for the hom dimensions of
//! `KΩ_Q/J`.
//!
//! The dg algebra is the path algebra of `Q̂` — arrows of `Q` in degree 0,
//! reversed arrows in degree −1 and a loop `t_i` of degree −2 at each vertex
//! — with `d` vanishing on `u`-arrows and `d t_i = Σ α*α − Σ ββ*`, extended
//! by the graded Leibniz rule.  Cohomology is computed degreewise from the
//! full (finite-dimensional) path spaces, which is only feasible at small
//! rank and shallow degree; that is exactly what makes it a useful
//! cross-check for the inductive machinery.

use crate::dynkin::DynkinQuiver;
use crate::homalg::enumerate_paths;
use crate::linalg::{IntRow, IntRowReducer};
use crate::path::{GradedElement, Path};
use crate::quiver::{build_ginzburg, DerivationTable, GradedQuiver};
use crate::{Coef, Result};
use std::collections::HashMap;

/// `d` of a single path by the graded Leibniz rule: the summand for position
/// `i` carries the sign `(−1)^σ` where `σ` is the total degree of the arrows
/// applied after position `i`.
pub fn differentiate_path(
    quiver: &GradedQuiver,
    table: &DerivationTable,
    path: &Path,
) -> Result<GradedElement> {
    let mut out = GradedElement::zero(path.source, path.target, path.degree + 1);
    for (i, &a) in path.arrows.iter().enumerate() {
        let Some(image) = &table.images[a] else {
            continue;
        };
        if image.is_zero() {
            continue;
        }
        let after_degree: i64 = path.arrows[i + 1..]
            .iter()
            .map(|&b| quiver.arrows[b].degree)
            .sum();
        let sign = if after_degree.rem_euclid(2) == 0 {
            Coef::from_integer(1.into())
        } else {
            Coef::from_integer((-1).into())
        };
        for (tp, c) in &image.terms {
            let mut arrows = path.arrows[..i].to_vec();
            arrows.extend_from_slice(&tp.arrows);
            arrows.extend_from_slice(&path.arrows[i + 1..]);
            let new_path = Path::from_arrows(quiver, arrows, path.source)?;
            out.add_term(new_path, c * &sign)?;
        }
    }
    Ok(out)
}

/// Extend `d` linearly to an element.
pub fn differentiate(
    quiver: &GradedQuiver,
    table: &DerivationTable,
    elem: &GradedElement,
) -> Result<GradedElement> {
    let mut out = GradedElement::zero(elem.source, elem.target, elem.degree + 1);
    for (p, c) in &elem.terms {
        let dp = differentiate_path(quiver, table, p)?;
        out.add(&dp.scaled(c))?;
    }
    Ok(out)
}

/// `dim H^p` of the `(from, to)` component for every `p` in
/// `degree_min..=0`, returned in ascending degree order.
pub fn cohomology_dims(
    q: &DynkinQuiver,
    from: usize,
    to: usize,
    degree_min: i64,
) -> Result<Vec<usize>> {
    let (quiver, table) = build_ginzburg(q);
    // paths per degree, one level below the window for the incoming rank
    let mut paths: HashMap<i64, Vec<Path>> = HashMap::new();
    for p in degree_min - 1..=0 {
        paths.insert(p, enumerate_paths(&quiver, from, to, p)?);
    }
    paths.insert(1, Vec::new());
    // integer images of `d` on generators: arrow id → list of (arrows, ±1)
    let gen_images: Vec<Option<Vec<(Vec<usize>, i64)>>> = table
        .images
        .iter()
        .map(|img| {
            img.as_ref().filter(|e| !e.is_zero()).map(|e| {
                e.terms
                    .iter()
                    .map(|(p, c)| {
                        debug_assert!(c.is_integer());
                        let v: i64 = c.to_integer().try_into().expect("derivation coefficient");
                        (p.arrows.clone(), v)
                    })
                    .collect()
            })
        })
        .collect();
    // rank of d restricted to each degree slice; the differential matrix is
    // integral, so fraction-free integer elimination applies
    let mut rank: HashMap<i64, usize> = HashMap::new();
    for p in degree_min - 1..=0 {
        let targets: HashMap<Vec<usize>, u32> = paths[&(p + 1)]
            .iter()
            .enumerate()
            .map(|(i, t)| (t.arrows.clone(), i as u32))
            .collect();
        let mut red = IntRowReducer::new();
        let mut entries: HashMap<u32, i64> = HashMap::new();
        for src in &paths[&p] {
            entries.clear();
            for (i, &a) in src.arrows.iter().enumerate() {
                let Some(image) = &gen_images[a] else {
                    continue;
                };
                let after_degree: i64 = src.arrows[i + 1..]
                    .iter()
                    .map(|&b| quiver.arrows[b].degree)
                    .sum();
                let sign = if after_degree.rem_euclid(2) == 0 { 1 } else { -1 };
                for (mid, c) in image {
                    let mut arrows = src.arrows[..i].to_vec();
                    arrows.extend_from_slice(mid);
                    arrows.extend_from_slice(&src.arrows[i + 1..]);
                    *entries.entry(targets[&arrows[..]]).or_insert(0) += sign * c;
                }
            }
            let mut row: IntRow = entries
                .iter()
                .filter(|(_, &v)| v != 0)
                .map(|(&c, &v)| (c, v))
                .collect();
            row.sort_unstable_by_key(|&(c, _)| c);
            red.insert(row);
        }
        rank.insert(p, red.rank());
    }
    rank.insert(degree_min - 2, 0); // unused guard
    Ok((degree_min..=0)
        .map(|p| paths[&p].len() - rank[&p] - rank[&(p - 1)])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::from_short_name;
    use crate::homalg::HomAlgebra;
    use crate::quiver::build_omega;

    #[test]
    fn differential_squares_to_zero_on_paths() {
        let q = from_short_name("A3").unwrap();
        let (quiver, table) = build_ginzburg(&q);
        for p in -6..=0 {
            for i in 1..=3 {
                for j in 1..=3 {
                    for path in enumerate_paths(&quiver, i, j, p).unwrap() {
                        let d1 = differentiate_path(&quiver, &table, &path).unwrap();
                        let d2 = differentiate(&quiver, &table, &d1).unwrap();
                        assert!(d2.is_zero(), "d² ≠ 0 on {}", path.display(&quiver));
                    }
                }
            }
        }
    }

    #[test]
    fn cohomology_matches_hom_dims_a2() {
        let q = from_short_name("A2").unwrap();
        let (gq, j, _, _) = build_omega(&q).unwrap();
        let alg = HomAlgebra::new(gq, j).unwrap();
        for i in 1..=2 {
            for jj in 1..=2 {
                let dims = cohomology_dims(&q, i, jj, -6).unwrap();
                for (k, p) in (-6..=0).enumerate() {
                    assert_eq!(dims[k], alg.hom_dim(i, jj, p), "({i},{jj},{p})");
                }
            }
        }
    }
}
