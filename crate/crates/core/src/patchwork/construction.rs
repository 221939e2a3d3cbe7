use std::collections::BTreeMap;

use super::assemble::{assemble_viro, predicted_ledger, square_pull_count, NodeLedger};
use super::block::{cubic_block, reflected_block, segment_pattern, Block};
use crate::error::{Error, Result};
use crate::geom::construct::cubic_offset;
use crate::geom::{exact_subdivision, tile_with_cubic_triangle, CellTag, LatticePoint, LatticePolygon, Subdivision};
use crate::poly::{SparseBivariate, ViroPolynomial};
use crate::rational::{int, Rational};

/// An assembled patchworking construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub subdivision: Subdivision,
    /// One block per cell, in cell order.
    pub blocks: Vec<Block>,
    pub viro: ViroPolynomial,
    pub ledger: NodeLedger,
    /// Solitary points promised for `f(x², y²)`.
    pub predicted: i64,
}

/// Blocks for a tagged subdivision: the cubic block (or its reflection) on
/// cubic cells, and on the other cells the coefficients of `coeff` at the
/// lattice points of the cell.
fn blocks_for(s: &Subdivision, coeff: &BTreeMap<LatticePoint, Rational>) -> Result<Vec<Block>> {
    let cubic = cubic_block();
    let reflected = reflected_block();
    s.cells
        .iter()
        .map(|c| match c.tag {
            CellTag::CubicBlock => Ok(cubic.shifted(cubic_offset(&c.polygon))),
            CellTag::ReflectedCubicBlock => Ok(reflected.shifted(cubic_offset(&c.polygon))),
            _ => {
                let poly = SparseBivariate::from_terms(
                    c.polygon
                        .lattice_points()
                        .into_iter()
                        .filter_map(|q| coeff.get(&q).map(|a| (q, a.clone()))),
                );
                Block::new(c.polygon.clone(), poly, Vec::new())
            }
        })
        .collect()
}

fn finish(subdivision: Subdivision, blocks: Vec<Block>) -> Result<Construction> {
    let viro = assemble_viro(&subdivision, &blocks)?;
    let ledger = predicted_ledger(&subdivision, &blocks)?;
    let predicted = square_pull_count(&ledger);
    Ok(Construction {
        subdivision,
        blocks,
        viro,
        ledger,
        predicted,
    })
}

/// Coefficient `1` at every cell vertex off the coordinate axes, and the
/// segment patterns along the axis segments.
fn exact_coefficients(s: &Subdivision) -> Result<BTreeMap<LatticePoint, Rational>> {
    let mut coeff = BTreeMap::new();
    for c in &s.cells {
        for v in c.polygon.vertices() {
            coeff.insert(*v, int(1));
        }
    }
    for seg in &s.segments {
        let pattern = segment_pattern(seg.length())?;
        let d = crate::geom::primitive_direction(seg.from, seg.to);
        if pattern.len() == 1 {
            // the monomial sits at the end that is not a cut corner
            let at = if s.cut_corners.contains(&seg.from) { seg.to } else { seg.from };
            coeff.insert(at, int(1));
            continue;
        }
        for (m, a) in pattern.iter().enumerate() {
            coeff.insert(seg.from.add(d.scale(m as i64)), int(*a));
        }
    }
    for c in &s.cut_corners {
        coeff.remove(c);
    }
    Ok(coeff)
}

/// The patchworked polynomial `f_k` on `kΔ` whose square pull `f_k(x², y²)`
/// has `exact_formula(k)` solitary points.
pub fn exact_construction(k: i64) -> Result<Construction> {
    let s = exact_subdivision(k)?;
    let coeff = exact_coefficients(&s)?;
    let blocks = blocks_for(&s, &coeff)?;
    finish(s, blocks)
}

/// Patchworking from the period tiling of `kΔ`, all vertex coefficients 1.
/// The prediction is four solitary points per cubic cell.
pub fn toric_construction(delta: &LatticePolygon, k: i64) -> Result<Construction> {
    let s = tile_with_cubic_triangle(delta, k)?;
    let coeff: BTreeMap<LatticePoint, Rational> = s
        .cells
        .iter()
        .flat_map(|c| c.polygon.vertices().iter().map(|v| (*v, int(1))))
        .collect();
    let blocks = blocks_for(&s, &coeff)?;
    let c = finish(s, blocks)?;
    if c.predicted != 4 * c.subdivision.cubic_count() as i64 {
        return Err(Error::Unsupported(format!(
            "boundary of {:?} produces axis tangencies",
            delta.vertices()
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::simplex;

    #[test]
    fn exact_predictions() {
        for (k, n) in [(3, 10), (4, 19), (5, 30)] {
            assert_eq!(exact_construction(k).unwrap().predicted, n);
        }
    }

    #[test]
    fn exact_needs_k_at_least_three() {
        assert!(exact_construction(2).is_err());
    }

    #[test]
    fn toric_small_cases() {
        let c = toric_construction(&simplex(1), 1).unwrap();
        assert_eq!(c.predicted, 0);
        let c = toric_construction(&simplex(1), 6).unwrap();
        assert_eq!(c.predicted, 4 * c.subdivision.cubic_count() as i64);
        assert!(c.predicted > 0);
    }
}
