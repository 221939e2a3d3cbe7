use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::block::{canonical_edge, Block, BoundaryPoint, NodeKind, PointClass, Position, Quadrant};
use crate::error::{Error, Result};
use crate::geom::{check_regular, segment_points, LatticePoint, Subdivision};
use crate::poly::ViroPolynomial;
use crate::rational::Rational;

/// Matches every cell of `s` with the block sitting on the same polygon.
fn pair_blocks<'a>(s: &Subdivision, blocks: &'a [Block]) -> Result<Vec<&'a Block>> {
    if blocks.len() != s.cells.len() {
        return Err(Error::BlockMismatch(format!("{} blocks for {} cells", blocks.len(), s.cells.len())));
    }
    let by_cell: BTreeMap<&[LatticePoint], &Block> = blocks.iter().map(|b| (b.cell.vertices(), b)).collect();
    s.cells
        .iter()
        .map(|c| {
            by_cell
                .get(c.polygon.vertices())
                .copied()
                .ok_or_else(|| Error::BlockMismatch(format!("no block on cell {:?}", c.polygon.vertices())))
        })
        .collect()
}

/// Edges shared by two cells, with the indices of both cells.
fn interior_edges(s: &Subdivision) -> BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> {
    let mut edges: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (k, c) in s.cells.iter().enumerate() {
        for (a, b) in c.polygon.edges() {
            edges.entry(canonical_edge(a, b)).or_default().push(k);
        }
    }
    edges.retain(|_, v| v.len() == 2);
    edges
}

fn check_fat_points(blocks: &[&Block], s: &Subdivision) -> Result<()> {
    for ((from, to), cells) in interior_edges(s) {
        let e1 = blocks[cells[0]].edge(from, to).expect("edge of its cell");
        let e2 = blocks[cells[1]].edge(from, to).expect("edge of its cell");
        for (p, q) in e1.points.iter().zip(&e2.points) {
            if !p.is_fat() {
                continue;
            }
            if p.multiplicity % 2 == 1 {
                return Err(Error::OddFatPoint {
                    from,
                    to,
                    multiplicity: p.multiplicity,
                });
            }
            if p.position != Position::Imaginary && (p.quadrant.is_none() || p.quadrant != q.quadrant) {
                return Err(Error::QuadrantMismatch { from, to });
            }
        }
    }
    Ok(())
}

/// Glues the blocks into a Viro polynomial with the lifting of `s`.
/// `blocks` may be given in any order; each is matched to its cell.
pub fn assemble_viro(s: &Subdivision, blocks: &[Block]) -> Result<ViroPolynomial> {
    let report = check_regular(s)?;
    if !report.regular {
        return Err(Error::Irregular("stored lifting does not induce the cells".into()));
    }
    let paired = pair_blocks(s, blocks)?;
    let mut seen: BTreeMap<LatticePoint, Rational> = BTreeMap::new();
    for (cell, block) in s.cells.iter().zip(&paired) {
        for (a, b) in cell.polygon.edges() {
            for q in segment_points(a, b) {
                let c = block.poly.coeff(q);
                match seen.get(&q) {
                    Some(prev) if *prev != c => return Err(Error::EdgeMismatch { from: a, to: b, at: q }),
                    _ => {
                        seen.insert(q, c);
                    }
                }
            }
        }
    }
    check_fat_points(&paired, s)?;
    let mut out = ViroPolynomial::new();
    for block in &paired {
        for (e, c) in block.poly.terms() {
            let lift = s
                .lift
                .get(e)
                .cloned()
                .ok_or_else(|| Error::Irregular(format!("no lift value at {e:?}")))?;
            out.insert(*e, c.clone(), lift);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axis {
    /// The axis `y = 0`, divisor of an edge on the line `j = 0`.
    X,
    Y,
}

/// A real point of the curve on a coordinate axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisRecord {
    pub axis: Axis,
    pub position: Position,
    pub multiplicity: u32,
}

impl AxisRecord {
    pub fn is_positive_tangency(&self) -> bool {
        self.position == Position::Positive && self.multiplicity >= 2
    }
}

/// Predicted singular points of the patchworked curve.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeLedger {
    /// Indexed by [`Quadrant::index`].
    pub solitary: [usize; 4],
    pub non_solitary: [usize; 4],
    /// Non-real singular points, each point of a conjugate pair counted.
    pub imaginary: usize,
    pub axis: Vec<AxisRecord>,
    /// Corners of the ambient polygon cut away from the support.
    pub vertices: Vec<LatticePoint>,
}

impl NodeLedger {
    pub fn solitary_in(&self, q: Quadrant) -> usize {
        self.solitary[q.index()]
    }

    pub fn total_singular(&self) -> usize {
        self.solitary.iter().sum::<usize>() + self.non_solitary.iter().sum::<usize>() + self.imaginary
    }

    fn add_real(&mut self, q: Quadrant, kind: NodeKind, n: usize) {
        match kind {
            NodeKind::Solitary => self.solitary[q.index()] += n,
            NodeKind::NonSolitary => self.non_solitary[q.index()] += n,
        }
    }

    /// Contribution of a fat point of multiplicity `2m` on an interior edge with direction `e`.
    pub fn add_fat_point(&mut self, p: &BoundaryPoint, e: LatticePoint) {
        let m = (p.multiplicity / 2) as usize;
        match (p.position, p.quadrant) {
            (Position::Imaginary, _) => self.imaginary += 2 * m - 1,
            (_, Some(q)) => {
                self.add_real(q, NodeKind::Solitary, m - 1);
                self.add_real(q.reflect_perp(e), NodeKind::Solitary, m);
            }
            (_, None) => unreachable!("real fat points carry a quadrant after validation"),
        }
    }
}

/// The singular points promised by patchworking for the given blocks.
pub fn predicted_ledger(s: &Subdivision, blocks: &[Block]) -> Result<NodeLedger> {
    let paired = pair_blocks(s, blocks)?;
    check_fat_points(&paired, s)?;
    let mut ledger = NodeLedger::default();
    for b in &paired {
        for sing in &b.singulars {
            match sing.class {
                PointClass::Real(q) => ledger.add_real(q, sing.kind, 1),
                PointClass::Imaginary => ledger.imaginary += 1,
            }
        }
    }
    let interior = interior_edges(s);
    for ((from, to), cells) in &interior {
        let e = paired[cells[0]].edge(*from, *to).expect("edge of its cell");
        for p in e.points.iter().filter(|p| p.is_fat()) {
            ledger.add_fat_point(p, e.direction());
        }
    }
    for (k, c) in s.cells.iter().enumerate() {
        for (a, b) in c.polygon.edges() {
            let (from, to) = canonical_edge(a, b);
            if interior.contains_key(&(from, to)) {
                continue;
            }
            let axis = if from.j == 0 && to.j == 0 {
                Axis::X
            } else if from.i == 0 && to.i == 0 {
                Axis::Y
            } else {
                continue;
            };
            let e = paired[k].edge(from, to).expect("edge of its cell");
            for p in e.points.iter().filter(|p| p.position != Position::Imaginary) {
                ledger.axis.push(AxisRecord {
                    axis,
                    position: p.position,
                    multiplicity: p.multiplicity,
                });
            }
        }
    }
    ledger.vertices = s.cut_corners.clone();
    Ok(ledger)
}

/// Solitary points of `f(x², y²)` promised by a ledger of `f`: four per
/// positive-quadrant solitary node, two per positive-axis tangency, one per
/// cut corner.
pub fn square_pull_count(ledger: &NodeLedger) -> i64 {
    let tangencies = ledger.axis.iter().filter(|r| r.is_positive_tangency()).count();
    (4 * ledger.solitary_in(Quadrant::POSITIVE) + 2 * tangencies + ledger.vertices.len()) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Cell, CellTag, LatticePolygon};
    use crate::patchwork::block::{cubic_block, reflected_block};
    use crate::poly::SparseBivariate;
    use crate::rational::{frac, int};

    fn lp(i: i64, j: i64) -> LatticePoint {
        LatticePoint::new(i, j)
    }

    fn subdivision(cells: Vec<LatticePolygon>, lift: impl Fn(LatticePoint) -> Rational) -> Subdivision {
        let parent = LatticePolygon::hull(cells.iter().flat_map(|c| c.vertices().to_vec())).unwrap();
        let lift = parent.lattice_points().into_iter().map(|p| (p, lift(p))).collect();
        Subdivision {
            parent,
            cells: cells.into_iter().map(|polygon| Cell { polygon, tag: CellTag::Filler }).collect(),
            lift,
            segments: vec![],
            ambient: None,
            cut_corners: vec![],
        }
    }

    /// The cubic triangle and its reflection glued along `(2,1)-(1,2)`.
    fn glued() -> (Subdivision, Vec<Block>) {
        let a = cubic_block();
        let b = reflected_block().shifted(lp(1, 1));
        let s = subdivision(vec![a.cell.clone(), b.cell.clone()], |p| {
            if p.i + p.j <= 3 {
                int(0)
            } else {
                frac(p.i + p.j - 3, 3)
            }
        });
        (s, vec![a, b])
    }

    #[test]
    fn single_cell_is_identity() {
        let b = cubic_block();
        let s = Subdivision::single_cell(b.cell.clone(), |_| int(0));
        let v = assemble_viro(&s, &[b.clone()]).unwrap();
        assert_eq!(v.underlying(), b.poly);
        assert!(v.terms().values().all(|t| t.lift == int(0)));
    }

    #[test]
    fn matching_edges_glue() {
        let (s, blocks) = glued();
        let v = assemble_viro(&s, &blocks).unwrap();
        assert_eq!(v.get(lp(2, 2)).unwrap().lift, frac(1, 3));
        assert_eq!(v.get(lp(1, 1)).unwrap().coeff, int(-3));
        let rev: Vec<Block> = blocks.into_iter().rev().collect();
        assert_eq!(assemble_viro(&s, &rev).unwrap(), v);
        let ledger = predicted_ledger(&s, &rev).unwrap();
        assert_eq!(ledger.solitary_in(Quadrant::POSITIVE), 2);
        assert_eq!(square_pull_count(&ledger), 8);
    }

    #[test]
    fn mismatched_edge_is_reported() {
        let (s, mut blocks) = glued();
        let mut p = blocks[1].poly.clone();
        p.add_term(lp(2, 1), int(1));
        blocks[1] = Block::new(blocks[1].cell.clone(), p, vec![]).unwrap();
        let err = assemble_viro(&s, &blocks).unwrap_err();
        assert!(matches!(err, Error::EdgeMismatch { at, .. } if at == lp(2, 1)), "{err}");
    }

    #[test]
    fn irregular_lift_is_rejected() {
        let (mut s, blocks) = glued();
        for v in s.lift.values_mut() {
            *v = int(0);
        }
        assert!(matches!(assemble_viro(&s, &blocks), Err(Error::Irregular(_))));
    }

    /// Square `[0,n]²` cut along the diagonal, with `(1 + s)^n` on the diagonal.
    fn diagonal_fat(n: i64) -> (Subdivision, Vec<Block>) {
        let lower = LatticePolygon::triangle(lp(0, 0), lp(n, 0), lp(n, n)).unwrap();
        let upper = LatticePolygon::triangle(lp(0, 0), lp(n, n), lp(0, n)).unwrap();
        let binom: Vec<i64> = (0..=n)
            .scan(1i64, |c, k| {
                let v = *c;
                *c = *c * (n - k) / (k + 1);
                Some(v)
            })
            .collect();
        let diag: Vec<((i64, i64), i64)> = binom.iter().enumerate().map(|(k, c)| ((k as i64, k as i64), *c)).collect();
        let mut lo = diag.clone();
        lo.push(((n, 0), 1));
        let mut up = diag;
        up.push(((0, n), 1));
        let blocks = vec![
            Block::new(lower.clone(), SparseBivariate::from_int_terms(&lo), vec![]).unwrap(),
            Block::new(upper.clone(), SparseBivariate::from_int_terms(&up), vec![]).unwrap(),
        ];
        let s = subdivision(vec![lower, upper], |p| frac((p.j - p.i).max(0), n));
        (s, blocks)
    }

    #[test]
    fn odd_fat_point_is_rejected() {
        let (s, blocks) = diagonal_fat(3);
        let err = assemble_viro(&s, &blocks).unwrap_err();
        assert_eq!(err, Error::OddFatPoint { from: lp(0, 0), to: lp(3, 3), multiplicity: 3 });
    }

    #[test]
    fn fat_point_needs_matching_quadrants() {
        let (s, mut blocks) = diagonal_fat(2);
        assert!(matches!(assemble_viro(&s, &blocks), Err(Error::QuadrantMismatch { .. })));
        let q = Quadrant { neg_x: true, neg_y: false };
        blocks[0].declare_quadrant(lp(0, 0), lp(2, 2), 0, q).unwrap();
        blocks[1].declare_quadrant(lp(2, 2), lp(0, 0), 0, Quadrant::POSITIVE).unwrap();
        assert!(matches!(assemble_viro(&s, &blocks), Err(Error::QuadrantMismatch { .. })));
        blocks[1].declare_quadrant(lp(0, 0), lp(2, 2), 0, q).unwrap();
        assemble_viro(&s, &blocks).unwrap();
        // m = 1: nothing in Q_p, one point in Q_p(e^⊥) with e^⊥ = (1, -1)
        let ledger = predicted_ledger(&s, &blocks).unwrap();
        assert_eq!(ledger.solitary_in(q), 0);
        assert_eq!(ledger.solitary_in(Quadrant { neg_x: false, neg_y: true }), 1);
    }

    #[test]
    fn fat_point_split() {
        let mut ledger = NodeLedger::default();
        let p = BoundaryPoint {
            root: None,
            position: Position::Positive,
            multiplicity: 4,
            quadrant: Some(Quadrant::POSITIVE),
        };
        ledger.add_fat_point(&p, lp(1, 0));
        assert_eq!(ledger.solitary_in(Quadrant::POSITIVE), 1);
        assert_eq!(ledger.solitary_in(Quadrant { neg_x: false, neg_y: true }), 2);
        assert_eq!(ledger.total_singular(), 3);
        let mut imag = NodeLedger::default();
        imag.add_fat_point(&BoundaryPoint { position: Position::Imaginary, quadrant: None, ..p }, lp(1, 0));
        assert_eq!(imag.imaginary, 3);
    }

    #[test]
    fn one_interior_node_pulls_back_to_four() {
        let mut ledger = NodeLedger::default();
        ledger.solitary[Quadrant::POSITIVE.index()] = 1;
        assert_eq!(square_pull_count(&ledger), 4);
    }
}
