use std::f64::consts::TAU;

use super::{Dessin, Edge, EdgeStyle, Vertex, VertexKind};
use crate::error::{Error, Result};

const MIN_LEVEL: u16 = 300;
const MAX_LEVEL: u16 = 500;

/// Collects a drawing in the plane, or on a cylinder of circumference
/// `period`, and turns it into a rotation system.
struct Sketch {
    period: Option<f64>,
    pos: Vec<(f64, f64)>,
    outward: Vec<Option<(f64, f64)>>,
    kinds: Vec<VertexKind>,
    edges: Vec<Edge>,
    via: Vec<Option<(f64, f64)>>,
}

impl Sketch {
    fn new(period: Option<f64>) -> Self {
        Self { period, pos: vec![], outward: vec![], kinds: vec![], edges: vec![], via: vec![] }
    }

    fn inner(&mut self, kind: VertexKind, at: (f64, f64)) -> usize {
        self.pos.push(at);
        self.outward.push(None);
        self.kinds.push(kind);
        self.pos.len() - 1
    }

    fn real(&mut self, kind: VertexKind, at: (f64, f64), outward: (f64, f64)) -> usize {
        let v = self.inner(kind, at);
        self.outward[v] = Some(outward);
        v
    }

    fn edge(&mut self, a: usize, b: usize, style: EdgeStyle, real: bool) -> usize {
        self.edges.push(Edge { ends: [a, b], style, real });
        self.via.push(None);
        self.edges.len() - 1
    }

    fn curved(&mut self, a: usize, b: usize, style: EdgeStyle, real: bool, via: (f64, f64)) -> usize {
        let e = self.edge(a, b, style, real);
        self.via[e] = Some(via);
        e
    }

    fn delta(&self, from: (f64, f64), to: (f64, f64)) -> (f64, f64) {
        let mut dx = to.0 - from.0;
        if let Some(w) = self.period {
            dx -= w * (dx / w).round();
        }
        (dx, to.1 - from.1)
    }

    fn angle(&self, from: (f64, f64), to: (f64, f64)) -> f64 {
        let (dx, dy) = self.delta(from, to);
        dy.atan2(dx).rem_euclid(TAU)
    }

    fn finish(self, n: u32, holes: u32) -> Dessin {
        let mut vertices: Vec<Vertex> = (0..self.pos.len())
            .map(|v| Vertex { kind: self.kinds[v], real: self.outward[v].is_some(), rotation: vec![] })
            .collect();
        let mut darts: Vec<Vec<(f64, usize)>> = vec![vec![]; vertices.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            let [a, b] = edge.ends;
            for (u, w) in [(a, b), (b, a)] {
                let target = self.via[e].unwrap_or(self.pos[w]);
                darts[u].push((self.angle(self.pos[u], target), e));
            }
        }
        for (v, list) in darts.iter_mut().enumerate() {
            let start = self.outward[v].map(|(ox, oy)| oy.atan2(ox).rem_euclid(TAU)).unwrap_or(0.0);
            list.sort_by(|a, b| (a.0 - start).rem_euclid(TAU).total_cmp(&(b.0 - start).rem_euclid(TAU)));
            vertices[v].rotation = list.iter().map(|d| d.1).collect();
        }
        let mut dessin = Dessin { n, holes, vertices, edges: self.edges, boundary: vec![] };
        dessin.boundary = dessin.faces().map(|(_, outer)| outer.into_iter().map(|r| r.vertices).collect()).unwrap_or_default();
        dessin
    }
}

fn mono(style: EdgeStyle, level: u16) -> VertexKind {
    VertexKind::Monochrome { style, level }
}

const UP: (f64, f64) = (0.0, 1.0);
const DOWN: (f64, f64) = (0.0, -1.0);

/// `𝒟̃_{n,0,q}`, or `𝒟_{n,0,q}` when `contracted`.
///
/// The quotient disk is drawn as a strip. The upper side carries the part
/// of `ℝP¹` where the fibre is empty: `•₁ ×₁ •₂ … ×₂ₙ₋₁ •₂ₙ`, solid edges,
/// with the four-valent × vertices as solitary nodes. The lower side carries
/// the oval: `∘₁ m₁ ∘₂ … m₂ₙ₋₁ ∘₂ₙ` with dotted edges, where the ∘ are
/// tangencies with `B₀` and `m` are minima of `f`. The bivalent `×₀` and
/// `×₂ₙ` close the strip. Chords `•ⱼ–∘ⱼ` (bold) and `×ᵢ–mᵢ` (dotted) make
/// a ladder of triangles.
///
/// The fragment at `×₂ᵢ` replaces `•₂ᵢ, •₂ᵢ₊₁` by solid minima around one
/// inner four-valent •, and `∘₂ᵢ₊₁, m₂ᵢ` by an inner bivalent ∘ hanging
/// between `×₂ᵢ` and that •.
pub fn family_bigonal(n: u32, q: u32, contracted: bool) -> Result<Dessin> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if q >= n {
        return Err(Error::Parameter(format!("q = {q} must satisfy 0 ≤ q ≤ n − 1 = {}", n - 1)));
    }
    let n2 = 2 * n as usize;
    let mut s = Sketch::new(None);
    let x = |k: usize| k as f64;
    let fragments: Vec<usize> = (1..=q as usize).map(|i| 2 * i).collect();
    let replaced = |j: usize| fragments.iter().any(|&c| j == c || j == c + 1);

    let mut cross = vec![0; n2 + 1];
    cross[0] = s.real(VertexKind::Cross, (0.0, 0.5), (-1.0, 0.0));
    let mut top = vec![cross[0]];
    let mut bullet = vec![0; n2 + 1];
    for j in 1..=n2 {
        bullet[j] = if replaced(j) {
            s.real(mono(EdgeStyle::Solid, MAX_LEVEL), (x(2 * j - 1), 1.0), UP)
        } else {
            s.real(VertexKind::Bullet, (x(2 * j - 1), 1.0), UP)
        };
        top.push(bullet[j]);
        if j < n2 {
            cross[j] = s.real(VertexKind::Cross, (x(2 * j), 1.0), UP);
            top.push(cross[j]);
        }
    }
    cross[n2] = s.real(VertexKind::Cross, (x(2 * n2), 0.5), (1.0, 0.0));
    top.push(cross[n2]);
    for w in top.windows(2) {
        s.edge(w[0], w[1], EdgeStyle::Solid, true);
    }

    // Lower side, as (vertex, attachment point). When contracted every
    // attachment is the single merged ∘, reached along the old position.
    let merged = contracted.then(|| s.real(VertexKind::Circle, (x(n2), -1.0), DOWN));
    let lower = |s: &mut Sketch, kind: VertexKind, at: f64| match merged {
        Some(m) => (m, Some((at, 0.0))),
        None => (s.real(kind, (at, 0.0), DOWN), None),
    };
    let mut circle = vec![(0, None); n2 + 1];
    let mut minimum = vec![(0, None); n2];
    let mut bottom = vec![cross[0]];
    for j in 1..=n2 {
        if !fragments.contains(&(j - 1)) {
            circle[j] = lower(&mut s, VertexKind::Circle, x(2 * j - 1));
            bottom.push(circle[j].0);
        }
        if j < n2 && !fragments.contains(&j) {
            minimum[j] = lower(&mut s, mono(EdgeStyle::Dotted, MIN_LEVEL), x(2 * j));
            bottom.push(minimum[j].0);
        }
    }
    bottom.push(cross[n2]);
    let chord = |s: &mut Sketch, a: usize, (b, via): (usize, Option<(f64, f64)>), style: EdgeStyle| match via {
        Some(p) => s.curved(a, b, style, false, p),
        None => s.edge(a, b, style, false),
    };
    for j in 1..=n2 {
        if !replaced(j) {
            chord(&mut s, bullet[j], circle[j], EdgeStyle::Bold);
        }
    }
    for i in 1..n2 {
        if !fragments.contains(&i) {
            chord(&mut s, cross[i], minimum[i], EdgeStyle::Dotted);
        }
    }
    for &c in &fragments {
        let centre = x(2 * c);
        let b = s.inner(VertexKind::Bullet, (centre, 0.5));
        let o = s.inner(VertexKind::Circle, (centre, 0.75));
        s.edge(bullet[c], b, EdgeStyle::Solid, false);
        s.edge(bullet[c + 1], b, EdgeStyle::Solid, false);
        s.edge(b, o, EdgeStyle::Bold, false);
        s.edge(o, cross[c], EdgeStyle::Dotted, false);
        chord(&mut s, b, circle[c], EdgeStyle::Bold);
    }
    match merged {
        Some(m) => {
            s.curved(cross[0], m, EdgeStyle::Dotted, true, (0.0, 0.0));
            s.curved(m, cross[n2], EdgeStyle::Dotted, true, (x(2 * n2), 0.0));
        }
        None => {
            for w in bottom.windows(2) {
                s.edge(w[0], w[1], EdgeStyle::Dotted, true);
            }
        }
    }
    Ok(s.finish(n, 0))
}

/// `𝒟_n(𝔤)` on a disk with `𝔤` holes.
///
/// `𝒟_n(1)` lives on an annulus, drawn as a cylinder of circumference `4n`.
/// The outer circle carries the solitary nodes `×₁ … ×₂ₙ` separated by
/// solid minima. The inner circle carries the smooth component, `n`
/// tangencies with `B₀` separated by dotted minima. Around each even
/// `×₂ₖ` sits an inner four-valent • with an inner bivalent ∘ hanging
/// up to `×₂ₖ`. Each further hole replaces one inner ∘ by a small circle
/// carrying a tangency and a minimum.
pub fn family_genus(n: u32, genus: u32) -> Result<Dessin> {
    if genus == 0 {
        return Err(Error::Parameter("the base genus must be at least 1".into()));
    }
    if n == 0 || n < genus - 1 {
        return Err(Error::Parameter(format!("need n ≥ 𝔤 − 1 and n ≥ 1, got n = {n}, 𝔤 = {genus}")));
    }
    let nn = n as usize;
    let w = 4.0 * n as f64;
    let mut s = Sketch::new(Some(w));
    let mut outer = Vec::new();
    let mut crosses = Vec::new();
    for k in 0..2 * nn {
        let c = s.real(VertexKind::Cross, (2.0 * k as f64, 1.0), UP);
        let m = s.real(mono(EdgeStyle::Solid, MAX_LEVEL), (2.0 * k as f64 + 1.0, 1.0), UP);
        crosses.push(c);
        outer.push(c);
        outer.push(m);
    }
    let mut inner = Vec::new();
    let mut circles = Vec::new();
    let mut minima = Vec::new();
    for k in 0..nn {
        let o = s.real(VertexKind::Circle, (4.0 * k as f64 + 2.0, 0.0), DOWN);
        let m = s.real(mono(EdgeStyle::Dotted, MIN_LEVEL), (4.0 * k as f64 + 4.0, 0.0), DOWN);
        circles.push(o);
        minima.push(m);
        inner.push(o);
        inner.push(m);
    }
    for ring in [&outer, &inner] {
        let style = if ring[0] == outer[0] { EdgeStyle::Solid } else { EdgeStyle::Dotted };
        for i in 0..ring.len() {
            // go forward along the cylinder, even when a step is half a turn
            let (x, y) = s.pos[ring[i]];
            let step = w / ring.len() as f64;
            s.curved(ring[i], ring[(i + 1) % ring.len()], style, true, (x + step / 2.0, y));
        }
    }
    for k in 0..nn {
        let centre = 4.0 * k as f64 + 2.0;
        let node = crosses[2 * k + 1];
        let b = s.inner(VertexKind::Bullet, (centre, 0.5));
        s.edge(outer[4 * k + 1], b, EdgeStyle::Solid, false);
        s.edge(outer[4 * k + 3], b, EdgeStyle::Solid, false);
        s.edge(b, circles[k], EdgeStyle::Bold, false);
        s.edge(crosses[(2 * k + 2) % (2 * nn)], minima[k], EdgeStyle::Dotted, false);
        if (k as u32) < genus - 1 {
            let (dx, dy) = (0.1, 0.05);
            let o = s.real(VertexKind::Circle, (centre, 0.75 - dy), UP);
            let m = s.real(mono(EdgeStyle::Dotted, MIN_LEVEL), (centre, 0.75 + dy), DOWN);
            s.curved(o, m, EdgeStyle::Dotted, true, (centre - dx, 0.75));
            s.curved(o, m, EdgeStyle::Dotted, true, (centre + dx, 0.75));
            s.edge(b, o, EdgeStyle::Bold, false);
            s.edge(m, node, EdgeStyle::Dotted, false);
        } else {
            let o = s.inner(VertexKind::Circle, (centre, 0.75));
            s.edge(b, o, EdgeStyle::Bold, false);
            s.edge(o, node, EdgeStyle::Dotted, false);
        }
    }
    Ok(s.finish(n, genus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_valid(d: &Dessin) {
        let v = d.validate();
        assert!(v.is_valid(), "{:?}", v.violations);
    }

    #[test]
    fn census_at_n1() {
        let d = family_bigonal(1, 0, false).unwrap();
        assert_eq!(d.census(), (2, 2, 3));
        assert_valid(&d);
    }

    #[test]
    fn contraction_collides_circles() {
        let d = family_bigonal(3, 2, true).unwrap();
        assert_valid(&d);
        let real: Vec<&Vertex> = d.vertices.iter().filter(|v| v.real && v.kind == VertexKind::Circle).collect();
        assert_eq!(real.len(), 1);
        assert_eq!(real[0].valency(), 16);
    }

    #[test]
    fn q_out_of_range() {
        assert!(family_bigonal(2, 2, false).is_err());
        assert!(family_bigonal(0, 0, false).is_err());
    }

    #[test]
    fn fragments_move_nodes() {
        for n in 1..=4 {
            for q in 0..n {
                let d = family_bigonal(n, q, false).unwrap();
                assert_valid(&d);
                assert_eq!(d.solitary_split(), Some(((n + q) as usize, (n - q - 1) as usize)));
            }
        }
    }

    #[test]
    fn annulus_dessin() {
        let d = family_genus(1, 1).unwrap();
        assert_valid(&d);
        assert_eq!(d.boundary.len(), 2);
        assert!(d.regions().iter().all(|r| d.is_triangle(r)));
        assert_valid(&family_genus(2, 1).unwrap());
    }

    #[test]
    fn extra_holes() {
        let d = family_genus(3, 4).unwrap();
        assert_valid(&d);
        assert_eq!(d.holes, 4);
        assert_eq!(d.boundary.len(), 5);
        assert!(family_genus(1, 3).is_err());
    }
}
