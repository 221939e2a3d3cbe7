//! Real dessins d'enfants of bigonal curves, stored as half-dessins on the
//! quotient `D = ℂP¹/conj` (a disk with holes).
//!
//! A dessin is `f⁻¹(ℝP¹)` for a real rational map `f`. Vertices over `0`
//! are ×, over `1` are ∘, over `∞` are •; monochrome vertices are critical
//! points with other real values. Edges over `(∞, 0)` are solid, over
//! `(0, 1)` dotted and over `(1, ∞)` bold.

mod counts;
mod families;
mod svg;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use counts::{bigonal_counts, cover_counts, BigonalCountReport, CoverAudit, OvalData};
pub use families::{family_bigonal, family_genus};
pub use svg::to_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStyle {
    Solid,
    Dotted,
    Bold,
}

impl EdgeStyle {
    /// Position of the interval on the circle `ℝP¹ ≅ [0, 3)`, with `0 ↦ 0`,
    /// `1 ↦ 1`, `∞ ↦ 2`.
    fn start(self) -> f64 {
        match self {
            EdgeStyle::Dotted => 0.0,
            EdgeStyle::Bold => 1.0,
            EdgeStyle::Solid => 2.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "type")]
pub enum VertexKind {
    Cross,
    Circle,
    Bullet,
    /// A critical point whose value lies inside `style`'s interval, at
    /// relative position `level / 1000`.
    Monochrome { style: EdgeStyle, level: u16 },
}

impl VertexKind {
    fn symbol(self) -> &'static str {
        match self {
            VertexKind::Cross => "×",
            VertexKind::Circle => "∘",
            VertexKind::Bullet => "•",
            VertexKind::Monochrome { .. } => "monochrome",
        }
    }

    /// Value of `f` at the vertex, read inside the interval of `style`.
    fn position(self, style: EdgeStyle) -> Option<f64> {
        let s = style.start();
        let end = |v: f64| if v == s || v == s + 1.0 { Some(v) } else { None };
        match self {
            VertexKind::Cross => end(0.0).or(end(3.0)),
            VertexKind::Circle => end(1.0),
            VertexKind::Bullet => end(2.0),
            VertexKind::Monochrome { style: m, level } => {
                (m == style && level > 0 && level < 1000).then(|| s + level as f64 / 1000.0)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Lies on `∂D` (a real critical point of `f`).
    pub real: bool,
    /// Incident edges in counterclockwise order. For a real vertex the list
    /// starts right after the exterior of `D`, so its two boundary edges come
    /// first and last.
    pub rotation: Vec<usize>,
}

impl Vertex {
    /// Valency in the orientable double.
    pub fn valency(&self) -> usize {
        if self.real {
            2 * self.rotation.len() - 2
        } else {
            self.rotation.len()
        }
    }

    /// Contribution to a valency budget: inner vertices appear twice in the
    /// double.
    pub fn weight(&self) -> usize {
        if self.real {
            self.valency()
        } else {
            2 * self.valency()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [usize; 2],
    pub style: EdgeStyle,
    /// Part of `∂D`.
    pub real: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Dessin {
    pub n: u32,
    /// Number of holes of `D`, the genus of the base curve.
    pub holes: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// Cyclic vertex sequences of the boundary components.
    pub boundary: Vec<Vec<usize>>,
}

/// A region of `D ∖ 𝒟`, as the cyclic list of its corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Violation {
    Structure { detail: String },
    OddCross { vertex: usize, valency: usize },
    BulletNotMultipleOfFour { vertex: usize, valency: usize },
    OddValency { vertex: usize, valency: usize },
    StyleMismatch { vertex: usize },
    Budget { kind: String, total: usize, expected: usize },
    Unoriented { region: Vec<usize> },
    NotDisk { region: Vec<usize> },
    BoundaryMismatch { detail: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    Same,
    Different,
}

impl Dessin {
    /// Numbers of (•, ∘, ×) vertices.
    pub fn census(&self) -> (usize, usize, usize) {
        let count = |k: VertexKind| self.vertices.iter().filter(|v| v.kind == k).count();
        (count(VertexKind::Bullet), count(VertexKind::Circle), count(VertexKind::Cross))
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e].ends;
        if a == v {
            b
        } else {
            a
        }
    }

    /// Total weight of the vertices of `kind`.
    pub fn budget(&self, kind: VertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).map(Vertex::weight).sum()
    }

    /// Traces the faces of the rotation system: from a dart `u → v` along
    /// `e`, continue with the edge after `e` at `v`. Faces passing through
    /// the exterior corner of a real vertex are the holes and the outside;
    /// they come back as the second list.
    fn faces(&self) -> Result<(Vec<Region>, Vec<Region>), String> {
        let m = self.edges.len();
        let mut seen = vec![[false; 2]; m];
        let (mut inner, mut outer) = (Vec::new(), Vec::new());
        for e0 in 0..m {
            for s0 in 0..2 {
                if seen[e0][s0] {
                    continue;
                }
                let (mut e, mut s) = (e0, s0);
                let mut region = Region { vertices: Vec::new(), edges: Vec::new() };
                let (mut ext, mut int) = (false, false);
                loop {
                    seen[e][s] = true;
                    let tail = self.edges[e].ends[s];
                    let head = self.edges[e].ends[1 - s];
                    region.vertices.push(tail);
                    region.edges.push(e);
                    let rot = &self.vertices[head].rotation;
                    let p = rot.iter().position(|&x| x == e).ok_or("edge missing from rotation")?;
                    let wraps = p + 1 == rot.len();
                    if self.vertices[head].real && wraps {
                        ext = true;
                    } else {
                        int = true;
                    }
                    let next = rot[(p + 1) % rot.len()];
                    let ns = if self.edges[next].ends[0] == head { 0 } else { 1 };
                    if next == e && self.edges[e].ends[0] == self.edges[e].ends[1] {
                        return Err("loops are not supported".into());
                    }
                    e = next;
                    s = ns;
                    if (e, s) == (e0, s0) {
                        break;
                    }
                    if region.edges.len() > 2 * m {
                        return Err("face tracing does not close".into());
                    }
                }
                match (ext, int) {
                    (true, false) => outer.push(region),
                    (false, true) => inner.push(region),
                    _ => return Err(format!("face through {:?} mixes interior and exterior", region.vertices)),
                }
            }
        }
        Ok((inner, outer))
    }

    /// The regions of `D ∖ 𝒟`.
    pub fn regions(&self) -> Vec<Region> {
        self.faces().map(|f| f.0).unwrap_or_default()
    }

    fn structure(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut bad = |detail: String| out.push(Violation::Structure { detail });
        for (i, e) in self.edges.iter().enumerate() {
            if e.ends.iter().any(|&v| v >= self.vertices.len()) {
                bad(format!("edge {i} has an endpoint out of range"));
                continue;
            }
            for &v in &e.ends {
                if !self.vertices[v].rotation.contains(&i) {
                    bad(format!("edge {i} missing from the rotation of vertex {v}"));
                }
            }
            if e.real && !(self.vertices[e.ends[0]].real && self.vertices[e.ends[1]].real) {
                bad(format!("real edge {i} has an inner endpoint"));
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if v.rotation.iter().any(|&e| e >= self.edges.len()) {
                bad(format!("vertex {i} has an edge out of range"));
                continue;
            }
            let reals: Vec<usize> = v.rotation.iter().copied().filter(|&e| self.edges[e].real).collect();
            if v.real {
                let ok = v.rotation.len() >= 2
                    && reals.len() == 2
                    && self.edges[v.rotation[0]].real
                    && self.edges[*v.rotation.last().unwrap()].real;
                if !ok {
                    bad(format!("real vertex {i} must start and end its rotation with its two boundary edges"));
                }
            } else if !reals.is_empty() {
                bad(format!("inner vertex {i} touches the boundary"));
            }
            if v.rotation.is_empty() {
                bad(format!("vertex {i} is isolated"));
            }
        }
        out
    }

    /// Checks every validity rule and lists the violations.
    pub fn validate(&self) -> Validation {
        let mut violations = self.structure();
        if !violations.is_empty() {
            return Validation { violations };
        }
        for (i, v) in self.vertices.iter().enumerate() {
            let val = v.valency();
            match v.kind {
                VertexKind::Cross if val % 2 == 1 => violations.push(Violation::OddCross { vertex: i, valency: val }),
                VertexKind::Bullet if val % 4 != 0 => {
                    violations.push(Violation::BulletNotMultipleOfFour { vertex: i, valency: val })
                }
                VertexKind::Circle if val % 2 == 1 => violations.push(Violation::OddValency { vertex: i, valency: val }),
                _ => {}
            }
            let styles: Vec<EdgeStyle> = v.rotation.iter().map(|&e| self.edges[e].style).collect();
            let fits = styles.iter().all(|&s| v.kind.position(s).is_some());
            let alternates = match v.kind {
                VertexKind::Monochrome { .. } => true,
                _ if v.real => styles.windows(2).all(|w| w[0] != w[1]),
                _ => (0..styles.len()).all(|k| styles[k] != styles[(k + 1) % styles.len()]),
            };
            if !fits || !alternates {
                violations.push(Violation::StyleMismatch { vertex: i });
            }
        }
        let expected = 8 * self.n as usize;
        for kind in [VertexKind::Cross, VertexKind::Circle, VertexKind::Bullet] {
            let total = self.budget(kind);
            if total != expected {
                violations.push(Violation::Budget { kind: kind.symbol().into(), total, expected });
            }
        }
        let (inner, outer) = match self.faces() {
            Ok(f) => f,
            Err(detail) => {
                violations.push(Violation::Structure { detail });
                return Validation { violations };
            }
        };
        for r in &inner {
            if !self.oriented(r) {
                violations.push(Violation::Unoriented { region: r.vertices.clone() });
            }
        }
        // D is planar with every boundary circle in the graph, so the regions
        // are disks exactly when the graph is connected.
        if !self.connected() {
            for r in inner.iter().filter(|r| self.is_triangle(r)) {
                violations.push(Violation::NotDisk { region: r.vertices.clone() });
            }
            if inner.iter().all(|r| !self.is_triangle(r)) {
                violations.push(Violation::Structure { detail: "graph is disconnected".into() });
            }
        }
        if outer.len() != self.holes as usize + 1 {
            violations.push(Violation::BoundaryMismatch {
                detail: format!("{} boundary components for {} holes", outer.len(), self.holes),
            });
        }
        let mut traced: Vec<Vec<usize>> = outer.iter().map(|r| canonical_cycle(&r.vertices)).collect();
        let mut stored: Vec<Vec<usize>> = self.boundary.iter().map(|c| canonical_cycle(c)).collect();
        traced.sort();
        stored.sort();
        if traced != stored {
            violations.push(Violation::BoundaryMismatch { detail: "stored boundary cycles differ from the traced ones".into() });
        }
        Validation { violations }
    }

    /// Walking around the region, `f` runs monotonically along `ℝP¹`.
    fn oriented(&self, r: &Region) -> bool {
        let k = r.vertices.len();
        let mut signs = Vec::with_capacity(k);
        for i in 0..k {
            let e = &self.edges[r.edges[i]];
            let a = self.vertices[r.vertices[i]].kind.position(e.style);
            let b = self.vertices[r.vertices[(i + 1) % k]].kind.position(e.style);
            match (a, b) {
                (Some(a), Some(b)) if a != b => signs.push(b > a),
                _ => return false,
            }
        }
        signs.iter().all(|&s| s == signs[0])
    }

    /// One vertex of each of the types ×, ∘, •.
    pub fn is_triangle(&self, r: &Region) -> bool {
        let count = |k: VertexKind| r.vertices.iter().filter(|&&v| self.vertices[v].kind == k).count();
        count(VertexKind::Cross) == 1 && count(VertexKind::Circle) == 1 && count(VertexKind::Bullet) == 1
    }

    fn connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.vertices[v].rotation {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// For every pair of real × vertices on a common boundary component,
    /// whether they lie in the same half: the • valencies along either arc
    /// between them sum to `0 mod 8`.
    pub fn half_assignment(&self) -> BTreeMap<(usize, usize), Half> {
        let mut out = BTreeMap::new();
        for cycle in &self.boundary {
            // prefix[i] = • valency strictly before position i
            let mut prefix = vec![0usize; cycle.len() + 1];
            for (i, &v) in cycle.iter().enumerate() {
                let w = if self.vertices[v].kind == VertexKind::Bullet { self.vertices[v].valency() } else { 0 };
                prefix[i + 1] = prefix[i] + w;
            }
            let crosses: Vec<usize> =
                (0..cycle.len()).filter(|&i| self.vertices[cycle[i]].kind == VertexKind::Cross).collect();
            for (a, &i) in crosses.iter().enumerate() {
                for &j in &crosses[a + 1..] {
                    let sum = prefix[j] - prefix[i + 1];
                    let half = if sum % 8 == 0 { Half::Same } else { Half::Different };
                    let key = (cycle[i].min(cycle[j]), cycle[i].max(cycle[j]));
                    out.insert(key, half);
                }
            }
        }
        out
    }

    /// Whether the two arcs of every boundary component give the same
    /// half assignment, i.e. each component carries `0 mod 8` of •.
    pub fn half_assignment_is_arc_independent(&self) -> bool {
        self.boundary.iter().all(|c| {
            let total: usize = c
                .iter()
                .filter(|&&v| self.vertices[v].kind == VertexKind::Bullet)
                .map(|&v| self.vertices[v].valency())
                .sum();
            total % 8 == 0
        })
    }

    /// Four-valent real × vertices (solitary nodes) split as
    /// `(other half, same half)` relative to the first bivalent ×, which
    /// sits on the oval.
    pub fn solitary_split(&self) -> Option<(usize, usize)> {
        let halves = self.half_assignment();
        let is_cross = |v: usize, val: usize| {
            let x = &self.vertices[v];
            x.real && x.kind == VertexKind::Cross && x.valency() == val
        };
        let oval = (0..self.vertices.len()).find(|&v| is_cross(v, 2))?;
        let (mut other, mut same) = (0, 0);
        for v in (0..self.vertices.len()).filter(|&v| is_cross(v, 4)) {
            match halves.get(&(oval.min(v), oval.max(v)))? {
                Half::Same => same += 1,
                Half::Different => other += 1,
            }
        }
        Some((other, same))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                serde_json::json!({
                    "id": i,
                    "kind": v.kind,
                    "real": v.real,
                    "valency": v.valency(),
                    "rotation": v.rotation,
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "holes": self.holes,
            "census": { "bullet": self.census().0, "circle": self.census().1, "cross": self.census().2 },
            "vertices": vertices,
            "edges": self.edges,
            "boundary": self.boundary,
        })
    }
}

/// Rotates a cycle to start at its least element, choosing the direction
/// with the smaller second entry.
fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    if c.is_empty() {
        return Vec::new();
    }
    let k = c.len();
    let m = (0..k).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| c[(m + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| c[(m + k - i) % k]).collect();
    fwd.min(bwd)
}
