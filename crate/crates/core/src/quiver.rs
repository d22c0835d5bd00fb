//! Finite quivers, paths and walks.
//!
//! Arrows compose left to right: for `a: i -> j` and `b: j -> l` the path `ab`
//! goes from `i` to `l`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowData {
    pub label: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A finite quiver. Vertex and arrow order is declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<ArrowData>,
    vertex_index: HashMap<String, Vertex>,
    arrow_index: HashMap<String, Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(label, source, target)` triples.
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S, S)>,
        S: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(|v| v.as_ref().to_owned()).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyQuiver);
        }
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), Vertex(i)).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut arrow_data = Vec::new();
        let mut arrow_index = HashMap::new();
        for (label, source, target) in arrows {
            let label = label.as_ref().to_owned();
            if vertex_index.contains_key(&label) || arrow_index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            let lookup = |name: &str| {
                vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
            };
            let source = lookup(source.as_ref())?;
            let target = lookup(target.as_ref())?;
            arrow_index.insert(label.clone(), Arrow(arrow_data.len()));
            arrow_data.push(ArrowData { label, source, target });
        }
        Ok(Quiver { vertices, arrows: arrow_data, vertex_index, arrow_index })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertices.len()).map(Vertex)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.arrows.len()).map(Arrow)
    }

    pub fn vertex_label(&self, v: Vertex) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow_label(&self, a: Arrow) -> &str {
        &self.arrows[a.0].label
    }

    pub fn source(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].target
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.vertex_index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn arrow(&self, label: &str) -> Result<Arrow> {
        self.arrow_index.get(label).copied().ok_or_else(|| Error::UnknownArrow(label.to_owned()))
    }

    pub fn arrows_from(&self, v: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.source(a) == v)
    }

    pub fn arrows_to(&self, v: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.target(a) == v)
    }

    /// Path through the given arrows, checking that consecutive arrows chain.
    pub fn path(&self, arrows: &[Arrow]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::NotComposable("empty arrow list; use Path::trivial".into()));
        };
        for pair in arrows.windows(2) {
            if self.target(pair[0]) != self.source(pair[1]) {
                return Err(Error::NotComposable(format!(
                    "{} then {}",
                    self.arrow_label(pair[0]),
                    self.arrow_label(pair[1])
                )));
            }
        }
        Ok(Path {
            source: self.source(first),
            target: self.target(*arrows.last().unwrap()),
            arrows: arrows.to_vec(),
        })
    }

    /// Parses space-separated arrow labels, or `e:<vertex>` for a trivial path.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix("e:") {
            return Ok(Path::trivial(self.vertex(v.trim())?));
        }
        let arrows = text.split_whitespace().map(|l| self.arrow(l)).collect::<Result<Vec<_>>>()?;
        self.path(&arrows)
    }

    pub fn path_to_string(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e:{}", self.vertex_label(p.source))
        } else {
            p.arrows.iter().map(|&a| self.arrow_label(a)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn walk_to_string(&self, w: &Walk) -> String {
        if w.steps.is_empty() {
            return format!("e:{}", self.vertex_label(w.start));
        }
        w.steps
            .iter()
            .map(|s| match s.orientation {
                Orientation::Direct => self.arrow_label(s.arrow).to_owned(),
                Orientation::Inverse => format!("{}^-1", self.arrow_label(s.arrow)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a walk written as space-separated labels, with `^-1` marking
    /// inverse steps, or `e:<vertex>`.
    pub fn parse_walk(&self, text: &str) -> Result<Walk> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix("e:") {
            return Ok(Walk::trivial(self.vertex(v.trim())?));
        }
        let steps = text
            .split_whitespace()
            .map(|tok| match tok.strip_suffix("^-1") {
                Some(l) => Ok(Step::inverse(self.arrow(l)?)),
                None => Ok(Step::direct(self.arrow(tok)?)),
            })
            .collect::<Result<Vec<_>>>()?;
        check_reduced(self, &steps)
    }
}

/// A path of the quiver; an empty arrow list is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    arrows: Vec<Arrow>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: Arrow) -> Self {
        Path { source: q.source(a), target: q.target(a), arrows: vec![a] }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn first(&self) -> Option<Arrow> {
        self.arrows.first().copied()
    }

    pub fn last(&self) -> Option<Arrow> {
        self.arrows.last().copied()
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// Subpath made of arrows `start..end` (0-based, half open).
    pub fn slice(&self, q: &Quiver, start: usize, end: usize) -> Path {
        if start == end {
            let v = if start == 0 {
                self.source
            } else {
                q.target(self.arrows[start - 1])
            };
            Path::trivial(v)
        } else {
            Path { source: q.source(self.arrows[start]), target: q.target(self.arrows[end - 1]), arrows: self.arrows[start..end].to_vec() }
        }
    }

    pub fn as_walk(&self) -> Walk {
        Walk {
            start: self.source,
            end: self.target,
            steps: self.arrows.iter().map(|&a| Step::direct(a)).collect(),
        }
    }
}

/// Canonical order: by length, then lexicographically by arrow order, then by
/// source (which only matters for trivial paths).
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formal concatenation in the path algebra; no relations are applied.
pub fn compose_paths(p: &Path, q: &Path) -> Result<Path> {
    if p.target != q.source {
        return Err(Error::NotComposable(format!("{p:?} then {q:?}")));
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    Ok(Path { source: p.source, target: q.target, arrows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Direct,
    Inverse,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Direct => Orientation::Inverse,
            Orientation::Inverse => Orientation::Direct,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: Arrow,
    pub orientation: Orientation,
}

impl Step {
    pub fn direct(arrow: Arrow) -> Self {
        Step { arrow, orientation: Orientation::Direct }
    }

    pub fn inverse(arrow: Arrow) -> Self {
        Step { arrow, orientation: Orientation::Inverse }
    }

    pub fn is_direct(&self) -> bool {
        self.orientation == Orientation::Direct
    }

    pub fn start(&self, q: &Quiver) -> Vertex {
        match self.orientation {
            Orientation::Direct => q.source(self.arrow),
            Orientation::Inverse => q.target(self.arrow),
        }
    }

    pub fn end(&self, q: &Quiver) -> Vertex {
        match self.orientation {
            Orientation::Direct => q.target(self.arrow),
            Orientation::Inverse => q.source(self.arrow),
        }
    }

    pub fn inverted(self) -> Self {
        Step { arrow: self.arrow, orientation: self.orientation.flip() }
    }
}

/// A reduced walk; no steps means the trivial walk at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    start: Vertex,
    end: Vertex,
    steps: Vec<Step>,
}

impl Walk {
    pub fn trivial(v: Vertex) -> Self {
        Walk { start: v, end: v, steps: Vec::new() }
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Vertex at 0-based position `i` (there are `len() + 1` positions).
    pub fn position_vertex(&self, q: &Quiver, i: usize) -> Vertex {
        if i == 0 {
            self.start
        } else {
            self.steps[i - 1].end(q)
        }
    }

    /// Sub-walk covering positions `a..=b` (0-based).
    pub fn sub_walk(&self, q: &Quiver, a: usize, b: usize) -> Walk {
        let start = self.position_vertex(q, a);
        let end = self.position_vertex(q, b);
        Walk { start, end, steps: self.steps[a..b].to_vec() }
    }

    /// The walk as a path, if every step is direct.
    pub fn as_path(&self) -> Option<Path> {
        if self.steps.iter().all(Step::is_direct) {
            Some(Path { source: self.start, target: self.end, arrows: self.steps.iter().map(|s| s.arrow).collect() })
        } else {
            None
        }
    }
}

pub fn invert_walk(w: &Walk) -> Walk {
    Walk {
        start: w.end,
        end: w.start,
        steps: w.steps.iter().rev().map(|s| s.inverted()).collect(),
    }
}

/// Validates a nonempty step sequence as a reduced walk.
pub fn check_reduced(q: &Quiver, steps: &[Step]) -> Result<Walk> {
    let Some(first) = steps.first() else {
        return Err(Error::BrokenChain(0));
    };
    for (i, pair) in steps.windows(2).enumerate() {
        if pair[0].end(q) != pair[1].start(q) {
            return Err(Error::BrokenChain(i + 2));
        }
        if pair[1] == pair[0].inverted() {
            return Err(Error::NotReduced(i + 2));
        }
    }
    Ok(Walk { start: first.start(q), end: steps.last().unwrap().end(q), steps: steps.to_vec() })
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Quiver {
        Quiver::new(
            ["1", "2", "3", "4", "5"],
            [
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("a3", "3", "4"),
                ("a4", "4", "5"),
                ("b", "2", "4"),
                ("g", "1", "5"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn compose_paths_cases() {
        let q = example();
        let a1 = q.parse_path("a1").unwrap();
        let a2 = q.parse_path("a2").unwrap();
        let a3 = q.parse_path("a3").unwrap();
        let p = compose_paths(&a1, &a2).unwrap();
        assert_eq!(q.path_to_string(&p), "a1 a2");
        assert_eq!(q.vertex_label(p.source()), "1");
        assert_eq!(q.vertex_label(p.target()), "3");

        let e1 = Path::trivial(q.vertex("1").unwrap());
        assert_eq!(compose_paths(&e1, &a1).unwrap(), a1);
        assert!(matches!(compose_paths(&a1, &a3), Err(Error::NotComposable(_))));
    }

    #[test]
    fn compose_is_associative() {
        let q = example();
        let a1 = q.parse_path("a1").unwrap();
        let a2 = q.parse_path("a2").unwrap();
        let a3 = q.parse_path("a3").unwrap();
        let left = compose_paths(&compose_paths(&a1, &a2).unwrap(), &a3).unwrap();
        let right = compose_paths(&a1, &compose_paths(&a2, &a3).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn inversion() {
        let q = example();
        let a1 = q.arrow("a1").unwrap();
        let b = q.arrow("b").unwrap();
        let w = check_reduced(&q, &[Step::direct(a1)]).unwrap();
        let inv = invert_walk(&w);
        assert_eq!(inv.steps(), &[Step::inverse(a1)]);

        let w = check_reduced(&q, &[Step::inverse(a1), Step::direct(a1)]);
        assert!(matches!(w, Err(Error::NotReduced(2))));

        let w = check_reduced(&q, &[Step::direct(a1), Step::inverse(b)]);
        assert!(matches!(w, Err(Error::BrokenChain(2))));
        // a1^-1 ends at 1, b starts at 2.
        let w = check_reduced(&q, &[Step::inverse(a1), Step::direct(b)]);
        assert!(matches!(w, Err(Error::BrokenChain(2))));

        let w = check_reduced(&q, &[Step::direct(a1), Step::direct(b)]).unwrap();
        assert_eq!(invert_walk(&invert_walk(&w)), w);

        let t = Walk::trivial(Vertex(3));
        assert_eq!(invert_walk(&t), t);
    }

    #[test]
    fn reduced_walk_cases() {
        let q = example();
        let a1 = q.arrow("a1").unwrap();
        let a3 = q.arrow("a3").unwrap();
        let b = q.arrow("b").unwrap();
        assert!(matches!(check_reduced(&q, &[Step::direct(a1), Step::inverse(a1)]), Err(Error::NotReduced(_))));
        // a1^-1 ends at 1, so it cannot be followed by b which starts at 2.
        assert!(check_reduced(&q, &[Step::inverse(a1), Step::direct(b)]).is_err());
        // a1^-1 b read from vertex 2 in the reversed direction: b^-1 a1^-1 is 4 -> 2 -> 1.
        let w = check_reduced(&q, &[Step::inverse(b), Step::inverse(a1)]).unwrap();
        assert_eq!(q.vertex_label(w.start()), "4");
        assert_eq!(q.vertex_label(w.end()), "1");
        // a1 a3 breaks (a1 ends at 2, a3 starts at 3).
        assert!(matches!(check_reduced(&q, &[Step::direct(a1), Step::direct(a3)]), Err(Error::BrokenChain(_))));
        // The walk a1^-1 g from vertex 2: 2 -> 1 -> 5.
        let g = q.arrow("g").unwrap();
        let w = check_reduced(&q, &[Step::inverse(a1), Step::direct(g)]).unwrap();
        assert_eq!(q.vertex_label(w.start()), "2");
    }

    #[test]
    fn paths_are_reduced_walks() {
        let q = example();
        let p = q.parse_path("a1 a2 a3 a4").unwrap();
        let w = p.as_walk();
        assert!(check_reduced(&q, w.steps()).is_ok());
        assert_eq!(w.as_path().unwrap(), p);
    }

    #[test]
    fn label_validation() {
        assert!(matches!(Quiver::new(Vec::<&str>::new(), Vec::<(&str, &str, &str)>::new()), Err(Error::EmptyQuiver)));
        assert!(matches!(Quiver::new(["1", "1"], Vec::<(&str, &str, &str)>::new()), Err(Error::DuplicateLabel(_))));
        assert!(matches!(Quiver::new(["1"], [("1", "1", "1")]), Err(Error::DuplicateLabel(_))));
        assert!(matches!(Quiver::new(["1"], [("a", "1", "2")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn canonical_order() {
        let q = example();
        let mut paths = vec![
            q.parse_path("b").unwrap(),
            q.parse_path("a1 a2").unwrap(),
            Path::trivial(Vertex(1)),
            q.parse_path("a1").unwrap(),
            Path::trivial(Vertex(0)),
        ];
        paths.sort();
        let shown: Vec<_> = paths.iter().map(|p| q.path_to_string(p)).collect();
        assert_eq!(shown, ["e:1", "e:2", "a1", "b", "a1 a2"]);
    }
}
