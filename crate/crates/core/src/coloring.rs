//! Colorings, the proper / dominator / total dominator validators, the
//! class-structure analysis of a TD-coloring, and TD-set extraction from a
//! TD-coloring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex coloring with contiguous color ids `1..=num_colors`.
///
/// Serialized as `{"colors": [c_0, ..., c_{n-1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringFile", into = "ColoringFile")]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    colors: Vec<usize>,
}

impl TryFrom<ColoringFile> for Coloring {
    type Error = Error;

    fn try_from(file: ColoringFile) -> Result<Self> {
        Ok(Coloring::from_labels(&file.colors))
    }
}

impl From<Coloring> for ColoringFile {
    fn from(c: Coloring) -> Self {
        ColoringFile { colors: c.colors }
    }
}

impl Coloring {
    /// Relabels arbitrary labels onto `1..=k`, preserving the classes and the
    /// relative order of the labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut distinct = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("label present") + 1)
            .collect();
        Coloring {
            colors,
            num_colors: distinct.len(),
        }
    }

    /// Relabels classes by first appearance in vertex order.
    pub fn canonical(&self) -> Self {
        let mut map = vec![0; self.num_colors + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Coloring {
            colors,
            num_colors: next,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Class of color `i` at index `i - 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut classes = vec![VertexSet::new(n); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} entries for a graph on {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Which coloring property to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringKind {
    Proper,
    Dominator,
    Td,
}

/// First reason a coloring fails a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    LengthMismatch { expected: usize, found: usize },
    MonochromaticEdge { vertex: usize, other: usize, color: usize },
    NoDominatedClass { vertex: usize },
}

impl Violation {
    pub fn vertex(&self) -> Option<usize> {
        match *self {
            Violation::LengthMismatch { .. } => None,
            Violation::MonochromaticEdge { vertex, .. } => Some(vertex),
            Violation::NoDominatedClass { vertex } => Some(vertex),
        }
    }
}

/// The first violation in vertex order, or `None` when `c` has the property.
pub fn first_violation(g: &Graph, c: &Coloring, kind: ColoringKind) -> Option<Violation> {
    if c.len() != g.n() {
        return Some(Violation::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    let classes = c.classes();
    for v in g.vertices() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| c.color(w) == c.color(v)) {
            return Some(Violation::MonochromaticEdge {
                vertex: v,
                other: w,
                color: c.color(v),
            });
        }
        let ok = match kind {
            ColoringKind::Proper => true,
            ColoringKind::Td => classes.iter().any(|k| k.is_subset(g.neighborhood(v))),
            ColoringKind::Dominator => {
                let closed = g.closed_neighborhood(v);
                classes.iter().any(|k| k.is_subset(&closed))
            }
        };
        if !ok {
            return Some(Violation::NoDominatedClass { vertex: v });
        }
    }
    None
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && g.edges().all(|(u, v)| c.color(u) != c.color(v))
}

/// Proper, and every vertex is adjacent to all of some color class.
pub fn is_td_coloring(g: &Graph, c: &Coloring) -> bool {
    first_violation(g, c, ColoringKind::Td).is_none()
}

/// Proper, and every vertex is alone in its class or adjacent to all of some
/// other class.
pub fn is_dominator_coloring(g: &Graph, c: &Coloring) -> bool {
    first_violation(g, c, ColoringKind::Dominator).is_none()
}

pub fn satisfies(g: &Graph, c: &Coloring, kind: ColoringKind) -> bool {
    first_violation(g, c, kind).is_none()
}

pub(crate) fn require_td_coloring(g: &Graph, c: &Coloring) -> Result<()> {
    c.check_len(g)?;
    match first_violation(g, c, ColoringKind::Td) {
        None => Ok(()),
        Some(v) => Err(Error::NotTdColoring(format!("{v:?}"))),
    }
}

/// Color ids of the classes contained in `N(v)`.
pub fn dominated_classes(g: &Graph, c: &Coloring, v: usize) -> Vec<usize> {
    c.classes()
        .iter()
        .enumerate()
        .filter(|(_, k)| k.is_subset(g.neighborhood(v)))
        .map(|(i, _)| i + 1)
        .collect()
}

/// Class structure of a TD-coloring. Class ids are the 1-based colors.
///
/// * `c_p`: solitary classes; `c_s`: classes of size at least two that some
///   vertex totally dominates; `c_g`: the remaining classes of size at least
///   two.
/// * `c_0`: a minimum family of classes such that every vertex totally
///   dominates one of them (the exclusive classes); lexicographically first
///   among minimum families.
/// * `a`/`b`: vertices of the `c_p`/`c_g` classes; `d_s`/`d_0`: the lowest
///   vertex of each `c_s`/`c_0` class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringAnalysis {
    pub classes: Vec<VertexSet>,
    #[serde(rename = "C_P")]
    pub c_p: Vec<usize>,
    #[serde(rename = "C_S")]
    pub c_s: Vec<usize>,
    #[serde(rename = "C_G")]
    pub c_g: Vec<usize>,
    #[serde(rename = "C_0")]
    pub c_0: Vec<usize>,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
    #[serde(rename = "D_S")]
    pub d_s: VertexSet,
    #[serde(rename = "D_0")]
    pub d_0: VertexSet,
    pub dominated_by: Vec<Vec<usize>>,
}

impl ColoringAnalysis {
    pub fn class(&self, id: usize) -> &VertexSet {
        &self.classes[id - 1]
    }

    /// Every vertex totally dominates some class other than `id`.
    pub fn is_free(&self, id: usize) -> bool {
        self.dominated_by.iter().all(|ds| ds.iter().any(|&k| k != id))
    }

    pub fn free_classes(&self) -> Vec<usize> {
        (1..=self.classes.len()).filter(|&i| self.is_free(i)).collect()
    }

    /// Vertices that totally dominate class `id`.
    pub fn dominators_of(&self, id: usize) -> Vec<usize> {
        self.dominated_by
            .iter()
            .enumerate()
            .filter(|(_, ds)| ds.contains(&id))
            .map(|(v, _)| v)
            .collect()
    }
}

pub fn analyze(g: &Graph, c: &Coloring) -> Result<ColoringAnalysis> {
    require_td_coloring(g, c)?;
    let n = g.n();
    let classes = c.classes();
    let dominated_by: Vec<Vec<usize>> = g.vertices().map(|v| dominated_classes(g, c, v)).collect();

    let mut dominators = vec![VertexSet::new(n); classes.len()];
    for (v, ds) in dominated_by.iter().enumerate() {
        for &k in ds {
            dominators[k - 1].insert(v);
        }
    }

    let (mut c_p, mut c_s, mut c_g) = (Vec::new(), Vec::new(), Vec::new());
    for (i, class) in classes.iter().enumerate() {
        let id = i + 1;
        if class.len() == 1 {
            c_p.push(id);
        } else if !dominators[i].is_empty() {
            c_s.push(id);
        } else {
            c_g.push(id);
        }
    }

    let c_0 = min_class_cover(n, &dominators);
    let union_of = |ids: &[usize]| {
        let mut s = VertexSet::new(n);
        for &id in ids {
            s = s.union(&classes[id - 1]);
        }
        s
    };
    let lowest_of = |ids: &[usize]| {
        VertexSet::from_iter(
            n,
            ids.iter().map(|&id| classes[id - 1].first().expect("nonempty class")),
        )
    };
    Ok(ColoringAnalysis {
        a: union_of(&c_p),
        b: union_of(&c_g),
        d_s: lowest_of(&c_s),
        d_0: lowest_of(&c_0),
        classes,
        c_p,
        c_s,
        c_g,
        c_0,
        dominated_by,
    })
}

/// Smallest family of class ids whose dominator sets cover every vertex,
/// first in lexicographic order among families of that size.
fn min_class_cover(n: usize, dominators: &[VertexSet]) -> Vec<usize> {
    let k = dominators.len();
    let full = VertexSet::full(n);
    for size in 0..=k {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut covered = VertexSet::new(n);
            for &i in &pick {
                covered = covered.union(&dominators[i]);
            }
            if covered == full {
                return pick.into_iter().map(|i| i + 1).collect();
            }
            if !next_combination(&mut pick, k) {
                break;
            }
        }
    }
    unreachable!("a TD-coloring is covered by all of its classes")
}

/// Advances `pick` to the next `pick.len()`-subset of `0..k` in lex order.
pub(crate) fn next_combination(pick: &mut [usize], k: usize) -> bool {
    let r = pick.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if pick[i] < k - r + i {
            pick[i] += 1;
            for j in i + 1..r {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// One vertex (the lowest id) from every color class of a TD-coloring. The
/// result is a TD-set of size `num_colors`.
pub fn extract_td_set(g: &Graph, c: &Coloring) -> Result<VertexSet> {
    require_td_coloring(g, c)?;
    Ok(VertexSet::from_iter(
        g.n(),
        c.classes().iter().map(|k| k.first().expect("nonempty class")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_td_set, private_structure};

    fn p11_reference() -> (Graph, Coloring) {
        (
            Graph::path(11),
            Coloring::from_labels(&[7, 1, 2, 7, 6, 5, 6, 7, 3, 4, 7]),
        )
    }

    #[test]
    fn labels_are_normalized() {
        let c = Coloring::from_labels(&[10, 3, 10, 7]);
        assert_eq!(c.colors(), &[3, 1, 3, 2]);
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.canonical().colors(), &[1, 2, 1, 3]);
        let parsed: Coloring = serde_json::from_str(r#"{"colors": [2, 5, 2]}"#).unwrap();
        assert_eq!(parsed.colors(), &[1, 2, 1]);
        assert_eq!(serde_json::to_string(&parsed).unwrap(), r#"{"colors":[1,2,1]}"#);
    }

    #[test]
    fn proper_examples() {
        let k2 = Graph::complete(2);
        assert!(is_proper(&k2, &Coloring::from_labels(&[1, 2])));
        assert!(!is_proper(&k2, &Coloring::from_labels(&[1, 1])));
        assert!(!is_proper(&k2, &Coloring::from_labels(&[1])));
        let (p11, h) = p11_reference();
        assert!(is_proper(&p11, &h));
    }

    #[test]
    fn td_examples() {
        let (p11, h) = p11_reference();
        assert!(is_td_coloring(&p11, &h));
        let p4 = Graph::path(4);
        let alt = Coloring::from_labels(&[1, 2, 1, 2]);
        assert!(!is_td_coloring(&p4, &alt));
        assert_eq!(
            first_violation(&p4, &alt, ColoringKind::Td),
            Some(Violation::NoDominatedClass { vertex: 0 })
        );
        assert!(is_td_coloring(&Graph::complete(2), &Coloring::from_labels(&[1, 2])));
    }

    #[test]
    fn dominator_examples() {
        let star = Graph::star(3);
        assert!(is_dominator_coloring(&star, &Coloring::from_labels(&[1, 2, 2, 2])));
        assert!(is_dominator_coloring(
            &Graph::complete(2),
            &Coloring::from_labels(&[1, 2])
        ));
        // P_4 alternating: v_1 sees {v_1, v_2}; class 1 = {v_1, v_3} and
        // class 2 = {v_2, v_4} both escape N[v_1].
        assert!(!is_dominator_coloring(
            &Graph::path(4),
            &Coloring::from_labels(&[1, 2, 1, 2])
        ));
    }

    #[test]
    fn analyze_p11_reference() {
        let (p11, h) = p11_reference();
        let a = analyze(&p11, &h).unwrap();
        assert_eq!(a.c_p, vec![1, 2, 3, 4, 5]);
        assert_eq!(a.c_s, vec![6]);
        assert_eq!(a.c_g, vec![7]);
        assert_eq!(a.c_0, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(a.a.to_vec(), vec![1, 2, 5, 8, 9]);
        assert_eq!(a.b.to_vec(), vec![0, 3, 7, 10]);
        assert_eq!(a.d_s.to_vec(), vec![4]);
        assert_eq!(a.d_0.to_vec(), vec![1, 2, 4, 5, 8, 9]);
        let ps = private_structure(&p11, &a.d_0).unwrap();
        assert_eq!(ps.d_i.to_vec(), vec![2, 4]);
        assert_eq!(ps.d_r.to_vec(), vec![1, 5, 8, 9]);
        // The leaf class is free; every other class is somebody's only target.
        assert_eq!(a.free_classes(), vec![7]);
    }

    #[test]
    fn analyze_small() {
        let a = analyze(&Graph::complete(2), &Coloring::from_labels(&[1, 2])).unwrap();
        assert_eq!(a.c_p, vec![1, 2]);
        assert!(a.c_s.is_empty() && a.c_g.is_empty());
        assert_eq!(a.c_0, vec![1, 2]);

        let c4 = Graph::complete_bipartite(2, 2);
        let a = analyze(&c4, &Coloring::from_labels(&[1, 1, 2, 2])).unwrap();
        assert_eq!(a.c_s, vec![1, 2]);
        assert!(a.c_p.is_empty() && a.c_g.is_empty());
        assert_eq!(a.c_0.len(), 2);
    }

    #[test]
    fn analyze_rejects_non_td() {
        assert!(matches!(
            analyze(&Graph::path(4), &Coloring::from_labels(&[1, 2, 1, 2])),
            Err(Error::NotTdColoring(_))
        ));
    }

    #[test]
    fn extraction() {
        let (p11, h) = p11_reference();
        let d = extract_td_set(&p11, &h).unwrap();
        assert_eq!(d.len(), 7);
        assert!(is_td_set(&p11, &d));

        let k2 = Graph::complete(2);
        assert_eq!(
            extract_td_set(&k2, &Coloring::from_labels(&[1, 2])).unwrap().to_vec(),
            vec![0, 1]
        );

        let k22 = Graph::complete_bipartite(2, 2);
        let d = extract_td_set(&k22, &Coloring::from_labels(&[1, 1, 2, 2])).unwrap();
        assert_eq!(d.to_vec(), vec![0, 2]);
        assert!(is_td_set(&k22, &d));

        assert!(extract_td_set(&Graph::path(4), &Coloring::from_labels(&[1, 2, 1, 2])).is_err());
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut pick = vec![0, 1];
        let mut seen = vec![pick.clone()];
        while next_combination(&mut pick, 4) {
            seen.push(pick.clone());
        }
        assert_eq!(seen, vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }
}
