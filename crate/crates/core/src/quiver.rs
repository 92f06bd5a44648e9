//! Bound quivers: vertices, arrows, and relations between parallel paths.
//!
//! Paths are stored in traversal order (first arrow first) and written
//! left-to-right in diagram order, so the word `a*b` is the path that
//! follows `a` and then `b`. The algebra built from a quiver composes the
//! other way round (like functions); the conversion happens in one place,
//! in the multiplication table construction.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A rational linear combination of parallel paths; each path is a list of
/// arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rat, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(arrows: Vec<usize>) -> Self {
        Relation {
            terms: vec![(Rat::one(), arrows)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// The cutoff `L`: the algebra is spanned by residues of paths of
    /// length `< L`, and the relation ideal must contain every path of
    /// length `>= L`.
    pub max_path_length: usize,
}

/// A path in traversal order. Trivial paths have an empty arrow list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub len: usize,
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            len: 0,
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }
}

/// `first` followed by `then`, or `None` when the endpoints do not meet.
pub fn concat(first: &Path, then: &Path) -> Option<Path> {
    if first.target != then.source {
        return None;
    }
    let mut arrows = first.arrows.clone();
    arrows.extend_from_slice(&then.arrows);
    Some(Path {
        len: first.len + then.len,
        arrows,
        source: first.source,
        target: then.target,
    })
}

impl BoundQuiver {
    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::MalformedQuiver {
                detail: String::from("quiver has no vertices"),
            });
        }
        if self.max_path_length == 0 {
            return Err(Error::MalformedQuiver {
                detail: String::from("max_path_length must be at least 1"),
            });
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::MalformedQuiver {
                    detail: format!("duplicate vertex `{v}`"),
                });
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::MalformedQuiver {
                    detail: format!("arrow `{}` has an out-of-range endpoint", a.name),
                });
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::MalformedQuiver {
                    detail: format!("duplicate arrow `{}`", a.name),
                });
            }
        }
        for rel in &self.relations {
            if rel.terms.is_empty() {
                return Err(Error::MalformedQuiver {
                    detail: String::from("empty relation"),
                });
            }
            let mut endpoints = None;
            for (coeff, word) in &rel.terms {
                if coeff.is_zero() {
                    return Err(Error::MalformedQuiver {
                        detail: String::from("relation term with zero coefficient"),
                    });
                }
                if word.len() < 2 {
                    return Err(Error::MalformedQuiver {
                        detail: String::from("relation terms must be paths of length at least 2"),
                    });
                }
                let path = self.word_to_path(word)?;
                match endpoints {
                    None => endpoints = Some((path.source, path.target)),
                    Some(ep) => {
                        if ep != (path.source, path.target) {
                            return Err(Error::MalformedQuiver {
                                detail: format!(
                                    "relation mixes non-parallel paths ({} -> {} vs {} -> {})",
                                    self.vertices[ep.0],
                                    self.vertices[ep.1],
                                    self.vertices[path.source],
                                    self.vertices[path.target]
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Assembles a path from arrow indices, checking composability.
    pub fn word_to_path(&self, word: &[usize]) -> Result<Path> {
        let mut path: Option<Path> = None;
        for &a in word {
            let arrow = self.arrows.get(a).ok_or_else(|| Error::MalformedQuiver {
                detail: format!("arrow index {a} out of range"),
            })?;
            let step = Path {
                len: 1,
                arrows: vec![a],
                source: arrow.source,
                target: arrow.target,
            };
            path = Some(match path {
                None => step,
                Some(p) => concat(&p, &step).ok_or_else(|| Error::MalformedQuiver {
                    detail: format!("non-composable word at arrow `{}`", arrow.name),
                })?,
            });
        }
        path.ok_or_else(|| Error::MalformedQuiver {
            detail: String::from("empty path word"),
        })
    }

    /// All paths of length `0..=max_len`, ordered by length then by the
    /// arrow word; trivial paths come first in vertex order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut by_level: Vec<Vec<Path>> =
            vec![(0..self.vertices.len()).map(Path::trivial).collect()];
        for level in 1..=max_len {
            let mut next = Vec::new();
            for p in &by_level[level - 1] {
                for (ai, arrow) in self.arrows.iter().enumerate() {
                    if arrow.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            len: level,
                            arrows,
                            source: p.source,
                            target: arrow.target,
                        });
                    }
                }
            }
            next.sort();
            by_level.push(next);
        }
        by_level.into_iter().flatten().collect()
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            self.vertices[p.source].clone()
        } else {
            let words: Vec<&str> = p
                .arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect();
            words.join("*")
        }
    }
}

/// The cyclic Nakayama quiver `N(n, l)`: `n` vertices in a cycle, radical
/// vanishing in degree `l` (all paths of length `l` are relations).
pub fn nakayama_quiver(n: usize, loewy_length: usize) -> BoundQuiver {
    assert!(n >= 1 && loewy_length >= 2);
    let vertices = (1..=n).map(|i| format!("{i}")).collect();
    let arrows = (0..n)
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: i,
            target: (i + 1) % n,
        })
        .collect();
    let relations = (0..n)
        .map(|i| Relation::monomial((0..loewy_length).map(|k| (i + k) % n).collect()))
        .collect();
    BoundQuiver {
        vertices,
        arrows,
        relations,
        max_path_length: loewy_length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_names() {
        let q = nakayama_quiver(3, 2);
        q.validate().unwrap();
        let paths = q.enumerate_paths(2);
        // 3 vertices, 3 arrows, 3 composable length-2 words
        assert_eq!(paths.len(), 9);
        assert_eq!(q.path_name(&paths[0]), "1");
        assert_eq!(q.path_name(&paths[3]), "a1");
        assert_eq!(q.path_name(&paths[6]), "a1*a2");
        assert_eq!(paths[6].source, 0);
        assert_eq!(paths[6].target, 2);
    }

    #[test]
    fn rejects_non_parallel_relation() {
        let mut q = nakayama_quiver(3, 2);
        q.relations = vec![Relation {
            terms: vec![(Rat::one(), vec![0, 1]), (Rat::one(), vec![1, 2])],
        }];
        assert!(matches!(q.validate(), Err(Error::MalformedQuiver { .. })));
    }

    #[test]
    fn rejects_short_relation() {
        let mut q = nakayama_quiver(3, 2);
        q.relations = vec![Relation::monomial(vec![0])];
        assert!(q.validate().is_err());
    }
}
