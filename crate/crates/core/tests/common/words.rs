//! Word-problem oracle that never looks at the library's normal form.
//!
//! Two moves rewrite a word: swapping adjacent letters on distinct adjacent
//! vertices, and merging adjacent letters on the same vertex (dropping the pair
//! when the product is trivial). Neither move lengthens a word, so the closure
//! of a word under them is finite. Its shortest members are the reduced
//! spellings of the element, and the least of those names the element.

use std::collections::{BTreeSet, HashSet, VecDeque};

use flagtop::graphprod::{GraphProduct, GroupKind, Letter, Word};

/// `(vertex, exponent)`; Coxeter letters always carry exponent 1.
pub type RawWord = Vec<(usize, i64)>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Coxeter,
    Artin,
}

pub struct Graph {
    pub m: usize,
    adjacent: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacent = vec![vec![false; m + 1]; m + 1];
        for &(i, j) in edges {
            adjacent[i][j] = true;
            adjacent[j][i] = true;
        }
        Graph { m, adjacent }
    }

    pub fn complete(m: usize) -> Self {
        let edges: Vec<_> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        Graph::new(m, &edges)
    }

    /// Every labelled graph on `m` vertices.
    pub fn all(m: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
                Graph::new(m, &edges)
            })
            .collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.m).flat_map(|i| (i + 1..=self.m).map(move |j| (i, j))).filter(|&(i, j)| self.adjacent[i][j]).collect()
    }

    pub fn product(&self, family: Family) -> GraphProduct {
        let kind = match family {
            Family::Coxeter => GroupKind::Cyclic2,
            Family::Artin => GroupKind::Integer,
        };
        GraphProduct::from_edges(kind, self.m, &self.edges()).unwrap()
    }

    fn successors(&self, w: &RawWord, family: Family) -> Vec<RawWord> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a.0 == b.0 {
                let e = match family {
                    Family::Coxeter => 0,
                    Family::Artin => a.1 + b.1,
                };
                let mut next = w[..i].to_vec();
                if e != 0 {
                    next.push((a.0, e));
                }
                next.extend_from_slice(&w[i + 2..]);
                out.push(next);
            } else if self.adjacent[a.0][b.0] {
                let mut next = w.clone();
                next.swap(i, i + 1);
                out.push(next);
            }
        }
        out
    }

    /// The least shortest word reachable from `w`.
    pub fn key(&self, w: &RawWord, family: Family) -> RawWord {
        let mut seen: HashSet<RawWord> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(u) = queue.pop_front() {
            for v in self.successors(&u, family) {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        let shortest = seen.iter().map(Vec::len).min().unwrap();
        seen.into_iter().filter(|u| u.len() == shortest).collect::<BTreeSet<_>>().into_iter().next().unwrap()
    }
}

pub fn to_word(w: &RawWord, family: Family) -> Word {
    Word::new(
        w.iter()
            .map(|&(v, e)| match family {
                Family::Coxeter => Letter::flip(v),
                Family::Artin => Letter::power(v, e),
            })
            .collect(),
    )
}

/// All words of length at most `max_len` over the generators `v^±1`
/// (or `a_v` for Coxeter).
pub fn all_words(m: usize, max_len: usize, family: Family) -> Vec<RawWord> {
    let letters: Vec<(usize, i64)> = match family {
        Family::Coxeter => (1..=m).map(|v| (v, 1)).collect(),
        Family::Artin => (1..=m).flat_map(|v| [(v, 1), (v, -1)]).collect(),
    };
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in &letters {
                let mut u: RawWord = w.clone();
                u.push(l);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
