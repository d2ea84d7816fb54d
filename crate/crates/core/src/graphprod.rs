//! Graph products of copies of a vertex group over the 1-skeleton of `K`.
//!
//! With vertex group `C2` this is the right-angled Coxeter group, with `Z` the
//! right-angled Artin group, and with the circle `T` the circulation group
//! (restricted here to rational angles). Letters at adjacent vertices commute.
//!
//! A word is reduced by merging each incoming letter with the last letter at
//! the same vertex whenever every letter in between commutes with it. Reduced
//! words representing the same element differ only by swaps of adjacent
//! commuting letters, so ordering a reduced word into Cartier-Foata blocks
//! (peeled from the right, each block sorted by vertex) gives a normal form.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupKind {
    /// Cyclic group of order two; graph products are right-angled Coxeter groups.
    Cyclic2,
    /// Infinite cyclic group; graph products are right-angled Artin groups.
    Integer,
    /// Circle group; graph products are circulation groups.
    Circle,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Cyclic2, GroupKind::Integer, GroupKind::Circle];

    pub fn symbol(self) -> &'static str {
        match self {
            GroupKind::Cyclic2 => "C2",
            GroupKind::Integer => "C",
            GroupKind::Circle => "T",
        }
    }

    pub fn family(self) -> &'static str {
        match self {
            GroupKind::Cyclic2 => "coxeter",
            GroupKind::Integer => "artin",
            GroupKind::Circle => "circulation",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A non-identity element of a vertex group.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexElement {
    /// The generator of `C2`.
    Flip,
    /// A nonzero power of the generator of `Z`.
    Power(i64),
    /// `exp(2πi q)` for a rational `q` in `(0, 1)`, in lowest terms.
    Angle(Ratio<i64>),
}

impl VertexElement {
    /// `None` when `exponent` is zero.
    pub fn power(exponent: i64) -> Option<Self> {
        (exponent != 0).then_some(VertexElement::Power(exponent))
    }

    /// The angle `p/q` reduced modulo 1; `None` for the identity.
    ///
    /// # Panics
    /// If `q` is zero.
    pub fn angle(p: i64, q: i64) -> Option<Self> {
        reduce_angle(Ratio::new(p, q))
    }

    pub fn kind(self) -> GroupKind {
        match self {
            VertexElement::Flip => GroupKind::Cyclic2,
            VertexElement::Power(_) => GroupKind::Integer,
            VertexElement::Angle(_) => GroupKind::Circle,
        }
    }

    /// Product in the vertex group; `None` is the identity.
    ///
    /// # Panics
    /// If the elements come from different vertex groups.
    pub fn combine(self, other: VertexElement) -> Option<VertexElement> {
        match (self, other) {
            (VertexElement::Flip, VertexElement::Flip) => None,
            (VertexElement::Power(a), VertexElement::Power(b)) => VertexElement::power(a + b),
            (VertexElement::Angle(a), VertexElement::Angle(b)) => reduce_angle(a + b),
            (a, b) => panic!("cannot combine {a:?} with {b:?}"),
        }
    }

    pub fn inverse(self) -> VertexElement {
        match self {
            VertexElement::Flip => VertexElement::Flip,
            VertexElement::Power(a) => VertexElement::Power(-a),
            VertexElement::Angle(q) => VertexElement::Angle(Ratio::one() - q),
        }
    }
}

fn reduce_angle(q: Ratio<i64>) -> Option<VertexElement> {
    let r = q - q.floor();
    (!r.is_zero()).then_some(VertexElement::Angle(r))
}

impl fmt::Display for VertexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexElement::Flip => Ok(()),
            VertexElement::Power(e) => write!(f, "^{e}"),
            VertexElement::Angle(q) => write!(f, "@{}/{}", q.numer(), q.denom()),
        }
    }
}

/// A letter `g ∈ G_v` of the free product.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub vertex: usize,
    pub element: VertexElement,
}

impl Letter {
    pub fn new(vertex: usize, element: VertexElement) -> Self {
        Letter { vertex, element }
    }

    pub fn flip(vertex: usize) -> Self {
        Letter::new(vertex, VertexElement::Flip)
    }

    /// # Panics
    /// If `exponent` is zero.
    pub fn power(vertex: usize, exponent: i64) -> Self {
        Letter::new(vertex, VertexElement::power(exponent).expect("identity letter"))
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.vertex, self.element.inverse())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.element.kind() {
            GroupKind::Cyclic2 => 'a',
            GroupKind::Integer => 'v',
            GroupKind::Circle => 't',
        };
        write!(f, "{prefix}{}{}", self.vertex, self.element)
    }
}

/// Parses `a<i>`, `v<i>^<e>` or `t<i>@<p>/<q>`. Identity letters parse to `None`.
fn parse_letter(token: &str) -> Result<Option<Letter>> {
    let bad = || Error::WordSyntax(token.to_string());
    let mut chars = token.chars();
    let prefix = chars.next().ok_or_else(bad)?;
    let body = chars.as_str();
    let split = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
    let vertex: usize = body[..split].parse().map_err(|_| bad())?;
    let rest = &body[split..];
    let element = match prefix {
        'a' if rest.is_empty() => Some(VertexElement::Flip),
        'v' => {
            let exponent = match rest {
                "" => 1,
                _ => rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
            };
            VertexElement::power(exponent)
        }
        't' => {
            let (p, q) = rest.strip_prefix('@').and_then(|r| r.split_once('/')).ok_or_else(bad)?;
            let p: i64 = p.parse().map_err(|_| bad())?;
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            VertexElement::angle(p, q)
        }
        _ => return Err(bad()),
    };
    Ok(element.map(|e| Letter::new(vertex, e)))
}

/// A word in the free product of the vertex groups.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn support(&self) -> VertexSet {
        self.0.iter().fold(VertexSet::EMPTY, |s, l| s.with(l.vertex))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space-separated letters; `1` or an empty string is the identity.
    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in s.split_whitespace().filter(|&t| t != "1") {
            letters.extend(parse_letter(token)?);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The graph product of copies of one vertex group over a commutation graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphProduct {
    kind: GroupKind,
    adjacency: Vec<VertexSet>,
}

impl GraphProduct {
    /// Uses the 1-skeleton of `k` as commutation graph.
    pub fn new(kind: GroupKind, k: &SimplicialComplex) -> Self {
        GraphProduct { kind, adjacency: k.adjacency() }
    }

    pub fn from_edges(kind: GroupKind, m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![VertexSet::EMPTY; m];
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            if i != j {
                adjacency[i - 1] = adjacency[i - 1].with(j);
                adjacency[j - 1] = adjacency[j - 1].with(i);
            }
        }
        Ok(GraphProduct { kind, adjacency })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn commute(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].contains(v)
    }

    /// Checks every letter lives at a vertex of the graph and in the right vertex group.
    pub fn validate(&self, w: &Word) -> Result<()> {
        let m = self.vertex_count();
        for l in &w.0 {
            if l.vertex == 0 || l.vertex > m {
                return Err(Error::VertexOutOfRange { vertex: l.vertex, m });
            }
            if l.element.kind() != self.kind {
                return Err(Error::LetterKind { letter: l.to_string(), expected: self.kind.family().into() });
            }
        }
        Ok(())
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let w: Word = s.parse()?;
        self.validate(&w)?;
        Ok(w)
    }

    /// Fully reduced form, not yet canonically ordered.
    fn reduced_letters(&self, w: &Word) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &x in &w.0 {
            let mut absorbed = false;
            for p in (0..out.len()).rev() {
                let y = out[p];
                if y.vertex == x.vertex {
                    match y.element.combine(x.element) {
                        Some(e) => out[p].element = e,
                        None => {
                            out.remove(p);
                        }
                    }
                    absorbed = true;
                    break;
                }
                if !self.commute(y.vertex, x.vertex) {
                    break;
                }
            }
            if !absorbed {
                out.push(x);
            }
        }
        out
    }

    /// Splits a reduced word into blocks peeled from the right: a letter joins the
    /// final block when every letter to its right sits at an adjacent vertex.
    fn blocks_of(&self, mut rest: Vec<Letter>) -> Vec<Vec<Letter>> {
        let mut blocks = Vec::new();
        while !rest.is_empty() {
            let mut to_right = VertexSet::EMPTY;
            let mut in_block = vec![false; rest.len()];
            for (i, l) in rest.iter().enumerate().rev() {
                in_block[i] = to_right.is_subset(self.adjacency[l.vertex - 1]);
                to_right = to_right.with(l.vertex);
            }
            let mut block = Vec::new();
            let mut prefix = Vec::with_capacity(rest.len());
            for (l, inside) in rest.into_iter().zip(in_block) {
                if inside {
                    block.push(l);
                } else {
                    prefix.push(l);
                }
            }
            block.sort_by_key(|l| l.vertex);
            blocks.push(block);
            rest = prefix;
        }
        blocks.reverse();
        blocks
    }

    /// Canonical normal form.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        self.validate(w)?;
        let blocks = self.blocks_of(self.reduced_letters(w));
        Ok(Word(blocks.into_iter().flatten().collect()))
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    /// Number of syllables of the reduced word.
    pub fn wordlength(&self, w: &Word) -> Result<usize> {
        self.validate(w)?;
        Ok(self.reduced_letters(w).len())
    }

    /// Cartier-Foata blocks of the normal form, leftmost first. Each block
    /// consists of mutually commuting letters at distinct vertices.
    pub fn cartier_foata_blocks(&self, w: &Word) -> Result<Vec<Word>> {
        self.validate(w)?;
        Ok(self.blocks_of(self.reduced_letters(w)).into_iter().map(Word).collect())
    }

    /// Image in the abelianisation `G^m`; `None` marks the identity coordinate.
    pub fn abelianize(&self, w: &Word) -> Result<Vec<Option<VertexElement>>> {
        self.validate(w)?;
        let mut coords: Vec<Option<VertexElement>> = vec![None; self.vertex_count()];
        for l in &w.0 {
            let c = &mut coords[l.vertex - 1];
            *c = match *c {
                None => Some(l.element),
                Some(e) => e.combine(l.element),
            };
        }
        Ok(coords)
    }

    pub fn in_commutator_subgroup(&self, w: &Word) -> Result<bool> {
        Ok(self.abelianize(w)?.iter().all(Option::is_none))
    }
}

/// Whether the subgroup generated by the vertex groups in `w` is abelian, i.e.
/// whether `w` spans a complete subgraph of the 1-skeleton.
pub fn is_abelian_restriction(k: &SimplicialComplex, w: VertexSet) -> Result<bool> {
    if let Some(v) = w.max().filter(|&v| v > k.vertex_count()) {
        return Err(Error::VertexOutOfRange { vertex: v, m: k.vertex_count() });
    }
    Ok(k.spans_clique(w))
}
