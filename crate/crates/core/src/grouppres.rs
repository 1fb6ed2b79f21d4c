//! Finite group presentations and their compilation into planar Lefschetz
//! fibrations.
//!
//! A presentation with no inverse letters, in which every generator occurs at
//! most once across all long relators and no length-2 relator repeats a
//! generator, can be drawn on the disk with one hole per generator: each
//! relator becomes the curve enclosing the holes of its letters. The
//! reduction here rewrites any presentation into that shape with Tietze
//! moves that keep the deficiency fixed.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::fillhomology::{homology_report, HomologyReport};
use crate::lattice::{self, Matrix};
use crate::page::{Curve, Factorization, Page};
use crate::{Error, Int, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }
}

pub type Word = Vec<Letter>;

/// Length at which a relator counts as long.
pub const LONG_WORD: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (j, w) in relators.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::Invalid(format!("relator {j} is empty")));
            }
            if let Some(l) = w.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::Invalid(format!(
                    "relator {j} uses generator {} of {}",
                    l.generator,
                    generators.len()
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::Invalid(format!("duplicate generator {g:?}")));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn word_text(&self, w: &[Letter]) -> String {
        w.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Exponent-sum matrix, one column per relator. Its cokernel is the
    /// abelianization.
    pub fn exponent_matrix(&self) -> Matrix<Int> {
        let mut m = Matrix::zeros(self.generators.len(), self.relators.len());
        for (j, w) in self.relators.iter().enumerate() {
            for l in w {
                let delta = if l.inverse { -Int::one() } else { Int::one() };
                let v = m.get(l.generator, j) + delta;
                m.set(l.generator, j, v);
            }
        }
        m
    }

    /// Invariant factors of the abelianization; zeros stand for `Z` summands.
    pub fn abelianization(&self) -> Vec<Int> {
        lattice::cokernel_invariants(&self.exponent_matrix())
    }

    fn fresh_name(&self, next: &mut usize) -> String {
        loop {
            *next += 1;
            let name = format!("_g{next}");
            if !self.generators.contains(&name) {
                return name;
            }
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.relators.iter().map(|w| self.word_text(w)).collect();
        write!(f, "< {} | {} >", self.generators.join(" "), words.join(", "))
    }
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Presentation", 3)?;
        st.serialize_field("generators", &self.generators)?;
        let words: Vec<String> = self.relators.iter().map(|w| self.word_text(w)).collect();
        st.serialize_field("relators", &words)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl std::str::FromStr for Presentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_presentation(s)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Whitespace-separated tokens of `text[start..end]` with their offsets.
fn tokens(text: &str, start: usize, end: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut tok_start = None;
    for (i, c) in text[start..end].char_indices() {
        match (c.is_whitespace(), tok_start) {
            (true, Some(s)) => {
                out.push((start + s, &text[start + s..start + i]));
                tok_start = None;
            }
            (false, None) => tok_start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = tok_start {
        out.push((start + s, &text[start + s..end]));
    }
    out
}

/// Parse `< g1 g2 ... | w1, w2, ... >`. Words are whitespace-separated
/// letters `gen` or `gen^-1`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let err = |at: usize, msg: String| ParseError::at_offset(text, at, msg);
    let open = text.find(|c: char| !c.is_whitespace()).unwrap_or(text.len());
    if !text[open..].starts_with('<') {
        return Err(err(open, "expected `<` to open the presentation".into()));
    }
    let bar = text[open..]
        .find('|')
        .map(|i| open + i)
        .ok_or_else(|| err(text.len(), "expected `|` after the generators".into()))?;
    let close = text[bar..]
        .find('>')
        .map(|i| bar + i)
        .ok_or_else(|| err(text.len(), "expected `>` to close the presentation".into()))?;
    if let Some(i) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(err(close + 1 + i, "unexpected input after `>`".into()));
    }

    let mut generators: Vec<String> = Vec::new();
    let mut index = HashMap::new();
    for (at, tok) in tokens(text, open + 1, bar) {
        if !is_identifier(tok) {
            return Err(err(at, format!("malformed generator name `{tok}`")));
        }
        if index.insert(tok.to_string(), generators.len()).is_some() {
            return Err(err(at, format!("duplicate generator `{tok}`")));
        }
        generators.push(tok.to_string());
    }
    if generators.is_empty() {
        return Err(err(open + 1, "empty generator list".into()));
    }

    let mut relators = Vec::new();
    if !text[bar + 1..close].trim().is_empty() {
        let mut start = bar + 1;
        for piece in text[bar + 1..close].split(',') {
            let end = start + piece.len();
            let toks = tokens(text, start, end);
            if toks.is_empty() {
                return Err(err(
                    start,
                    "empty relator; trivial relators do not change the group, delete it".into(),
                ));
            }
            let mut word = Vec::with_capacity(toks.len());
            for (at, tok) in toks {
                let (name, inverse) = match tok.split_once('^') {
                    None => (tok, false),
                    Some((name, "-1")) => (name, true),
                    Some(_) => {
                        return Err(err(at, format!("malformed token `{tok}`; expected `gen` or `gen^-1`")))
                    }
                };
                if !is_identifier(name) {
                    return Err(err(at, format!("malformed token `{tok}`")));
                }
                let generator = *index
                    .get(name)
                    .ok_or_else(|| err(at, format!("unknown generator `{name}`")))?;
                word.push(Letter { generator, inverse });
            }
            relators.push(word);
            start = end + 1;
        }
    }
    Ok(Presentation { generators, relators })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadnessReport {
    pub b_minus: u64,
    /// Occurrences of each generator (positive letters) in long relators.
    pub b_plus_per_generator: Vec<u64>,
    pub b_plus: u64,
    pub total: u64,
    /// Length-2 relators of the form `x x`.
    pub short_repeats: u64,
    /// `total + short_repeats`; zero exactly when the presentation can be
    /// realized by curves.
    pub implementation_total: u64,
}

pub fn badness(p: &Presentation) -> BadnessReport {
    let mut b_minus = 0;
    let mut per = vec![0u64; p.generator_count()];
    let mut short_repeats = 0;
    for w in &p.relators {
        b_minus += w.iter().filter(|l| l.inverse).count() as u64;
        if w.len() >= LONG_WORD {
            for l in w.iter().filter(|l| !l.inverse) {
                per[l.generator] += 1;
            }
        } else if w.len() == 2 && w[0] == w[1] && !w[0].inverse {
            short_repeats += 1;
        }
    }
    let b_plus = per.iter().map(|&c| c.saturating_sub(1)).sum();
    BadnessReport {
        b_minus,
        b_plus_per_generator: per,
        b_plus,
        total: b_minus + b_plus,
        short_repeats,
        implementation_total: b_minus + b_plus + short_repeats,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionCase {
    /// `a^-1` replaced by a new `g` with relator `a g`.
    InverseRemoval,
    /// A repeated `a` replaced by `g2` with relators `a g1`, `g1 g2`.
    DuplicateRemoval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub case: ReductionCase,
    pub relator: usize,
    pub position: usize,
    /// Generator whose occurrence was replaced.
    pub generator: String,
    /// Relator text before the replacement.
    pub word: String,
    pub new_generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    #[serde(rename = "final")]
    pub result: Presentation,
}

/// First offending letter: any inverse, a repeat within long relators (the
/// first occurrence of each generator is free), or the second letter of
/// `x x`.
fn first_offense(p: &Presentation) -> Option<(usize, usize, ReductionCase)> {
    let mut seen = vec![false; p.generator_count()];
    for (j, w) in p.relators.iter().enumerate() {
        for (i, l) in w.iter().enumerate() {
            if l.inverse {
                return Some((j, i, ReductionCase::InverseRemoval));
            }
            if w.len() >= LONG_WORD {
                if std::mem::replace(&mut seen[l.generator], true) {
                    return Some((j, i, ReductionCase::DuplicateRemoval));
                }
            } else if w.len() == 2 && i == 1 && w[0] == *l {
                return Some((j, i, ReductionCase::DuplicateRemoval));
            }
        }
    }
    None
}

/// One Tietze rewrite lowering the implementation badness by one, or `None`
/// if it is already zero. New generators are named `_g<k>` with `k` counted
/// from `next_name`.
pub fn reduce_step(p: &Presentation, next_name: &mut usize) -> Option<(Presentation, ReductionStep)> {
    let (j, i, case) = first_offense(p)?;
    let mut q = p.clone();
    let a = p.relators[j][i].generator;
    let mut new_generators = Vec::new();
    let mut add = |q: &mut Presentation| {
        let name = q.fresh_name(next_name);
        q.generators.push(name.clone());
        new_generators.push(name);
        q.generators.len() - 1
    };
    match case {
        ReductionCase::InverseRemoval => {
            let g = add(&mut q);
            q.relators.push(vec![Letter::pos(a), Letter::pos(g)]);
            q.relators[j][i] = Letter::pos(g);
        }
        ReductionCase::DuplicateRemoval => {
            let g1 = add(&mut q);
            let g2 = add(&mut q);
            q.relators.push(vec![Letter::pos(a), Letter::pos(g1)]);
            q.relators.push(vec![Letter::pos(g1), Letter::pos(g2)]);
            q.relators[j][i] = Letter::pos(g2);
        }
    }
    let step = ReductionStep {
        case,
        relator: j,
        position: i,
        generator: p.generators[a].clone(),
        word: p.word_text(&p.relators[j]),
        new_generators,
    };
    Some((q, step))
}

/// Rewrite until the implementation badness is zero. Takes exactly
/// `badness(p).implementation_total` steps.
pub fn reduce_presentation(p: &Presentation) -> ReductionTrace {
    let mut current = p.clone();
    let mut steps = Vec::new();
    let mut next_name = 0;
    while let Some((q, step)) = reduce_step(&current, &mut next_name) {
        current = q;
        steps.push(step);
    }
    ReductionTrace { steps, result: current }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    /// `hole_order[h]` is the generator around hole `h`.
    pub hole_order: Vec<usize>,
    #[serde(serialize_with = "serialize_factorization")]
    pub factorization: Factorization,
}

fn serialize_factorization<S: serde::Serializer>(f: &Factorization, s: S) -> std::result::Result<S::Ok, S::Error> {
    f.to_json().serialize(s)
}

/// True if the cyclic sequence `s` (distinct entries) is increasing up to
/// rotation with respect to `rank`.
fn cyclically_increasing(s: &[usize], rank: &[usize]) -> bool {
    let descents = (0..s.len())
        .filter(|&i| rank[s[i]] > rank[s[(i + 1) % s.len()]])
        .count();
    descents <= 1
}

/// Place one generator per hole and turn each relator into the curve around
/// its holes. The given generator order is kept when every long relator
/// already runs cyclically in it; otherwise the long relators are laid out
/// one after another, followed by the remaining generators.
pub fn order_and_realize(p: &Presentation) -> Result<Realization> {
    let b = badness(p).implementation_total;
    if b != 0 {
        return Err(Error::NonzeroBadness(b));
    }
    let m = p.generator_count();
    let long: Vec<Vec<usize>> = p
        .relators
        .iter()
        .filter(|w| w.len() >= LONG_WORD)
        .map(|w| w.iter().map(|l| l.generator).collect())
        .collect();
    let identity: Vec<usize> = (0..m).collect();
    let hole_order = if long.iter().all(|s| cyclically_increasing(s, &identity)) {
        identity
    } else {
        let mut order: Vec<usize> = long.concat();
        let mut used = vec![false; m];
        for &g in &order {
            used[g] = true;
        }
        order.extend((0..m).filter(|&g| !used[g]));
        order
    };
    let mut hole_of = vec![0; m];
    for (h, &g) in hole_order.iter().enumerate() {
        hole_of[g] = h;
    }
    let cycles = p
        .relators
        .iter()
        .map(|w| Curve::enclosing(m, &w.iter().map(|l| hole_of[l.generator]).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Realization {
        hole_order,
        factorization: Factorization::new(Page { holes: m }, cycles)?,
    })
}

/// Checks the realized presentation literally: positive letters, no
/// generator twice in one relator, and long relators cyclically increasing
/// in the hole order.
pub fn satisfies_prc(p: &Presentation, hole_order: &[usize]) -> bool {
    let mut rank = vec![0; p.generator_count()];
    for (h, &g) in hole_order.iter().enumerate() {
        rank[g] = h;
    }
    p.relators.iter().all(|w| {
        let gens: Vec<usize> = w.iter().map(|l| l.generator).collect();
        let mut sorted = gens.clone();
        sorted.sort_unstable();
        sorted.dedup();
        w.iter().all(|l| !l.inverse) && sorted.len() == gens.len() && cyclically_increasing(&gens, &rank)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    /// `1 - n` for the final page with `n` holes.
    pub page_euler: i64,
    /// `1 - m - 2 b_+ - b_-` from the input presentation.
    pub stated_bound: i64,
    pub stated_bound_holds: bool,
    /// Same bound with `b_+` raised by the `x x` relators.
    pub adjusted_bound: i64,
    pub adjusted_bound_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompileBundle {
    pub input: Presentation,
    pub badness: BadnessReport,
    pub trace: ReductionTrace,
    pub hole_order: Vec<usize>,
    #[serde(serialize_with = "serialize_factorization")]
    pub factorization: Factorization,
    pub homology: HomologyReport,
    pub integral_homology_ball: bool,
    #[serde(serialize_with = "crate::serde_int::vec")]
    pub abelianization: Vec<Int>,
    pub euler: EulerCheck,
}

/// Reduce, realize, and compute the homology of the resulting filling.
pub fn compile(p: &Presentation) -> CompileBundle {
    let bad = badness(p);
    let trace = reduce_presentation(p);
    let realized = order_and_realize(&trace.result).expect("reduction ends at badness zero");
    let homology = homology_report(&realized.factorization);
    let page_euler = 1 - realized.factorization.holes() as i64;
    let m = p.generator_count() as i64;
    let stated_bound = 1 - m - 2 * bad.b_plus as i64 - bad.b_minus as i64;
    let adjusted_bound = stated_bound - 2 * bad.short_repeats as i64;
    CompileBundle {
        input: p.clone(),
        badness: bad,
        integral_homology_ball: homology.h1.is_empty() && homology.h2_rank == 0,
        abelianization: p.abelianization(),
        hole_order: realized.hole_order,
        factorization: realized.factorization,
        homology,
        trace,
        euler: EulerCheck {
            page_euler,
            stated_bound,
            stated_bound_holds: page_euler >= stated_bound,
            adjusted_bound,
            adjusted_bound_holds: page_euler >= adjusted_bound,
        },
    }
}

/// Trivial abelianization.
pub fn is_perfect(p: &Presentation) -> bool {
    p.abelianization().is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Position;
    use num_traits::Zero;

    fn parse(s: &str) -> Presentation {
        parse_presentation(s).unwrap()
    }

    const EXAMPLE: &str = "< a b c d | b a d, c a b, a b^-1 a c^-1 >";
    const ICOSAHEDRAL: &str = "< s t | s s s t^-1 s^-1 t^-1 s^-1, t t t t t t^-1 s^-1 t^-1 s^-1 >";

    #[test]
    fn parse_examples() {
        let p = parse(EXAMPLE);
        assert_eq!(p.generators(), ["a", "b", "c", "d"]);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2], vec![Letter::pos(0), Letter::neg(1), Letter::pos(0), Letter::neg(2)]);
        assert_eq!(p.to_string(), EXAMPLE);
        assert_eq!(parse(&p.to_string()), p);

        let x = parse("< x | x >");
        assert_eq!((x.generator_count(), x.relators().len()), (1, 1));
        let free = parse("< x | >");
        assert!(free.relators().is_empty());
        assert_eq!(free.deficiency(), 1);
    }

    #[test]
    fn parse_errors_are_positioned() {
        let e = parse_presentation("< x | y >").unwrap_err();
        assert_eq!(e.position, Position::Text { line: 1, column: 7 });
        assert!(e.message.contains("unknown generator"));
        let e = parse_presentation("< x | x^2 >").unwrap_err();
        assert!(e.message.contains("malformed token"));
        let e = parse_presentation("<  | x >").unwrap_err();
        assert!(e.message.contains("empty generator list"));
        let e = parse_presentation("< x | x,, x >").unwrap_err();
        assert!(e.message.contains("empty relator"));
        assert_eq!(e.position, Position::Text { line: 1, column: 9 });
        let e = parse_presentation("< x\n  | x y >").unwrap_err();
        assert_eq!(e.position, Position::Text { line: 2, column: 7 });
        assert!(parse_presentation("x | x >").is_err());
        assert!(parse_presentation("< x | x").is_err());
        assert!(parse_presentation("< x x | x >").is_err());
        assert!(parse_presentation("< x | x > y").is_err());
        assert!(parse_presentation("< 1x | x >").is_err());
    }

    #[test]
    fn example_badness() {
        let b = badness(&parse(EXAMPLE));
        assert_eq!(b.b_minus, 2);
        assert_eq!(b.b_plus_per_generator, vec![4, 2, 1, 1]);
        assert_eq!(b.b_plus, 4);
        assert_eq!(b.total, 6);
        assert_eq!(b.implementation_total, 6);
    }

    #[test]
    fn short_repeats_count() {
        let b = badness(&parse("< x | x x >"));
        assert_eq!((b.total, b.short_repeats, b.implementation_total), (0, 1, 1));
        let b = badness(&parse("< x y | x y, y, x^-1 x^-1 >"));
        assert_eq!((b.b_minus, b.short_repeats), (2, 0));
    }

    #[test]
    fn single_inverse_reduction() {
        let t = reduce_presentation(&parse("< a | a^-1 >"));
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].case, ReductionCase::InverseRemoval);
        assert_eq!(t.result.to_string(), "< a _g1 | _g1, a _g1 >");
        let r = order_and_realize(&t.result).unwrap();
        let bits: Vec<Vec<u8>> = r.factorization.cycles().iter().map(Curve::bits).collect();
        assert_eq!(bits, vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn duplicate_reduction() {
        let t = reduce_presentation(&parse("< a b | a b a >"));
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].case, ReductionCase::DuplicateRemoval);
        assert_eq!((t.steps[0].relator, t.steps[0].position), (0, 2));
        assert_eq!(t.result.to_string(), "< a b _g1 _g2 | a b _g2, a _g1, _g1 _g2 >");
        let t = reduce_presentation(&parse("< x | x x >"));
        assert_eq!(t.result.to_string(), "< x _g1 _g2 | x _g2, x _g1, _g1 _g2 >");
    }

    #[test]
    fn fresh_names_avoid_user_names() {
        let t = reduce_presentation(&parse("< _g1 | _g1^-1 >"));
        assert_eq!(t.result.generators(), ["_g1", "_g2"]);
    }

    #[test]
    fn example_reduction_takes_six_steps() {
        let p = parse(EXAMPLE);
        let t = reduce_presentation(&p);
        assert_eq!(t.steps.len(), 6);
        assert_eq!(badness(&t.result).implementation_total, 0);
        assert_eq!(t.result.deficiency(), p.deficiency());
        assert_eq!(t.result.abelianization(), p.abelianization());
        let r = order_and_realize(&t.result).unwrap();
        assert!(satisfies_prc(&t.result, &r.hole_order));
    }

    #[test]
    fn badness_zero_is_untouched() {
        let p = parse("< a b c | a b c, a b >");
        assert!(reduce_presentation(&p).steps.is_empty());
    }

    #[test]
    fn realization_keeps_compatible_order() {
        let p = parse("< y1 y2 y3 y4 y5 | y3 y5 y1 >");
        let r = order_and_realize(&p).unwrap();
        assert_eq!(r.hole_order, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.factorization.cycles()[0].bits(), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn realization_reorders_when_needed() {
        let p = parse("< a b c d | c b a, d >");
        let r = order_and_realize(&p).unwrap();
        assert_eq!(r.hole_order, vec![2, 1, 0, 3]);
        assert!(satisfies_prc(&p, &r.hole_order));
        assert_eq!(r.factorization.cycles()[1].bits(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn realization_edge_cases() {
        let r = order_and_realize(&parse("< a b | >")).unwrap();
        assert!(r.factorization.is_empty());
        assert_eq!(r.factorization.holes(), 2);
        assert_eq!(
            order_and_realize(&parse("< a | a^-1 >")),
            Err(Error::NonzeroBadness(1))
        );
    }

    #[test]
    fn abelianization_examples() {
        assert!(parse("< x | x >").abelianization().is_empty());
        assert_eq!(parse("< x | >").abelianization(), vec![Int::zero()]);
        assert_eq!(parse("< x | x x x >").abelianization(), vec![Int::from(3)]);
        // exponent sums (1, -2) and (-2, 3): determinant -1
        let ico = parse(ICOSAHEDRAL);
        assert_eq!(ico.exponent_matrix(), Matrix::<Int>::from_i64(&[[1, -2], [-2, 3]]));
        assert!(ico.abelianization().is_empty());
        assert!(is_perfect(&ico));
    }

    #[test]
    fn compile_trivial_group() {
        let c = compile(&parse("< x | x >"));
        assert!(c.integral_homology_ball);
        assert!(c.trace.steps.is_empty());
        assert!(c.euler.stated_bound_holds);
    }

    #[test]
    fn compile_free_group() {
        let c = compile(&parse("< x | >"));
        assert_eq!(c.homology.h1, vec![Int::zero()]);
        assert_eq!(c.homology.h2_rank, 0);
    }

    #[test]
    fn compile_binary_icosahedral() {
        let c = compile(&parse(ICOSAHEDRAL));
        assert!(c.integral_homology_ball);
        assert!(c.homology.h1.is_empty());
        assert_eq!(c.homology.h2_rank, 0);
        assert!(c.euler.stated_bound_holds);
        assert_eq!(c.euler.page_euler, c.euler.stated_bound);
    }

    #[test]
    fn euler_bound_with_short_repeats() {
        let c = compile(&parse("< x | x x >"));
        assert!(!c.euler.stated_bound_holds);
        assert!(c.euler.adjusted_bound_holds);
        assert_eq!(c.euler.page_euler, c.euler.adjusted_bound);
    }

    #[test]
    fn presentation_validation() {
        assert!(Presentation::new(vec!["a".into()], vec![vec![]]).is_err());
        assert!(Presentation::new(vec!["a".into()], vec![vec![Letter::pos(1)]]).is_err());
        assert!(Presentation::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }
}
