//! Partial actions of groups of birational maps.
//!
//! A group element is a word in named generators, evaluated pointwise from
//! the right. A letter is applied only where its map is regular; the first
//! failing letter makes the whole word undefined at that point (`None`).
//! Undefined is an ordinary outcome, not an error.
//!
//! [`check_axioms`] verifies, on sample points and all reduced words up to a
//! given length, the identity axiom, compatibility of evaluation with word
//! multiplication, and that the inverse of every defined element is defined
//! at the image and maps it back.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussq::GaussianRational;

type Q = GaussianRational;

pub type Point = Vec<Q>;

/// A map of affine space defined on a subset of its points.
pub trait PartialMap: Send + Sync {
    fn arity(&self) -> usize;

    /// `None` exactly off the domain.
    fn eval(&self, x: &[Q]) -> Option<Point>;

    fn in_domain(&self, x: &[Q]) -> bool {
        self.eval(x).is_some()
    }
}

type BoxedFn = Box<dyn Fn(&[Q]) -> Option<Point> + Send + Sync>;

/// A partial map backed by a closure.
pub struct FnMap {
    arity: usize,
    f: BoxedFn,
}

impl FnMap {
    pub fn new(arity: usize, f: impl Fn(&[Q]) -> Option<Point> + Send + Sync + 'static) -> Self {
        FnMap {
            arity,
            f: Box::new(f),
        }
    }
}

impl PartialMap for FnMap {
    fn arity(&self) -> usize {
        self.arity
    }
    fn eval(&self, x: &[Q]) -> Option<Point> {
        (self.f)(x)
    }
}

#[derive(Clone)]
enum InverseMap {
    /// The generator is its own inverse.
    Involution,
    Map(Arc<dyn PartialMap>),
}

#[derive(Clone)]
pub struct Generator {
    name: String,
    forward: Arc<dyn PartialMap>,
    inverse: InverseMap,
}

impl Generator {
    pub fn name(&self) -> &str {
        &self.name
    }
}

/// Named generators, each with a designated inverse map.
#[derive(Clone, Default)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Adds a generator equal to its own inverse.
    pub fn add_involution(&mut self, name: &str, map: Arc<dyn PartialMap>) -> usize {
        self.gens.push(Generator {
            name: name.to_owned(),
            forward: map,
            inverse: InverseMap::Involution,
        });
        self.gens.len() - 1
    }

    pub fn add_pair(
        &mut self,
        name: &str,
        forward: Arc<dyn PartialMap>,
        inverse: Arc<dyn PartialMap>,
    ) -> usize {
        self.gens.push(Generator {
            name: name.to_owned(),
            forward,
            inverse: InverseMap::Map(inverse),
        });
        self.gens.len() - 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    fn is_involution(&self, gen: usize) -> bool {
        matches!(self.gens[gen].inverse, InverseMap::Involution)
    }

    fn map_of(&self, letter: Letter) -> &dyn PartialMap {
        let g = &self.gens[letter.gen];
        match (&g.inverse, letter.inverse) {
            (InverseMap::Map(inv), true) => inv.as_ref(),
            _ => g.forward.as_ref(),
        }
    }

    /// All letters: each generator, plus its inverse unless it is an
    /// involution.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for gen in 0..self.gens.len() {
            out.push(Letter {
                gen,
                inverse: false,
            });
            if !self.is_involution(gen) {
                out.push(Letter { gen, inverse: true });
            }
        }
        out
    }

    /// Word from `(name, exponent)` pairs, leftmost applied last.
    pub fn word(&self, letters: &[(&str, i8)]) -> Result<GroupWord> {
        let mut out = Vec::with_capacity(letters.len());
        for &(name, exp) in letters {
            let gen = self
                .index_of(name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            if exp != 1 && exp != -1 {
                return Err(Error::Parse(format!("exponent {exp} is not +1 or -1")));
            }
            out.push(Letter {
                gen,
                inverse: exp < 0,
            });
        }
        Ok(GroupWord::reduced(out, self))
    }
}

/// Generator index with exponent +1 (`inverse == false`) or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

/// A freely reduced word; the rightmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Freely reduces `letters`; for involutions `g g` cancels.
    pub fn reduced(letters: Vec<Letter>, set: &GeneratorSet) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for mut l in letters {
            if set.is_involution(l.gen) {
                l.inverse = false;
            }
            match out.last() {
                Some(&last)
                    if last.gen == l.gen
                        && (set.is_involution(l.gen) || last.inverse != l.inverse) =>
                {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GroupWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self, set: &GeneratorSet) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| Letter {
                gen: l.gen,
                inverse: !l.inverse && !set.is_involution(l.gen),
            })
            .collect();
        GroupWord { letters }
    }

    /// `self * other` (apply `other` first), reduced.
    pub fn concat(&self, other: &GroupWord, set: &GeneratorSet) -> Self {
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        Self::reduced(letters, set)
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, set }
    }
}

struct WordDisplay<'a> {
    word: &'a GroupWord,
    set: &'a GeneratorSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.word.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.set.gens[l.gen].name)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Evaluates `word` at `x`, rightmost letter first.
pub fn apply_word(word: &GroupWord, set: &GeneratorSet, x: &[Q]) -> Option<Point> {
    let mut y = x.to_vec();
    for &l in word.letters.iter().rev() {
        y = set.map_of(l).eval(&y)?;
    }
    Some(y)
}

/// All reduced words of length at most `depth`, shortest first.
pub fn enumerate_words(set: &GeneratorSet, depth: usize) -> Vec<GroupWord> {
    let letters = set.letters();
    let mut all = vec![GroupWord::identity()];
    let mut frontier = vec![GroupWord::identity()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut ls = w.letters.clone();
                ls.push(l);
                let r = GroupWord::reduced(ls, set);
                if r.len() == w.len() + 1 {
                    next.push(r);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Identity,
    Composition,
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub point: Point,
    pub word: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub points: usize,
    pub words: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, axiom: Axiom) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

/// Checks the partial-action axioms on every sample point and every reduced
/// word of length at most `depth`:
///
/// - the empty word fixes the point;
/// - if `s` is defined at `x` and `t` at `s(x)` (with `|t| + |s| <= depth`),
///   the reduced product `t s` is defined at `x` with the same value;
/// - if `s` is defined at `x`, its inverse word is defined at `s(x)` and
///   returns `x`.
pub fn check_axioms(set: &GeneratorSet, points: &[Point], depth: usize) -> AxiomReport {
    let words = enumerate_words(set, depth);
    let mut violations = Vec::new();
    for x in points {
        if apply_word(&GroupWord::identity(), set, x).as_deref() != Some(&x[..]) {
            violations.push(Violation {
                axiom: Axiom::Identity,
                point: x.clone(),
                word: "e".into(),
                detail: "identity does not fix the point".into(),
            });
        }
        let at_x = word_values(set, &words, x, depth);
        let mut inverse_ok: HashSet<Vec<Letter>> = HashSet::from([Vec::new()]);
        for s in words.iter().filter(|w| !w.is_empty()) {
            let Some(y) = &at_x[&s.letters] else {
                continue;
            };
            // For s = l s', one step suffices when s' already passed:
            // l^{-1}(s(x)) = s'(x) gives s^{-1}(s(x)) = s'^{-1}(s'(x)) = x.
            let (&first, rest) = s.letters.split_first().expect("nonempty");
            let back = Letter {
                gen: first.gen,
                inverse: !first.inverse && !set.is_involution(first.gen),
            };
            let quick = inverse_ok.contains(rest)
                && set.map_of(back).eval(y).as_ref() == at_x[rest].as_ref();
            if quick {
                inverse_ok.insert(s.letters.clone());
            } else {
                let s_inv = s.inverse(set);
                let detail = match apply_word(&s_inv, set, y) {
                    None => Some("is not defined at the image"),
                    Some(back) if back != *x => Some("does not return the point"),
                    Some(_) => {
                        inverse_ok.insert(s.letters.clone());
                        None
                    }
                };
                if let Some(detail) = detail {
                    violations.push(Violation {
                        axiom: Axiom::Inverse,
                        point: x.clone(),
                        word: s.display(set).to_string(),
                        detail: format!("inverse {} {detail}", s_inv.display(set)),
                    });
                }
            }
            let room = depth - s.len();
            if room == 0 {
                continue;
            }
            let at_y = word_values(set, &words, y, room);
            for t in words.iter().filter(|t| !t.is_empty() && t.len() <= room) {
                let Some(z) = &at_y[&t.letters] else {
                    continue;
                };
                let ts = t.concat(s, set);
                if at_x[&ts.letters].as_ref() != Some(z) {
                    violations.push(Violation {
                        axiom: Axiom::Composition,
                        point: x.clone(),
                        word: format!("{} * {}", t.display(set), s.display(set)),
                        detail: format!(
                            "product {} disagrees with sequential evaluation",
                            ts.display(set)
                        ),
                    });
                }
            }
        }
    }
    AxiomReport {
        points: points.len(),
        words: words.len(),
        violations,
    }
}

/// Values at `x` of every word of length at most `max_len`, each obtained
/// from its suffix by one generator step. `words` is shortest first.
fn word_values(
    set: &GeneratorSet,
    words: &[GroupWord],
    x: &[Q],
    max_len: usize,
) -> HashMap<Vec<Letter>, Option<Point>> {
    let mut out: HashMap<Vec<Letter>, Option<Point>> = HashMap::new();
    for w in words.iter().take_while(|w| w.len() <= max_len) {
        let value = match w.letters.split_first() {
            None => Some(x.to_vec()),
            Some((&first, rest)) => out[rest].as_ref().and_then(|y| set.map_of(first).eval(y)),
        };
        out.insert(w.letters.clone(), value);
    }
    out
}

/// Distinct images of `x` under all words of length at most `depth`.
pub fn orbit_sample(set: &GeneratorSet, x: &[Q], depth: usize) -> HashSet<Point> {
    enumerate_words(set, depth)
        .iter()
        .filter_map(|w| apply_word(w, set, x))
        .collect()
}

/// Sparse polynomial in `nvars` variables over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Q::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Q)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        assert_eq!(x.len(), self.nvars, "point has wrong arity");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * xi.powi(k as i32))
            })
            .sum()
    }

    /// Coefficient of the largest exponent vector in lexicographic order.
    fn leading_coefficient(&self) -> Option<&Q> {
        self.terms.values().next_back()
    }

    fn min_exponents(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()
        }))
    }

    fn divide_monomial(&self, e: &[u32]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().zip(e).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }
}

/// `num / den` with `den != 0`.
///
/// Normalization cancels the common monomial factor of numerator and
/// denominator and makes the leading coefficient of the denominator 1.
/// Callers are expected to supply coprime pairs; no multivariate gcd is
/// computed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator polynomial".into()));
        }
        if num.nvars != den.nvars {
            return Err(Error::DimensionMismatch {
                expected: den.nvars,
                got: num.nvars,
            });
        }
        let nvars = den.nvars;
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(nvars),
            });
        }
        let common: Vec<u32> = num
            .min_exponents()
            .zip(den.min_exponents())
            .map(|(a, b)| a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect())
            .unwrap_or_else(|| vec![0; nvars]);
        let (num, den) = (num.divide_monomial(&common), den.divide_monomial(&common));
        let lc = den.leading_coefficient().expect("nonzero").inv();
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        let nvars = p.nvars;
        RationalFunction {
            num: p,
            den: Polynomial::one(nvars),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn eval(&self, x: &[Q]) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

/// A birational map given by one rational function per coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMapTuple {
    nvars: usize,
    components: Vec<RationalFunction>,
}

impl RationalMapTuple {
    pub fn new(components: Vec<RationalFunction>) -> Result<Self> {
        let nvars = components.len();
        if let Some(bad) = components.iter().find(|c| c.den.nvars != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: bad.den.nvars,
            });
        }
        Ok(RationalMapTuple { nvars, components })
    }

    pub fn identity(nvars: usize) -> Self {
        RationalMapTuple {
            nvars,
            components: (0..nvars)
                .map(|i| RationalFunction::polynomial(Polynomial::var(nvars, i)))
                .collect(),
        }
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.components
    }
}

/// Evaluates every component; undefined iff some denominator vanishes.
pub fn eval_rational_tuple(t: &RationalMapTuple, x: &[Q]) -> Option<Point> {
    t.components.iter().map(|c| c.eval(x)).collect()
}

impl PartialMap for RationalMapTuple {
    fn arity(&self) -> usize {
        self.nvars
    }
    fn eval(&self, x: &[Q]) -> Option<Point> {
        eval_rational_tuple(self, x)
    }
}

/// `(x1, (x1 - 1) / x2)`: an involution of the plane whose inverse is not
/// regular at the image of `(1, 1)`.
pub fn cremona_counterexample() -> RationalMapTuple {
    let x1 = Polynomial::var(2, 0);
    let x2 = Polynomial::var(2, 1);
    let second = RationalFunction::new(x1.sub(&Polynomial::one(2)), x2).expect("x2 is nonzero");
    RationalMapTuple::new(vec![RationalFunction::polynomial(x1), second]).expect("arity 2")
}

/// Generator set `{ sigma }` for [`cremona_counterexample`], `sigma` an
/// involution.
pub fn counterexample_generators() -> GeneratorSet {
    let mut set = GeneratorSet::new();
    set.add_involution("sigma", Arc::new(cremona_counterexample()));
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[i64]) -> Point {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn shift_set() -> GeneratorSet {
        // x -> x + 1 and its inverse on the line, plus x -> 1/x
        let mut set = GeneratorSet::new();
        set.add_pair(
            "a",
            Arc::new(FnMap::new(1, |x| Some(vec![&x[0] + &Q::one()]))),
            Arc::new(FnMap::new(1, |x| Some(vec![&x[0] - &Q::one()]))),
        );
        set.add_involution(
            "j",
            Arc::new(FnMap::new(1, |x| Some(vec![x[0].checked_inv()?]))),
        );
        set
    }

    #[test]
    fn identity_tuple_and_counterexample() {
        assert_eq!(
            eval_rational_tuple(&RationalMapTuple::identity(2), &pt(&[3, 5])),
            Some(pt(&[3, 5]))
        );
        let s = cremona_counterexample();
        assert_eq!(eval_rational_tuple(&s, &pt(&[1, 1])), Some(pt(&[1, 0])));
        assert_eq!(eval_rational_tuple(&s, &pt(&[1, 0])), None);
    }

    #[test]
    fn word_reduction() {
        let set = shift_set();
        let w = set
            .word(&[("a", 1), ("a", -1), ("j", 1), ("j", -1)])
            .unwrap();
        assert!(w.is_empty());
        let w = set.word(&[("a", 1), ("j", 1), ("a", 1)]).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.inverse(&set).display(&set).to_string(), "a^-1 j a^-1");
        assert!(w.concat(&w.inverse(&set), &set).is_empty());
        assert!(set.word(&[("b", 1)]).is_err());
    }

    #[test]
    fn word_evaluation_order() {
        let set = shift_set();
        // j a (2) = 1/3, a j (2) = 3/2
        let ja = set.word(&[("j", 1), ("a", 1)]).unwrap();
        assert_eq!(
            apply_word(&ja, &set, &pt(&[2])),
            Some(vec![Q::from_frac(1, 3)])
        );
        let aj = set.word(&[("a", 1), ("j", 1)]).unwrap();
        assert_eq!(
            apply_word(&aj, &set, &pt(&[2])),
            Some(vec![Q::from_frac(3, 2)])
        );
        // j a (-1) is undefined at the second step
        assert_eq!(apply_word(&ja, &set, &pt(&[-1])), None);
        assert_eq!(
            apply_word(&GroupWord::identity(), &set, &pt(&[7])),
            Some(pt(&[7]))
        );
    }

    #[test]
    fn word_counts() {
        let set = shift_set();
        // letters a, a^-1, j: 1 + 3 + (3*2) + ... reduced words
        let words = enumerate_words(&set, 2);
        assert_eq!(words.len(), 1 + 3 + 6);
    }

    #[test]
    fn moebius_generators_satisfy_axioms() {
        let set = shift_set();
        let points: Vec<Point> = (-3..=3).map(|x| pt(&[x])).collect();
        let report = check_axioms(&set, &points, 4);
        assert!(report.is_ok(), "{:?}", report.violations);
    }

    #[test]
    fn counterexample_has_single_inverse_violation() {
        let set = counterexample_generators();
        for depth in 1..=4 {
            let report = check_axioms(&set, &[pt(&[1, 1])], depth);
            assert_eq!(report.violations.len(), 1);
            assert_eq!(report.count(Axiom::Inverse), 1);
            assert_eq!(report.violations[0].word, "sigma");
        }
    }

    #[test]
    fn empty_generator_set_has_no_violations() {
        let report = check_axioms(&GeneratorSet::new(), &[pt(&[1, 2])], 3);
        assert!(report.is_ok());
        assert_eq!(report.words, 1);
    }

    #[test]
    fn rational_function_normalization() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        // (2 x y) / (4 x) -> (1/2 y) / 1 ... after cancelling x and scaling
        let f = RationalFunction::new(x.mul(&y).scale(&Q::from_int(2)), x.scale(&Q::from_int(4)))
            .unwrap();
        assert_eq!(f.denominator(), &Polynomial::one(2));
        assert_eq!(f.numerator(), &y.scale(&Q::from_frac(1, 2)));
        // defined at x = 0 once the common monomial is cancelled
        assert_eq!(f.eval(&pt(&[0, 4])), Some(Q::from_int(2)));
        assert!(RationalFunction::new(x.clone(), Polynomial::zero(2)).is_err());
    }
}
