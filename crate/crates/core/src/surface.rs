//! Orientable polygon words and their classification.
//!
//! A [`Polygon`] is a cyclic sequence of oriented letters in which every
//! symbol occurs once (a boundary side) or twice with opposite exponents.
//! A [`SurfaceWord`] is a closed polygon: every symbol is paired, so the word
//! describes a closed orientable surface. The four classical transforms act
//! on polygons and preserve genus; [`reduce_to_standard`] drives them to a
//! product of handles, and [`genus_by_corner_orbits`] computes the same
//! number independently from the Euler characteristic of the identified
//! polygon.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("malformed token `{0}` (expected `name` or `name^-1`)")]
    MalformedToken(String),
    #[error("empty word")]
    Empty,
    #[error("symbol `{symbol}` occurs {count} times (expected 2)")]
    Multiplicity { symbol: String, count: usize },
    #[error("symbol `{0}` occurs twice with the same exponent (non-orientable)")]
    NonOrientable(String),
    #[error("positions {0:?} do not form an interlaced set")]
    NotInterlaced([usize; 4]),
    #[error("boundary merge: {0}")]
    BoundaryMismatch(String),
    #[error("reduction left an uncancellable residue: {0}")]
    Inconsistent(String),
    #[error("corner-orbit count gives non-integer genus (V={vertices}, E={edges}, boundary={boundary})")]
    NonIntegerGenus {
        vertices: usize,
        edges: usize,
        boundary: usize,
    },
}

/// Opaque symbol identifier, an index into the word's name table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Pos,
    Neg,
}

impl Exponent {
    pub fn flip(self) -> Self {
        match self {
            Exponent::Pos => Exponent::Neg,
            Exponent::Neg => Exponent::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Exponent::Pos => 1,
            Exponent::Neg => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub exponent: Exponent,
}

impl Letter {
    pub fn new(symbol: Symbol, exponent: Exponent) -> Self {
        Letter { symbol, exponent }
    }

    pub fn pos(symbol: Symbol) -> Self {
        Letter::new(symbol, Exponent::Pos)
    }

    pub fn neg(symbol: Symbol) -> Self {
        Letter::new(symbol, Exponent::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.symbol, self.exponent.flip())
    }
}

/// Cyclic letter sequence whose symbols occur once or twice.
#[derive(Debug, Clone)]
pub struct Polygon {
    letters: Vec<Letter>,
    names: Arc<Vec<String>>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Polygon {
    /// Parses whitespace-separated tokens `name` / `name^-1`.
    ///
    /// Symbols may occur once (boundary) or twice with opposite exponents.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, u32> = BTreeMap::new();
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exponent) = match token.strip_suffix("^-1") {
                Some(stem) => (stem, Exponent::Neg),
                None => (token, Exponent::Pos),
            };
            if !valid_name(name) {
                return Err(WordError::MalformedToken(token.to_string()));
            }
            let id = *index.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                (names.len() - 1) as u32
            });
            letters.push(Letter::new(Symbol(id), exponent));
        }
        Polygon::from_parts(letters, Arc::new(names))
    }

    /// Builds a polygon, checking multiplicities and orientability.
    pub fn from_parts(letters: Vec<Letter>, names: Arc<Vec<String>>) -> Result<Self, WordError> {
        let polygon = Polygon { letters, names };
        let mut seen: BTreeMap<Symbol, Vec<Exponent>> = BTreeMap::new();
        for l in &polygon.letters {
            seen.entry(l.symbol).or_default().push(l.exponent);
        }
        for (sym, exps) in seen {
            match exps.len() {
                1 => {}
                2 if exps[0] != exps[1] => {}
                2 => return Err(WordError::NonOrientable(polygon.name(sym).to_string())),
                count => {
                    return Err(WordError::Multiplicity {
                        symbol: polygon.name(sym).to_string(),
                        count,
                    })
                }
            }
        }
        Ok(polygon)
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

    pub fn names(&self) -> &Arc<Vec<String>> {
        &self.names
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        self.names
            .get(symbol.0 as usize)
            .map(String::as_str)
            .unwrap_or("?")
    }

    /// Distinct symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = Vec::new();
        for l in &self.letters {
            if !out.contains(&l.symbol) {
                out.push(l.symbol);
            }
        }
        out
    }

    /// True when every symbol is paired.
    pub fn is_closed(&self) -> bool {
        let mut count: BTreeMap<Symbol, usize> = BTreeMap::new();
        for l in &self.letters {
            *count.entry(l.symbol).or_default() += 1;
        }
        count.values().all(|&c| c == 2)
    }

    /// Position of the other occurrence of each letter's symbol, if any.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut first: BTreeMap<Symbol, usize> = BTreeMap::new();
        let mut out = vec![None; self.letters.len()];
        for (i, l) in self.letters.iter().enumerate() {
            if let Some(&j) = first.get(&l.symbol) {
                out[i] = Some(j);
                out[j] = Some(i);
            } else {
                first.insert(l.symbol, i);
            }
        }
        out
    }

    fn with_letters(&self, letters: Vec<Letter>) -> Polygon {
        Polygon {
            letters,
            names: Arc::clone(&self.names),
        }
    }

    /// Rotates the cyclic sequence so that position `start` comes first.
    pub fn rotated(&self, start: usize) -> Polygon {
        if self.letters.is_empty() {
            return self.clone();
        }
        let start = start % self.letters.len();
        let mut letters = self.letters[start..].to_vec();
        letters.extend_from_slice(&self.letters[..start]);
        self.with_letters(letters)
    }

    /// Full reversal with every letter inverted; describes the same surface.
    pub fn mirrored(&self) -> Polygon {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        self.with_letters(letters)
    }

    /// Lexicographically least rotation (letters ordered by symbol id, then exponent).
    pub fn canonical(&self) -> Polygon {
        let n = self.letters.len();
        let best = (0..n)
            .min_by(|&a, &b| {
                (0..n)
                    .map(|k| self.letters[(a + k) % n])
                    .cmp((0..n).map(|k| self.letters[(b + k) % n]))
            })
            .unwrap_or(0);
        self.rotated(best)
    }

    /// Mints a symbol named `_k`, with `k` above every existing `_k` name.
    fn fresh_symbol(names: &mut Vec<String>) -> Symbol {
        let next = names
            .iter()
            .filter_map(|n| n.strip_prefix('_').and_then(|k| k.parse::<u64>().ok()))
            .max()
            .map_or(1, |k| k + 1);
        names.push(format!("_{next}"));
        Symbol((names.len() - 1) as u32)
    }

    /// Compares two polygons as cyclic words up to renaming symbols.
    pub fn same_shape(&self, other: &Polygon) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let n = self.len();
        'rot: for r in 0..n {
            let mut fwd: BTreeMap<Symbol, (Symbol, bool)> = BTreeMap::new();
            let mut back: BTreeMap<Symbol, Symbol> = BTreeMap::new();
            for k in 0..n {
                let a = self.letters[k];
                let b = other.letters[(r + k) % n];
                let flip = a.exponent != b.exponent;
                match fwd.get(&a.symbol) {
                    Some(&(s, f)) if s != b.symbol || f != flip => continue 'rot,
                    Some(_) => {}
                    None => {
                        if back.contains_key(&b.symbol) {
                            continue 'rot;
                        }
                        fwd.insert(a.symbol, (b.symbol, flip));
                        back.insert(b.symbol, a.symbol);
                    }
                }
            }
            return true;
        }
        false
    }
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .letters
                .iter()
                .zip(&other.letters)
                .all(|(a, b)| a.exponent == b.exponent && self.name(a.symbol) == other.name(b.symbol))
    }
}

impl Eq for Polygon {}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.name(l.symbol))?;
            if l.exponent == Exponent::Neg {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Closed orientable polygon word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceWord(Polygon);

impl SurfaceWord {
    pub fn new(letters: Vec<Letter>, names: Arc<Vec<String>>) -> Result<Self, WordError> {
        SurfaceWord::try_from(Polygon::from_parts(letters, names)?)
    }

    /// The sphere word `name name^-1`.
    pub fn sphere(name: &str) -> Self {
        SurfaceWord(Polygon {
            letters: vec![Letter::pos(Symbol(0)), Letter::neg(Symbol(0))],
            names: Arc::new(vec![name.to_string()]),
        })
    }

    /// The standard form word for genus `p`.
    pub fn standard(p: usize) -> Self {
        if p == 0 {
            return SurfaceWord::sphere("a0");
        }
        let mut names = Vec::with_capacity(2 * p);
        let mut letters = Vec::with_capacity(4 * p);
        for i in 1..=p {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
            let a = Symbol((2 * i - 2) as u32);
            let b = Symbol((2 * i - 1) as u32);
            letters.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
        }
        SurfaceWord(Polygon {
            letters,
            names: Arc::new(names),
        })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.0
    }

    pub fn into_polygon(self) -> Polygon {
        self.0
    }

    pub fn symbol_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn canonical(&self) -> SurfaceWord {
        SurfaceWord(self.0.canonical())
    }

    pub fn rotated(&self, start: usize) -> SurfaceWord {
        SurfaceWord(self.0.rotated(start))
    }

    pub fn mirrored(&self) -> SurfaceWord {
        SurfaceWord(self.0.mirrored())
    }
}

impl TryFrom<Polygon> for SurfaceWord {
    type Error = WordError;

    fn try_from(polygon: Polygon) -> Result<Self, WordError> {
        if polygon.is_empty() {
            return Err(WordError::Empty);
        }
        let mut count: BTreeMap<Symbol, usize> = BTreeMap::new();
        for l in polygon.letters() {
            *count.entry(l.symbol).or_default() += 1;
        }
        if let Some((&sym, &c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(WordError::Multiplicity {
                symbol: polygon.name(sym).to_string(),
                count: c,
            });
        }
        Ok(SurfaceWord(polygon))
    }
}

impl Deref for SurfaceWord {
    type Target = Polygon;

    fn deref(&self) -> &Polygon {
        &self.0
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses a closed orientable word.
pub fn parse_word(text: &str) -> Result<SurfaceWord, WordError> {
    SurfaceWord::try_from(Polygon::parse(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TransformKind {
    T1,
    T2,
    T3,
    T4,
}

impl TransformKind {
    pub fn number(self) -> u8 {
        match self {
            TransformKind::T1 => 1,
            TransformKind::T2 => 2,
            TransformKind::T3 => 3,
            TransformKind::T4 => 4,
        }
    }
}

/// One applied transform: positions refer to the word before the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformStep {
    pub kind: TransformKind,
    pub positions: Vec<usize>,
    pub result: Polygon,
}

/// An interlaced set `x … y … x' … y'` at positions `i < k < j < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterlacedPair {
    pub first: Symbol,
    pub second: Symbol,
    pub positions: [usize; 4],
}

/// Leftmost interlaced pair lying entirely in `[0, scan_limit)`.
///
/// Scanning runs left to right over the linear presentation: the pair whose
/// first letter is leftmost wins, ties broken by the leftmost second letter.
pub fn first_interlaced(word: &Polygon, scan_limit: usize) -> Option<InterlacedPair> {
    let limit = scan_limit.min(word.len());
    let partner = word.partners();
    for i in 0..limit {
        let Some(j) = partner[i] else { continue };
        if j < i || j >= limit {
            continue;
        }
        for k in i + 1..j {
            if let Some(l) = partner[k] {
                if l > j && l < limit {
                    return Some(InterlacedPair {
                        first: word.letters()[i].symbol,
                        second: word.letters()[k].symbol,
                        positions: [i, k, j, l],
                    });
                }
            }
        }
    }
    None
}

fn find_adjacent_inverse(word: &Polygon) -> Option<(usize, usize)> {
    let n = word.len();
    if n < 2 {
        return None;
    }
    let letters = word.letters();
    (0..n)
        .map(|p| (p, (p + 1) % n))
        .find(|&(p, q)| p != q && letters[q] == letters[p].inverse())
}

/// Deletes the leftmost cyclically adjacent `a a^-1`, unless the word is at
/// the two-letter sphere floor.
pub fn transform1_step(word: &Polygon) -> Option<TransformStep> {
    if word.len() <= 2 {
        return None;
    }
    let (p, q) = find_adjacent_inverse(word)?;
    let letters = word
        .letters()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != p && i != q)
        .map(|(_, &l)| l)
        .collect();
    Some(TransformStep {
        kind: TransformKind::T1,
        positions: vec![p, q],
        result: word.with_letters(letters),
    })
}

/// Transform 1 to fixpoint: `A a a^-1 ~ A`.
pub fn transform1(word: &SurfaceWord) -> SurfaceWord {
    let mut cur = word.polygon().clone();
    while let Some(step) = transform1_step(&cur) {
        cur = step.result;
    }
    SurfaceWord(cur)
}

fn find_fold(word: &Polygon) -> Option<[usize; 4]> {
    let n = word.len();
    if n < 4 {
        return None;
    }
    let letters = word.letters();
    let partner = word.partners();
    for p in 0..n {
        let p1 = (p + 1) % n;
        let (Some(q1), Some(q)) = (partner[p], partner[p1]) else {
            continue;
        };
        // Need w[q] = w[p1]^-1 immediately followed by w[q1] = w[p]^-1.
        if (q + 1) % n != q1 {
            continue;
        }
        let distinct = [p, p1, q, q1];
        if distinct.iter().enumerate().any(|(a, x)| distinct[a + 1..].contains(x)) {
            continue;
        }
        debug_assert_eq!(letters[q], letters[p1].inverse());
        debug_assert_eq!(letters[q1], letters[p].inverse());
        return Some([p, p1, q, q1]);
    }
    None
}

/// Folds the leftmost `a b … b^-1 a^-1` into a fresh `c … c^-1`.
pub fn transform2_step(word: &Polygon) -> Option<TransformStep> {
    let [p, p1, q, q1] = find_fold(word)?;
    let mut names = (**word.names()).clone();
    let c = Polygon::fresh_symbol(&mut names);
    let letters = word
        .letters()
        .iter()
        .enumerate()
        .filter_map(|(i, &l)| {
            if i == p {
                Some(Letter::pos(c))
            } else if i == q {
                Some(Letter::neg(c))
            } else if i == p1 || i == q1 {
                None
            } else {
                Some(l)
            }
        })
        .collect();
    Some(TransformStep {
        kind: TransformKind::T2,
        positions: vec![p, p1, q, q1],
        result: Polygon {
            letters,
            names: Arc::new(names),
        },
    })
}

/// Transform 2 to fixpoint: `A a b B b^-1 a^-1 ~ A c B c^-1`.
pub fn transform2(word: &SurfaceWord) -> SurfaceWord {
    let mut cur = word.polygon().clone();
    while let Some(step) = transform2_step(&cur) {
        cur = step.result;
    }
    SurfaceWord(cur)
}

/// Transform 3: `(A a)(a^-1 B) ~ (A B)`.
///
/// The two polygons must share exactly one symbol (matched by name), once in
/// each and with opposite exponents. An empty merge becomes a sphere word.
pub fn transform3(left: &Polygon, right: &Polygon) -> Result<Polygon, WordError> {
    let left_names: Vec<&str> = left.letters().iter().map(|l| left.name(l.symbol)).collect();
    let right_names: Vec<&str> = right.letters().iter().map(|l| right.name(l.symbol)).collect();
    let shared: Vec<&str> = {
        let mut s: Vec<&str> = left_names
            .iter()
            .copied()
            .filter(|n| right_names.contains(n))
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let [glue] = shared.as_slice() else {
        return Err(WordError::BoundaryMismatch(format!(
            "expected exactly one shared symbol, found {}",
            shared.len()
        )));
    };
    let lpos: Vec<usize> = (0..left.len()).filter(|&i| left_names[i] == *glue).collect();
    let rpos: Vec<usize> = (0..right.len()).filter(|&i| right_names[i] == *glue).collect();
    let ([li], [ri]) = (lpos.as_slice(), rpos.as_slice()) else {
        return Err(WordError::BoundaryMismatch(format!("`{glue}` repeated on one side")));
    };
    if left.letters()[*li].exponent == right.letters()[*ri].exponent {
        return Err(WordError::BoundaryMismatch(format!(
            "`{glue}` has the same exponent on both sides"
        )));
    }
    // A = letters after `a` cyclically up to it; B = letters after `a^-1`.
    let mut names: Vec<String> = Vec::new();
    let mut ids: BTreeMap<String, Symbol> = BTreeMap::new();
    let mut letters = Vec::new();
    let mut push = |name: &str, exponent: Exponent, letters: &mut Vec<Letter>| {
        let sym = *ids.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            Symbol((names.len() - 1) as u32)
        });
        letters.push(Letter::new(sym, exponent));
    };
    for k in 1..left.len() {
        let i = (li + k) % left.len();
        push(left_names[i], left.letters()[i].exponent, &mut letters);
    }
    for k in 1..right.len() {
        let i = (ri + k) % right.len();
        push(right_names[i], right.letters()[i].exponent, &mut letters);
    }
    if letters.is_empty() {
        let sphere = SurfaceWord::sphere("_1");
        return Ok(sphere.into_polygon());
    }
    Polygon::from_parts(letters, Arc::new(names))
}

/// Transform 4: `A a B b C a^-1 D b^-1 E ~ A D C B E a b a^-1 b^-1`.
///
/// The handle uses the letters as they appear at the pair's first
/// occurrences.
pub fn transform4(word: &Polygon, pair: &InterlacedPair) -> Result<Polygon, WordError> {
    let [i, k, j, l] = pair.positions;
    let partner = word.partners();
    let ok = i < k
        && k < j
        && j < l
        && l < word.len()
        && partner[i] == Some(j)
        && partner[k] == Some(l);
    if !ok {
        return Err(WordError::NotInterlaced(pair.positions));
    }
    let w = word.letters();
    let a = w[i];
    let b = w[k];
    let mut letters = Vec::with_capacity(w.len());
    letters.extend_from_slice(&w[..i]); // A
    letters.extend_from_slice(&w[j + 1..l]); // D
    letters.extend_from_slice(&w[k + 1..j]); // C
    letters.extend_from_slice(&w[i + 1..k]); // B
    letters.extend_from_slice(&w[l + 1..]); // E
    letters.extend([a, b, a.inverse(), b.inverse()]);
    Ok(word.with_letters(letters))
}

/// Result of reducing a word to standard form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub genus: usize,
    /// Canonical rotation of the input; the trace replays from here.
    pub start: SurfaceWord,
    pub trace: Vec<TransformStep>,
    /// Final word: a product of `genus` handles, or a sphere pair.
    pub word: SurfaceWord,
}

impl StandardForm {
    /// Line-oriented log: `STEP <n> T<k> @<positions> -> <word>`.
    pub fn trace_log(&self) -> String {
        let mut out = String::new();
        for (n, step) in self.trace.iter().enumerate() {
            let pos: Vec<String> = step.positions.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "STEP {} T{} @{} -> {}\n",
                n + 1,
                step.kind.number(),
                pos.join(","),
                step.result
            ));
        }
        out
    }
}

/// Reduces a word to standard form.
///
/// Transforms 1 and 2 run to fixpoint first. Then, while the unprocessed
/// prefix holds an interlaced pair, transform 4 moves a handle to the tail.
/// The remaining prefix has only parallel pairs and cancels by transform 1.
pub fn reduce_to_standard(word: &SurfaceWord) -> Result<StandardForm, WordError> {
    let start = word.canonical();
    let mut trace = Vec::new();
    let mut cur = start.polygon().clone();

    loop {
        if let Some(step) = transform1_step(&cur) {
            cur = step.result.clone();
            trace.push(step);
        } else if let Some(step) = transform2_step(&cur) {
            cur = step.result.clone();
            trace.push(step);
        } else {
            break;
        }
    }

    let mut handles = 0usize;
    while let Some(pair) = first_interlaced(&cur, cur.len() - 4 * handles) {
        let next = transform4(&cur, &pair)?;
        trace.push(TransformStep {
            kind: TransformKind::T4,
            positions: pair.positions.to_vec(),
            result: next.clone(),
        });
        cur = next;
        handles += 1;
    }

    while cur.len() > 4 * handles {
        if handles == 0 && cur.len() == 2 {
            break;
        }
        let Some(step) = transform1_step(&cur) else {
            return Err(WordError::Inconsistent(cur.to_string()));
        };
        if step.positions.iter().any(|&p| p >= cur.len() - 4 * handles) {
            return Err(WordError::Inconsistent(cur.to_string()));
        }
        cur = step.result.clone();
        trace.push(step);
    }

    let word = SurfaceWord::try_from(cur)?;
    debug_assert!(handles > 0 || word.len() == 2);
    Ok(StandardForm {
        genus: handles,
        start,
        trace,
        word,
    })
}

/// Genus from the Euler characteristic of the identified polygon.
///
/// Paired sides are glued tail-to-tail and head-to-head; corner classes give
/// `V`, each symbol one edge, and the single polygon face `F = 1`. Unpaired
/// sides are boundary edges: with `b` boundary circles,
/// `g = (2 - (V - E + 1) - b) / 2`.
pub fn genus_by_corner_orbits(word: &Polygon) -> Result<usize, WordError> {
    let n = word.len();
    if n == 0 {
        return Ok(0);
    }
    let mut dsu = Dsu::new(n);
    // Side i runs from corner i to corner i+1; a negative letter traverses
    // its edge backwards.
    let ends = |i: usize| -> (usize, usize) {
        let (from, to) = (i, (i + 1) % n);
        match word.letters()[i].exponent {
            Exponent::Pos => (from, to),
            Exponent::Neg => (to, from),
        }
    };
    let partner = word.partners();
    let mut edges = 0usize;
    for i in 0..n {
        match partner[i] {
            Some(j) if j > i => {
                let (ti, hi) = ends(i);
                let (tj, hj) = ends(j);
                dsu.union(ti, tj);
                dsu.union(hi, hj);
                edges += 1;
            }
            Some(_) => {}
            None => edges += 1,
        }
    }
    let vertices = dsu.classes();

    // Boundary circles: components of the boundary sides over corner classes.
    let mut boundary_dsu = Dsu::new(n);
    let mut touched = vec![false; n];
    for i in (0..n).filter(|&i| partner[i].is_none()) {
        let (t, h) = ends(i);
        let (t, h) = (dsu.find(t), dsu.find(h));
        boundary_dsu.union(t, h);
        touched[t] = true;
        touched[h] = true;
    }
    let mut roots: Vec<usize> = (0..n)
        .filter(|&c| touched[c])
        .map(|c| boundary_dsu.find(c))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    let boundary = roots.len();

    let twice = 2 + edges as i64 - vertices as i64 - 1 - boundary as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(WordError::NonIntegerGenus {
            vertices,
            edges,
            boundary,
        });
    }
    Ok((twice / 2) as usize)
}

/// Union-find over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
