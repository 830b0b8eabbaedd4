//! Free-word algebra over named alphabets, and the textual word grammar used
//! by every file format and command-line surface.
//!
//! Words are stored syllable-compressed: a list of `(generator, exponent)`
//! pairs with no zero exponents and no two adjacent syllables on the same
//! generator. Every constructor returns a freely reduced word.
//!
//! Grammar accepted by [`parse_word`]:
//!
//! ```text
//! word    := term (('*' | whitespace)? term)*  |  'e'  |  <empty>
//! term    := factor ('^' integer)?
//! factor  := symbol | '(' word ')' | '[' word ',' word ']'
//! symbol  := [A-Za-z][A-Za-z0-9_]* ('[' digits (',' digits)* ']')?
//! ```
//!
//! `[u,v]` expands to `u^-1 v^-1 u v` at parse time.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

/// Largest number of syllables a single parsed or powered word may reach.
pub const MAX_SYLLABLES: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    Syntax { position: usize, expected: &'static str },
    UnknownGenerator(String),
    InvalidName(String),
    ExponentOverflow,
    TooLong,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Syntax { position, expected } => {
                write!(f, "SyntaxError at position {position}: expected {expected}")
            }
            WordError::UnknownGenerator(name) => write!(f, "UnknownGenerator: {name}"),
            WordError::InvalidName(name) => write!(f, "InvalidName: {name:?}"),
            WordError::ExponentOverflow => f.write_str("ExponentOverflow"),
            WordError::TooLong => f.write_str("WordTooLong"),
        }
    }
}

/// What kind of generator a symbol name denotes under the fixed naming
/// convention (`s<i>`, `a<r>`, `b<r>`, `z<t>`, `x<i>`, bracket-indexed
/// abstract symbols like `A[1,2]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymKind {
    Sigma(u32),
    A(u32),
    B(u32),
    Zeta(u32),
    FreeLetter(u32),
    Abstract,
}

/// A generator symbol. Two symbols are equal iff their names are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSym(Arc<str>);

impl GenSym {
    /// Validates `name` against the symbol grammar.
    pub fn new(name: &str) -> Result<GenSym, WordError> {
        if valid_symbol_name(name) {
            Ok(GenSym(Arc::from(name)))
        } else {
            Err(WordError::InvalidName(name.to_owned()))
        }
    }

    /// Like [`GenSym::new`] but panics on an invalid name. Intended for
    /// names built by this crate.
    pub fn named(name: &str) -> GenSym {
        match GenSym::new(name) {
            Ok(s) => s,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn sigma(i: u32) -> GenSym {
        GenSym::named(&alloc::format!("s{i}"))
    }

    pub fn a(r: u32) -> GenSym {
        GenSym::named(&alloc::format!("a{r}"))
    }

    pub fn b(r: u32) -> GenSym {
        GenSym::named(&alloc::format!("b{r}"))
    }

    pub fn zeta(t: u32) -> GenSym {
        GenSym::named(&alloc::format!("z{t}"))
    }

    pub fn free_letter(i: u32) -> GenSym {
        GenSym::named(&alloc::format!("x{i}"))
    }

    /// `base[i,j,...]`, e.g. `A[1,2]`.
    pub fn indexed(base: &str, indices: &[u32]) -> GenSym {
        let mut name = String::from(base);
        name.push('[');
        for (k, i) in indices.iter().enumerate() {
            if k > 0 {
                name.push(',');
            }
            name.push_str(&alloc::format!("{i}"));
        }
        name.push(']');
        GenSym::named(&name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// The identifier part of the name, without any bracket index suffix.
    pub fn base(&self) -> &str {
        match self.0.find('[') {
            Some(k) => &self.0[..k],
            None => &self.0,
        }
    }

    /// Bracket indices, e.g. `[1, 2]` for `A[1,2]`; empty when absent.
    pub fn indices(&self) -> Vec<u32> {
        match self.0.find('[') {
            Some(k) => self.0[k + 1..self.0.len() - 1].split(',').filter_map(|s| s.parse().ok()).collect(),
            None => Vec::new(),
        }
    }

    pub fn kind(&self) -> SymKind {
        if self.0.contains('[') {
            return SymKind::Abstract;
        }
        let (head, tail) = self.0.split_at(1);
        let idx = match tail.parse::<u32>() {
            Ok(i) if !tail.is_empty() && !tail.starts_with('0') => i,
            _ => return SymKind::Abstract,
        };
        match head {
            "s" => SymKind::Sigma(idx),
            "a" => SymKind::A(idx),
            "b" => SymKind::B(idx),
            "z" => SymKind::Zeta(idx),
            "x" => SymKind::FreeLetter(idx),
            _ => SymKind::Abstract,
        }
    }
}

impl Borrow<str> for GenSym {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn valid_symbol_name(name: &str) -> bool {
    if name == "e" {
        return false;
    }
    match name.find('[') {
        None => valid_identifier(name),
        Some(k) => {
            let (base, rest) = name.split_at(k);
            valid_identifier(base)
                && rest.ends_with(']')
                && rest.len() > 2
                && rest[1..rest.len() - 1].split(',').all(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        }
    }
}

/// An ordered set of generators, used to validate parsed words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<GenSym>,
    index: BTreeMap<GenSym, usize>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = GenSym>>(symbols: I) -> Alphabet {
        let mut a = Alphabet::default();
        for s in symbols {
            a.insert(s);
        }
        a
    }

    /// Appends `sym` unless already present; returns its position.
    pub fn insert(&mut self, sym: GenSym) -> usize {
        if let Some(&k) = self.index.get(&sym) {
            return k;
        }
        let k = self.symbols.len();
        self.index.insert(sym.clone(), k);
        self.symbols.push(sym);
        k
    }

    pub fn get(&self, name: &str) -> Option<&GenSym> {
        self.index.get(name).map(|&k| &self.symbols[k])
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn symbols(&self) -> &[GenSym] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// A freely reduced word in syllable form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    syllables: Vec<(GenSym, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn generator(sym: GenSym) -> Word {
        Word { syllables: alloc::vec![(sym, 1)] }
    }

    pub fn power_of(sym: GenSym, exp: i64) -> Word {
        if exp == 0 {
            Word::identity()
        } else {
            Word { syllables: alloc::vec![(sym, exp)] }
        }
    }

    /// Reduces a raw syllable list, reporting exponent overflow.
    pub fn try_from_syllables<I>(raw: I) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = (GenSym, i64)>,
    {
        let mut out: Vec<(GenSym, i64)> = Vec::new();
        for (sym, exp) in raw {
            push_syllable(&mut out, sym, exp)?;
        }
        Ok(Word { syllables: out })
    }

    /// Reduces a raw syllable list. Panics if an exponent overflows `i64`.
    pub fn from_syllables<I>(raw: I) -> Word
    where
        I: IntoIterator<Item = (GenSym, i64)>,
    {
        Word::try_from_syllables(raw).expect("word exponent overflow")
    }

    /// Builds a word from single letters `(symbol, ±1)`.
    pub fn from_letters<I>(letters: I) -> Word
    where
        I: IntoIterator<Item = (GenSym, i64)>,
    {
        Word::from_syllables(letters)
    }

    pub fn syllables(&self) -> &[(GenSym, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    /// Total exponent length, i.e. the number of letters.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Letter-by-letter expansion: each item is `(symbol, +1 or -1)`.
    pub fn letters(&self) -> impl Iterator<Item = (&GenSym, i64)> + '_ {
        self.syllables.iter().flat_map(|(s, e)| {
            let sign = e.signum();
            core::iter::repeat_n((s, sign), e.unsigned_abs() as usize)
        })
    }

    pub fn symbols(&self) -> impl Iterator<Item = &GenSym> + '_ {
        self.syllables.iter().map(|(s, _)| s)
    }

    pub fn exponent_sum(&self, sym: &str) -> i64 {
        self.syllables.iter().filter(|(s, _)| s.name() == sym).map(|(_, e)| *e).sum()
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|(s, e)| (s.clone(), -e)).collect() }
    }

    pub fn try_concat(&self, other: &Word) -> Result<Word, WordError> {
        let mut out = self.syllables.clone();
        for (s, e) in &other.syllables {
            push_syllable(&mut out, s.clone(), *e)?;
        }
        Ok(Word { syllables: out })
    }

    pub fn concat(&self, other: &Word) -> Word {
        self.try_concat(other).expect("word exponent overflow")
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().concat(self).concat(by)
    }

    pub fn try_pow(&self, k: i64) -> Result<Word, WordError> {
        if k == 0 || self.is_identity() {
            return Ok(Word::identity());
        }
        if let [(s, e)] = self.syllables.as_slice() {
            let exp = e.checked_mul(k).ok_or(WordError::ExponentOverflow)?;
            return Ok(Word::power_of(s.clone(), exp));
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs();
        if (base.syllables.len() as u64).saturating_mul(reps) > MAX_SYLLABLES as u64 {
            return Err(WordError::TooLong);
        }
        let mut out = Word::identity();
        for _ in 0..reps {
            out = out.try_concat(&base)?;
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Word {
        self.try_pow(k).expect("word power overflow")
    }

    /// Replaces every generator by its image; generators without an image
    /// are kept as they are.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(&GenSym) -> Option<Word>,
    {
        let mut out = Word::identity();
        for (s, e) in &self.syllables {
            match image(s) {
                Some(w) => out = out.concat(&w.pow(*e)),
                None => out = out.concat(&Word::power_of(s.clone(), *e)),
            }
        }
        out
    }

    /// Fallible variant of [`Word::substitute`].
    pub fn try_substitute<F, E>(&self, mut image: F) -> Result<Word, E>
    where
        F: FnMut(&GenSym) -> Result<Word, E>,
    {
        let mut out = Word::identity();
        for (s, e) in &self.syllables {
            out = out.concat(&image(s)?.pow(*e));
        }
        Ok(out)
    }

    /// Cyclically reduced conjugate: strips matching ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters: Vec<(GenSym, i64)> = self.letters().map(|(s, e)| (s.clone(), e)).collect();
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].0 == letters[hi - 1].0 && letters[lo].1 == -letters[hi - 1].1 {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        Word::from_letters(letters.drain(lo..))
    }

    /// A representative of the cyclic class: the lexicographically least
    /// rotation of the cyclically reduced letter sequence.
    pub fn cyclic_canonical(&self) -> Word {
        let letters: Vec<(GenSym, i64)> = self.cyclically_reduced().letters().map(|(s, e)| (s.clone(), e)).collect();
        if letters.is_empty() {
            return Word::identity();
        }
        let n = letters.len();
        let best = (0..n)
            .min_by(|&i, &j| {
                let a = letters[i..].iter().chain(&letters[..i]);
                let b = letters[j..].iter().chain(&letters[..j]);
                a.cmp(b)
            })
            .unwrap_or(0);
        Word::from_letters(letters[best..].iter().chain(&letters[..best]).cloned())
    }
}

fn push_syllable(out: &mut Vec<(GenSym, i64)>, sym: GenSym, exp: i64) -> Result<(), WordError> {
    if exp == 0 {
        return Ok(());
    }
    if let Some((top, e)) = out.last_mut() {
        if *top == sym {
            let merged = e.checked_add(exp).ok_or(WordError::ExponentOverflow)?;
            if merged == 0 {
                out.pop();
            } else {
                *e = merged;
            }
            return Ok(());
        }
    }
    if out.len() >= MAX_SYLLABLES {
        return Err(WordError::TooLong);
    }
    out.push((sym, exp));
    Ok(())
}

/// Free reduction of a raw syllable list.
pub fn reduce(raw: &[(GenSym, i64)]) -> Word {
    Word::from_syllables(raw.iter().cloned())
}

/// `u^-1 v^-1 u v`.
pub fn commutator(u: &Word, v: &Word) -> Word {
    u.inverse().concat(&v.inverse()).concat(u).concat(v)
}

impl core::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl core::ops::Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl From<GenSym> for Word {
    fn from(s: GenSym) -> Word {
        Word::generator(s)
    }
}

/// Formats as `e` for the identity, otherwise syllables joined by `*`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (k, (s, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn format_word(w: &Word) -> String {
    alloc::format!("{w}")
}

/// Parses `text`, requiring every symbol to be in `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let resolve = |name: &str| alphabet.get(name).cloned();
    Parser::new(text, &resolve).parse()
}

/// Parses `text`, accepting any well-formed symbol name.
pub fn parse_word_any(text: &str) -> Result<Word, WordError> {
    let resolve = |name: &str| GenSym::new(name).ok();
    Parser::new(text, &resolve).parse()
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    resolve: &'a dyn Fn(&str) -> Option<GenSym>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, resolve: &'a dyn Fn(&str) -> Option<GenSym>) -> Self {
        Parser { src: text.as_bytes(), text, pos: 0, resolve }
    }

    fn parse(mut self) -> Result<Word, WordError> {
        let w = self.sequence()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.syntax("end of input"));
        }
        Ok(w)
    }

    fn syntax(&self, expected: &'static str) -> WordError {
        WordError::Syntax { position: self.pos, expected }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word, WordError> {
        let mut out = Word::identity();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') | Some(b',') | Some(b']') => {
                    break;
                }
                Some(b'*') => {
                    if first {
                        return Err(self.syntax("generator, '(' or '['"));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    match self.peek() {
                        Some(c) if c == b'(' || c == b'[' || c.is_ascii_alphabetic() => {}
                        _ => return Err(self.syntax("generator, '(' or '['")),
                    }
                }
                _ => {}
            }
            let t = self.term()?;
            out = out.try_concat(&t)?;
            first = false;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Word, WordError> {
        let base = self.factor()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            return base.try_pow(k);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.syntax("integer exponent"));
        }
        self.text[start..self.pos].parse::<i64>().map_err(|_| WordError::ExponentOverflow)
    }

    fn factor(&mut self) -> Result<Word, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.sequence()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.syntax("')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.sequence()?;
                self.skip_ws();
                if self.peek() != Some(b',') {
                    return Err(self.syntax("','"));
                }
                self.pos += 1;
                let v = self.sequence()?;
                self.skip_ws();
                if self.peek() != Some(b']') {
                    return Err(self.syntax("']'"));
                }
                self.pos += 1;
                Ok(commutator(&u, &v))
            }
            Some(c) if c.is_ascii_alphabetic() => self.symbol(),
            _ => Err(self.syntax("generator, '(' or '['")),
        }
    }

    fn symbol(&mut self) -> Result<Word, WordError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        if let Some(end) = self.index_suffix_end() {
            self.pos = end;
        }
        let name = &self.text[start..self.pos];
        if name == "e" {
            return Ok(Word::identity());
        }
        match (self.resolve)(name) {
            Some(sym) => Ok(Word::generator(sym)),
            None => Err(WordError::UnknownGenerator(name.to_owned())),
        }
    }

    /// If the input at `pos` is `[digits(,digits)*]`, returns the position
    /// just past the closing bracket.
    fn index_suffix_end(&self) -> Option<usize> {
        if self.peek() != Some(b'[') {
            return None;
        }
        let mut k = self.pos + 1;
        let mut need_digit = true;
        while k < self.src.len() {
            let c = self.src[k];
            if c.is_ascii_digit() {
                need_digit = false;
            } else if c == b',' && !need_digit {
                need_digit = true;
            } else if c == b']' && !need_digit {
                return Some(k + 1);
            } else {
                return None;
            }
            k += 1;
        }
        None
    }
}
