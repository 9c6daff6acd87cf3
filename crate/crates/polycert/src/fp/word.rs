//! Words over involutory generators and presentations built from them.
//!
//! Every generator is an involution, so a word needs no inverse letters
//! and free reduction is just cascading cancellation of adjacent equal
//! letters. Words are stored reduced; a word that cancels away entirely
//! is the empty word.
//!
//! A presentation keeps its generator count and the list of reduced,
//! nonempty relators. The involution relators themselves reduce to the
//! empty word, so they are carried implicitly: they always hold by
//! convention, are counted by `relator_count`, and are written out
//! explicitly by the text format.

use std::fmt;
use std::io::Write;

use crate::error::{Error, Result};
use crate::group::GroupElement;

/// A freely reduced word in involutory generators, as generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    /// Builds a word, cancelling adjacent equal letters until none remain.
    pub fn new(letters: impl IntoIterator<Item = u8>) -> Word {
        let mut stack: Vec<u8> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// The alternating word (a b)^k.
    pub fn alternating(a: u8, b: u8, k: usize) -> Word {
        assert_ne!(a, b);
        Word {
            letters: [a, b].repeat(k),
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut out = Word::new([]);
        for _ in 0..k {
            out = out.concat(self);
        }
        out
    }

    /// Relabels every letter through `mapping` and re-reduces.
    pub fn map_letters(&self, mapping: &[u8]) -> Word {
        Word::new(self.letters.iter().map(|&l| mapping[l as usize]))
    }

    /// Evaluates the word left to right on concrete generators.
    pub fn evaluate<E: GroupElement>(&self, gens: &[E]) -> E {
        evaluate_letters(&self.letters, gens)
    }
}

/// Folds a letter sequence over concrete generators, left to right.
pub fn evaluate_letters<E: GroupElement>(letters: &[u8], gens: &[E]) -> E {
    assert!(!gens.is_empty(), "evaluation needs at least one generator");
    let mut acc = gens[0].identity_like();
    for &l in letters {
        acc = acc.op(&gens[l as usize]);
    }
    acc
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A finite presentation on involutory generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: usize,
    relators: Vec<Word>,
}

impl Presentation {
    /// Wraps explicit relators over `gens` generators. Letters must be in
    /// range; words that reduce to nothing are dropped since they assert
    /// nothing beyond the implicit involution relators.
    pub fn new(gens: usize, relators: Vec<Word>) -> Result<Presentation> {
        for w in &relators {
            if let Some(&bad) = w.letters().iter().find(|&&l| l as usize >= gens) {
                return Err(Error::InvalidPresentation(format!(
                    "relator uses generator {bad} but only {gens} generators exist"
                )));
            }
        }
        Ok(Presentation {
            gens,
            relators: relators.into_iter().filter(|w| !w.is_empty()).collect(),
        })
    }

    pub fn generator_count(&self) -> usize {
        self.gens
    }

    /// The explicit relators, each freely reduced and nonempty.
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Total relator count including the implicit involution relators,
    /// one per generator.
    pub fn relator_count(&self) -> usize {
        self.gens + self.relators.len()
    }

    /// Letter sequences of every defining relator: the involution words
    /// first, then the explicit relators.
    pub fn all_relator_letters(&self) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = (0..self.gens as u8).map(|g| vec![g, g]).collect();
        out.extend(self.relators.iter().map(|w| w.letters().to_vec()));
        out
    }

    /// Writes the text form: a `gens d` header, one relator per line as
    /// space-separated generator indices, involution relators included.
    pub fn write_text(&self, w: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
        writeln!(w, "gens {}", self.gens)?;
        for g in 0..self.gens {
            writeln!(w, "{g} {g}")?;
        }
        for rel in &self.relators {
            writeln!(w, "{rel}")?;
        }
        Ok(())
    }

    /// Parses the text form produced by `write_text`. Relator lines are
    /// freely reduced on read; lines that reduce to nothing (such as the
    /// involution relators) are absorbed into the implicit convention.
    pub fn parse_text(text: &str) -> Result<Presentation> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidPresentation("empty input".into()))?;
        let gens: usize = header
            .strip_prefix("gens ")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| {
                Error::InvalidPresentation(format!("expected `gens <count>` header, got {header:?}"))
            })?;
        let mut relators = Vec::new();
        for line in lines {
            let mut letters = Vec::new();
            for token in line.split_whitespace() {
                let l: usize = token.parse().map_err(|_| {
                    Error::InvalidPresentation(format!("bad generator index {token:?}"))
                })?;
                if l >= gens {
                    return Err(Error::InvalidPresentation(format!(
                        "generator index {l} out of range for {gens} generators"
                    )));
                }
                letters.push(l as u8);
            }
            relators.push(Word::new(letters));
        }
        Presentation::new(gens, relators)
    }
}
