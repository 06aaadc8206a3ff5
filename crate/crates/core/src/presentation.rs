//! Finite group presentations as generator names plus relator words.

use std::fmt;

/// A word in the free group: `(generator index, nonzero exponent)` pairs,
/// freely reduced between neighbours.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_syllables(syllables: &[(usize, i64)]) -> Self {
        let mut w = Word::new();
        for &(g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn commutator(a: usize, b: usize) -> Self {
        Word::from_syllables(&[(a, 1), (b, 1), (a, -1), (b, -1)])
    }

    pub fn push(&mut self, generator: usize, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == generator {
                last.1 += exponent;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((generator, exponent));
    }

    pub fn extend(&mut self, other: &Word) {
        for &(g, e) in &other.0 {
            self.push(g, e);
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(g, _)| g)
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0.iter().filter(|&&(g, _)| g == generator).map(|&(_, e)| e).sum()
    }
}

/// Marks generator pairs `(u_j, v_j)` whose commutators appear as one
/// contiguous block `[u_1,v_1]⋯[u_g,v_g]` inside relator `relator`, with each
/// other relator mentioning at most one of these generators. Homomorphism
/// counting uses this to convolve over commutator values instead of
/// enumerating every tuple. The claim is re-checked before it is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTail {
    pub relator: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub surface_tail: Option<SurfaceTail>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        GroupPresentation {
            generators,
            relators,
            surface_tail: None,
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Every relator only refers to declared generators.
    pub fn is_well_formed(&self) -> bool {
        self.relators
            .iter()
            .all(|r| r.generators().all(|g| g < self.generators.len()))
    }

    /// Relator in text form, e.g. `x1^5 l`; the empty word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generators[g];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Surface group `⟨u_1, v_1, ..., u_g, v_g | [u_1,v_1]⋯[u_g,v_g]⟩`.
    pub fn surface_group(genus: usize) -> Self {
        let mut generators = Vec::new();
        let mut pairs = Vec::new();
        let mut rel = Word::new();
        for j in 1..=genus {
            generators.push(format!("u{}", j));
            generators.push(format!("v{}", j));
            let (u, v) = (2 * j - 2, 2 * j - 1);
            pairs.push((u, v));
            rel.extend(&Word::commutator(u, v));
        }
        GroupPresentation {
            generators,
            relators: vec![rel],
            surface_tail: (genus > 0).then_some(SurfaceTail { relator: 0, pairs }),
        }
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_reduce_freely() {
        let mut w = Word::from_syllables(&[(0, 2), (1, 1)]);
        w.push(1, -1);
        assert_eq!(w.syllables(), &[(0, 2)]);
        w.push(0, 3);
        assert_eq!(w.syllables(), &[(0, 5)]);
        w.push(2, 0);
        assert_eq!(w.syllables(), &[(0, 5)]);
        assert_eq!(Word::commutator(0, 1).exponent_sum(0), 0);
    }

    #[test]
    fn text_format() {
        let p = GroupPresentation::new(
            vec!["x1".into(), "l".into()],
            vec![Word::from_syllables(&[(0, 5), (1, 1)]), Word::new()],
        );
        assert_eq!(p.format_word(&p.relators[0]), "x1^5 l");
        assert_eq!(p.format_word(&p.relators[1]), "1");
        assert!(p.is_well_formed());
    }

    #[test]
    fn surface_group_shape() {
        let p = GroupPresentation::surface_group(2);
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.format_word(&p.relators[0]), "u1 v1 u1^-1 v1^-1 u2 v2 u2^-1 v2^-1");
    }
}
