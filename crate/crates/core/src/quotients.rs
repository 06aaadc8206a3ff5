//! Finite-quotient fingerprints: abelianization and homomorphism counts into
//! a catalog of small permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactmat::{cokernel_invariants, IntMatrix};
use crate::presentation::{GroupPresentation, Word};

pub const MAX_DEGREE: usize = 32;
pub const ORDER_LIMIT: usize = 10_000;
/// Largest group order with a stored multiplication table.
pub const TABLE_LIMIT: usize = 1024;
pub const HOM_ORDER_LIMIT: usize = 100;
pub const HOM_GENERATOR_LIMIT: usize = 12;
pub const SEARCH_NODE_LIMIT: u64 = 200_000_000;

const DEFAULT_CATALOG: &str = include_str!("../data/default_catalog.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("catalog line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("group {id}: declared order {declared}, generated order {actual}")]
    OrderMismatch { id: String, declared: usize, actual: usize },
    #[error("group {id}: closure exceeds {limit} elements")]
    TooLarge { id: String, limit: usize },
    #[error("homomorphism count needs |G| <= {HOM_ORDER_LIMIT}, group {id} has order {order}")]
    GroupTooLarge { id: String, order: usize },
    #[error("homomorphism count supports at most {HOM_GENERATOR_LIMIT} generators, presentation has {0}")]
    TooManyGenerators(usize),
    #[error("homomorphism count into {0} exceeded the search budget")]
    SearchBudget(String),
    #[error("homomorphism count into {0} overflows 128 bits")]
    Overflow(String),
    #[error("cannot read catalog: {0}")]
    Io(String),
}

impl QuotientError {
    /// Errors raised by a resource guard rather than malformed input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            QuotientError::TooLarge { .. }
                | QuotientError::GroupTooLarge { .. }
                | QuotientError::TooManyGenerators(_)
                | QuotientError::SearchBudget(_)
                | QuotientError::Overflow(_)
        )
    }
}

/// Permutation of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    /// Parses `(1 2)(3 4 5)` style cycle notation with 1-based points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, String> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| format!("expected '(' at {:?}", rest))?;
            let close = body.find(')').ok_or("unclosed cycle")?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| format!("bad point {:?}", s))?;
                    if p == 0 || p > degree {
                        return Err(format!("point {} outside 1..={}", p, degree));
                    }
                    if std::mem::replace(&mut used[p - 1], true) {
                        return Err(format!("point {} repeated", p));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<usize>, String>>()?;
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u8;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Images of the points of `self` followed by those of `other`, shifted.
    pub fn disjoint_union(&self, other: &Perm) -> Perm {
        let shift = self.0.len() as u8;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + shift)).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push((j + 1).to_string());
                j = self.0[j] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Permutation group with its elements enumerated; element 0 is the
/// identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub id: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    elements: Vec<Perm>,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_orders: Vec<u32>,
}

impl FiniteGroup {
    pub fn from_permutations(id: &str, degree: usize, generators: Vec<Perm>) -> Result<Self, QuotientError> {
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in &generators {
                let next = elements[i].then(g);
                if !index.contains_key(&next) {
                    if elements.len() == ORDER_LIMIT {
                        return Err(QuotientError::TooLarge {
                            id: id.to_string(),
                            limit: ORDER_LIMIT,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            i += 1;
        }

        let n = elements.len();
        let (mut table, mut inverse, mut element_orders) = (Vec::new(), Vec::new(), Vec::new());
        if n <= TABLE_LIMIT {
            table = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    table.push(index[&a.then(b)] as u16);
                }
            }
            inverse = (0..n)
                .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("finite group") as u16)
                .collect();
            element_orders = (0..n)
                .map(|a| {
                    let (mut x, mut k) = (a, 1u32);
                    while x != 0 {
                        x = table[x * n + a] as usize;
                        k += 1;
                    }
                    k
                })
                .collect();
        }
        Ok(FiniteGroup {
            id: id.to_string(),
            degree,
            generators,
            elements,
            table,
            inverse,
            element_orders,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let images = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        Self::from_permutations(&format!("Z{}", n), n, vec![Perm(images)]).expect("small cyclic group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    fn has_table(&self) -> bool {
        !self.table.is_empty()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order() + b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    pub fn element_order(&self, a: u16) -> u32 {
        self.element_orders[a as usize]
    }

    pub fn pow(&self, a: u16, e: i64) -> u16 {
        let n = self.element_order(a) as i64;
        let mut acc = 0u16;
        for _ in 0..e.rem_euclid(n) {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order() as u16;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup, QuotientError> {
        let left_id = Perm::identity(other.degree);
        let right_id = Perm::identity(self.degree);
        let mut gens: Vec<Perm> = self.generators.iter().map(|g| g.disjoint_union(&left_id)).collect();
        gens.extend(other.generators.iter().map(|g| right_id.disjoint_union(g)));
        FiniteGroup::from_permutations(
            &format!("{}x{}", self.id, other.id),
            self.degree + other.degree,
            gens,
        )
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.degree == other.degree && self.generators == other.generators
    }
}

/// Parses a catalog: `group <id> <order> degree <n>` followed by `gen`
/// lines in cycle notation; `#` starts a comment.
pub fn parse_catalog(text: &str) -> Result<Vec<FiniteGroup>, QuotientError> {
    struct Pending {
        id: String,
        order: usize,
        degree: usize,
        gens: Vec<Perm>,
    }
    fn finish(p: Pending, out: &mut Vec<FiniteGroup>) -> Result<(), QuotientError> {
        let g = FiniteGroup::from_permutations(&p.id, p.degree, p.gens)?;
        if g.order() != p.order {
            return Err(QuotientError::OrderMismatch {
                id: p.id,
                declared: p.order,
                actual: g.order(),
            });
        }
        out.push(g);
        Ok(())
    }

    let mut out = Vec::new();
    let mut pending: Option<Pending> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let err = |message: String| QuotientError::Parse {
            line: lineno + 1,
            message,
        };
        if line.is_empty() {
            if let Some(p) = pending.take() {
                finish(p, &mut out)?;
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("group ") {
            if let Some(p) = pending.take() {
                finish(p, &mut out)?;
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let [id, order, "degree", degree] = fields[..] else {
                return Err(err(format!("expected 'group <id> <order> degree <n>', got {:?}", line)));
            };
            let order = order.parse().map_err(|_| err(format!("bad order {:?}", order)))?;
            let degree: usize = degree.parse().map_err(|_| err(format!("bad degree {:?}", degree)))?;
            if degree == 0 || degree > MAX_DEGREE {
                return Err(err(format!("degree {} outside 1..={}", degree, MAX_DEGREE)));
            }
            pending = Some(Pending {
                id: id.to_string(),
                order,
                degree,
                gens: Vec::new(),
            });
        } else if let Some(rest) = line.strip_prefix("gen") {
            let p = pending.as_mut().ok_or_else(|| err("generator outside a group block".into()))?;
            p.gens.push(Perm::parse_cycles(rest, p.degree).map_err(err)?);
        } else {
            return Err(err(format!("unrecognised line {:?}", line)));
        }
    }
    if let Some(p) = pending.take() {
        finish(p, &mut out)?;
    }
    Ok(out)
}

pub fn load_catalog(path: &Path) -> Result<Vec<FiniteGroup>, QuotientError> {
    let text = std::fs::read_to_string(path).map_err(|e| QuotientError::Io(format!("{}: {}", path.display(), e)))?;
    parse_catalog(&text)
}

pub fn default_catalog() -> Vec<FiniteGroup> {
    parse_catalog(DEFAULT_CATALOG).expect("shipped catalog is well formed")
}

pub fn default_catalog_text() -> &'static str {
    DEFAULT_CATALOG
}

/// Invariant factors of the abelianization; free factors are `0`.
pub fn abelianization(p: &GroupPresentation) -> Vec<BigInt> {
    let n = p.generators.len();
    let mut m = IntMatrix::zeros(p.relators.len(), n);
    for (i, r) in p.relators.iter().enumerate() {
        for g in 0..n {
            m.set(i, g, BigInt::from(r.exponent_sum(g)));
        }
    }
    cokernel_invariants(&m, n).expect("matrix has one column per generator")
}

fn eval(g: &FiniteGroup, w: &Word, img: &[u16]) -> u16 {
    w.syllables()
        .iter()
        .fold(0u16, |acc, &(x, e)| g.mul(acc, g.pow(img[x], e)))
}

/// Validated use of a presentation's surface tail.
struct TailPlan {
    pairs: Vec<(usize, usize)>,
    prefix: Word,
    suffix: Word,
    /// Relators constraining a single tail generator, indexed by generator.
    local: HashMap<usize, Vec<usize>>,
    /// Non-tail generators those relators mention.
    deps: Vec<usize>,
}

fn plan_tail(p: &GroupPresentation) -> Option<TailPlan> {
    let tail = p.surface_tail.as_ref()?;
    let long = p.relators.get(tail.relator)?;
    let mut block = Word::new();
    for &(u, v) in &tail.pairs {
        block.extend(&Word::commutator(u, v));
    }
    let tail_gens: Vec<usize> = tail.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut distinct = tail_gens.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != tail_gens.len() || distinct.iter().any(|&g| g >= p.generators.len()) {
        return None;
    }

    let syl = long.syllables();
    let b = block.syllables();
    let start = (0..=syl.len().checked_sub(b.len())?).find(|&s| &syl[s..s + b.len()] == b)?;
    let prefix = Word::from_syllables(&syl[..start]);
    let suffix = Word::from_syllables(&syl[start + b.len()..]);
    if prefix.generators().chain(suffix.generators()).any(|g| tail_gens.contains(&g)) {
        return None;
    }

    let mut local: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut deps = Vec::new();
    for (i, r) in p.relators.iter().enumerate() {
        if i == tail.relator {
            continue;
        }
        let mut mentioned: Vec<usize> = r.generators().filter(|g| tail_gens.contains(g)).collect();
        mentioned.sort_unstable();
        mentioned.dedup();
        match mentioned[..] {
            [] => {}
            [y] => {
                local.entry(y).or_default().push(i);
                deps.extend(r.generators().filter(|g| !tail_gens.contains(g)));
            }
            _ => return None,
        }
    }
    deps.sort_unstable();
    deps.dedup();
    Some(TailPlan {
        pairs: tail.pairs.clone(),
        prefix,
        suffix,
        local,
        deps,
    })
}

struct Search<'a> {
    p: &'a GroupPresentation,
    g: &'a FiniteGroup,
    order: Vec<usize>,
    /// Relators to check once `order[depth]` has been assigned.
    checks: Vec<Vec<usize>>,
    tail: Option<TailPlan>,
    cache: HashMap<Vec<u16>, Vec<u128>>,
    img: Vec<u16>,
    nodes: u64,
}

impl Search<'_> {
    fn overflow(&self) -> QuotientError {
        QuotientError::Overflow(self.g.id.clone())
    }

    /// Number of ways to complete the assignment with the tail generators.
    fn tail_distribution(&self, plan: &TailPlan) -> Result<Vec<u128>, QuotientError> {
        let n = self.g.order();
        let mut img = self.img.clone();
        let mut allowed = |y: usize| -> Vec<u16> {
            let rels = plan.local.get(&y).map(Vec::as_slice).unwrap_or(&[]);
            (0..n as u16)
                .filter(|&x| {
                    img[y] = x;
                    rels.iter().all(|&r| eval(self.g, &self.p.relators[r], &img) == 0)
                })
                .collect()
        };
        let mut dist = vec![0u128; n];
        dist[0] = 1;
        for &(u, v) in &plan.pairs {
            let (su, sv) = (allowed(u), allowed(v));
            let mut comm = vec![0u128; n];
            for &a in &su {
                for &b in &sv {
                    let c = self.g.mul(self.g.mul(a, b), self.g.mul(self.g.inv(a), self.g.inv(b)));
                    comm[c as usize] += 1;
                }
            }
            let mut next = vec![0u128; n];
            for (x, &dx) in dist.iter().enumerate() {
                if dx == 0 {
                    continue;
                }
                for (y, &cy) in comm.iter().enumerate() {
                    if cy == 0 {
                        continue;
                    }
                    let z = self.g.mul(x as u16, y as u16) as usize;
                    let term = dx.checked_mul(cy).ok_or_else(|| self.overflow())?;
                    next[z] = next[z].checked_add(term).ok_or_else(|| self.overflow())?;
                }
            }
            dist = next;
        }
        Ok(dist)
    }

    fn leaf(&mut self) -> Result<u128, QuotientError> {
        let Some(plan) = self.tail.take() else {
            return Ok(1);
        };
        let key: Vec<u16> = plan.deps.iter().map(|&d| self.img[d]).collect();
        if !self.cache.contains_key(&key) {
            let dist = self.tail_distribution(&plan)?;
            self.cache.insert(key.clone(), dist);
        }
        // prefix · block · suffix = 1  ⇔  block = prefix⁻¹ · suffix⁻¹
        let pre = eval(self.g, &plan.prefix, &self.img);
        let suf = eval(self.g, &plan.suffix, &self.img);
        let target = self.g.mul(self.g.inv(pre), self.g.inv(suf));
        let count = self.cache[&key][target as usize];
        self.tail = Some(plan);
        Ok(count)
    }

    fn run(&mut self, depth: usize) -> Result<u128, QuotientError> {
        if depth == self.order.len() {
            return self.leaf();
        }
        let gen = self.order[depth];
        let mut total = 0u128;
        for x in 0..self.g.order() as u16 {
            self.nodes += 1;
            if self.nodes > SEARCH_NODE_LIMIT {
                return Err(QuotientError::SearchBudget(self.g.id.clone()));
            }
            self.img[gen] = x;
            let ok = self.checks[depth]
                .iter()
                .all(|&r| eval(self.g, &self.p.relators[r], &self.img) == 0);
            if ok {
                let sub = self.run(depth + 1)?;
                total = total.checked_add(sub).ok_or_else(|| self.overflow())?;
            }
        }
        Ok(total)
    }
}

/// Exact number of homomorphisms from the presented group to `g`.
///
/// Generators are assigned most-constrained first; relators are checked as
/// soon as all their generators have images. When the presentation carries a
/// valid surface tail, the tail pairs are counted by convolving commutator
/// distributions.
pub fn hom_count(p: &GroupPresentation, g: &FiniteGroup) -> Result<u128, QuotientError> {
    if g.order() > HOM_ORDER_LIMIT || !g.has_table() {
        return Err(QuotientError::GroupTooLarge {
            id: g.id.clone(),
            order: g.order(),
        });
    }
    let n = p.generators.len();
    if n > HOM_GENERATOR_LIMIT {
        return Err(QuotientError::TooManyGenerators(n));
    }
    let tail = plan_tail(p);
    let tail_gens: Vec<usize> = tail
        .as_ref()
        .map(|t| t.pairs.iter().flat_map(|&(u, v)| [u, v]).collect())
        .unwrap_or_default();

    let mentions = |x: usize| p.relators.iter().filter(|r| r.generators().any(|y| y == x)).count();
    let mut order: Vec<usize> = (0..n).filter(|x| !tail_gens.contains(x)).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(mentions(x)));

    let mut checks = vec![Vec::new(); order.len()];
    for (i, r) in p.relators.iter().enumerate() {
        if r.generators().any(|x| tail_gens.contains(&x)) {
            continue;
        }
        if let Some(depth) = r.generators().map(|x| order.iter().position(|&y| y == x).unwrap()).max() {
            checks[depth].push(i);
        }
    }
    let mut search = Search {
        p,
        g,
        order,
        checks,
        tail,
        cache: HashMap::new(),
        img: vec![0; n],
        nodes: 0,
    };
    search.run(0)
}

/// Homomorphism counts over a catalog, in catalog order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpectrum {
    pub entries: Vec<(String, Result<u128, QuotientError>)>,
}

impl QuotientSpectrum {
    pub fn counts(&self) -> impl Iterator<Item = (&str, Option<u128>)> {
        self.entries.iter().map(|(id, c)| (id.as_str(), c.as_ref().ok().copied()))
    }

    pub fn first_guard_error(&self) -> Option<&QuotientError> {
        self.entries.iter().find_map(|(_, c)| c.as_ref().err())
    }
}

pub fn census(p: &GroupPresentation, catalog: &[FiniteGroup]) -> QuotientSpectrum {
    QuotientSpectrum {
        entries: catalog.iter().map(|g| (g.id.clone(), hom_count(p, g))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_abelian(rank: usize) -> GroupPresentation {
        let generators = (0..rank).map(|i| format!("a{}", i)).collect();
        let mut relators = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                relators.push(Word::commutator(i, j));
            }
        }
        GroupPresentation::new(generators, relators)
    }

    #[test]
    fn parse_cycle_notation() {
        let p = Perm::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(Perm::parse_cycles("(1 2 1)", 3).unwrap_err().contains("repeated"));
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
        assert!(Perm::parse_cycles("(1 2", 3).is_err());
    }

    #[test]
    fn catalog_parsing() {
        let groups = parse_catalog("# test\ngroup S3 6 degree 3\ngen (1 2)\ngen (1 2 3)\n\ngroup Q8 8 degree 8\ngen (1 2 3 4)(5 6 7 8)\ngen (1 5 3 7)(2 8 4 6)\n").unwrap();
        assert_eq!(groups.iter().map(FiniteGroup::order).collect::<Vec<_>>(), vec![6, 8]);
        assert!(!groups[1].is_abelian());
        assert!(matches!(
            parse_catalog("group bad 6 degree 3\ngen (1 2 2)\n"),
            Err(QuotientError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_catalog("group S3 7 degree 3\ngen (1 2)\ngen (1 2 3)\n"),
            Err(QuotientError::OrderMismatch { actual: 6, .. })
        ));
        assert!(parse_catalog("gen (1 2)\n").is_err());
        assert!(parse_catalog("group X 2 degree 40\n").is_err());
    }

    #[test]
    fn default_catalog_orders() {
        let cat = default_catalog();
        assert_eq!(cat.len(), 42);
        let find = |id: &str| cat.iter().find(|g| g.id == id).unwrap();
        assert_eq!(find("Heis27").order(), 27);
        assert!(!find("Heis27").is_abelian());
        assert!(find("Heis27").elements().iter().enumerate().all(|(i, _)| {
            let e = find("Heis27").element_order(i as u16);
            e == 1 || e == 3
        }));
        assert_eq!(find("Z7:Z3").order(), 21);
        assert_eq!(find("F20").order(), 20);
        assert_eq!(find("D10").order(), 10);
        assert_eq!(find("Z25").order(), 25);
    }

    #[test]
    fn closure_guard() {
        let big = vec![
            Perm::parse_cycles("(1 2)", 9).unwrap(),
            Perm::parse_cycles("(1 2 3 4 5 6 7 8 9)", 9).unwrap(),
        ];
        assert!(matches!(
            FiniteGroup::from_permutations("S9", 9, big),
            Err(QuotientError::TooLarge { .. })
        ));
    }

    #[test]
    fn abelianization_examples() {
        let zero = BigInt::from(0);
        assert_eq!(abelianization(&GroupPresentation::surface_group(2)), vec![zero.clone(); 4]);
        let cyclic = GroupPresentation::new(vec!["x".into()], vec![Word::from_syllables(&[(0, 5)])]);
        assert_eq!(abelianization(&cyclic), vec![BigInt::from(5)]);
    }

    #[test]
    fn hom_count_examples() {
        let trivial = FiniteGroup::cyclic(1);
        assert_eq!(hom_count(&GroupPresentation::surface_group(2), &trivial).unwrap(), 1);
        for n in 2..6 {
            let z = FiniteGroup::cyclic(n);
            assert_eq!(hom_count(&free_abelian(2), &z).unwrap(), (n * n) as u128);
        }
        assert_eq!(hom_count(&GroupPresentation::surface_group(2), &FiniteGroup::cyclic(2)).unwrap(), 16);
    }

    #[test]
    fn tail_agrees_with_plain_search() {
        let cat = default_catalog();
        let with_tail = GroupPresentation::surface_group(2);
        let mut plain = with_tail.clone();
        plain.surface_tail = None;
        for g in cat.iter().filter(|g| g.order() <= 12) {
            assert_eq!(hom_count(&with_tail, g).unwrap(), hom_count(&plain, g).unwrap(), "{}", g.id);
        }
    }

    #[test]
    fn guards() {
        let s5 = FiniteGroup::from_permutations(
            "S5",
            5,
            vec![Perm::parse_cycles("(1 2)", 5).unwrap(), Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            hom_count(&free_abelian(2), &s5),
            Err(QuotientError::GroupTooLarge { order: 120, .. })
        ));
        assert!(matches!(
            hom_count(&free_abelian(13), &FiniteGroup::cyclic(2)),
            Err(QuotientError::TooManyGenerators(13))
        ));
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let p = z2.direct_product(&z3).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
    }
}
