//! Permutations of `[n]`, enumerated subgroups, the vertex map and the
//! coordinate action of `S_n` on permutahedron vertices.
//!
//! Indices are 0-based throughout the API: a permutation of `[n]` maps
//! `0..n` to itself. The *text* formats (`"[2,3,1]"` one-line form and
//! `"(1 2 3)(4 5)"` cycle form) are 1-based, matching the usual written
//! convention, and are converted on parse/emit.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::exactnum::{RatVector, Rational};
use crate::{Error, DEFAULT_ENUMERATION_CAP};

/// A permutation in one-line notation: `images[v]` is the image of `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image sequence, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {img} out of range for n = {n}"),
                });
            }
            if seen[img] {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {img} repeated"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `[n]` from disjoint cycles (0-based entries).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::InvalidPermutation {
                        reason: format!("cycle entry out of range for n = {n}"),
                    });
                }
                if touched[from] {
                    return Err(Error::InvalidPermutation {
                        reason: format!("element {} appears in two cycles", from + 1),
                    });
                }
                touched[from] = true;
                images[from] = to;
            }
        }
        Permutation::from_images(images)
    }

    /// The 3-cycle `a -> b -> c -> a`.
    pub fn three_cycle(n: usize, a: usize, b: usize, c: usize) -> Result<Self, Error> {
        Permutation::from_cycles(n, &[vec![a, b, c]])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &img)| v == img)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.n()];
        for (v, &img) in self.images.iter().enumerate() {
            images[img] = v;
        }
        Permutation { images }
    }

    /// Composition `self ∘ other`: applies `other` first. Both permutations
    /// must act on the same ground set.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations over different ground sets"
        );
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// Nontrivial cycles, each rotated to start at its smallest element and
    /// sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn is_even(&self) -> bool {
        let moved: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        moved.is_multiple_of(2)
    }

    /// True when the permutation is a single 3-cycle.
    pub fn is_three_cycle(&self) -> bool {
        let cycles = self.cycles();
        cycles.len() == 1 && cycles[0].len() == 3
    }

    /// Lexicographic rank of the permutation among all of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut factorial = 1usize;
        for t in (0..n).rev() {
            let smaller = self.images[t + 1..]
                .iter()
                .filter(|&&u| u < self.images[t])
                .count();
            rank += smaller * factorial;
            factorial *= n - t;
        }
        rank
    }

    /// All permutations of `[n]` in lexicographic order of their one-line
    /// notation. Refuses `n` beyond the enumeration cap.
    pub fn enumerate(n: usize) -> Result<Vec<Permutation>, Error> {
        check_cap(n, "permutation enumeration")?;
        let mut all = Vec::with_capacity(factorial(n));
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            all.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        Ok(all)
    }

    /// Parses either cycle form `"(1 2 3)(4 5)"` or one-line form
    /// `"[2,3,1,5,4]"` (both 1-based) as a permutation of `[n]`.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let text = text.trim();
        if text.starts_with('[') {
            let inner = text
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::InvalidPermutation {
                    reason: "unterminated one-line form".into(),
                })?;
            let mut images = Vec::new();
            for piece in inner.split(',') {
                let piece = piece.trim();
                let value: usize = piece.parse().map_err(|_| Error::InvalidPermutation {
                    reason: format!("bad image {piece:?}"),
                })?;
                if value == 0 {
                    return Err(Error::InvalidPermutation {
                        reason: "one-line form is 1-based".into(),
                    });
                }
                images.push(value - 1);
            }
            if images.len() != n {
                return Err(Error::InvalidPermutation {
                    reason: format!("one-line form has {} entries, expected {n}", images.len()),
                });
            }
            Permutation::from_images(images)
        } else if text.starts_with('(') || text == "()" {
            let mut cycles = Vec::new();
            let mut rest = text;
            while !rest.is_empty() {
                let Some(stripped) = rest.strip_prefix('(') else {
                    return Err(Error::InvalidPermutation {
                        reason: format!("expected '(' at {rest:?}"),
                    });
                };
                let Some(close) = stripped.find(')') else {
                    return Err(Error::InvalidPermutation {
                        reason: "unterminated cycle".into(),
                    });
                };
                let body = &stripped[..close];
                let mut cycle = Vec::new();
                for piece in body.split(|c: char| c == ',' || c.is_whitespace()) {
                    if piece.is_empty() {
                        continue;
                    }
                    let value: usize = piece.parse().map_err(|_| Error::InvalidPermutation {
                        reason: format!("bad cycle entry {piece:?}"),
                    })?;
                    if value == 0 || value > n {
                        return Err(Error::InvalidPermutation {
                            reason: format!("cycle entry {value} out of range for n = {n}"),
                        });
                    }
                    cycle.push(value - 1);
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                rest = stripped[close + 1..].trim_start();
            }
            Permutation::from_cycles(n, &cycles)
        } else {
            Err(Error::InvalidPermutation {
                reason: format!("unrecognised permutation syntax {text:?}"),
            })
        }
    }
}

impl fmt::Display for Permutation {
    /// One-line form, 1-based: `[2,3,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", img + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn next_permutation(items: &mut [usize]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| items[i] < items[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check_cap(n: usize, context: &str) -> Result<(), Error> {
    if n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            context: context.into(),
            requested: n,
            cap: DEFAULT_ENUMERATION_CAP,
            estimate: format!("would enumerate n! > {}", factorial(DEFAULT_ENUMERATION_CAP)),
        });
    }
    Ok(())
}

/// An explicitly enumerated set of permutations of `[n]`, verified on
/// construction to contain the identity and to be closed under composition
/// (and therefore under inverses, the set being finite).
pub struct PermSet {
    n: usize,
    elements: Vec<Permutation>,
    rank_index: Vec<u32>,
    vertex_action: OnceLock<Vec<Vec<u32>>>,
}

const ABSENT: u32 = u32::MAX;

impl PermSet {
    pub fn new(n: usize, elements: Vec<Permutation>) -> Result<Self, Error> {
        check_cap(n, "permutation set")?;
        let mut elements = elements;
        for p in &elements {
            if p.n() != n {
                return Err(Error::NotAGroup {
                    reason: format!("element {p} is over [{}], expected [{n}]", p.n()),
                });
            }
        }
        elements.sort_by(|a, b| a.images.cmp(&b.images));
        elements.dedup();

        let mut rank_index = vec![ABSENT; factorial(n)];
        for (i, p) in elements.iter().enumerate() {
            rank_index[p.lex_rank()] = i as u32;
        }
        if rank_index[Permutation::identity(n).lex_rank()] == ABSENT {
            return Err(Error::NotAGroup {
                reason: "identity missing".into(),
            });
        }
        for a in &elements {
            for b in &elements {
                let product = a.compose(b);
                if rank_index[product.lex_rank()] == ABSENT {
                    return Err(Error::NotAGroup {
                        reason: format!("product {a} * {b} = {product} missing"),
                    });
                }
            }
        }
        Ok(PermSet {
            n,
            elements,
            rank_index,
            vertex_action: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.n() == self.n && self.rank_index[p.lex_rank()] != ABSENT
    }

    pub fn is_subset_of(&self, other: &PermSet) -> bool {
        self.n == other.n && self.elements.iter().all(|p| other.contains(p))
    }

    /// Index of the subgroup in the full symmetric group: `n! / |self|`.
    pub fn index_in_symmetric(&self) -> usize {
        factorial(self.n) / self.len()
    }

    /// For each element `pi` (in element order) the map on vertex indices:
    /// entry `k` is the lexicographic rank of `pi ∘ zeta_k`, i.e. the index
    /// of the vertex `pi.Λ(zeta_k)` in the fixed vertex enumeration.
    pub(crate) fn vertex_action(&self) -> &Vec<Vec<u32>> {
        self.vertex_action.get_or_init(|| {
            let all = Permutation::enumerate(self.n).expect("n was cap-checked on construction");
            self.elements
                .iter()
                .map(|p| {
                    all.iter()
                        .map(|zeta| p.compose(zeta).lex_rank() as u32)
                        .collect()
                })
                .collect()
        })
    }
}

impl Clone for PermSet {
    fn clone(&self) -> Self {
        PermSet {
            n: self.n,
            elements: self.elements.clone(),
            rank_index: self.rank_index.clone(),
            vertex_action: OnceLock::new(),
        }
    }
}

impl PartialEq for PermSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl Eq for PermSet {}

impl fmt::Debug for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermSet(n={}, |G|={})", self.n, self.elements.len())
    }
}

/// The vertex map: `Λ(zeta) = (zeta^{-1}(1), ..., zeta^{-1}(n))` as exact
/// rationals (1-based coordinate values).
pub fn lambda_vertex(zeta: &Permutation) -> RatVector {
    let inv = zeta.inverse();
    (0..zeta.n())
        .map(|v| Rational::from(inv.apply(v) + 1))
        .collect()
}

/// The coordinate action `(pi.x)_v = x_{pi^{-1}(v)}`; satisfies
/// `pi.Λ(zeta) = Λ(pi ∘ zeta)`.
pub fn act_on_vertex(pi: &Permutation, x: &RatVector) -> Result<RatVector, Error> {
    if x.dim() != pi.n() {
        return Err(Error::dim(format!(
            "vector of dim {} under permutation of [{}]",
            x.dim(),
            pi.n()
        )));
    }
    let inv = pi.inverse();
    Ok((0..pi.n()).map(|v| x[inv.apply(v)].clone()).collect())
}

/// Enumerates the subgroup generated by `gens` by breadth-first products.
pub fn enumerate_group(gens: &[Permutation], n: usize) -> Result<PermSet, Error> {
    check_cap(n, "group enumeration")?;
    for g in gens {
        if g.n() != n {
            return Err(Error::InvalidPermutation {
                reason: format!("generator {g} is over [{}], expected [{n}]", g.n()),
            });
        }
    }
    let mut present = vec![false; factorial(n)];
    let identity = Permutation::identity(n);
    present[identity.lex_rank()] = true;
    let mut elements = vec![identity];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let product = g.compose(&elements[i]);
            let rank = product.lex_rank();
            if !present[rank] {
                present[rank] = true;
                elements.push(product);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    PermSet::new(n, elements)
}

/// The full symmetric group `S_n` as an enumerated set.
pub fn symmetric_group(n: usize) -> Result<PermSet, Error> {
    PermSet::new(n, Permutation::enumerate(n)?)
}

/// The alternating group `A_n`: all even permutations of `[n]`.
pub fn alternating_group(n: usize) -> Result<PermSet, Error> {
    let elements = Permutation::enumerate(n)?
        .into_iter()
        .filter(Permutation::is_even)
        .collect();
    PermSet::new(n, elements)
}

/// `H*_w`: the even permutations of `[n]` mapping `{0, .., w-1}` to itself
/// (`w` counts the prefix, `1 <= w <= n-1`).
pub fn h_star_subgroup(w: usize, n: usize) -> Result<PermSet, Error> {
    if w == 0 || w >= n {
        return Err(Error::IndexOutOfRange {
            context: format!("H*_w requires 1 <= w <= n-1, got w = {w}, n = {n}"),
        });
    }
    let elements = Permutation::enumerate(n)?
        .into_iter()
        .filter(|p| p.is_even() && (0..w).all(|v| p.apply(v) < w))
        .collect();
    PermSet::new(n, elements)
}

/// Even permutations fixing every element of `W` pointwise.
pub fn pointwise_stabilizer_in_alternating(w_set: &[usize], n: usize) -> Result<PermSet, Error> {
    for &v in w_set {
        if v >= n {
            return Err(Error::IndexOutOfRange {
                context: format!("stabilized element {v} out of range for n = {n}"),
            });
        }
    }
    let elements = Permutation::enumerate(n)?
        .into_iter()
        .filter(|p| p.is_even() && w_set.iter().all(|&v| p.apply(v) == v))
        .collect();
    PermSet::new(n, elements)
}

/// The 3-cycle `rho_v = (v, v+1, v+2)` (0-based `v <= n-3`); always even.
pub fn rho_generator(v: usize, n: usize) -> Result<Permutation, Error> {
    if v + 2 >= n {
        return Err(Error::IndexOutOfRange {
            context: format!("rho_v requires v + 2 < n, got v = {v}, n = {n}"),
        });
    }
    Permutation::three_cycle(n, v, v + 1, v + 2)
}

/// All `rho_v` generators of `A_n`, in order of `v`.
pub fn rho_generators(n: usize) -> Result<Vec<Permutation>, Error> {
    (0..n.saturating_sub(2)).map(|v| rho_generator(v, n)).collect()
}

/// Total order on permutations by one-line notation.
pub fn lex_cmp(a: &Permutation, b: &Permutation) -> Ordering {
    a.images.cmp(&b.images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images_1based: &[usize]) -> Permutation {
        Permutation::from_images(images_1based.iter().map(|&v| v - 1).collect()).unwrap()
    }

    #[test]
    fn lambda_of_identity_is_sorted_vector() {
        for n in 1..=6 {
            let x = lambda_vertex(&Permutation::identity(n));
            let expected: RatVector = (1..=n as i64).map(Rational::from).collect();
            assert_eq!(x, expected);
        }
    }

    #[test]
    fn lambda_of_transposition_and_cycle() {
        let swap = Permutation::parse("(1 2)", 3).unwrap();
        assert_eq!(lambda_vertex(&swap), RatVector::from_ints(&[2, 1, 3]));
        let cycle = Permutation::parse("(1 2 3)", 4).unwrap();
        assert_eq!(lambda_vertex(&cycle), RatVector::from_ints(&[3, 1, 2, 4]));
    }

    #[test]
    fn action_relabels_coordinates() {
        let pi = Permutation::parse("(1 2)", 3).unwrap();
        let x = RatVector::from_ints(&[1, 2, 3]);
        assert_eq!(act_on_vertex(&pi, &x).unwrap(), RatVector::from_ints(&[2, 1, 3]));
        let id = Permutation::identity(3);
        assert_eq!(act_on_vertex(&id, &x).unwrap(), x);
        assert!(act_on_vertex(&pi, &RatVector::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn action_is_compatible_with_composition() {
        // Exhaustive over S_4: pi.Λ(zeta) = Λ(pi ∘ zeta) and
        // (pi sigma).x = pi.(sigma.x).
        let all = Permutation::enumerate(4).unwrap();
        for pi in &all {
            for zeta in &all {
                let lhs = act_on_vertex(pi, &lambda_vertex(zeta)).unwrap();
                assert_eq!(lhs, lambda_vertex(&pi.compose(zeta)));
            }
        }
        let x = RatVector::from_ints(&[3, 1, 4, 2]);
        for pi in &all {
            for sigma in &all {
                let lhs = act_on_vertex(&pi.compose(sigma), &x).unwrap();
                let rhs = act_on_vertex(pi, &act_on_vertex(sigma, &x).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn lambda_is_injective() {
        for n in 1..=6 {
            let all = Permutation::enumerate(n).unwrap();
            let mut vertices: Vec<RatVector> = all.iter().map(lambda_vertex).collect();
            vertices.sort_by(|a, b| a.entries().cmp(b.entries()));
            vertices.dedup();
            assert_eq!(vertices.len(), factorial(n));
        }
    }

    #[test]
    fn enumerate_is_lexicographic_and_ranked() {
        let all = Permutation::enumerate(5).unwrap();
        assert_eq!(all.len(), 120);
        for (k, p) in all.iter().enumerate() {
            assert_eq!(p.lex_rank(), k);
        }
        for pair in all.windows(2) {
            assert!(lex_cmp(&pair[0], &pair[1]) == Ordering::Less);
        }
    }

    #[test]
    fn generated_group_sizes() {
        let swap = Permutation::parse("(1 2)", 6).unwrap();
        let cycle = Permutation::parse("(1 2 3 4 5 6)", 6).unwrap();
        assert_eq!(enumerate_group(&[swap, cycle], 6).unwrap().len(), 720);

        assert_eq!(enumerate_group(&[], 4).unwrap().len(), 1);

        let rhos = rho_generators(5).unwrap();
        let gen = enumerate_group(&rhos, 5).unwrap();
        assert_eq!(gen.len(), 60);
        assert_eq!(gen, alternating_group(5).unwrap());
    }

    #[test]
    fn rho_generators_reach_alternating_group() {
        for n in 3..=7 {
            let gen = enumerate_group(&rho_generators(n).unwrap(), n).unwrap();
            assert_eq!(gen, alternating_group(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn alternating_group_sizes() {
        assert_eq!(alternating_group(2).unwrap().elements(), &[Permutation::identity(2)]);
        let a3 = alternating_group(3).unwrap();
        assert_eq!(a3.len(), 3);
        assert!(a3.contains(&Permutation::parse("(1 2 3)", 3).unwrap()));
        assert!(a3.contains(&Permutation::parse("(1 3 2)", 3).unwrap()));
        assert_eq!(alternating_group(6).unwrap().len(), 360);
        for n in 2..=7 {
            assert_eq!(alternating_group(n).unwrap().len(), factorial(n) / 2);
        }
    }

    #[test]
    fn h_star_sizes_match_closed_form() {
        assert_eq!(h_star_subgroup(2, 6).unwrap().len(), 24);
        assert_eq!(h_star_subgroup(1, 3).unwrap().len(), 1);
        for n in 3..=7 {
            for w in 1..n {
                let h = h_star_subgroup(w, n).unwrap();
                assert_eq!(h.len(), factorial(w) * factorial(n - w) / 2, "n={n} w={w}");
            }
        }
        assert!(h_star_subgroup(0, 5).is_err());
        assert!(h_star_subgroup(5, 5).is_err());
    }

    #[test]
    fn h_star_preimage_counts() {
        // |{pi in H*_w : pi^{-1}(t) = v}| = (w-1)!(n-w)!/2 for t, v < w.
        let (n, w) = (6, 3);
        let h = h_star_subgroup(w, n).unwrap();
        let expected = factorial(w - 1) * factorial(n - w) / 2;
        assert_eq!(expected, 6);
        for t in 0..w {
            for v in 0..w {
                let count = h
                    .iter()
                    .filter(|p| p.inverse().apply(t) == v)
                    .count();
                assert_eq!(count, expected, "t={t} v={v}");
            }
        }
    }

    #[test]
    fn pointwise_stabilizers() {
        assert_eq!(pointwise_stabilizer_in_alternating(&[], 4).unwrap().len(), 12);
        assert_eq!(pointwise_stabilizer_in_alternating(&[0], 4).unwrap().len(), 3);
        let full: Vec<usize> = (0..4).collect();
        assert_eq!(
            pointwise_stabilizer_in_alternating(&full, 4).unwrap().elements(),
            &[Permutation::identity(4)]
        );
    }

    #[test]
    fn rho_is_an_even_three_cycle() {
        let rho = rho_generator(0, 4).unwrap();
        assert_eq!(rho, perm(&[2, 3, 1, 4]));
        for n in 3..=7 {
            for v in 0..n - 2 {
                let rho = rho_generator(v, n).unwrap();
                assert!(rho.is_even());
                assert!(rho.is_three_cycle());
            }
        }
        assert!(rho_generator(2, 4).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Permutation::parse("[2,3,1,5,4]", 5).unwrap();
        assert_eq!(p.to_string(), "[2,3,1,5,4]");
        let q = Permutation::parse("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p, q);
        assert_eq!(Permutation::parse("()", 3).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse("[2,2,1]", 3).is_err());
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("[2,3,1]", 4).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn permset_rejects_non_groups() {
        let swap = Permutation::parse("(1 2)", 3).unwrap();
        let err = PermSet::new(3, vec![swap.clone()]);
        assert!(matches!(err, Err(Error::NotAGroup { .. })));
        let cycle = Permutation::parse("(1 2 3)", 3).unwrap();
        let err = PermSet::new(3, vec![Permutation::identity(3), cycle]);
        assert!(matches!(err, Err(Error::NotAGroup { .. })));
        assert!(PermSet::new(3, vec![Permutation::identity(3), swap]).is_ok());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = Permutation::enumerate(9);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn subgroup_index() {
        let stab = pointwise_stabilizer_in_alternating(&[0], 6).unwrap();
        assert_eq!(stab.len(), 60);
        assert_eq!(stab.index_in_symmetric(), 12);
        let a6 = alternating_group(6).unwrap();
        assert!(stab.is_subset_of(&a6));
    }
}
