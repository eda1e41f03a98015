//! Sections of an extension, the induced action on component functions,
//! isotropy groups, essential elements and the subgroup-witness search.
//!
//! A section assigns to every vertex `Λ(zeta)` of `Π_n` a point of the
//! extension projecting back to it. Sections are stored as explicit tables
//! over the fixed vertex enumeration (all `zeta` in lexicographic one-line
//! order), which is what the exhaustive checks quantify over.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::exactnum::{RatVector, Rational};
use crate::formulation::SubspaceExtension;
use crate::permgroup::{
    alternating_group, factorial, lambda_vertex, Permutation, PermSet,
};
use crate::Error;

/// A total map from the `n!` vertices of `Π_n` to points of `R^d`,
/// table-backed over the lexicographic vertex enumeration.
pub struct Section {
    n: usize,
    d: usize,
    table: Vec<RatVector>,
    classes: OnceLock<FingerprintClasses>,
    alt_ctx: OnceLock<AltContext>,
}

struct FingerprintClasses {
    class_of: Vec<usize>,
    /// Smallest member index per class, in class order.
    by_signature: BTreeMap<Vec<Rational>, usize>,
    members: Vec<Vec<usize>>,
}

struct AltContext {
    alt: PermSet,
    /// For each `v`, indices (into `alt`) of the elements fixing `v`.
    stabilizers: Vec<Vec<usize>>,
}

impl Section {
    pub fn from_table(n: usize, table: Vec<RatVector>) -> Result<Self, Error> {
        let expected = {
            // The cap check lives in Permutation::enumerate.
            Permutation::enumerate(n)?;
            factorial(n)
        };
        if table.len() != expected {
            return Err(Error::dim(format!(
                "section table has {} rows, expected n! = {expected}",
                table.len()
            )));
        }
        let d = table.first().map(RatVector::dim).unwrap_or(0);
        if d == 0 {
            return Err(Error::dim("section needs at least one component"));
        }
        for (k, row) in table.iter().enumerate() {
            if row.dim() != d {
                return Err(Error::dim(format!(
                    "section row {k} has dim {}, expected {d}",
                    row.dim()
                )));
            }
        }
        Ok(Section {
            n,
            d,
            table,
            classes: OnceLock::new(),
            alt_ctx: OnceLock::new(),
        })
    }

    /// Materializes a rule-backed section over the full vertex enumeration.
    pub fn from_fn(
        n: usize,
        f: impl Fn(&Permutation) -> RatVector,
    ) -> Result<Self, Error> {
        let table = Permutation::enumerate(n)?.iter().map(f).collect();
        Section::from_table(n, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }

    /// The section value at the vertex `Λ(zeta)`.
    pub fn value(&self, zeta: &Permutation) -> Result<&RatVector, Error> {
        if zeta.n() != self.n {
            return Err(Error::dim(format!(
                "zeta over [{}] against a section with n = {}",
                zeta.n(),
                self.n
            )));
        }
        Ok(&self.table[zeta.lex_rank()])
    }

    pub fn value_at(&self, vertex_rank: usize) -> &RatVector {
        &self.table[vertex_rank]
    }

    pub fn table(&self) -> &[RatVector] {
        &self.table
    }

    /// Vertex-index form of the action of `pi`: entry `k` is the rank of the
    /// vertex `pi.Λ(zeta_k)`.
    pub fn vertex_permutation(&self, pi: &Permutation) -> Result<Vec<usize>, Error> {
        if pi.n() != self.n {
            return Err(Error::dim("pi dimension vs section".to_string()));
        }
        Ok(Permutation::enumerate(self.n)?
            .iter()
            .map(|zeta| pi.compose(zeta).lex_rank())
            .collect())
    }

    /// The component function `s_j` as its value sequence over the fixed
    /// vertex enumeration.
    pub fn fingerprint(&self, j: usize) -> ComponentFingerprint {
        ComponentFingerprint {
            j,
            signature: self.table.iter().map(|row| row[j].clone()).collect(),
        }
    }

    /// Equivalence-class id of component `j`; two components share a class
    /// iff their functions agree on every vertex.
    pub fn component_class(&self, j: usize) -> usize {
        self.classes().class_of[j]
    }

    fn classes(&self) -> &FingerprintClasses {
        self.classes.get_or_init(|| {
            let mut by_signature: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
            let mut class_of = vec![0usize; self.d];
            let mut members: Vec<Vec<usize>> = Vec::new();
            for j in 0..self.d {
                let signature: Vec<Rational> =
                    self.table.iter().map(|row| row[j].clone()).collect();
                let next = members.len();
                let class = *by_signature.entry(signature).or_insert(next);
                if class == members.len() {
                    members.push(Vec::new());
                }
                class_of[j] = class;
                members[class].push(j);
            }
            FingerprintClasses {
                class_of,
                by_signature,
                members,
            }
        })
    }

    fn alt_ctx(&self) -> &AltContext {
        self.alt_ctx.get_or_init(|| {
            let alt = alternating_group(self.n).expect("n was cap-checked on construction");
            let stabilizers = (0..self.n)
                .map(|v| {
                    alt.iter()
                        .enumerate()
                        .filter(|(_, p)| p.apply(v) == v)
                        .map(|(i, _)| i)
                        .collect()
                })
                .collect();
            AltContext { alt, stabilizers }
        })
    }

    /// True iff `s_j(pi.x) = s_j(x)` for every vertex `x`, where `pi` is the
    /// group element at `elem_idx` of the context group's vertex action.
    fn invariant_under(&self, j: usize, action: &[u32]) -> bool {
        (0..self.table.len()).all(|k| self.table[action[k] as usize][j] == self.table[k][j])
    }
}

impl Clone for Section {
    fn clone(&self) -> Self {
        Section {
            n: self.n,
            d: self.d,
            table: self.table.clone(),
            classes: OnceLock::new(),
            alt_ctx: OnceLock::new(),
        }
    }
}

impl PartialEq for Section {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.table == other.table
    }
}

impl std::fmt::Debug for Section {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Section(n={}, d={}, {} vertices)",
            self.n,
            self.d,
            self.table.len()
        )
    }
}

/// The value sequence of one component function over the fixed vertex
/// enumeration. Equal signatures mean interchangeable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentFingerprint {
    pub j: usize,
    pub signature: Vec<Rational>,
}

/// For each listed generator `pi`, a variable permutation `kappa` with
/// `s(pi.x) = kappa.s(x)` on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSymmetryWitness {
    pairs: Vec<(Permutation, Permutation)>,
}

impl WeakSymmetryWitness {
    pub fn new(pairs: Vec<(Permutation, Permutation)>) -> Self {
        WeakSymmetryWitness { pairs }
    }

    pub fn pairs(&self) -> &[(Permutation, Permutation)] {
        &self.pairs
    }

    pub fn kappa_for(&self, pi: &Permutation) -> Option<&Permutation> {
        self.pairs
            .iter()
            .find(|(generator, _)| generator == pi)
            .map(|(_, kappa)| kappa)
    }

    /// Checks the defining equation of every listed pair against a section.
    pub fn verify(&self, s: &Section) -> Result<bool, Error> {
        for (pi, kappa) in &self.pairs {
            if !verify_weak_symmetry(s, pi, kappa)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The canonical section of the z-only Birkhoff extension: the vertex
/// `Λ(zeta)` maps to the permutation matrix of `zeta`
/// (`s(Λ(zeta))_{(i,v)} = 1` iff `zeta(i) = v`).
pub fn canonical_birkhoff_section(n: usize) -> Result<Section, Error> {
    Section::from_fn(n, |zeta| {
        let mut z = RatVector::zero(n * n);
        for i in 0..n {
            z[i * n + zeta.apply(i)] = Rational::one();
        }
        z
    })
}

/// True iff every section value is nonnegative, satisfies the affine rows
/// and projects back to its vertex.
pub fn verify_section(s: &Section, e: &SubspaceExtension) -> Result<bool, Error> {
    if s.dim() != e.dim() || s.n() != e.target_dim() {
        return Err(Error::dim(format!(
            "section (n={}, d={}) vs extension (m={}, d={})",
            s.n(),
            s.dim(),
            e.target_dim(),
            e.dim()
        )));
    }
    let vertices = Permutation::enumerate(s.n())?;
    for zeta in &vertices {
        let y = s.value(zeta)?;
        if !e.contains(y)? {
            return Ok(false);
        }
        if e.project(y)? != lambda_vertex(zeta) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the weak-symmetry equation `s(pi.x) = kappa.s(x)` exactly on
/// every vertex.
pub fn verify_weak_symmetry(
    s: &Section,
    pi: &Permutation,
    kappa: &Permutation,
) -> Result<bool, Error> {
    if kappa.n() != s.dim() {
        return Err(Error::dim("kappa dimension vs section".to_string()));
    }
    let action = s.vertex_permutation(pi)?;
    let kappa_inv = kappa.inverse();
    for k in 0..s.vertex_count() {
        let moved = &s.table()[action[k]];
        let here = &s.table()[k];
        for j in 0..s.dim() {
            if moved[j] != here[kappa_inv.apply(j)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For each generator, searches for a `kappa` matching the component
/// fingerprints of `x -> s(pi.x)` against those of `s`; ambiguity among
/// identical fingerprints is resolved by lowest-index matching. Returns a
/// witness iff every generator admits one.
pub fn derive_weak_symmetry_witness(
    s: &Section,
    generators: &[Permutation],
) -> Result<Option<WeakSymmetryWitness>, Error> {
    let classes = s.classes();
    let mut pairs = Vec::with_capacity(generators.len());
    for pi in generators {
        let action = s.vertex_permutation(pi)?;
        let mut next_in_class: Vec<usize> = vec![0; classes.members.len()];
        let mut kappa_inv = vec![usize::MAX; s.dim()];
        let mut ok = true;
        for j in 0..s.dim() {
            let moved_signature: Vec<Rational> = (0..s.vertex_count())
                .map(|k| s.table()[action[k]][j].clone())
                .collect();
            let Some(&class) = classes.by_signature.get(&moved_signature) else {
                ok = false;
                break;
            };
            let cursor = next_in_class[class];
            if cursor >= classes.members[class].len() {
                ok = false;
                break;
            }
            kappa_inv[j] = classes.members[class][cursor];
            next_in_class[class] = cursor + 1;
        }
        if !ok {
            return Ok(None);
        }
        let kappa = Permutation::from_images(kappa_inv)
            .expect("distinct class members form a bijection")
            .inverse();
        debug_assert_eq!(verify_weak_symmetry(s, pi, &kappa), Ok(true));
        pairs.push((pi.clone(), kappa));
    }
    Ok(Some(WeakSymmetryWitness::new(pairs)))
}

/// The action of `pi` on component indices: returns `j'` with
/// `s_{j'} = pi.s_j`, i.e. `s_{j'}(x) = s_j(pi^{-1}.x)` on every vertex,
/// computed by composing the witness generators' kappas.
///
/// `pi` must be a product of the witness generators, and the witness pairs
/// must satisfy their defining equations ([`WeakSymmetryWitness::verify`]).
pub fn component_action(
    pi: &Permutation,
    j: usize,
    witness: &WeakSymmetryWitness,
    s: &Section,
) -> Result<usize, Error> {
    if j >= s.dim() {
        return Err(Error::IndexOutOfRange {
            context: format!("component {j} of a section with d = {}", s.dim()),
        });
    }
    // BFS closure over the generated group, composing kappas alongside
    // (kappa_{g h} = kappa_g ∘ kappa_h).
    let mut kappa_of: HashMap<Vec<usize>, Permutation> = HashMap::new();
    let identity = (
        Permutation::identity(s.n()),
        Permutation::identity(s.dim()),
    );
    kappa_of.insert(identity.0.images().to_vec(), identity.1);
    let mut queue: VecDeque<Permutation> = VecDeque::from([identity.0]);
    while let Some(g) = queue.pop_front() {
        let kappa_g = kappa_of[g.images()].clone();
        for (h, kappa_h) in witness.pairs() {
            let product = h.compose(&g);
            if !kappa_of.contains_key(product.images()) {
                kappa_of.insert(product.images().to_vec(), kappa_h.compose(&kappa_g));
                queue.push_back(product);
            }
        }
    }
    let pi_inv = pi.inverse();
    let Some(kappa_pi_inv) = kappa_of.get(pi_inv.images()) else {
        return Err(Error::NotInGeneratedGroup);
    };
    Ok(kappa_pi_inv.inverse().apply(j))
}

/// The isotropy group of component `j` under `G`: all `pi` in `G` with
/// `s_j(pi.x) = s_j(x)` for every vertex `x`. The result is verified to be
/// a subgroup on construction.
pub fn isotropy_group(s: &Section, j: usize, g: &PermSet) -> Result<PermSet, Error> {
    if g.n() != s.n() {
        return Err(Error::dim("group degree vs section".to_string()));
    }
    if j >= s.dim() {
        return Err(Error::IndexOutOfRange {
            context: format!("component {j} of a section with d = {}", s.dim()),
        });
    }
    // The vertex-action table holds |G| * n! entries.
    const MAX_ACTION_ENTRIES: usize = 1 << 27;
    if g.len().saturating_mul(factorial(s.n())) > MAX_ACTION_ENTRIES {
        return Err(Error::CapExceeded {
            context: "isotropy scan".into(),
            requested: s.n(),
            cap: 7,
            estimate: format!("|G| * n! = {} vertex-action entries", g.len() * factorial(s.n())),
        });
    }
    let actions = g.vertex_action();
    let members: Vec<Permutation> = g
        .iter()
        .enumerate()
        .filter(|(idx, _)| s.invariant_under(j, &actions[*idx]))
        .map(|(_, p)| p.clone())
        .collect();
    PermSet::new(s.n(), members)
}

/// Classification of a component by the essential-element containment
/// `{pi in A_n : pi(v) = v} ⊆ Iso(s_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EssentialElement {
    /// The smallest `v` whose pointwise alternating stabilizer is contained
    /// in the isotropy group.
    Element(usize),
    /// The whole alternating group is contained in the isotropy group.
    All,
    /// No single element works; the section is outside the hypotheses that
    /// guarantee one.
    None,
}

/// Finds the essential element `v_j` of component `j`: the element whose
/// alternating stabilizer lies inside `Iso(s_j)`, `All` when the whole of
/// `A_n` does, `None` when no single element works.
pub fn essential_element(s: &Section, j: usize) -> Result<EssentialElement, Error> {
    if j >= s.dim() {
        return Err(Error::IndexOutOfRange {
            context: format!("component {j} of a section with d = {}", s.dim()),
        });
    }
    let ctx = s.alt_ctx();
    let actions = ctx.alt.vertex_action();
    let all = (0..ctx.alt.len()).all(|idx| s.invariant_under(j, &actions[idx]));
    if all {
        return Ok(EssentialElement::All);
    }
    for v in 0..s.n() {
        if ctx.stabilizers[v]
            .iter()
            .all(|&idx| s.invariant_under(j, &actions[idx]))
        {
            return Ok(EssentialElement::Element(v));
        }
    }
    Ok(EssentialElement::None)
}

/// Brute-force witness for the subgroup lemma: the smallest-cardinality
/// `W ⊆ [n]` (ties broken lexicographically) with `|W| <= k` whose
/// pointwise alternating stabilizer lies in `U`, or `None` if no subset of
/// size at most `k` works.
pub fn yannakakis_witness(
    u: &PermSet,
    k: usize,
    n: usize,
) -> Result<Option<Vec<usize>>, Error> {
    if u.n() != n {
        return Err(Error::dim("subgroup degree vs n".to_string()));
    }
    let alt = alternating_group(n)?;
    for size in 0..=k.min(n) {
        let mut witness = None;
        for_each_subset(n, size, &mut |subset| {
            if witness.is_some() {
                return;
            }
            let fixes_subset_inside_u = alt
                .iter()
                .filter(|p| subset.iter().all(|&v| p.apply(v) == v))
                .all(|p| u.contains(p));
            if fixes_subset_inside_u {
                witness = Some(subset.to_vec());
            }
        });
        if witness.is_some() {
            return Ok(witness);
        }
    }
    Ok(None)
}

/// Visits all size-`k` subsets of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    fn recurse(
        n: usize,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if current.len() == k {
            visit(current);
            return;
        }
        for v in start..n {
            current.push(v);
            recurse(n, k, v + 1, current, visit);
            current.pop();
        }
    }
    recurse(n, k, 0, &mut Vec::new(), visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulation::birkhoff_z_extension;
    use crate::permgroup::{
        pointwise_stabilizer_in_alternating, rho_generator, rho_generators, symmetric_group,
    };

    #[test]
    fn canonical_section_projects_back_to_its_vertices() {
        let n = 3;
        let s = canonical_birkhoff_section(n).unwrap();
        let e = birkhoff_z_extension(n).unwrap();
        let id = Permutation::identity(n);
        let y = s.value(&id).unwrap();
        // Identity permutation matrix => diagonal ones.
        assert_eq!(y.entries()[0], Rational::one());
        assert_eq!(e.project(y).unwrap(), RatVector::from_ints(&[1, 2, 3]));

        let swap = Permutation::parse("(1 2)", 2).unwrap();
        let s2 = canonical_birkhoff_section(2).unwrap();
        let e2 = birkhoff_z_extension(2).unwrap();
        let y2 = s2.value(&swap).unwrap();
        assert_eq!(y2.entries(), RatVector::from_ints(&[0, 1, 1, 0]).entries());
        assert_eq!(e2.project(y2).unwrap(), RatVector::from_ints(&[2, 1]));
    }

    #[test]
    fn canonical_section_verifies_up_to_n5() {
        for n in 2..=5 {
            let s = canonical_birkhoff_section(n).unwrap();
            let e = birkhoff_z_extension(n).unwrap();
            assert_eq!(verify_section(&s, &e), Ok(true), "n = {n}");
        }
    }

    #[test]
    fn corrupted_sections_fail_verification() {
        let n = 3;
        let s = canonical_birkhoff_section(n).unwrap();
        let e = birkhoff_z_extension(n).unwrap();

        // One entry negated: nonnegativity breach.
        let mut table = s.table().to_vec();
        let mut found = false;
        for row in table.iter_mut() {
            for j in 0..row.dim() {
                if row[j].is_positive() && !found {
                    row[j] = -&row[j];
                    found = true;
                }
            }
        }
        let negated = Section::from_table(n, table).unwrap();
        assert_eq!(verify_section(&negated, &e), Ok(false));

        // Two vertices mapped to the same point: projection mismatch.
        let mut table = s.table().to_vec();
        let duplicate = table[0].clone();
        table[1] = duplicate;
        let collapsed = Section::from_table(n, table).unwrap();
        assert_eq!(verify_section(&collapsed, &e), Ok(false));
    }

    #[test]
    fn witness_for_rho_generators_matches_column_relabeling() {
        let n = 4;
        let s = canonical_birkhoff_section(n).unwrap();
        let rhos = rho_generators(n).unwrap();
        let witness = derive_weak_symmetry_witness(&s, &rhos)
            .unwrap()
            .expect("canonical section is weakly symmetric");
        for (v, rho) in rhos.iter().enumerate() {
            let kappa = witness.kappa_for(rho).unwrap();
            for i in 0..n {
                for u in 0..n {
                    assert_eq!(
                        kappa.apply(i * n + u),
                        i * n + rho.apply(u),
                        "kappa_rho_{v} at (i={i}, u={u})"
                    );
                }
            }
            assert_eq!(verify_weak_symmetry(&s, rho, kappa), Ok(true));
        }
    }

    #[test]
    fn single_vertex_section_has_identity_witness() {
        let s = Section::from_fn(1, |_| RatVector::from_ints(&[1])).unwrap();
        let witness = derive_weak_symmetry_witness(&s, &[Permutation::identity(1)])
            .unwrap()
            .unwrap();
        assert!(witness.kappa_for(&Permutation::identity(1)).unwrap().is_identity());
    }

    #[test]
    fn scrambled_sections_admit_no_witness() {
        let n = 3;
        let s = canonical_birkhoff_section(n).unwrap();
        let mut table = s.table().to_vec();
        // Damage a single vertex: replace its 0/1 pattern with garbage that
        // no component permutation can repair.
        table[0] = RatVector::from_ints(&[5, 0, 0, 0, 1, 0, 0, 0, 1]);
        let damaged = Section::from_table(n, table).unwrap();
        let rhos = rho_generators(n).unwrap();
        assert_eq!(derive_weak_symmetry_witness(&damaged, &rhos).unwrap(), None);
    }

    #[test]
    fn component_action_follows_the_action_law() {
        let n = 4;
        let s = canonical_birkhoff_section(n).unwrap();
        let rhos = rho_generators(n).unwrap();
        let witness = derive_weak_symmetry_witness(&s, &rhos).unwrap().unwrap();

        // Identity acts trivially.
        let id = Permutation::identity(n);
        assert_eq!(component_action(&id, 5, &witness, &s).unwrap(), 5);

        // Independent oracle: pi.s_j is the function x -> s_j(pi^{-1}.x);
        // locate its index by exhaustive fingerprint comparison.
        let oracle = |pi: &Permutation, j: usize| -> usize {
            let action_inv = s.vertex_permutation(&pi.inverse()).unwrap();
            let moved: Vec<Rational> = (0..s.vertex_count())
                .map(|k| s.table()[action_inv[k]][j].clone())
                .collect();
            (0..s.dim())
                .find(|&jp| {
                    (0..s.vertex_count()).all(|k| s.table()[k][jp] == moved[k])
                })
                .expect("the moved component is a component")
        };

        let rho0 = rho_generator(0, n).unwrap();
        for i in 0..n {
            let j = i * n; // component (i, v=0)
            let expected = oracle(&rho0, j);
            // rho_0 = (0 1 2) sends component (i, 0) to (i, rho_0(0)) = (i, 1).
            assert_eq!(expected, i * n + 1);
            assert_eq!(component_action(&rho0, j, &witness, &s).unwrap(), expected);
        }

        // Group-action law: (pi sigma).s_j = pi.(sigma.s_j), on products of
        // generators.
        let pi = rho_generator(0, n).unwrap();
        let sigma = rho_generator(1, n).unwrap();
        for j in 0..s.dim() {
            let lhs = component_action(&pi.compose(&sigma), j, &witness, &s).unwrap();
            let inner = component_action(&sigma, j, &witness, &s).unwrap();
            let rhs = component_action(&pi, inner, &witness, &s).unwrap();
            assert_eq!(lhs, rhs, "j = {j}");
            assert_eq!(lhs, oracle(&pi.compose(&sigma), j));
        }

        // Odd permutations are not products of the rho generators.
        let odd = Permutation::parse("(1 2)", n).unwrap();
        assert!(matches!(
            component_action(&odd, 0, &witness, &s),
            Err(Error::NotInGeneratedGroup)
        ));
    }

    #[test]
    fn birkhoff_isotropy_is_the_stabilizer_of_v() {
        let n = 4;
        let s = canonical_birkhoff_section(n).unwrap();
        let g = symmetric_group(n).unwrap();
        for i in 0..n {
            for v in 0..n {
                let iso = isotropy_group(&s, i * n + v, &g).unwrap();
                assert_eq!(iso.len(), factorial(n - 1), "component ({i},{v})");
                assert!(iso.iter().all(|p| p.apply(v) == v));
                assert_eq!(iso.index_in_symmetric(), n);
            }
        }
    }

    #[test]
    fn constant_components_have_full_isotropy() {
        let n = 3;
        let s = Section::from_fn(n, |zeta| {
            let mut row = RatVector::zero(2);
            row[0] = Rational::from(7);
            row[1] = Rational::from(zeta.apply(0) + 1);
            row
        })
        .unwrap();
        let g = symmetric_group(n).unwrap();
        let iso = isotropy_group(&s, 0, &g).unwrap();
        assert_eq!(iso.len(), g.len());
        assert_eq!(essential_element(&s, 0).unwrap(), EssentialElement::All);
    }

    #[test]
    fn birkhoff_essential_elements_name_the_column() {
        let n = 5;
        let s = canonical_birkhoff_section(n).unwrap();
        for i in 0..n {
            for v in 0..n {
                assert_eq!(
                    essential_element(&s, i * n + v).unwrap(),
                    EssentialElement::Element(v),
                    "component ({i},{v})"
                );
            }
        }
    }

    #[test]
    fn pair_dependent_component_has_no_essential_element() {
        // s_j(x) = x_0 + x_1 is invariant exactly under the setwise
        // stabilizer of {0, 1}; no single element's stabilizer fits inside.
        let n = 5;
        let s = Section::from_fn(n, |zeta| {
            let x = lambda_vertex(zeta);
            let mut row = RatVector::zero(1);
            row[0] = &x[0] + &x[1];
            row
        })
        .unwrap();
        assert_eq!(essential_element(&s, 0).unwrap(), EssentialElement::None);
    }

    #[test]
    fn yannakakis_witness_searches_by_cardinality() {
        let n = 6;
        // U = stabilizer of 0 in S_6 (as a PermSet): index 6 = C(6,1).
        let stab: Vec<Permutation> = symmetric_group(n)
            .unwrap()
            .iter()
            .filter(|p| p.apply(0) == 0)
            .cloned()
            .collect();
        let u = PermSet::new(n, stab).unwrap();
        assert_eq!(yannakakis_witness(&u, 1, n).unwrap(), Some(vec![0]));

        let full = symmetric_group(n).unwrap();
        assert_eq!(yannakakis_witness(&full, 1, n).unwrap(), Some(vec![]));

        let alt = alternating_group(n).unwrap();
        assert_eq!(yannakakis_witness(&alt, 1, n).unwrap(), Some(vec![]));

        // The stabilizer of {0} inside A_n needs W = {0} again.
        let stab_alt = pointwise_stabilizer_in_alternating(&[0], n).unwrap();
        assert_eq!(yannakakis_witness(&stab_alt, 2, n).unwrap(), Some(vec![0]));
    }

    #[test]
    fn fingerprints_separate_exactly_the_distinct_components() {
        let n = 3;
        let s = canonical_birkhoff_section(n).unwrap();
        // All 9 components of the canonical section are distinct functions.
        let mut classes: Vec<usize> = (0..s.dim()).map(|j| s.component_class(j)).collect();
        classes.sort_unstable();
        classes.dedup();
        assert_eq!(classes.len(), 9);

        // Duplicate a component; fingerprints must collapse.
        let mut table = Vec::new();
        for row in s.table() {
            let mut extended: Vec<Rational> = row.entries().to_vec();
            extended.push(row[0].clone());
            table.push(RatVector::new(extended));
        }
        let doubled = Section::from_table(n, table).unwrap();
        assert_eq!(doubled.component_class(0), doubled.component_class(9));
        assert_eq!(
            doubled.fingerprint(0).signature,
            doubled.fingerprint(9).signature
        );
    }
}
