//! Finitely presented groups and the subgroup machinery behind quotient
//! surfaces: polygonal and surface-group presentations, finite permutation
//! images, coset tables for kernels and diagonal preimages, and
//! Reidemeister–Schreier subgroup presentations.

mod snf;

pub use snf::{abelianization, AbelianInvariants};

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::beauville::{is_unmixed_beauville, UnmixedStructure};
use crate::perm::{order_generated_by, Perm, PermGroup};
use crate::{Error, Result};

/// A word in the generators of a presentation: letter `k > 0` stands for the
/// k-th generator (1-based), `-k` for its inverse.
pub type Word = Vec<i32>;

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &letter in word {
        if out.last() == Some(&-letter) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    out
}

fn inverse_word(word: &[i32]) -> Word {
    word.iter().rev().map(|&l| -l).collect()
}

/// A group given by generators and relators. Relators are stored freely
/// reduced; an empty relator is kept (it is trivially satisfied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        if generator_count > i32::MAX as usize {
            return Err(Error::invalid("too many generators"));
        }
        let mut reduced = Vec::with_capacity(relators.len());
        for r in relators {
            for &letter in &r {
                if letter == 0 || letter.unsigned_abs() as usize > generator_count {
                    return Err(Error::BadWord(letter));
                }
            }
            reduced.push(free_reduce(&r));
        }
        Ok(Presentation {
            generator_count,
            relators: reduced,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

/// ⟨x₁, …, x_{n−1} | x₁^{r₁}, …, x_{n−1}^{r_{n−1}}, (x₁⋯x_{n−1})^{r_n}⟩ —
/// the group of a polygon with branch orders `orders`.
pub fn polygonal_presentation(orders: &[u64]) -> Result<Presentation> {
    if orders.len() < 2 {
        return Err(Error::invalid(
            "a polygonal group needs at least two branch orders",
        ));
    }
    for &r in orders {
        if r < 2 {
            return Err(Error::invalid(format!(
                "branch orders must be at least 2 (got {r})"
            )));
        }
        if r > 1 << 20 {
            return Err(Error::invalid(format!("branch order {r} too large")));
        }
    }
    let gens = orders.len() - 1;
    let mut relators: Vec<Word> = Vec::with_capacity(orders.len());
    for (i, &r) in orders[..gens].iter().enumerate() {
        relators.push(vec![(i + 1) as i32; r as usize]);
    }
    let last = orders[gens] as usize;
    let mut product: Word = Vec::with_capacity(gens * last);
    for _ in 0..last {
        product.extend(1..=gens as i32);
    }
    relators.push(product);
    Presentation::new(gens, relators)
}

/// The standard one-relator presentation of the fundamental group of a
/// closed orientable surface: 2g generators a₁, b₁, …, a_g, b_g and the
/// relator [a₁,b₁]⋯[a_g,b_g].
pub fn surface_presentation(genus: usize) -> Presentation {
    let mut relator: Word = Vec::with_capacity(4 * genus);
    for i in 0..genus {
        let a = (2 * i + 1) as i32;
        let b = (2 * i + 2) as i32;
        relator.extend_from_slice(&[a, b, -a, -b]);
    }
    Presentation::new(2 * genus, vec![relator]).expect("surface relator is well formed")
}

/// Direct product: the generators of `p` followed by those of `q`, both
/// relator lists, plus one commutator for every cross pair.
pub fn product_presentation(p: &Presentation, q: &Presentation) -> Presentation {
    let np = p.generator_count() as i32;
    let shift = |w: &[i32]| -> Word {
        w.iter()
            .map(|&l| if l > 0 { l + np } else { l - np })
            .collect()
    };
    let mut relators: Vec<Word> = p.relators().to_vec();
    relators.extend(q.relators().iter().map(|r| shift(r)));
    for i in 1..=np {
        for j in 1..=q.generator_count() as i32 {
            relators.push(vec![i, np + j, -i, -(np + j)]);
        }
    }
    Presentation::new(p.generator_count() + q.generator_count(), relators)
        .expect("product relators are well formed")
}

fn apply_word(images: &[Perm], word: &[i32], degree: usize) -> Perm {
    let mut acc = Perm::identity(degree);
    for &letter in word {
        let img = &images[(letter.unsigned_abs() - 1) as usize];
        acc = if letter > 0 {
            acc.then(img)
        } else {
            acc.then(&img.inverse())
        };
    }
    acc
}

/// A homomorphism from a presented group onto a finite permutation group,
/// one image per generator. Construction checks that every relator maps to
/// the identity and that the images generate the whole target.
#[derive(Debug, Clone)]
pub struct FiniteImage {
    target: PermGroup,
    images: Vec<Perm>,
}

impl FiniteImage {
    pub fn new(pr: &Presentation, target: PermGroup, images: Vec<Perm>) -> Result<Self> {
        if images.len() != pr.generator_count() {
            return Err(Error::invalid(format!(
                "expected {} generator images, got {}",
                pr.generator_count(),
                images.len()
            )));
        }
        let degree = target.degree();
        for p in &images {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
        }
        for relator in pr.relators() {
            if !apply_word(&images, relator, degree).is_identity() {
                return Err(Error::invalid(format!(
                    "relator {relator:?} does not map to the identity"
                )));
            }
        }
        if order_generated_by(degree, &images) != target.order() {
            return Err(Error::MarkingsDoNotGenerate);
        }
        Ok(FiniteImage { target, images })
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn image_of(&self, word: &[i32]) -> Perm {
        apply_word(&self.images, word, self.target.degree())
    }
}

/// The action of a presented group's generators on the cosets of a
/// finite-index subgroup. Each coset carries a label from a finite
/// permutation group; coset 0 is the subgroup itself, labeled by the
/// identity.
#[derive(Debug, Clone)]
pub struct CosetTable {
    /// `action[g][c]` is the coset reached from `c` by generator `g + 1`.
    action: Vec<Vec<u32>>,
    inverse_action: Vec<Vec<u32>>,
    labels: Vec<Perm>,
}

impl CosetTable {
    fn from_action(action: Vec<Vec<u32>>, labels: Vec<Perm>) -> Result<Self> {
        let count = labels.len();
        let mut inverse_action = Vec::with_capacity(action.len());
        for row in &action {
            assert_eq!(row.len(), count);
            let mut inv = vec![u32::MAX; count];
            for (c, &t) in row.iter().enumerate() {
                assert!(
                    (t as usize) < count && inv[t as usize] == u32::MAX,
                    "generator action must permute the cosets"
                );
                inv[t as usize] = c as u32;
            }
            inverse_action.push(inv);
        }
        // The whole group must reach every coset from coset 0.
        let mut seen = vec![false; count];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for row in action.iter().chain(&inverse_action) {
                let t = row[c] as usize;
                if !seen[t] {
                    seen[t] = true;
                    reached += 1;
                    queue.push_back(t);
                }
            }
        }
        if reached != count {
            return Err(Error::NotTransitive);
        }
        Ok(CosetTable {
            action,
            inverse_action,
            labels,
        })
    }

    pub fn coset_count(&self) -> usize {
        self.labels.len()
    }

    pub fn generator_count(&self) -> usize {
        self.action.len()
    }

    pub fn labels(&self) -> &[Perm] {
        &self.labels
    }

    /// Applies one signed letter to a coset.
    pub fn apply(&self, coset: usize, letter: i32) -> usize {
        let g = (letter.unsigned_abs() - 1) as usize;
        if letter > 0 {
            self.action[g][coset] as usize
        } else {
            self.inverse_action[g][coset] as usize
        }
    }

    /// Applies a word left to right.
    pub fn apply_word(&self, coset: usize, word: &[i32]) -> usize {
        word.iter().fold(coset, |c, &l| self.apply(c, l))
    }

    /// Checks that every relator of `pr` fixes every coset — a total check,
    /// not a sample.
    pub fn verify_relators(&self, pr: &Presentation) -> Result<()> {
        if pr.generator_count() != self.generator_count() {
            return Err(Error::DegreeMismatch(
                pr.generator_count(),
                self.generator_count(),
            ));
        }
        let bad = (0..self.coset_count()).into_par_iter().any(|c| {
            pr.relators()
                .iter()
                .any(|r| self.apply_word(c, r) != c)
        });
        if bad {
            return Err(Error::invalid(
                "a relator acts nontrivially on the coset table",
            ));
        }
        Ok(())
    }
}

/// Coset table of the kernel of `phi`: cosets biject with the elements of
/// the image group via Kx ↦ φ(x), and a generator w acts by right
/// multiplication, g ↦ g·φ(w).
pub fn kernel_coset_table(pr: &Presentation, phi: &FiniteImage) -> Result<CosetTable> {
    if phi.images().len() != pr.generator_count() {
        return Err(Error::invalid(
            "image does not match the presentation's generator count",
        ));
    }
    let elements = phi.target().elements()?.to_vec();
    debug_assert!(elements[0].is_identity());
    let index_of = |p: &Perm| -> u32 {
        elements
            .binary_search(p)
            .expect("products of group elements stay in the group") as u32
    };
    let mut action = vec![vec![0u32; elements.len()]; pr.generator_count()];
    for (gi, w) in phi.images().iter().enumerate() {
        for (c, label) in elements.iter().enumerate() {
            action[gi][c] = index_of(&label.then(w));
        }
    }
    let table = CosetTable::from_action(action, elements)?;
    table.verify_relators(pr)?;
    Ok(table)
}

fn embed_first(p: &Perm, d: usize) -> Perm {
    let mut images: Vec<usize> = (0..2 * d).collect();
    for (x, img) in images.iter_mut().take(d).enumerate() {
        *img = p.apply(x);
    }
    Perm::from_images(images).expect("block embedding is a bijection")
}

fn embed_second(p: &Perm, d: usize) -> Perm {
    let mut images: Vec<usize> = (0..2 * d).collect();
    for x in 0..d {
        images[d + x] = d + p.apply(x);
    }
    Perm::from_images(images).expect("block embedding is a bijection")
}

/// Splits a permutation of two size-d blocks into its block components.
fn split_blocks(p: &Perm, d: usize) -> Result<(Perm, Perm)> {
    let mut a = Vec::with_capacity(d);
    let mut b = Vec::with_capacity(d);
    for x in 0..d {
        let y = p.apply(x);
        if y >= d {
            return Err(Error::invalid("generator image mixes the two factors"));
        }
        a.push(y);
    }
    for x in d..2 * d {
        let y = p.apply(x);
        if y < d {
            return Err(Error::invalid("generator image mixes the two factors"));
        }
        b.push(y - d);
    }
    Ok((Perm::from_images(a)?, Perm::from_images(b)?))
}

/// Coset table of H = Φ⁻¹(Δ_G) inside a product mapping onto G × G.
///
/// The target of `phi` must act on two equal blocks, the first factor of
/// the product on the first block and the second factor on the second.
/// Cosets of H biject with G via (g₁, g₂)H ↦ g₁⁻¹g₂; a generator with
/// block components (a, b) sends the label g to a⁻¹·g·b, so a pure
/// first-factor generator acts by g ↦ φ₁(w)⁻¹·g and a pure second-factor
/// generator by g ↦ g·φ₂(w).
pub fn diagonal_coset_table(pr: &Presentation, phi: &FiniteImage) -> Result<CosetTable> {
    if phi.images().len() != pr.generator_count() {
        return Err(Error::invalid(
            "image does not match the presentation's generator count",
        ));
    }
    let big_degree = phi.target().degree();
    if big_degree % 2 != 0 {
        return Err(Error::invalid(
            "diagonal construction needs a target acting on two equal blocks",
        ));
    }
    let d = big_degree / 2;
    let mut first = Vec::with_capacity(phi.images().len());
    let mut second = Vec::with_capacity(phi.images().len());
    for p in phi.images() {
        let (a, b) = split_blocks(p, d)?;
        first.push(a);
        second.push(b);
    }
    let all: Vec<Perm> = first.iter().chain(&second).cloned().collect();
    let g = PermGroup::new(d, all)?;
    let order = g.order();
    for components in [&first, &second] {
        if order_generated_by(d, components) != order {
            return Err(Error::MarkingsDoNotGenerate);
        }
    }
    let elements = g.elements()?.to_vec();
    debug_assert!(elements[0].is_identity());
    let index_of = |p: &Perm| -> u32 {
        elements
            .binary_search(p)
            .expect("products of group elements stay in the group") as u32
    };
    let mut action = vec![vec![0u32; elements.len()]; pr.generator_count()];
    for (gi, (a, b)) in first.iter().zip(&second).enumerate() {
        let a_inv = a.inverse();
        for (c, label) in elements.iter().enumerate() {
            action[gi][c] = index_of(&a_inv.then(label).then(b));
        }
    }
    let table = CosetTable::from_action(action, elements)?;
    table.verify_relators(pr)?;
    Ok(table)
}

/// Breadth-first Schreier transversal plus the numbering of the nontrivial
/// Schreier generators (one per non-tree (coset, generator) pair).
struct SchreierScaffold {
    transversal: Vec<Word>,
    /// `gen_index[c * n + g]` is the 0-based subgroup generator for the pair
    /// (coset c, ambient generator g + 1), or None for spanning-tree edges.
    gen_index: Vec<Option<usize>>,
    subgroup_generators: usize,
}

fn schreier_scaffold(table: &CosetTable) -> SchreierScaffold {
    let n = table.generator_count();
    let count = table.coset_count();
    let mut transversal: Vec<Option<Word>> = vec![None; count];
    transversal[0] = Some(Vec::new());
    let mut tree_edge = vec![false; count * n];
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..n {
            let letter = (g + 1) as i32;
            for signed in [letter, -letter] {
                let t = table.apply(c, signed);
                if transversal[t].is_none() {
                    let mut w = transversal[c].clone().expect("visited coset has a word");
                    w.push(signed);
                    transversal[t] = Some(w);
                    // The Schreier generator of a tree edge reduces to the
                    // empty word: a forward edge kills the pair at its tail,
                    // a backward edge the pair at its head.
                    if signed > 0 {
                        tree_edge[c * n + g] = true;
                    } else {
                        tree_edge[t * n + g] = true;
                    }
                    queue.push_back(t);
                }
            }
        }
    }
    let transversal: Vec<Word> = transversal
        .into_iter()
        .map(|w| w.expect("coset table is transitive"))
        .collect();
    let mut gen_index = vec![None; count * n];
    let mut next = 0usize;
    for (pair, &is_tree) in tree_edge.iter().enumerate() {
        if !is_tree {
            gen_index[pair] = Some(next);
            next += 1;
        }
    }
    SchreierScaffold {
        transversal,
        gen_index,
        subgroup_generators: next,
    }
}

/// Rewrites `t_{c0} · relator · t_{c0}⁻¹` as a word in the Schreier
/// generators.
fn rewrite(
    scaffold: &SchreierScaffold,
    table: &CosetTable,
    c0: usize,
    relator: &[i32],
) -> Word {
    let n = table.generator_count();
    let mut out: Word = Vec::new();
    let mut c = c0;
    for &letter in relator {
        if letter > 0 {
            let g = (letter - 1) as usize;
            if let Some(k) = scaffold.gen_index[c * n + g] {
                out.push((k + 1) as i32);
            }
            c = table.apply(c, letter);
        } else {
            let next = table.apply(c, letter);
            let g = (-letter - 1) as usize;
            if let Some(k) = scaffold.gen_index[next * n + g] {
                out.push(-((k + 1) as i32));
            }
            c = next;
        }
    }
    debug_assert_eq!(c, c0, "a relator must fix every coset");
    free_reduce(&out)
}

/// Presentation of the subgroup a coset table describes, by the
/// Reidemeister–Schreier rewriting process: generators are the nontrivial
/// Schreier generators of a breadth-first transversal, relators are all
/// coset-conjugates of the ambient relators, rewritten. For index i over n
/// ambient generators this yields i·n − i + 1 generators.
pub fn reidemeister_schreier(table: &CosetTable, pr: &Presentation) -> Result<Presentation> {
    table.verify_relators(pr)?;
    let scaffold = schreier_scaffold(table);
    let scaffold_ref = &scaffold;
    let relators: Vec<Word> = (0..table.coset_count())
        .into_par_iter()
        .flat_map_iter(|c| {
            pr.relators()
                .iter()
                .map(move |r| rewrite(scaffold_ref, table, c, r))
                .collect::<Vec<_>>()
        })
        .collect();
    Presentation::new(scaffold.subgroup_generators, relators)
}

/// The words in the ambient generators realizing each Schreier generator:
/// entry k is t_c · x · t_{c·x}⁻¹ for the k-th non-tree pair (c, x).
pub fn schreier_generator_words(table: &CosetTable) -> Vec<Word> {
    let scaffold = schreier_scaffold(table);
    let n = table.generator_count();
    let mut words: Vec<Word> = vec![Vec::new(); scaffold.subgroup_generators];
    for c in 0..table.coset_count() {
        for g in 0..n {
            if let Some(k) = scaffold.gen_index[c * n + g] {
                let letter = (g + 1) as i32;
                let mut w = scaffold.transversal[c].clone();
                w.push(letter);
                let target = table.apply(c, letter);
                w.extend(inverse_word(&scaffold.transversal[target]));
                words[k] = free_reduce(&w);
            }
        }
    }
    words
}

/// The product presentation T₁ × T₂ attached to the two triples of an
/// unmixed structure, together with its map onto G × G acting on two
/// blocks.
pub fn diagonal_data(structure: &UnmixedStructure) -> Result<(Presentation, FiniteImage)> {
    let t1 = &structure.triple1;
    let t2 = &structure.triple2;
    let p1 = polygonal_presentation(&t1.orders())?;
    let p2 = polygonal_presentation(&t2.orders())?;
    let pr = product_presentation(&p1, &p2);
    let d = structure.group.degree();
    let mut big_gens = Vec::new();
    for g in structure.group.generators() {
        big_gens.push(embed_first(g, d));
        big_gens.push(embed_second(g, d));
    }
    let target = PermGroup::new(2 * d, big_gens)?;
    let images = vec![
        embed_first(t1.a1(), d),
        embed_first(t1.a2(), d),
        embed_second(t2.a1(), d),
        embed_second(t2.a2(), d),
    ];
    let phi = FiniteImage::new(&pr, target, images)?;
    Ok((pr, phi))
}

/// Presentation of the fundamental group of the quotient surface
/// (C₁ × C₂)/G attached to an unmixed Beauville structure: the diagonal
/// preimage H = Φ⁻¹(Δ_G) inside the product of the two polygonal groups,
/// presented by Reidemeister–Schreier.
pub fn pi1_surface(structure: &UnmixedStructure) -> Result<Presentation> {
    if !is_unmixed_beauville(structure)? {
        return Err(Error::ActionNotFree);
    }
    let (pr, phi) = diagonal_data(structure)?;
    let table = diagonal_coset_table(&pr, &phi)?;
    reidemeister_schreier(&table, &pr)
}
