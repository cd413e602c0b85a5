//! A cyclic `GF(p)`-module `V = ⟨v^S⟩` of a finite group `S` made into a
//! ring: `V` is identified with `GF(p)[S] / Ann(v)` and the product of
//! translates is `v^h ⊗ v^{h'} = v^{hh'}`.

use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::FiniteRing;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gfp::{self, Matrix, Vector};
use crate::group::{is_prime, FiniteGroup};

/// Matrices indexed by element id; vectors are rows, so `v^g = v · M(g)`
/// and `M(gh) = M(g) M(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModuleAction {
    group: FiniteGroup,
    p: u32,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl GModuleAction {
    /// Takes matrices for some elements (at least a generating set) and
    /// extends multiplicatively; the result is checked on the full table.
    pub fn new(group: &FiniteGroup, p: u32, dim: usize, given: &BTreeMap<usize, Matrix>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidAction(format!("{p} is not prime")));
        }
        for (&g, m) in given {
            if g >= group.order() {
                return Err(Error::InvalidAction(format!("element {g} out of range")));
            }
            if m.len() != dim || m.iter().any(|r| r.len() != dim || r.iter().any(|&x| x >= p)) {
                return Err(Error::InvalidAction(format!("matrix for element {g} is not {dim}×{dim} over GF({p})")));
            }
            gfp::inverse(m, p).map_err(|_| Error::InvalidAction(format!("matrix for element {g} is singular")))?;
        }
        let mut matrices: Vec<Option<Matrix>> = vec![None; group.order()];
        matrices[0] = Some(gfp::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, m) in given {
                let y = group.mul(x, g);
                if matrices[y].is_none() {
                    matrices[y] = Some(gfp::mat_mul(matrices[x].as_ref().expect("set"), m, p));
                    queue.push_back(y);
                }
            }
        }
        if matrices.iter().any(Option::is_none) {
            return Err(Error::InvalidAction("given elements do not generate the group".into()));
        }
        let action = Self { group: group.clone(), p, dim, matrices: matrices.into_iter().map(Option::unwrap).collect() };
        for (&g, m) in given {
            if &action.matrices[g] != m {
                return Err(Error::InvalidAction(format!("matrix for element {g} is inconsistent with the others")));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                if action.matrices[group.mul(g, h)] != gfp::mat_mul(&action.matrices[g], &action.matrices[h], p) {
                    return Err(Error::InvalidAction(format!("not a homomorphism on ({g}, {h})")));
                }
            }
        }
        Ok(action)
    }

    pub fn trivial(group: &FiniteGroup, p: u32, dim: usize) -> Result<Self> {
        let id: BTreeMap<usize, Matrix> = [(0, gfp::identity(dim))].into_iter().collect();
        let gens = group.generators().iter().map(|&g| (g as usize, gfp::identity(dim)));
        Self::new(group, p, dim, &id.into_iter().chain(gens).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    /// `v^g`.
    pub fn translate(&self, v: &[u32], g: usize) -> Vector {
        gfp::vec_mat(v, &self.matrices[g], self.p)
    }

    pub fn space_size(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.dim as u32)
    }

    fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.dim || v.iter().any(|&x| x >= self.p) {
            return Err(Error::InvalidAction(format!("vector is not in GF({})^{}", self.p, self.dim)));
        }
        Ok(())
    }

    fn space_within(&self, caps: &Caps) -> Result<usize> {
        match self.space_size() {
            Some(n) if n <= caps.ring_size => Ok(n),
            n => Err(Error::CapExceeded { what: "module size", size: n.unwrap_or(usize::MAX), cap: caps.ring_size }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub spans: bool,
    /// Elements `h` whose translates `v^h` form the chosen basis.
    pub basis_elements: Vec<usize>,
    pub basis: Vec<Vector>,
}

/// Greedy in element id order: keep `v^h` when it raises the rank.
pub fn orbit_span_check(action: &GModuleAction, v: &[u32]) -> Result<SpanCheck> {
    action.check_vector(v)?;
    let mut basis: Vec<Vector> = Vec::new();
    let mut basis_elements = Vec::new();
    for h in action.group.elements() {
        if basis.len() == action.dim {
            break;
        }
        let t = action.translate(v, h);
        let mut trial = basis.clone();
        trial.push(t.clone());
        if gfp::rank(&trial, action.p) > basis.len() {
            basis.push(t);
            basis_elements.push(h);
        }
    }
    Ok(SpanCheck { spans: basis.len() == action.dim, basis_elements, basis })
}

/// Minimal sums of translates for every vector, by breadth-first search
/// from `0` adding one translate at a time, translates tried in element id
/// order.
#[derive(Debug, Clone)]
pub struct TranslateSearch {
    p: u32,
    dim: usize,
    // (parent code, element added) for every reached code
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

impl TranslateSearch {
    pub fn new(action: &GModuleAction, v: &[u32], caps: &Caps) -> Result<Self> {
        action.check_vector(v)?;
        let size = action.space_within(caps)?;
        let p = action.p;
        let translates: Vec<(usize, Vector)> = action.group.elements().map(|h| (h, action.translate(v, h))).collect();
        let mut parent = vec![None; size];
        let mut depth = vec![usize::MAX; size];
        depth[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let x = gfp::decode(c, p, action.dim);
            for (h, t) in &translates {
                let y = gfp::encode(&gfp::add_vec(&x, t, p), p);
                if depth[y] == usize::MAX {
                    depth[y] = depth[c] + 1;
                    parent[y] = Some((c, *h));
                    queue.push_back(y);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(Error::DoesNotSpan);
        }
        Ok(Self { p, dim: action.dim, parent, depth })
    }

    /// Elements `h_1 ≤ … ≤ h_r` with `w = Σ v^{h_i}` and `r` least.
    pub fn decompose(&self, w: &[u32]) -> Vec<usize> {
        let mut c = gfp::encode(w, self.p);
        let mut out = Vec::with_capacity(self.depth[c]);
        while let Some((prev, h)) = self.parent[c] {
            out.push(h);
            c = prev;
        }
        out.sort_unstable();
        out
    }

    /// The largest minimal length over all vectors.
    pub fn bound(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

pub fn translate_decomposition(action: &GModuleAction, v: &[u32], w: &[u32], caps: &Caps) -> Result<Vec<usize>> {
    action.check_vector(w)?;
    Ok(TranslateSearch::new(action, v, caps)?.decompose(w))
}

/// Two representations of one vector in `GF(p)[S]` whose products with
/// `e_factor` on the left have different images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IllDefinedWitness {
    pub factor: usize,
    /// Coefficients over the group elements.
    pub first: Vector,
    pub second: Vector,
    pub first_product: Vector,
    pub second_product: Vector,
}

#[derive(Debug, Clone)]
pub enum RingOutcome {
    Ring(ModuleRing),
    IllDefined(IllDefinedWitness),
}

/// `V` with `⊗`, elements coded by `gfp::encode` of their coordinates.
#[derive(Debug, Clone)]
pub struct ModuleRing {
    p: u32,
    dim: usize,
    size: usize,
    generator: Vector,
    basis_elements: Vec<usize>,
    // coordinates of x in the translate basis are x · change
    change: Matrix,
    // products[i][j] = v^{h_i h_j}
    products: Vec<Vec<Vector>>,
}

impl ModuleRing {
    pub fn generator(&self) -> &[u32] {
        &self.generator
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn basis_elements(&self) -> &[usize] {
        &self.basis_elements
    }

    pub fn vector(&self, code: usize) -> Vector {
        gfp::decode(code, self.p, self.dim)
    }

    pub fn code(&self, v: &[u32]) -> usize {
        gfp::encode(v, self.p)
    }

    pub fn tensor(&self, x: &[u32], y: &[u32]) -> Vector {
        let cx = gfp::vec_mat(x, &self.change, self.p);
        let cy = gfp::vec_mat(y, &self.change, self.p);
        let mut out = vec![0u32; self.dim];
        for (i, &a) in cx.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in cy.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = gfp::mul_mod(a, b, self.p);
                out = gfp::add_vec(&out, &gfp::scale_vec(&self.products[i][j], c, self.p), self.p);
            }
        }
        out
    }
}

impl FiniteRing for ModuleRing {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.code(&gfp::add_vec(&self.vector(a), &self.vector(b), self.p))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.code(&self.tensor(&self.vector(a), &self.vector(b)))
    }

    fn one(&self) -> Option<usize> {
        Some(self.code(&self.generator))
    }
}

/// Builds the ring, or a witness that `Ann(v)` is not a two-sided ideal.
pub fn ring_construct(action: &GModuleAction, v: &[u32], caps: &Caps) -> Result<RingOutcome> {
    let size = action.space_within(caps)?;
    let span = orbit_span_check(action, v)?;
    if !span.spans {
        return Err(Error::DoesNotSpan);
    }
    let p = action.p;
    let g = &action.group;
    let translates: Matrix = g.elements().map(|h| action.translate(v, h)).collect();
    // Ann(v) = {a : Σ a_g v^g = 0}; right multiplication preserves it, so
    // only left multiplication needs checking
    for a in gfp::left_null_space(&translates, p) {
        for h in g.elements() {
            let mut image = vec![0u32; action.dim];
            let mut shifted = vec![0u32; g.order()];
            for (x, &c) in a.iter().enumerate() {
                if c != 0 {
                    let hx = g.mul(h, x);
                    shifted[hx] = (shifted[hx] + c) % p;
                    image = gfp::add_vec(&image, &gfp::scale_vec(&translates[hx], c, p), p);
                }
            }
            if image.iter().any(|&x| x != 0) {
                let mut first = vec![0u32; g.order()];
                first[0] = 1;
                let second = gfp::add_vec(&first, &a, p);
                let first_product = translates[h].clone();
                let second_product = gfp::add_vec(&first_product, &image, p);
                return Ok(RingOutcome::IllDefined(IllDefinedWitness {
                    factor: h,
                    first,
                    second,
                    first_product,
                    second_product,
                }));
            }
        }
    }
    let change = gfp::inverse(&span.basis, p)?;
    let products = span
        .basis_elements
        .iter()
        .map(|&hi| span.basis_elements.iter().map(|&hj| translates[g.mul(hi, hj)].clone()).collect())
        .collect();
    Ok(RingOutcome::Ring(ModuleRing {
        p,
        dim: action.dim,
        size,
        generator: v.to_vec(),
        basis_elements: span.basis_elements,
        change,
        products,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    pub samples: usize,
    pub agree: bool,
    /// First disagreeing pair, as vectors.
    pub counterexample: Option<(Vector, Vector)>,
}

/// Compares `⊗` with `Σ_i Σ_j v^{h_i h'_j}` computed from minimal
/// decompositions of random pairs.
pub fn verify_translate_formula(
    action: &GModuleAction,
    ring: &ModuleRing,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<FormulaCheck> {
    let search = TranslateSearch::new(action, ring.generator(), caps)?;
    let g = &action.group;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = ring.vector(rng.gen_range(0..ring.size()));
        let y = ring.vector(rng.gen_range(0..ring.size()));
        let mut sum = vec![0u32; ring.dim];
        for &h in &search.decompose(&x) {
            for &k in &search.decompose(&y) {
                sum = gfp::add_vec(&sum, &action.translate(ring.generator(), g.mul(h, k)), ring.p);
            }
        }
        if sum != ring.tensor(&x, &y) {
            return Ok(FormulaCheck { samples, agree: false, counterexample: Some((x, y)) });
        }
    }
    Ok(FormulaCheck { samples, agree: true, counterexample: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerEntry {
    pub vector: Vector,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    /// Elements acting as the identity.
    pub kernel: Vec<usize>,
    pub faithful: bool,
    pub stabilizers: Vec<StabilizerEntry>,
    /// Some vector has trivial stabilizer.
    pub has_regular_vector: bool,
}

pub fn faithfulness_report(action: &GModuleAction, caps: &Caps) -> Result<FaithfulnessReport> {
    let size = action.space_within(caps)?;
    let g = &action.group;
    let id = gfp::identity(action.dim);
    let kernel: Vec<usize> = g.elements().filter(|&h| action.matrices[h] == id).collect();
    let stabilizers: Vec<StabilizerEntry> = (0..size)
        .map(|c| {
            let v = gfp::decode(c, action.p, action.dim);
            let fixed = g.elements().filter(|&h| action.translate(&v, h) == v).count();
            StabilizerEntry { vector: v, index: g.order() / fixed }
        })
        .collect();
    let has_regular_vector = stabilizers.iter().any(|s| s.index == g.order());
    Ok(FaithfulnessReport { faithful: kernel.len() == 1, kernel, stabilizers, has_regular_vector })
}
