//! Braided vector spaces and quantum symmetrizers.
//!
//! A Yetter–Drinfeld braiding is assembled from conjugation by the group-like
//! attached to each basis vector; the quantum symmetrizer S_n is built by the
//! coset recursion S_n = (id + Σ_k C_k⋯C_{n−1})·(S_{n−1}⊗id), which is well
//! defined by Matsumoto's theorem once the braid equation holds. Per-degree
//! ranks of S_n are the Hilbert function of the Nichols algebra.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{FieldElement, FieldSpec};
use crate::freealg::{NcPoly, Word};
use crate::hopf::{HopfError, HopfPresentation};
use crate::linalg::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NicholsError {
    /// Braiding matrix is not d²×d².
    BadDimensions,
    /// The braid equation fails, so symmetrizers are ill defined.
    BraidEquationFails,
    /// A conjugated vector cannot be expressed in the span of the space.
    ConjugationEscapes { index: usize },
    DegreeTooLarge { requested: usize, cap: usize },
    /// The presentation lacks the named elements this space is built from.
    UnsupportedPresentation,
    Hopf(HopfError),
}

impl From<HopfError> for NicholsError {
    fn from(e: HopfError) -> NicholsError {
        NicholsError::Hopf(e)
    }
}

impl fmt::Display for NicholsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NicholsError::BadDimensions => write!(f, "braiding must be d^2 x d^2"),
            NicholsError::BraidEquationFails => write!(f, "braiding fails the braid equation"),
            NicholsError::ConjugationEscapes { index } => {
                write!(f, "conjugate of basis vector #{index} leaves the space")
            }
            NicholsError::DegreeTooLarge { requested, cap } => {
                write!(f, "degree {requested} exceeds the cap {cap}")
            }
            NicholsError::UnsupportedPresentation => {
                write!(f, "presentation lacks the elements this space needs")
            }
            NicholsError::Hopf(e) => write!(f, "{e}"),
        }
    }
}

pub const DEGREE_CAP: usize = 8;

type SparseVec = BTreeMap<usize, FieldElement>;

/// A finite-dimensional vector space with a braiding c: V⊗V → V⊗V.
///
/// Tensor basis indices are read with the first slot most significant:
/// e_i ⊗ e_j has index i·d + j.
#[derive(Clone, Debug)]
pub struct BraidedVectorSpace {
    dim: usize,
    labels: Vec<String>,
    braiding: ExactMatrix,
    spec: FieldSpec,
}

impl BraidedVectorSpace {
    pub fn new(
        labels: Vec<String>,
        braiding: ExactMatrix,
        spec: FieldSpec,
    ) -> Result<BraidedVectorSpace, NicholsError> {
        let d = labels.len();
        if braiding.rows() != d * d || braiding.cols() != d * d {
            return Err(NicholsError::BadDimensions);
        }
        Ok(BraidedVectorSpace { dim: d, labels, braiding, spec })
    }

    /// The flip u⊗w ↦ w⊗u scaled by `sign` (τ and −τ).
    pub fn scaled_flip(d: usize, sign: i64, spec: &FieldSpec) -> BraidedVectorSpace {
        let mut m = ExactMatrix::zero(d * d, d * d, spec);
        for i in 0..d {
            for j in 0..d {
                m.set(j * d + i, i * d + j, spec.integer(sign));
            }
        }
        let labels = (0..d).map(|i| alloc::format!("e{i}")).collect();
        BraidedVectorSpace { dim: d, labels, braiding: m, spec: spec.clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn braiding(&self) -> &ExactMatrix {
        &self.braiding
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Exact check of (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on V⊗³.
    pub fn check_braid_equation(&self) -> bool {
        let n = 3;
        let dn = self.dim.pow(n as u32);
        let side = |first: usize, second: usize, third: usize| -> ExactMatrix {
            let mut cols = Vec::with_capacity(dn);
            for t in 0..dn {
                let mut v: SparseVec = BTreeMap::new();
                v.insert(t, self.spec.one());
                for &pos in &[first, second, third] {
                    v = self.apply_c_at(&v, pos, n);
                }
                cols.push(v);
            }
            columns_to_matrix(&cols, dn, &self.spec)
        };
        // rightmost factor acts first
        side(0, 1, 0) == side(1, 0, 1)
    }

    /// Apply c at adjacent slots (pos, pos+1) of V⊗ⁿ to a sparse vector.
    fn apply_c_at(&self, v: &SparseVec, pos: usize, n: usize) -> SparseVec {
        let d = self.dim;
        let shift = d.pow((n - pos - 2) as u32);
        let mut out: SparseVec = BTreeMap::new();
        for (&idx, c) in v {
            let pair = idx / shift % (d * d);
            let base = idx - pair * shift;
            let col = pair; // already i·d + j
            for row in 0..d * d {
                let e = self.braiding.get(row, col);
                if e.is_zero() {
                    continue;
                }
                let nidx = base + row * shift;
                let add = c.mul(e);
                match out.remove(&nidx) {
                    None => {
                        out.insert(nidx, add);
                    }
                    Some(old) => {
                        let sum = old.add(&add);
                        if !sum.is_zero() {
                            out.insert(nidx, sum);
                        }
                    }
                }
            }
        }
        out
    }

    /// Lift a word in adjacent transpositions (0-indexed positions) to an
    /// operator on V⊗ⁿ; the rightmost letter acts first.
    pub fn lift_word(&self, n: usize, word: &[usize]) -> ExactMatrix {
        let dn = self.dim.pow(n as u32);
        let mut cols = Vec::with_capacity(dn);
        for t in 0..dn {
            let mut v: SparseVec = BTreeMap::new();
            v.insert(t, self.spec.one());
            for &pos in word.iter().rev() {
                v = self.apply_c_at(&v, pos, n);
            }
            cols.push(v);
        }
        columns_to_matrix(&cols, dn, &self.spec)
    }

    /// Columns of the quantum symmetrizer S_n, sparse.
    fn symmetrizer_columns(&self, n: usize) -> Result<Vec<Vec<SparseVec>>, NicholsError> {
        if n > DEGREE_CAP {
            return Err(NicholsError::DegreeTooLarge { requested: n, cap: DEGREE_CAP });
        }
        if !self.check_braid_equation() {
            return Err(NicholsError::BraidEquationFails);
        }
        let d = self.dim;
        let mut levels: Vec<Vec<SparseVec>> = Vec::with_capacity(n + 1);
        levels.push(alloc::vec![[(0usize, self.spec.one())].into_iter().collect()]);
        for m in 1..=n {
            let prev = &levels[m - 1];
            let mut cols = Vec::with_capacity(d.pow(m as u32));
            for t in 0..d.pow(m as u32) {
                let head = t / d;
                let last = t % d;
                // (S_{m−1} ⊗ id) e_t
                let embedded: SparseVec = prev[head]
                    .iter()
                    .map(|(&i, c)| (i * d + last, c.clone()))
                    .collect();
                // id + Σ_k C_k C_{k+1} ⋯ C_{m−1}, cumulated from the right
                let mut total = embedded.clone();
                let mut cum = embedded;
                for pos in (0..m.saturating_sub(1)).rev() {
                    cum = self.apply_c_at(&cum, pos, m);
                    for (&i, c) in &cum {
                        match total.remove(&i) {
                            None => {
                                total.insert(i, c.clone());
                            }
                            Some(old) => {
                                let sum = old.add(c);
                                if !sum.is_zero() {
                                    total.insert(i, sum);
                                }
                            }
                        }
                    }
                }
                cols.push(total);
            }
            levels.push(cols);
        }
        Ok(levels)
    }

    /// The quantum symmetrizer S_n as a dense matrix on V⊗ⁿ.
    pub fn symmetrizer(&self, n: usize) -> Result<ExactMatrix, NicholsError> {
        let levels = self.symmetrizer_columns(n)?;
        let dn = self.dim.pow(n as u32);
        Ok(columns_to_matrix(&levels[n], dn, &self.spec))
    }

    /// Per-degree ranks and kernel dimensions up to `max_degree`.
    pub fn nichols_dims(&self, max_degree: usize) -> Result<SymmetrizerReport, NicholsError> {
        let levels = self.symmetrizer_columns(max_degree)?;
        let mut ranks = Vec::with_capacity(max_degree + 1);
        let mut kernel_dims = Vec::with_capacity(max_degree + 1);
        for (n, cols) in levels.iter().enumerate() {
            let dn = self.dim.pow(n as u32);
            let rank = columns_to_matrix(cols, dn, &self.spec).rank();
            ranks.push(rank);
            kernel_dims.push(dn - rank);
        }
        let total = ranks.iter().sum();
        let terminated = ranks.last() == Some(&0);
        let p = self.spec.characteristic();
        let char_caveat = p != 0 && max_degree as u64 >= p;
        Ok(SymmetrizerReport { ranks, kernel_dims, total, terminated, char_caveat })
    }

    /// Check that each relation (a vector in V⊗ⁿ) is annihilated by S_n.
    pub fn check_relations_in_kernel(
        &self,
        relations: &[BraidedTensor],
    ) -> Result<Vec<bool>, NicholsError> {
        let max_n = relations.iter().map(|r| r.degree).max().unwrap_or(0);
        let levels = self.symmetrizer_columns(max_n)?;
        let mut out = Vec::with_capacity(relations.len());
        for rel in relations {
            let cols = &levels[rel.degree];
            let mut acc: SparseVec = BTreeMap::new();
            for (t, c) in rel.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (&i, e) in &cols[t] {
                    let add = c.mul(e);
                    match acc.remove(&i) {
                        None => {
                            acc.insert(i, add);
                        }
                        Some(old) => {
                            let sum = old.add(&add);
                            if !sum.is_zero() {
                                acc.insert(i, sum);
                            }
                        }
                    }
                }
            }
            out.push(acc.is_empty());
        }
        Ok(out)
    }

    /// The braided direct sum, for Yetter–Drinfeld spaces stacked blockwise:
    /// requires the cross-braidings as part of the combined matrix, so this
    /// is only valid when both summands came from the same construction.
    pub fn dims_match(&self, other: &BraidedVectorSpace) -> bool {
        self.spec == other.spec && self.dim == other.dim
    }
}

/// An element of V⊗ⁿ in coordinates.
#[derive(Clone, Debug)]
pub struct BraidedTensor {
    pub degree: usize,
    pub coords: Vec<FieldElement>,
}

impl BraidedTensor {
    /// Build from monomials: each is (coefficient, basis digits), e.g.
    /// u²v = (1, [0,0,1]) for u = e₀, v = e₁.
    pub fn from_monomials(
        d: usize,
        degree: usize,
        monomials: &[(FieldElement, Vec<usize>)],
        spec: &FieldSpec,
    ) -> BraidedTensor {
        let mut coords = alloc::vec![spec.zero(); d.pow(degree as u32)];
        for (c, digits) in monomials {
            debug_assert_eq!(digits.len(), degree);
            let mut idx = 0;
            for &g in digits {
                idx = idx * d + g;
            }
            coords[idx] = coords[idx].add(c);
        }
        BraidedTensor { degree, coords }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizerReport {
    /// ranks[n] = rank S_n; ranks[0] = 1.
    pub ranks: Vec<usize>,
    pub kernel_dims: Vec<usize>,
    pub total: usize,
    /// The last computed rank is zero.
    pub terminated: bool,
    /// Positive characteristic ≤ max degree: n! vanishes, paper comparisons
    /// are not meaningful.
    pub char_caveat: bool,
}

fn columns_to_matrix(cols: &[SparseVec], rows: usize, spec: &FieldSpec) -> ExactMatrix {
    let mut m = ExactMatrix::zero(rows, cols.len(), spec);
    for (j, col) in cols.iter().enumerate() {
        for (&i, c) in col {
            m.set(i, j, c.clone());
        }
    }
    m
}

/// Assemble the Yetter–Drinfeld braiding on class representatives: each
/// entry pairs a group-like word with a representative, and
/// c(u_i ⊗ u_j) = (g_i·u_j·g_i⁻¹ mod k(g_j−1)) ⊗ u_i, expanded over the
/// span of the representatives.
pub fn braiding_from_yd(
    h: &HopfPresentation,
    entries: &[(Word, NcPoly)],
    labels: Vec<String>,
) -> Result<BraidedVectorSpace, NicholsError> {
    let spec = h.spec().clone();
    let d = entries.len();
    let reps: Vec<NcPoly> = entries.iter().map(|(_, u)| h.normal_form(u)).collect();
    let slacks: Vec<NcPoly> = entries
        .iter()
        .map(|(g, _)| {
            h.normal_form(&NcPoly::word(g.clone(), &spec)).sub(&NcPoly::one(&spec))
        })
        .collect();
    // conjugates g_i u_j g_i⁻¹
    let mut conj = alloc::vec![alloc::vec![NcPoly::zero(); d]; d];
    for (i, (g, _)) in entries.iter().enumerate() {
        let g_poly = NcPoly::word(g.clone(), &spec);
        let g_inv = h.grouplike_inverse(g)?;
        for (j, u) in reps.iter().enumerate() {
            conj[i][j] = h.normal_form(&g_poly.multiply(u).multiply(&g_inv));
        }
    }
    // common word index over all polynomials involved
    let mut words: BTreeMap<Word, usize> = BTreeMap::new();
    let mut note = |p: &NcPoly| {
        for (w, _) in p.terms() {
            let next = words.len();
            words.entry(w.clone()).or_insert(next);
        }
    };
    for p in reps.iter().chain(slacks.iter()) {
        note(p);
    }
    for row in &conj {
        for p in row {
            note(p);
        }
    }
    let rows = words.len();
    let vectorize = |p: &NcPoly| -> Vec<FieldElement> {
        let mut v = alloc::vec![spec.zero(); rows];
        for (w, c) in p.terms() {
            v[words[w]] = c.clone();
        }
        v
    };
    let mut braiding = ExactMatrix::zero(d * d, d * d, &spec);
    for i in 0..d {
        for j in 0..d {
            // express conj[i][j] = Σ_m α_m·u_m + β·(g_j − 1)
            let mut m = ExactMatrix::zero(rows, d + 1, &spec);
            for (col, u) in reps.iter().enumerate() {
                for (r, e) in vectorize(u).into_iter().enumerate() {
                    m.set(r, col, e);
                }
            }
            for (r, e) in vectorize(&slacks[j]).into_iter().enumerate() {
                m.set(r, d, e);
            }
            let Some(sol) = m.solve(&vectorize(&conj[i][j])) else {
                return Err(NicholsError::ConjugationEscapes { index: j });
            };
            for (mi, alpha) in sol.iter().take(d).enumerate() {
                // c(u_i ⊗ u_j) gains alpha · (u_m ⊗ u_i)
                braiding.set(mi * d + i, i * d + j, alpha.clone());
            }
        }
    }
    BraidedVectorSpace::new(labels, braiding, spec)
}

fn alias_nf(h: &HopfPresentation, name: &str) -> Result<NcPoly, NicholsError> {
    h.alias(name)
        .cloned()
        .ok_or(NicholsError::UnsupportedPresentation)
}

/// The 2-dimensional space {x, axa²} in the a-component, braided by
/// conjugation. Coincides with the closed-form braiding below.
pub fn space_va_derived(h: &HopfPresentation) -> Result<BraidedVectorSpace, NicholsError> {
    let spec = h.spec().clone();
    let a = Word::generator(crate::hopf::catalog::GA);
    let x = alias_nf(h, "x")?;
    let a_poly = NcPoly::word(a.clone(), &spec);
    let a2 = NcPoly::word(a.pow(2), &spec);
    let axa2 = h.normal_form(&a_poly.multiply(&x).multiply(&a2));
    braiding_from_yd(
        h,
        &[(a.clone(), x), (a, axa2)],
        alloc::vec!["u".into(), "v".into()],
    )
}

/// The same braiding written out entrywise: u⊗u ↦ v⊗u, u⊗v ↦ −u⊗u − v⊗u,
/// v⊗u ↦ v⊗v, v⊗v ↦ −u⊗v − v⊗v.
pub fn space_va_closed_form(spec: &FieldSpec) -> BraidedVectorSpace {
    let mut m = ExactMatrix::zero(4, 4, spec);
    m.set(2, 0, spec.one());
    m.set(0, 1, spec.integer(-1));
    m.set(2, 1, spec.integer(-1));
    m.set(3, 2, spec.one());
    m.set(1, 3, spec.integer(-1));
    m.set(3, 3, spec.integer(-1));
    BraidedVectorSpace {
        dim: 2,
        labels: alloc::vec!["u".into(), "v".into()],
        braiding: m,
        spec: spec.clone(),
    }
}

/// The line spanned by y in the b-component; the braiding is −τ.
pub fn space_vb(h: &HopfPresentation) -> Result<BraidedVectorSpace, NicholsError> {
    let b = Word::generator(crate::hopf::catalog::GB);
    let y = alias_nf(h, "y")?;
    braiding_from_yd(h, &[(b, y)], alloc::vec!["y".into()])
}

/// The plane {x²+x³, F³} of honest primitives; the braiding is the flip.
pub fn space_v1(h: &HopfPresentation) -> Result<BraidedVectorSpace, NicholsError> {
    let spec = h.spec().clone();
    let x = alias_nf(h, "x")?;
    let x2x3 = h.normal_form(&x.pow(2, &spec).add(&x.pow(3, &spec)));
    let f_cube = NcPoly::word(Word::generator(crate::hopf::catalog::GF).pow(3), &spec);
    braiding_from_yd(
        h,
        &[(Word::empty(), x2x3), (Word::empty(), f_cube)],
        alloc::vec!["w1".into(), "w2".into()],
    )
}

/// The direct sum V_1 ⊕ V_b with its conjugation braiding.
pub fn space_v1_plus_vb(h: &HopfPresentation) -> Result<BraidedVectorSpace, NicholsError> {
    let spec = h.spec().clone();
    let x = alias_nf(h, "x")?;
    let x2x3 = h.normal_form(&x.pow(2, &spec).add(&x.pow(3, &spec)));
    let f_cube = NcPoly::word(Word::generator(crate::hopf::catalog::GF).pow(3), &spec);
    let y = alias_nf(h, "y")?;
    braiding_from_yd(
        h,
        &[
            (Word::empty(), x2x3),
            (Word::empty(), f_cube),
            (Word::generator(crate::hopf::catalog::GB), y),
        ],
        alloc::vec!["w1".into(), "w2".into(), "y".into()],
    )
}

/// A reduced word for the permutation (as a sequence of 0-indexed adjacent
/// positions), via left-to-right bubble sort.
pub fn reduced_word_bubble(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    // sorting word reversed is a reduced expression for perm itself
    word.reverse();
    word
}

/// An independently chosen reduced word: right-to-left scans.
pub fn reduced_word_reverse_scan(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in (0..p.len().saturating_sub(1)).rev() {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    word
}
