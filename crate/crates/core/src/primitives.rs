//! Exhaustive skew-primitive computation within a weight truncation.
//!
//! For a group-like g, the space P_(1,g) consists of the v with
//! Δ(v) = 1⊗v + v⊗g. Writing v = Σ λ_w·w over all irreducible words of
//! weight ≤ W turns the condition into an exact sparse linear system in the
//! λ_w; the solution space is then reduced modulo the line k(g−1), giving
//! V_g = P_(1,g)/k(g−1). Solutions are exact; completeness is certified only
//! up to the weight bound.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::FieldElement;
use crate::freealg::{NcPoly, TensorPoly, Word};
use crate::hopf::{HopfError, HopfPresentation, StructReport};
use crate::linalg::SparseEchelon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimitivesError {
    /// The candidate is not group-like under the relations.
    NotGroupLike { word: Word },
    Hopf(HopfError),
}

impl From<HopfError> for PrimitivesError {
    fn from(e: HopfError) -> PrimitivesError {
        PrimitivesError::Hopf(e)
    }
}

impl fmt::Display for PrimitivesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimitivesError::NotGroupLike { word } => {
                write!(f, "{word} is not group-like under the relations")
            }
            PrimitivesError::Hopf(e) => write!(f, "{e}"),
        }
    }
}

/// Basis of V_g within the weight truncation.
#[derive(Clone, Debug)]
pub struct PrimitiveSolution {
    /// The irreducible words indexing solution coordinates.
    pub words: Vec<Word>,
    /// Class representatives, reduced modulo k(g−1), first nonzero entry 1.
    pub vectors: Vec<Vec<FieldElement>>,
    /// The same representatives as polynomials.
    pub polys: Vec<NcPoly>,
    /// λ-vector of g − 1, when g ≠ 1.
    g_line: Option<Vec<FieldElement>>,
    /// True when the enumeration exhausted all irreducible words.
    pub basis_exact: bool,
}

impl PrimitiveSolution {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Whether f lies in span(solutions) + k(g−1). The polynomial must be
    /// supported on the truncated word basis.
    pub fn contains(&self, h: &HopfPresentation, f: &NcPoly) -> bool {
        let cols: BTreeMap<&Word, usize> =
            self.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let spec = h.spec();
        let mut span = SparseEchelon::new(self.words.len(), spec);
        let mut rows: Vec<&Vec<FieldElement>> = self.vectors.iter().collect();
        if let Some(line) = &self.g_line {
            rows.push(line);
        }
        for v in rows {
            let row: BTreeMap<usize, FieldElement> = v
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(i, e)| (i, e.clone()))
                .collect();
            span.insert(row);
        }
        let nf = h.normal_form(f);
        let mut row = BTreeMap::new();
        for (w, c) in nf.terms() {
            let Some(&i) = cols.get(w) else { return false };
            row.insert(i, c.clone());
        }
        span.reduce(&row).is_empty()
    }
}

/// Coproducts of all irreducible words, reduced after every letter so the
/// intermediate tensors stay small. Enumeration order guarantees prefixes
/// are computed first.
fn word_coproducts(
    h: &HopfPresentation,
    words: &[Word],
) -> Result<BTreeMap<Word, TensorPoly>, PrimitivesError> {
    let spec = h.spec();
    let mut out: BTreeMap<Word, TensorPoly> = BTreeMap::new();
    out.insert(Word::empty(), TensorPoly::one(2, spec));
    for w in words {
        if w.is_empty() {
            continue;
        }
        let prefix = w.subrange(0, w.len() - 1);
        let last = w.subrange(w.len() - 1, w.len());
        let prev = out.get(&prefix).expect("prefix enumerated first").clone();
        let step = h.coproduct(&NcPoly::word(last, spec))?;
        let raw = prev.multiply(&step).expect("arity 2");
        out.insert(w.clone(), h.tensor_normal_form(&raw));
    }
    Ok(out)
}

/// Solve for V_g = P_(1,g)/k(g−1) over all irreducible words of weight ≤ W.
pub fn solve_skew_primitives(
    h: &HopfPresentation,
    g: &Word,
    max_weight: u64,
) -> Result<PrimitiveSolution, PrimitivesError> {
    let spec = h.spec().clone();
    let gnf = h.normal_form(&NcPoly::word(g.clone(), &spec));
    let g_word = match gnf.as_constant(&spec) {
        Some(c) if c == spec.one() => Word::empty(),
        _ => {
            let mut terms = gnf.terms();
            match (terms.next(), terms.next()) {
                (Some((w, c)), None) if *c == spec.one() => w.clone(),
                _ => return Err(PrimitivesError::NotGroupLike { word: g.clone() }),
            }
        }
    };
    if h.coproduct(&gnf)? != TensorPoly::term(alloc::vec![g_word.clone(), g_word.clone()], spec.one())
    {
        return Err(PrimitivesError::NotGroupLike { word: g.clone() });
    }

    let basis = h.basis_words(max_weight);
    let words = basis.words;
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let deltas = word_coproducts(h, &words)?;

    // Δ(v) − 1⊗v − v⊗g = 0, one equation per tensor monomial
    let mut equations: BTreeMap<(Word, Word), BTreeMap<usize, FieldElement>> = BTreeMap::new();
    let mut push = |u: &Word, v: &Word, col: usize, c: FieldElement| {
        if c.is_zero() {
            return;
        }
        let row = equations.entry((u.clone(), v.clone())).or_default();
        match row.remove(&col) {
            None => {
                row.insert(col, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    row.insert(col, sum);
                }
            }
        }
    };
    for (col, w) in words.iter().enumerate() {
        for (key, c) in deltas[w].terms() {
            push(&key[0], &key[1], col, c.clone());
        }
        push(&Word::empty(), w, col, spec.one().negated());
        push(w, &g_word, col, spec.one().negated());
    }

    let mut system = SparseEchelon::new(words.len(), &spec);
    for (_, row) in equations {
        system.insert(row);
    }
    let kernel = system.kernel_basis();

    // quotient modulo k(g−1)
    let g_line = if g_word.is_empty() {
        None
    } else {
        let mut line = alloc::vec![spec.zero(); words.len()];
        line[index[&g_word]] = spec.one();
        line[index[&Word::empty()]] = spec.one().negated();
        Some(line)
    };
    let mut classes = SparseEchelon::new(words.len(), &spec);
    if let Some(line) = &g_line {
        let row: BTreeMap<usize, FieldElement> = line
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| (i, e.clone()))
            .collect();
        classes.insert(row);
    }
    let offset = classes.rank();
    for v in kernel {
        let row: BTreeMap<usize, FieldElement> = v
            .into_iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .collect();
        classes.insert(row);
    }
    let mut vectors = classes.row_basis();
    // drop the k(g−1) pivot row itself
    if offset == 1 {
        let line = g_line.as_ref().expect("offset implies line");
        let pivot = line.iter().position(|e| !e.is_zero()).expect("line nonzero");
        vectors.retain(|v| {
            let vp = v.iter().position(|e| !e.is_zero());
            vp != Some(pivot)
        });
    }
    let polys = vectors
        .iter()
        .map(|v| {
            let mut p = NcPoly::zero();
            for (i, c) in v.iter().enumerate() {
                p.add_term(words[i].clone(), c.clone());
            }
            p
        })
        .collect();
    Ok(PrimitiveSolution {
        words,
        vectors,
        polys,
        g_line,
        basis_exact: basis.exact,
    })
}

#[derive(Clone, Debug)]
pub struct GrouplikeReport {
    pub elements: Vec<NcPoly>,
    pub report: StructReport,
}

/// Close the tagged group-like generators under multiplication and verify
/// each element is genuinely group-like and pairwise distinct.
pub fn check_grouplikes(h: &HopfPresentation) -> Result<GrouplikeReport, PrimitivesError> {
    let spec = h.spec().clone();
    let tags = h.tags().ok_or(HopfError::NoCoalgebraStructure)?;
    let gens: Vec<NcPoly> = tags
        .iter()
        .enumerate()
        .filter(|(_, t)| matches!(t, crate::hopf::CoalgebraTag::GroupLike))
        .map(|(i, _)| h.generator_poly(i))
        .collect();
    let mut elements = alloc::vec![NcPoly::one(&spec)];
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &gens {
                let prod = h.normal_form(&e.multiply(g));
                if !elements.contains(&prod) {
                    elements.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
        if elements.len() > 64 {
            break;
        }
    }
    let mut report = StructReport::default();
    for e in &elements {
        let d = h.coproduct(e)?;
        let expect = h.tensor_normal_form(&TensorPoly::pure(&[e.clone(), e.clone()], &spec));
        report.checks += 1;
        if d != expect {
            report
                .failures
                .push(format!("element {} is not group-like", describe(h, e)));
        }
    }
    // distinctness is free: `elements` stores normal forms and skips repeats
    report.checks += 1;
    // closure under product
    for e in &elements {
        for g in &gens {
            let prod = h.normal_form(&e.multiply(g));
            report.checks += 1;
            if !elements.contains(&prod) {
                report
                    .failures
                    .push(format!("product {} escapes the set", describe(h, &prod)));
            }
        }
    }
    Ok(GrouplikeReport { elements, report })
}

fn describe(h: &HopfPresentation, f: &NcPoly) -> String {
    h.render_poly(f)
}
