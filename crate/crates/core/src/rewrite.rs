//! Diamond-lemma rewriting for finitely presented algebras.
//!
//! A [`RewriteSystem`] is a terminating set of reduction rules over a free
//! algebra, ordered by a weighted degree-lexicographic [`MonomialOrder`].
//! Normal forms, overlap/inclusion ambiguities, confluence certification,
//! bounded Knuth–Bendix-style completion and irreducible-word enumeration all
//! live here.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coeff::FieldElement;
use crate::freealg::{NcPoly, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    /// A relation whose leading term is a nonzero constant: the presented
    /// algebra collapses.
    InconsistentPresentation,
    /// Relation is identically zero, nothing to orient.
    ZeroRelation,
    /// Rule fails the order invariant (some rhs monomial ≥ lhs).
    MisorientedRule { lhs: Word },
    /// Completion exceeded its internal safety bound.
    CompletionOverflow,
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::InconsistentPresentation => {
                write!(f, "inconsistent presentation: a relation reduces to a nonzero constant")
            }
            RewriteError::ZeroRelation => write!(f, "relation is identically zero"),
            RewriteError::MisorientedRule { lhs } => {
                write!(f, "rule with lhs {lhs} is not decreasing in the monomial order")
            }
            RewriteError::CompletionOverflow => write!(f, "completion rule budget exhausted"),
        }
    }
}

/// Weighted degree-lexicographic order on words.
///
/// Comparison is by total generator weight, then word length, then
/// left-to-right by generator precedence (declaration order). This order is
/// total, multiplicative and well-founded, so rules whose right-hand monomials
/// are strictly smaller than the left-hand side always terminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u64>,
}

impl MonomialOrder {
    pub fn new(weights: Vec<u64>) -> MonomialOrder {
        MonomialOrder { weights }
    }

    pub fn num_generators(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, word: &Word) -> u64 {
        word.letters().map(|g| self.weights[g]).sum()
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| a.raw().cmp(b.raw()))
    }

    /// The maximal monomial of a nonzero polynomial.
    pub fn leading_term<'a>(&self, f: &'a NcPoly) -> Option<(&'a Word, &'a FieldElement)> {
        f.terms().max_by(|(u, _), (v, _)| self.cmp(u, v))
    }
}

/// One reduction rule lhs → rhs with every rhs monomial strictly below lhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl RewriteRule {
    /// lhs − rhs as a polynomial.
    pub fn relation(&self, coeff_one: &FieldElement) -> NcPoly {
        let mut rel = NcPoly::term(self.lhs.clone(), coeff_one.clone());
        rel.add_assign(&self.rhs.negated());
        rel
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// A proper suffix of one lhs equals a proper prefix of another.
    Overlap,
    /// One lhs occurs strictly inside another.
    Inclusion,
}

/// A word with two distinct one-step reductions.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub left_rule: usize,
    pub right_rule: usize,
    pub witness: Word,
    pub kind: AmbiguityKind,
    /// Offset of the right rule's lhs inside the witness.
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct ConfluenceFailure {
    pub witness: Word,
    pub left_normal_form: NcPoly,
    pub right_normal_form: NcPoly,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub ambiguities: usize,
    pub resolved: usize,
    pub failures: Vec<ConfluenceFailure>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    /// Confluence certified only for words of weight ≤ the requested bound.
    Truncated,
}

#[derive(Clone, Debug)]
pub struct BasisEnumeration {
    pub words: Vec<Word>,
    /// True when the whole irreducible set was exhausted (the algebra is
    /// finite-dimensional or all irreducible words fit under the bound).
    pub exact: bool,
}

impl BasisEnumeration {
    pub fn total(&self) -> Option<usize> {
        self.exact.then_some(self.words.len())
    }
}

/// A terminating, inter-reduced rewriting system.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
}

impl RewriteSystem {
    /// Orient a set of relations (each read as "= 0") and inter-reduce.
    pub fn from_relations(
        order: MonomialOrder,
        relations: &[NcPoly],
    ) -> Result<RewriteSystem, RewriteError> {
        let mut sys = RewriteSystem { order, rules: Vec::new() };
        for rel in relations {
            if rel.is_zero() {
                continue;
            }
            let rule = relation_to_rule(&sys.order, rel)?;
            sys.rules.push(rule);
        }
        sys.inter_reduce()?;
        Ok(sys)
    }

    /// Take rules as given, validate the order invariant, then inter-reduce.
    pub fn from_rules(
        order: MonomialOrder,
        rules: Vec<RewriteRule>,
    ) -> Result<RewriteSystem, RewriteError> {
        for rule in &rules {
            for (w, _) in rule.rhs.terms() {
                if order.cmp(w, &rule.lhs) != Ordering::Less {
                    return Err(RewriteError::MisorientedRule { lhs: rule.lhs.clone() });
                }
            }
        }
        let mut sys = RewriteSystem { order, rules };
        sys.inter_reduce()?;
        Ok(sys)
    }

    /// Take rules verbatim with no inter-reduction. Intended for constructed
    /// negative controls; the order invariant is still enforced so reduction
    /// terminates.
    pub fn from_rules_raw(
        order: MonomialOrder,
        rules: Vec<RewriteRule>,
    ) -> Result<RewriteSystem, RewriteError> {
        for rule in &rules {
            for (w, _) in rule.rhs.terms() {
                if order.cmp(w, &rule.lhs) != Ordering::Less {
                    return Err(RewriteError::MisorientedRule { lhs: rule.lhs.clone() });
                }
            }
        }
        Ok(RewriteSystem { order, rules })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn num_generators(&self) -> usize {
        self.order.num_generators()
    }

    /// Leftmost match of any rule inside `word`: (position, rule index).
    fn find_match(&self, word: &Word) -> Option<(usize, usize)> {
        let w = word.raw();
        for pos in 0..w.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.raw();
                if !l.is_empty() && pos + l.len() <= w.len() && &w[pos..pos + l.len()] == l {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        self.find_match(word).is_none()
    }

    /// The unique normal form of `f`: no monomial of the result contains any
    /// rule's lhs. Reduction picks the largest reducible monomial first and
    /// the leftmost match inside it, so the computation is deterministic.
    pub fn normal_form(&self, f: &NcPoly) -> NcPoly {
        let mut done = NcPoly::zero();
        let mut pending = f.clone();
        while !pending.is_zero() {
            // largest monomial of the pending part
            let (word, coeff) = {
                let (w, c) = self
                    .order
                    .leading_term(&pending)
                    .expect("pending is nonzero");
                (w.clone(), c.clone())
            };
            match self.find_match(&word) {
                None => {
                    done.add_term(word.clone(), coeff.clone());
                    pending.add_term(word, coeff.negated());
                }
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let prefix = word.subrange(0, pos);
                    let suffix = word.subrange(pos + rule.lhs.len(), word.len());
                    // replace c·(prefix · lhs · suffix) by c·(prefix · rhs · suffix)
                    pending.add_term(word, coeff.negated());
                    let replaced = NcPoly::term(prefix, coeff)
                        .multiply(&rule.rhs)
                        .multiply(&NcPoly::term(suffix, coeff_one_like(&self.rules[ri]) ));
                    pending.add_assign(&replaced);
                }
            }
        }
        done
    }

    /// All overlap and inclusion ambiguities among the rule left-hand sides.
    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            let li = ri.lhs.raw();
            for (j, rj) in self.rules.iter().enumerate() {
                let lj = rj.lhs.raw();
                // overlap: proper suffix of lhs_i = proper prefix of lhs_j
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] == lj[..k] {
                        let mut w = li.to_vec();
                        w.extend_from_slice(&lj[k..]);
                        out.push(Ambiguity {
                            left_rule: i,
                            right_rule: j,
                            witness: word_from_raw(&w),
                            kind: AmbiguityKind::Overlap,
                            offset: li.len() - k,
                        });
                    }
                }
                // duplicate lhs: two rules reduce the same word
                if i < j && li == lj {
                    out.push(Ambiguity {
                        left_rule: i,
                        right_rule: j,
                        witness: ri.lhs.clone(),
                        kind: AmbiguityKind::Inclusion,
                        offset: 0,
                    });
                }
                // inclusion: lhs_j strictly inside lhs_i
                if i != j && lj.len() < li.len() {
                    for pos in 0..=li.len() - lj.len() {
                        if &li[pos..pos + lj.len()] == lj {
                            out.push(Ambiguity {
                                left_rule: i,
                                right_rule: j,
                                witness: ri.lhs.clone(),
                                kind: AmbiguityKind::Inclusion,
                                offset: pos,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// The two one-step reductions of an ambiguity witness.
    pub fn ambiguity_branches(&self, amb: &Ambiguity) -> (NcPoly, NcPoly) {
        let one = self.coeff_one();
        let witness = amb.witness.raw();
        let left_rule = &self.rules[amb.left_rule];
        let right_rule = &self.rules[amb.right_rule];
        // left branch: apply left rule at position 0
        let l_len = left_rule.lhs.len();
        let left_tail = word_from_raw(&witness[l_len..]);
        let left = left_rule
            .rhs
            .multiply(&NcPoly::term(left_tail, one.clone()));
        // right branch: apply right rule at `offset`
        let r_len = right_rule.lhs.len();
        let head = word_from_raw(&witness[..amb.offset]);
        let tail = word_from_raw(&witness[amb.offset + r_len..]);
        let right = NcPoly::term(head, one.clone())
            .multiply(&right_rule.rhs)
            .multiply(&NcPoly::term(tail, one));
        (left, right)
    }

    /// Resolve every ambiguity and report any pair of distinct normal forms.
    pub fn check_confluence(&self) -> ConfluenceReport {
        let ambiguities = self.find_ambiguities();
        let mut failures = Vec::new();
        for amb in &ambiguities {
            let (l, r) = self.ambiguity_branches(amb);
            let ln = self.normal_form(&l);
            let rn = self.normal_form(&r);
            if ln != rn {
                failures.push(ConfluenceFailure {
                    witness: amb.witness.clone(),
                    left_normal_form: ln,
                    right_normal_form: rn,
                });
            }
        }
        ConfluenceReport {
            ambiguities: ambiguities.len(),
            resolved: ambiguities.len() - failures.len(),
            failures,
        }
    }

    /// Bounded completion: orient unresolved ambiguity differences into new
    /// rules while their leading weight (under `trunc_weights`) stays within
    /// `max_degree`. Returns the completed system and whether confluence is
    /// certified globally or only up to the bound.
    pub fn complete(
        &self,
        trunc_weights: &[u64],
        max_degree: u64,
    ) -> Result<(RewriteSystem, CompletionStatus), RewriteError> {
        let mut sys = self.clone();
        let mut truncated = false;
        let budget = 20_000usize;
        let mut added = 0usize;
        loop {
            let mut new_rule: Option<RewriteRule> = None;
            for amb in sys.find_ambiguities() {
                let (l, r) = sys.ambiguity_branches(&amb);
                let diff = sys.normal_form(&l).sub(&sys.normal_form(&r));
                if diff.is_zero() {
                    continue;
                }
                let rule = relation_to_rule(&sys.order, &diff)?;
                let lead_weight: u64 = rule.lhs.letters().map(|g| trunc_weights[g]).sum();
                if lead_weight > max_degree {
                    truncated = true;
                    continue;
                }
                new_rule = Some(rule);
                break;
            }
            match new_rule {
                None => break,
                Some(rule) => {
                    sys.rules.push(rule);
                    sys.inter_reduce()?;
                    added += 1;
                    if added > budget {
                        return Err(RewriteError::CompletionOverflow);
                    }
                }
            }
        }
        let status = if truncated {
            CompletionStatus::Truncated
        } else {
            CompletionStatus::Complete
        };
        Ok((sys, status))
    }

    /// All irreducible words of weight ≤ `max_weight` in length-lex order,
    /// breadth-first. The set of irreducible words is closed under subwords,
    /// so extending irreducible words on the right enumerates everything.
    pub fn enumerate_basis(&self, weights: &[u64], max_weight: u64) -> BasisEnumeration {
        let allowed = alloc::vec![true; self.num_generators()];
        self.enumerate_basis_restricted(weights, max_weight, &allowed)
    }

    /// Same as [`enumerate_basis`](Self::enumerate_basis), but only words over
    /// the allowed generators are produced.
    pub fn enumerate_basis_restricted(
        &self,
        weights: &[u64],
        max_weight: u64,
        allowed: &[bool],
    ) -> BasisEnumeration {
        let num_gens = self.num_generators();
        let mut words = Vec::new();
        let mut frontier = alloc::vec![Word::empty()];
        let mut exact = true;
        // hard length cap in case zero-weight generators are unconstrained
        let max_len = (max_weight as usize + 2) * 4 + 16;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                words.push(w.clone());
                for g in 0..num_gens {
                    if !allowed[g] {
                        continue;
                    }
                    let ext = w.concat(&Word::generator(g));
                    if !self.suffix_irreducible(&ext) {
                        continue;
                    }
                    let weight: u64 = ext.letters().map(|g| weights[g]).sum();
                    if weight > max_weight {
                        exact = false;
                        continue;
                    }
                    if ext.len() > max_len {
                        exact = false;
                        continue;
                    }
                    next.push(ext);
                }
            }
            frontier = next;
        }
        BasisEnumeration { words, exact }
    }

    // The word grew by one letter on the right and its proper prefix is
    // already irreducible, so only matches touching the last letter matter.
    fn suffix_irreducible(&self, word: &Word) -> bool {
        let w = word.raw();
        for rule in &self.rules {
            let l = rule.lhs.raw();
            if !l.is_empty() && l.len() <= w.len() && &w[w.len() - l.len()..] == l {
                return false;
            }
        }
        true
    }

    /// A multiplicative identity coefficient in the system's field, taken
    /// from any rule (rule lhs coefficients are normalized to 1). Falls back
    /// to rational 1 for an empty system.
    fn coeff_one(&self) -> FieldElement {
        for rule in &self.rules {
            if let Some((_, c)) = rule.rhs.terms().next() {
                let cinv = c.inverse().expect("nonzero coefficient");
                return c.mul(&cinv);
            }
        }
        FieldElement::Rational(num_rational::BigRational::from(num_bigint::BigInt::from(1)))
    }

    /// Reduce every rule by all the others until stable. Rules whose relation
    /// collapses to zero are dropped; changed relations are re-oriented.
    fn inter_reduce(&mut self) -> Result<(), RewriteError> {
        loop {
            let mut changed = false;
            let mut idx = 0;
            while idx < self.rules.len() {
                let rule = self.rules.remove(idx);
                let one = self.coeff_one_for(&rule);
                let rel = rule.relation(&one);
                let reduced = self.normal_form(&rel);
                if reduced == rel {
                    self.rules.insert(idx, rule);
                    idx += 1;
                } else {
                    changed = true;
                    if !reduced.is_zero() {
                        let new_rule = relation_to_rule(&self.order, &reduced)?;
                        self.rules.insert(idx, new_rule);
                        idx += 1;
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn coeff_one_for(&self, rule: &RewriteRule) -> FieldElement {
        if let Some((_, c)) = rule.rhs.terms().next() {
            let cinv = c.inverse().expect("nonzero coefficient");
            return c.mul(&cinv);
        }
        self.coeff_one()
    }

    /// Distinct rule left-hand sides, useful for structural comparison.
    pub fn lhs_set(&self) -> BTreeSet<Word> {
        self.rules.iter().map(|r| r.lhs.clone()).collect()
    }

    /// Render rules with a naming function, mainly for reports.
    pub fn describe(&self, name: impl Fn(usize) -> String) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| {
                let mut s = String::new();
                for g in r.lhs.letters() {
                    s.push_str(&name(g));
                }
                s.push_str(" -> ...");
                s
            })
            .collect()
    }
}

fn word_from_raw(raw: &[u8]) -> Word {
    Word::from_letters(&raw.iter().map(|&b| b as usize).collect::<Vec<_>>())
}

fn coeff_one_like(rule: &RewriteRule) -> FieldElement {
    match rule.rhs.terms().next() {
        Some((_, c)) => {
            let cinv = c.inverse().expect("nonzero coefficient");
            c.mul(&cinv)
        }
        None => FieldElement::Rational(num_rational::BigRational::from(num_bigint::BigInt::from(1))),
    }
}

/// Orient a relation (read as "= 0") into a rule by its leading term.
pub fn relation_to_rule(order: &MonomialOrder, rel: &NcPoly) -> Result<RewriteRule, RewriteError> {
    if rel.is_zero() {
        return Err(RewriteError::ZeroRelation);
    }
    let (lead, coeff) = order.leading_term(rel).expect("nonzero relation");
    if lead.is_empty() {
        return Err(RewriteError::InconsistentPresentation);
    }
    let lead = lead.clone();
    let coeff = coeff.clone();
    let cinv = coeff.inverse().expect("leading coefficient nonzero");
    // rhs = lhs - rel/coeff
    let mut rhs = rel.scaled(&cinv.negated());
    rhs.add_term(lead.clone(), coeff.mul(&cinv));
    Ok(RewriteRule { lhs: lead, rhs })
}
