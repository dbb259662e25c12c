//! Certificate types and their exact validation.
//!
//! Every certificate asserts that some product of words equals a target in
//! `B_∞`; validation decides that with the handle-reduction solver. The JSON
//! encoding stores words in the whitespace-separated integer format.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::handle::WordProblem;
use crate::word::{commutator, BraidWord};

pub(crate) mod word_text {
    use super::*;

    pub fn serialize<S: Serializer>(w: &BraidWord, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&w.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BraidWord, D::Error> {
        let text = String::deserialize(d)?;
        let letters = text
            .split_whitespace()
            .map(|t| t.parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        BraidWord::new(letters).map_err(serde::de::Error::custom)
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

fn check_equal(wp: &WordProblem, product: &BraidWord, target: &BraidWord, what: &str) -> Result<()> {
    if wp.equals(product, target)? {
        Ok(())
    } else {
        Err(invalid(format!("{what}: product does not equal target")))
    }
}

/// `(base^exponent)^conjugator = conjugator · base^exponent · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugatedFactor {
    pub exponent: i32,
    #[serde(with = "word_text")]
    pub conjugator: BraidWord,
}

impl ConjugatedFactor {
    pub fn new(exponent: i32, conjugator: BraidWord) -> Self {
        Self {
            exponent,
            conjugator,
        }
    }

    pub fn value(&self, base: &BraidWord) -> BraidWord {
        let b = if self.exponent > 0 { base.clone() } else { base.inverse() };
        b.conjugate(&self.conjugator)
    }

    /// Raw (unreduced) word `c · base^{±1} · c⁻¹`.
    fn push_value(&self, base: &BraidWord, out: &mut Vec<i32>) {
        out.extend_from_slice(self.conjugator.letters());
        if self.exponent > 0 {
            out.extend_from_slice(base.letters());
        } else {
            out.extend(base.letters().iter().rev().map(|l| -l));
        }
        out.extend(self.conjugator.letters().iter().rev().map(|l| -l));
    }
}

/// A product of conjugates of `base^{±1}` equal to `target`. With
/// `base = σ1` this witnesses `‖target‖ <= len()` for the biinvariant word
/// norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugatedLetterCertificate {
    #[serde(with = "word_text")]
    pub target: BraidWord,
    #[serde(with = "word_text")]
    pub base: BraidWord,
    pub factors: Vec<ConjugatedFactor>,
}

impl ConjugatedLetterCertificate {
    pub fn sigma1() -> BraidWord {
        BraidWord::from_raw(vec![1])
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_word_norm(&self) -> bool {
        self.base.letters() == [1]
    }

    pub fn product(&self) -> BraidWord {
        let mut out = Vec::new();
        for f in &self.factors {
            f.push_value(&self.base, &mut out);
        }
        BraidWord::from_raw(out).free_reduce()
    }

    pub fn validate_with(&self, wp: &WordProblem) -> Result<()> {
        if let Some(f) = self.factors.iter().find(|f| f.exponent.abs() != 1) {
            return Err(invalid(format!("exponent {} is not ±1", f.exponent)));
        }
        check_equal(wp, &self.product(), &self.target, "conjugated letters")
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(&WordProblem::default())
    }
}

/// One factor `piece^conjugator` of a `ν_n` witness; `piece` lies in `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuFactor {
    #[serde(with = "word_text")]
    pub piece: BraidWord,
    #[serde(with = "word_text")]
    pub conjugator: BraidWord,
}

/// Witness for `ν_n(element) <= factors.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuWitness {
    #[serde(rename = "target", with = "word_text")]
    pub element: BraidWord,
    pub n: usize,
    pub factors: Vec<NuFactor>,
}

impl NuWitness {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BraidWord {
        let mut out = Vec::new();
        for f in &self.factors {
            out.extend_from_slice(f.conjugator.letters());
            out.extend_from_slice(f.piece.letters());
            out.extend(f.conjugator.letters().iter().rev().map(|l| -l));
        }
        BraidWord::from_raw(out).free_reduce()
    }

    pub fn validate_with(&self, wp: &WordProblem) -> Result<()> {
        if self.n < 2 {
            return Err(invalid("ν_n witness needs n >= 2"));
        }
        if let Some(f) = self.factors.iter().find(|f| f.piece.width() > self.n) {
            return Err(invalid(format!(
                "piece {} does not lie in B_{}",
                f.piece, self.n
            )));
        }
        check_equal(wp, &self.product(), &self.element, "ν witness")
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(&WordProblem::default())
    }
}

/// Constraint `ν_n(f_i) <= p`, `ν_n(g_i) <= q` on a commutator certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormBounds {
    pub n: usize,
    pub p: u32,
    pub q: u32,
}

impl NormBounds {
    pub fn new(n: usize, p: u32, q: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize(format!("n must be >= 2, got {n}")));
        }
        if p < 1 || q < 1 {
            return Err(Error::InvalidSize(format!("p and q must be >= 1, got p={p} q={q}")));
        }
        Ok(Self { n, p, q })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorFactor {
    #[serde(with = "word_text")]
    pub f: BraidWord,
    #[serde(with = "word_text")]
    pub g: BraidWord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_witness: Option<NuWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_witness: Option<NuWitness>,
}

impl CommutatorFactor {
    pub fn plain(f: BraidWord, g: BraidWord) -> Self {
        Self {
            f,
            g,
            f_witness: None,
            g_witness: None,
        }
    }

    pub fn value(&self) -> BraidWord {
        commutator(&self.f, &self.g)
    }
}

/// `target = [f_1, g_1] ⋯ [f_k, g_k]`; when `bounds` is set each entry
/// carries a `ν_n` witness within the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorCertificate {
    #[serde(with = "word_text")]
    pub target: BraidWord,
    #[serde(default)]
    pub bounds: Option<NormBounds>,
    pub factors: Vec<CommutatorFactor>,
}

impl CommutatorCertificate {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BraidWord {
        let mut out = Vec::new();
        for f in &self.factors {
            out.extend_from_slice(f.value().letters());
        }
        BraidWord::from_raw(out).free_reduce()
    }

    fn check_witness(
        wp: &WordProblem,
        entry: &BraidWord,
        witness: Option<&NuWitness>,
        n: usize,
        limit: u32,
        name: &str,
        index: usize,
    ) -> Result<()> {
        let w = witness.ok_or_else(|| invalid(format!("factor {index}: {name} has no ν_n witness")))?;
        if w.n != n {
            return Err(invalid(format!("factor {index}: {name} witness is for ν_{}", w.n)));
        }
        if w.len() > limit as usize {
            return Err(invalid(format!(
                "factor {index}: {name} witness length {} exceeds {limit}",
                w.len()
            )));
        }
        if w.element.free_reduce() != entry.free_reduce() {
            return Err(invalid(format!("factor {index}: {name} witness is for another element")));
        }
        w.validate_with(wp)
    }

    pub fn validate_with(&self, wp: &WordProblem) -> Result<()> {
        if let Some(b) = self.bounds {
            for (i, f) in self.factors.iter().enumerate() {
                Self::check_witness(wp, &f.f, f.f_witness.as_ref(), b.n, b.p, "f", i)?;
                Self::check_witness(wp, &f.g, f.g_witness.as_ref(), b.n, b.q, "g", i)?;
            }
        }
        check_equal(wp, &self.product(), &self.target, "commutators")
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(&WordProblem::default())
    }
}

/// Any certificate, as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    ConjugatedLetters(ConjugatedLetterCertificate),
    NuWitness(NuWitness),
    Commutators(CommutatorCertificate),
}

impl Certificate {
    pub fn target(&self) -> &BraidWord {
        match self {
            Certificate::ConjugatedLetters(c) => &c.target,
            Certificate::NuWitness(c) => &c.element,
            Certificate::Commutators(c) => &c.target,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Certificate::ConjugatedLetters(c) => c.len(),
            Certificate::NuWitness(c) => c.len(),
            Certificate::Commutators(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate_with(&self, wp: &WordProblem) -> Result<()> {
        match self {
            Certificate::ConjugatedLetters(c) => c.validate_with(wp),
            Certificate::NuWitness(c) => c.validate_with(wp),
            Certificate::Commutators(c) => c.validate_with(wp),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(&WordProblem::default())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

impl From<ConjugatedLetterCertificate> for Certificate {
    fn from(c: ConjugatedLetterCertificate) -> Self {
        Certificate::ConjugatedLetters(c)
    }
}

impl From<NuWitness> for Certificate {
    fn from(c: NuWitness) -> Self {
        Certificate::NuWitness(c)
    }
}

impl From<CommutatorCertificate> for Certificate {
    fn from(c: CommutatorCertificate) -> Self {
        Certificate::Commutators(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> BraidWord {
        BraidWord::new(l.to_vec()).unwrap()
    }

    #[test]
    fn letter_certificate_validates() {
        let c = ConjugatedLetterCertificate {
            target: w(&[1, -2]),
            base: w(&[1]),
            factors: vec![
                ConjugatedFactor::new(1, w(&[])),
                ConjugatedFactor::new(-1, w(&[1, 2])),
            ],
        };
        c.validate().unwrap();
        let mut bad = c.clone();
        bad.factors[1].exponent = 1;
        assert!(matches!(bad.validate(), Err(Error::InvalidCertificate(_))));
        bad.factors[1].exponent = 2;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn nu_witness_rejects_wide_pieces() {
        let c = NuWitness {
            element: w(&[2]),
            n: 2,
            factors: vec![NuFactor {
                piece: w(&[2]),
                conjugator: w(&[]),
            }],
        };
        assert!(c.validate().is_err());
        let ok = NuWitness {
            factors: vec![NuFactor {
                piece: w(&[1]),
                conjugator: w(&[1, 2]),
            }],
            ..c
        };
        ok.validate().unwrap();
    }

    #[test]
    fn constrained_commutators_need_witnesses() {
        let c = CommutatorCertificate {
            target: commutator(&w(&[1]), &w(&[3])),
            bounds: Some(NormBounds::new(2, 1, 1).unwrap()),
            factors: vec![CommutatorFactor::plain(w(&[1]), w(&[3]))],
        };
        assert!(matches!(c.validate(), Err(Error::InvalidCertificate(_))));
        let unconstrained = CommutatorCertificate { bounds: None, ..c };
        unconstrained.validate().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let c: Certificate = ConjugatedLetterCertificate {
            target: w(&[1, -2]),
            base: w(&[1]),
            factors: vec![
                ConjugatedFactor::new(1, w(&[])),
                ConjugatedFactor::new(-1, w(&[1, 2])),
            ],
        }
        .into();
        let text = c.to_json();
        assert!(text.contains("\"type\": \"conjugated_letters\""));
        assert!(text.contains("\"target\": \"1 -2\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
        assert!(matches!(Certificate::from_json("{}"), Err(Error::Format(_))));
    }
}
