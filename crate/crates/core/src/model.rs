//! Signatures, finite fuzzy interpretations, validation and size statistics.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};

/// The language features Phi: inverse roles (I) and nominals (O).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Features {
    pub inverse: bool,
    pub nominals: bool,
}

impl Features {
    pub const NONE: Features = Features { inverse: false, nominals: false };
    pub const I: Features = Features { inverse: true, nominals: false };
    pub const O: Features = Features { inverse: false, nominals: true };
    pub const IO: Features = Features { inverse: true, nominals: true };
    pub const ALL: [Features; 4] = [Features::NONE, Features::O, Features::I, Features::IO];

    pub fn new(inverse: bool, nominals: bool) -> Self {
        Features { inverse, nominals }
    }

    pub fn union(self, other: Features) -> Features {
        Features::new(self.inverse || other.inverse, self.nominals || other.nominals)
    }
}

impl fmt::Display for Features {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match (self.inverse, self.nominals) {
            (false, false) => "{}",
            (true, false) => "{I}",
            (false, true) => "{O}",
            (true, true) => "{I,O}",
        })
    }
}

/// Concept, role and individual names plus the declared features.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    concepts: Vec<String>,
    roles: Vec<String>,
    individuals: Vec<String>,
    features: Features,
    index: HashMap<String, Name>,
}

/// A resolved signature name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Name {
    Concept(usize),
    Role(usize),
    Individual(usize),
}

fn valid_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

impl Signature {
    pub fn new<S: Into<String>>(
        concepts: impl IntoIterator<Item = S>,
        roles: impl IntoIterator<Item = S>,
        individuals: impl IntoIterator<Item = S>,
        features: Features,
    ) -> Result<Self> {
        let concepts: Vec<String> = concepts.into_iter().map(Into::into).collect();
        let roles: Vec<String> = roles.into_iter().map(Into::into).collect();
        let individuals: Vec<String> = individuals.into_iter().map(Into::into).collect();
        if individuals.is_empty() {
            return Err(Error::InvalidSignature("the set of individual names must be non-empty".into()));
        }
        let mut index = HashMap::new();
        let all = concepts
            .iter()
            .enumerate()
            .map(|(i, s)| (s, Name::Concept(i)))
            .chain(roles.iter().enumerate().map(|(i, s)| (s, Name::Role(i))))
            .chain(individuals.iter().enumerate().map(|(i, s)| (s, Name::Individual(i))));
        for (s, name) in all {
            if !valid_token(s) {
                return Err(Error::InvalidSignature(format!("invalid name `{s}`")));
            }
            if index.insert(s.clone(), name).is_some() {
                return Err(Error::InvalidSignature(format!("name `{s}` declared twice")));
            }
        }
        Ok(Signature { concepts, roles, individuals, features, index })
    }

    pub fn concepts(&self) -> &[String] {
        &self.concepts
    }

    pub fn roles(&self) -> &[String] {
        &self.roles
    }

    pub fn individuals(&self) -> &[String] {
        &self.individuals
    }

    pub fn features(&self) -> Features {
        self.features
    }

    pub fn with_features(&self, features: Features) -> Signature {
        Signature { features, ..self.clone() }
    }

    pub fn lookup(&self, s: &str) -> Option<Name> {
        self.index.get(s).copied()
    }

    pub fn concept_index(&self, s: &str) -> Option<usize> {
        match self.lookup(s) {
            Some(Name::Concept(i)) => Some(i),
            _ => None,
        }
    }

    pub fn role_index(&self, s: &str) -> Option<usize> {
        match self.lookup(s) {
            Some(Name::Role(i)) => Some(i),
            _ => None,
        }
    }

    pub fn individual_index(&self, s: &str) -> Option<usize> {
        match self.lookup(s) {
            Some(Name::Individual(i)) => Some(i),
            _ => None,
        }
    }

    /// Same concept, role and individual lists (features are not compared).
    pub fn same_names(&self, other: &Signature) -> bool {
        self.concepts == other.concepts && self.roles == other.roles && self.individuals == other.individuals
    }
}

/// One violated interpretation invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyDomain,
    InvalidElementName(String),
    DuplicateElement(String),
    MissingIndividual(String),
    DuplicateIndividual(String),
    UnknownName { fact: String, name: String },
    UnknownElement { fact: String, element: String },
    ZeroDegree { fact: String },
    DuplicateFact { fact: String },
    Shape(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyDomain => write!(f, "empty domain"),
            Violation::InvalidElementName(e) => write!(f, "invalid element name `{e}`"),
            Violation::DuplicateElement(e) => write!(f, "element `{e}` declared twice"),
            Violation::MissingIndividual(a) => write!(f, "individual `{a}` is not mapped to an element"),
            Violation::DuplicateIndividual(a) => write!(f, "individual `{a}` mapped twice"),
            Violation::UnknownName { fact, name } => write!(f, "`{fact}`: unknown name `{name}`"),
            Violation::UnknownElement { fact, element } => {
                write!(f, "`{fact}`: unknown element `{element}`")
            }
            Violation::ZeroDegree { fact } => write!(f, "`{fact}`: zero degree (omit zero facts)"),
            Violation::DuplicateFact { fact } => write!(f, "`{fact}`: duplicate fact"),
            Violation::Shape(msg) => write!(f, "{msg}"),
        }
    }
}

/// A finite fuzzy interpretation over a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyInterpretation {
    signature: Signature,
    domain: Vec<String>,
    element_index: HashMap<String, usize>,
    individuals: Vec<usize>,
    concepts: Vec<FuzzySet>,
    roles: Vec<FuzzyRelation>,
}

/// Size figures: domain size, role instances, distinct role degrees plus two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeStats {
    pub n: usize,
    pub m: usize,
    pub l: usize,
}

impl FuzzyInterpretation {
    /// Assembles an interpretation from indexed parts, checking every invariant.
    pub fn from_parts(
        signature: Signature,
        domain: Vec<String>,
        individuals: Vec<usize>,
        concepts: Vec<FuzzySet>,
        roles: Vec<FuzzyRelation>,
    ) -> Result<Self> {
        let element_index = domain.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let out = FuzzyInterpretation { signature, domain, element_index, individuals, concepts, roles };
        let v = out.validate();
        if v.is_empty() {
            Ok(out)
        } else {
            Err(Error::InvalidInterpretation(v))
        }
    }

    /// Checks the type invariants; empty iff the interpretation is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        let n = self.domain.len();
        if n == 0 {
            v.push(Violation::EmptyDomain);
        }
        let mut seen = HashSet::new();
        for e in &self.domain {
            if !valid_token(e) {
                v.push(Violation::InvalidElementName(e.clone()));
            }
            if !seen.insert(e) {
                v.push(Violation::DuplicateElement(e.clone()));
            }
        }
        let sig = &self.signature;
        if self.individuals.len() != sig.individuals.len() {
            v.push(Violation::Shape(format!(
                "{} individual mappings for {} individual names",
                self.individuals.len(),
                sig.individuals.len()
            )));
        }
        for (a, &x) in self.individuals.iter().enumerate() {
            if x >= n {
                let name = sig.individuals.get(a).cloned().unwrap_or_else(|| format!("#{a}"));
                v.push(Violation::MissingIndividual(name));
            }
        }
        if self.concepts.len() != sig.concepts.len() {
            v.push(Violation::Shape("concept table does not match the signature".into()));
        }
        for (i, c) in self.concepts.iter().enumerate() {
            if c.len() != n {
                v.push(Violation::Shape(format!("concept #{i} is not over the domain")));
            }
        }
        if self.roles.len() != sig.roles.len() {
            v.push(Violation::Shape("role table does not match the signature".into()));
        }
        for (i, r) in self.roles.iter().enumerate() {
            if r.rows() != n || r.cols() != n {
                v.push(Violation::Shape(format!("role #{i} is not a relation on the domain")));
            }
        }
        v
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.element_index.get(name).copied()
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.domain[x]
    }

    /// a^I for the individual with signature index `a`.
    pub fn individual(&self, a: usize) -> usize {
        self.individuals[a]
    }

    pub fn individuals(&self) -> &[usize] {
        &self.individuals
    }

    pub fn concept(&self, i: usize) -> &FuzzySet {
        &self.concepts[i]
    }

    pub fn concepts(&self) -> &[FuzzySet] {
        &self.concepts
    }

    pub fn role(&self, i: usize) -> &FuzzyRelation {
        &self.roles[i]
    }

    pub fn roles(&self) -> &[FuzzyRelation] {
        &self.roles
    }

    pub fn role_count(&self) -> usize {
        self.roles.iter().map(FuzzyRelation::len).sum()
    }

    /// Distinct nonzero degrees of role instances.
    pub fn role_degrees(&self) -> BTreeSet<Degree> {
        self.roles.iter().flat_map(|r| r.iter().map(|(_, _, d)| d)).collect()
    }

    /// Distinct nonzero degrees of concept and role facts.
    pub fn degrees(&self) -> BTreeSet<Degree> {
        let mut s = self.role_degrees();
        s.extend(self.concepts.iter().flat_map(|c| c.iter().map(|(_, d)| d)));
        s
    }

    pub fn size_stats(&self) -> SizeStats {
        SizeStats { n: self.len(), m: self.role_count(), l: self.role_degrees().len() + 2 }
    }
}

/// Collects raw facts by name; `validate` reports problems and `build` assembles.
#[derive(Clone, Debug)]
pub struct InterpretationBuilder {
    signature: Signature,
    elements: Vec<String>,
    individuals: Vec<(String, String)>,
    concept_facts: Vec<(String, String, Degree)>,
    role_facts: Vec<(String, String, String, Degree)>,
}

impl InterpretationBuilder {
    pub fn new(signature: Signature) -> Self {
        InterpretationBuilder {
            signature,
            elements: Vec::new(),
            individuals: Vec::new(),
            concept_facts: Vec::new(),
            role_facts: Vec::new(),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn element(&mut self, name: impl Into<String>) -> &mut Self {
        self.elements.push(name.into());
        self
    }

    pub fn elements<S: Into<String>>(&mut self, names: impl IntoIterator<Item = S>) -> &mut Self {
        self.elements.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn individual(&mut self, a: impl Into<String>, x: impl Into<String>) -> &mut Self {
        self.individuals.push((a.into(), x.into()));
        self
    }

    pub fn concept(&mut self, c: impl Into<String>, x: impl Into<String>, d: Degree) -> &mut Self {
        self.concept_facts.push((c.into(), x.into(), d));
        self
    }

    pub fn role(
        &mut self,
        r: impl Into<String>,
        x: impl Into<String>,
        y: impl Into<String>,
        d: Degree,
    ) -> &mut Self {
        self.role_facts.push((r.into(), x.into(), y.into(), d));
        self
    }

    fn assemble(&self) -> (Vec<Violation>, FuzzyInterpretation) {
        let sig = &self.signature;
        let mut v = Vec::new();
        let mut element_index = HashMap::new();
        let mut domain = Vec::new();
        for e in &self.elements {
            if !valid_token(e) {
                v.push(Violation::InvalidElementName(e.clone()));
            } else if element_index.contains_key(e) {
                v.push(Violation::DuplicateElement(e.clone()));
            } else {
                element_index.insert(e.clone(), domain.len());
                domain.push(e.clone());
            }
        }
        if domain.is_empty() {
            v.push(Violation::EmptyDomain);
        }
        let n = domain.len();
        let elem = |fact: &str, e: &str, v: &mut Vec<Violation>| {
            let r = element_index.get(e).copied();
            if r.is_none() {
                v.push(Violation::UnknownElement { fact: fact.to_string(), element: e.to_string() });
            }
            r
        };

        let mut individuals: Vec<Option<usize>> = vec![None; sig.individuals.len()];
        for (a, x) in &self.individuals {
            let fact = format!("ind {a} {x}");
            let ai = sig.individual_index(a);
            if ai.is_none() {
                v.push(Violation::UnknownName { fact: fact.clone(), name: a.clone() });
            }
            let xi = elem(&fact, x, &mut v);
            if let (Some(ai), Some(xi)) = (ai, xi) {
                if individuals[ai].is_some() {
                    v.push(Violation::DuplicateIndividual(a.clone()));
                } else {
                    individuals[ai] = Some(xi);
                }
            }
        }
        for (a, x) in individuals.iter().enumerate() {
            if x.is_none() {
                v.push(Violation::MissingIndividual(sig.individuals[a].clone()));
            }
        }

        let mut concepts = vec![FuzzySet::new(n); sig.concepts.len()];
        for (c, x, d) in &self.concept_facts {
            let fact = format!("concept {c} {x} {d}");
            let ci = sig.concept_index(c);
            if ci.is_none() {
                v.push(Violation::UnknownName { fact: fact.clone(), name: c.clone() });
            }
            let xi = elem(&fact, x, &mut v);
            if d.is_zero() {
                v.push(Violation::ZeroDegree { fact });
                continue;
            }
            if let (Some(ci), Some(xi)) = (ci, xi) {
                if !concepts[ci].get(xi).is_zero() {
                    v.push(Violation::DuplicateFact { fact });
                } else {
                    concepts[ci].set(xi, *d);
                }
            }
        }

        let mut roles = vec![FuzzyRelation::new(n, n); sig.roles.len()];
        for (r, x, y, d) in &self.role_facts {
            let fact = format!("role {r} {x} {y} {d}");
            let ri = sig.role_index(r);
            if ri.is_none() {
                v.push(Violation::UnknownName { fact: fact.clone(), name: r.clone() });
            }
            let xi = elem(&fact, x, &mut v);
            let yi = elem(&fact, y, &mut v);
            if d.is_zero() {
                v.push(Violation::ZeroDegree { fact });
                continue;
            }
            if let (Some(ri), Some(xi), Some(yi)) = (ri, xi, yi) {
                if !roles[ri].get(xi, yi).is_zero() {
                    v.push(Violation::DuplicateFact { fact });
                } else {
                    roles[ri].set(xi, yi, *d);
                }
            }
        }

        let interp = FuzzyInterpretation {
            signature: sig.clone(),
            domain,
            element_index,
            individuals: individuals.into_iter().map(|x| x.unwrap_or(usize::MAX)).collect(),
            concepts,
            roles,
        };
        (v, interp)
    }

    /// All violations of the collected facts; empty iff `build` succeeds.
    pub fn validate(&self) -> Vec<Violation> {
        self.assemble().0
    }

    pub fn build(&self) -> Result<FuzzyInterpretation> {
        let (v, i) = self.assemble();
        if v.is_empty() {
            Ok(i)
        } else {
            Err(Error::InvalidInterpretation(v))
        }
    }
}
