//! Concepts and roles of the fuzzy description logic: syntax, semantics,
//! assertions and random sampling.

mod eval;
mod parse;
mod random;

use std::fmt;

use crate::degree::{biresiduum, Degree};
use crate::error::{Error, Result};
use crate::model::{Features, FuzzyInterpretation, Signature};

pub use eval::{eval_concept, eval_role};
pub use parse::{parse_concept, parse_role, ParseError};
pub use random::{random_concept, ConceptSampler, Fragment};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Name(usize),
    Union(Box<Role>, Box<Role>),
    Compose(Box<Role>, Box<Role>),
    Star(Box<Role>),
    Test(Box<Concept>),
    Inverse(Box<Role>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Concept {
    Constant(Degree),
    Name(usize),
    Or(Box<Concept>, Box<Concept>),
    And(Box<Concept>, Box<Concept>),
    Implies(Box<Concept>, Box<Concept>),
    Exists(Role, Box<Concept>),
    Forall(Role, Box<Concept>),
    Nominal(usize),
}

impl Role {
    /// Whether the role stays within role names and inverses.
    pub fn is_basic_fragment(&self) -> bool {
        match self {
            Role::Name(_) => true,
            Role::Inverse(r) => r.is_basic_fragment(),
            _ => false,
        }
    }

    /// Features the role needs.
    pub fn features_used(&self) -> Features {
        match self {
            Role::Name(_) => Features::NONE,
            Role::Inverse(r) => r.features_used().union(Features::I),
            Role::Union(a, b) | Role::Compose(a, b) => a.features_used().union(b.features_used()),
            Role::Star(r) => r.features_used(),
            Role::Test(c) => c.features_used(),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Printed(Ast::Role(self), sig)
    }
}

impl Concept {
    pub fn and(a: Concept, b: Concept) -> Concept {
        Concept::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Concept, b: Concept) -> Concept {
        Concept::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Concept, b: Concept) -> Concept {
        Concept::Implies(Box::new(a), Box::new(b))
    }

    pub fn exists(r: Role, c: Concept) -> Concept {
        Concept::Exists(r, Box::new(c))
    }

    pub fn forall(r: Role, c: Concept) -> Concept {
        Concept::Forall(r, Box::new(c))
    }

    /// Whether the concept belongs to the fragment without union, universal
    /// restriction and complex role constructors.
    pub fn is_l0(&self) -> bool {
        match self {
            Concept::Constant(_) | Concept::Name(_) | Concept::Nominal(_) => true,
            Concept::Or(..) | Concept::Forall(..) => false,
            Concept::And(a, b) | Concept::Implies(a, b) => a.is_l0() && b.is_l0(),
            Concept::Exists(r, c) => r.is_basic_fragment() && c.is_l0(),
        }
    }

    /// Features the concept needs.
    pub fn features_used(&self) -> Features {
        match self {
            Concept::Constant(_) | Concept::Name(_) => Features::NONE,
            Concept::Nominal(_) => Features::O,
            Concept::Or(a, b) | Concept::And(a, b) | Concept::Implies(a, b) => {
                a.features_used().union(b.features_used())
            }
            Concept::Exists(r, c) | Concept::Forall(r, c) => r.features_used().union(c.features_used()),
        }
    }

    /// Nesting depth of concept and role constructors.
    pub fn depth(&self) -> usize {
        match self {
            Concept::Constant(_) | Concept::Name(_) | Concept::Nominal(_) => 0,
            Concept::Or(a, b) | Concept::And(a, b) | Concept::Implies(a, b) => 1 + a.depth().max(b.depth()),
            Concept::Exists(r, c) | Concept::Forall(r, c) => 1 + role_depth(r).max(c.depth()),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Printed(Ast::Concept(self), sig)
    }
}

fn role_depth(r: &Role) -> usize {
    match r {
        Role::Name(_) => 0,
        Role::Inverse(r) | Role::Star(r) => 1 + role_depth(r),
        Role::Union(a, b) | Role::Compose(a, b) => 1 + role_depth(a).max(role_depth(b)),
        Role::Test(c) => 1 + c.depth(),
    }
}

enum Ast<'a> {
    Concept(&'a Concept),
    Role(&'a Role),
}

struct Printed<'a>(Ast<'a>, &'a Signature);

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self.0 {
            Ast::Concept(c) => print_concept(c, self.1, &mut s),
            Ast::Role(r) => print_role(r, self.1, &mut s),
        }
        f.write_str(&s)
    }
}

fn print_concept(c: &Concept, sig: &Signature, s: &mut String) {
    let c_outer = c;
    let bin = |a: &Concept, op: &str, b: &Concept, s: &mut String| {
        s.push('(');
        print_concept(a, sig, s);
        s.push(' ');
        s.push_str(op);
        s.push(' ');
        print_concept(b, sig, s);
        s.push(')');
    };
    match c {
        Concept::Constant(d) => s.push_str(&d.to_string()),
        Concept::Name(i) => s.push_str(&sig.concepts()[*i]),
        Concept::Nominal(a) => {
            s.push('{');
            s.push_str(&sig.individuals()[*a]);
            s.push('}');
        }
        Concept::Or(a, b) => bin(a, "or", b, s),
        Concept::And(a, b) => bin(a, "and", b, s),
        Concept::Implies(a, b) => bin(a, "->", b, s),
        Concept::Exists(r, c) | Concept::Forall(r, c) => {
            s.push_str(if matches!(c_outer, Concept::Exists(..)) { "exists " } else { "forall " });
            print_role(r, sig, s);
            s.push_str(" . ");
            print_concept(c, sig, s);
        }
    }
}

fn print_role(r: &Role, sig: &Signature, s: &mut String) {
    match r {
        Role::Name(i) => s.push_str(&sig.roles()[*i]),
        Role::Union(a, b) | Role::Compose(a, b) => {
            s.push('(');
            print_role(a, sig, s);
            s.push_str(if matches!(r, Role::Union(..)) { " | " } else { " ; " });
            print_role(b, sig, s);
            s.push(')');
        }
        Role::Star(inner) => {
            if matches!(**inner, Role::Inverse(_)) {
                s.push('(');
                print_role(inner, sig, s);
                s.push(')');
            } else {
                print_role(inner, sig, s);
            }
            s.push('*');
        }
        Role::Test(c) => {
            if matches!(**c, Concept::Exists(..) | Concept::Forall(..)) {
                s.push('(');
                print_concept(c, sig, s);
                s.push(')');
            } else {
                print_concept(c, sig, s);
            }
            s.push('?');
        }
        Role::Inverse(inner) => {
            s.push_str("inv ");
            print_role(inner, sig, s);
        }
    }
}

/// Comparison operators of fuzzy assertions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Gt,
    Ge,
    Lt,
    Le,
}

impl Comparison {
    pub fn holds(self, lhs: Degree, rhs: Degree) -> bool {
        match self {
            Comparison::Gt => lhs > rhs,
            Comparison::Ge => lhs >= rhs,
            Comparison::Lt => lhs < rhs,
            Comparison::Le => lhs <= rhs,
        }
    }
}

/// A fuzzy assertion over individual names (signature indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuzzyAssertion {
    Concept { concept: Concept, individual: usize, cmp: Comparison, degree: Degree },
    Role { role: Role, a: usize, b: usize, cmp: Comparison, degree: Degree },
    Eq(usize, usize),
    Neq(usize, usize),
}

pub fn check_assertion(i: &FuzzyInterpretation, psi: &FuzzyAssertion) -> bool {
    match psi {
        FuzzyAssertion::Concept { concept, individual, cmp, degree } => {
            cmp.holds(eval_concept(concept, i).get(i.individual(*individual)), *degree)
        }
        FuzzyAssertion::Role { role, a, b, cmp, degree } => {
            cmp.holds(eval_role(role, i).get(i.individual(*a), i.individual(*b)), *degree)
        }
        FuzzyAssertion::Eq(a, b) => i.individual(*a) == i.individual(*b),
        FuzzyAssertion::Neq(a, b) => i.individual(*a) != i.individual(*b),
    }
}

/// Whether every assertion holds.
pub fn check_abox(i: &FuzzyInterpretation, abox: &[FuzzyAssertion]) -> bool {
    abox.iter().all(|psi| check_assertion(i, psi))
}

/// A concept whose values at an individual disagree below the threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub concept: String,
    pub individual: String,
    pub left: Degree,
    pub right: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub samples: usize,
    /// Smallest biresiduum seen over all samples and individuals.
    pub min_biresiduum: Degree,
    pub counterexamples: Vec<Counterexample>,
}

/// Samples concepts of the full language and compares their values at every
/// individual in `i` and `j`.
pub fn preservation_report(
    i: &FuzzyInterpretation,
    j: &FuzzyInterpretation,
    phi: Features,
    gamma: Degree,
    samples: usize,
    depth: usize,
    seed: u64,
) -> Result<PreservationReport> {
    use rand::SeedableRng;
    if !i.signature().same_names(j.signature()) {
        return Err(Error::SignatureMismatch("interpretations must share names".into()));
    }
    let sig = i.signature();
    let mut constants: Vec<Degree> = i.degrees().union(&j.degrees()).copied().collect();
    constants.extend([Degree::ZERO, "0.5".parse().expect("literal"), Degree::ONE]);
    constants.sort();
    constants.dedup();
    let sampler = ConceptSampler::new(sig, phi, Fragment::Full, constants);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = PreservationReport { samples, min_biresiduum: Degree::ONE, counterexamples: Vec::new() };
    for _ in 0..samples {
        let c = sampler.sample(depth, &mut rng);
        let (vi, vj) = (eval_concept(&c, i), eval_concept(&c, j));
        for a in 0..sig.individuals().len() {
            let (l, r) = (vi.get(i.individual(a)), vj.get(j.individual(a)));
            let b = biresiduum(l, r);
            report.min_biresiduum = report.min_biresiduum.min(b);
            if b < gamma {
                report.counterexamples.push(Counterexample {
                    concept: c.display(sig).to_string(),
                    individual: sig.individuals()[a].clone(),
                    left: l,
                    right: r,
                });
            }
        }
    }
    Ok(report)
}
