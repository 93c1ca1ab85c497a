//! Goedel semantics of concepts and roles.

use crate::degree::{residuum, Degree};
use crate::fuzzy::{FuzzyRelation, FuzzySet};
use crate::model::FuzzyInterpretation;

use super::{Concept, Role};

/// R^I as a fuzzy relation on the domain.
pub fn eval_role(r: &Role, i: &FuzzyInterpretation) -> FuzzyRelation {
    let n = i.len();
    match r {
        Role::Name(k) => i.role(*k).clone(),
        Role::Inverse(r) => eval_role(r, i).inverse(),
        Role::Union(a, b) => eval_role(a, i).union(&eval_role(b, i)).expect("same carrier"),
        Role::Compose(a, b) => eval_role(a, i).compose(&eval_role(b, i)).expect("same carrier"),
        Role::Test(c) => {
            let v = eval_concept(c, i);
            FuzzyRelation::from_entries(n, n, v.iter().map(|(x, d)| (x, x, d)))
        }
        Role::Star(r) => {
            let mut s = eval_role(r, i).union(&FuzzyRelation::identity(n)).expect("same carrier");
            loop {
                let sq = s.compose(&s).expect("square");
                if sq == s {
                    return s;
                }
                s = sq;
            }
        }
    }
}

/// C^I as a fuzzy set over the domain.
pub fn eval_concept(c: &Concept, i: &FuzzyInterpretation) -> FuzzySet {
    let n = i.len();
    match c {
        Concept::Constant(d) => FuzzySet::constant(n, *d),
        Concept::Name(k) => i.concept(*k).clone(),
        Concept::Nominal(a) => {
            let mut s = FuzzySet::new(n);
            s.set(i.individual(*a), Degree::ONE);
            s
        }
        Concept::And(a, b) => zip(&eval_concept(a, i), &eval_concept(b, i), Degree::min),
        Concept::Or(a, b) => zip(&eval_concept(a, i), &eval_concept(b, i), Degree::max),
        Concept::Implies(a, b) => zip(&eval_concept(a, i), &eval_concept(b, i), residuum),
        Concept::Exists(r, c) => {
            let (rel, v) = (eval_role(r, i), eval_concept(c, i));
            let mut out = FuzzySet::new(n);
            for x in 0..n {
                let d = rel.successors(x).map(|(y, e)| e.min(v.get(y))).fold(Degree::ZERO, Degree::max);
                out.set(x, d);
            }
            out
        }
        Concept::Forall(r, c) => {
            let (rel, v) = (eval_role(r, i), eval_concept(c, i));
            let mut out = FuzzySet::new(n);
            for x in 0..n {
                let d = rel.successors(x).map(|(y, e)| residuum(e, v.get(y))).fold(Degree::ONE, Degree::min);
                out.set(x, d);
            }
            out
        }
    }
}

fn zip(a: &FuzzySet, b: &FuzzySet, f: impl Fn(Degree, Degree) -> Degree) -> FuzzySet {
    let (a, b) = (a.to_dense(), b.to_dense());
    FuzzySet::from_dense(&a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect::<Vec<_>>())
}
