//! Random concepts for property checks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};

use crate::degree::Degree;
use crate::model::{Features, Signature};

use super::{Concept, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fragment {
    /// No union, universal restriction or complex role constructors.
    L0,
    Full,
}

/// Recursive sampler over the constructors enabled by the features and fragment.
#[derive(Clone, Debug)]
pub struct ConceptSampler<'a> {
    sig: &'a Signature,
    features: Features,
    fragment: Fragment,
    constants: Vec<Degree>,
}

impl<'a> ConceptSampler<'a> {
    pub fn new(sig: &'a Signature, features: Features, fragment: Fragment, constants: Vec<Degree>) -> Self {
        let constants = if constants.is_empty() { vec![Degree::ZERO, Degree::ONE] } else { constants };
        ConceptSampler { sig, features, fragment, constants }
    }

    fn leaf<R: Rng>(&self, rng: &mut R) -> Concept {
        let nc = self.sig.concepts().len();
        let ni = if self.features.nominals { self.sig.individuals().len() } else { 0 };
        let pick = rng.random_range(0..3);
        if pick == 0 || (nc == 0 && ni == 0) {
            return Concept::Constant(*self.constants.choose(rng).expect("nonempty"));
        }
        if ni > 0 && (nc == 0 || pick == 2 && rng.random_bool(0.5)) {
            return Concept::Nominal(rng.random_range(0..ni));
        }
        Concept::Name(rng.random_range(0..nc))
    }

    /// A concept of depth at most `depth`.
    pub fn sample<R: Rng>(&self, depth: usize, rng: &mut R) -> Concept {
        if depth == 0 || rng.random_range(0..5) == 0 {
            return self.leaf(rng);
        }
        let has_roles = !self.sig.roles().is_empty();
        let full = self.fragment == Fragment::Full;
        let mut choices = vec![0u8, 2];
        if full {
            choices.push(1);
        }
        if has_roles {
            choices.extend([3, 3]);
            if full {
                choices.extend([4, 4]);
            }
        }
        let sub = |rng: &mut R| Box::new(self.sample(depth - 1, rng));
        match *choices.choose(rng).expect("nonempty") {
            0 => Concept::And(sub(rng), sub(rng)),
            1 => Concept::Or(sub(rng), sub(rng)),
            2 => Concept::Implies(sub(rng), sub(rng)),
            3 => Concept::Exists(self.role(depth - 1, rng), sub(rng)),
            _ => Concept::Forall(self.role(depth - 1, rng), sub(rng)),
        }
    }

    fn role<R: Rng>(&self, depth: usize, rng: &mut R) -> Role {
        let name = Role::Name(rng.random_range(0..self.sig.roles().len()));
        let inv = self.features.inverse;
        if self.fragment == Fragment::L0 {
            return if inv && rng.random_bool(0.4) { Role::Inverse(Box::new(name)) } else { name };
        }
        if depth == 0 || rng.random_bool(0.45) {
            return if inv && rng.random_bool(0.3) { Role::Inverse(Box::new(name)) } else { name };
        }
        let sub = |rng: &mut R| Box::new(self.role(depth - 1, rng));
        match rng.random_range(0..if inv { 5 } else { 4 }) {
            0 => Role::Union(sub(rng), sub(rng)),
            1 => Role::Compose(sub(rng), sub(rng)),
            2 => Role::Star(sub(rng)),
            3 => Role::Test(Box::new(self.sample(depth - 1, rng))),
            _ => Role::Inverse(sub(rng)),
        }
    }
}

/// A random concept with constants drawn from {0, 0.5, 1}.
pub fn random_concept(sig: &Signature, features: Features, fragment: Fragment, depth: usize, seed: u64) -> Concept {
    let half: Degree = "0.5".parse().expect("literal");
    let sampler = ConceptSampler::new(sig, features, fragment, vec![Degree::ZERO, half, Degree::ONE]);
    sampler.sample(depth, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
}
