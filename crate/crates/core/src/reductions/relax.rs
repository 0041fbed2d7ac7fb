use super::ReductionError;
use crate::solver::{find_hom, HomSearchResult, SearchBudget};
use crate::structures::{Homomorphism, Structure};

/// Similar structures `a`, `b`, `x`: Yes if `b → x`, No if `a ↛ x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromiseInstance {
    pub a: Structure,
    pub b: Structure,
    pub x: Structure,
}

impl PromiseInstance {
    pub fn new(a: Structure, b: Structure, x: Structure) -> Result<Self, ReductionError> {
        if !a.is_similar(&b) || !a.is_similar(&x) {
            return Err(ReductionError::DissimilarStructures);
        }
        Ok(PromiseInstance { a, b, x })
    }
}

/// An instance moved to the pair `(c, d)`, with `a → c` and `d → b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxedInstance {
    pub instance: PromiseInstance,
    pub a_to_c: Homomorphism,
    pub d_to_b: Homomorphism,
}

impl RelaxedInstance {
    /// `b → x` gives `d → x`.
    pub fn lift_yes(&self, b_to_x: &Homomorphism) -> Homomorphism {
        self.d_to_b.then(b_to_x)
    }

    /// `c → x` gives `a → x`.
    pub fn pull_back(&self, c_to_x: &Homomorphism) -> Homomorphism {
        self.a_to_c.then(c_to_x)
    }
}

fn witness(
    from: &Structure,
    to: &Structure,
    budget: SearchBudget,
    which: &'static str,
) -> Result<Homomorphism, ReductionError> {
    match find_hom(from, to, budget)? {
        HomSearchResult::Found(h) => Ok(h),
        HomSearchResult::NoneExists => Err(ReductionError::RelaxationWitnessMissing(which)),
        HomSearchResult::BudgetExceeded => Err(ReductionError::BudgetExceeded),
    }
}

/// Maps the instance `(a, b, x)` to `(c, d, x)`, keeping `x`.
pub fn relaxation_map(
    instance: &PromiseInstance,
    c: &Structure,
    d: &Structure,
    budget: SearchBudget,
) -> Result<RelaxedInstance, ReductionError> {
    if !instance.a.is_similar(c) || !instance.a.is_similar(d) {
        return Err(ReductionError::DissimilarStructures);
    }
    let a_to_c = witness(&instance.a, c, budget, "a -> c")?;
    let d_to_b = witness(d, &instance.b, budget, "d -> b")?;
    Ok(RelaxedInstance {
        instance: PromiseInstance {
            a: c.clone(),
            b: d.clone(),
            x: instance.x.clone(),
        },
        a_to_c,
        d_to_b,
    })
}
