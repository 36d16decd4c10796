use super::GroupError;
use crate::field::{FiniteField, FiniteFieldSpec};
use crate::primes::{mult_order, Prime};
use serde::{Deserialize, Serialize};

pub const DEFAULT_FIELD_BITS: u32 = 20;

/// C_p acting on the additive group of a field by multiplication with an
/// element of order p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusModuleSpec {
    pub acting_prime: Prime,
    pub field: FiniteFieldSpec,
    pub generator_action: u64,
}

impl FrobeniusModuleSpec {
    pub fn field(&self) -> FiniteField {
        FiniteField::from_spec(self.field.clone())
    }

    /// Exhaustive scan: no power g^k (0 < k < p) fixes a nonzero element.
    pub fn is_fixed_point_free(&self) -> bool {
        let f = self.field();
        let p = self.acting_prime.get();
        if f.pow(self.generator_action, p) != 1 || self.generator_action == 1 {
            return false;
        }
        let mut h = 1;
        for _ in 1..p {
            h = f.mul(h, self.generator_action);
            if (1..f.size()).any(|x| f.mul(h, x) == x) {
                return false;
            }
        }
        true
    }
}

/// Smallest degree d with p | q^d − 1.
pub fn build_frobenius_module(p: Prime, q: Prime, max_field_bits: u32) -> Result<FrobeniusModuleSpec, GroupError> {
    build_frobenius_module_with(p, q, max_field_bits, false)
}

/// With `full_degree` the field has degree p − 1 instead of the smallest one.
pub fn build_frobenius_module_with(
    p: Prime,
    q: Prime,
    max_field_bits: u32,
    full_degree: bool,
) -> Result<FrobeniusModuleSpec, GroupError> {
    if p == q {
        return Err(GroupError::SamePrime(p));
    }
    let d = if full_degree { p.get() - 1 } else { mult_order(q.get() % p.get(), p.get()) };
    let too_large = GroupError::FieldTooLarge { q: q.get(), d, max_bits: max_field_bits };
    let size = q.get().checked_pow(d as u32).ok_or(too_large.clone())?;
    if max_field_bits < 64 && size > 1u64 << max_field_bits {
        return Err(too_large);
    }
    let f = FiniteField::new(q.get(), d as usize);
    let exp = (size - 1) / p.get();
    let generator_action = (1..size).map(|x| f.pow(x, exp)).find(|&g| g != 1).expect("order-p elements exist");
    Ok(FrobeniusModuleSpec { acting_prime: p, field: f.spec().clone(), generator_action })
}
