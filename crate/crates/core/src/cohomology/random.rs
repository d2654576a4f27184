use std::sync::Arc;

use rand::Rng;

use super::symbolic::{SymbolMonomial, SymbolPoly};
use super::{CohomologyClass, CohomologyError};
use crate::gkmgraph::LabeledGraph;
use crate::polyring::{monomials_of_degree, Polynomial};
use crate::rootsys::RootSystem;
use crate::scalar::Coefficient;

/// A nonzero homogeneous expression of total degree `degree`: a sum of
/// `terms` products `c * t^a * tau1^i * tau2^j * tau3^l * f^d` with random
/// exponents and coefficients `c` in `-5..=5`. `f` only appears on `G2`.
pub fn random_symbol_poly<C: Coefficient, R: Rng>(
    system: RootSystem,
    degree: u32,
    terms: usize,
    rng: &mut R,
) -> SymbolPoly<C> {
    loop {
        let mut out = SymbolPoly::zero();
        for _ in 0..terms.max(1) {
            let f = match system {
                RootSystem::A2 => 0,
                RootSystem::G2 => rng.gen_range(0..=degree / 3),
            };
            let mut budget = degree - 3 * f;
            let mut tau = [0u32; 3];
            for e in &mut tau {
                *e = rng.gen_range(0..=budget);
                budget -= *e;
            }
            let t_part = monomials_of_degree(budget);
            let e = t_part[rng.gen_range(0..t_part.len())];
            let c = C::from_int(rng.gen_range(-5..=5));
            out.add_term(SymbolMonomial { tau, f }, Polynomial::monomial(e, c));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

/// A random expression together with the class it evaluates to on `graph`.
pub fn random_class<C: Coefficient, R: Rng>(
    graph: &Arc<LabeledGraph>,
    degree: u32,
    terms: usize,
    rng: &mut R,
) -> Result<(SymbolPoly<C>, CohomologyClass<C>), CohomologyError> {
    let expr = random_symbol_poly(graph.system(), degree, terms, rng);
    let class = expr.evaluate(graph.clone(), degree)?;
    Ok((expr, class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkmgraph::build_g2_combinatorial;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_classes_are_classes_of_the_requested_degree() {
        let g = Arc::new(build_g2_combinatorial());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for degree in 0..=5 {
            let (expr, class) = random_class::<BigInt, _>(&g, degree, 4, &mut rng).unwrap();
            assert_eq!(expr.degree(), Some(degree));
            assert!(class.is_gkm());
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: SymbolPoly<BigInt> = random_symbol_poly(RootSystem::G2, 5, 4, &mut ChaCha8Rng::seed_from_u64(3));
        let b: SymbolPoly<BigInt> = random_symbol_poly(RootSystem::G2, 5, 4, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
