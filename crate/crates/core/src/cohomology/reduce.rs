//! Writes a `G2` graph cohomology class in the standard basis.
//!
//! The minus sheet is handled first: on it `f` vanishes and `tau_i` takes the
//! value `x_{v(i)}` with `x_i = -s_i`, so the class restricted to that sheet
//! is an `A2`-type class in the `x` variables, interpolated one fiber
//! `{v : v(q) = 3}` at a time. What remains vanishes on the minus sheet and is
//! divisible by `s1 s2 s3` on the plus sheet; the quotient is interpolated the
//! same way with `x_i = s_i` and multiplied by `f`.

use std::collections::BTreeMap;

use super::symbolic::{normal_form, ReductionCertificate, SymbolPoly};
use super::{CohomologyClass, CohomologyError};
use crate::polyring::{s, Polynomial};
use crate::rootsys::{Permutation, RootSystem, Sign, WeylElement};
use crate::scalar::Coefficient;

/// Expresses a graph cohomology class on the combinatorial `G2` graph as
/// `sum_m c_m(t) m` over the twelve basis monomials.
pub fn reduce_class<C: Coefficient>(h: &CohomologyClass<C>) -> Result<ReductionCertificate<C>, CohomologyError> {
    reduce_to_symbol(h).and_then(|expr| finish(h, expr))
}

/// The unreduced expression produced by the two interpolation stages.
pub fn reduce_to_symbol<C: Coefficient>(h: &CohomologyClass<C>) -> Result<SymbolPoly<C>, CohomologyError> {
    let graph = h.graph();
    if graph.system() != RootSystem::G2 || graph.num_vertices() != 12 {
        return Err(CohomologyError::UnsupportedGraph(graph.system()));
    }
    if let Err(v) = h.gkm_check() {
        return Err(CohomologyError::NotGkm { edge: (graph.vertex(v.edge.u), graph.vertex(v.edge.v)) });
    }
    let sheet = |sign: Sign| -> BTreeMap<Permutation, Polynomial<C>> {
        Permutation::all()
            .into_iter()
            .map(|p| {
                let value = h.value_at(&WeylElement::new(p, sign)).cloned().unwrap_or_else(Polynomial::zero);
                (p, value)
            })
            .collect()
    };

    let minus_part = interpolate_sheet(Sign::Minus, sheet(Sign::Minus))?;
    let plus_values = sheet(Sign::Plus);
    let mut quotients = BTreeMap::new();
    for (p, value) in plus_values {
        let w = WeylElement::plus(p);
        let mut rest = &value - &minus_part.evaluate_at(RootSystem::G2, &w);
        for i in 1..=3 {
            rest = rest
                .div_exact_by_linear_poly(&s(i))
                .map_err(|_| CohomologyError::InternalNonDivisible { vertex: w })?;
        }
        quotients.insert(p, rest);
    }
    let plus_part = interpolate_sheet(Sign::Plus, quotients)?;
    Ok(&minus_part + &(&plus_part * &SymbolPoly::f()))
}

fn finish<C: Coefficient>(
    h: &CohomologyClass<C>,
    expr: SymbolPoly<C>,
) -> Result<ReductionCertificate<C>, CohomologyError> {
    let cert = normal_form(RootSystem::G2, &expr)?;
    let cert = if cert.degree() == h.degree() {
        cert
    } else if cert.to_symbol().is_zero() {
        ReductionCertificate::new(RootSystem::G2, h.degree(), BTreeMap::new())?
    } else {
        return Err(CohomologyError::InternalResidual);
    };
    for (i, w) in h.graph().vertices().iter().enumerate() {
        if cert.to_symbol().evaluate_at(RootSystem::G2, w) != *h.value(i) {
            return Err(CohomologyError::InternalResidual);
        }
    }
    Ok(cert)
}

/// Finds `g` in `tau`s with `g(v) = values[v]` for all `v` on one sheet, where
/// `tau_i(v) = x_{v(i)}` and `x_i = sign * s_i`.
fn interpolate_sheet<C: Coefficient>(
    sign: Sign,
    mut residual: BTreeMap<Permutation, Polynomial<C>>,
) -> Result<SymbolPoly<C>, CohomologyError> {
    let eps = C::from_int(sign.as_i64());
    let x: [Polynomial<C>; 3] = [1, 2, 3].map(|i| s::<C>(i).scale(&eps));
    let tau_at = |v: &Permutation, i: usize| x[v.apply(i) - 1].clone();
    let at = |v: &Permutation, g: &SymbolPoly<C>| g.evaluate_at(RootSystem::G2, &WeylElement::new(*v, sign));

    let mut out = SymbolPoly::zero();
    for q in 1..=3 {
        let fiber: Vec<Permutation> = Permutation::all().into_iter().filter(|v| v.apply(q) == 3).collect();
        let [w, w2] = fiber[..] else { unreachable!("each fiber has two permutations") };
        let multiplier = (1..q).fold(SymbolPoly::constant(Polynomial::one()), |acc, i| {
            &acc * &(&SymbolPoly::tau(i) - &SymbolPoly::constant(x[2].clone()))
        });
        let divide_out = |v: &Permutation, mut p: Polynomial<C>| -> Result<Polynomial<C>, CohomologyError> {
            for i in 1..q {
                p = p
                    .div_exact_by_linear_poly(&(&tau_at(v, i) - &x[2]))
                    .map_err(|_| CohomologyError::InternalNonDivisible { vertex: WeylElement::new(*v, sign) })?;
            }
            Ok(p)
        };

        let g_w = divide_out(&w, residual[&w].clone())?;
        let first = &SymbolPoly::constant(g_w) * &multiplier;
        subtract(&mut residual, &first, &at);

        let j = (1..=3).find(|&j| j != q).unwrap();
        let (delta, ell) = (&tau_at(&w2, j) - &tau_at(&w, j))
            .as_linear_form()
            .map_err(|_| CohomologyError::InternalNonDivisible { vertex: WeylElement::new(w2, sign) })?;
        let g_w2 = residual[&w2]
            .div_exact_linear(&ell)
            .map_err(|_| CohomologyError::InternalNonDivisible { vertex: WeylElement::new(w2, sign) })?;
        let g_w2 = divide_out(&w2, g_w2)?.scale(&delta);
        let vanishing_at_w = &SymbolPoly::tau(j) - &SymbolPoly::constant(tau_at(&w, j));
        let second = &(&SymbolPoly::constant(g_w2) * &vanishing_at_w) * &multiplier;
        subtract(&mut residual, &second, &at);

        out = &(&out + &first) + &second;
    }
    if let Some((v, _)) = residual.iter().find(|(_, r)| !r.is_zero()) {
        return Err(CohomologyError::InternalNonDivisible { vertex: WeylElement::new(*v, sign) });
    }
    Ok(out)
}

fn subtract<C: Coefficient>(
    residual: &mut BTreeMap<Permutation, Polynomial<C>>,
    g: &SymbolPoly<C>,
    at: &impl Fn(&Permutation, &SymbolPoly<C>) -> Polynomial<C>,
) {
    for (v, r) in residual.iter_mut() {
        *r = &*r - &at(v, g);
    }
}
