use std::sync::Arc;

use super::{CohomologyClass, CohomologyError};
use crate::gkmgraph::LabeledGraph;
use crate::polyring::{s, t, Polynomial};
use crate::rootsys::{RootSystem, Sign, WeylElement};
use crate::scalar::Coefficient;

/// `tau_i` at a vertex: `eps * s_{v(i)}` on `G2`, `t_{v(i)}` on `A2`.
pub fn tau_value<C: Coefficient>(system: RootSystem, w: &WeylElement, i: usize) -> Polynomial<C> {
    let j = w.perm.apply(i);
    match system {
        RootSystem::A2 => t(j),
        RootSystem::G2 => match w.sign {
            Sign::Plus => s(j),
            Sign::Minus => -s::<C>(j),
        },
    }
}

/// `f` at a vertex: `s1 s2 s3` on the plus sheet, zero on the minus sheet.
pub fn f_value<C: Coefficient>(w: &WeylElement) -> Polynomial<C> {
    match w.sign {
        Sign::Plus => &(&s::<C>(1) * &s(2)) * &s(3),
        Sign::Minus => Polynomial::zero(),
    }
}

/// `tau1, tau2, tau3` and the constant classes `t1, t2, t3`, plus `f` on `G2`.
#[derive(Clone, Debug)]
pub struct GeneratorSet<C> {
    pub tau: [CohomologyClass<C>; 3],
    pub t: [CohomologyClass<C>; 3],
    pub f: Option<CohomologyClass<C>>,
}

impl<C: Coefficient> GeneratorSet<C> {
    pub fn graph(&self) -> &Arc<LabeledGraph> {
        self.t[0].graph()
    }

    /// The constant class `s_i = t_i - t_{i+1}`.
    pub fn s(&self, i: usize) -> CohomologyClass<C> {
        &self.t[i - 1] - &self.t[i % 3]
    }

    /// All generators in the order `tau1, tau2, tau3, t1, t2, t3, f`.
    pub fn all(&self) -> Vec<(&'static str, &CohomologyClass<C>)> {
        let mut out = vec![
            ("tau1", &self.tau[0]),
            ("tau2", &self.tau[1]),
            ("tau3", &self.tau[2]),
            ("t1", &self.t[0]),
            ("t2", &self.t[1]),
            ("t3", &self.t[2]),
        ];
        if let Some(f) = &self.f {
            out.push(("f", f));
        }
        out
    }
}

/// Generator classes on a `G2` or `A2` graph.
pub fn make_generators<C: Coefficient>(graph: Arc<LabeledGraph>) -> Result<GeneratorSet<C>, CohomologyError> {
    let system = graph.system();
    let tau = [1, 2, 3].map(|i| CohomologyClass::from_fn(graph.clone(), 1, |w| tau_value(system, w, i)));
    let t = [1, 2, 3].map(|i| CohomologyClass::constant(graph.clone(), t(i)));
    let [t1, t2, t3] = t;
    let [a, b, c] = tau;
    let f = match system {
        RootSystem::G2 => Some(CohomologyClass::from_fn(graph.clone(), 3, f_value)?),
        RootSystem::A2 => None,
    };
    Ok(GeneratorSet { tau: [a?, b?, c?], t: [t1?, t2?, t3?], f })
}

/// One named relation and whether it holds identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Evaluates the defining relations on the generator classes. `G2` has four,
/// `A2` three.
pub fn check_relations<C: Coefficient>(gs: &GeneratorSet<C>) -> Vec<RelationCheck> {
    let e = |i: usize, xs: &[CohomologyClass<C>; 3]| elementary_symmetric_classes(i, xs);
    let tau = &gs.tau;
    match &gs.f {
        None => (1..=3)
            .map(|i| RelationCheck {
                name: ["e1(tau) - e1(t)", "e2(tau) - e2(t)", "e3(tau) - e3(t)"][i - 1],
                holds: (&e(i, tau) - &e(i, &gs.t)).is_zero(),
            })
            .collect(),
        Some(f) => {
            let svars = [gs.s(1), gs.s(2), gs.s(3)];
            let e3s = e(3, &svars);
            let two_f = f + f;
            vec![
                RelationCheck { name: "e1(tau)", holds: e(1, tau).is_zero() },
                RelationCheck { name: "e2(tau) - e2(s)", holds: (&e(2, tau) - &e(2, &svars)).is_zero() },
                RelationCheck { name: "2f - e3(tau) - e3(s)", holds: (&(&two_f - &e(3, tau)) - &e3s).is_zero() },
                RelationCheck { name: "f^2 - f e3(s)", holds: (&(f * f) - &(f * &e3s)).is_zero() },
            ]
        }
    }
}

fn elementary_symmetric_classes<C: Coefficient>(i: usize, xs: &[CohomologyClass<C>; 3]) -> CohomologyClass<C> {
    let [a, b, c] = xs;
    match i {
        1 => &(a + b) + c,
        2 => &(&(a * b) + &(a * c)) + &(b * c),
        3 => &(a * b) * c,
        _ => panic!("elementary symmetric index {i}"),
    }
}

/// On each sign sheet of the `G2` graph, `tau_i` restricted to the sheet agrees
/// with `eps` times the `A2` class `tau_i` after `t_j -> s_j`.
pub fn tau_restricts_to_a2<C: Coefficient>(gs: &GeneratorSet<C>) -> bool {
    if gs.graph().system() != RootSystem::G2 {
        return false;
    }
    let images = [s::<C>(1), s(2), s(3)];
    gs.graph().vertices().iter().enumerate().all(|(idx, w)| {
        let a2_vertex = WeylElement::plus(w.perm);
        (1..=3).all(|i| {
            let a2_value: Polynomial<C> = tau_value(RootSystem::A2, &a2_vertex, i);
            let expected = a2_value.substitute(&images).scale(&C::from_int(w.sign.as_i64()));
            *gs.tau[i - 1].value(idx) == expected
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkmgraph::{build_from_root_system, build_g2_combinatorial};
    use num_bigint::BigInt;

    #[test]
    fn g2_generators_are_gkm_and_satisfy_relations() {
        let gs = make_generators::<BigInt>(Arc::new(build_g2_combinatorial())).unwrap();
        for (name, c) in gs.all() {
            assert!(c.is_gkm(), "{name}");
        }
        let rels = check_relations(&gs);
        assert_eq!(rels.len(), 4);
        assert!(rels.iter().all(|r| r.holds), "{rels:?}");
        assert!(tau_restricts_to_a2(&gs));
    }

    #[test]
    fn a2_generators_satisfy_relations() {
        let gs = make_generators::<BigInt>(Arc::new(build_from_root_system(RootSystem::A2))).unwrap();
        assert!(gs.f.is_none());
        for (name, c) in gs.all() {
            assert!(c.is_gkm(), "{name}");
        }
        let rels = check_relations(&gs);
        assert_eq!(rels.len(), 3);
        assert!(rels.iter().all(|r| r.holds));
    }

    #[test]
    fn perturbed_f_breaks_a_relation() {
        let mut gs = make_generators::<BigInt>(Arc::new(build_g2_combinatorial())).unwrap();
        gs.f = Some(&gs.f.clone().unwrap() + &gs.tau[0].scale_by(&(&s(1) * &s(2))));
        assert!(!check_relations(&gs).iter().all(|r| r.holds));
    }
}
