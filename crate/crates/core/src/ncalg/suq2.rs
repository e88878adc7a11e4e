use std::sync::OnceLock;

use super::{Alphabet, Gen, NCPoly, RewriteSystem, Rule, TermOrder};
use crate::scalars::ScalarQ;

/// α
pub const A: Gen = 0;
/// α*
pub const AS: Gen = 1;
/// γ
pub const G: Gen = 2;
/// γ*
pub const GS: Gen = 3;

/// The defining relations of C[SU_q(2)], oriented towards the PBW basis
/// `α^k γ^m γ*^n`, `α*^k γ^m γ*^n`.
///
/// Precedence is α* < α < γ < γ*. The α-letters carry weight 2 and the
/// γ-letters weight 1, so that `α*α → 1 − γγ*` and `αα* → 1 − q²γγ*`
/// decrease the order as well as the commutation rules.
pub fn suq2_presentation() -> RewriteSystem {
    let alphabet = Alphabet::new(
        vec!["a".into(), "as".into(), "g".into(), "gs".into()],
        vec![AS, A, GS, G],
    )
    .expect("static alphabet");
    let order = TermOrder::new(vec![2, 2, 1, 1], vec![1, 0, 2, 3]).expect("static order");
    let q = ScalarQ::q;
    let qi = || ScalarQ::q_pow(-1);
    let one_minus = |c: ScalarQ| {
        let mut p = NCPoly::one();
        p.add_term(vec![G, GS], -c);
        p
    };
    let rules = vec![
        // αγ = qγα
        Rule { lhs: vec![G, A], rhs: NCPoly::term(qi(), vec![A, G]) },
        // αγ* = qγ*α
        Rule { lhs: vec![GS, A], rhs: NCPoly::term(qi(), vec![A, GS]) },
        // star conjugates of the two above
        Rule { lhs: vec![G, AS], rhs: NCPoly::term(q(), vec![AS, G]) },
        Rule { lhs: vec![GS, AS], rhs: NCPoly::term(q(), vec![AS, GS]) },
        // γγ* = γ*γ
        Rule { lhs: vec![GS, G], rhs: NCPoly::word(vec![G, GS]) },
        // α*α + γ*γ = 1
        Rule { lhs: vec![AS, A], rhs: one_minus(ScalarQ::one()) },
        // αα* + q²γγ* = 1
        Rule { lhs: vec![A, AS], rhs: one_minus(ScalarQ::q_pow(2)) },
    ];
    RewriteSystem::new(alphabet, rules, order).expect("SU_q(2) rules decrease the order")
}

/// Process-wide shared instance, so that the normal-form cache is reused.
pub fn suq2() -> &'static RewriteSystem {
    static SYS: OnceLock<RewriteSystem> = OnceLock::new();
    SYS.get_or_init(suq2_presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::check_confluence;

    #[test]
    fn relations_reduce_as_expected() {
        let s = suq2();
        let qi = ScalarQ::q_pow(-1);
        assert_eq!(s.normalize(&NCPoly::word(vec![G, A])), NCPoly::term(qi, vec![A, G]));
        let mut expect = NCPoly::one();
        expect.add_term(vec![G, GS], ScalarQ::from_int(-1));
        assert_eq!(s.normalize(&NCPoly::word(vec![AS, A])), expect);
        assert_eq!(s.normalize(&NCPoly::one()), NCPoly::one());
        let aas_minus_1 = &NCPoly::word(vec![A, AS]) - &NCPoly::one();
        assert_eq!(s.normalize(&aas_minus_1), NCPoly::term(-ScalarQ::q_pow(2), vec![G, GS]));
        assert_eq!(s.normalize(&NCPoly::word(vec![GS, G])), NCPoly::word(vec![G, GS]));
        assert!(s.is_normal_word(&[A, A, G]));
    }

    #[test]
    fn presentation_is_confluent() {
        assert!(check_confluence(suq2(), 8).is_empty());
    }

    #[test]
    fn star_of_alpha_gamma() {
        let s = suq2();
        let r = s.star(&NCPoly::word(vec![A, G]));
        assert_eq!(r, NCPoly::term(ScalarQ::q(), vec![AS, GS]));
        assert_eq!(s.star(&NCPoly::one()), NCPoly::one());
    }
}
