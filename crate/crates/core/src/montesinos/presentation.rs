use crate::winker::{
    normalize_relation, relation_holds, secondary_of, Presentation, Relation, Term,
};
use crate::words::{apply_word, cat, Gen, Word};

use super::model::build_model;
use super::{MontesinosParams, Parity};

fn d(s: &str) -> Word {
    Word::digits(s)
}

fn g(i: u16) -> Gen {
    Gen::new(i)
}

/// `A = [21]^{e−2} 2` and `B = [21]^{e−1} 2`, the words produced by the `e`
/// half-twists. Both are palindromes.
pub fn words_ab(e: i64) -> (Word, Word) {
    let a = d("21").power(e - 2).concat(&d("2"));
    let b = d("21").power(e - 1).concat(&d("2"));
    (a, b)
}

/// The exponent words `α`, `β` of the second and third relations.
///
/// For odd `q` the relations read `1^α = 3` and `1^β = 3`; for even `q` they
/// read `3^α = 3` and `1^β = 1`.
pub fn relation_words(params: &MontesinosParams) -> (Word, Word) {
    let (p, q) = (params.p(), params.q());
    let (a, b) = words_ab(params.e());
    let xa = cat(&[&d("232"), &a, &d("1"), &a]);
    let xb = cat(&[&d("232"), &b, &d("1"), &b]);
    match params.parity() {
        Parity::OddOdd => (
            cat(&[&a, &xb.power((q - p) / 2), &xa.power((p - 1) / 2), &d("2")]),
            cat(&[&b, &xb.power((q - p - 2) / 2), &xa.power((p + 1) / 2)]),
        ),
        Parity::EvenOdd => (
            cat(&[&b, &xb.power((q - p - 1) / 2), &xa.power(p / 2), &d("2")]),
            cat(&[&a, &xb.power((q - p - 1) / 2), &xa.power(p / 2)]),
        ),
        Parity::OddEven => (
            cat(&[&d("2"), &xb.power((q - p - 1) / 2), &xa.power((p + 1) / 2)]),
            cat(&[&a, &xb.power((q - p + 1) / 2), &xa.power((p - 1) / 2), &b]),
        ),
    }
}

/// Three-generator presentation `⟨1, 2, 3 | R1, R2, R3⟩` with `R1: 2^1 = 2^3`
/// and `R2`, `R3` chosen by the parity of `p` and `q`.
pub fn presentation(params: &MontesinosParams) -> Presentation {
    let (alpha, beta) = relation_words(params);
    let r1 = Relation::new(Term::new(g(2), d("1")), Term::new(g(2), d("3"))).named("R1");
    let (r2, r3) = if params.q_is_odd() {
        (
            Relation::new(Term::bare(g(3)), Term::new(g(1), alpha)),
            Relation::new(Term::bare(g(3)), Term::new(g(1), beta)),
        )
    } else {
        (
            Relation::new(Term::bare(g(3)), Term::new(g(3), alpha)),
            Relation::new(Term::bare(g(1)), Term::new(g(1), beta)),
        )
    };
    Presentation::numbered(3, vec![r1, r2.named("R2"), r3.named("R3")])
        .expect("generators 1..3 only")
}

fn rel(name: String, lhs: u16, rhs: u16, word: Word) -> Relation {
    Relation::new(Term::bare(g(lhs)), Term::new(g(rhs), word)).named(name)
}

/// Relation families of the rewritten presentation. `eps_sign` picks the sign
/// of the `±q/2` exponent in the `ε` family (even `q` only).
fn rewritten_relations(params: &MontesinosParams, eps_sign: i64) -> Vec<Relation> {
    let q = params.q();
    let aw = params.abs_w();
    let i1 = 0..aw;
    let i4 = 0..q;
    let mut out = Vec::new();

    let iota = |i: i64| {
        rel(
            format!("iota_{i}"),
            2,
            2,
            cat(&[&d("12").power(i), &d("31"), &d("21").power(i)]),
        )
    };
    let kappa = rel("kappa".into(), 2, 2, d("12").power(2 * aw));
    let delta = |i: i64| {
        rel(
            format!("delta_{i}"),
            1,
            1,
            cat(&[&d("21").power(i), &d("31").power(q), &d("12").power(i)]),
        )
    };
    let delta_p = rel("delta'".into(), 3, 3, d("13").power(q));

    if params.q_is_odd() {
        // tracing order: μ, δ', δ_i, θ_ik, κ, ι_i
        out.push(rel(
            "mu".into(),
            3,
            1,
            cat(&[&d("21").power(aw), &d("31").power((q - 1) / 2)]),
        ));
        out.push(delta_p);
        out.extend(i1.clone().map(delta));
        for i in i1.clone() {
            for k in i4.clone() {
                out.push(rel(
                    format!("theta_{i}_{k}"),
                    1,
                    1,
                    cat(&[
                        &d("21").power(i),
                        &d("31").power(k),
                        &d("21"),
                        &d("31").power(k),
                        &d("12").power(i + 1),
                    ]),
                ));
            }
        }
        out.push(kappa);
        out.extend(i1.map(iota));
    } else {
        let half_w = (aw - 1) / 2;
        let half_q = q / 2;
        out.push(delta(0));
        out.push(delta_p);
        out.push(rel(
            "gamma".into(),
            1,
            1,
            cat(&[&d("23").power(aw), &d("13").power((q - 2) / 2)]),
        ));
        out.push(rel(
            "gamma'".into(),
            3,
            3,
            cat(&[&d("12").power(aw), &d("31").power((q - 2) / 2)]),
        ));
        for i in 1..=half_w {
            out.push(rel(
                format!("epsilon_{i}"),
                1,
                1,
                cat(&[
                    &d("23").power(i),
                    &d("13").power(eps_sign * half_q),
                    &d("23").power(aw - i),
                    &d("3"),
                ]),
            ));
            out.push(rel(
                format!("epsilon'_{i}"),
                3,
                3,
                cat(&[
                    &d("12").power(i),
                    &d("13").power(eps_sign * half_q),
                    &d("12").power(aw - i),
                    &d("1"),
                ]),
            ));
        }
        for i in 0..half_w {
            for k in i4.clone() {
                out.push(rel(
                    format!("zeta_{i}_{k}"),
                    1,
                    1,
                    cat(&[
                        &d("23").power(i),
                        &d("31").power(k),
                        &d("21"),
                        &d("31").power(k - 1),
                        &d("32").power(i + 1),
                    ]),
                ));
                out.push(rel(
                    format!("zeta'_{i}_{k}"),
                    3,
                    3,
                    cat(&[
                        &d("12").power(i),
                        &d("31").power(k),
                        &d("32"),
                        &d("31").power(k + 1),
                        &d("21").power(i + 1),
                    ]),
                ));
            }
        }
        for k in 0..half_q {
            out.push(rel(
                format!("eta_{k}"),
                1,
                1,
                cat(&[
                    &d("23").power(half_w),
                    &d("31").power(k),
                    &d("2"),
                    &d("13").power(k + half_q),
                    &d("32").power(half_w),
                ]),
            ));
            out.push(rel(
                format!("eta'_{k}"),
                3,
                3,
                cat(&[
                    &d("12").power(half_w),
                    &d("13").power(k),
                    &d("121"),
                    &d("31").power(k + half_q),
                    &d("21").power(half_w),
                ]),
            ));
        }
        out.push(kappa);
        out.extend(i1.map(iota));
    }
    out
}

/// The rewritten presentation with an explicit sign for the `ε` exponent.
pub fn rewritten_presentation_with_sign(params: &MontesinosParams, eps_sign: i64) -> Presentation {
    Presentation::numbered(3, rewritten_relations(params, eps_sign)).expect("generators 1..3 only")
}

/// The rewritten presentation: relation families `δ_i, δ', θ_ik, ι_i, κ, μ`
/// for odd `q`, and `δ_0, δ', γ, γ', ε_i, ε'_i, ζ_ik, ζ'_ik, η_k, η'_k, ι_i, κ`
/// for even `q`.
///
/// For even `q` the sign of the `±q/2` exponent in `ε_i`, `ε'_i` is the one
/// under which those relations and their secondary loops hold in the lattice
/// model; `+` if both or neither do.
pub fn rewritten_presentation(params: &MontesinosParams) -> Presentation {
    if params.q_is_odd() {
        return rewritten_presentation_with_sign(params, 1);
    }
    let model = build_model(params).expect("lattice model is consistent");
    let q = &model.quandle;
    let eps_ok = |sign: i64| {
        rewritten_relations(params, sign)
            .iter()
            .filter(|r| r.name.as_deref().is_some_and(|n| n.starts_with("epsilon")))
            .all(|r| {
                let loop_word = secondary_of(&normalize_relation(r));
                relation_holds(q, r).unwrap_or(false)
                    && (0..q.order()).all(|x| apply_word(q, x, &loop_word).ok() == Some(x))
            })
    };
    let sign = if !eps_ok(1) && eps_ok(-1) { -1 } else { 1 };
    rewritten_presentation_with_sign(params, sign)
}

/// Secondary loop words listed for the odd-`q` rewritten presentation, in
/// their simplified printed form, tagged by family.
pub fn secondary_loop_words(params: &MontesinosParams) -> Vec<(String, Word)> {
    let q = params.q();
    let aw = params.abs_w();
    let mut out = vec![
        (
            "s_mu".to_string(),
            cat(&[
                &d("13").power((q - 1) / 2),
                &d("12").power(2 * aw),
                &d("13").power((q + 1) / 2),
            ]),
        ),
        ("s_delta'".to_string(), d("31").power(2 * q)),
    ];
    for i in 0..aw {
        out.push((
            format!("s_delta_{i}"),
            cat(&[
                &d("21").power(i),
                &d("13").power(q),
                &d("12").power(2 * i),
                &d("13").power(q),
                &d("21").power(i),
            ]),
        ));
    }
    for i in 0..aw {
        for k in 0..q {
            out.push((
                format!("s_theta_{i}_{k}"),
                cat(&[
                    &d("21").power(i + 1),
                    &d("13").power(k),
                    &d("12"),
                    &d("13").power(k),
                    &d("12").power(2 * i),
                    &d("13").power(k),
                    &d("12"),
                    &d("13").power(k),
                    &d("21").power(i + 1),
                ]),
            ));
        }
    }
    out.push(("s_kappa".to_string(), d("21").power(4 * aw)));
    for i in 0..aw {
        out.push((
            format!("s_iota_{i}"),
            cat(&[
                &d("12").power(i),
                &d("13"),
                &d("21").power(2 * i),
                &d("23"),
                &d("12").power(i + 1),
            ]),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::winker::normalize_relation;

    fn mp(p: i64, q: i64, e: i64) -> MontesinosParams {
        MontesinosParams::new(p, q, e).unwrap()
    }

    #[test]
    fn ab_examples() {
        assert_eq!(words_ab(3), (d("212"), d("21212")));
        assert_eq!(words_ab(2), (d("2"), d("212")));
        let (a, b) = words_ab(0);
        assert_eq!((a.clone(), b.clone()), (d("12122"), d("122")));
        // palindromes once doubled letters cancel
        for e in -6..8 {
            let (a, b) = words_ab(e);
            assert!(a.reduced().is_palindrome(), "A for e={e}");
            assert!(b.reduced().is_palindrome(), "B for e={e}");
        }
        assert_eq!(a.reduced(), d("121"));
        assert_eq!(b.reduced(), d("1"));
    }

    #[test]
    fn r2_for_353() {
        let p = presentation(&mp(3, 5, 3));
        let (a, b) = words_ab(3);
        let xb = cat(&[&d("232"), &b, &d("1"), &b]);
        let xa = cat(&[&d("232"), &a, &d("1"), &a]);
        let r2 = &p.relations()[1];
        assert_eq!(r2.lhs, Term::bare(g(3)));
        assert_eq!(r2.rhs, Term::new(g(1), cat(&[&a, &xb, &xa, &d("2")])));
        let r1 = normalize_relation(&p.relations()[0]);
        assert_eq!((r1.base, r1.word, r1.target), (g(2), d("13"), g(2)));
    }

    #[test]
    fn r2_for_odd_even() {
        let p = presentation(&mp(1, 2, 5));
        let (a, _) = words_ab(5);
        let xa = cat(&[&d("232"), &a, &d("1"), &a]);
        let r2 = &p.relations()[1];
        assert_eq!(r2.lhs, Term::bare(g(3)));
        assert_eq!(r2.rhs, Term::new(g(3), cat(&[&d("2"), &xa])));
    }

    #[test]
    fn r3_for_even_odd() {
        let params = mp(2, 5, 1);
        assert_eq!(params.parity(), Parity::EvenOdd);
        let (a, b) = words_ab(1);
        let xa = cat(&[&d("232"), &a, &d("1"), &a]);
        let xb = cat(&[&d("232"), &b, &d("1"), &b]);
        let (_, beta) = relation_words(&params);
        assert_eq!(beta, cat(&[&a, &xb, &xa]));
    }

    #[test]
    fn rewritten_mu_kappa() {
        let params = mp(3, 5, 3);
        let p = rewritten_presentation(&params);
        let find = |n: &str| {
            p.relations()
                .iter()
                .find(|r| r.name.as_deref() == Some(n))
                .unwrap()
                .clone()
        };
        let mu = find("mu");
        assert_eq!(mu.lhs, Term::bare(g(3)));
        assert_eq!(
            mu.rhs,
            Term::new(g(1), cat(&[&d("21").power(7), &d("31").power(2)]))
        );
        let kappa = find("kappa");
        assert_eq!(kappa.rhs, Term::new(g(2), d("12").power(14)));
    }

    #[test]
    fn rewritten_counts() {
        for params in MontesinosParams::sweep(7, -2, 4) {
            let n = rewritten_presentation_with_sign(&params, 1)
                .relations()
                .len() as i64;
            let (q, w) = (params.q(), params.abs_w());
            if params.q_is_odd() {
                assert_eq!(n, w + 1 + w * q + w + 2);
            } else {
                let i2 = (w - 1) / 2;
                let i3 = (w - 1) / 2;
                let i5 = q / 2;
                assert_eq!(n, 1 + 1 + 2 + 2 * i2 + 2 * i3 * q + 2 * i5 + w + 1);
            }
        }
    }
}
