//! Printed coproduct tables, as 2-leg expressions.
//!
//! Two of the sl(4) tables carry misprints; [`Printing::Corrected`] fixes
//! exactly those rows and [`Printing::AsPrinted`] keeps them verbatim so the
//! discrepancy stays demonstrable.

use super::TableRow;
use crate::exactring::{int, Rational};
use crate::liealg::{abs, e, GenLabel};
use crate::tensorexpr::{Node, TensorExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Printing {
    AsPrinted,
    Corrected,
}

type N = Node<Rational>;

fn g(l: &GenLabel, leg: usize) -> N {
    Node::gen(l.clone(), leg)
}

fn sig(l: &GenLabel, leg: usize) -> N {
    g(l, leg).log1p()
}

/// exp(Σ c·σ_l) on one leg.
fn esig(terms: &[(Rational, &GenLabel)], leg: usize) -> N {
    Node::Sum(terms.iter().map(|(c, l)| sig(l, leg).scaled(c.clone())).collect()).exp()
}

fn ei(terms: &[(i64, &GenLabel)], leg: usize) -> N {
    let t: Vec<(Rational, &GenLabel)> = terms.iter().map(|(c, l)| (int(*c), *l)).collect();
    esig(&t, leg)
}

fn one() -> N {
    Node::one()
}

/// left⊗right from one-leg nodes written on legs 1 and 2.
fn t(left: N, right: N) -> N {
    left.times(right)
}

fn neg(x: N) -> N {
    x.scaled(int(-1))
}

fn row(x: GenLabel, terms: Vec<N>) -> TableRow<Rational> {
    TableRow { x, rhs: TensorExpr::new(Node::Sum(terms), 2).expect("table rows live on legs 1, 2") }
}

/// Coproducts of the extended Jordanian twist on L(α,β), σ = ln(1+E).
pub fn extended_jordanian(beta: &Rational) -> Vec<TableRow<Rational>> {
    let (h, a, b, en) = (abs("H"), abs("A"), abs("B"), abs("E"));
    let es = |c: Rational, leg| esig(&[(c, &en)], leg);
    vec![
        row(
            h.clone(),
            vec![
                t(g(&h, 1), es(int(-1), 2)),
                t(one(), g(&h, 2)),
                neg(t(g(&a, 1), g(&b, 2).times(es(-(beta + int(1)), 2)))),
            ],
        ),
        row(a.clone(), vec![t(g(&a, 1), es(-beta.clone(), 2)), t(one(), g(&a, 2))]),
        row(b.clone(), vec![t(g(&b, 1), es(beta.clone(), 2)), t(es(int(1), 1), g(&b, 2))]),
        row(en.clone(), vec![t(g(&en, 1), es(int(1), 2)), t(one(), g(&en, 2))]),
    ]
}

/// Coproducts of the peripheric extended twist on L(1,0).
pub fn pet() -> Vec<TableRow<Rational>> {
    let (h, a, b, en) = (abs("H"), abs("A"), abs("B"), abs("E"));
    vec![
        row(
            h.clone(),
            vec![
                t(g(&h, 1), ei(&[(-1, &en)], 2)),
                t(one(), g(&h, 2)),
                neg(t(g(&a, 1), g(&b, 2).times(ei(&[(-1, &en)], 2)))),
            ],
        ),
        row(a.clone(), vec![t(g(&a, 1), one()), t(one(), g(&a, 2))]),
        row(b.clone(), vec![t(g(&b, 1), one()), t(ei(&[(1, &en)], 1), g(&b, 2))]),
        row(en.clone(), vec![t(g(&en, 1), ei(&[(1, &en)], 2)), t(one(), g(&en, 2))]),
    ]
}

struct Sl4 {
    e12: GenLabel,
    e13: GenLabel,
    e14: GenLabel,
    e23: GenLabel,
    e24: GenLabel,
    e34: GenLabel,
    hp0: GenLabel,
    hp1: GenLabel,
    hperp: GenLabel,
}

fn sl4() -> Sl4 {
    Sl4 {
        e12: e(1, 2),
        e13: e(1, 3),
        e14: e(1, 4),
        e23: e(2, 3),
        e24: e(2, 4),
        e34: e(3, 4),
        hp0: GenLabel::HP(0),
        hp1: GenLabel::HP(1),
        hperp: GenLabel::Hperp(1),
    }
}

fn prim(x: &GenLabel) -> TableRow<Rational> {
    row(x.clone(), vec![t(g(x, 1), one()), t(one(), g(x, 2))])
}

/// Coproducts for the two-link peripheric chain of sl(4) at ψ = 1.
pub fn sl4_chain(p: Printing) -> Vec<TableRow<Rational>> {
    let Sl4 { e12, e13, e14, e23, e24, e34, hp0, hp1, hperp } = sl4();
    let e12_first = match p {
        Printing::AsPrinted => &e14,
        Printing::Corrected => &e23,
    };
    let e34_left = match p {
        Printing::AsPrinted => g(&hp1, 1),
        Printing::Corrected => g(&hp1, 1).times(ei(&[(1, &e14)], 1)),
    };
    vec![
        row(
            e12.clone(),
            vec![
                t(g(&e12, 1), ei(&[(-1, e12_first)], 2)),
                t(one(), g(&e12, 2)),
                neg(t(g(&hp1, 1), g(&e13, 2).times(ei(&[(-1, &e23)], 2)))),
            ],
        ),
        prim(&e13),
        row(e14.clone(), vec![t(g(&e14, 1), ei(&[(1, &e14)], 2)), t(one(), g(&e14, 2))]),
        row(e23.clone(), vec![t(g(&e23, 1), ei(&[(1, &e23)], 2)), t(one(), g(&e23, 2))]),
        row(e24.clone(), vec![t(g(&e24, 1), ei(&[(1, &e23)], 2)), t(ei(&[(1, &e14)], 1), g(&e24, 2))]),
        row(
            e34.clone(),
            vec![
                t(g(&e34, 1), one()),
                t(ei(&[(1, &e14)], 1), g(&e34, 2)),
                t(e34_left, g(&e24, 2).times(ei(&[(-1, &e23)], 2))),
            ],
        ),
        row(
            hp0.clone(),
            vec![
                t(g(&hp0, 1), ei(&[(-1, &e14)], 2)),
                t(one(), g(&hp0, 2)),
                neg(t(g(&e13, 1), g(&e34, 2).times(ei(&[(-1, &e14)], 2)))),
                neg(t(
                    g(&e12, 1).plus(g(&hp1, 1).times(g(&e13, 1))),
                    g(&e24, 2).times(ei(&[(-1, &e14), (-1, &e23)], 2)),
                )),
            ],
        ),
        row(hp1.clone(), vec![t(g(&hp1, 1), ei(&[(-1, &e23)], 2)), t(one(), g(&hp1, 2))]),
        prim(&hperp),
    ]
}

/// Coproducts after the additional factor e^{H_1^⊥⊗σ_{1,3}}, ψ = ζ = 1.
pub fn sl4_enlarged(p: Printing) -> Vec<TableRow<Rational>> {
    let Sl4 { e12, e13, e14, e23, e24, e34, hp0, hp1, hperp } = sl4();
    let e12_second = match p {
        Printing::AsPrinted => &e14,
        Printing::Corrected => &e23,
    };
    let e34_left = match p {
        Printing::AsPrinted => g(&hp1, 1),
        Printing::Corrected => g(&hp1, 1).times(ei(&[(1, &e14)], 1)),
    };
    let hperp_sign = match p {
        Printing::AsPrinted => -1,
        Printing::Corrected => 1,
    };
    let em1 = |x: &GenLabel, c: i64, leg| ei(&[(c, x)], leg).plus(neg(one()));
    vec![
        row(
            e12.clone(),
            vec![
                t(g(&e12, 1), ei(&[(1, &e13), (-1, e12_second)], 2)),
                t(one(), g(&e12, 2)),
                neg(t(g(&hp1, 1), g(&e13, 2).times(ei(&[(-1, &e23)], 2)))),
            ],
        ),
        row(e13.clone(), vec![t(g(&e13, 1), ei(&[(1, &e13)], 2)), t(one(), g(&e13, 2))]),
        row(e14.clone(), vec![t(g(&e14, 1), ei(&[(1, &e14)], 2)), t(one(), g(&e14, 2))]),
        row(e23.clone(), vec![t(g(&e23, 1), ei(&[(1, &e23)], 2)), t(one(), g(&e23, 2))]),
        row(
            e24.clone(),
            vec![t(g(&e24, 1), ei(&[(1, &e23), (-1, &e13)], 2)), t(ei(&[(1, &e14)], 1), g(&e24, 2))],
        ),
        row(
            e34.clone(),
            vec![
                t(g(&e34, 1), ei(&[(-1, &e13)], 2)),
                t(ei(&[(1, &e14)], 1), g(&e34, 2)),
                t(g(&hperp, 1).times(ei(&[(1, &e14)], 1)), em1(&e14, 1, 2).times(ei(&[(-1, &e13)], 2))),
                t(e34_left, g(&e24, 2).times(ei(&[(-1, &e23)], 2))),
            ],
        ),
        row(
            hp0.clone(),
            vec![
                t(g(&hp0, 1), ei(&[(-1, &e14)], 2)),
                t(one(), g(&hp0, 2)),
                t(g(&hperp, 1), em1(&e13, -1, 2)).scaled(int(hperp_sign)),
                neg(t(em1(&e13, 1, 1), g(&e34, 2).times(ei(&[(-1, &e14), (1, &e13)], 2)))),
                neg(t(
                    g(&hperp, 1).times(em1(&e13, 1, 1)),
                    one().plus(neg(ei(&[(-1, &e14)], 2))),
                )),
                neg(t(
                    g(&e12, 1).plus(g(&hp1, 1).times(g(&e13, 1))),
                    g(&e24, 2).times(ei(&[(-1, &e14), (-1, &e23), (1, &e13)], 2)),
                )),
            ],
        ),
        row(hp1.clone(), vec![t(g(&hp1, 1), ei(&[(-1, &e23)], 2)), t(one(), g(&hp1, 2))]),
        row(hperp.clone(), vec![t(g(&hperp, 1), ei(&[(-1, &e13)], 2)), t(one(), g(&hperp, 2))]),
    ]
}

/// Labels of the rows that differ between the printed and corrected forms.
pub fn misprinted_rows(table: &str) -> &'static [&'static str] {
    match table {
        "sl4_chain" => &["E(1,2)", "E(3,4)"],
        "sl4_enlarged" => &["E(1,2)", "E(3,4)", "HP(0)"],
        _ => &[],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfverify::check_coproduct_table;
    use crate::liealg::{build_l, build_sl};
    use crate::tensorexpr::Representation;
    use crate::twistlib::{peripheric_chain, small, ChainSpec};
    use crate::exactring::q;
    use std::sync::Arc;

    #[test]
    fn pet_table() {
        let g = Arc::new(build_l(&int(1), &int(0)).unwrap());
        let rep = Representation::defining(&g).unwrap();
        let f = small::pet(&g, &int(1)).unwrap();
        assert!(check_coproduct_table("pet", &f, &pet(), &rep).unwrap().pass);
    }

    #[test]
    fn extended_jordanian_table() {
        for (a, b) in [(q(1, 2), q(1, 2)), (int(1), int(0)), (q(2, 3), q(1, 3))] {
            let g = Arc::new(build_l(&a, &b).unwrap());
            let rep = Representation::defining(&g).unwrap();
            let f = small::extended_jordanian(&g, &int(1)).unwrap();
            let r = check_coproduct_table("ej", &f, &extended_jordanian(&b), &rep).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn sl4_tables_corrected_pass_and_printed_fail_on_misprints() {
        let g = Arc::new(build_sl(4).unwrap());
        let rep = Representation::defining(&g).unwrap();
        let chain = peripheric_chain(&g, &[int(1), int(1)]).unwrap();
        let jb = ChainSpec::enlarged_jordanian(4, &[int(1), int(1)], &[int(1)]).build(&g, &int(1)).unwrap();
        for (name, f, tab) in [("sl4_chain", &chain, sl4_chain as fn(Printing) -> _), ("sl4_enlarged", &jb, sl4_enlarged)] {
            let ok = check_coproduct_table(name, f, &tab(Printing::Corrected), &rep).unwrap();
            assert!(ok.pass, "{ok:?}");
            let printed = check_coproduct_table(name, f, &tab(Printing::AsPrinted), &rep).unwrap();
            assert!(!printed.pass);
            assert_eq!(printed.notes["failing_rows"], misprinted_rows(name).join(" "));
        }
    }
}
