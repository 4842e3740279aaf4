//! The thirteen acceptance criteria, one line each.

use std::sync::Arc;

use peritwist::classical::{
    carrier, check_cybe, check_semiclassical, cocycle_check, jb_carrier_basis, omega_form, phi_map, r_formula,
    same_span, semiclassical, semiclassical_expr, Params, R_FAMILIES,
};
use peritwist::exactring::{int, q, Jet, Rational};
use peritwist::hopfverify::tables::{self, Printing};
use peritwist::hopfverify::{check_coproduct_table, check_counit, check_drinfeld, check_qybe, matreshka, r_matrix};
use peritwist::liealg::{build_l, build_sl, cohomology_h2_dim, GenLabel, LieAlgebra};
use peritwist::tensorexpr::{Representation, TensorExpr};
use peritwist::twistlib::{
    factorization_check, jordanian, parameter_points, peripheric_chain, psi_zeta_to_nu_rho, rearrangement_check,
    sl3_specials, small, ChainSpec,
};

const SEED: u64 = 2024;

fn sl(n: usize) -> Arc<LieAlgebra> {
    Arc::new(build_sl(n).unwrap())
}

fn defining(g: &Arc<LieAlgebra>) -> Representation {
    Representation::defining(g).unwrap()
}

fn p(pairs: &[(&str, Vec<Rational>)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// ⌈N/2⌉ and ⌊N/2⌋, computed here independently of the library.
fn halves(n: usize) -> (usize, usize) {
    (n.div_ceil(2), n / 2)
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, ok: String) -> Self {
        if failures.is_empty() {
            Outcome { pass: true, detail: ok }
        } else {
            Outcome { pass: false, detail: failures.join("; ") }
        }
    }
}

/// Every twist of criteria 1–3, at three parameter points each.
fn twists() -> Vec<(String, Representation, TensorExpr<Rational>)> {
    let xis = [int(1), q(2, 3), q(-5, 7)];
    let mut out = Vec::new();
    let sl2 = sl(2);
    let l_half = Arc::new(build_l(&q(1, 2), &q(1, 2)).unwrap());
    let l10 = Arc::new(build_l(&int(1), &int(0)).unwrap());
    for xi in &xis {
        let f = jordanian(&sl2, &sl2.element(&GenLabel::H(1, 2)).unwrap(), &GenLabel::E(1, 2), xi).unwrap();
        out.push((format!("jordanian/sl2/{xi}"), defining(&sl2), f));
        out.push((format!("ej/L(1/2,1/2)/{xi}"), defining(&l_half), small::extended_jordanian(&l_half, xi).unwrap()));
        out.push((format!("pet/L(1,0)/{xi}"), defining(&l10), small::pet(&l10, xi).unwrap()));
    }
    for n in 3..=8 {
        let g = sl(n);
        let (_, z) = halves(n);
        for pt in parameter_points(z, 0, SEED) {
            out.push((format!("chain/sl{n}/{}", pt.name), defining(&g), peripheric_chain(&g, &pt.psi).unwrap()));
        }
    }
    for n in [4, 7] {
        let g = sl(n);
        let (h, z) = halves(n);
        for pt in parameter_points(z, h - 1, SEED) {
            let f = ChainSpec::enlarged_jordanian(n, &pt.psi, &pt.zeta).build(&g, &int(1)).unwrap();
            out.push((format!("enlarged-J/sl{n}/{}", pt.name), defining(&g), f));
        }
    }
    let g4 = sl(4);
    let m = ChainSpec::reshetikhin_size(4);
    for (i, pt) in parameter_points(2, m * m, SEED).into_iter().enumerate() {
        let beta: Vec<Vec<Rational>> = pt.zeta.chunks(m).map(|c| c.to_vec()).collect();
        let f = ChainSpec::enlarged_reshetikhin(4, &pt.psi, beta).build(&g4, &int(1)).unwrap();
        out.push((format!("enlarged-R/sl4/{i}"), defining(&g4), f));
    }
    let g3 = sl(3);
    for (psi, vs, zeta) in [(int(1), int(1), int(1)), (q(2, 3), q(-5, 4), q(3, 7)), (q(-7, 2), q(1, 9), q(-4, 3))] {
        for (name, f) in sl3_specials(&g3, &psi, &vs, &zeta).unwrap() {
            out.push((format!("{name}/sl3/{psi},{vs},{zeta}"), defining(&g3), f));
        }
    }
    out
}

fn hopf_criteria(which: usize) -> Outcome {
    let ts = twists();
    let mut bad = Vec::new();
    for (name, rep, f) in &ts {
        let r = match which {
            1 => check_drinfeld(name, f, rep),
            2 => check_counit(name, f, rep),
            _ => r_matrix(f, rep).and_then(|r| check_qybe(name, &r)),
        }
        .unwrap();
        if !r.pass {
            bad.push(format!("{} residual {}", r.check, r.residual_support));
        }
    }
    Outcome::new(bad, format!("{} twists", ts.len()))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let l10 = Arc::new(build_l(&int(1), &int(0)).unwrap());
    let rep = defining(&l10);
    let r = check_coproduct_table("pet-coproducts", &small::pet(&l10, &int(1)).unwrap(), &tables::pet(), &rep).unwrap();
    let mut rows = vec![r.notes["rows"].clone()];
    if !r.pass {
        bad.push(format!("pet-coproducts residual {}", r.residual_support));
    }
    let g = sl(4);
    let rep = defining(&g);
    let one = [int(1), int(1)];
    let chain = peripheric_chain(&g, &one).unwrap();
    let jb = ChainSpec::enlarged_jordanian(4, &one, &[int(1)]).build(&g, &int(1)).unwrap();
    for (name, f, rows_of) in [
        ("table-chain", &chain, tables::sl4_chain(Printing::Corrected)),
        ("table-enlarged", &jb, tables::sl4_enlarged(Printing::Corrected)),
    ] {
        let r = check_coproduct_table(name, f, &rows_of, &rep).unwrap();
        rows.push(r.notes["rows"].clone());
        if !r.pass {
            bad.push(format!("{name} residual {}", r.residual_support));
        }
    }
    if rows != ["4", "9", "9"] {
        bad.push(format!("row counts {rows:?}"));
    }
    Outcome::new(bad, "4 + 9 + 9 rows; corrected misprints, see ledger".into())
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for n in [4, 5] {
        let g = sl(n);
        let rep = defining(&g);
        let (_, z) = halves(n);
        for pt in parameter_points(z, 0, SEED) {
            for r in factorization_check(&g, &rep, &pt.psi[0]).unwrap() {
                if !r.pass {
                    bad.push(r.check);
                }
            }
            let r = rearrangement_check(&g, &rep, &pt.psi).unwrap();
            if !r.pass {
                bad.push(r.check);
            }
        }
    }
    Outcome::new(bad, "N = 4, 5".into())
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let g3 = sl(3);
    let r3 = r_formula(&g3, "r_JE_P_sl3", &p(&[("varsigma", vec![q(3, 5)])])).unwrap();
    let g4 = sl(4);
    let r4 = r_formula(&g4, "r_JB_sl4", &p(&[("psi", vec![q(3, 2), q(-1, 3)]), ("varsigma", vec![q(5, 7)])])).unwrap();
    let g7 = sl(7);
    let r7 = r_formula(
        &g7,
        "r_JB_sl7",
        &p(&[("psi", vec![q(2, 3), q(-1, 2), q(5, 4)]), ("varsigma", vec![q(3, 2), q(-2, 5), q(7, 3)])]),
    )
    .unwrap();
    let dims = [carrier(&r3, &g3).len(), carrier(&r4, &g4).len(), carrier(&r7, &g7).len()];
    if dims != [4, 8, 24] {
        bad.push(format!("printed carriers {dims:?}"));
    }
    for n in 3..=8 {
        let g = sl(n);
        let (h, z) = halves(n);
        let psi: Vec<Rational> = (1..=z).map(|i| q(2 * i as i64 + 1, 3)).collect();
        let zeta: Vec<Rational> = (1..h).map(|i| q(-(i as i64) - 1, 5)).collect();
        let r = r_formula(&g, "r_JB", &p(&[("psi", psi), ("zeta", zeta)])).unwrap();
        let want = (n * n + n - 2 * h) / 2;
        let got = carrier(&r, &g).len();
        if got != want || jb_carrier_basis(n).unwrap().len() != want {
            bad.push(format!("sl({n}) carrier {got}, formula {want}"));
        }
    }
    Outcome::new(bad, "4, 8, 24; (N²+N−2n)/2 for N = 3..8".into())
}

fn criterion_7() -> Outcome {
    let a = cohomology_h2_dim(&build_l(&int(1), &int(0)).unwrap());
    let b = cohomology_h2_dim(&build_l(&q(1, 2), &q(1, 2)).unwrap());
    let bad = if (a, b) == (1, 0) { vec![] } else { vec![format!("H² dims {a}, {b}")] };
    Outcome::new(bad, "dim H²(L(1,0)) = 1, dim H²(L(1/2,1/2)) = 0".into())
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let g3 = sl(3);
    let rep3 = defining(&g3);
    let vs = q(-2, 7);
    let fs = sl3_specials(&g3, &Jet::<2>::xi(), &Jet::xi_times(&vs), &Jet::constant(int(1))).unwrap();
    let lim = semiclassical_expr(&fs[0].1, &rep3).unwrap();
    let r = r_formula(&g3, "r_JE_P_sl3", &p(&[("varsigma", vec![vs])])).unwrap();
    let mut reports = vec![check_semiclassical("sl3", &lim, &r, &rep3)];

    let g4 = sl(4);
    let rep4 = defining(&g4);
    let (psi, vs) = (vec![q(3, 2), q(-1, 3)], vec![q(5, 7)]);
    let lim = semiclassical(&ChainSpec::enlarged_jordanian(4, &psi, &vs), &rep4).unwrap();
    let r = r_formula(&g4, "r_JB_sl4", &p(&[("psi", psi), ("varsigma", vs)])).unwrap();
    reports.push(check_semiclassical("sl4", &lim, &r, &rep4));

    let g7 = sl(7);
    let rep7 = defining(&g7);
    let (psi, vs) = (vec![q(2, 3), q(-1, 2), q(5, 4)], vec![q(3, 2), q(-2, 5), q(7, 3)]);
    let lim = semiclassical(&ChainSpec::enlarged_jordanian(7, &psi, &vs), &rep7).unwrap();
    let r = r_formula(&g7, "r_JB_sl7", &p(&[("psi", psi), ("varsigma", vs)])).unwrap();
    reports.push(check_semiclassical("sl7", &lim, &r, &rep7));
    for r in reports {
        if !r.pass {
            bad.push(format!("{} residual {}", r.check, r.residual_support));
        }
    }
    Outcome::new(bad, "sl(3), sl(4), sl(7)".into())
}

/// (family, N, parameter keys with lengths) for every r-matrix family.
fn family_shapes() -> Vec<(&'static str, usize, Vec<(&'static str, usize)>)> {
    let mut v = vec![
        ("r_JE_sl3", 3, vec![("xi", 1)]),
        ("r_RE_sl3", 3, vec![("zeta", 1)]),
        ("r_JE_P_sl3", 3, vec![("varsigma", 1)]),
        ("r_JJ_sl3", 3, vec![("eta", 1)]),
        ("r_JB_sl4", 4, vec![("psi", 2), ("varsigma", 1)]),
        ("r_JB_sl7", 7, vec![("psi", 3), ("varsigma", 3)]),
        ("r_JB_sl7_phi", 7, vec![("psi", 3), ("varsigma", 3)]),
    ];
    for n in [3, 4, 5, 6] {
        let (h, z) = halves(n);
        v.push(("r_RB", n, vec![("psi", z), ("beta", (n - 1) * (n - 1))]));
        v.push(("r_B_canonical", n, vec![("psi", z)]));
        v.push(("r_JB", n, vec![("psi", z), ("zeta", h - 1)]));
        v.push(("r_JB_new", n, vec![("psi", z), ("varsigma", h - 1)]));
    }
    v
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let shapes = family_shapes();
    for fam in R_FAMILIES {
        if !shapes.iter().any(|(f, _, _)| f == fam) {
            bad.push(format!("{fam} not exercised"));
        }
    }
    let mut count = 0;
    for (fam, n, keys) in shapes {
        let g = sl(n);
        let total: usize = keys.iter().map(|(_, l)| l).sum();
        for pt in parameter_points(total, 0, SEED + n as u64) {
            let mut vals = pt.psi.into_iter();
            let params = p(&keys.iter().map(|(k, l)| (*k, vals.by_ref().take(*l).collect())).collect::<Vec<_>>());
            let r = r_formula(&g, fam, &params).unwrap();
            count += 1;
            let rep = check_cybe(fam, &r, &g).unwrap();
            if !rep.pass {
                bad.push(format!("{fam} on sl({n}) at {}", pt.name));
            }
        }
    }
    Outcome::new(bad, format!("{count} (family, N, point) cases"))
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    for n in [4, 7] {
        let g = sl(n);
        let (h, z) = halves(n);
        for pt in parameter_points(z, h - 1, SEED) {
            let phi = phi_map(&g, &pt.zeta).unwrap();
            let hom = phi.check_homomorphism(&g).unwrap();
            if !hom.pass {
                bad.push(format!("φ on sl({n}) at {}: {:?}", pt.name, hom.notes));
            }
            let r = r_formula(&g, "r_JB", &p(&[("psi", pt.psi.clone()), ("zeta", pt.zeta.clone())])).unwrap();
            if !same_span(&phi.images, &carrier(&r, &g), g.dim()) {
                bad.push(format!("φ image ≠ carrier on sl({n})"));
            }
        }
    }
    for n in 3..=7 {
        let g = sl(n);
        let (h, z) = halves(n);
        for pt in parameter_points(z, h - 1, SEED) {
            let a = r_formula(&g, "r_JB", &p(&[("psi", pt.psi.clone()), ("zeta", pt.zeta.clone())])).unwrap();
            let b = r_formula(&g, "r_JB_new", &p(&[("psi", pt.psi.clone()), ("varsigma", pt.zeta.clone())])).unwrap();
            if a != b {
                bad.push(format!("r_JB_new ≠ r_JB on sl({n})"));
            }
            if n == 7 {
                let pr = p(&[("psi", pt.psi.clone()), ("varsigma", pt.zeta.clone())]);
                if r_formula(&g, "r_JB_sl7_phi", &pr).unwrap() != r_formula(&g, "r_JB_sl7", &pr).unwrap() {
                    bad.push(format!("r_JB_sl7_phi ≠ r_JB_sl7 at {}", pt.name));
                }
            }
        }
    }
    Outcome::new(bad, "φ injective homomorphism onto the carrier (N = 4, 7); both rewritings exact".into())
}

fn criterion_11() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=7 {
        let g = sl(n);
        let (h, z) = halves(n);
        for pt in parameter_points(z, h - 1, SEED) {
            let w = omega_form(&g, "omega_JB", &p(&[("psi", pt.psi), ("zeta", pt.zeta)])).unwrap();
            if !w.is_nondegenerate() {
                bad.push(format!("ω_JB degenerate on sl({n}) at {}", pt.name));
            }
        }
    }
    for n in [4, 5, 6] {
        let g = sl(n);
        let (_, z) = halves(n);
        let chi: Vec<Rational> = (1..=z).map(|i| q(i as i64 + 2, 3)).collect();
        let b = omega_form(&g, "omega_B", &p(&[("chi", chi.clone())])).unwrap();
        let rb = omega_form(&g, "omega_RB", &p(&[("chi", chi), ("phi", vec![int(0); (n - 1) * (n - 1)])])).unwrap();
        if b.gram != rb.gram || b.labels != rb.labels {
            bad.push(format!("ω_RB(φ=0) ≠ ω_B on sl({n})"));
        }
    }
    let l10 = build_l(&int(1), &int(0)).unwrap();
    for xi in [int(1), q(-3, 4), q(5, 2)] {
        let w = omega_form(&l10, "omega_RE", &p(&[("xi", vec![xi.clone()])])).unwrap();
        if !cocycle_check(&w, &l10).unwrap().pass {
            bad.push(format!("ω_RE not a cocycle at ξ = {xi}"));
        }
    }
    Outcome::new(bad, "det ω_JB ≠ 0 (N = 3..7); ω_RB(0) = ω_B; ω_RE closed".into())
}

fn criterion_12() -> Outcome {
    let mut bad = Vec::new();
    for n in [6, 7] {
        let g = sl(n);
        let rep = defining(&g);
        let psi = [q(3, 4), q(-2, 5), q(7, 3)];
        for k in [1, 2] {
            let r = matreshka(&g, &rep, k, &psi).unwrap();
            if !r.pass {
                bad.push(format!("{} {:?}", r.check, r.notes));
            }
        }
    }
    Outcome::new(bad, "N = 6, 7; k = 1, 2".into())
}

fn criterion_13() -> Outcome {
    let mut bad = Vec::new();
    for n in [4, 5, 7] {
        let g = sl(n);
        let rep = defining(&g);
        let (h, z) = halves(n);
        for pt in parameter_points(z, h - 1, SEED + 13) {
            let (nu, rho) = psi_zeta_to_nu_rho(&pt.psi, &pt.zeta).unwrap();
            let a = ChainSpec::enlarged_jordanian(n, &pt.psi, &pt.zeta).build(&g, &int(1)).unwrap();
            let b = ChainSpec::enlarged_jordanian_nu_rho(n, &nu, &rho).build(&g, &int(1)).unwrap();
            let d = a.eval(&rep).unwrap().residual_support(&b.eval(&rep).unwrap());
            if d != 0 {
                bad.push(format!("sl({n}) at {}: residual {d}", pt.name));
            }
        }
    }
    Outcome::new(bad, "N = 4, 5, 7 at 3 points each".into())
}

/// Recorded, not a criterion: chains with a switched-off extension (κ = 0)
/// and the substitute Jordanian factor.
fn kappa_zero_probe() -> String {
    let mut lines = Vec::new();
    for (n, kappa) in [(4, vec![true, false]), (5, vec![true, false]), (6, vec![false, true, true])] {
        let g = sl(n);
        let rep = defining(&g);
        let (h, z) = halves(n);
        let psi: Vec<Rational> = (1..=z).map(|i| q(i as i64 + 1, 2)).collect();
        let zeta: Vec<Rational> = (1..h).map(|i| q(3, i as i64 + 1)).collect();
        for sub in [false, true] {
            let spec = ChainSpec::enlarged_jordanian(n, &psi, &zeta).with_kappa(&kappa).with_substitution(sub);
            let outcome = match spec.build(&g, &int(1)).and_then(|f| check_drinfeld("k0", &f, &rep)) {
                Ok(r) => format!("residual {}", r.residual_support),
                Err(e) => format!("error: {e}"),
            };
            lines.push(format!("sl({n}) κ={kappa:?} substitute={sub}: {outcome}"));
        }
    }
    lines.join("\n  ")
}

// runs without the libtest harness so the criterion lines are never captured
fn main() -> std::process::ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("Drinfeld equation for every construction", || hopf_criteria(1)),
        ("counit conditions on both legs", || hopf_criteria(2)),
        ("QYBE for every derived R-matrix", || hopf_criteria(3)),
        ("coproduct tables", criterion_4),
        ("link factorization and chain rearrangement", criterion_5),
        ("carrier dimensions", criterion_6),
        ("second cohomology of the 4-dim carriers", criterion_7),
        ("semiclassical limits equal the printed r-matrices", criterion_8),
        ("CYBE for every r-matrix family", criterion_9),
        ("φ and the rewriting identities", criterion_10),
        ("ω-forms", criterion_11),
        ("matreshka property", criterion_12),
        ("ψ/ζ and ν/ρ parameterizations agree", criterion_13),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = std::time::Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {tag} — {name} ({}) [{:.1?}]", i + 1, o.detail, t.elapsed());
        if !o.pass {
            failed.push(i + 1);
        }
    }
    println!("note: κ = 0 probe\n  {}", kappa_zero_probe());
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
