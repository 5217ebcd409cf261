//! Named verification suites and their machine-readable records.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{straighten, IntegerVector, Partition, StraightenResult};
use crate::error::{Error, Result};
use crate::families::{
    b_lambda, det, eval_generators, family_r_table, family_table, hl_p, pfaffian, schur_bialternant, schur_e, schur_h,
    schurq, EvalKind, FamilyTag, SkewMatrix,
};
use crate::fock::{check_bf, check_clifford, monomials_in_range};
use crate::operators::{check_fermion, check_normal_order, check_twisted, MixedForm};
use crate::report::{Report, MAX_FAILURES};
use crate::ring::{Element, Generator, GeneratorFamily};
use crate::scalar::{rat, ratio, Rational, Ring, Scalar};
use crate::series::Window;
use crate::shifted::{
    check_shifted, dqstar_series, drstar_series, eval_shifted, invert_shifted, lem2_check, pole_free_points, qr_product,
    qstar_multivar, rstar_multivar, shifted_schur, tau_apply, tau_iterated, to_h_presentation, twisted_det, InvUSeries,
    Presentation,
};
use crate::shifted::schur::{estar_values, hstar_values};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    JacobiTrudi,
    RConjugate,
    Pfaffian,
    SchurQCoherence,
    HallLittlewood,
    Fermion,
    Twisted,
    NormalOrder,
    ShiftedGen,
    ShiftedRelations,
    Lem2,
    QstarInverse,
    Fock,
    All,
}

impl Suite {
    pub const EACH: [Suite; 13] = [
        Suite::JacobiTrudi,
        Suite::RConjugate,
        Suite::Pfaffian,
        Suite::SchurQCoherence,
        Suite::HallLittlewood,
        Suite::Fermion,
        Suite::Twisted,
        Suite::NormalOrder,
        Suite::ShiftedGen,
        Suite::ShiftedRelations,
        Suite::Lem2,
        Suite::QstarInverse,
        Suite::Fock,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JacobiTrudi => "jacobi-trudi",
            Suite::RConjugate => "r-conjugate",
            Suite::Pfaffian => "pfaffian",
            Suite::SchurQCoherence => "schur-q-coherence",
            Suite::HallLittlewood => "hall-littlewood",
            Suite::Fermion => "fermion",
            Suite::Twisted => "twisted",
            Suite::NormalOrder => "normal-order",
            Suite::ShiftedGen => "shifted-gen",
            Suite::ShiftedRelations => "shifted-relations",
            Suite::Lem2 => "lem2",
            Suite::QstarInverse => "qstar-inverse",
            Suite::Fock => "fock",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown suite {s:?}") })
    }
}

/// Optional bounds; each suite fills in its own defaults.
#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub n: Option<u32>,
    pub w: Option<i64>,
    pub l: Option<usize>,
    pub k: Option<u32>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub suite: String,
    pub params: Value,
    pub seed: u64,
    pub instances: usize,
    pub pass: bool,
    pub failure_count: usize,
    pub failures: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<VerificationRecord>,
}

impl VerificationRecord {
    fn from_report(suite: Suite, params: Value, seed: u64, r: Report) -> Self {
        VerificationRecord {
            suite: suite.name().into(),
            params,
            seed,
            instances: r.instances,
            pass: r.passed(),
            failure_count: r.failure_count,
            failures: r.failures,
            suites: Vec::new(),
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures)",
            self.suite,
            if self.pass { "pass" } else { "FAIL" },
            self.instances,
            self.failure_count
        )
    }
}

fn suite_rng(seed: u64, suite: Suite) -> ChaCha8Rng {
    let idx = Suite::EACH.iter().position(|s| *s == suite).unwrap_or(99) as u64;
    ChaCha8Rng::seed_from_u64(seed ^ (idx.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// `n` distinct rationals with small numerators and denominators at most 7.
pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let x = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn sign_of(weight: i64) -> i64 {
    if weight.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn straightened_schur(v: &[i64]) -> Element {
    match straighten(&IntegerVector(v.to_vec())) {
        StraightenResult::Zero => Element::zero(),
        StraightenResult::Signed { sign, partition } => schur_h(&partition.to_vector()).scale_int(sign as i64),
    }
}

fn mismatch(what: &str, key: Value, lhs: &impl ToString, rhs: &impl ToString) -> Value {
    json!({"check": what, "at": key, "lhs": lhs.to_string(), "rhs": rhs.to_string()})
}

/// Table of `f = 1 - x` on the cube `[-N, N]^l` against straightened Jacobi–Trudi determinants.
pub fn jacobi_trudi(l: usize, n: u32) -> Result<Report> {
    let window = Window::cube(l, -(n as i64), n as i64, l as u32 * n)?;
    let table = family_table(FamilyTag::Schur, &window)?;
    let outcomes: Vec<Option<Value>> = window
        .vectors()
        .par_iter()
        .map(|v| {
            let got = table.get(v).expect("in window");
            let want = straightened_schur(v);
            (got != want).then(|| mismatch("extract", json!(v), &got, &want))
        })
        .collect();
    let mut r = Report::new("jacobi-trudi");
    r.extend(outcomes);
    Ok(r)
}

/// `R_λ = (-1)^{|λ|} s_{λ'}` for partitions `|λ| ≤ n` with at most `l` parts, `l' ≤ l`.
pub fn r_conjugate(l: usize, n: u32) -> Result<Report> {
    let mut r = Report::new("r-conjugate");
    for ll in 1..=l {
        let table = family_r_table(FamilyTag::Schur, &Window::full(ll, n))?;
        for lam in Partition::up_to(n, ll) {
            let mut v = lam.to_vector().0;
            v.resize(ll, 0);
            let got = table.get(&v)?;
            let want = schur_h(&lam.conjugate().to_vector()).scale_int(sign_of(lam.weight() as i64));
            r.record((got != want).then(|| mismatch("r-table", json!(v), &got, &want)));
        }
    }
    Ok(r)
}

/// `Pf(A)^2 = det(A)` on `count` random integer skew matrices of sizes 2, 4, 6.
pub fn pfaffian_squares(rng: &mut impl Rng, count: usize) -> Result<Report> {
    let mut r = Report::new("pfaffian");
    for i in 0..count {
        let size = 2 * (i % 3 + 1);
        let vals: Vec<Vec<i64>> = (0..size).map(|_| (0..size).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m = SkewMatrix::from_upper(size, |a, b| rat(vals[a][b]))?;
        let pf = pfaffian(&m);
        let d = det(m.rows());
        r.record((&pf * &pf != d).then(|| mismatch("pf^2=det", json!(vals), &(&pf * &pf), &d)));
    }
    Ok(r)
}

/// `Σ_{i+j=2m} (-1)^i Q_i Q_j = 0` at random points with `n ≤ max_n` variables, `m ≤ max_m`.
pub fn schur_q_even_relations(rng: &mut impl Rng, max_m: u32, max_n: usize) -> Report {
    let mut r = Report::new("schur-q-relations");
    for n in 1..=max_n {
        let x = random_points(rng, n);
        let q = eval_generators(EvalKind::SchurQ, &x, None, 2 * max_m);
        for m in 1..=max_m as usize {
            let mut acc = Scalar::default();
            for i in 0..=2 * m {
                let term = &q[i] * &q[2 * m - i];
                acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            r.record((!Ring::is_zero(&acc)).then(|| mismatch("QQ(-u)=1", json!({"n": n, "m": m}), &acc, &0)));
        }
    }
    r
}

/// `schurq(λ)` equals the Schur-Q table coefficient for strict `|λ| ≤ n`.
pub fn schur_q_coherence(n: u32) -> Result<Report> {
    let strict = Partition::strict_up_to(n);
    let l = strict.iter().map(|p| p.len()).max().unwrap_or(1).max(1);
    let table = family_table(FamilyTag::SchurQ, &Window::full(l, n))?;
    let mut r = Report::new("schur-q-coherence");
    for lam in strict {
        let mut v = lam.to_vector().0;
        v.resize(l, 0);
        let got = table.get(&v)?;
        let want = schurq(&lam)?;
        r.record((got != want).then(|| mismatch("schurq", json!(v), &got, &want)));
    }
    Ok(r)
}

/// Hall–Littlewood table specializations, and `b_λ P_λ` against table coefficients at random `(x, t)`.
pub fn hall_littlewood(rng: &mut impl Rng, l: usize, n: u32, samples: usize, oracle_n: u32) -> Result<Report> {
    let mut r = Report::new("hall-littlewood");
    let w = Window::full(l, n);
    let hl = family_table(FamilyTag::HallLittlewood, &w)?;
    let schur = family_table(FamilyTag::Schur, &w)?;
    let sq = family_table(FamilyTag::SchurQ, &w)?;
    let to_h = |e: &Element| {
        e.substitute(&|g: Generator| (g.family == GeneratorFamily::Q).then(|| Element::h(g.index as i64)))
    };
    for v in w.vectors() {
        let h = hl.get(&v)?;
        let at0 = to_h(&h.specialize_t(&rat(0)));
        let s = schur.get(&v)?;
        r.record((at0 != s).then(|| mismatch("t=0", json!(v), &at0, &s)));
        let at1 = h.specialize_t(&rat(-1));
        let q = sq.get(&v)?;
        r.record((at1 != q).then(|| mismatch("t=-1", json!(v), &at1, &q)));
    }
    // oracle side: all partitions |λ| ≤ oracle_n, read from a table wide enough for every length
    let ol = oracle_n.max(1) as usize;
    let ow = Window::new(vec![0; ol], vec![oracle_n as i64; ol], oracle_n)?;
    let table = family_table(FamilyTag::HallLittlewood, &ow)?;
    let nvars = 5;
    for lam in Partition::up_to(oracle_n, ol) {
        let mut v = lam.to_vector().0;
        v.resize(ol, 0);
        let coeff = table.get(&v)?;
        let mut done = 0;
        while done < samples {
            let x = random_points(rng, nvars);
            let t = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7));
            let oracle = match hl_p(&lam, &x, &t) {
                Ok(p) => p * b_lambda(&lam).eval_t(&t),
                Err(Error::Pole(_)) => continue,
                Err(e) => return Err(e),
            };
            let gens = eval_generators(EvalKind::HallLittlewood, &x, Some(&t), oracle_n);
            let got = coeff.eval(&|g| (g.family == GeneratorFamily::Q).then(|| gens[g.index as usize].clone()))?.eval_t(&t);
            r.record((got != oracle).then(|| mismatch("b*P", json!({"lambda": lam.to_string(), "x": x.iter().map(|a| a.to_string()).collect::<Vec<_>>(), "t": t.to_string()}), &got, &oracle)));
            done += 1;
        }
    }
    Ok(r)
}

/// `eval(schur_h) = eval(schur_e) = bialternant` for `|λ| ≤ n` at one random point of `ℚ^vars`.
pub fn oracle_triangle(rng: &mut impl Rng, n: u32, vars: usize) -> Result<Report> {
    let x = random_points(rng, vars);
    let gens = crate::families::GeneratorValues::classical(&x, n);
    let mut r = Report::new("oracle-triangle");
    for lam in Partition::up_to(n, usize::MAX) {
        let b = Scalar::from(schur_bialternant(&lam, &x)?);
        let h = crate::families::eval_element(&schur_h(&lam.to_vector()), &gens)?;
        let e = crate::families::eval_element(&schur_e(&lam), &gens)?;
        r.record((h != b).then(|| mismatch("h-form", json!(lam.to_string()), &h, &b)));
        r.record((e != b).then(|| mismatch("e-form", json!(lam.to_string()), &e, &b)));
    }
    Ok(r)
}

/// Shifted Schur generating functions: `Q*` table against `s*_α`, `R*` table against `±s*_{λ'}`.
pub fn shifted_gen(l: usize, n: u32) -> Result<Report> {
    let w = Window::full(l, n);
    let q = qstar_multivar(&w)?;
    let rt = rstar_multivar(&w)?;
    let outcomes: Vec<Vec<Option<Value>>> = w
        .vectors()
        .par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let got = q.get(v).expect("in window");
            let want = shifted_schur(&IntegerVector(v.clone()), Presentation::H);
            out.push((got != want).then(|| mismatch("Q*", json!(v), &got, &want)));
            let s = sign_of(v.iter().sum());
            let got = rt.get(v).expect("in window");
            let want = twisted_det(v, Presentation::E).scale_int(s);
            out.push((got != want).then(|| mismatch("R*", json!(v), &got, &want)));
            if v.windows(2).all(|p| p[0] >= p[1]) && v.last().is_none_or(|&x| x >= 0) {
                let lam = Partition::new(v.iter().map(|&x| x as u32).collect()).expect("partition");
                let got = to_h_presentation(&got);
                let want = shifted_schur(&lam.conjugate().to_vector(), Presentation::H).scale_int(s);
                out.push((got != want).then(|| mismatch("R* conjugate", json!(v), &got, &want)));
            }
            out
        })
        .collect();
    let mut r = Report::new("shifted-gen");
    r.extend(outcomes.into_iter().flatten());
    Ok(r)
}

/// `τ^a` by the binomial formula against `a`-fold single steps, `a ≤ max_a`, `k ≤ max_k`.
pub fn tau_consistency(max_a: i64, max_k: i64) -> Report {
    let mut r = Report::new("tau");
    for a in 1..=max_a {
        for k in 1..=max_k {
            for (x, s) in [(Element::hs(k), a), (Element::es(k), -a)] {
                let (f, it) = (tau_apply(s, &x), tau_iterated(s, &x));
                r.record((f != it).then(|| mismatch("tau", json!({"a": s, "x": x.to_string()}), &f, &it)));
            }
        }
    }
    r
}

/// `DR*`/`DQ*` generator rules and the two-generator expansion.
pub fn star_derivation_rules(max_k: i64) -> Result<Report> {
    let mut r = Report::new("star-derivations");
    let hs = Element::hs;
    let es = Element::es;
    for k in 1..=max_k {
        let want_r = vec![&hs(k) + &hs(k - 1).scale_int(k - 2), -&hs(k - 1)];
        let want_q = vec![&es(k) + &es(k - 1).scale_int(k - 2), es(k - 1)];
        for (name, got, want) in [("DR*", drstar_series(&hs(k))?, want_r), ("DQ*", dqstar_series(&es(k))?, want_q)] {
            let mut want = want;
            while want.last().is_some_and(|e| e.is_zero()) {
                want.pop();
            }
            let mut got = got;
            while got.last().is_some_and(|e| e.is_zero()) {
                got.pop();
            }
            r.record((got != want).then(|| mismatch(name, json!(k), &format!("{got:?}"), &format!("{want:?}"))));
        }
        for b in 1..=max_k {
            let a = k;
            let d = drstar_series(&(&hs(a) * &hs(b)))?;
            let alpha = |k: i64| &hs(k) + &hs(k - 1).scale_int(k - 2);
            let d1 = -&(&(&(&hs(a) * &hs(b - 1)) + &(&hs(a - 1) * &hs(b))) + &(&hs(a - 1) * &hs(b - 1)).scale_int(a + b - 5));
            let want = [&alpha(a) * &alpha(b), d1, &hs(a - 1) * &hs(b - 1)];
            for (m, w) in want.iter().enumerate() {
                let g = d.get(m).cloned().unwrap_or_default();
                r.record((&g != w).then(|| mismatch("DR* product", json!({"a": a, "b": b, "m": m}), &g, w)));
            }
            r.record((d.len() > 3).then(|| json!({"check": "DR* product degree", "a": a, "b": b})));
        }
    }
    Ok(r)
}

/// `Q*(u)R*(u) = 1` through `u^-k` and pointwise checks of the `h*`/`e*` inversion.
pub fn qstar_inverse(rng: &mut impl Rng, k: u32, points: usize, vars: usize) -> Result<Report> {
    let mut r = Report::new("qstar-inverse");
    let p = qr_product(k);
    let one = InvUSeries::<Element>::one(-(k as i64));
    for e in -(k as i64)..=p.top().max(0) {
        let (a, b) = (p.coeff(e), one.coeff(e));
        r.record((a != b).then(|| mismatch("Q*R*", json!(e), &a, &b)));
    }
    let inv = invert_shifted(k);
    for _ in 0..points {
        let x = random_points(rng, vars);
        let (hv, ev) = (hstar_values(&x, k), estar_values(&x, k));
        for i in 1..=k as usize {
            let e_via_h = eval_shifted(&inv.e_in_h[i], &x)?;
            r.record((e_via_h != Scalar::from(ev[i].clone())).then(|| mismatch("e* in h*", json!(i), &e_via_h, &ev[i])));
            let h_via_e = eval_shifted(&inv.h_in_e[i], &x)?;
            r.record((h_via_e != Scalar::from(hv[i].clone())).then(|| mismatch("h* in e*", json!(i), &h_via_e, &hv[i])));
        }
        for lam in Partition::up_to(5, usize::MAX) {
            let a = eval_shifted(&shifted_schur(&lam.to_vector(), Presentation::H), &x)?;
            let b = eval_shifted(&shifted_schur(&lam.to_vector(), Presentation::E), &x)?;
            r.record((a != b).then(|| mismatch("s* h vs e", json!(lam.to_string()), &a, &b)));
        }
    }
    Ok(r)
}

fn merge_all(name: &str, parts: Vec<Result<Report>>) -> Result<Report> {
    let mut r = Report::new(name);
    for p in parts {
        r.merge(p?);
    }
    Ok(r)
}

/// Runs one suite (or all of them) and returns its record.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerificationRecord> {
    let seed = params.seed;
    let mut rng = suite_rng(seed, suite);
    let (p, report) = match suite {
        Suite::All => {
            let subs: Vec<VerificationRecord> = Suite::EACH
                .iter()
                .map(|&s| run_suite(s, &VerifyParams { seed, ..Default::default() }))
                .collect::<Result<_>>()?;
            let mut rec = VerificationRecord {
                suite: "all".into(),
                params: json!({}),
                seed,
                instances: subs.iter().map(|s| s.instances).sum(),
                pass: subs.iter().all(|s| s.pass),
                failure_count: subs.iter().map(|s| s.failure_count).sum(),
                failures: subs.iter().flat_map(|s| s.failures.iter().cloned()).take(MAX_FAILURES).collect(),
                suites: Vec::new(),
            };
            rec.suites = subs;
            return Ok(rec);
        }
        Suite::JacobiTrudi => {
            let (l, n) = (params.l.unwrap_or(3), params.n.unwrap_or(8));
            (json!({"l": l, "N": n}), jacobi_trudi(l, n)?)
        }
        Suite::RConjugate => {
            let (l, n) = (params.l.unwrap_or(3), params.n.unwrap_or(8));
            let triangle_n = n.min(6);
            let parts = vec![r_conjugate(l, n), oracle_triangle(&mut rng, triangle_n, 4)];
            (json!({"l": l, "N": n}), merge_all("r-conjugate", parts)?)
        }
        Suite::Pfaffian => {
            let count = params.k.unwrap_or(30) as usize;
            (json!({"matrices": count}), pfaffian_squares(&mut rng, count)?)
        }
        Suite::SchurQCoherence => {
            let n = params.n.unwrap_or(8);
            let rel = schur_q_even_relations(&mut rng, 5, 4);
            (json!({"N": n, "m": 5, "n": 4}), merge_all("schur-q-coherence", vec![schur_q_coherence(n), Ok(rel)])?)
        }
        Suite::HallLittlewood => {
            let (l, n) = (params.l.unwrap_or(2), params.n.unwrap_or(6));
            (json!({"l": l, "N": n, "samples": 5, "oracle_N": 5}), hall_littlewood(&mut rng, l, n, 5, 5)?)
        }
        Suite::Fermion => {
            let (n, w) = (params.n.unwrap_or(6), params.w.unwrap_or(3));
            (json!({"N": n, "W": w}), check_fermion(n, w, MixedForm::Staggered))
        }
        Suite::Twisted => {
            let (n, w) = (params.n.unwrap_or(5), params.w.unwrap_or(3));
            let p = [Scalar::from_int(1), -&Scalar::t()];
            (json!({"N": n, "W": w, "p": "1 - t*x"}), check_twisted(&p, n, w)?)
        }
        Suite::NormalOrder => {
            let (l, n) = (params.l.unwrap_or(2), params.n.unwrap_or(6));
            let mut parts = Vec::new();
            for tag in FamilyTag::ALL {
                for ll in 0..=l {
                    parts.push(check_normal_order(tag, ll, n));
                }
            }
            (json!({"l": l, "N": n}), merge_all("normal-order", parts)?)
        }
        Suite::ShiftedGen => {
            let (l, n) = (params.l.unwrap_or(2), params.n.unwrap_or(6));
            (json!({"l": l, "N": n}), shifted_gen(l, n)?)
        }
        Suite::ShiftedRelations => {
            let (k, w) = (params.k.or(params.n).unwrap_or(5), params.w.unwrap_or(3));
            let parts = vec![check_shifted(k, w, MixedForm::Staggered), Ok(tau_consistency(4, 8)), star_derivation_rules(6)];
            (json!({"K": k, "W": w}), merge_all("shifted-relations", parts)?)
        }
        Suite::Lem2 => {
            let (l, k) = (params.l.unwrap_or(4), params.k.unwrap_or(8));
            let mut parts = Vec::new();
            for ll in 1..=l {
                let pts = pole_free_points(&mut rng, ll, 20, (ll as u32 + k + 1) as i64);
                parts.push(lem2_check(ll, &pts));
            }
            (json!({"l": l, "K": k, "samples": 20}), merge_all("lem2", parts)?)
        }
        Suite::QstarInverse => {
            let k = params.k.unwrap_or(8);
            (json!({"K": k, "points": 5, "n": 5}), qstar_inverse(&mut rng, k, 5, 5)?)
        }
        Suite::Fock => {
            let (n, m) = (params.n.unwrap_or(6), params.l.map(|x| x as i64).unwrap_or(2));
            let monos = monomials_in_range(-6, 8, 6);
            let parts = vec![Ok(check_clifford(&monos, -6, 8)), check_bf(n, m, -4, 6)];
            (json!({"N": n, "M": m, "j": [-4, 6], "clifford_range": [-6, 8], "max_head": 6}), merge_all("fock", parts)?)
        }
    };
    Ok(VerificationRecord::from_report(suite, p, seed, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(jacobi_trudi(2, 4).unwrap().passed());
        assert!(r_conjugate(2, 5).unwrap().passed());
        assert!(pfaffian_squares(&mut rng, 6).unwrap().passed());
        assert!(schur_q_even_relations(&mut rng, 3, 3).passed());
        assert!(schur_q_coherence(6).unwrap().passed());
        assert!(oracle_triangle(&mut rng, 4, 3).unwrap().passed());
        assert!(shifted_gen(2, 3).unwrap().passed());
        assert!(tau_consistency(2, 5).passed());
        assert!(star_derivation_rules(4).unwrap().passed());
        let r = qstar_inverse(&mut rng, 6, 1, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r = hall_littlewood(&mut rng, 2, 3, 1, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn records_are_deterministic() {
        let p = VerifyParams { seed: 42, k: Some(6), ..Default::default() };
        let a = run_suite(Suite::Pfaffian, &p).unwrap();
        let b = run_suite(Suite::Pfaffian, &p).unwrap();
        assert_eq!(a, b);
        assert!(a.pass);
        assert_eq!(a.seed, 42);
    }
}
