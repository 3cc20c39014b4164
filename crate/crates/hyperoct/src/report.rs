//! Machine-readable verification reports. Every CLI subcommand is a thin
//! wrapper over one of the `run_*` functions here, which makes the reports
//! directly reusable from tests and examples.
//!
//! Reports serialize deterministically: map keys are sorted, rationals are
//! `"num/den"` strings, polynomials are monomial lists sorted by
//! `(e_qp, e_qm)`. The `timing_ms` field is the only nondeterministic part
//! and golden comparisons strip it.

use crate::chars::{self, Classification, ClassificationA};
use crate::group::{cycle_type, Convention, CycleType, SignedPermutation};
use crate::moments;
use crate::pairpart;
use crate::partition::Partition;
use crate::poly::BivarPoly;
use crate::scalar::format_rational;
use crate::schur_weyl::{self, RepConfig};
use crate::type_d;
use num::rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum ReportError {
    #[error("request exceeds the budget: {0} (cap {1}); raise it with --budget or HYPEROCT_BUDGET")]
    BudgetExceeded(String, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Size cap applied to the driving parameter of each subcommand.
#[derive(Clone, Copy, Debug)]
#[derive(Default)]
pub struct Budget {
    pub override_cap: Option<usize>,
}

impl Budget {
    pub fn new(override_cap: Option<usize>) -> Self {
        Budget { override_cap }
    }

    /// Env override, then the explicit flag, then the per-command default.
    pub fn cap(&self, default_cap: usize) -> usize {
        if let Some(c) = self.override_cap {
            return c;
        }
        std::env::var("HYPEROCT_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(default_cap)
    }

    pub fn check(&self, what: &str, value: usize, default_cap: usize) -> Result<(), ReportError> {
        let cap = self.cap(default_cap);
        if value > cap {
            return Err(ReportError::BudgetExceeded(
                format!("{what} = {value}"),
                cap,
            ));
        }
        Ok(())
    }
}


#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub evidence: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub results: Vec<CheckResult>,
    pub timing_ms: u128,
}

impl Report {
    fn new(command: &str, parameters: Value) -> Self {
        Report {
            command: command.to_string(),
            parameters,
            results: Vec::new(),
            timing_ms: 0,
        }
    }

    fn check(&mut self, name: &str, ok: bool, evidence: Value) {
        self.results.push(CheckResult {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            evidence,
        });
    }

    fn info(&mut self, name: &str, evidence: Value) {
        self.results.push(CheckResult {
            name: name.to_string(),
            status: Status::Pass,
            evidence,
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports are serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("reports are serializable")
    }

    /// Human-readable rendering for terminal use.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.parameters);
        for r in &self.results {
            let mark = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out.push_str(&format!("  [{mark}] {}: {}\n", r.name, r.evidence));
        }
        out.push_str(&format!(
            "{}: {}\n",
            if self.passed() { "ok" } else { "failed" },
            self.results.len()
        ));
        out
    }
}

pub fn rational_json(q: &BigRational) -> Value {
    Value::String(format_rational(q))
}

/// Monomial list `{e_qp, e_qm, num, den}` sorted by `(e_qp, e_qm)`.
pub fn poly_json(p: &BivarPoly) -> Value {
    let monomials: Vec<Value> = p
        .terms()
        .map(|(&(a, b), c)| {
            json!({
                "e_qp": a,
                "e_qm": b,
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    Value::Array(monomials)
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cycle_type_json(t: &CycleType) -> Value {
    json!({
        "rho_plus": partition_json(&t.rho_plus),
        "rho_minus": partition_json(&t.rho_minus),
    })
}

fn classification_json(c: &Classification) -> Value {
    match c {
        Classification::Extreme { m, n, eps } => json!({
            "kind": "extreme", "m": m, "n": n, "eps": eps,
        }),
        Classification::Degenerate { q_minus } => json!({
            "kind": "degenerate", "q_minus": format_rational(q_minus),
        }),
        Classification::NotPd { witness } => json!({
            "kind": "not_pd",
            "witness": witness.as_ref().map(|(a, b)| json!({
                "lambda_plus": partition_json(a),
                "lambda_minus": partition_json(b),
            })),
        }),
    }
}

/// `phi`: cycle data and the signed reflection function of one element or
/// class.
pub fn run_phi(
    word: Option<Vec<i32>>,
    rho_plus: Option<Vec<usize>>,
    rho_minus: Option<Vec<usize>>,
    qp: Option<BigRational>,
    qm: Option<BigRational>,
) -> Result<Report, ReportError> {
    let t = match (&word, &rho_plus, &rho_minus) {
        (Some(w), None, None) => {
            let s = SignedPermutation::from_word(w.clone())
                .map_err(|e| ReportError::InvalidInput(e.to_string()))?;
            cycle_type(&s, Convention::Reduced)
        }
        (None, rp, rm) => CycleType::new(
            Partition::new(rp.clone().unwrap_or_default()),
            Partition::new(rm.clone().unwrap_or_default()),
        )
        .reduced(),
        _ => {
            return Err(ReportError::InvalidInput(
                "give either --word or --rho-plus/--rho-minus".into(),
            ))
        }
    };
    let mut report = Report::new(
        "phi",
        json!({
            "word": word,
            "rho_plus": t.rho_plus.parts(),
            "rho_minus": t.rho_minus.parts(),
        }),
    );
    let phi = t.phi(&BivarPoly::qp(), &BivarPoly::qm());
    let mut evidence = json!({
        "cycle_type": cycle_type_json(&t),
        "long_reflections": t.long_exponent(),
        "short_reflections": t.short_exponent(),
        "phi": poly_json(&phi),
    });
    if let (Some(qp), Some(qm)) = (qp, qm) {
        evidence["value"] = rational_json(&phi.eval(&qp, &qm));
        evidence["q_plus"] = rational_json(&qp);
        evidence["q_minus"] = rational_json(&qm);
    }
    report.info("phi", evidence);
    Ok(report)
}

/// `classify`: positive-definiteness verdict for `(q+, q-)`.
pub fn run_classify(qp: &BigRational, qm: &BigRational) -> Report {
    let mut report = Report::new(
        "classify",
        json!({ "q_plus": format_rational(qp), "q_minus": format_rational(qm) }),
    );
    let verdict = chars::classify(qp, qm);
    report.info("classification", classification_json(&verdict));
    report
}

/// `classify-a`: the symmetric-group analogue.
pub fn run_classify_a(q: &BigRational) -> Report {
    let mut report = Report::new("classify-a", json!({ "q": format_rational(q) }));
    let verdict = chars::classify_a(q);
    let evidence = match &verdict {
        ClassificationA::Pd { inv } => json!({ "kind": "pd", "inverse": inv }),
        ClassificationA::NotPd { witness } => json!({
            "kind": "not_pd",
            "witness": witness.as_ref().map(partition_json),
        }),
    };
    report.info("classification", evidence);
    report
}

/// `expand`: verifies the character expansion of phi on every class of rank
/// `n`.
pub fn run_expand(n: usize, budget: &Budget) -> Result<Report, ReportError> {
    budget.check("n", n, 4)?;
    let mut report = Report::new("expand", json!({ "n": n }));
    let failures = chars::rozklad_failures(n);
    for rho in CycleType::all_padded(n) {
        let ok = !failures.contains(&rho);
        report.check(
            &format!("class {rho}"),
            ok,
            json!({ "phi": poly_json(&rho.phi(&BivarPoly::qp(), &BivarPoly::qm())) }),
        );
    }
    Ok(report)
}

/// `chartable`: the character table of rank `n` with orthogonality checks.
pub fn run_chartable(n: usize, budget: &Budget) -> Result<Report, ReportError> {
    budget.check("n", n, 5)?;
    let classes = CycleType::all_padded(n);
    let irreps = crate::partition::partition_pairs_of_total(n);
    let mut report = Report::new("chartable", json!({ "n": n }));
    let table: Vec<Value> = irreps
        .iter()
        .map(|(lp, lm)| {
            let values: Vec<i64> = classes
                .iter()
                .map(|rho| chars::char_b((lp, lm), rho).unwrap())
                .collect();
            json!({
                "lambda_plus": partition_json(lp),
                "lambda_minus": partition_json(lm),
                "values": values,
            })
        })
        .collect();
    report.info(
        "table",
        json!({
            "classes": classes.iter().map(cycle_type_json).collect::<Vec<_>>(),
            "class_sizes": classes
                .iter()
                .map(|t| t.class_size(n).to_string())
                .collect::<Vec<_>>(),
            "irreps": table,
        }),
    );

    // Burnside and column orthogonality
    let id = CycleType::new(Partition::new(vec![1; n]), Partition::empty());
    let burnside: u64 = irreps
        .iter()
        .map(|(a, b)| {
            let d = chars::char_b((a, b), &id).unwrap();
            (d * d) as u64
        })
        .sum();
    let order: u64 = (1..=n as u64).map(|i| 2 * i).product();
    report.check(
        "burnside",
        burnside == order,
        json!({ "sum_of_squared_dims": burnside, "group_order": order }),
    );
    let mut orth_ok = true;
    for r1 in &classes {
        for r2 in &classes {
            let s: i64 = irreps
                .iter()
                .map(|(a, b)| {
                    chars::char_b((a, b), r1).unwrap() * chars::char_b((a, b), r2).unwrap()
                })
                .sum();
            let expected = if r1 == r2 {
                use num::ToPrimitive;
                (crate::group::group_order(n) / r1.class_size(n))
                    .to_i64()
                    .unwrap()
            } else {
                0
            };
            orth_ok &= s == expected;
        }
    }
    report.check("column_orthogonality", orth_ok, json!({}));
    Ok(report)
}

/// `gram`: exact PSD verdict of the Gram matrix of phi over `B(n)`.
pub fn run_gram(
    n: usize,
    qp: &BigRational,
    qm: &BigRational,
    budget: &Budget,
) -> Result<Report, ReportError> {
    budget.check("n", n, 3)?;
    let mut report = Report::new(
        "gram",
        json!({
            "n": n,
            "q_plus": format_rational(qp),
            "q_minus": format_rational(qm),
        }),
    );
    let psd = chars::gram_psd(n, qp, qm);
    let dim: u64 = (1..=n as u64).map(|i| 2 * i).product();
    report.check(
        "psd",
        psd,
        json!({
            "psd": psd,
            "matrix_dim": dim,
            "min_negative_level": chars::min_negative_level(qp, qm, 8),
        }),
    );
    Ok(report)
}

/// `factorize`: either the group-algebra identity at rank `n`, or the minimal
/// non-mixing factorization of one element.
pub fn run_factorize(
    n: Option<usize>,
    word: Option<Vec<i32>>,
    budget: &Budget,
) -> Result<Report, ReportError> {
    match (n, word) {
        (Some(n), None) => {
            budget.check("n", n, 4)?;
            let mut report = Report::new("factorize", json!({ "n": n }));
            let (lhs, rhs) = crate::group_algebra::factorization_sides(n);
            report.check(
                "identity",
                lhs.equals(&rhs),
                json!({
                    "lhs_support": lhs.support_size(),
                    "rhs_support": rhs.support_size(),
                }),
            );
            Ok(report)
        }
        (None, Some(w)) => {
            let s = SignedPermutation::from_word(w.clone())
                .map_err(|e| ReportError::InvalidInput(e.to_string()))?;
            budget.check("rank", s.rank(), 16)?;
            let mut report = Report::new("factorize", json!({ "word": w }));
            let refls = crate::group::minimal_nonmixing_factorization(&s);
            let product = refls
                .iter()
                .fold(SignedPermutation::identity(s.rank()), |acc, r| {
                    acc.compose(&r.to_perm(s.rank())).unwrap()
                });
            let longs = refls.iter().filter(|r| r.is_long()).count();
            let (lp, lm) = crate::group::reflection_lengths(&s);
            let listing: Vec<Value> = refls
                .iter()
                .map(|r| match r {
                    crate::group::Reflection::Long(a, b) => json!({"long": [a, b]}),
                    crate::group::Reflection::Short(i) => json!({"short": i}),
                })
                .collect();
            report.check(
                "product_equals_input",
                product == s,
                json!({ "reflections": listing }),
            );
            report.check(
                "counts_match_formula",
                longs == lp && refls.len() - longs == lm,
                json!({
                    "long": longs,
                    "short": refls.len() - longs,
                    "expected_long": lp,
                    "expected_short": lm,
                }),
            );
            Ok(report)
        }
        _ => Err(ReportError::InvalidInput(
            "give exactly one of --n or --word".into(),
        )),
    }
}

/// `schur-weyl`: homomorphism and character checks for one configuration.
pub fn run_schur_weyl(
    m: usize,
    n_minus: usize,
    eps: i8,
    rank: usize,
    seed: u64,
    budget: &Budget,
) -> Result<Report, ReportError> {
    if m + n_minus == 0 {
        return Err(ReportError::InvalidInput("M + N must be positive".into()));
    }
    let cfg = RepConfig::new(m, n_minus, eps, rank);
    budget.check("dimension", cfg.dim(), 4096)?;
    let mut report = Report::new(
        "schur-weyl",
        json!({ "m": m, "n": n_minus, "eps": eps, "rank": rank, "seed": seed }),
    );
    let hom = schur_weyl::verify_homomorphism(&cfg, 100, seed)
        .map_err(|e| ReportError::InvalidInput(e.to_string()))?;
    report.check("homomorphism", hom, json!({ "random_pairs": 100 }));
    let chr = schur_weyl::verify_character(&cfg)
        .map_err(|e| ReportError::InvalidInput(e.to_string()))?;
    report.check(
        "character",
        chr,
        json!({
            "dimension": cfg.dim(),
            "q_plus": format_rational(&cfg.q_plus()),
            "q_minus": format_rational(&cfg.q_minus()),
        }),
    );
    Ok(report)
}

/// `hirai`: the extreme-character evaluator against phi on all classes.
pub fn run_hirai(rank: usize, budget: &Budget) -> Result<Report, ReportError> {
    budget.check("rank", rank, 5)?;
    let mut report = Report::new("hirai", json!({ "rank": rank }));
    for (m, n) in [(1u64, 1u64), (2, 1), (1, 2), (3, 2)] {
        for eps in [1i8, -1] {
            let ok = chars::hirai_matches_phi(m, n, eps, rank);
            report.check(
                &format!("flat M={m} N={n} eps={eps}"),
                ok,
                json!({}),
            );
        }
    }
    for kappa in [
        crate::scalar::rat(0, 1),
        crate::scalar::rat(1, 2),
        crate::scalar::rat(-1, 2),
    ] {
        let ok = chars::hirai_kappa_matches_phi(&kappa, rank);
        report.check(
            &format!("kappa={}", format_rational(&kappa)),
            ok,
            json!({}),
        );
    }
    Ok(report)
}

/// `pairpart`: enumeration with statistics and hat verification.
pub fn run_pairpart(
    n: usize,
    perfect: bool,
    list_limit: usize,
    budget: &Budget,
) -> Result<Report, ReportError> {
    budget.check("n", n, 10)?;
    let mut report = Report::new("pairpart", json!({ "n": n, "perfect": perfect }));
    let mut count = 0usize;
    let mut listed = Vec::new();
    let mut hat_ok = true;
    pairpart::visit_partitions(n, perfect, None, &mut |p| {
        count += 1;
        let h = pairpart::hat(p);
        hat_ok &= h.is_noncrossing();
        let st = pairpart::stats(p);
        if listed.len() < list_limit {
            listed.push(json!({
                "blocks": p.to_json(),
                "hat": json!(h.pairs().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()),
                "c": st.c,
                "c_minus": st.c_minus,
                "l_c": st.l_c,
                "l_sc": st.l_sc,
            }));
        }
    });
    report.info("count", json!({ "count": count }));
    if perfect && n.is_multiple_of(2) {
        let k = n / 2;
        let expected = num::bigint::BigInt::from(1u64 << k)
            * crate::scalar::double_factorial_odd(k);
        report.check(
            "count_formula",
            expected == num::bigint::BigInt::from(count),
            json!({ "expected": expected.to_string() }),
        );
    }
    report.check("hat_noncrossing", hat_ok, json!({}));
    report.info("partitions", Value::Array(listed));
    Ok(report)
}

/// `fock-verify`: commutation relation, adjoint identity, symmetrizer
/// decomposition, word formula and exclusion principle.
pub fn run_fock_verify(d: usize, max_level: usize, budget: &Budget) -> Result<Report, ReportError> {
    budget.check("max_level", max_level, 3)?;
    budget.check("d", d, 2)?;
    let mut report = Report::new("fock-verify", json!({ "d": d, "max_level": max_level }));
    report.check(
        "commutation_relation",
        crate::fock::commutation_check(d, max_level),
        json!({ "symbolic": true }),
    );
    report.check("adjoint_identity", crate::fock::adjoint_check(d, 2), json!({}));
    let mut decomp_ok = true;
    for level in 1..=max_level {
        decomp_ok &= crate::fock::symmetrizer_decomposition_check(d, level);
    }
    report.check("symmetrizer_decomposition", decomp_ok, json!({}));

    let [a, b, c, e] = crate::fock::generic_vectors(d);
    let pairs = [(a, b.clone()), (b, c.clone()), (c, e.clone()), (e.clone(), e)];
    let mut words_ok = true;
    for len in 1..=4usize {
        for mask in 0u32..(1 << len) {
            let eps: Vec<pairpart::Eps> = (0..len)
                .map(|i| {
                    if mask >> i & 1 == 0 {
                        pairpart::Eps::Star
                    } else {
                        pairpart::Eps::One
                    }
                })
                .collect();
            let lhs: crate::fock::FockVector<BivarPoly> = crate::fock::apply_word(
                &eps,
                &pairs[..len],
                d,
                &BivarPoly::qp(),
                &BivarPoly::qm(),
            );
            let rhs = crate::fock::combinatorial_word(
                &eps,
                &pairs[..len],
                d,
                &BivarPoly::qp(),
                &BivarPoly::qm(),
            );
            words_ok &= lhs == rhs;
        }
    }
    report.check("word_formula", words_ok, json!({ "max_word_length": 4 }));

    for (m, n) in [(1u64, 1u64), (2, 1)] {
        let norms = crate::fock::exclusion_norms(m, n);
        report.check(
            &format!("exclusion M={m} N={n}"),
            crate::fock::exclusion_holds(m, n),
            json!({
                "norms": norms.iter().map(format_rational).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(report)
}

/// `moments`: the five-route cross check, with optional classical
/// specializations.
pub fn run_moments(
    two_n_max: usize,
    with_specializations: bool,
    budget: &Budget,
) -> Result<Report, ReportError> {
    budget.check("two_n_max", two_n_max, 10)?;
    let mut report = Report::new(
        "moments",
        json!({ "two_n_max": two_n_max, "specializations": with_specializations }),
    );
    report.info(
        "recurrence",
        json!({
            "lambda": "1 + 2(k-1) q+ + q-",
            "hermite_form": "2 q+ (k + c) with c = (1+q-)/(2 q+) - 1, for q+ != 0",
            "dilation": "sqrt(2 q+), kept symbolic",
        }),
    );
    for row in moments::cross_check(two_n_max) {
        report.check(
            &format!("order {}", row.order),
            row.all_equal(),
            json!({
                "moment": poly_json(&row.jacobi),
                "first_difference": row.first_diff,
            }),
        );
    }
    if with_specializations {
        for row in moments::specializations(two_n_max / 2) {
            report.check(
                &format!("specializations n={}", row.n),
                row.all_ok(),
                json!({
                    "catalan_dilation": row.catalan_dilation_ok,
                    "at_x2_y2": row.at_x2_y2.to_string(),
                    "expected_x2_y2": row.expected_x2_y2.to_string(),
                    "at_x2_y0": row.at_x2_y0.to_string(),
                    "expected_x2_y0": row.expected_x2_y0.to_string(),
                    "total_count": row.total_count.to_string(),
                    "expected_total": row.expected_total.to_string(),
                    "drake": row.drake_ok,
                }),
            );
        }
    }
    Ok(report)
}

/// CSV rows for the moment polynomials: `order,e_qp,e_qm,num,den`.
pub fn moments_csv(two_n_max: usize) -> String {
    let mut out = String::from("order,e_qp,e_qm,num,den\n");
    for row in moments::cross_check(two_n_max) {
        for (&(a, b), c) in row.jacobi.terms() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.order,
                a,
                b,
                c.numer(),
                c.denom()
            ));
        }
    }
    out
}

/// CSV rows for the specialization table.
pub fn specializations_csv(n_max: usize) -> String {
    let mut out = String::from("n,check,expected,actual,status\n");
    for row in moments::specializations(n_max) {
        let mut push = |check: &str, expected: String, actual: String, ok: bool| {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.n,
                check,
                expected,
                actual,
                if ok { "pass" } else { "fail" }
            ));
        };
        push(
            "catalan_dilation",
            "exact".into(),
            if row.catalan_dilation_ok { "exact" } else { "mismatch" }.into(),
            row.catalan_dilation_ok,
        );
        push(
            "x2_y2",
            row.expected_x2_y2.to_string(),
            row.at_x2_y2.to_string(),
            row.at_x2_y2 == row.expected_x2_y2,
        );
        push(
            "x2_y0",
            row.expected_x2_y0.to_string(),
            row.at_x2_y0.to_string(),
            row.at_x2_y0 == row.expected_x2_y0,
        );
        push(
            "total_count",
            row.expected_total.to_string(),
            row.total_count.to_string(),
            row.total_count == row.expected_total,
        );
        push(
            "drake",
            "equidistributed".into(),
            if row.drake_ok { "equidistributed" } else { "mismatch" }.into(),
            row.drake_ok,
        );
    }
    out
}

/// `typed`: class splitting and the restricted classification.
pub fn run_typed(n: usize, q: &BigRational, budget: &Budget) -> Result<Report, ReportError> {
    budget.check("n", n, 5)?;
    let mut report = Report::new(
        "typed",
        json!({ "n": n, "q": format_rational(q) }),
    );
    let classes = type_d::classes_d(n);
    let listing: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "label": cycle_type_json(&c.label),
                "split": c.split,
                "size": c.size,
            })
        })
        .collect();
    let mut split_ok = true;
    let mut seen: std::collections::BTreeMap<CycleType, usize> = Default::default();
    for c in &classes {
        *seen.entry(c.label.clone()).or_default() += 1;
    }
    for (label, count) in seen {
        let expected = if type_d::label_splits(&label) { 2 } else { 1 };
        split_ok &= count == expected;
    }
    report.check("split_detection", split_ok, json!({ "classes": listing }));

    let verdict = type_d::classify_d(q);
    let evidence = match &verdict {
        type_d::ClassificationD::Pd { odd_inverse } => {
            json!({ "kind": "pd", "odd_inverse": odd_inverse })
        }
        type_d::ClassificationD::NotPd { witness } => json!({
            "kind": "not_pd",
            "witness": witness.as_ref().map(|(a, b)| json!({
                "lambda": partition_json(a),
                "mu": partition_json(b),
            })),
        }),
    };
    report.info("classification", evidence);
    report.check(
        "scan_agreement",
        type_d::classify_d_agrees_with_scan(q, 8),
        json!({ "scan_bound": 8 }),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn classify_report_shape() {
        let r = run_classify(&rat(1, 3), &rat(1, 3));
        assert!(r.passed());
        let v = r.to_json();
        assert_eq!(v["command"], "classify");
        assert_eq!(v["results"][0]["evidence"]["kind"], "extreme");
        assert_eq!(v["results"][0]["evidence"]["m"], 2);
        assert_eq!(v["results"][0]["evidence"]["n"], 1);
    }

    #[test]
    fn gram_fail_exit_semantics() {
        let r = run_gram(3, &rat(1, 3), &rat(0, 1), &Budget::default()).unwrap();
        assert!(!r.passed());
        let r = run_gram(2, &rat(1, 2), &rat(0, 1), &Budget::default()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn budget_rejects_oversize() {
        let err = run_gram(5, &rat(0, 1), &rat(0, 1), &Budget::default());
        assert!(err.is_err());
        let ok = run_gram(4, &rat(1, 2), &rat(0, 1), &Budget::new(Some(4)));
        assert!(ok.is_ok());
    }

    #[test]
    fn phi_report_from_word() {
        let r = run_phi(
            Some(vec![-2, -4, -5, 1, 3, 6]),
            None,
            None,
            Some(rat(1, 3)),
            Some(rat(1, 3)),
        )
        .unwrap();
        let v = r.to_json();
        let ev = &v["results"][0]["evidence"];
        assert_eq!(ev["long_reflections"], 3);
        assert_eq!(ev["short_reflections"], 1);
        // q+^3 q-^1 at (1/3, 1/3) = 1/81
        assert_eq!(ev["value"], "1/81");
    }

    #[test]
    fn deterministic_serialization() {
        let a = run_classify(&rat(1, 3), &rat(1, 3)).to_json_pretty();
        let b = run_classify(&rat(1, 3), &rat(1, 3)).to_json_pretty();
        assert_eq!(a, b);
    }

    #[test]
    fn moments_csv_shape() {
        let csv = moments_csv(2);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("order,e_qp,e_qm,num,den"));
        assert_eq!(lines.next(), Some("2,0,0,1,1"));
        assert_eq!(lines.next(), Some("2,0,1,1,1"));
    }
}
