//! One function per verb. Each returns a JSON document, a plain-text
//! summary, and whether its internal verification passed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use qgw_core::findimhopf::{self as fh, zoo, Comodule, ComoduleAlgebra, FinHopf, FinHopfDoc, Vector, YDAlgebra};
use qgw_core::ktheory::{self, AbelianGroup, IntMatrix};
use qgw_core::ncalg::{suq2, NCPoly};
use qgw_core::podles;
use qgw_core::qaut;
use qgw_core::qgroup::{self, Spin, TensorPoly};
use qgw_core::scalars::{LaurentPoly, ScalarQ};
use qgw_core::{Error, Result};

use crate::config::Settings;
use crate::expr::{parse_expression, render};

type Q = BigRational;

pub struct Report {
    pub json: Value,
    pub text: String,
    pub verified: bool,
}

fn ok(json: Value, text: String) -> Result<Report> {
    Ok(Report { json, text, verified: true })
}

fn laurent_table(p: &LaurentPoly) -> Value {
    Value::Object(p.terms().map(|(e, c)| (e.to_string(), Value::String(c.to_string()))).collect())
}

fn rational_table(r: &Q) -> (Value, Value) {
    (json!({"0": r.numer().to_string()}), json!({"0": r.denom().to_string()}))
}

fn specialize(c: &ScalarQ, q: Option<&Q>) -> Result<ScalarQ> {
    match q {
        Some(q0) => Ok(ScalarQ::from_rational(&c.eval_at(q0)?)),
        None => Ok(c.clone()),
    }
}

fn specialize_poly(p: &NCPoly, q: Option<&Q>) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w.clone(), specialize(c, q)?);
    }
    Ok(out)
}

fn int_value(n: &BigInt) -> Value {
    n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn group_json(g: &AbelianGroup) -> Value {
    json!({"rank": g.free_rank(), "torsion": g.torsion().iter().map(int_value).collect::<Vec<_>>()})
}

fn read_arg(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

/// A zoo name (`Z2`, `C(Z3)`, `sweedler`, ...) or a path to a FinHopf JSON file.
pub fn load_hopf(source: &str) -> Result<FinHopf<Q>> {
    if let Some(h) = zoo::by_name(source) {
        return Ok(h);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::Domain(format!("`{source}` is neither a zoo algebra nor a readable file: {e}")))?;
    FinHopf::from_json(&text)
}

fn parse_spin(text: &str) -> Result<Spin> {
    text.parse()
}

fn check_spin(l: Spin, s: &Settings) -> Result<()> {
    if l > s.spin {
        return Err(Error::ResourceBound(format!("spin {l} exceeds the configured bound {}", s.spin)));
    }
    Ok(())
}

pub fn normalize(expr: &str, s: &Settings) -> Result<Report> {
    let p = suq2().normalize(&parse_expression(expr)?);
    let p = specialize_poly(&p, s.q.as_ref())?;
    let names = suq2().alphabet();
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| {
            let (num, den) = match c.as_rational() {
                Some(r) if s.q.is_some() => rational_table(&r),
                _ => (laurent_table(c.numer()), laurent_table(c.denom())),
            };
            json!({"coeff": {"num": num, "den": den}, "word": names.word_names(w)})
        })
        .collect();
    let text = render(&p);
    ok(json!({"input": expr, "normal_form": text, "terms": terms}), text)
}

pub fn hopf_check(s: &Settings) -> Result<Report> {
    let degree = s.degree_or(s.hopf_degree);
    let r = qgroup::hopf_axiom_report(degree);
    let unitary = qgroup::fundamental_is_unitary();
    let passed = r.passed() && unitary;
    let text = format!(
        "{} words of length ≤ {degree}: {}; fundamental matrix unitary: {unitary}",
        r.words_checked,
        if r.passed() { "all axioms hold".to_string() } else { r.failures.join("; ") }
    );
    Ok(Report {
        json: json!({
            "degree": degree,
            "words_checked": r.words_checked,
            "failures": r.failures,
            "unitary": unitary,
            "passed": passed,
        }),
        text,
        verified: passed,
    })
}

pub fn haar(expr: &str, s: &Settings) -> Result<Report> {
    let p = suq2().normalize(&parse_expression(expr)?);
    let limit = s.degree_or(s.haar_degree);
    if p.degree() > limit {
        return Err(Error::ResourceBound(format!("degree {} exceeds the Haar degree bound {limit}", p.degree())));
    }
    let v = qgroup::haar(&p);
    let d = qgroup::comultiply(&p);
    let phi = NCPoly::scalar(v.clone());
    let left = d.map_leg(1, 0, |u| TensorPoly::scalar(qgroup::haar_on_normal_word(u))).to_poly() == phi;
    let right = d.map_leg(0, 0, |u| TensorPoly::scalar(qgroup::haar_on_normal_word(u))).to_poly() == phi;
    let mut out = Map::new();
    out.insert("num".into(), Value::String(v.numer().to_string()));
    out.insert("den".into(), Value::String(v.denom().to_string()));
    out.insert("left_invariant".into(), Value::Bool(left));
    out.insert("right_invariant".into(), Value::Bool(right));
    let mut text = v.to_string();
    if let Some(q0) = &s.q {
        let at = v.eval_at(q0)?;
        out.insert("q".into(), Value::String(q0.to_string()));
        out.insert("value".into(), Value::String(at.to_string()));
        text = format!("{text} = {at} at q = {q0}");
    }
    Ok(Report { json: Value::Object(out), text, verified: left && right })
}

pub fn corep(spin: &str, s: &Settings) -> Result<Report> {
    let l = parse_spin(spin)?;
    check_spin(l, s)?;
    let u = qgroup::build_corep_bounded(l, s.spin)?;
    let comult = u.satisfies_comultiplication();
    let counit = u.satisfies_counit();
    let mut rows = Vec::new();
    for row in &u.entries {
        let mut r = Vec::new();
        for e in row {
            r.push(render(&specialize_poly(e, s.q.as_ref())?));
        }
        rows.push(r);
    }
    let text = rows.iter().map(|r| r.join(" | ")).collect::<Vec<_>>().join("\n");
    Ok(Report {
        json: json!({"spin": l, "dim": u.dim(), "matrix": rows, "comultiplication": comult, "counit": counit}),
        text,
        verified: comult && counit,
    })
}

pub fn fuse(a: &str, b: &str, s: &Settings) -> Result<Report> {
    let (l1, l2) = (parse_spin(a)?, parse_spin(b)?);
    check_spin(l1, s)?;
    check_spin(l2, s)?;
    let f = ktheory::fusion(l1, l2);
    let mut dims = BTreeMap::new();
    let mut agree = true;
    for l3 in Spin::up_to(Spin::from_twice(l1.twice() + l2.twice())) {
        if l3 > s.spin {
            break;
        }
        let d = qgroup::intertwiner_dim_bounded(l1, l2, l3, s.spin)?;
        agree &= d == usize::from(f.contains(&l3));
        dims.insert(l3.to_string(), d);
    }
    let product = &ktheory::restriction_character(l1) * &ktheory::restriction_character(l2);
    let sum = f.iter().fold(LaurentPoly::zero(), |acc, &l| &acc + &ktheory::restriction_character(l));
    let multiplicative = product == sum;
    let text = format!(
        "{l1} ⊗ {l2} = {}",
        f.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ⊕ ")
    );
    Ok(Report {
        json: json!({
            "l1": l1,
            "l2": l2,
            "fusion": f,
            "intertwiner_dims": dims,
            "character": product.to_string_with("z"),
            "character_multiplicative": multiplicative,
            "agrees": agree,
        }),
        text,
        verified: agree && multiplicative,
    })
}

pub fn podles(k: i64, s: &Settings) -> Result<Report> {
    let profile = podles::isotypic_profile(k, s.spin)?;
    let mut out = Map::new();
    out.insert("k".into(), json!(k));
    out.insert(
        "multiplicities".into(),
        Value::Object(profile.multiplicities.iter().map(|(l, m)| (l.to_string(), json!(m))).collect()),
    );
    out.insert("tail".into(), json!(profile.tail));
    let mut verified = true;
    if k.abs() <= 1 {
        let degree = s.degree_or(3);
        let spans = podles::bundle_generators_check(k, degree)?;
        verified &= spans;
        out.insert("generators_span".into(), json!({"degree": degree, "passed": spans}));
    }
    if k.abs() == 1 {
        let p = podles::projective_idempotent(k)?;
        let proj = podles::is_projection(&p);
        verified &= proj;
        let rows: Vec<Vec<String>> = p.iter().map(|r| r.iter().map(render).collect()).collect();
        out.insert("idempotent".into(), json!({"matrix": rows, "is_projection": proj}));
    }
    Ok(Report { json: Value::Object(out), text: profile.to_string(), verified })
}

pub fn yd_check(hopf: Option<&str>, s: &Settings) -> Result<Report> {
    match hopf {
        Some(source) => {
            let h = load_hopf(source)?;
            let m = fh::adjoint_yd(&h);
            let fails = fh::yd_failures(&h, &m);
            let text = format!("adjoint module of {}: {} failures", h.name, fails.len());
            Ok(Report {
                json: json!({"hopf": h.name, "dim": h.dim(), "failures": fails, "passed": fails.is_empty()}),
                text,
                verified: fails.is_empty(),
            })
        }
        None => {
            let degree = s.degree_or(3);
            let fails = podles::yd_compatibility_failures(&podles::suq2_generators(), degree);
            let names = suq2().alphabet();
            let list: Vec<Value> = fails.iter().map(|(f, w)| json!({"f": render(f), "m": names.word_names(w)})).collect();
            let text = format!("SU_q(2) adjoint action against weight-0 words of length ≤ {degree}: {} failures", fails.len());
            Ok(Report {
                json: json!({"degree": degree, "failures": list, "passed": fails.is_empty()}),
                text,
                verified: fails.is_empty(),
            })
        }
    }
}

pub fn double(hopf: &str) -> Result<Report> {
    let h = load_hopf(hopf)?;
    let d = fh::verified_codouble(&h)?;
    let bichar = fh::verify_bicharacter(&fh::bicharacter(&h)?);
    let text = format!("{}: dimension {}, Hopf axioms and both projections verified", d.name, d.dim());
    Ok(Report {
        json: json!({"hopf": h.name, "dim": d.dim(), "bicharacter": bichar.passed(), "codouble": FinHopfDoc::from_hopf(&d)}),
        text,
        verified: bichar.passed(),
    })
}

fn dense(v: &Vector<Q>, n: usize) -> Vec<String> {
    (0..n).map(|i| v.get(&i).map_or_else(|| "0".into(), |c| c.to_string())).collect()
}

pub fn braid(hopf: Option<&str>, graded: bool, trivial: bool) -> Result<Report> {
    let (h, a, b) = if graded {
        let h = zoo::group_algebra(2);
        let a = zoo::graded_function_algebra();
        let coaction = if trivial { Comodule::trivial(&h, 2) } else { Comodule { dim: 2, coaction: a.module.coaction.clone() } };
        let b = ComoduleAlgebra { algebra: a.algebra.clone(), comodule: coaction };
        (h, a, b)
    } else {
        let h = load_hopf(hopf.unwrap_or("Z2"))?;
        let a = YDAlgebra { algebra: h.algebra.clone(), module: fh::adjoint_yd(&h) };
        let comodule = if trivial { Comodule::trivial(&h, h.dim()) } else { Comodule::regular(&h) };
        let b = ComoduleAlgebra { algebra: h.algebra.clone(), comodule };
        (h, a, b)
    };
    let p = fh::braided_product(&h, &a, &b)?;
    let plain = p == a.algebra.tensor(&b.algebra);
    let mult: Vec<Vec<Vec<String>>> = p.mult.iter().map(|r| r.iter().map(|v| dense(v, p.dim)).collect()).collect();
    let text = format!("braided product over {}: dimension {}, plain tensor product: {plain}", h.name, p.dim);
    ok(json!({"hopf": h.name, "dim": p.dim, "mult": mult, "unit": dense(&p.unit, p.dim), "plain_tensor": plain}), text)
}

pub fn snf(matrix: &str) -> Result<Report> {
    let m = IntMatrix::parse(&read_arg(matrix)?)?;
    let f = ktheory::smith_normal_form(&m);
    let check = f.u.mul(&m)?.mul(&f.v)? == f.s;
    let factors: Vec<Value> = f.invariant_factors().iter().map(int_value).collect();
    let text = format!("invariant factors {:?}, rank {}", f.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>(), f.rank());
    Ok(Report {
        json: json!({"s": f.s, "u": f.u, "v": f.v, "invariant_factors": factors, "rank": f.rank(), "verified": check}),
        text,
        verified: check,
    })
}

pub fn ktheory(boundary: &str) -> Result<Report> {
    let m = IntMatrix::parse(&read_arg(boundary)?)?;
    let k = ktheory::resolve_five_term(&m);
    let text = format!("K0 = {}, K1 = {}", k.k0, k.k1);
    ok(json!({"K0": group_json(&k.k0), "K1": group_json(&k.k1)}), text)
}

pub fn pv(alpha0: &str, alpha1: Option<&str>) -> Result<Report> {
    let a0 = IntMatrix::parse(&read_arg(alpha0)?)?;
    let a1 = match alpha1 {
        Some(t) => IntMatrix::parse(&read_arg(t)?)?,
        None => IntMatrix::zero(0, 0),
    };
    let r = ktheory::pv_solve(&a0, &a1)?;
    let text = r.report.join("\n");
    ok(json!({"K0": group_json(&r.k0), "K1": group_json(&r.k1), "report": r.report}), text)
}

pub fn qaut(n: usize, relations: bool, family2: bool, s: &Settings) -> Result<Report> {
    if n > s.qaut_max_n {
        return Err(Error::ResourceBound(format!("n = {n} exceeds the configured limit {}", s.qaut_max_n)));
    }
    let degree = s.degree_or(2);
    let w = qaut::wang_relations(n)?;
    let d = qaut::derive_from_coaction(n)?;
    let set = qaut::relation_set;
    let matches = json!({
        "multiplicativity_is_family1": set(&d.multiplicativity) == set(&w.family1),
        "star_is_star": set(&d.star) == set(&w.star),
        "unitality_is_family5": set(&d.unitality) == set(&w.family5),
        "trace_is_family4": set(&d.trace) == set(&w.family4),
    });
    let all_match = matches.as_object().expect("object").values().all(|v| v == &Value::Bool(true));
    let membership = qaut::ideal_membership(&w.relations(), &d.all(), degree);
    let mut out = Map::new();
    out.insert("n".into(), json!(n));
    out.insert(
        "families".into(),
        Value::Object(w.families().iter().map(|(name, f)| (name.to_string(), json!(f.len()))).collect()),
    );
    out.insert(
        "derived".into(),
        json!({
            "multiplicativity": d.multiplicativity.len(),
            "star": d.star.len(),
            "unitality": d.unitality.len(),
            "trace": d.trace.len(),
        }),
    );
    out.insert("derived_matches".into(), matches);
    out.insert(
        "derived_in_ideal".into(),
        json!({"degree": degree, "contained": membership.all_contained(), "rows": membership.rows}),
    );
    let mut text = format!(
        "n = {n}: {} relations; derived families match: {all_match}; derived relations in the ideal at degree {degree}: {}",
        w.relations().len(),
        membership.all_contained()
    );
    if family2 {
        let m = qaut::family2_status(n, degree)?;
        let found = m.degrees.iter().filter(|d| d.is_some()).count();
        out.insert(
            "family2".into(),
            json!({"degree": degree, "contained": found, "total": m.degrees.len(), "rows": m.rows}),
        );
        text.push_str(&format!("; family 2 from derived relations: {found}/{} at degree {degree}", m.degrees.len()));
    }
    if relations {
        let export: Map<String, Value> = w
            .families()
            .iter()
            .map(|(name, f)| (name.to_string(), json!(qaut::export_relations(&w.alphabet, f))))
            .collect();
        out.insert("relations".into(), Value::Object(export));
    }
    Ok(Report { json: Value::Object(out), text, verified: all_match && membership.all_contained() })
}
