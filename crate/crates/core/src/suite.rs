//! The reproduction suite: every desk-scale claim as a named check.
//!
//! Check ids are stable. Reports are deterministic; runtimes are printed
//! only on request.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{
    classify_semiring, element_classes, validate_semiring, FiniteSemimodule, FiniteSemiring,
    HasElementClasses, RawSemiring,
};
use crate::congruence::{
    brute_force_congruences, enumerate_congruences, enumerate_ideals, is_strong, jacobson_radical,
    simplicity_report,
};
use crate::constructions::{
    b31, chain_semiring, character_semimodule, diamond_congruence, ext_semimodule, ext_semiring,
    free_semimodule, known_witness, lattice_boolean, lattice_chain, matrix_semiring, morita_expand,
    morita_reduce, nine_element_over_b31, quotient_semimodule, quotient_semiring, zmod,
    ExtensionProblem, KnownWitness,
};
use crate::error::{Error, Result};
use crate::hom::{
    are_isomorphic, enumerate_cyclic_semimodules, enumerate_homs, enumerate_semimodules,
    find_extension, is_retract, CensusFilter,
};
use crate::injectivity::{
    brute_force_extension_exists, ci_verdict, ci_verdict_witness_mode, injectivity_verdict,
    v_verdict, witness_is_valid, FamilyVerdict, Verdict, VerdictStatus,
};
use crate::limits::Limits;
use crate::table::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Lower bounds throughout.
    Fast,
    Full,
}

impl Profile {
    fn pick(self, full: usize, fast: usize) -> usize {
        match self {
            Profile::Full => full,
            Profile::Fast => fast,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    /// The claim being reproduced.
    pub locus: &'static str,
    pub status: CheckStatus,
    #[serde(skip)]
    pub runtime: Duration,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub profile: Profile,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Fail dominates inconclusive, which dominates pass.
    pub fn overall(&self) -> CheckStatus {
        if self.count(CheckStatus::Fail) > 0 {
            CheckStatus::Fail
        } else if self.count(CheckStatus::Inconclusive) > 0 {
            CheckStatus::Inconclusive
        } else {
            CheckStatus::Pass
        }
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{:<12} {}: {}", c.status.as_str(), c.id, c.locus);
            if !c.witness.is_empty() {
                let _ = write!(out, " [{}]", c.witness);
            }
            if timings {
                let _ = write!(out, " ({} ms)", c.runtime.as_millis());
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} inconclusive",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Inconclusive)
        );
        out
    }

    /// One JSON object per check.
    pub fn to_jsonl(&self, timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mut value = serde_json::to_value(c).expect("check results serialize");
            if timings {
                value["runtime_ms"] = serde_json::Value::from(c.runtime.as_millis() as u64);
            }
            out.push_str(&value.to_string());
            out.push('\n');
        }
        out
    }
}

/// The named semirings the suite runs on, as raw tables so they can be
/// replaced or mutated before a run.
#[derive(Debug, Clone)]
pub struct Fixtures {
    semirings: BTreeMap<&'static str, RawSemiring>,
}

/// Fixture names and their meaning.
pub const FIXTURE_NAMES: [(&str, &str); 10] = [
    ("b", "Boolean semifield"),
    ("b3", "chain semiring on 3 elements"),
    ("b4", "chain semiring on 4 elements"),
    ("b5", "chain semiring on 5 elements"),
    ("b31", "B(3,1)"),
    ("f2", "field with 2 elements"),
    ("ext-f2", "Ext of the field with 2 elements"),
    ("ext-z3", "Ext of the integers mod 3"),
    ("bool2", "Boolean algebra with 4 elements"),
    ("chain3", "3-chain lattice semiring"),
];

impl Default for Fixtures {
    fn default() -> Self {
        let standard = |name: &str| -> FiniteSemiring {
            match name {
                "b" => chain_semiring(1),
                "b3" => chain_semiring(2),
                "b4" => chain_semiring(3),
                "b5" => chain_semiring(4),
                "b31" => Ok(b31()),
                "f2" => zmod(2).map(|r| r.into_semiring()),
                "ext-f2" => zmod(2).map(|r| ext_semiring(&r)),
                "ext-z3" => zmod(3).map(|r| ext_semiring(&r)),
                "bool2" => lattice_boolean(2),
                "chain3" => lattice_chain(3),
                _ => unreachable!("unknown fixture"),
            }
            .expect("standard fixtures are valid")
        };
        Fixtures {
            semirings: FIXTURE_NAMES
                .iter()
                .map(|&(n, _)| (n, standard(n).to_raw()))
                .collect(),
        }
    }
}

impl Fixtures {
    pub fn raw_mut(&mut self, name: &str) -> Option<&mut RawSemiring> {
        self.semirings.get_mut(name)
    }

    pub fn get(&self, name: &str) -> Result<Arc<FiniteSemiring>> {
        let raw = self
            .semirings
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no fixture named {name}")))?;
        validate_semiring(raw).map(Arc::new)
    }
}

fn verdict_status(status: VerdictStatus, want: VerdictStatus) -> CheckStatus {
    match status {
        s if s == want => CheckStatus::Pass,
        VerdictStatus::InconclusiveAtBound => CheckStatus::Inconclusive,
        _ => CheckStatus::Fail,
    }
}

pub fn describe_witness(w: &ExtensionProblem) -> String {
    format!(
        "ambient of order {}, subobject {}, map {:?} into a target of order {}",
        w.ambient.order(),
        w.subobject,
        w.map,
        w.target.order()
    )
}

fn describe_verdict(v: &Verdict) -> String {
    match &v.witness {
        Some(w) => format!(
            "{} at bound {}: {}",
            v.status.as_str(),
            v.bound,
            describe_witness(w)
        ),
        None => format!(
            "{} at bound {} over {} ambients",
            v.status.as_str(),
            v.bound,
            v.ambients
        ),
    }
}

fn expect_verdict(v: &Verdict, want: VerdictStatus) -> (CheckStatus, String) {
    (verdict_status(v.status, want), describe_verdict(v))
}

fn expect_family(f: &FamilyVerdict, want: VerdictStatus) -> (CheckStatus, String) {
    let (status, text) = expect_verdict(&f.verdict, want);
    (status, format!("members: {}; {text}", f.members.len()))
}

fn pass_if(ok: bool, witness: impl Into<String>) -> (CheckStatus, String) {
    (
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        witness.into(),
    )
}

/// `{0, ∞}` with `s·∞ = ∞` for every nonzero `s`.
pub fn two_point_absorbing(s: &Arc<FiniteSemiring>) -> Result<FiniteSemimodule> {
    FiniteSemimodule::from_fn(s, 2, |x, y| x.max(y), |t, m| usize::from(t != 0 && m != 0))
}

/// The chain `0 < 1 < 2` over the Boolean semifield, with join as addition.
fn boolean_three_chain(b: &Arc<FiniteSemiring>) -> Result<FiniteSemimodule> {
    FiniteSemimodule::from_fn(b, 3, |x, y| x.max(y), |t, m| if t == 0 { 0 } else { m })
}

/// Each module is isomorphic to exactly one of `expected`, and each of
/// `expected` is hit.
fn matches_exactly(found: &[FiniteSemimodule], expected: &[FiniteSemimodule]) -> Result<bool> {
    let mut hit = vec![false; expected.len()];
    for m in found {
        let mut matched = 0;
        for (i, e) in expected.iter().enumerate() {
            if are_isomorphic(m, e)?.is_isomorphic() {
                hit[i] = true;
                matched += 1;
            }
        }
        if matched != 1 {
            return Ok(false);
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

fn orders(ms: &[FiniteSemimodule]) -> String {
    let o: Vec<String> = ms.iter().map(|m| m.order().to_string()).collect();
    format!("orders {}", o.join(", "))
}

/// Quotients of `m` by each of its congruences, one per isomorphism class.
fn quotient_classes(m: &FiniteSemimodule, limits: &Limits) -> Result<Vec<FiniteSemimodule>> {
    let mut classes: Vec<FiniteSemimodule> = Vec::new();
    for theta in enumerate_congruences(m, limits)? {
        let q = quotient_semimodule(m, &theta)?.object;
        let mut fresh = true;
        for c in &classes {
            if are_isomorphic(c, &q)?.is_isomorphic() {
                fresh = false;
                break;
            }
        }
        if fresh {
            classes.push(q);
        }
    }
    Ok(classes)
}

/// Every semimodule of order at most `max`, up to isomorphism.
fn population(
    s: &Arc<FiniteSemiring>,
    max: usize,
    limits: &Limits,
) -> Result<Vec<FiniteSemimodule>> {
    enumerate_semimodules(s, max, CensusFilter::All, limits)
}

struct Runner<'a> {
    fixtures: &'a Fixtures,
    profile: Profile,
    limits: &'a Limits,
    checks: Vec<CheckResult>,
}

impl Runner<'_> {
    fn run(
        &mut self,
        id: &'static str,
        locus: &'static str,
        body: impl FnOnce(&Fixtures, Profile, &Limits) -> Result<(CheckStatus, String)>,
    ) {
        let start = Instant::now();
        let (status, witness) = match body(self.fixtures, self.profile, self.limits) {
            Ok(r) => r,
            Err(e) => (CheckStatus::Fail, format!("error: {e}")),
        };
        self.checks.push(CheckResult {
            id,
            locus,
            status,
            runtime: start.elapsed(),
            witness,
        });
    }
}

pub fn paper_suite(profile: Profile, limits: &Limits) -> SuiteReport {
    paper_suite_with(&Fixtures::default(), profile, limits)
}

pub fn paper_suite_with(fixtures: &Fixtures, profile: Profile, limits: &Limits) -> SuiteReport {
    let mut r = Runner {
        fixtures,
        profile,
        limits,
        checks: Vec::new(),
    };

    r.run(
        "chain-semiring-flags",
        "B_{n+1} is a zerosumfree, zeroic, additively idempotent, anti-bounded semiring with infinite element n (n = 1..4)",
        |fx, _, _| {
            for (n, name) in ["b", "b3", "b4", "b5"].into_iter().enumerate() {
                let n = n + 1;
                let s = fx.get(name)?;
                let f = classify_semiring(&s);
                let inf = s.element_classes().infinite;
                if !(f.zerosumfree && f.zeroic && f.additively_idempotent && f.anti_bounded) || inf != Some(n) {
                    return Ok(pass_if(false, format!("n = {n}: {f:?}, infinite element {inf:?}")));
                }
            }
            Ok(pass_if(true, "n = 1..4"))
        },
    );

    r.run(
        "b3-cyclic-classes",
        "B3 has exactly two nonzero cyclic semimodules: {0,2} and B3",
        |fx, _, limits| {
            let s = fx.get("b3")?;
            let cyclic = enumerate_cyclic_semimodules(&s, limits)?;
            let two = FiniteSemimodule::regular(&s)
                .submodule(ElementSet(0b101))?
                .0;
            let expected = [
                FiniteSemimodule::trivial(&s),
                two,
                FiniteSemimodule::regular(&s),
            ];
            Ok(pass_if(
                matches_exactly(&cyclic, &expected)?,
                orders(&cyclic),
            ))
        },
    );

    r.run(
        "b3-character-isomorphic",
        "the character semimodule of B3 is isomorphic to B3",
        |fx, _, _| {
            let s = fx.get("b3")?;
            let reg = FiniteSemimodule::regular(&s);
            let iso = are_isomorphic(&character_semimodule(&reg)?, &reg)?;
            Ok(pass_if(
                iso.is_isomorphic(),
                format!("isomorphism {:?}", iso.map().unwrap_or_default()),
            ))
        },
    );

    r.run(
        "b3-cyclic-injective",
        "B3 is a CI-semiring",
        |fx, p, limits| {
            Ok(expect_family(
                &ci_verdict(&fx.get("b3")?, p.pick(5, 4), limits)?,
                VerdictStatus::Holds,
            ))
        },
    );

    r.run(
        "b4-regular-not-injective",
        "B4 is not injective as a semimodule over itself",
        |fx, _, limits| {
            let s = fx.get("b4")?;
            // refutations need ambients of order 5; the fast profile keeps that bound
            let v = injectivity_verdict(&FiniteSemimodule::regular(&s), 5, limits)?;
            Ok(expect_verdict(&v, VerdictStatus::RefutedWithWitness))
        },
    );

    r.run(
        "b4-chain-witness",
        "the map from the 4-element subsemimodule of the 5-element chain over B4 has no extension",
        |fx, _, _| {
            let s = fx.get("b4")?;
            let mut w = known_witness(KnownWitness::ChainOverB4);
            w.ambient = w.ambient.rebase(&s)?;
            w.target = FiniteSemimodule::regular(&s);
            let ext = find_extension(&w.ambient, w.subobject, &w.map, &w.target)?;
            Ok(pass_if(ext.is_none(), describe_witness(&w)))
        },
    );

    r.run(
        "b4-not-cyclic-injective",
        "B4 is not a CI-semiring",
        |fx, p, limits| {
            Ok(expect_family(
                &ci_verdict(&fx.get("b4")?, p.pick(5, 4), limits)?,
                VerdictStatus::RefutedWithWitness,
            ))
        },
    );

    r.run(
        "b31-not-retract",
        "B(3,1) is not a retract of the 9-element semimodule containing it",
        |fx, _, _| {
            let s = fx.get("b31")?;
            let m9 = nine_element_over_b31(&Arc::new(b31())).rebase(&s)?;
            let retraction = is_retract(&m9, ElementSet(0b111))?;
            let text = match retraction {
                Some(h) => format!("retraction {:?}", h.map),
                None => "no retraction".to_string(),
            };
            Ok(pass_if(text == "no retraction", text))
        },
    );

    r.run(
        "b31-not-cyclic-injective",
        "B(3,1) is not a CI-semiring (checked against the 9-element semimodule)",
        |fx, _, limits| {
            let s = fx.get("b31")?;
            let m9 = nine_element_over_b31(&Arc::new(b31())).rebase(&s)?;
            Ok(expect_family(
                &ci_verdict_witness_mode(&s, vec![m9], limits)?,
                VerdictStatus::RefutedWithWitness,
            ))
        },
    );

    r.run(
        "boolean-square-quotients",
        "the only quotients of B^2 over B are 0, B, the 3-chain and B^2",
        |fx, _, limits| {
            let b = fx.get("b")?;
            let square = free_semimodule(&b, 2)?;
            let quotients = quotient_classes(&square, limits)?;
            let expected = [
                FiniteSemimodule::trivial(&b),
                FiniteSemimodule::regular(&b),
                boolean_three_chain(&b)?,
                square.clone(),
            ];
            Ok(pass_if(
                matches_exactly(&quotients, &expected)?,
                orders(&quotients),
            ))
        },
    );

    r.run(
        "matrix-morita-round-trip",
        "reduction by E11 and expansion to columns are inverse up to isomorphism between M2(B)- and B-semimodules",
        |fx, p, limits| {
            let b = fx.get("b")?;
            let m2 = Arc::new(matrix_semiring(&b, 2, limits)?);
            let small = population(&b, p.pick(4, 3), limits)?;
            let mut big = vec![FiniteSemimodule::regular(&m2), FiniteSemimodule::trivial(&m2)];
            for x in &small {
                let expanded = morita_expand(x, &m2, 2)?;
                if !are_isomorphic(&morita_reduce(&expanded, &b, 2)?, x)?.is_isomorphic() {
                    return Ok(pass_if(false, format!("reduce(expand(X)) differs for X of order {}", x.order())));
                }
                big.push(expanded);
            }
            for y in &big {
                let reduced = morita_reduce(y, &b, 2)?;
                if !are_isomorphic(&morita_expand(&reduced, &m2, 2)?, y)?.is_isomorphic() {
                    return Ok(pass_if(false, format!("expand(reduce(Y)) differs for Y of order {}", y.order())));
                }
            }
            Ok(pass_if(true, format!("{} B-semimodules, {} M2(B)-semimodules", small.len(), big.len())))
        },
    );

    r.run(
        "ext-f2-cyclic-classes",
        "the cyclic Ext(F2)-semimodules are 0, {0,inf}, Ext(F2/F2) and Ext(F2)",
        |fx, _, limits| {
            let s = fx.get("ext-f2")?;
            let f2 = fx.get("f2")?;
            let cyclic = enumerate_cyclic_semimodules(&s, limits)?;
            let expected = [
                FiniteSemimodule::trivial(&s),
                two_point_absorbing(&s)?,
                ext_semimodule(&s, &FiniteSemimodule::trivial(&f2))?,
                ext_semimodule(&s, &FiniteSemimodule::regular(&f2))?,
            ];
            Ok(pass_if(
                matches_exactly(&cyclic, &expected)?,
                orders(&cyclic),
            ))
        },
    );

    r.run(
        "ext-f2-cyclic-injective",
        "Ext(F2) is a CI-semiring since F2 is semisimple",
        |fx, p, limits| {
            Ok(expect_family(
                &ci_verdict(&fx.get("ext-f2")?, p.pick(4, 3), limits)?,
                VerdictStatus::Holds,
            ))
        },
    );

    r.run(
        "ext-z3-cyclic-injective",
        "Ext(Z/3) is a CI-semiring since Z/3 is semisimple",
        |fx, p, limits| {
            Ok(expect_family(
                &ci_verdict(&fx.get("ext-z3")?, p.pick(4, 3), limits)?,
                VerdictStatus::Holds,
            ))
        },
    );

    r.run(
        "chain-lattice-not-cyclic-injective",
        "a distributive lattice that is not Boolean is not a CI-semiring (3-chain)",
        |fx, p, limits| {
            Ok(expect_family(
                &ci_verdict(&fx.get("chain3")?, p.pick(4, 3), limits)?,
                VerdictStatus::RefutedWithWitness,
            ))
        },
    );

    r.run(
        "boolean-algebras-cyclic-injective",
        "finite Boolean algebras are CI-semirings (2 and 4 elements)",
        |fx, p, limits| {
            let bound = p.pick(4, 3);
            let mut parts = Vec::new();
            let mut status = CheckStatus::Pass;
            for name in ["b", "bool2"] {
                let (st, text) = expect_family(
                    &ci_verdict(&fx.get(name)?, bound, limits)?,
                    VerdictStatus::Holds,
                );
                if st != CheckStatus::Pass && status != CheckStatus::Fail {
                    status = st;
                }
                parts.push(format!("{name}: {text}"));
            }
            Ok((status, parts.join("; ")))
        },
    );

    r.run("boolean-radical", "J(B) = B", |fx, _, limits| {
        let b = fx.get("b")?;
        let j = jacobson_radical(&b, limits)?.mask;
        Ok(pass_if(
            j == ElementSet::full(b.order()),
            format!("J = {j}"),
        ))
    });

    r.run("field-radical", "J(F2) = 0", |fx, _, limits| {
        let j = jacobson_radical(&*fx.get("f2")?, limits)?.mask;
        Ok(pass_if(j == ElementSet::singleton(0), format!("J = {j}")))
    });

    r.run(
        "v-semirings",
        "B, B3 and F2 are V-semirings",
        |fx, p, limits| {
            let (simple, ext) = (p.pick(3, 2), p.pick(4, 3));
            let mut parts = Vec::new();
            let mut status = CheckStatus::Pass;
            for name in ["b", "b3", "f2"] {
                let (st, text) = expect_family(
                    &v_verdict(&fx.get(name)?, simple, ext, limits)?,
                    VerdictStatus::Holds,
                );
                if st != CheckStatus::Pass && status != CheckStatus::Fail {
                    status = st;
                }
                parts.push(format!("{name}: {text}"));
            }
            Ok((status, parts.join("; ")))
        },
    );

    property_checks(&mut r);
    SuiteReport {
        profile,
        checks: r.checks,
    }
}

const PROPERTY_BASES: [&str; 4] = ["b", "b3", "b31", "ext-f2"];

fn property_checks(r: &mut Runner<'_>) {
    r.run(
        "simple-implies-s-simple",
        "every simple semimodule is s-simple (all semimodules of order at most 4 over B, B3, B(3,1), Ext(F2))",
        |fx, p, limits| {
            let mut seen = 0;
            for name in PROPERTY_BASES {
                for m in population(&fx.get(name)?, p.pick(4, 3), limits)? {
                    let rep = simplicity_report(&m, limits)?;
                    if rep.simple && !rep.s_simple {
                        return Ok(pass_if(false, format!("{name}: simple but not s-simple, order {}", m.order())));
                    }
                    seen += 1;
                }
            }
            Ok(pass_if(true, format!("{seen} semimodules")))
        },
    );

    r.run(
        "simple-iff-nonzero-maps-injective",
        "a semimodule is simple iff every nonzero homomorphism out of it is injective (same population)",
        |fx, p, limits| {
            let mut seen = 0;
            for name in PROPERTY_BASES {
                let pop = population(&fx.get(name)?, p.pick(4, 3), limits)?;
                for m in &pop {
                    let simple = simplicity_report(m, limits)?.simple;
                    let mut all_injective = m.is_nonzero();
                    for n in &pop {
                        if enumerate_homs(m, n, limits)?.iter().any(|h| !h.is_zero() && !h.is_injective()) {
                            all_injective = false;
                        }
                    }
                    if simple != all_injective {
                        return Ok(pass_if(false, format!("{name}: order {} simple = {simple}", m.order())));
                    }
                    seen += 1;
                }
            }
            Ok(pass_if(true, format!("{seen} semimodules")))
        },
    );

    r.run(
        "join-closure-matches-partitions",
        "congruences from joins of principal congruences equal those found by scanning all partitions (carriers up to 6)",
        |fx, p, limits| {
            let cap = p.pick(6, 4);
            let mut seen = 0;
            for &(name, _) in &FIXTURE_NAMES {
                let s = fx.get(name)?;
                if s.order() <= cap {
                    if enumerate_congruences(&*s, limits)? != brute_force_congruences(&*s)? {
                        return Ok(pass_if(false, format!("semiring {name}")));
                    }
                    seen += 1;
                }
                for m in population(&s, cap.min(p.pick(5, 4)), limits)? {
                    if enumerate_congruences(&m, limits)? != brute_force_congruences(&m)? {
                        return Ok(pass_if(false, format!("semimodule of order {} over {name}", m.order())));
                    }
                    seen += 1;
                }
            }
            Ok(pass_if(true, format!("{seen} structures")))
        },
    );

    r.run(
        "refutation-witnesses-revalidate",
        "every refutation witness re-validates by an exhaustive scan of completions",
        |fx, p, limits| {
            let bound = p.pick(5, 4);
            let mut witnesses: Vec<ExtensionProblem> = KnownWitness::ALL
                .iter()
                .map(|&w| known_witness(w))
                .collect();
            for name in ["b4", "chain3", "b31"] {
                let s = fx.get(name)?;
                if let Some(w) = ci_verdict(&s, bound, limits)?.verdict.witness {
                    witnesses.push(w);
                }
            }
            let b4 = fx.get("b4")?;
            if let Some(w) =
                injectivity_verdict(&FiniteSemimodule::regular(&b4), bound, limits)?.witness
            {
                witnesses.push(w);
            }
            for w in &witnesses {
                if !witness_is_valid(w) || brute_force_extension_exists(w) != Some(false) {
                    return Ok(pass_if(false, describe_witness(w)));
                }
            }
            Ok(pass_if(true, format!("{} witnesses", witnesses.len())))
        },
    );

    r.run(
        "diamond-quotients-idempotent",
        "quotients by the diamond congruence are additively idempotent",
        |fx, _, _| {
            let mut seen = 0;
            let mut skipped = Vec::new();
            for &(name, _) in &FIXTURE_NAMES {
                let s = fx.get(name)?;
                match diamond_congruence(&*s) {
                    Ok(theta) => {
                        let q = quotient_semiring(&s, &theta)?.object;
                        if !element_classes(&q).iplus.eq(&ElementSet::full(q.order())) {
                            return Ok(pass_if(false, format!("semiring {name}")));
                        }
                        seen += 1;
                    }
                    Err(Error::NotACongruence(_)) | Err(Error::InvalidArgument(_)) => {
                        skipped.push(name)
                    }
                    Err(e) => return Err(e),
                }
                let reg = FiniteSemimodule::regular(&s);
                if let Ok(theta) = diamond_congruence(&reg) {
                    let q = quotient_semimodule(&reg, &theta)?.object;
                    if !element_classes(&q).iplus.eq(&ElementSet::full(q.order())) {
                        return Ok(pass_if(false, format!("regular semimodule of {name}")));
                    }
                    seen += 1;
                }
            }
            let note = if skipped.is_empty() {
                String::new()
            } else {
                format!("; not a congruence on {}", skipped.join(", "))
            };
            Ok(pass_if(true, format!("{seen} quotients{note}")))
        },
    );

    r.run(
        "zero-sum-set-strong-ideal",
        "V(S), the elements with a summand giving zero, is a strong ideal",
        |fx, _, limits| {
            for &(name, _) in &FIXTURE_NAMES {
                let s = fx.get(name)?;
                let v = element_classes(&*s).vclass;
                let is_ideal = enumerate_ideals(&s, limits)?.iter().any(|k| k.mask == v);
                if !is_ideal || !is_strong(s.add_table(), v) {
                    return Ok(pass_if(false, format!("{name}: V = {v}")));
                }
            }
            Ok(pass_if(true, format!("{} semirings", FIXTURE_NAMES.len())))
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        let fx = Fixtures::default();
        for (name, _) in FIXTURE_NAMES {
            assert!(fx.get(name).is_ok(), "{name}");
        }
        assert!(fx.get("nope").is_err());
    }
}
