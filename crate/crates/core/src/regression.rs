//! The bundled regression suite: every checkable worked example, each as a
//! named pass/fail line.

use std::collections::HashSet;
use std::sync::Arc;

use crate::concrete::{BsGroup, HnnTrefoil, HnnTrefoilElement, Trefoil, TrefoilElement};
use crate::embeddings::{
    composite_bs_map, named_path, phi_p4_map, verify_monoid_injective, verify_no_kernel, MonoidMap,
};
use crate::gbs::{classify_cstar, p_nai_verdict, GbsGraph, Verdict};
use crate::graphs::SimpGraph;
use crate::one_relator::{OneRelatorPresentation, PNai};
use crate::trace;

/// Length at which the kernel witness `b⁻¹(ac⁻¹)³` first appears.
pub const KERNEL_WITNESS_LEN: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name, passed, detail: detail.into() }
}

/// Positive words over `{t, at}` of length ≤ 10 are pairwise distinct in `BS(1,2)`.
pub fn bs12_free_submonoid(max_len: usize) -> CheckResult {
    let g = BsGroup::new(2).expect("n = 2");
    let gens = [g.t(), g.a().compose(&g.t())];
    let mut level = vec![g.identity()];
    let mut seen = HashSet::from([g.identity()]);
    let mut words = 1usize;
    let mut distinct = true;
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * 2);
        for e in &level {
            for s in &gens {
                let f = e.compose(s);
                distinct &= seen.insert(f.clone());
                next.push(f);
            }
        }
        words += next.len();
        level = next;
    }
    let alphabet = BsGroup::alphabet();
    let rel = alphabet.parse_word("t a t^-1 a^-2").expect("static word");
    let relator_trivial = g.from_word(&rel).expect("rank 2").is_identity();
    check(
        "bs12-free-submonoid",
        distinct && relator_trivial,
        format!("words={words} distinct={} relator_trivial={relator_trivial}", seen.len()),
    )
}

pub fn phi_p4_injective(max_len: usize) -> CheckResult {
    let p4 = named_path(4).expect("static graph");
    let r = verify_monoid_injective(&phi_p4_map(&p4).expect("P4"), max_len);
    check("phi-p4-injective", r.is_injective(), format!("max_len={max_len} checked={} collisions={}", r.checked, r.collisions.len()))
}

fn trefoil_map(p3: &Arc<SimpGraph>) -> MonoidMap<TrefoilElement> {
    MonoidMap::new(p3, TrefoilElement::identity(), vec![Trefoil::a(), Trefoil::b(), Trefoil::c()])
        .expect("a, b, c commute as required")
}

pub fn trefoil_relations() -> CheckResult {
    let (a, b, c) = (Trefoil::a(), Trefoil::b(), Trefoil::c());
    let ab = a.multiply(&b) == b.multiply(&a);
    let bc = b.multiply(&c) == c.multiply(&b);
    let cube = b == a.multiply(&c.invert()).pow(3);
    check("trefoil-relations", ab && bc && cube, format!("[a,b]=1:{ab} [b,c]=1:{bc} b=(ac^-1)^3:{cube}"))
}

pub fn trefoil_monoid_injective(max_len: usize) -> CheckResult {
    let p3 = named_path(3).expect("static graph");
    let r = verify_monoid_injective(&trefoil_map(&p3), max_len);
    check("trefoil-monoid-injective", r.is_injective(), format!("max_len={max_len} checked={} collisions={}", r.checked, r.collisions.len()))
}

/// The group map `A(P₃) → trefoil` is not injective.
pub fn trefoil_group_kernel(max_len: usize) -> CheckResult {
    let p3 = named_path(3).expect("static graph");
    let r = verify_no_kernel(&trefoil_map(&p3), max_len);
    let first = r.kernel.first().map(|g| g.display()).unwrap_or_else(|| "-".into());
    check("trefoil-group-kernel", !r.is_empty(), format!("max_len={max_len} kernel={} first={first}", r.kernel.len()))
}

fn hnn_map(p4: &Arc<SimpGraph>) -> MonoidMap<HnnTrefoilElement> {
    let images = vec![HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d()];
    MonoidMap::new(p4, HnnTrefoilElement::identity(), images).expect("a, b, c, d commute as required")
}

pub fn hnn_relations() -> CheckResult {
    let (a, b, c, d) = (HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d());
    let ab = a.multiply(&b) == b.multiply(&a);
    let bc = b.multiply(&c) == c.multiply(&b);
    let cd = c.multiply(&d) == d.multiply(&c);
    check("hnn-relations", ab && bc && cd, format!("[a,b]=1:{ab} [b,c]=1:{bc} [c,d]=1:{cd}"))
}

pub fn hnn_monoid_injective(max_len: usize) -> CheckResult {
    let p4 = named_path(4).expect("static graph");
    let r = verify_monoid_injective(&hnn_map(&p4), max_len);
    check("hnn-monoid-injective", r.is_injective(), format!("max_len={max_len} checked={} collisions={}", r.checked, r.collisions.len()))
}

/// `a, b, c, d` do not generate a copy of `A(P₄)`.
pub fn hnn_group_kernel(max_len: usize) -> CheckResult {
    let p4 = named_path(4).expect("static graph");
    let r = verify_no_kernel(&hnn_map(&p4), max_len);
    let first = r.kernel.first().map(|g| g.display()).unwrap_or_else(|| "-".into());
    check("hnn-group-kernel", !r.is_empty(), format!("max_len={max_len} kernel={} first={first}", r.kernel.len()))
}

pub fn octahedron_has_no_induced_p4() -> CheckResult {
    let found = SimpGraph::octahedron().find_induced_path(4);
    check("octahedron-no-induced-p4", found.is_none(), format!("found={found:?}"))
}

pub fn composite_bs_injective(max_len: usize) -> CheckResult {
    let p4 = named_path(4).expect("static graph");
    let r = verify_monoid_injective(&composite_bs_map(&p4).expect("P4"), max_len);
    check("composite-bs12-cubed-injective", r.is_injective(), format!("max_len={max_len} checked={} collisions={}", r.checked, r.collisions.len()))
}

/// Expected verdicts for the GBS and one-relator examples.
pub fn classification_table() -> CheckResult {
    let mut failures = Vec::new();
    let gbs_rows = [
        ("BS(1,2)", GbsGraph::bs_loop(1, 2), Verdict::NotCstarSimpleSolvableBs(2)),
        ("BS(2,2)", GbsGraph::bs_loop(2, 2), Verdict::NotCstarSimpleUnimodular),
        ("BS(1,1)", GbsGraph::bs_loop(1, 1), Verdict::NotCstarSimpleUnimodular),
        ("BS(2,3)", GbsGraph::bs_loop(2, 3), Verdict::CstarSimple),
        ("trefoil", GbsGraph::amalgam(3, 2), Verdict::NotCstarSimpleUnimodular),
    ];
    for (name, g, want) in gbs_rows {
        let g = g.expect("valid labels");
        let got = classify_cstar(&g).expect("connected").verdict;
        if got != want || p_nai_verdict(&g) != Ok(false) {
            failures.push(format!("{name}:{got}"));
        }
    }
    let pres_rows = [
        ("< a, t | t a t^-1 a^-2 >", Verdict::NotCstarSimpleSolvableBs(2), PNai::No),
        ("< a, b, c | a b a^-1 b^-1 >", Verdict::CstarSimple, PNai::Yes),
        ("< a, b | a b a b >", Verdict::CstarSimple, PNai::Yes),
    ];
    for (text, want, want_p) in pres_rows {
        let p = OneRelatorPresentation::parse(text).expect("static presentation");
        let (got, got_p) = (p.classify().verdict, p.p_nai());
        let consistent = !got.is_not_cstar_simple() || got_p == PNai::No;
        if got != want || got_p != want_p || !consistent {
            failures.push(format!("{text}:{got}/{got_p}"));
        }
    }
    let detail = if failures.is_empty() { "rows=8".to_string() } else { failures.join(";") };
    check("classification-table", failures.is_empty(), detail)
}

/// Trace counts from enumeration against the raw number of words per class.
pub fn trace_counts_p4() -> CheckResult {
    let p4 = named_path(4).expect("static graph");
    let mut counts = [0usize; 3];
    for t in trace::enumerate(&p4, 2) {
        counts[t.len()] += 1;
    }
    check("trace-counts-p4", counts == [1, 4, 13], format!("by_length={counts:?}"))
}

/// All checks; `max_len` bounds the trace-injectivity searches (the
/// HNN search is capped at 5, kernel searches use the witness length).
pub fn run_all(max_len: usize) -> Vec<CheckResult> {
    vec![
        trace_counts_p4(),
        bs12_free_submonoid(10),
        phi_p4_injective(max_len),
        trefoil_relations(),
        trefoil_monoid_injective(max_len),
        trefoil_group_kernel(KERNEL_WITNESS_LEN),
        hnn_relations(),
        hnn_monoid_injective(max_len.min(5)),
        hnn_group_kernel(KERNEL_WITNESS_LEN),
        octahedron_has_no_induced_p4(),
        composite_bs_injective(max_len),
        classification_table(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        for r in [trace_counts_p4(), trefoil_relations(), hnn_relations(), octahedron_has_no_induced_p4(), classification_table()] {
            assert!(r.passed, "{r}");
        }
        assert!(bs12_free_submonoid(6).passed);
        assert!(phi_p4_injective(4).passed);
    }

    #[test]
    fn report_lines() {
        let r = check("x", true, "d");
        assert_eq!(r.to_string(), "PASS x d");
    }
}
