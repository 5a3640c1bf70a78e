//! Benchmark workloads comparing naive left-nested combination against the
//! Cayley-style representations, for all four structures: list append vs
//! difference lists, free-monad bind vs codensity, free-applicative apply
//! vs its representation, and free pre-arrow composition vs its
//! representation.
//!
//! Costs are reported two ways: deterministic constructor counts (the
//! asserted quantity; see the `count` module) and median wall-clock
//! nanoseconds (reported for humans, never asserted). Correctness comes
//! first: each workload's two variants are checked to produce identical
//! observations at every size before any number is reported.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arrow::{FreePA, KleisliWP, PreArrow, PreExpF, Profunctor};
use crate::arrow::{fp_ins, pre_abs, pre_rep};
use crate::count;
use crate::day::{ap_abs, ap_rep, fa_ins, FreeAp, FreeApF, RepApF};
use crate::free_monad::{
    cod_abs, cod_bind, cod_rep, cod_ret, con, fm_bind, fm_ret, observe_free,
    Codensity, Free, PairSig,
};
use crate::functor::{Applicative, Functor, KleisliFn, Monad, WriterF};
use crate::gen::Gen;
use crate::observe::Observation;
use crate::set_monoid::{dlist_append, dlist_from, dlist_to, SharedList};
use crate::value::{SampledFn, Value};
use crate::writer::Writer;

/// Refuse tree-shaped workloads whose naive variant would construct more
/// nodes than this over the whole run.
pub const NODE_GUARD: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchSuite {
    Dlist,
    Codensity,
    Freeap,
    Prearrow,
}

impl BenchSuite {
    pub const ALL: [BenchSuite; 4] = [
        BenchSuite::Dlist,
        BenchSuite::Codensity,
        BenchSuite::Freeap,
        BenchSuite::Prearrow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchSuite::Dlist => "dlist",
            BenchSuite::Codensity => "codensity",
            BenchSuite::Freeap => "freeap",
            BenchSuite::Prearrow => "prearrow",
        }
    }

    /// Tree-building suites get smaller sizes: their naive node counts
    /// explode quadratically.
    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            BenchSuite::Dlist => vec![1024, 2048, 4096, 8192],
            _ => vec![128, 256, 512],
        }
    }

    fn guarded(self) -> bool {
        !matches!(self, BenchSuite::Dlist)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteSel {
    Dlist,
    Codensity,
    Freeap,
    Prearrow,
    All,
}

impl SuiteSel {
    pub fn suites(self) -> Vec<BenchSuite> {
        match self {
            SuiteSel::Dlist => vec![BenchSuite::Dlist],
            SuiteSel::Codensity => vec![BenchSuite::Codensity],
            SuiteSel::Freeap => vec![BenchSuite::Freeap],
            SuiteSel::Prearrow => vec![BenchSuite::Prearrow],
            SuiteSel::All => BenchSuite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchConfig {
    pub suite: SuiteSel,
    /// None means each suite's default sizes.
    pub sizes: Option<Vec<usize>>,
    pub repeats: u32,
    pub warmup: u32,
    pub output: OutputFormat,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            suite: SuiteSel::All,
            sizes: None,
            repeats: 5,
            warmup: 1,
            output: OutputFormat::Table,
            seed: 0xC0FFEE,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.repeats == 0 {
            return Err("repeats must be at least 1".to_string());
        }
        if let Some(sizes) = &self.sizes {
            if sizes.is_empty() {
                return Err("sizes must be nonempty".to_string());
            }
            if sizes.iter().any(|&n| n == 0) {
                return Err("sizes must be positive".to_string());
            }
            if sizes.windows(2).any(|w| w[0] >= w[1]) {
                return Err("sizes must be strictly increasing".to_string());
            }
        }
        for suite in self.suite.suites() {
            if !suite.guarded() {
                continue;
            }
            for &n in self.sizes_for(suite).iter() {
                let worst = 2 * (n as u64) * (n as u64);
                if worst > NODE_GUARD {
                    return Err(format!(
                        "size {n} for suite {} would construct about {worst} nodes, \
                         over the {NODE_GUARD} guard",
                        suite.name()
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn sizes_for(&self, suite: BenchSuite) -> Vec<usize> {
        self.sizes.clone().unwrap_or_else(|| suite.default_sizes())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BenchCell {
    pub suite: String,
    pub variant: String,
    pub size: usize,
    pub median_ns: u64,
    pub op_count: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuiteSummary {
    pub suite: String,
    /// Wall-clock growth at the largest size doubling; informational.
    pub time_ratio_naive: f64,
    pub time_ratio_cayley: f64,
    /// Constructor-count growth at the same doubling; the asserted figures.
    pub count_ratio_naive: f64,
    pub count_ratio_cayley: f64,
    /// Whether both variants produced identical observations at every size.
    pub observations_match: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BenchReport {
    pub seed: u64,
    pub repeats: u32,
    pub warmup: u32,
    pub cells: Vec<BenchCell>,
    pub summaries: Vec<SuiteSummary>,
}

/// One benchmark variant: builds the structure and materialises the result.
/// With `want_obs` it also renders the observation used for the
/// cross-variant equality check; timed runs skip that.
type Variant = Box<dyn Fn(bool) -> Option<Observation>>;

fn dlist_items(n: usize, seed: u64) -> Vec<Value> {
    let mut g = Gen::new(seed, 6);
    (0..n).map(|_| g.int_value()).collect()
}

fn dlist_variants(n: usize, seed: u64) -> (Variant, Variant) {
    let items = dlist_items(n, seed);
    let finish = |out: SharedList, want_obs: bool| {
        if want_obs {
            Some(Observation::new(
                Value::list(out.to_vec()).encode(),
                Vec::new(),
            ))
        } else {
            assert!(!out.is_empty());
            None
        }
    };
    let naive = {
        let items = items.clone();
        Box::new(move |want_obs: bool| {
            let mut acc = SharedList::from_slice(&items[..1]);
            for x in &items[1..] {
                acc = acc.append(&SharedList::from_slice(std::slice::from_ref(x)));
            }
            finish(acc, want_obs)
        })
    };
    let cayley = Box::new(move |want_obs: bool| {
        let mut acc = dlist_from(&SharedList::from_slice(&items[..1]));
        for x in &items[1..] {
            let one = dlist_from(&SharedList::from_slice(std::slice::from_ref(x)));
            acc = dlist_append(&acc, &one);
        }
        finish(dlist_to(&acc), want_obs)
    });
    (naive, cayley)
}

/// Substitute the one live leaf with a node carrying the next live leaf and
/// a dead one; dead leaves stay put, so the tree grows by one node per
/// step and the naive bind re-walks the whole spine each time.
fn grow(x: &Value) -> Free<PairSig, Value> {
    let n = x.as_int();
    if n >= 0 {
        con(
            &PairSig,
            (Free::Ret(Value::Int(n + 1)), Free::Ret(Value::Int(-1))),
        )
    } else {
        Free::Ret(x.clone())
    }
}

fn codensity_variants(n: usize) -> (Variant, Variant) {
    let finish = |tree: Free<PairSig, Value>, want_obs: bool| {
        if want_obs {
            Some(observe_free(&PairSig, &tree))
        } else {
            None
        }
    };
    let naive = Box::new(move |want_obs: bool| {
        let mut m = fm_ret::<PairSig>(Value::Int(0));
        for _ in 0..n {
            m = fm_bind(&PairSig, &m, &grow);
        }
        finish(m, want_obs)
    });
    let cayley = Box::new(move |want_obs: bool| {
        let mut c: Codensity<PairSig, Value> = cod_ret(Value::Int(0));
        for _ in 0..n {
            c = cod_bind(&c, |x| cod_rep(&PairSig, &grow(x)));
        }
        finish(cod_abs(&c), want_obs)
    });
    (naive, cayley)
}

fn curry_collect(remaining: usize, acc: Vec<Value>) -> Value {
    if remaining == 0 {
        Value::list(acc)
    } else {
        Value::fun(SampledFn::new(
            move |x| {
                let mut next = acc.clone();
                next.push(x.clone());
                curry_collect(remaining - 1, next)
            },
            Vec::new(),
        ))
    }
}

fn effect(i: usize) -> Writer {
    Writer::tell(&format!("e{i}"), Value::Int(i as i64))
}

fn freeap_variants(n: usize) -> (Variant, Variant) {
    let d = FreeApF { eff: WriterF };
    let finish = move |p: FreeAp<WriterF>, want_obs: bool| {
        if want_obs {
            Some(d.observe(&p))
        } else {
            None
        }
    };
    let naive = Box::new(move |want_obs: bool| {
        let mut u = d.pure_v(curry_collect(n, Vec::new()));
        for i in 0..n {
            u = d.ap(&u, &fa_ins(effect(i)));
        }
        finish(u, want_obs)
    });
    let cayley = Box::new(move |want_obs: bool| {
        let r = RepApF { base: d };
        let mut u = r.pure_v(curry_collect(n, Vec::new()));
        for i in 0..n {
            u = r.ap(&u, &ap_rep(&d, &fa_ins(effect(i))));
        }
        finish(ap_abs(&d, &u), want_obs)
    });
    (naive, cayley)
}

fn prearrow_atoms(n: usize, seed: u64) -> Vec<KleisliFn<Writer>> {
    let mut g = Gen::new(seed, 6);
    (0..n).map(|_| WriterF.gen_kleisli(&mut g)).collect()
}

fn prearrow_probes(seed: u64) -> Vec<Value> {
    Gen::new(seed ^ 0x9E37, 6).int_probes()
}

fn prearrow_variants(n: usize, seed: u64) -> (Variant, Variant) {
    let d = FreePA { atom: KleisliWP };
    let atoms = prearrow_atoms(n, seed);
    let probes = prearrow_probes(seed);
    let finish = move |p: crate::arrow::FreePre<KleisliWP>,
                       probes: &[Value],
                       want_obs: bool| {
        if want_obs {
            Some(d.observe(&p, probes))
        } else {
            None
        }
    };
    let naive = {
        let atoms = atoms.clone();
        let probes = probes.clone();
        Box::new(move |want_obs: bool| {
            let mut c = fp_ins::<KleisliWP>(atoms[0].clone());
            for a in &atoms[1..] {
                c = d.compose(&c, &fp_ins::<KleisliWP>(a.clone()));
            }
            finish(c, &probes, want_obs)
        })
    };
    let cayley = Box::new(move |want_obs: bool| {
        let rep = PreExpF { base: d };
        let mut c = rep.arr(&SampledFn::identity());
        for a in &atoms {
            c = rep.compose(&c, &pre_rep(&d, &fp_ins::<KleisliWP>(a.clone())));
        }
        finish(pre_abs(&d, &c), &probes, want_obs)
    });
    (naive, cayley)
}

fn variants(suite: BenchSuite, n: usize, seed: u64) -> (Variant, Variant) {
    match suite {
        BenchSuite::Dlist => dlist_variants(n, seed),
        BenchSuite::Codensity => codensity_variants(n),
        BenchSuite::Freeap => freeap_variants(n),
        BenchSuite::Prearrow => prearrow_variants(n, seed),
    }
}

/// The workloads recurse to a depth proportional to the size, which can
/// exceed small default stacks (test threads in particular), so all
/// building runs on a dedicated thread with room to spare.
fn on_big_stack<T, F>(f: F) -> T
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    std::thread::Builder::new()
        .name("bench-worker".to_string())
        .stack_size(64 << 20)
        .spawn(f)
        .expect("spawn bench worker")
        .join()
        .expect("bench worker ran to completion")
}

/// Cross-check a suite's two variants at one size without timing anything.
pub fn observations_agree(suite: BenchSuite, n: usize, seed: u64) -> bool {
    on_big_stack(move || {
        let (naive, cayley) = variants(suite, n, seed);
        naive(true) == cayley(true)
    })
}

fn median_ns(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn measure(variant: &Variant, repeats: u32, warmup: u32) -> (u64, u64) {
    for _ in 0..warmup {
        variant(false);
    }
    count::reset();
    variant(false);
    let ops = count::get();
    let mut samples: Vec<u64> = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            variant(false);
            u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX)
        })
        .collect();
    (median_ns(&mut samples), ops)
}

/// Ratio of the measure at the largest doubling present in `sizes`; falls
/// back to the two largest sizes when no exact doubling exists.
fn growth_pair(sizes: &[usize]) -> (usize, usize) {
    let mut best: Option<(usize, usize)> = None;
    for (i, &a) in sizes.iter().enumerate() {
        for &b in &sizes[i + 1..] {
            if b == 2 * a && best.is_none_or(|(_, hi)| b > hi) {
                best = Some((a, b));
            }
        }
    }
    best.unwrap_or_else(|| {
        if sizes.len() >= 2 {
            (sizes[sizes.len() - 2], sizes[sizes.len() - 1])
        } else {
            (sizes[0], sizes[0])
        }
    })
}

fn ratio(num: u64, den: u64) -> f64 {
    num as f64 / (den.max(1)) as f64
}

pub fn run(config: &BenchConfig) -> Result<BenchReport, String> {
    config.validate()?;
    let config = config.clone();
    on_big_stack(move || run_validated(&config))
}

fn run_validated(config: &BenchConfig) -> Result<BenchReport, String> {
    let mut cells = Vec::new();
    let mut summaries = Vec::new();
    for suite in config.suite.suites() {
        let sizes = config.sizes_for(suite);
        let mut matched = true;
        for &n in &sizes {
            let (naive, cayley) = variants(suite, n, config.seed);
            let obs_naive = naive(true).expect("observation requested");
            let obs_cayley = cayley(true).expect("observation requested");
            matched &= obs_naive == obs_cayley;
            for (variant, f) in [("naive", &naive), ("cayley", &cayley)] {
                let (med, ops) = measure(f, config.repeats, config.warmup);
                cells.push(BenchCell {
                    suite: suite.name().to_string(),
                    variant: variant.to_string(),
                    size: n,
                    median_ns: med,
                    op_count: ops,
                });
            }
        }
        let (lo, hi) = growth_pair(&sizes);
        let cell = |variant: &str, size: usize| {
            cells
                .iter()
                .find(|c| c.suite == suite.name() && c.variant == variant && c.size == size)
                .cloned()
                .expect("cell exists for every (variant, size)")
        };
        summaries.push(SuiteSummary {
            suite: suite.name().to_string(),
            time_ratio_naive: ratio(cell("naive", hi).median_ns, cell("naive", lo).median_ns),
            time_ratio_cayley: ratio(cell("cayley", hi).median_ns, cell("cayley", lo).median_ns),
            count_ratio_naive: ratio(cell("naive", hi).op_count, cell("naive", lo).op_count),
            count_ratio_cayley: ratio(cell("cayley", hi).op_count, cell("cayley", lo).op_count),
            observations_match: matched,
        });
    }
    Ok(BenchReport {
        seed: config.seed,
        repeats: config.repeats,
        warmup: config.warmup,
        cells,
        summaries,
    })
}

pub fn emit(report: &BenchReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serialises")
        }
        OutputFormat::Csv => {
            let mut out = String::from("suite,variant,size,median_ns,op_count\n");
            for c in &report.cells {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.suite, c.variant, c.size, c.median_ns, c.op_count
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:<10} {:<8} {:>8} {:>14} {:>12}\n",
                "suite", "variant", "size", "median_ns", "op_count"
            ));
            for c in &report.cells {
                out.push_str(&format!(
                    "{:<10} {:<8} {:>8} {:>14} {:>12}\n",
                    c.suite, c.variant, c.size, c.median_ns, c.op_count
                ));
            }
            out.push('\n');
            for s in &report.summaries {
                out.push_str(&format!(
                    "{}: count growth naive {:.2} vs cayley {:.2}; \
                     time growth naive {:.2} vs cayley {:.2}; observations {}\n",
                    s.suite,
                    s.count_ratio_naive,
                    s.count_ratio_cayley,
                    s.time_ratio_naive,
                    s.time_ratio_cayley,
                    if s.observations_match { "match" } else { "MISMATCH" },
                ));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config(suite: SuiteSel, sizes: Vec<usize>) -> BenchConfig {
        BenchConfig {
            suite,
            sizes: Some(sizes),
            repeats: 1,
            warmup: 0,
            output: OutputFormat::Json,
            seed: 11,
        }
    }

    #[test]
    fn variants_agree_at_small_sizes() {
        for suite in BenchSuite::ALL {
            for n in [1usize, 3, 8] {
                let (naive, cayley) = variants(suite, n, 5);
                assert_eq!(
                    naive(true),
                    cayley(true),
                    "suite {} at n={n}",
                    suite.name()
                );
            }
        }
    }

    #[test]
    fn counting_ratios_meet_the_asymptotic_targets() {
        let report = run(&quick_config(SuiteSel::All, vec![64, 128])).unwrap();
        for s in &report.summaries {
            assert!(s.observations_match, "{} mismatch", s.suite);
            assert!(
                s.count_ratio_naive >= 3.0,
                "{} naive {}",
                s.suite,
                s.count_ratio_naive
            );
            assert!(
                s.count_ratio_cayley <= 2.5,
                "{} cayley {}",
                s.suite,
                s.count_ratio_cayley
            );
        }
    }

    #[test]
    fn report_contains_every_cell_and_round_trips_through_json() {
        let config = quick_config(SuiteSel::Dlist, vec![64, 128]);
        let report = run(&config).unwrap();
        assert_eq!(report.cells.len(), 4);
        let json = emit(&report, OutputFormat::Json);
        let back: BenchReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);

        let csv = emit(&report, OutputFormat::Csv);
        assert!(csv.starts_with("suite,variant,size,median_ns,op_count\n"));
        assert_eq!(csv.lines().count(), 5);

        let table = emit(&report, OutputFormat::Table);
        assert!(table.contains("dlist"));
        assert!(table.contains("observations match"));
    }

    #[test]
    fn degenerate_config_still_covers_all_cells() {
        let mut config = quick_config(SuiteSel::Codensity, vec![16, 32]);
        config.repeats = 1;
        config.warmup = 0;
        let report = run(&config).unwrap();
        assert_eq!(report.cells.len(), 4);
        assert_eq!(report.summaries.len(), 1);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let bad = BenchConfig {
            sizes: Some(vec![128, 64]),
            ..BenchConfig::default()
        };
        assert!(bad.validate().is_err());

        let bad = BenchConfig {
            sizes: Some(vec![0, 64]),
            ..BenchConfig::default()
        };
        assert!(bad.validate().is_err());

        let bad = BenchConfig {
            repeats: 0,
            ..BenchConfig::default()
        };
        assert!(bad.validate().is_err());

        let bad = BenchConfig {
            suite: SuiteSel::Freeap,
            sizes: Some(vec![4096]),
            ..BenchConfig::default()
        };
        assert!(bad.validate().is_err(), "node guard must reject 4096");

        let ok = BenchConfig {
            suite: SuiteSel::Dlist,
            sizes: Some(vec![4096, 8192]),
            ..BenchConfig::default()
        };
        assert!(ok.validate().is_ok(), "dlist sizes are not tree-guarded");
    }
}
