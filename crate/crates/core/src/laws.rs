//! Randomized law checking with per-trial seed reporting.
//!
//! A law is a closure from a fresh generator to an optional counterexample
//! message. Each (law, trial) pair gets a seed derived from the base seed and
//! the law name, so any reported failure replays in isolation.

use serde::Serialize;

use crate::arrow::{PreArrow, Profunctor, Strong};
use crate::functor::{
    ap_from_monoidal, Applicative, Functor, KleisliFn, Monad, Monoidal,
};
use crate::gen::Gen;
use crate::observe::Observation;
use crate::value::{apply_at, curried_compose, fnv1a, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law_name: String,
    pub trials: u64,
    pub failures: Vec<Failure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instance: String,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed())
    }
}

/// A named law together with its trial body.
pub struct Law {
    pub name: &'static str,
    pub check: Box<dyn Fn(&mut Gen) -> Option<String>>,
}

impl Law {
    pub fn new(
        name: &'static str,
        check: impl Fn(&mut Gen) -> Option<String> + 'static,
    ) -> Law {
        Law {
            name,
            check: Box::new(check),
        }
    }
}

pub fn trial_seed(base: u64, law_name: &str, trial: u64) -> u64 {
    base ^ fnv1a(trial, law_name)
}

/// Run every law for `trials` rounds. At most the first 5 counterexamples
/// per law are kept.
pub fn run_laws(laws: Vec<Law>, base_seed: u64, size: usize, trials: u64) -> Vec<LawReport> {
    laws.iter()
        .map(|law| {
            let mut failures = Vec::new();
            for t in 0..trials {
                let seed = trial_seed(base_seed, law.name, t);
                let mut g = Gen::new(seed, size);
                if let Some(message) = (law.check)(&mut g) {
                    if failures.len() < 5 {
                        failures.push(Failure { seed, message });
                    }
                }
            }
            LawReport {
                law_name: law.name.to_string(),
                trials,
                failures,
            }
        })
        .collect()
}

pub fn expect_eq(lhs: Observation, rhs: Observation, label: &str) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("{label}: {lhs:?} != {rhs:?}"))
    }
}

/// Monoid laws: associativity and the two unit laws.
pub fn monoid_laws<D>(d: D) -> Vec<Law>
where
    D: crate::set_monoid::MonoidDict + Clone + 'static,
{
    let assoc = {
        let d = d.clone();
        Law::new("monoid_associativity", move |g| {
            let a = d.generate(g);
            let b = d.generate(g);
            let c = d.generate(g);
            let lhs = d.combine(&d.combine(&a, &b), &c);
            let rhs = d.combine(&a, &d.combine(&b, &c));
            expect_eq(
                d.observe(&lhs),
                d.observe(&rhs),
                "(a + b) + c != a + (b + c)",
            )
        })
    };
    let left_unit = {
        let d = d.clone();
        Law::new("monoid_left_unit", move |g| {
            let a = d.generate(g);
            let lhs = d.combine(&d.empty(), &a);
            expect_eq(d.observe(&lhs), d.observe(&a), "e + a != a")
        })
    };
    let right_unit = Law::new("monoid_right_unit", move |g| {
        let a = d.generate(g);
        let lhs = d.combine(&a, &d.empty());
        expect_eq(d.observe(&lhs), d.observe(&a), "a + e != a")
    });
    vec![assoc, left_unit, right_unit]
}

/// Functor laws: identity and composition.
pub fn functor_laws<F>(d: F) -> Vec<Law>
where
    F: Functor + Clone + 'static,
{
    let identity = {
        let d = d.clone();
        Law::new("functor_identity", move |g| {
            let x = d.generate(g);
            let id = crate::value::SampledFn::identity();
            expect_eq(d.observe(&d.fmap(&id, &x)), d.observe(&x), "fmap id x != x")
        })
    };
    let composition = Law::new("functor_composition", move |g| {
        let x = d.generate(g);
        let f = g.int_fn();
        let h = g.int_fn();
        let lhs = d.fmap(&h, &d.fmap(&f, &x));
        let rhs = d.fmap(&crate::value::SampledFn::compose(&h, &f), &x);
        expect_eq(
            d.observe(&lhs),
            d.observe(&rhs),
            "fmap h . fmap f != fmap (h . f)",
        )
    });
    vec![identity, composition]
}

/// Monad laws in Kleisli form: two units and associativity.
pub fn monad_laws<F>(d: F) -> Vec<Law>
where
    F: Monad + Clone + 'static,
{
    let left_unit = {
        let d = d.clone();
        Law::new("monad_left_unit", move |g| {
            let a = g.int_value();
            let k = d.gen_kleisli(g);
            let lhs = d.bind(&d.ret(a.clone()), &k);
            let rhs = k.apply(&a);
            expect_eq(d.observe(&lhs), d.observe(&rhs), "return a >>= k != k a")
        })
    };
    let right_unit = {
        let d = d.clone();
        Law::new("monad_right_unit", move |g| {
            let m = d.generate(g);
            let ret = {
                let d = d.clone();
                KleisliFn::new(move |v: &Value| d.ret(v.clone()))
            };
            let lhs = d.bind(&m, &ret);
            expect_eq(d.observe(&lhs), d.observe(&m), "m >>= return != m")
        })
    };
    let assoc = Law::new("monad_associativity", move |g| {
        let m = d.generate(g);
        let k = d.gen_kleisli(g);
        let h = d.gen_kleisli(g);
        let lhs = d.bind(&d.bind(&m, &k), &h);
        let composed = {
            let d = d.clone();
            let (k, h) = (k.clone(), h.clone());
            KleisliFn::new(move |v: &Value| d.bind(&k.apply(v), &h))
        };
        let rhs = d.bind(&m, &composed);
        expect_eq(
            d.observe(&lhs),
            d.observe(&rhs),
            "(m >>= k) >>= h != m >>= (\\x -> k x >>= h)",
        )
    });
    vec![left_unit, right_unit, assoc]
}

/// Applicative laws in apply form: identity, homomorphism, interchange,
/// composition.
pub fn applicative_laws<F>(d: F) -> Vec<Law>
where
    F: Applicative + Clone + 'static,
{
    let identity = {
        let d = d.clone();
        Law::new("applicative_identity", move |g| {
            let x = d.generate(g);
            let idf = Value::fun(
                crate::value::SampledFn::identity().with_probes(g.int_probes()),
            );
            let lhs = d.ap(&d.pure_v(idf), &x);
            expect_eq(d.observe(&lhs), d.observe(&x), "pure id <*> x != x")
        })
    };
    let homomorphism = {
        let d = d.clone();
        Law::new("applicative_homomorphism", move |g| {
            let f = g.fun_value();
            let a = g.int_value();
            let lhs = d.ap(&d.pure_v(f.clone()), &d.pure_v(a.clone()));
            let rhs = d.pure_v(f.as_fun().apply(&a));
            expect_eq(
                d.observe(&lhs),
                d.observe(&rhs),
                "pure f <*> pure a != pure (f a)",
            )
        })
    };
    let interchange = {
        let d = d.clone();
        Law::new("applicative_interchange", move |g| {
            let u = d.generate_funs(g);
            let a = g.int_value();
            let lhs = d.ap(&u, &d.pure_v(a.clone()));
            let rhs = d.ap(&d.pure_v(apply_at(a)), &u);
            expect_eq(
                d.observe(&lhs),
                d.observe(&rhs),
                "u <*> pure a != pure ($ a) <*> u",
            )
        })
    };
    let composition = Law::new("applicative_composition", move |g| {
        let u = d.generate_funs(g);
        let v = d.generate_funs(g);
        let w = d.generate(g);
        let lhs = d.ap(&d.ap(&d.ap(&d.pure_v(curried_compose()), &u), &v), &w);
        let rhs = d.ap(&u, &d.ap(&v, &w));
        expect_eq(
            d.observe(&lhs),
            d.observe(&rhs),
            "pure (.) <*> u <*> v <*> w != u <*> (v <*> w)",
        )
    });
    vec![identity, homomorphism, interchange, composition]
}

/// Monoidal-presentation laws: left unit, right unit, associativity up to
/// reassociation, and agreement with the apply presentation.
pub fn monoidal_laws<F>(d: F) -> Vec<Law>
where
    F: Monoidal + Applicative + Clone + 'static,
{
    let left_unit = {
        let d = d.clone();
        Law::new("monoidal_left_unit", move |g| {
            let x = d.generate(g);
            let lhs = d.fmap(&crate::value::SampledFn::snd(), &d.tensor(&d.unit(), &x));
            expect_eq(d.observe(&lhs), d.observe(&x), "snd <$> (unit * x) != x")
        })
    };
    let right_unit = {
        let d = d.clone();
        Law::new("monoidal_right_unit", move |g| {
            let x = d.generate(g);
            let lhs = d.fmap(&crate::value::SampledFn::fst(), &d.tensor(&x, &d.unit()));
            expect_eq(d.observe(&lhs), d.observe(&x), "fst <$> (x * unit) != x")
        })
    };
    let assoc = {
        let d = d.clone();
        Law::new("monoidal_associativity", move |g| {
            let x = d.generate(g);
            let y = d.generate(g);
            let z = d.generate(g);
            let lhs = d.fmap(
                &crate::value::SampledFn::assoc_r(),
                &d.tensor(&d.tensor(&x, &y), &z),
            );
            let rhs = d.tensor(&x, &d.tensor(&y, &z));
            expect_eq(
                d.observe(&lhs),
                d.observe(&rhs),
                "assoc <$> ((x * y) * z) != x * (y * z)",
            )
        })
    };
    let agreement = Law::new("monoidal_apply_agreement", move |g| {
        let f = d.generate_funs(g);
        let x = d.generate(g);
        let lhs = d.ap(&f, &x);
        let rhs = ap_from_monoidal(&d, &f, &x);
        expect_eq(
            d.observe(&lhs),
            d.observe(&rhs),
            "f <*> x != uncurry ($) <$> (f * x)",
        )
    });
    vec![left_unit, right_unit, assoc, agreement]
}

/// Profunctor laws: dimap preserves identities and composition.
pub fn profunctor_laws<P>(d: P) -> Vec<Law>
where
    P: Profunctor + Clone + 'static,
{
    let identity = {
        let d = d.clone();
        Law::new("profunctor_identity", move |g| {
            let p = d.generate(g);
            let probes = g.int_probes();
            let id = crate::value::SampledFn::identity();
            expect_eq(
                d.observe(&d.dimap(&id, &id, &p), &probes),
                d.observe(&p, &probes),
                "dimap id id p != p",
            )
        })
    };
    let composition = Law::new("profunctor_composition", move |g| {
        let p = d.generate(g);
        let (f, f2) = (g.int_fn(), g.int_fn());
        let (h, h2) = (g.int_fn(), g.int_fn());
        let probes = g.int_probes();
        let lhs = d.dimap(
            &crate::value::SampledFn::compose(&f, &f2),
            &crate::value::SampledFn::compose(&h, &h2),
            &p,
        );
        let rhs = d.dimap(&f2, &h, &d.dimap(&f, &h2, &p));
        expect_eq(
            d.observe(&lhs, &probes),
            d.observe(&rhs, &probes),
            "dimap (f . g) (h . i) != dimap g h . dimap f i",
        )
    });
    vec![identity, composition]
}

/// Pre-arrow laws: composition is a monoid with `arr id` as unit, and `arr`
/// is functorial and absorbed by dimap on either side.
pub fn prearrow_laws<P>(d: P) -> Vec<Law>
where
    P: PreArrow + Clone + 'static,
{
    let id = crate::value::SampledFn::identity;
    let left_unit = {
        let d = d.clone();
        Law::new("prearrow_left_unit", move |g| {
            let a = d.generate(g);
            let probes = g.int_probes();
            expect_eq(
                d.observe(&d.compose(&d.arr(&id()), &a), &probes),
                d.observe(&a, &probes),
                "arr id >>> a != a",
            )
        })
    };
    let right_unit = {
        let d = d.clone();
        Law::new("prearrow_right_unit", move |g| {
            let a = d.generate(g);
            let probes = g.int_probes();
            expect_eq(
                d.observe(&d.compose(&a, &d.arr(&id())), &probes),
                d.observe(&a, &probes),
                "a >>> arr id != a",
            )
        })
    };
    let assoc = {
        let d = d.clone();
        Law::new("prearrow_associativity", move |g| {
            let a = d.generate(g);
            let b = d.generate(g);
            let c = d.generate(g);
            let probes = g.int_probes();
            expect_eq(
                d.observe(&d.compose(&d.compose(&a, &b), &c), &probes),
                d.observe(&d.compose(&a, &d.compose(&b, &c)), &probes),
                "(a >>> b) >>> c != a >>> (b >>> c)",
            )
        })
    };
    let absorb_left = {
        let d = d.clone();
        Law::new("prearrow_absorb_left", move |g| {
            let a = d.generate(g);
            let f = g.int_fn();
            let probes = g.int_probes();
            expect_eq(
                d.observe(&d.compose(&d.arr(&f), &a), &probes),
                d.observe(&d.dimap(&f, &id(), &a), &probes),
                "arr f >>> a != dimap f id a",
            )
        })
    };
    let absorb_right = {
        let d = d.clone();
        Law::new("prearrow_absorb_right", move |g| {
            let a = d.generate(g);
            let f = g.int_fn();
            let probes = g.int_probes();
            expect_eq(
                d.observe(&d.compose(&a, &d.arr(&f)), &probes),
                d.observe(&d.dimap(&id(), &f, &a), &probes),
                "a >>> arr f != dimap id f a",
            )
        })
    };
    let functorial = Law::new("prearrow_arr_functorial", move |g| {
        let f = g.int_fn();
        let h = g.int_fn();
        let probes = g.int_probes();
        let lhs = d.arr(&crate::value::SampledFn::compose(&h, &f));
        let rhs = d.compose(&d.arr(&f), &d.arr(&h));
        expect_eq(
            d.observe(&lhs, &probes),
            d.observe(&rhs, &probes),
            "arr (h . f) != arr f >>> arr h",
        )
    });
    vec![
        left_unit,
        right_unit,
        assoc,
        absorb_left,
        absorb_right,
        functorial,
    ]
}

/// Strength laws: dropping the threaded component recovers the original,
/// nested strengths agree up to reassociation, and the threaded component
/// can slide across `first`.
pub fn strength_laws<P>(d: P) -> Vec<Law>
where
    P: Strong + Clone + 'static,
{
    let id = crate::value::SampledFn::identity;
    let cancel = {
        let d = d.clone();
        Law::new("strength_cancel", move |g| {
            let a = d.generate(g);
            let probes = g.pair_probes();
            let lhs = d.dimap(&id(), &crate::value::SampledFn::fst(), &d.first(&a));
            let rhs = d.dimap(&crate::value::SampledFn::fst(), &id(), &a);
            expect_eq(
                d.observe(&lhs, &probes),
                d.observe(&rhs, &probes),
                "fst <$> first a != a . fst",
            )
        })
    };
    let assoc = {
        let d = d.clone();
        Law::new("strength_associativity", move |g| {
            let a = d.generate(g);
            let pairs = g.pair_probes();
            let probes: Vec<Value> = pairs
                .into_iter()
                .map(|p| Value::pair(p, g.int_value()))
                .collect();
            let lhs = d.first(&d.first(&a));
            let rhs = d.dimap(
                &crate::value::SampledFn::assoc_r(),
                &crate::value::SampledFn::assoc_l(),
                &d.first(&a),
            );
            expect_eq(
                d.observe(&lhs, &probes),
                d.observe(&rhs, &probes),
                "first (first a) != reassociate (first a)",
            )
        })
    };
    let dinatural = Law::new("strength_dinaturality", move |g| {
        let a = d.generate(g);
        let f = g.int_fn();
        let probes = g.pair_probes();
        let lhs = d.dimap(&crate::value::SampledFn::on_snd(&f), &id(), &d.first(&a));
        let rhs = d.dimap(&id(), &crate::value::SampledFn::on_snd(&f), &d.first(&a));
        expect_eq(
            d.observe(&lhs, &probes),
            d.observe(&rhs, &probes),
            "first a . (id x f) != (id x f) . first a",
        )
    });
    vec![cancel, assoc, dinatural]
}

/// Full arrow laws: pre-arrow laws, strength laws, and the compatibility of
/// `first` with the monoid structure (`arr` and composition).
pub fn arrow_laws<P>(d: P) -> Vec<Law>
where
    P: PreArrow + Strong + Clone + 'static,
{
    let mut laws = prearrow_laws(d.clone());
    laws.extend(strength_laws(d.clone()));
    let first_arr = {
        let d = d.clone();
        Law::new("arrow_first_arr", move |g| {
            let f = g.int_fn();
            let probes = g.pair_probes();
            let lhs = d.first(&d.arr(&f));
            let rhs = d.arr(&crate::value::SampledFn::on_fst(&f));
            expect_eq(
                d.observe(&lhs, &probes),
                d.observe(&rhs, &probes),
                "first (arr f) != arr (f x id)",
            )
        })
    };
    let first_compose = Law::new("arrow_first_compose", move |g| {
        let a = d.generate(g);
        let b = d.generate(g);
        let probes = g.pair_probes();
        let lhs = d.first(&d.compose(&a, &b));
        let rhs = d.compose(&d.first(&a), &d.first(&b));
        expect_eq(
            d.observe(&lhs, &probes),
            d.observe(&rhs, &probes),
            "first (a >>> b) != first a >>> first b",
        )
    });
    laws.push(first_arr);
    laws.push(first_compose);
    laws
}
