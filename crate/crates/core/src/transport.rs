//! Structure transported along lax monoidal functors, as four concrete
//! constructions: the static arrow built from any applicative, the Kleisli
//! arrow built from any monad, the applicative derived from a monad, and
//! the reversed applicative.
//!
//! Each construction reuses the law dictionaries of the structure it is
//! built from, so a single generic suite run certifies the transported
//! instance. A generic transport combinator over arbitrary monoidal
//! structures is deliberately not modelled; these four dictionaries are
//! the pattern.

use crate::arrow::{PreArrow, Profunctor, Strong};
use crate::functor::{
    tensor_from_ap, Applicative, Functor, KleisliFn, Monad, Monoidal,
};
use crate::gen::Gen;
use crate::observe::Observation;
use crate::value::{apply_at, curried_compose, SampledFn, Value};

/// Effectful function: an applicative value whose payloads are functions
/// from input to output.
pub struct Static<F: Functor> {
    pub inner: F::Val,
}

impl<F: Functor> Clone for Static<F> {
    fn clone(&self) -> Self {
        Static {
            inner: self.inner.clone(),
        }
    }
}

/// Apply a function payload at a fixed argument.
fn run_at(a: &Value) -> SampledFn {
    let a = a.clone();
    SampledFn::new(move |v| v.as_fun().apply(&a), Vec::new())
}

/// Rewrite a function payload with pre- and post-processing steps.
fn between(pre: &SampledFn, post: &SampledFn) -> SampledFn {
    let (pre, post) = (pre.clone(), post.clone());
    SampledFn::new(
        move |v| Value::fun(SampledFn::compose(&post, &SampledFn::compose(v.as_fun(), &pre))),
        Vec::new(),
    )
}

#[derive(Clone, Copy, Default)]
pub struct StaticA<F> {
    pub base: F,
}

impl<F: Applicative + Clone + 'static> Profunctor for StaticA<F> {
    type Pro = Static<F>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        Static {
            inner: self.base.fmap(&between(pre, post), &p.inner),
        }
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        Static {
            inner: self.base.generate_funs(g),
        }
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        // Function payloads are tabulated over the probes; effects do not
        // depend on the probe, so one trace stands for them all.
        let mut entries = Vec::new();
        let mut trace = Vec::new();
        for (i, probe) in probes.iter().enumerate() {
            let ob = self.base.observe(&self.base.fmap(&run_at(probe), &p.inner));
            entries.push(Value::str(&ob.value));
            if i == 0 {
                trace = ob.trace;
            }
        }
        Observation::new(Value::list(entries).encode(), trace)
    }
}

impl<F: Applicative + Clone + 'static> PreArrow for StaticA<F> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        Static {
            inner: self.base.pure_v(Value::fun(f.clone())),
        }
    }

    /// Pointwise `second after first`; the base applicative sequences the
    /// second argument's effects before the first's.
    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        Static {
            inner: self.base.ap(
                &self.base.ap(&self.base.pure_v(curried_compose()), &b.inner),
                &a.inner,
            ),
        }
    }
}

impl<F: Applicative + Clone + 'static> Strong for StaticA<F> {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        let lift = SampledFn::new(
            |v| Value::fun(SampledFn::on_fst(v.as_fun())),
            Vec::new(),
        );
        Static {
            inner: self.base.fmap(&lift, &p.inner),
        }
    }
}

/// Functions into a monad.
#[derive(Clone, Copy, Default)]
pub struct KleisliA<M> {
    pub base: M,
}

impl<M: Monad + Clone + 'static> Profunctor for KleisliA<M> {
    type Pro = KleisliFn<M::Val>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        let base = self.base.clone();
        let (pre, post, p) = (pre.clone(), post.clone(), p.clone());
        KleisliFn::new(move |v| base.fmap(&post, &p.apply(&pre.apply(v))))
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        self.base.gen_kleisli(g)
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        let mut entries = Vec::new();
        let mut trace = Vec::new();
        for probe in probes {
            let ob = self.base.observe(&p.apply(probe));
            entries.push(Value::str(&ob.value));
            trace.extend(ob.trace);
        }
        Observation::new(Value::list(entries).encode(), trace)
    }
}

impl<M: Monad + Clone + 'static> PreArrow for KleisliA<M> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        let base = self.base.clone();
        let f = f.clone();
        KleisliFn::new(move |v| base.ret(f.apply(v)))
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        let base = self.base.clone();
        let (a, b) = (a.clone(), b.clone());
        KleisliFn::new(move |v| base.bind(&a.apply(v), &b))
    }
}

impl<M: Monad + Clone + 'static> Strong for KleisliA<M> {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        let base = self.base.clone();
        let p = p.clone();
        KleisliFn::new(move |v| {
            let (x, z) = v.as_pair();
            let z = z.clone();
            let b = base.clone();
            let attach = KleisliFn::new(move |c: &Value| b.ret(Value::pair(c.clone(), z.clone())));
            base.bind(&p.apply(x), &attach)
        })
    }
}

/// The applicative structure every monad carries: apply runs the function
/// side first, then the argument side, with bind.
#[derive(Clone, Copy, Default)]
pub struct MonadAp<M> {
    pub base: M,
}

impl<M: Monad + Clone + 'static> Functor for MonadAp<M> {
    type Val = M::Val;

    fn fmap(&self, f: &SampledFn, x: &Self::Val) -> Self::Val {
        self.base.fmap(f, x)
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        self.base.generate_with(g, payload)
    }

    fn observe(&self, x: &Self::Val) -> Observation {
        self.base.observe(x)
    }
}

impl<M: Monad + Clone + 'static> Applicative for MonadAp<M> {
    fn pure_v(&self, v: Value) -> Self::Val {
        self.base.ret(v)
    }

    fn ap(&self, f: &Self::Val, x: &Self::Val) -> Self::Val {
        let base = self.base.clone();
        let x = x.clone();
        let outer = KleisliFn::new(move |g: &Value| {
            let b = base.clone();
            let g = g.as_fun().clone();
            let inner = KleisliFn::new(move |v: &Value| b.ret(g.apply(v)));
            base.bind(&x, &inner)
        });
        self.base.bind(f, &outer)
    }
}

impl<M: Monad + Clone + 'static> Monoidal for MonadAp<M> {
    fn unit(&self) -> Self::Val {
        self.base.ret(Value::Unit)
    }

    fn tensor(&self, x: &Self::Val, y: &Self::Val) -> Self::Val {
        tensor_from_ap(self, x, y)
    }
}

/// Same carrier as the base applicative with the argument side's effects
/// sequenced before the function side's.
#[derive(Clone, Copy, Default)]
pub struct RevF<F> {
    pub base: F,
}

/// `Fun(x -> Fun(f -> f x))`: flipped application.
fn flipped_apply() -> Value {
    Value::fun(SampledFn::new(|x| apply_at(x.clone()), Vec::new()))
}

impl<F: Applicative + Clone + 'static> Functor for RevF<F> {
    type Val = F::Val;

    fn fmap(&self, f: &SampledFn, x: &Self::Val) -> Self::Val {
        self.base.fmap(f, x)
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        self.base.generate_with(g, payload)
    }

    fn observe(&self, x: &Self::Val) -> Observation {
        self.base.observe(x)
    }
}

impl<F: Applicative + Clone + 'static> Applicative for RevF<F> {
    fn pure_v(&self, v: Value) -> Self::Val {
        self.base.pure_v(v)
    }

    fn ap(&self, f: &Self::Val, x: &Self::Val) -> Self::Val {
        self.base.ap(
            &self.base.ap(&self.base.pure_v(flipped_apply()), x),
            f,
        )
    }
}

impl<F: Applicative + Clone + 'static> Monoidal for RevF<F> {
    fn unit(&self) -> Self::Val {
        self.base.pure_v(Value::Unit)
    }

    fn tensor(&self, x: &Self::Val, y: &Self::Val) -> Self::Val {
        tensor_from_ap(self, x, y)
    }
}
