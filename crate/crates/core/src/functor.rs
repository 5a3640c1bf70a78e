//! Dictionary-passing functor hierarchy over the value universe.
//!
//! An instance is a (usually zero-sized) struct whose methods are the
//! structure's operations. Payloads are universe Values throughout; that is
//! the single small instantiation type at which naturality and quantified
//! types get probed.

use std::rc::Rc;

use crate::gen::{hash_int, hash_label, Gen};
use crate::observe::Observation;
use crate::value::{SampledFn, Value};
use crate::writer::{Multi, Writer};

pub trait Functor {
    type Val: Clone + 'static;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val;

    /// Generate a container whose payloads come from `payload`.
    fn generate_with(&self, g: &mut Gen, payload: &mut dyn FnMut(&mut Gen) -> Value)
        -> Self::Val;

    /// Generate with bounded-integer payloads.
    fn generate(&self, g: &mut Gen) -> Self::Val {
        self.generate_with(g, &mut |g| g.int_value())
    }

    /// Generate with function payloads (for applicative function sides).
    fn generate_funs(&self, g: &mut Gen) -> Self::Val {
        self.generate_with(g, &mut |g| g.fun_value())
    }

    fn observe(&self, v: &Self::Val) -> Observation;
}

/// Interpretation into Multi. Collapse commutes with fmap for every instance,
/// which is what makes it a legitimate quotient-respecting observation for
/// existential wrappers.
pub trait Collapse: Functor {
    fn collapse(&self, v: &Self::Val) -> Multi;
}

pub trait Applicative: Functor {
    fn pure_v(&self, v: Value) -> Self::Val;
    fn ap(&self, f: &Self::Val, x: &Self::Val) -> Self::Val;
}

pub trait Monoidal: Functor {
    /// The container holding unit.
    fn unit(&self) -> Self::Val;
    /// Pair the payloads of two containers.
    fn tensor(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
}

/// An effectful continuation for monad law testing.
#[derive(Clone)]
pub struct KleisliFn<T> {
    f: Rc<dyn Fn(&Value) -> T>,
}

impl<T> KleisliFn<T> {
    pub fn new(f: impl Fn(&Value) -> T + 'static) -> KleisliFn<T> {
        KleisliFn { f: Rc::new(f) }
    }

    pub fn apply(&self, v: &Value) -> T {
        (self.f)(v)
    }
}

pub trait Monad: Functor {
    fn ret(&self, v: Value) -> Self::Val;

    /// Continuations arrive boxed and clonable so instances that suspend
    /// them (the codensity form) can keep them alive.
    fn bind(&self, m: &Self::Val, k: &KleisliFn<Self::Val>) -> Self::Val;

    /// A generated continuation whose effects depend on the input value.
    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Self::Val>;
}

/// `pure` and `ap` derived from `unit` and `tensor`.
pub fn ap_from_monoidal<F: Monoidal>(d: &F, f: &F::Val, x: &F::Val) -> F::Val {
    d.fmap(&crate::value::apply_fn(), &d.tensor(f, x))
}

/// `unit` and `tensor` derived from `pure` and `ap`.
pub fn tensor_from_ap<F: Applicative>(d: &F, a: &F::Val, b: &F::Val) -> F::Val {
    d.ap(&d.ap(&d.pure_v(crate::value::curried_pair()), a), b)
}

/// Identity functor.
#[derive(Clone, Copy, Default)]
pub struct IdF;

impl Functor for IdF {
    type Val = Value;

    fn fmap(&self, f: &SampledFn, v: &Value) -> Value {
        f.apply(v)
    }

    fn generate_with(&self, g: &mut Gen, payload: &mut dyn FnMut(&mut Gen) -> Value) -> Value {
        payload(g)
    }

    fn observe(&self, v: &Value) -> Observation {
        Observation::of_value(v)
    }
}

impl Collapse for IdF {
    fn collapse(&self, v: &Value) -> Multi {
        Multi::pure(v.clone())
    }
}

impl Applicative for IdF {
    fn pure_v(&self, v: Value) -> Value {
        v
    }

    fn ap(&self, f: &Value, x: &Value) -> Value {
        f.as_fun().apply(x)
    }
}

impl Monoidal for IdF {
    fn unit(&self) -> Value {
        Value::Unit
    }

    fn tensor(&self, a: &Value, b: &Value) -> Value {
        Value::pair(a.clone(), b.clone())
    }
}

impl Monad for IdF {
    fn ret(&self, v: Value) -> Value {
        v
    }

    fn bind(&self, m: &Value, k: &KleisliFn<Value>) -> Value {
        k.apply(m)
    }

    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Value> {
        let salt = g.seed();
        KleisliFn::new(move |v| Value::Int(hash_int(salt, v)))
    }
}

/// List functor with cartesian applicative structure.
#[derive(Clone, Copy, Default)]
pub struct ListF;

impl Functor for ListF {
    type Val = Vec<Value>;

    fn fmap(&self, f: &SampledFn, v: &Vec<Value>) -> Vec<Value> {
        v.iter().map(|x| f.apply(x)).collect()
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Vec<Value> {
        let n = g.len();
        (0..n).map(|_| payload(g)).collect()
    }

    fn observe(&self, v: &Vec<Value>) -> Observation {
        Observation::of_value(&Value::list(v.clone()))
    }
}

impl Collapse for ListF {
    fn collapse(&self, v: &Vec<Value>) -> Multi {
        Multi::new(Vec::new(), v.clone())
    }
}

impl Applicative for ListF {
    fn pure_v(&self, v: Value) -> Vec<Value> {
        vec![v]
    }

    fn ap(&self, f: &Vec<Value>, x: &Vec<Value>) -> Vec<Value> {
        let mut out = Vec::with_capacity(f.len() * x.len());
        for g in f {
            for a in x {
                out.push(g.as_fun().apply(a));
            }
        }
        out
    }
}

impl Monoidal for ListF {
    fn unit(&self) -> Vec<Value> {
        vec![Value::Unit]
    }

    fn tensor(&self, a: &Vec<Value>, b: &Vec<Value>) -> Vec<Value> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(Value::pair(x.clone(), y.clone()));
            }
        }
        out
    }
}

/// Writer functor: the canonical observable effect.
#[derive(Clone, Copy, Default)]
pub struct WriterF;

impl Functor for WriterF {
    type Val = Writer;

    fn fmap(&self, f: &SampledFn, v: &Writer) -> Writer {
        v.map(f)
    }

    fn generate_with(&self, g: &mut Gen, payload: &mut dyn FnMut(&mut Gen) -> Value) -> Writer {
        let n = g.nat(3);
        let log = (0..n).map(|_| g.label()).collect();
        Writer::new(log, payload(g))
    }

    fn observe(&self, v: &Writer) -> Observation {
        v.observe()
    }
}

impl Collapse for WriterF {
    fn collapse(&self, v: &Writer) -> Multi {
        Multi::new(v.log.clone(), vec![v.val.clone()])
    }
}

impl Applicative for WriterF {
    fn pure_v(&self, v: Value) -> Writer {
        Writer::ret(v)
    }

    fn ap(&self, f: &Writer, x: &Writer) -> Writer {
        Writer::ap(f, x)
    }
}

impl Monoidal for WriterF {
    fn unit(&self) -> Writer {
        Writer::ret(Value::Unit)
    }

    fn tensor(&self, a: &Writer, b: &Writer) -> Writer {
        let mut log = a.log.clone();
        log.extend(b.log.iter().cloned());
        Writer::new(log, Value::pair(a.val.clone(), b.val.clone()))
    }
}

impl Monad for WriterF {
    fn ret(&self, v: Value) -> Writer {
        Writer::ret(v)
    }

    fn bind(&self, m: &Writer, k: &KleisliFn<Writer>) -> Writer {
        m.bind(&|v| k.apply(v))
    }

    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Writer> {
        let label_salt = g.seed();
        let val_salt = g.seed();
        // The emitted label depends on the input, so reordered effects differ.
        KleisliFn::new(move |v| {
            Writer::tell(&hash_label(label_salt, v), Value::Int(hash_int(val_salt, v)))
        })
    }
}

/// Multi as a functor dictionary; also the observation applicative that
/// existential structures fold into.
#[derive(Clone, Copy, Default)]
pub struct MultiF;

impl Functor for MultiF {
    type Val = Multi;

    fn fmap(&self, f: &SampledFn, v: &Multi) -> Multi {
        v.map(f)
    }

    fn generate_with(&self, g: &mut Gen, payload: &mut dyn FnMut(&mut Gen) -> Value) -> Multi {
        let n = g.nat(3);
        let log = (0..n).map(|_| g.label()).collect();
        let vals = (0..g.nat(3) + 1).map(|_| payload(g)).collect();
        Multi::new(log, vals)
    }

    fn observe(&self, v: &Multi) -> Observation {
        v.observe()
    }
}

impl Collapse for MultiF {
    fn collapse(&self, v: &Multi) -> Multi {
        v.clone()
    }
}

impl Applicative for MultiF {
    fn pure_v(&self, v: Value) -> Multi {
        Multi::pure(v)
    }

    fn ap(&self, f: &Multi, x: &Multi) -> Multi {
        Multi::ap(f, x)
    }
}

impl Monoidal for MultiF {
    fn unit(&self) -> Multi {
        Multi::pure(Value::Unit)
    }

    fn tensor(&self, a: &Multi, b: &Multi) -> Multi {
        Multi::tensor(a, b)
    }
}
