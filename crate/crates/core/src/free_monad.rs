//! The free monad over an effect signature and its codensity representation.
//!
//! A signature is a container shape, generic in the payload type via a GAT.
//! The free monad is the inductive tree over that shape; bind substitutes at
//! the leaves, rebuilding every node above them, which is the quadratic cost
//! the codensity form avoids. Codensity values are continuation-accepting
//! closures quantified over the answer payload; quantification is encoded as
//! a trait with a generic method.

use std::rc::Rc;

use crate::count;
use crate::functor::{Functor, KleisliFn, Monad};
use crate::gen::Gen;
use crate::observe::Observation;
use crate::value::{fnv1a, SampledFn, Value};
use crate::writer::Writer;

pub trait Signature: Clone + 'static {
    type App<T: Clone + 'static>: Clone + 'static;

    fn map_node<A: Clone + 'static, B: Clone + 'static>(
        &self,
        node: &Self::App<A>,
        f: &mut dyn FnMut(&A) -> B,
    ) -> Self::App<B>;

    fn gen_node<A: Clone + 'static>(
        &self,
        g: &mut Gen,
        fill: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Self::App<A>;

    fn encode_node<A: Clone + 'static>(
        &self,
        node: &Self::App<A>,
        enc: &mut dyn FnMut(&A) -> String,
    ) -> String;
}

/// Binary branching: the shape that makes naive bind quadratic.
#[derive(Clone, Copy, Default)]
pub struct PairSig;

impl Signature for PairSig {
    type App<T: Clone + 'static> = (T, T);

    fn map_node<A: Clone + 'static, B: Clone + 'static>(
        &self,
        node: &(A, A),
        f: &mut dyn FnMut(&A) -> B,
    ) -> (B, B) {
        (f(&node.0), f(&node.1))
    }

    fn gen_node<A: Clone + 'static>(
        &self,
        g: &mut Gen,
        fill: &mut dyn FnMut(&mut Gen) -> A,
    ) -> (A, A) {
        (fill(g), fill(g))
    }

    fn encode_node<A: Clone + 'static>(
        &self,
        node: &(A, A),
        enc: &mut dyn FnMut(&A) -> String,
    ) -> String {
        format!("({}, {})", enc(&node.0), enc(&node.1))
    }
}

/// A labelled output followed by a continuation: the shape whose programs
/// are traces.
#[derive(Clone, Copy, Default)]
pub struct ConsoleSig;

impl Signature for ConsoleSig {
    type App<T: Clone + 'static> = (String, T);

    fn map_node<A: Clone + 'static, B: Clone + 'static>(
        &self,
        node: &(String, A),
        f: &mut dyn FnMut(&A) -> B,
    ) -> (String, B) {
        (node.0.clone(), f(&node.1))
    }

    fn gen_node<A: Clone + 'static>(
        &self,
        g: &mut Gen,
        fill: &mut dyn FnMut(&mut Gen) -> A,
    ) -> (String, A) {
        (g.label(), fill(g))
    }

    fn encode_node<A: Clone + 'static>(
        &self,
        node: &(String, A),
        enc: &mut dyn FnMut(&A) -> String,
    ) -> String {
        format!("Output(\"{}\", {})", node.0, enc(&node.1))
    }
}

/// One payload, no structure. Used as an outer container in the exponential
/// round trips.
#[derive(Clone, Copy, Default)]
pub struct IdSig;

impl Signature for IdSig {
    type App<T: Clone + 'static> = T;

    fn map_node<A: Clone + 'static, B: Clone + 'static>(
        &self,
        node: &A,
        f: &mut dyn FnMut(&A) -> B,
    ) -> B {
        f(node)
    }

    fn gen_node<A: Clone + 'static>(
        &self,
        g: &mut Gen,
        fill: &mut dyn FnMut(&mut Gen) -> A,
    ) -> A {
        fill(g)
    }

    fn encode_node<A: Clone + 'static>(
        &self,
        node: &A,
        enc: &mut dyn FnMut(&A) -> String,
    ) -> String {
        enc(node)
    }
}

/// Any number of payloads. The other outer container for the exponential
/// round trips.
#[derive(Clone, Copy, Default)]
pub struct ListSig;

impl Signature for ListSig {
    type App<T: Clone + 'static> = Vec<T>;

    fn map_node<A: Clone + 'static, B: Clone + 'static>(
        &self,
        node: &Vec<A>,
        f: &mut dyn FnMut(&A) -> B,
    ) -> Vec<B> {
        node.iter().map(f).collect()
    }

    fn gen_node<A: Clone + 'static>(
        &self,
        g: &mut Gen,
        fill: &mut dyn FnMut(&mut Gen) -> A,
    ) -> Vec<A> {
        let n = g.nat(2) + 1;
        (0..n).map(|_| fill(g)).collect()
    }

    fn encode_node<A: Clone + 'static>(
        &self,
        node: &Vec<A>,
        enc: &mut dyn FnMut(&A) -> String,
    ) -> String {
        let parts: Vec<String> = node.iter().map(enc).collect();
        format!("[{}]", parts.join(","))
    }
}

pub enum Free<S: Signature, A: Clone + 'static> {
    Ret(A),
    Con(Rc<S::App<Free<S, A>>>),
}

impl<S: Signature, A: Clone + 'static> Clone for Free<S, A> {
    fn clone(&self) -> Self {
        match self {
            Free::Ret(a) => Free::Ret(a.clone()),
            Free::Con(node) => Free::Con(node.clone()),
        }
    }
}

/// Node constructor. Every call is one tick of the allocation counter; it is
/// the unit of the complexity claims.
pub fn con<S: Signature, A: Clone + 'static>(_sig: &S, node: S::App<Free<S, A>>) -> Free<S, A> {
    count::bump();
    Free::Con(Rc::new(node))
}

/// Substitute at the leaves, changing the payload type. Rebuilds the entire
/// spine above every leaf.
pub fn bind_leaves<S: Signature, A: Clone + 'static, B: Clone + 'static>(
    sig: &S,
    m: &Free<S, A>,
    k: &dyn Fn(&A) -> Free<S, B>,
) -> Free<S, B> {
    match m {
        Free::Ret(a) => k(a),
        Free::Con(node) => con(sig, sig.map_node(node, &mut |sub| bind_leaves(sig, sub, k))),
    }
}

pub fn fm_ret<S: Signature>(a: Value) -> Free<S, Value> {
    Free::Ret(a)
}

pub fn fm_bind<S: Signature>(
    sig: &S,
    m: &Free<S, Value>,
    k: &dyn Fn(&Value) -> Free<S, Value>,
) -> Free<S, Value> {
    bind_leaves(sig, m, k)
}

/// One node over immediate returns.
pub fn fm_ins<S: Signature>(sig: &S, node: &S::App<Value>) -> Free<S, Value> {
    con(sig, sig.map_node(node, &mut |v| Free::Ret(v.clone())))
}

pub fn encode_free<S: Signature, A: Clone + 'static>(
    sig: &S,
    m: &Free<S, A>,
    enc_leaf: &mut dyn FnMut(&A) -> String,
) -> String {
    match m {
        Free::Ret(a) => format!("Ret {}", enc_leaf(a)),
        Free::Con(node) => format!(
            "Con {}",
            sig.encode_node(node, &mut |sub| encode_free(sig, sub, enc_leaf))
        ),
    }
}

pub fn observe_free<S: Signature>(sig: &S, m: &Free<S, Value>) -> Observation {
    Observation::new(encode_free(sig, m, &mut |v| v.encode()), Vec::new())
}

/// Fold through an algebra into any carrier; the unique extension of `alg`
/// along `fm_ins` when the carrier is a monad and `alg` its effect handler.
pub fn fold_free<S: Signature, T: Clone + 'static>(
    sig: &S,
    ret: &dyn Fn(&Value) -> T,
    alg: &dyn Fn(&S::App<T>) -> T,
    m: &Free<S, Value>,
) -> T {
    match m {
        Free::Ret(v) => ret(v),
        Free::Con(node) => alg(&sig.map_node(node, &mut |sub| fold_free(sig, ret, alg, sub))),
    }
}

/// Writer interpretation of console programs: each output prepends its label.
pub fn console_to_writer(m: &Free<ConsoleSig, Value>) -> Writer {
    fold_free(
        &ConsoleSig,
        &|v| Writer::ret(v.clone()),
        &|(label, w): &(String, Writer)| {
            let mut log = vec![label.clone()];
            log.extend(w.log.iter().cloned());
            Writer::new(log, w.val.clone())
        },
        m,
    )
}

fn gen_free<S: Signature>(
    sig: &S,
    g: &mut Gen,
    depth: usize,
    payload: &mut dyn FnMut(&mut Gen) -> Value,
) -> Free<S, Value> {
    if depth == 0 || g.nat(3) == 0 {
        Free::Ret(payload(g))
    } else {
        con(
            sig,
            sig.gen_node(g, &mut |g| gen_free(sig, g, depth - 1, payload)),
        )
    }
}

/// Free monad dictionary at value payloads.
#[derive(Clone, Copy, Default)]
pub struct FreeMonadF<S: Signature> {
    pub sig: S,
}

impl<S: Signature> Functor for FreeMonadF<S> {
    type Val = Free<S, Value>;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val {
        bind_leaves(&self.sig, v, &|a| Free::Ret(f.apply(a)))
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        let depth = g.nat(3) + 1;
        gen_free(&self.sig, g, depth, payload)
    }

    fn observe(&self, v: &Self::Val) -> Observation {
        observe_free(&self.sig, v)
    }
}

impl<S: Signature> Monad for FreeMonadF<S> {
    fn ret(&self, v: Value) -> Self::Val {
        Free::Ret(v)
    }

    fn bind(&self, m: &Self::Val, k: &KleisliFn<Self::Val>) -> Self::Val {
        fm_bind(&self.sig, m, &|v| k.apply(v))
    }

    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Self::Val> {
        let salt = g.seed();
        let d = self.clone();
        KleisliFn::new(move |v| {
            let mut g = Gen::new(salt ^ fnv1a(0, &v.encode()), 2);
            d.generate(&mut g)
        })
    }
}

/// The exponential between free monads: accept a continuation into the first
/// and produce a tree in the second. The answer payload of the quantified
/// side is fixed to the value universe (the harness's equality type); the
/// awaited payload X stays generic so the uncurrying below can pass the
/// identity continuation at a tree type.
pub struct CodExp<SF: Signature, SG: Signature, X: Clone + 'static> {
    run: Rc<dyn Fn(&dyn Fn(&X) -> Free<SF, Value>) -> Free<SG, Value>>,
}

impl<SF: Signature, SG: Signature, X: Clone + 'static> Clone for CodExp<SF, SG, X> {
    fn clone(&self) -> Self {
        CodExp {
            run: self.run.clone(),
        }
    }
}

impl<SF: Signature, SG: Signature, X: Clone + 'static> CodExp<SF, SG, X> {
    pub fn new(
        run: impl Fn(&dyn Fn(&X) -> Free<SF, Value>) -> Free<SG, Value> + 'static,
    ) -> Self {
        CodExp { run: Rc::new(run) }
    }

    pub fn at(&self, k: &dyn Fn(&X) -> Free<SF, Value>) -> Free<SG, Value> {
        (self.run)(k)
    }
}

pub type Codensity<S, X> = CodExp<S, S, X>;

pub fn cod_ret<S: Signature, X: Clone + 'static>(x: X) -> Codensity<S, X> {
    CodExp::new(move |k| k(&x))
}

pub fn cod_bind<S: Signature, X: Clone + 'static, Z: Clone + 'static>(
    m: &Codensity<S, X>,
    f: impl Fn(&X) -> Codensity<S, Z> + 'static,
) -> Codensity<S, Z> {
    let m = m.clone();
    CodExp::new(move |k| m.at(&|x: &X| f(x).at(k)))
}

/// The representation: a tree becomes "bind me with whatever comes next".
pub fn cod_rep<S: Signature, X: Clone + 'static>(sig: &S, m: &Free<S, X>) -> Codensity<S, X> {
    let sig = sig.clone();
    let m = m.clone();
    CodExp::new(move |k| bind_leaves(&sig, &m, k))
}

/// Run with the trivial continuation.
pub fn cod_abs<S: Signature>(c: &Codensity<S, Value>) -> Free<S, Value> {
    c.at(&|x: &Value| Free::Ret(x.clone()))
}

/// Codensity monad dictionary, observed through `cod_abs`.
#[derive(Clone, Copy, Default)]
pub struct CodensityF<S: Signature> {
    pub sig: S,
}

impl<S: Signature> CodensityF<S> {
    fn base(&self) -> FreeMonadF<S> {
        FreeMonadF { sig: self.sig.clone() }
    }
}

impl<S: Signature> Functor for CodensityF<S> {
    type Val = Codensity<S, Value>;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val {
        let m = v.clone();
        let f = f.clone();
        CodExp::new(move |k| m.at(&|x: &Value| k(&f.apply(x))))
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        // Representation images plus one explicit bind layer, so law trials
        // also cover values outside the image of cod_rep.
        let tree = self.base().generate_with(g, payload);
        let rep = cod_rep(&self.sig, &tree);
        if g.nat(2) == 0 {
            rep
        } else {
            let k = self.base().gen_kleisli(g);
            let sig = self.sig.clone();
            cod_bind(&rep, move |x| cod_rep(&sig, &k.apply(x)))
        }
    }

    fn observe(&self, v: &Self::Val) -> Observation {
        observe_free(&self.sig, &cod_abs(v))
    }
}

impl<S: Signature> Monad for CodensityF<S> {
    fn ret(&self, v: Value) -> Self::Val {
        cod_ret(v)
    }

    fn bind(&self, m: &Self::Val, k: &KleisliFn<Self::Val>) -> Self::Val {
        let k = k.clone();
        cod_bind(m, move |x| k.apply(x))
    }

    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Self::Val> {
        let inner = self.base().gen_kleisli(g);
        let sig = self.sig.clone();
        KleisliFn::new(move |v| cod_rep(&sig, &inner.apply(v)))
    }
}

/// A natural transformation out of a composite, probed at the value
/// universe: collapse an H-container of F-trees into a G-tree.
pub trait FreeNat<H: Signature, SF: Signature, SG: Signature> {
    fn at(&self, hfx: &H::App<Free<SF, Value>>) -> Free<SG, Value>;
}

/// A natural transformation into the exponential. The payload parameter is a
/// generic method, so values of this trait are used by static dispatch; the
/// uncurrying instantiates it at a tree payload.
pub trait ExpNat<H: Signature, SF: Signature, SG: Signature> {
    fn at<Y: Clone + 'static>(&self, hy: &H::App<Y>) -> CodExp<SF, SG, Y>;
}

/// Currying direction: map the container's payloads through the continuation,
/// then collapse.
pub fn exp_to<H, SF, SG, Y>(
    h: &H,
    t: &Rc<dyn FreeNat<H, SF, SG>>,
    hy: &H::App<Y>,
) -> CodExp<SF, SG, Y>
where
    H: Signature,
    SF: Signature,
    SG: Signature,
    Y: Clone + 'static,
{
    let h = h.clone();
    let t = t.clone();
    let hy = hy.clone();
    CodExp::new(move |k| t.at(&h.map_node(&hy, &mut |y| k(y))))
}

/// A `ExpNat` given pointwise by `exp_to`; one side of the round trip.
pub struct ExpToNat<H: Signature, SF: Signature, SG: Signature> {
    pub h: H,
    pub t: Rc<dyn FreeNat<H, SF, SG>>,
}

impl<H: Signature, SF: Signature, SG: Signature> ExpNat<H, SF, SG> for ExpToNat<H, SF, SG> {
    fn at<Y: Clone + 'static>(&self, hy: &H::App<Y>) -> CodExp<SF, SG, Y> {
        exp_to(&self.h, &self.t, hy)
    }
}

/// Uncurrying direction: instantiate the acceptor at the tree payload and
/// feed it the identity continuation.
pub struct ExpFromNat<H: Signature, SF: Signature, SG: Signature, N: ExpNat<H, SF, SG>> {
    s: Rc<N>,
    _shapes: std::marker::PhantomData<(H, SF, SG)>,
}

impl<H, SF, SG, N> FreeNat<H, SF, SG> for ExpFromNat<H, SF, SG, N>
where
    H: Signature,
    SF: Signature,
    SG: Signature,
    N: ExpNat<H, SF, SG> + 'static,
{
    fn at(&self, hfx: &H::App<Free<SF, Value>>) -> Free<SG, Value> {
        self.s
            .at::<Free<SF, Value>>(hfx)
            .at(&|fx: &Free<SF, Value>| fx.clone())
    }
}

pub fn exp_from<H, SF, SG, N>(s: &Rc<N>) -> Rc<dyn FreeNat<H, SF, SG>>
where
    H: Signature,
    SF: Signature,
    SG: Signature,
    N: ExpNat<H, SF, SG> + 'static,
{
    Rc::new(ExpFromNat {
        s: s.clone(),
        _shapes: std::marker::PhantomData,
    })
}
