//! Pre-arrows as monoids of profunctors and arrows as monoids of strong
//! profunctors: the profunctor tensor, the free pre-arrow, the exponential
//! that hosts the pre-arrow Cayley representation, the Tambara construction
//! that freely adds a strength, and the arrow representation built on it.
//!
//! Profunctor values are observed on caller-supplied probe inputs; values
//! with a hidden middle type (the tensor) or a quantifier (exponentials,
//! Tambara) are observed after interpreting into the Kleisli-writer
//! pre-arrow or applying at the unit payload, mirroring how the functor
//! side collapses into Multi.

use std::rc::Rc;

use crate::count;
use crate::functor::KleisliFn;
use crate::gen::{hash_label, Gen};
use crate::observe::Observation;
use crate::value::{SampledFn, Value};
use crate::writer::Writer;

pub trait Profunctor {
    type Pro: Clone + 'static;

    /// Contravariant in the input side, covariant in the output side.
    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro;

    fn generate(&self, g: &mut Gen) -> Self::Pro;

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation;
}

pub trait PreArrow: Profunctor {
    fn arr(&self, f: &SampledFn) -> Self::Pro;

    /// Diagrammatic order: `a` runs first, then `b`.
    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro;
}

pub trait Strong: Profunctor {
    /// Thread an untouched second component through.
    fn first(&self, p: &Self::Pro) -> Self::Pro;
}

pub trait Arrow: PreArrow + Strong {}

impl<T: PreArrow + Strong> Arrow for T {}

/// Interpretation into the canonical observable pre-arrow. The analogue of
/// collapsing a functor into Multi: anything interpretable here can be
/// compared across hidden-type boundaries.
pub trait ProCollapse: Profunctor {
    fn collapse(&self, p: &Self::Pro) -> KleisliFn<Writer>;
}

pub fn observe_kleisli(k: &KleisliFn<Writer>, probes: &[Value]) -> Observation {
    let mut entries = Vec::new();
    let mut trace = Vec::new();
    for p in probes {
        let w = k.apply(p);
        entries.push(Value::pair(
            w.val.clone(),
            Value::list(w.log.iter().map(|s| Value::str(s)).collect()),
        ));
        trace.extend(w.log);
    }
    Observation::new(Value::list(entries).encode(), trace)
}

/// Plain functions.
#[derive(Clone, Copy, Default)]
pub struct HomP;

impl Profunctor for HomP {
    type Pro = SampledFn;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        SampledFn::compose(post, &SampledFn::compose(p, pre))
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        g.int_fn()
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        let outs: Vec<Value> = probes.iter().map(|v| p.apply(v)).collect();
        Observation::new(Value::list(outs).encode(), Vec::new())
    }
}

impl PreArrow for HomP {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        f.clone()
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        SampledFn::compose(b, a)
    }
}

impl Strong for HomP {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        SampledFn::on_fst(p)
    }
}

impl ProCollapse for HomP {
    fn collapse(&self, p: &Self::Pro) -> KleisliFn<Writer> {
        let p = p.clone();
        KleisliFn::new(move |v| Writer::ret(p.apply(v)))
    }
}

/// Effectful functions into writer. The canonical pre-arrow with an
/// observable composition order.
#[derive(Clone, Copy, Default)]
pub struct KleisliWP;

impl Profunctor for KleisliWP {
    type Pro = KleisliFn<Writer>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        let (pre, post, p) = (pre.clone(), post.clone(), p.clone());
        KleisliFn::new(move |v| p.apply(&pre.apply(v)).map(&post))
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        let salt = g.seed();
        let f = g.int_fn();
        KleisliFn::new(move |v| Writer {
            log: vec![hash_label(salt, v)],
            val: f.apply(v),
        })
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        observe_kleisli(p, probes)
    }
}

impl PreArrow for KleisliWP {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        let f = f.clone();
        KleisliFn::new(move |v| Writer::ret(f.apply(v)))
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        let (a, b) = (a.clone(), b.clone());
        KleisliFn::new(move |v| a.apply(v).bind(&|u| b.apply(u)))
    }
}

impl Strong for KleisliWP {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        let p = p.clone();
        KleisliFn::new(move |v| {
            let (x, z) = v.as_pair();
            let z = z.clone();
            p.apply(x)
                .map(&SampledFn::new(move |y| Value::pair(y.clone(), z.clone()), Vec::new()))
        })
    }
}

impl ProCollapse for KleisliWP {
    fn collapse(&self, p: &Self::Pro) -> KleisliFn<Writer> {
        p.clone()
    }
}

fn double_lift(f: &SampledFn) -> SampledFn {
    let f = f.clone();
    SampledFn::new(
        move |v| {
            let (a, b) = v.as_pair();
            Value::pair(f.apply(a), f.apply(b))
        },
        Vec::new(),
    )
}

fn double_dimap(pre: &SampledFn, post: &SampledFn, p: &SampledFn) -> SampledFn {
    SampledFn::compose(
        &double_lift(post),
        &SampledFn::compose(p, &double_lift(pre)),
    )
}

fn double_generate(g: &mut Gen) -> SampledFn {
    let f = g.int_fn();
    let h = g.int_fn();
    let cross = g.nat(2) == 0;
    SampledFn::new(
        move |v| {
            let (a, b) = v.as_pair();
            if cross {
                Value::pair(f.apply(b), h.apply(a))
            } else {
                Value::pair(f.apply(a), h.apply(b))
            }
        },
        Vec::new(),
    )
}

fn double_observe(p: &SampledFn, probes: &[Value]) -> Observation {
    // Pairs of distinct adjacent probes, so the two components of the run
    // function can be told apart.
    let n = probes.len();
    let outs: Vec<Value> = (0..n)
        .map(|i| p.apply(&Value::pair(probes[i].clone(), probes[(i + 1) % n].clone())))
        .collect();
    Observation::new(Value::list(outs).encode(), Vec::new())
}

/// Pair-transformers: the profunctor that admits two different strengths.
pub fn double_strength_a(p: &SampledFn) -> SampledFn {
    let p = p.clone();
    SampledFn::new(
        move |v| {
            let (xz, xz2) = v.as_pair();
            let (x, z) = xz.as_pair();
            let (x2, z2) = xz2.as_pair();
            let (y, y2) = {
                let out = p.apply(&Value::pair(x.clone(), x2.clone()));
                let (y, y2) = out.as_pair();
                (y.clone(), y2.clone())
            };
            Value::pair(Value::pair(y, z.clone()), Value::pair(y2, z2.clone()))
        },
        Vec::new(),
    )
}

/// Same as `double_strength_a` but both outputs carry the first input's
/// second component.
pub fn double_strength_b(p: &SampledFn) -> SampledFn {
    let p = p.clone();
    SampledFn::new(
        move |v| {
            let (xz, xz2) = v.as_pair();
            let (x, z) = xz.as_pair();
            let (x2, _z2) = xz2.as_pair();
            let (y, y2) = {
                let out = p.apply(&Value::pair(x.clone(), x2.clone()));
                let (y, y2) = out.as_pair();
                (y.clone(), y2.clone())
            };
            Value::pair(Value::pair(y, z.clone()), Value::pair(y2, z.clone()))
        },
        Vec::new(),
    )
}

/// The Double profunctor with the first strength.
#[derive(Clone, Copy, Default)]
pub struct DoubleA;

/// The Double profunctor with the second strength.
#[derive(Clone, Copy, Default)]
pub struct DoubleB;

impl Profunctor for DoubleA {
    type Pro = SampledFn;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        double_dimap(pre, post, p)
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        double_generate(g)
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        double_observe(p, probes)
    }
}

impl Strong for DoubleA {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        double_strength_a(p)
    }
}

impl Profunctor for DoubleB {
    type Pro = SampledFn;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        double_dimap(pre, post, p)
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        double_generate(g)
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        double_observe(p, probes)
    }
}

impl Strong for DoubleB {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        double_strength_b(p)
    }
}

/// Two profunctor values glued over a hidden middle type. Equality is only
/// meaningful after interpretation, which realises the coend quotient.
pub struct ProTensor<F: Profunctor, G: Profunctor> {
    pub left: F::Pro,
    pub right: G::Pro,
}

impl<F: Profunctor, G: Profunctor> Clone for ProTensor<F, G> {
    fn clone(&self) -> Self {
        ProTensor {
            left: self.left.clone(),
            right: self.right.clone(),
        }
    }
}

pub fn pro_tensor<F: Profunctor, G: Profunctor>(left: F::Pro, right: G::Pro) -> ProTensor<F, G> {
    ProTensor { left, right }
}

#[derive(Clone, Copy, Default)]
pub struct ProTensorF<F, G> {
    pub f: F,
    pub g: G,
}

impl<F, G> Profunctor for ProTensorF<F, G>
where
    F: ProCollapse + Clone + 'static,
    G: ProCollapse + Clone + 'static,
{
    type Pro = ProTensor<F, G>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        ProTensor {
            left: self.f.dimap(pre, &SampledFn::identity(), &p.left),
            right: self.g.dimap(&SampledFn::identity(), post, &p.right),
        }
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        ProTensor {
            left: self.f.generate(g),
            right: self.g.generate(g),
        }
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        observe_kleisli(&self.collapse(p), probes)
    }
}

impl<F, G> ProCollapse for ProTensorF<F, G>
where
    F: ProCollapse + Clone + 'static,
    G: ProCollapse + Clone + 'static,
{
    fn collapse(&self, p: &Self::Pro) -> KleisliFn<Writer> {
        KleisliWP.compose(&self.f.collapse(&p.left), &self.g.collapse(&p.right))
    }
}

/// Collapse a function component on the left of the tensor.
pub fn tensor_lambda<P: Profunctor>(d: &P, t: &ProTensor<HomP, P>) -> P::Pro {
    d.dimap(&t.left, &SampledFn::identity(), &t.right)
}

pub fn tensor_lambda_inv<P: Profunctor>(x: &P::Pro) -> ProTensor<HomP, P> {
    ProTensor {
        left: SampledFn::identity(),
        right: x.clone(),
    }
}

/// Collapse a function component on the right of the tensor.
pub fn tensor_rho<P: Profunctor>(d: &P, t: &ProTensor<P, HomP>) -> P::Pro {
    d.dimap(&SampledFn::identity(), &t.right, &t.left)
}

pub fn tensor_rho_inv<P: Profunctor>(x: &P::Pro) -> ProTensor<P, HomP> {
    ProTensor {
        left: x.clone(),
        right: SampledFn::identity(),
    }
}

pub fn tensor_alpha<F, G, H>(
    t: &ProTensor<ProTensorF<F, G>, H>,
) -> ProTensor<F, ProTensorF<G, H>>
where
    F: ProCollapse + Clone + 'static,
    G: ProCollapse + Clone + 'static,
    H: ProCollapse + Clone + 'static,
{
    ProTensor {
        left: t.left.left.clone(),
        right: ProTensor {
            left: t.left.right.clone(),
            right: t.right.clone(),
        },
    }
}

pub fn tensor_alpha_inv<F, G, H>(
    t: &ProTensor<F, ProTensorF<G, H>>,
) -> ProTensor<ProTensorF<F, G>, H>
where
    F: ProCollapse + Clone + 'static,
    G: ProCollapse + Clone + 'static,
    H: ProCollapse + Clone + 'static,
{
    ProTensor {
        left: ProTensor {
            left: t.left.clone(),
            right: t.right.left.clone(),
        },
        right: t.right.right.clone(),
    }
}

/// Free pre-arrow over an atom profunctor: either a plain function or an
/// atom composed before a rest program.
pub enum FreePre<P: Profunctor> {
    Fun(SampledFn),
    Comp(P::Pro, Rc<FreePre<P>>),
}

impl<P: Profunctor> Clone for FreePre<P> {
    fn clone(&self) -> Self {
        match self {
            FreePre::Fun(f) => FreePre::Fun(f.clone()),
            FreePre::Comp(x, y) => FreePre::Comp(x.clone(), y.clone()),
        }
    }
}

/// Node constructor; every call ticks the counter, which is what the
/// composition complexity witness measures.
pub fn fp_comp<P: Profunctor>(head: P::Pro, tail: FreePre<P>) -> FreePre<P> {
    count::bump();
    FreePre::Comp(head, Rc::new(tail))
}

/// One atom followed by the identity function.
pub fn fp_ins<P: Profunctor>(atom: P::Pro) -> FreePre<P> {
    fp_comp::<P>(atom, FreePre::Fun(SampledFn::identity()))
}

/// Interpret every atom through `nat` into a pre-arrow target; the unique
/// pre-arrow homomorphism extending `nat` along `fp_ins`.
pub fn fp_fold<P, B>(b: &B, nat: &dyn Fn(&P::Pro) -> B::Pro, p: &FreePre<P>) -> B::Pro
where
    P: Profunctor,
    B: PreArrow,
{
    match p {
        FreePre::Fun(f) => b.arr(f),
        FreePre::Comp(x, y) => b.compose(&nat(x), &fp_fold(b, nat, y)),
    }
}

#[derive(Clone, Copy, Default)]
pub struct FreePA<P> {
    pub atom: P,
}

impl<P: ProCollapse + Clone + 'static> Profunctor for FreePA<P> {
    type Pro = FreePre<P>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        match p {
            FreePre::Fun(h) => FreePre::Fun(SampledFn::compose(post, &SampledFn::compose(h, pre))),
            FreePre::Comp(x, y) => fp_comp::<P>(
                self.atom.dimap(pre, &SampledFn::identity(), x),
                self.dimap(&SampledFn::identity(), post, y),
            ),
        }
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        let mut p = FreePre::Fun(g.int_fn());
        for _ in 0..g.nat(3) {
            p = fp_comp::<P>(self.atom.generate(g), p);
        }
        p
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        observe_kleisli(&self.collapse(p), probes)
    }
}

impl<P: ProCollapse + Clone + 'static> PreArrow for FreePA<P> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        FreePre::Fun(f.clone())
    }

    /// A function on the left is absorbed into the head in constant steps;
    /// a node chain on the left is re-traversed, which is the quadratic
    /// cost the representation avoids.
    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        match a {
            FreePre::Fun(f) => match b {
                FreePre::Fun(g) => FreePre::Fun(SampledFn::compose(g, f)),
                FreePre::Comp(x, y) => fp_comp::<P>(
                    self.atom.dimap(f, &SampledFn::identity(), x),
                    y.as_ref().clone(),
                ),
            },
            FreePre::Comp(x, y) => fp_comp::<P>(x.clone(), self.compose(y, b)),
        }
    }
}

impl<P: ProCollapse + Strong + Clone + 'static> Strong for FreePA<P> {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        match p {
            FreePre::Fun(f) => FreePre::Fun(SampledFn::on_fst(f)),
            FreePre::Comp(x, y) => fp_comp::<P>(self.atom.first(x), self.first(y)),
        }
    }
}

impl<P: ProCollapse + Clone + 'static> ProCollapse for FreePA<P> {
    fn collapse(&self, p: &Self::Pro) -> KleisliFn<Writer> {
        fp_fold(&KleisliWP, &|atom| self.atom.collapse(atom), p)
    }
}

/// The profunctor exponential at one instantiation of the hidden result
/// type: transform continuations of the output into continuations of the
/// input.
pub struct ProExp<A: Profunctor, B: Profunctor> {
    run: Rc<dyn Fn(&A::Pro) -> B::Pro>,
}

impl<A: Profunctor, B: Profunctor> Clone for ProExp<A, B> {
    fn clone(&self) -> Self {
        ProExp {
            run: self.run.clone(),
        }
    }
}

impl<A: Profunctor, B: Profunctor> ProExp<A, B> {
    pub fn new(run: impl Fn(&A::Pro) -> B::Pro + 'static) -> Self {
        ProExp { run: Rc::new(run) }
    }

    pub fn run(&self, k: &A::Pro) -> B::Pro {
        (self.run)(k)
    }
}

pub fn exp_dimap<A, B>(
    a: &A,
    b: &B,
    pre: &SampledFn,
    post: &SampledFn,
    e: &ProExp<A, B>,
) -> ProExp<A, B>
where
    A: Profunctor + Clone + 'static,
    B: Profunctor + Clone + 'static,
{
    let (a, b) = (a.clone(), b.clone());
    let (pre, post, e) = (pre.clone(), post.clone(), e.clone());
    ProExp::new(move |k| {
        b.dimap(
            &pre,
            &SampledFn::identity(),
            &e.run(&a.dimap(&post, &SampledFn::identity(), k)),
        )
    })
}

/// Currying for the profunctor tensor: a transformation out of a tensor
/// corresponds to a transformation into the exponential.
pub fn pre_phi<F, G, H>(
    nat: Rc<dyn Fn(&ProTensor<F, G>) -> H::Pro>,
) -> Rc<dyn Fn(&F::Pro) -> ProExp<G, H>>
where
    F: Profunctor + 'static,
    G: Profunctor + 'static,
    H: Profunctor + 'static,
{
    Rc::new(move |f| {
        let nat = nat.clone();
        let f = f.clone();
        ProExp::new(move |g: &G::Pro| {
            nat(&ProTensor {
                left: f.clone(),
                right: g.clone(),
            })
        })
    })
}

pub fn pre_phi_inv<F, G, H>(
    m: Rc<dyn Fn(&F::Pro) -> ProExp<G, H>>,
) -> Rc<dyn Fn(&ProTensor<F, G>) -> H::Pro>
where
    F: Profunctor + 'static,
    G: Profunctor + 'static,
    H: Profunctor + 'static,
{
    Rc::new(move |t| m(&t.left).run(&t.right))
}

/// Representation: compose with me on the left.
pub fn pre_rep<A>(d: &A, x: &A::Pro) -> ProExp<A, A>
where
    A: PreArrow + Clone + 'static,
{
    let d = d.clone();
    let x = x.clone();
    ProExp::new(move |y| d.compose(&x, y))
}

/// Run at the identity function.
pub fn pre_abs<A>(d: &A, e: &ProExp<A, A>) -> A::Pro
where
    A: PreArrow,
{
    e.run(&d.arr(&SampledFn::identity()))
}

/// Pre-arrow dictionary for the representation, observed through `pre_abs`.
#[derive(Clone, Copy, Default)]
pub struct PreExpF<A> {
    pub base: A,
}

impl<A: PreArrow + Clone + 'static> Profunctor for PreExpF<A> {
    type Pro = ProExp<A, A>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        exp_dimap(&self.base, &self.base, pre, post, p)
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        let mut x = self.base.generate(g);
        if g.nat(2) == 0 {
            x = self.base.compose(&x, &self.base.generate(g));
        }
        pre_rep(&self.base, &x)
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        self.base.observe(&pre_abs(&self.base, p), probes)
    }
}

impl<A: PreArrow + Clone + 'static> PreArrow for PreExpF<A> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        let base = self.base.clone();
        let f = f.clone();
        ProExp::new(move |y| base.dimap(&f, &SampledFn::identity(), y))
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        let (a, b) = (a.clone(), b.clone());
        ProExp::new(move |y| a.run(&b.run(y)))
    }
}

/// A profunctor value that threads an arbitrary second component
/// naturally. Stored at the universe instantiation of the quantifier.
pub struct TambaraVal<P: Profunctor> {
    pub inner: P::Pro,
}

impl<P: Profunctor> Clone for TambaraVal<P> {
    fn clone(&self) -> Self {
        TambaraVal {
            inner: self.inner.clone(),
        }
    }
}

/// Generation of pair-shaped values that are natural in the second
/// component; each base profunctor knows how to build them.
pub trait PairNatural: Profunctor {
    fn gen_pair_natural(&self, g: &mut Gen) -> Self::Pro;
}

impl PairNatural for HomP {
    fn gen_pair_natural(&self, g: &mut Gen) -> Self::Pro {
        SampledFn::on_fst(&g.int_fn())
    }
}

impl PairNatural for KleisliWP {
    fn gen_pair_natural(&self, g: &mut Gen) -> Self::Pro {
        let atom = self.generate(g);
        self.first(&atom)
    }
}

impl PairNatural for DoubleA {
    fn gen_pair_natural(&self, g: &mut Gen) -> Self::Pro {
        let atom = double_generate(g);
        if g.nat(2) == 0 {
            double_strength_a(&atom)
        } else {
            double_strength_b(&atom)
        }
    }
}

#[derive(Clone, Copy, Default)]
pub struct TambaraP<P> {
    pub base: P,
}

impl<P: PairNatural + Clone + 'static> Profunctor for TambaraP<P> {
    type Pro = TambaraVal<P>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        TambaraVal {
            inner: self.base.dimap(
                &SampledFn::on_fst(pre),
                &SampledFn::on_fst(post),
                &p.inner,
            ),
        }
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        TambaraVal {
            inner: self.base.gen_pair_natural(g),
        }
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        // Instantiate the hidden component at the unit payload.
        let wrapped: Vec<Value> = probes
            .iter()
            .map(|v| Value::pair(v.clone(), Value::Unit))
            .collect();
        self.base.observe(&p.inner, &wrapped)
    }
}

impl<P: PairNatural + Clone + 'static> Strong for TambaraP<P> {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        TambaraVal {
            inner: self
                .base
                .dimap(&SampledFn::assoc_r(), &SampledFn::assoc_l(), &p.inner),
        }
    }
}

impl<P: PairNatural + PreArrow + Clone + 'static> PreArrow for TambaraP<P> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        TambaraVal {
            inner: self.base.arr(&SampledFn::on_fst(f)),
        }
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        TambaraVal {
            inner: self.base.compose(&a.inner, &b.inner),
        }
    }
}

pub type ProNat<F, G> = Rc<dyn Fn(&<F as Profunctor>::Pro) -> <G as Profunctor>::Pro>;

/// Transpose a transformation out of a strong profunctor through the
/// Tambara construction.
pub fn tambara_phi<A, B>(a: A, nat: ProNat<A, B>) -> Rc<dyn Fn(&A::Pro) -> TambaraVal<B>>
where
    A: Strong + Clone + 'static,
    B: Profunctor + 'static,
{
    Rc::new(move |x| TambaraVal {
        inner: nat(&a.first(x)),
    })
}

pub fn tambara_phi_inv<A, B>(
    b: B,
    m: Rc<dyn Fn(&A::Pro) -> TambaraVal<B>>,
) -> ProNat<A, B>
where
    A: Profunctor + 'static,
    B: Profunctor + Clone + 'static,
{
    Rc::new(move |x| b.dimap(&SampledFn::fst_inv(), &SampledFn::fst(), &m(x).inner))
}

/// The arrow-level representation: transform continuations that consume the
/// output (paired with anything) into continuations that consume the input.
pub struct ArrowRep<A: Profunctor> {
    run: Rc<dyn Fn(&A::Pro) -> A::Pro>,
}

impl<A: Profunctor> Clone for ArrowRep<A> {
    fn clone(&self) -> Self {
        ArrowRep {
            run: self.run.clone(),
        }
    }
}

impl<A: Profunctor> ArrowRep<A> {
    pub fn new(run: impl Fn(&A::Pro) -> A::Pro + 'static) -> Self {
        ArrowRep { run: Rc::new(run) }
    }

    pub fn run(&self, k: &A::Pro) -> A::Pro {
        (self.run)(k)
    }
}

pub fn arrow_rep<A>(d: &A, x: &A::Pro) -> ArrowRep<A>
where
    A: Arrow + Clone + 'static,
{
    let d = d.clone();
    let x = x.clone();
    ArrowRep::new(move |z| d.compose(&d.first(&x), z))
}

pub fn arrow_abs<A>(d: &A, r: &ArrowRep<A>) -> A::Pro
where
    A: Arrow,
{
    d.compose(
        &d.arr(&SampledFn::fst_inv()),
        &r.run(&d.arr(&SampledFn::fst())),
    )
}

/// Arrow dictionary for the representation, observed through `arrow_abs`.
#[derive(Clone, Copy, Default)]
pub struct ArrowRepF<A> {
    pub base: A,
}

impl<A: Arrow + Clone + 'static> Profunctor for ArrowRepF<A> {
    type Pro = ArrowRep<A>;

    fn dimap(&self, pre: &SampledFn, post: &SampledFn, p: &Self::Pro) -> Self::Pro {
        let base = self.base.clone();
        let (pre, post, p) = (pre.clone(), post.clone(), p.clone());
        ArrowRep::new(move |y| {
            base.dimap(
                &SampledFn::on_fst(&pre),
                &SampledFn::identity(),
                &p.run(&base.dimap(&SampledFn::on_fst(&post), &SampledFn::identity(), y)),
            )
        })
    }

    fn generate(&self, g: &mut Gen) -> Self::Pro {
        let mut x = self.base.generate(g);
        if g.nat(2) == 0 {
            x = self.base.compose(&x, &self.base.generate(g));
        }
        arrow_rep(&self.base, &x)
    }

    fn observe(&self, p: &Self::Pro, probes: &[Value]) -> Observation {
        self.base.observe(&arrow_abs(&self.base, p), probes)
    }
}

impl<A: Arrow + Clone + 'static> PreArrow for ArrowRepF<A> {
    fn arr(&self, f: &SampledFn) -> Self::Pro {
        let base = self.base.clone();
        let f = f.clone();
        ArrowRep::new(move |y| base.dimap(&SampledFn::on_fst(&f), &SampledFn::identity(), y))
    }

    fn compose(&self, a: &Self::Pro, b: &Self::Pro) -> Self::Pro {
        let (a, b) = (a.clone(), b.clone());
        ArrowRep::new(move |v| a.run(&b.run(v)))
    }
}

impl<A: Arrow + Clone + 'static> Strong for ArrowRepF<A> {
    fn first(&self, p: &Self::Pro) -> Self::Pro {
        let base = self.base.clone();
        let p = p.clone();
        ArrowRep::new(move |z| {
            base.dimap(
                &SampledFn::assoc_r(),
                &SampledFn::identity(),
                &p.run(&base.dimap(&SampledFn::assoc_l(), &SampledFn::identity(), z)),
            )
        })
    }
}
