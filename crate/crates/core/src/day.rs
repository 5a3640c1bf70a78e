//! Day convolution and the applicative structures it induces.
//!
//! A Day value pairs two effectful payloads with a combining function; the
//! payload types are existential, so equality is always taken after
//! collapsing into the Multi interpretation, never structurally. The free
//! applicative is the list-like iteration of that tensor, and its
//! representation into the exponential is the applicative analogue of
//! difference lists: apply is closure composition, with one materialising
//! pass at the end.

use std::rc::Rc;

use crate::count;
use crate::functor::{Applicative, Collapse, Functor, Monoidal, MultiF};
use crate::gen::Gen;
use crate::observe::Observation;
use crate::value::{fnv1a, SampledFn, Value};
use crate::writer::Multi;

/// A payload-to-payload natural transformation, probed at the value universe.
pub type FNat<F, G> = Rc<dyn Fn(&<F as Functor>::Val) -> <G as Functor>::Val>;

pub struct DayVal<F: Functor, G: Functor> {
    pub left: F::Val,
    pub right: G::Val,
    pub post: SampledFn,
}

impl<F: Functor, G: Functor> Clone for DayVal<F, G> {
    fn clone(&self) -> Self {
        DayVal {
            left: self.left.clone(),
            right: self.right.clone(),
            post: self.post.clone(),
        }
    }
}

pub fn day<F: Functor, G: Functor>(left: F::Val, right: G::Val, post: SampledFn) -> DayVal<F, G> {
    DayVal { left, right, post }
}

/// Mapping only composes into the combining function.
pub fn day_map<F: Functor, G: Functor>(f: &SampledFn, d: &DayVal<F, G>) -> DayVal<F, G> {
    DayVal {
        left: d.left.clone(),
        right: d.right.clone(),
        post: SampledFn::compose(f, &d.post),
    }
}

/// Functor morphisms act on the payloads only.
pub fn day_bimap<F, G, F2, G2>(
    n1: &FNat<F, F2>,
    n2: &FNat<G, G2>,
    d: &DayVal<F, G>,
) -> DayVal<F2, G2>
where
    F: Functor,
    G: Functor,
    F2: Functor,
    G2: Functor,
{
    DayVal {
        left: n1(&d.left),
        right: n2(&d.right),
        post: d.post.clone(),
    }
}

/// The Day tensor of two functor dictionaries, itself a functor.
#[derive(Clone, Copy, Default)]
pub struct DayF<F, G> {
    pub f: F,
    pub g: G,
}

fn table_fn(g: &mut Gen, payload: &mut dyn FnMut(&mut Gen) -> Value) -> SampledFn {
    // A generated function into arbitrary payloads: finitely many sampled
    // outputs selected by input hash.
    let n = g.nat(2) + 2;
    let table: Vec<Value> = (0..n).map(|_| payload(g)).collect();
    let salt = g.seed();
    SampledFn::new(
        move |v| table[(fnv1a(salt, &v.encode()) as usize) % table.len()].clone(),
        Vec::new(),
    )
}

impl<F, G> Functor for DayF<F, G>
where
    F: Collapse + Clone + 'static,
    G: Collapse + Clone + 'static,
{
    type Val = DayVal<F, G>;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val {
        day_map(f, v)
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        let left = self.f.generate(g);
        let right = self.g.generate(g);
        let post = table_fn(g, payload);
        DayVal { left, right, post }
    }

    fn observe(&self, v: &Self::Val) -> Observation {
        self.collapse(v).observe()
    }
}

impl<F, G> Collapse for DayF<F, G>
where
    F: Collapse + Clone + 'static,
    G: Collapse + Clone + 'static,
{
    fn collapse(&self, v: &Self::Val) -> Multi {
        Multi::tensor(&self.f.collapse(&v.left), &self.g.collapse(&v.right)).map(&v.post)
    }
}

/// Embed a payload on the right of the unit: x maps to (unit, x, snd).
pub fn day_lambda<F: Functor>(fx: &F::Val) -> DayVal<crate::functor::IdF, F> {
    DayVal {
        left: Value::Unit,
        right: fx.clone(),
        post: SampledFn::snd(),
    }
}

pub fn day_lambda_inv<F: Functor>(fd: &F, d: &DayVal<crate::functor::IdF, F>) -> F::Val {
    let left = d.left.clone();
    let post = d.post.clone();
    fd.fmap(
        &SampledFn::new(move |x| post.apply(&Value::pair(left.clone(), x.clone())), Vec::new()),
        &d.right,
    )
}

/// Embed a payload on the left of the unit: x maps to (x, unit, fst).
pub fn day_rho<F: Functor>(fx: &F::Val) -> DayVal<F, crate::functor::IdF> {
    DayVal {
        left: fx.clone(),
        right: Value::Unit,
        post: SampledFn::fst(),
    }
}

pub fn day_rho_inv<F: Functor>(fd: &F, d: &DayVal<F, crate::functor::IdF>) -> F::Val {
    let right = d.right.clone();
    let post = d.post.clone();
    fd.fmap(
        &SampledFn::new(move |x| post.apply(&Value::pair(x.clone(), right.clone())), Vec::new()),
        &d.left,
    )
}

/// Symmetry: swap the payloads and precompose the swap.
pub fn day_gamma<F: Functor, G: Functor>(d: &DayVal<F, G>) -> DayVal<G, F> {
    DayVal {
        left: d.right.clone(),
        right: d.left.clone(),
        post: SampledFn::compose(&d.post, &SampledFn::swap()),
    }
}

/// Reassociate (F * G) * H to F * (G * H).
pub fn day_alpha<F, G, H>(d: &DayVal<DayF<F, G>, H>) -> DayVal<F, DayF<G, H>>
where
    F: Collapse + Clone + 'static,
    G: Collapse + Clone + 'static,
    H: Collapse + Clone + 'static,
{
    let inner = d.left.clone();
    let outer_post = d.post.clone();
    let inner_post = inner.post.clone();
    DayVal {
        left: inner.left,
        right: DayVal {
            left: inner.right,
            right: d.right.clone(),
            post: SampledFn::identity(),
        },
        post: SampledFn::new(
            move |v| {
                let (c, de) = v.as_pair();
                let (dd, e) = de.as_pair();
                let cd = inner_post.apply(&Value::pair(c.clone(), dd.clone()));
                outer_post.apply(&Value::pair(cd, e.clone()))
            },
            Vec::new(),
        ),
    }
}

/// Reassociate F * (G * H) to (F * G) * H.
pub fn day_alpha_inv<F, G, H>(d: &DayVal<F, DayF<G, H>>) -> DayVal<DayF<F, G>, H>
where
    F: Collapse + Clone + 'static,
    G: Collapse + Clone + 'static,
    H: Collapse + Clone + 'static,
{
    let inner = d.right.clone();
    let outer_post = d.post.clone();
    let inner_post = inner.post.clone();
    DayVal {
        left: DayVal {
            left: d.left.clone(),
            right: inner.left,
            post: SampledFn::identity(),
        },
        right: inner.right,
        post: SampledFn::new(
            move |v| {
                let (cd, e) = v.as_pair();
                let (c, dd) = cd.as_pair();
                let de = inner_post.apply(&Value::pair(dd.clone(), e.clone()));
                outer_post.apply(&Value::pair(c.clone(), de))
            },
            Vec::new(),
        ),
    }
}

/// A transformation out of a Day tensor corresponds to a two-argument
/// payload-pairing map; this is the outgoing direction.
pub fn theta<F, G, H>(
    nat: Rc<dyn Fn(&DayVal<F, G>) -> H::Val>,
) -> Rc<dyn Fn(&F::Val, &G::Val) -> H::Val>
where
    F: Functor + 'static,
    G: Functor + 'static,
    H: Functor,
{
    Rc::new(move |x, y| {
        nat(&DayVal {
            left: x.clone(),
            right: y.clone(),
            post: SampledFn::identity(),
        })
    })
}

pub fn theta_inv<F, G, H>(
    hd: H,
    pairing: Rc<dyn Fn(&F::Val, &G::Val) -> H::Val>,
) -> Rc<dyn Fn(&DayVal<F, G>) -> H::Val>
where
    F: Functor + 'static,
    G: Functor + 'static,
    H: Functor + Clone + 'static,
{
    Rc::new(move |d| hd.fmap(&d.post, &pairing(&d.left, &d.right)))
}

/// Free applicative: pure payloads or an effect consed onto a rest program,
/// with a combining function at the node.
pub enum FreeAp<F: Functor> {
    Pure(Value),
    Rec {
        eff: F::Val,
        rest: Rc<FreeAp<F>>,
        post: SampledFn,
    },
}

impl<F: Functor> Clone for FreeAp<F> {
    fn clone(&self) -> Self {
        match self {
            FreeAp::Pure(a) => FreeAp::Pure(a.clone()),
            FreeAp::Rec { eff, rest, post } => FreeAp::Rec {
                eff: eff.clone(),
                rest: rest.clone(),
                post: post.clone(),
            },
        }
    }
}

/// Node constructor; every call ticks the counter. A map over a node also
/// lands here, so the count measures combining-function rewrites.
pub fn rec<F: Functor>(eff: F::Val, rest: FreeAp<F>, post: SampledFn) -> FreeAp<F> {
    count::bump();
    FreeAp::Rec {
        eff,
        rest: Rc::new(rest),
        post,
    }
}

pub fn fa_pure<F: Functor>(a: Value) -> FreeAp<F> {
    FreeAp::Pure(a)
}

/// Constant size: composes into the head node's combining function.
pub fn fa_map<F: Functor>(f: &SampledFn, p: &FreeAp<F>) -> FreeAp<F> {
    match p {
        FreeAp::Pure(a) => FreeAp::Pure(f.apply(a)),
        FreeAp::Rec { eff, rest, post } => {
            count::bump();
            FreeAp::Rec {
                eff: eff.clone(),
                rest: rest.clone(),
                post: SampledFn::compose(f, post),
            }
        }
    }
}

/// One effect with its payload passed straight through.
pub fn fa_ins<F: Functor>(eff: F::Val) -> FreeAp<F> {
    rec(eff, FreeAp::Pure(Value::Unit), SampledFn::fst())
}

/// Apply: recursion is on the left spine, pairing the right program into
/// each node's rest.
pub fn fa_ap<F: Functor>(ff: &FreeAp<F>, fx: &FreeAp<F>) -> FreeAp<F> {
    match ff {
        FreeAp::Pure(fv) => fa_map(fv.as_fun(), fx),
        FreeAp::Rec { eff, rest, post } => {
            let paired = fa_ap(
                &fa_ap(&fa_pure(crate::value::curried_pair()), rest),
                fx,
            );
            let post = post.clone();
            rec(
                eff.clone(),
                paired,
                SampledFn::new(
                    move |v| {
                        let (c, da) = v.as_pair();
                        let (d, a) = da.as_pair();
                        post.apply(&Value::pair(c.clone(), d.clone()))
                            .as_fun()
                            .apply(a)
                    },
                    Vec::new(),
                ),
            )
        }
    }
}

/// Curry a pair function into a nested function value.
fn curry2(f: &SampledFn) -> Value {
    let f = f.clone();
    Value::fun(SampledFn::new(
        move |c| {
            let f = f.clone();
            let c = c.clone();
            Value::fun(SampledFn::new(
                move |d| f.apply(&Value::pair(c.clone(), d.clone())),
                Vec::new(),
            ))
        },
        Vec::new(),
    ))
}

/// Interpret every effect through `nat` into an applicative target; the
/// unique applicative morphism extending `nat` along `fa_ins`.
pub fn fa_fold<F, B>(b: &B, nat: &dyn Fn(&F::Val) -> B::Val, p: &FreeAp<F>) -> B::Val
where
    F: Functor,
    B: Applicative,
{
    match p {
        FreeAp::Pure(a) => b.pure_v(a.clone()),
        FreeAp::Rec { eff, rest, post } => b.ap(
            &b.ap(&b.pure_v(curry2(post)), &nat(eff)),
            &fa_fold(b, nat, rest),
        ),
    }
}

pub fn fa_collapse<F: Collapse>(fd: &F, p: &FreeAp<F>) -> Multi {
    fa_fold(&MultiF, &|eff| fd.collapse(eff), p)
}

/// Free applicative dictionary over a collapsible effect functor.
#[derive(Clone, Copy, Default)]
pub struct FreeApF<F> {
    pub eff: F,
}

impl<F: Collapse + Clone + 'static> Functor for FreeApF<F> {
    type Val = FreeAp<F>;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val {
        fa_map(f, v)
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        let layers = g.nat(3);
        let mut p = fa_pure(payload(g));
        for _ in 0..layers {
            let eff = self.eff.generate(g);
            let post = table_fn(g, payload);
            p = rec(eff, p, post);
        }
        p
    }

    fn observe(&self, v: &Self::Val) -> Observation {
        fa_collapse(&self.eff, v).observe()
    }
}

impl<F: Collapse + Clone + 'static> Applicative for FreeApF<F> {
    fn pure_v(&self, v: Value) -> Self::Val {
        fa_pure(v)
    }

    fn ap(&self, f: &Self::Val, x: &Self::Val) -> Self::Val {
        fa_ap(f, x)
    }
}

impl<F: Collapse + Clone + 'static> Monoidal for FreeApF<F> {
    fn unit(&self) -> Self::Val {
        fa_pure(Value::Unit)
    }

    fn tensor(&self, a: &Self::Val, b: &Self::Val) -> Self::Val {
        crate::functor::tensor_from_ap(self, a, b)
    }
}

/// Alternative encoding: the rest program carries functions awaiting this
/// node's payload.
pub enum FreeApL<F: Functor> {
    PureL(Value),
    RecL { eff: F::Val, rest: Rc<FreeApL<F>> },
}

impl<F: Functor> Clone for FreeApL<F> {
    fn clone(&self) -> Self {
        match self {
            FreeApL::PureL(a) => FreeApL::PureL(a.clone()),
            FreeApL::RecL { eff, rest } => FreeApL::RecL {
                eff: eff.clone(),
                rest: rest.clone(),
            },
        }
    }
}

/// Alternative encoding: each effect carries functions applied to the rest
/// program's payload.
pub enum FreeApR<F: Functor> {
    PureR(Value),
    RecR { eff: F::Val, rest: Rc<FreeApR<F>> },
}

impl<F: Functor> Clone for FreeApR<F> {
    fn clone(&self) -> Self {
        match self {
            FreeApR::PureR(a) => FreeApR::PureR(a.clone()),
            FreeApR::RecR { eff, rest } => FreeApR::RecR {
                eff: eff.clone(),
                rest: rest.clone(),
            },
        }
    }
}

pub fn fa_to_left<F: Functor>(p: &FreeAp<F>) -> FreeApL<F> {
    match p {
        FreeAp::Pure(a) => FreeApL::PureL(a.clone()),
        FreeAp::Rec { eff, rest, post } => {
            let post = post.clone();
            // Each rest payload d becomes the function c -> post(c, d).
            let funs = fa_map(
                &SampledFn::new(
                    move |d| {
                        let post = post.clone();
                        let d = d.clone();
                        Value::fun(SampledFn::new(
                            move |c| post.apply(&Value::pair(c.clone(), d.clone())),
                            Vec::new(),
                        ))
                    },
                    Vec::new(),
                ),
                rest,
            );
            FreeApL::RecL {
                eff: eff.clone(),
                rest: Rc::new(fa_to_left(&funs)),
            }
        }
    }
}

pub fn fa_from_left<F: Functor>(p: &FreeApL<F>) -> FreeAp<F> {
    match p {
        FreeApL::PureL(a) => FreeAp::Pure(a.clone()),
        FreeApL::RecL { eff, rest } => rec(
            eff.clone(),
            fa_from_left(rest),
            SampledFn::new(
                |v| {
                    let (c, g) = v.as_pair();
                    g.as_fun().apply(c)
                },
                Vec::new(),
            ),
        ),
    }
}

pub fn fa_to_right<F: Functor>(fd: &F, p: &FreeAp<F>) -> FreeApR<F> {
    match p {
        FreeAp::Pure(a) => FreeApR::PureR(a.clone()),
        FreeAp::Rec { eff, rest, post } => {
            let post = post.clone();
            // Each effect payload c becomes the function d -> post(c, d).
            let eff_funs = fd.fmap(
                &SampledFn::new(
                    move |c| {
                        let post = post.clone();
                        let c = c.clone();
                        Value::fun(SampledFn::new(
                            move |d| post.apply(&Value::pair(c.clone(), d.clone())),
                            Vec::new(),
                        ))
                    },
                    Vec::new(),
                ),
                eff,
            );
            FreeApR::RecR {
                eff: eff_funs,
                rest: Rc::new(fa_to_right(fd, rest)),
            }
        }
    }
}

pub fn fa_from_right<F: Functor>(p: &FreeApR<F>) -> FreeAp<F> {
    match p {
        FreeApR::PureR(a) => FreeAp::Pure(a.clone()),
        FreeApR::RecR { eff, rest } => rec(
            eff.clone(),
            fa_from_right(rest),
            SampledFn::new(
                |v| {
                    let (g, d) = v.as_pair();
                    g.as_fun().apply(d)
                },
                Vec::new(),
            ),
        ),
    }
}

pub fn observe_left<F: Collapse>(fd: &F, p: &FreeApL<F>) -> Observation {
    fa_collapse(fd, &fa_from_left(p))
        .observe()
}

pub fn observe_right<F: Collapse>(fd: &F, p: &FreeApR<F>) -> Observation {
    fa_collapse(fd, &fa_from_right(p))
        .observe()
}

/// The applicative exponential at one instantiation: pair the awaited result
/// in front of whatever payload flows through.
pub struct RepAp<B: Functor> {
    run: Rc<dyn Fn(&B::Val) -> B::Val>,
}

impl<B: Functor> Clone for RepAp<B> {
    fn clone(&self) -> Self {
        RepAp {
            run: self.run.clone(),
        }
    }
}

impl<B: Functor> RepAp<B> {
    pub fn new(run: impl Fn(&B::Val) -> B::Val + 'static) -> Self {
        RepAp { run: Rc::new(run) }
    }

    pub fn run(&self, y: &B::Val) -> B::Val {
        (self.run)(y)
    }
}

/// Representation: tensor with me on the left.
pub fn ap_rep<B>(b: &B, x: &B::Val) -> RepAp<B>
where
    B: Monoidal + Clone + 'static,
{
    let b = b.clone();
    let x = x.clone();
    RepAp::new(move |y| b.tensor(&x, y))
}

/// Run at the unit and project the awaited component.
pub fn ap_abs<B>(b: &B, e: &RepAp<B>) -> B::Val
where
    B: Applicative,
{
    b.fmap(&SampledFn::fst(), &e.run(&b.pure_v(Value::Unit)))
}

/// Applicative dictionary for the representation, observed through `ap_abs`.
#[derive(Clone, Copy, Default)]
pub struct RepApF<B> {
    pub base: B,
}

impl<B> Functor for RepApF<B>
where
    B: Applicative + Monoidal + Clone + 'static,
{
    type Val = RepAp<B>;

    fn fmap(&self, f: &SampledFn, v: &Self::Val) -> Self::Val {
        let b = self.base.clone();
        let v = v.clone();
        let f = SampledFn::on_fst(f);
        RepAp::new(move |y| b.fmap(&f, &v.run(y)))
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Self::Val {
        // Representation images, with an extra payload-preserving apply
        // layer half the time so non-image values are exercised too.
        let x = self.base.generate_with(g, payload);
        let r = ap_rep(&self.base, &x);
        if g.nat(2) == 0 {
            r
        } else {
            self.ap(&self.pure_v(Value::fun(SampledFn::identity())), &r)
        }
    }

    fn observe(&self, v: &Self::Val) -> Observation {
        self.base.observe(&ap_abs(&self.base, v))
    }
}

impl<B> Applicative for RepApF<B>
where
    B: Applicative + Monoidal + Clone + 'static,
{
    fn pure_v(&self, v: Value) -> Self::Val {
        let b = self.base.clone();
        let pair_front = SampledFn::new(move |a| Value::pair(v.clone(), a.clone()), Vec::new());
        RepAp::new(move |y| b.fmap(&pair_front, y))
    }

    fn ap(&self, f: &Self::Val, x: &Self::Val) -> Self::Val {
        // The function side transforms outermost so that its effects land
        // first, matching the base applicative's left-to-right order; this
        // is what makes the representation an applicative morphism.
        let b = self.base.clone();
        let (f, x) = (f.clone(), x.clone());
        let regroup = SampledFn::new(
            |v| {
                let (fun, xa) = v.as_pair();
                let (bv, a) = xa.as_pair();
                Value::pair(fun.as_fun().apply(bv), a.clone())
            },
            Vec::new(),
        );
        RepAp::new(move |y| b.fmap(&regroup, &f.run(&x.run(y))))
    }
}

impl<B> Monoidal for RepApF<B>
where
    B: Applicative + Monoidal + Clone + 'static,
{
    fn unit(&self) -> Self::Val {
        self.pure_v(Value::Unit)
    }

    fn tensor(&self, a: &Self::Val, b: &Self::Val) -> Self::Val {
        crate::functor::tensor_from_ap(self, a, b)
    }
}
