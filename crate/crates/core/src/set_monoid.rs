//! Ordinary monoids, their endomorphism representation, and difference lists.
//!
//! The representation sends an element to "combine with me on the left"; its
//! inverse applies an endomorphism to the unit. Difference lists are the same
//! move for list append, kept as real closures over a structure-shared list
//! so that appending stays proportional to the prefix being added.

use std::rc::Rc;

use crate::count;
use crate::gen::Gen;
use crate::observe::Observation;
use crate::value::{SampledFn, Value};

pub trait MonoidDict {
    type M: Clone + 'static;

    fn empty(&self) -> Self::M;
    fn combine(&self, a: &Self::M, b: &Self::M) -> Self::M;
    fn generate(&self, g: &mut Gen) -> Self::M;
    fn observe(&self, m: &Self::M) -> Observation;
}

/// Bounded integers under addition.
#[derive(Clone, Copy, Default)]
pub struct IntAdd;

impl MonoidDict for IntAdd {
    type M = Value;

    fn empty(&self) -> Value {
        Value::Int(0)
    }

    fn combine(&self, a: &Value, b: &Value) -> Value {
        Value::Int(a.as_int() + b.as_int())
    }

    fn generate(&self, g: &mut Gen) -> Value {
        g.int_value()
    }

    fn observe(&self, m: &Value) -> Observation {
        Observation::of_value(m)
    }
}

/// Bounded integers under multiplication.
#[derive(Clone, Copy, Default)]
pub struct IntMul;

impl MonoidDict for IntMul {
    type M = Value;

    fn empty(&self) -> Value {
        Value::Int(1)
    }

    fn combine(&self, a: &Value, b: &Value) -> Value {
        Value::Int(a.as_int() * b.as_int())
    }

    fn generate(&self, g: &mut Gen) -> Value {
        g.int_value()
    }

    fn observe(&self, m: &Value) -> Observation {
        Observation::of_value(m)
    }
}

/// Short strings under concatenation.
#[derive(Clone, Copy, Default)]
pub struct StrConcat;

impl MonoidDict for StrConcat {
    type M = Value;

    fn empty(&self) -> Value {
        Value::str("")
    }

    fn combine(&self, a: &Value, b: &Value) -> Value {
        Value::str(&format!("{}{}", a.as_str(), b.as_str()))
    }

    fn generate(&self, g: &mut Gen) -> Value {
        g.str_value()
    }

    fn observe(&self, m: &Value) -> Observation {
        Observation::of_value(m)
    }
}

/// Universe lists under append.
#[derive(Clone, Copy, Default)]
pub struct ListAppend;

impl MonoidDict for ListAppend {
    type M = Value;

    fn empty(&self) -> Value {
        Value::list(Vec::new())
    }

    fn combine(&self, a: &Value, b: &Value) -> Value {
        let mut out = a.as_list().to_vec();
        out.extend(b.as_list().iter().cloned());
        Value::list(out)
    }

    fn generate(&self, g: &mut Gen) -> Value {
        Value::list(g.int_list())
    }

    fn observe(&self, m: &Value) -> Observation {
        Observation::of_value(m)
    }
}

/// An endomorphism of a monoid carrier, compared extensionally at the probe
/// points it carries (always including the unit).
#[derive(Clone)]
pub struct Endo {
    pub f: SampledFn,
}

impl Endo {
    pub fn apply(&self, m: &Value) -> Value {
        self.f.apply(m)
    }
}

/// Monoid of endomorphisms over a base carrier, with composition.
#[derive(Clone, Copy, Default)]
pub struct EndoMonoid<D> {
    pub base: D,
}

impl<D: MonoidDict<M = Value> + Clone + 'static> MonoidDict for EndoMonoid<D> {
    type M = Endo;

    fn empty(&self) -> Endo {
        Endo {
            f: SampledFn::identity(),
        }
    }

    // Probes concatenate left-to-right so both association orders observe a
    // combination at the same points.
    fn combine(&self, a: &Endo, b: &Endo) -> Endo {
        let mut probes = a.f.probes().to_vec();
        probes.extend(b.f.probes().iter().cloned());
        Endo {
            f: SampledFn::compose(&a.f, &b.f).with_probes(probes),
        }
    }

    fn generate(&self, g: &mut Gen) -> Endo {
        // Two-sided sandwich: x maps to l + x + r. Closed under composition
        // and not restricted to the representation's image.
        let base = self.base.clone();
        let l = base.generate(g);
        let r = base.generate(g);
        let probes = vec![base.empty(), base.generate(g), base.generate(g)];
        let f = {
            let base = base.clone();
            move |x: &Value| base.combine(&l, &base.combine(x, &r))
        };
        Endo {
            f: SampledFn::new(f, probes),
        }
    }

    fn observe(&self, m: &Endo) -> Observation {
        Observation::of_value(&Value::fun(m.f.clone()))
    }
}

/// Send m to "combine m on the left". A homomorphism into the endomorphism
/// monoid, split by `cayley_abs`.
pub fn cayley_rep<D>(d: &D, m: &Value) -> Endo
where
    D: MonoidDict<M = Value> + Clone + 'static,
{
    let d2 = d.clone();
    let m2 = m.clone();
    Endo {
        f: SampledFn::new(move |x| d2.combine(&m2, x), vec![d.empty()]),
    }
}

/// Apply at the unit.
pub fn cayley_abs<D>(d: &D, k: &Endo) -> Value
where
    D: MonoidDict<M = Value>,
{
    k.apply(&d.empty())
}

/// Fold a list through a map into any target monoid. This is the unique
/// homomorphism extending `f` along the singleton embedding.
pub fn list_fold_free<D>(f: &SampledFn, target: &D, xs: &[Value]) -> D::M
where
    D: MonoidDict<M = Value>,
{
    let mut acc = target.empty();
    for x in xs {
        acc = target.combine(&acc, &f.apply(x));
    }
    acc
}

/// Immutable cons list with shared tails. Every cons is counted, which makes
/// the cell count the cost model for the append benchmarks.
#[derive(Clone)]
pub struct SharedList {
    head: Option<Rc<Node>>,
}

struct Node {
    item: Value,
    next: SharedList,
}

impl SharedList {
    pub fn nil() -> SharedList {
        SharedList { head: None }
    }

    pub fn cons(item: Value, next: &SharedList) -> SharedList {
        count::bump();
        SharedList {
            head: Some(Rc::new(Node {
                item,
                next: next.clone(),
            })),
        }
    }

    pub fn is_nil(&self) -> bool {
        self.head.is_none()
    }

    pub fn from_slice(xs: &[Value]) -> SharedList {
        let mut out = SharedList::nil();
        for x in xs.iter().rev() {
            out = SharedList::cons(x.clone(), &out);
        }
        out
    }

    pub fn to_vec(&self) -> Vec<Value> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Some(node) = &cur.head {
            out.push(node.item.clone());
            cur = &node.next;
        }
        out
    }

    pub fn len(&self) -> usize {
        let mut n = 0;
        let mut cur = self;
        while let Some(node) = &cur.head {
            n += 1;
            cur = &node.next;
        }
        n
    }

    pub fn is_empty(&self) -> bool {
        self.is_nil()
    }

    /// Rebuild self's spine in front of `other`; `other` is shared, not
    /// copied. Cost: one cons per element of self.
    pub fn append(&self, other: &SharedList) -> SharedList {
        let items = self.to_vec();
        let mut out = other.clone();
        for x in items.iter().rev() {
            out = SharedList::cons(x.clone(), &out);
        }
        out
    }
}

impl Drop for SharedList {
    // Unlink iteratively: long chains must not recurse the stack away.
    fn drop(&mut self) {
        let mut cur = self.head.take();
        while let Some(rc) = cur {
            match Rc::try_unwrap(rc) {
                Ok(mut node) => cur = node.next.head.take(),
                Err(_) => break,
            }
        }
    }
}

/// A list kept as the function "prepend me", so append is composition.
#[derive(Clone)]
pub struct DList {
    f: Rc<dyn Fn(&SharedList) -> SharedList>,
}

pub fn dlist_from(xs: &SharedList) -> DList {
    let xs = xs.clone();
    DList {
        f: Rc::new(move |ys| xs.append(ys)),
    }
}

pub fn dlist_append(a: &DList, b: &DList) -> DList {
    let (fa, fb) = (a.f.clone(), b.f.clone());
    DList {
        f: Rc::new(move |ys| fa(&fb(ys))),
    }
}

pub fn dlist_to(d: &DList) -> SharedList {
    (d.f)(&SharedList::nil())
}
