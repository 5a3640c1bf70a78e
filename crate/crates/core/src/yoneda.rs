//! Yoneda and coYoneda round trips, executable at the value universe.
//!
//! The quantified side of each isomorphism is probed pointwise: a Yoneda
//! value is a closure awaiting an arbitrary post-map, a coYoneda value is a
//! stored payload plus a pending post-map. Both delay fmap until collapsed.

use std::rc::Rc;

use crate::functor::Functor;
use crate::value::SampledFn;

/// The end form: for every k, an F-value. `map` composes into the waiting
/// closure without touching any container.
pub struct Yoneda<F: Functor> {
    run: Rc<dyn Fn(&SampledFn) -> F::Val>,
}

impl<F: Functor> Clone for Yoneda<F> {
    fn clone(&self) -> Self {
        Yoneda {
            run: self.run.clone(),
        }
    }
}

impl<F: Functor> Yoneda<F> {
    pub fn new(run: impl Fn(&SampledFn) -> F::Val + 'static) -> Yoneda<F> {
        Yoneda { run: Rc::new(run) }
    }

    pub fn run(&self, k: &SampledFn) -> F::Val {
        (self.run)(k)
    }

    pub fn map(&self, f: &SampledFn) -> Yoneda<F> {
        let run = self.run.clone();
        let f = f.clone();
        Yoneda::new(move |k| run(&SampledFn::compose(k, &f)))
    }
}

pub fn yoneda_to<F: Functor + Clone + 'static>(d: &F, fx: &F::Val) -> Yoneda<F> {
    let d = d.clone();
    let fx = fx.clone();
    Yoneda::new(move |k| d.fmap(k, &fx))
}

pub fn yoneda_from<F: Functor>(y: &Yoneda<F>) -> F::Val {
    y.run(&SampledFn::identity())
}

/// The coend form: a payload at a hidden type with a pending post-map.
#[derive(Clone)]
pub struct CoYoneda<F: Functor> {
    pub payload: F::Val,
    pub post: SampledFn,
}

impl<F: Functor> CoYoneda<F> {
    pub fn map(&self, f: &SampledFn) -> CoYoneda<F> {
        CoYoneda {
            payload: self.payload.clone(),
            post: SampledFn::compose(f, &self.post),
        }
    }
}

pub fn coyoneda_to<F: Functor>(fx: &F::Val) -> CoYoneda<F> {
    CoYoneda {
        payload: fx.clone(),
        post: SampledFn::identity(),
    }
}

pub fn coyoneda_from<F: Functor>(d: &F, c: &CoYoneda<F>) -> F::Val {
    d.fmap(&c.post, &c.payload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::{IdF, ListF};
    use crate::gen::Gen;
    use crate::value::Value;

    fn double() -> SampledFn {
        SampledFn::new(|v| Value::Int(v.as_int() * 2), Vec::new())
    }

    #[test]
    fn yoneda_to_applies_the_post_map() {
        let y = yoneda_to(&IdF, &Value::Int(3));
        let inc = SampledFn::new(|v| Value::Int(v.as_int() + 1), Vec::new());
        assert_eq!(y.run(&inc).as_int(), 4);

        let y = yoneda_to(&ListF, &vec![Value::Int(1), Value::Int(2)]);
        assert_eq!(Value::list(y.run(&double())).encode(), "[2,4]");
    }

    #[test]
    fn yoneda_from_runs_at_identity() {
        let poly: Yoneda<ListF> = Yoneda::new(|k| vec![k.apply(&Value::Int(1))]);
        assert_eq!(Value::list(yoneda_from(&poly)).encode(), "[1]");
    }

    #[test]
    fn yoneda_round_trip_is_identity() {
        let xs = vec![Value::Int(5), Value::Int(6)];
        let back = yoneda_from(&yoneda_to(&ListF, &xs));
        assert_eq!(ListF.observe(&back), ListF.observe(&xs));

        let v = Value::str("q");
        assert_eq!(yoneda_from(&yoneda_to(&IdF, &v)), v);

        let mut g = Gen::new(21, 6);
        for _ in 0..50 {
            let xs = ListF.generate(&mut g);
            let back = yoneda_from(&yoneda_to(&ListF, &xs));
            assert_eq!(ListF.observe(&back), ListF.observe(&xs));
        }
    }

    #[test]
    fn yoneda_map_delays_then_agrees_with_fmap() {
        let mut g = Gen::new(22, 6);
        for _ in 0..50 {
            let xs = ListF.generate(&mut g);
            let f = g.int_fn();
            let via_yoneda = yoneda_from(&yoneda_to(&ListF, &xs).map(&f));
            let direct = ListF.fmap(&f, &xs);
            assert_eq!(ListF.observe(&via_yoneda), ListF.observe(&direct));
        }
    }

    #[test]
    fn coyoneda_to_pairs_with_identity() {
        let c = coyoneda_to::<ListF>(&vec![Value::Int(1)]);
        assert_eq!(Value::list(c.payload.clone()).encode(), "[1]");
        assert_eq!(c.post.apply(&Value::Int(9)).as_int(), 9);
    }

    #[test]
    fn coyoneda_from_is_pending_fmap() {
        let c: CoYoneda<ListF> = CoYoneda {
            payload: vec![Value::Int(1), Value::Int(2)],
            post: double(),
        };
        assert_eq!(Value::list(coyoneda_from(&ListF, &c)).encode(), "[2,4]");
    }

    #[test]
    fn coyoneda_round_trip_is_identity() {
        let xs = vec![Value::Int(1), Value::Int(2), Value::Int(3)];
        let back = coyoneda_from(&ListF, &coyoneda_to::<ListF>(&xs));
        assert_eq!(ListF.observe(&back), ListF.observe(&xs));

        let mut g = Gen::new(23, 6);
        for _ in 0..50 {
            let xs = ListF.generate(&mut g);
            let f = g.int_fn();
            let via_co = coyoneda_from(&ListF, &coyoneda_to::<ListF>(&xs).map(&f));
            assert_eq!(ListF.observe(&via_co), ListF.observe(&ListF.fmap(&f, &xs)));
        }
    }
}
