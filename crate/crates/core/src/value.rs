//! The closed universe of test values, and functions compared by sampling.
//!
//! Every quantifier in the library (ends, coends, natural transformations) is
//! probed at this universe: unit, bounded integers, short strings, pairs,
//! lists, and functions. Total extensional function equality is undecidable,
//! so a function value carries a finite probe list and two functions are equal
//! iff they agree on every probe point.

use std::fmt::Write as _;
use std::rc::Rc;

/// Default number of extensional probe points for generated functions.
pub const PROBES: usize = 16;

/// A universe value. Functions are first class, which is what lets curried
/// payloads flow through applicative and arrow structures.
#[derive(Clone)]
pub enum Value {
    Unit,
    Int(i64),
    Str(String),
    Pair(Rc<(Value, Value)>),
    List(Rc<Vec<Value>>),
    Fun(SampledFn),
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Rc::new((a, b)))
    }

    pub fn list(items: Vec<Value>) -> Value {
        Value::List(Rc::new(items))
    }

    pub fn str(s: &str) -> Value {
        Value::Str(s.to_string())
    }

    pub fn fun(f: SampledFn) -> Value {
        Value::Fun(f)
    }

    pub fn as_int(&self) -> i64 {
        match self {
            Value::Int(n) => *n,
            other => panic!("expected Int, got {}", other.encode()),
        }
    }

    pub fn as_pair(&self) -> (&Value, &Value) {
        match self {
            Value::Pair(p) => (&p.0, &p.1),
            other => panic!("expected Pair, got {}", other.encode()),
        }
    }

    pub fn as_list(&self) -> &[Value] {
        match self {
            Value::List(xs) => xs,
            other => panic!("expected List, got {}", other.encode()),
        }
    }

    pub fn as_fun(&self) -> &SampledFn {
        match self {
            Value::Fun(f) => f,
            other => panic!("expected Fun, got {}", other.encode()),
        }
    }

    pub fn as_str(&self) -> &str {
        match self {
            Value::Str(s) => s,
            other => panic!("expected Str, got {}", other.encode()),
        }
    }

    /// Canonical printable encoding. A function is tabulated over its probe
    /// list, so a successor function with probes 0,1,2 encodes as `[1,2,3]`.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut String) {
        match self {
            Value::Unit => out.push_str("()"),
            Value::Int(n) => {
                let _ = write!(out, "{n}");
            }
            Value::Str(s) => {
                let _ = write!(out, "{s:?}");
            }
            Value::Pair(p) => {
                out.push('(');
                p.0.encode_into(out);
                out.push(',');
                p.1.encode_into(out);
                out.push(')');
            }
            Value::List(xs) => {
                out.push('[');
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    x.encode_into(out);
                }
                out.push(']');
            }
            Value::Fun(f) => {
                out.push('[');
                for (i, p) in f.probes().iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    f.apply(p).encode_into(out);
                }
                out.push(']');
            }
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.encode() == other.encode()
    }
}

impl Eq for Value {}

impl std::fmt::Debug for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.encode())
    }
}

/// A unary function over the universe plus the probe points used to compare
/// it extensionally. Composition keeps the source-side probe list, since that
/// is the composite's domain.
#[derive(Clone)]
pub struct SampledFn {
    f: Rc<dyn Fn(&Value) -> Value>,
    probes: Rc<Vec<Value>>,
}

impl SampledFn {
    pub fn new(f: impl Fn(&Value) -> Value + 'static, probes: Vec<Value>) -> SampledFn {
        SampledFn {
            f: Rc::new(f),
            probes: Rc::new(probes),
        }
    }

    pub fn identity() -> SampledFn {
        SampledFn::new(|v| v.clone(), Vec::new())
    }

    pub fn constant(v: Value) -> SampledFn {
        SampledFn::new(move |_| v.clone(), Vec::new())
    }

    /// First projection of a pair.
    pub fn fst() -> SampledFn {
        SampledFn::new(|v| v.as_pair().0.clone(), Vec::new())
    }

    /// Second projection of a pair.
    pub fn snd() -> SampledFn {
        SampledFn::new(|v| v.as_pair().1.clone(), Vec::new())
    }

    /// (a,b) to (b,a).
    pub fn swap() -> SampledFn {
        SampledFn::new(
            |v| {
                let (a, b) = v.as_pair();
                Value::pair(b.clone(), a.clone())
            },
            Vec::new(),
        )
    }

    /// y to (y,()). Right inverse of `fst` at the unit payload.
    pub fn fst_inv() -> SampledFn {
        SampledFn::new(|v| Value::pair(v.clone(), Value::Unit), Vec::new())
    }

    /// ((x,y),z) to (x,(y,z)).
    pub fn assoc_r() -> SampledFn {
        SampledFn::new(
            |v| {
                let (xy, z) = v.as_pair();
                let (x, y) = xy.as_pair();
                Value::pair(x.clone(), Value::pair(y.clone(), z.clone()))
            },
            Vec::new(),
        )
    }

    /// (x,(y,z)) to ((x,y),z).
    pub fn assoc_l() -> SampledFn {
        SampledFn::new(
            |v| {
                let (x, yz) = v.as_pair();
                let (y, z) = yz.as_pair();
                Value::pair(Value::pair(x.clone(), y.clone()), z.clone())
            },
            Vec::new(),
        )
    }

    /// Apply f to the first pair component only.
    pub fn on_fst(f: &SampledFn) -> SampledFn {
        let f = f.clone();
        SampledFn::new(
            move |v| {
                let (a, b) = v.as_pair();
                Value::pair(f.apply(a), b.clone())
            },
            Vec::new(),
        )
    }

    /// Apply f to the second pair component only.
    pub fn on_snd(f: &SampledFn) -> SampledFn {
        let f = f.clone();
        SampledFn::new(
            move |v| {
                let (a, b) = v.as_pair();
                Value::pair(a.clone(), f.apply(b))
            },
            Vec::new(),
        )
    }

    pub fn apply(&self, v: &Value) -> Value {
        (self.f)(v)
    }

    pub fn probes(&self) -> &[Value] {
        &self.probes
    }

    pub fn with_probes(&self, probes: Vec<Value>) -> SampledFn {
        SampledFn {
            f: self.f.clone(),
            probes: Rc::new(probes),
        }
    }

    /// after of before. Probes come from `before`, the domain side.
    pub fn compose(after: &SampledFn, before: &SampledFn) -> SampledFn {
        let f = after.f.clone();
        let g = before.f.clone();
        SampledFn {
            f: Rc::new(move |v| f(&g(v))),
            probes: before.probes.clone(),
        }
    }
}

/// Curried pairing: a value `Fun(a -> Fun(b -> (a,b)))`.
pub fn curried_pair() -> Value {
    Value::fun(SampledFn::new(
        |a| {
            let a = a.clone();
            Value::fun(SampledFn::new(
                move |b| Value::pair(a.clone(), b.clone()),
                Vec::new(),
            ))
        },
        Vec::new(),
    ))
}

/// Curried composition: `Fun(f -> Fun(g -> Fun(x -> f (g x))))`.
pub fn curried_compose() -> Value {
    Value::fun(SampledFn::new(
        |f| {
            let f = f.as_fun().clone();
            Value::fun(SampledFn::new(
                move |g| {
                    let fg = SampledFn::compose(&f, g.as_fun());
                    Value::fun(fg)
                },
                Vec::new(),
            ))
        },
        Vec::new(),
    ))
}

/// `Fun(g -> g y)`: application at a fixed argument.
pub fn apply_at(y: Value) -> Value {
    Value::fun(SampledFn::new(
        move |g| g.as_fun().apply(&y),
        Vec::new(),
    ))
}

/// Uncurried application `(f, a) -> f a` as a function value.
pub fn apply_fn() -> SampledFn {
    SampledFn::new(
        |v| {
            let (f, a) = v.as_pair();
            f.as_fun().apply(a)
        },
        Vec::new(),
    )
}

/// FNV-1a over a salted canonical encoding; platform-stable and deterministic.
pub fn fnv1a(salt: u64, data: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325 ^ salt.wrapping_mul(0x100000001b3);
    for b in data.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
