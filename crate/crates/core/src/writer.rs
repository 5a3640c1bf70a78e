//! Writer: the canonical observable effect, an ordered label log paired with
//! a result. It distinguishes effect order, which the reversed-applicative
//! tests need. Multi adds finitely many results on top of the log; it is the
//! collapse target for existentially quantified structures.

use crate::observe::Observation;
use crate::value::{SampledFn, Value};

#[derive(Clone, Debug)]
pub struct Writer {
    pub log: Vec<String>,
    pub val: Value,
}

impl Writer {
    pub fn new(log: Vec<String>, val: Value) -> Writer {
        Writer { log, val }
    }

    pub fn ret(val: Value) -> Writer {
        Writer {
            log: Vec::new(),
            val,
        }
    }

    pub fn tell(label: &str, val: Value) -> Writer {
        Writer {
            log: vec![label.to_string()],
            val,
        }
    }

    pub fn map(&self, f: &SampledFn) -> Writer {
        Writer {
            log: self.log.clone(),
            val: f.apply(&self.val),
        }
    }

    pub fn bind(&self, k: &dyn Fn(&Value) -> Writer) -> Writer {
        let next = k(&self.val);
        let mut log = self.log.clone();
        log.extend(next.log);
        Writer {
            log,
            val: next.val,
        }
    }

    /// Function-side effects first, then argument-side.
    pub fn ap(wf: &Writer, wx: &Writer) -> Writer {
        let mut log = wf.log.clone();
        log.extend(wx.log.iter().cloned());
        Writer {
            log,
            val: wf.val.as_fun().apply(&wx.val),
        }
    }

    pub fn observe(&self) -> Observation {
        Observation::new(self.val.encode(), self.log.clone())
    }
}

/// Writer with finitely many results: trace concatenation for the log part,
/// cartesian products for the value part.
#[derive(Clone, Debug)]
pub struct Multi {
    pub trace: Vec<String>,
    pub vals: Vec<Value>,
}

impl Multi {
    pub fn new(trace: Vec<String>, vals: Vec<Value>) -> Multi {
        Multi { trace, vals }
    }

    pub fn pure(v: Value) -> Multi {
        Multi {
            trace: Vec::new(),
            vals: vec![v],
        }
    }

    pub fn map(&self, f: &SampledFn) -> Multi {
        Multi {
            trace: self.trace.clone(),
            vals: self.vals.iter().map(|v| f.apply(v)).collect(),
        }
    }

    /// Cartesian application: every function value meets every argument.
    pub fn ap(mf: &Multi, mx: &Multi) -> Multi {
        let mut trace = mf.trace.clone();
        trace.extend(mx.trace.iter().cloned());
        let mut vals = Vec::with_capacity(mf.vals.len() * mx.vals.len());
        for f in &mf.vals {
            for x in &mx.vals {
                vals.push(f.as_fun().apply(x));
            }
        }
        Multi { trace, vals }
    }

    /// Cartesian pairing.
    pub fn tensor(ma: &Multi, mb: &Multi) -> Multi {
        let mut trace = ma.trace.clone();
        trace.extend(mb.trace.iter().cloned());
        let mut vals = Vec::with_capacity(ma.vals.len() * mb.vals.len());
        for a in &ma.vals {
            for b in &mb.vals {
                vals.push(Value::pair(a.clone(), b.clone()));
            }
        }
        Multi { trace, vals }
    }

    pub fn observe(&self) -> Observation {
        Observation::new(
            Value::list(self.vals.clone()).encode(),
            self.trace.clone(),
        )
    }
}
