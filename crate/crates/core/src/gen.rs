//! Deterministic generation of universe values, functions and structure
//! shapes from a (seed, size) pair. Same pair, same samples.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::value::{fnv1a, SampledFn, Value, PROBES};

/// Reproducible random source. `size` caps list lengths, tree depth and
/// branching; nested structures shrink by halving it.
pub struct Gen {
    rng: ChaCha8Rng,
    pub size: usize,
}

impl Gen {
    pub fn new(seed: u64, size: usize) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            size,
        }
    }

    /// Child generator with halved size.
    pub fn child(&mut self) -> Gen {
        Gen::new(self.rng.gen(), self.size / 2)
    }

    pub fn seed(&mut self) -> u64 {
        self.rng.gen()
    }

    /// Bounded integer in -16..=16.
    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-16..=16)
    }

    /// Uniform in 0..bound (bound clamped to at least 1).
    pub fn nat(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound.max(1))
    }

    /// Length in 0..=size.
    pub fn len(&mut self) -> usize {
        self.nat(self.size + 1)
    }

    /// One effect label from a small alphabet.
    pub fn label(&mut self) -> String {
        const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
        LABELS[self.nat(LABELS.len())].to_string()
    }

    /// Short lowercase string, length 0..=3.
    pub fn string(&mut self) -> String {
        let n = self.nat(4);
        (0..n)
            .map(|_| char::from(b'a' + self.rng.gen_range(0..6u8)))
            .collect()
    }

    pub fn int_value(&mut self) -> Value {
        Value::Int(self.int())
    }

    pub fn str_value(&mut self) -> Value {
        Value::Str(self.string())
    }

    pub fn int_list(&mut self) -> Vec<Value> {
        let n = self.len();
        (0..n).map(|_| self.int_value()).collect()
    }

    /// The 16 integer probe points function equality is sampled at.
    pub fn int_probes(&mut self) -> Vec<Value> {
        (0..PROBES).map(|_| self.int_value()).collect()
    }

    /// Probe points shaped (Int, Str); used where strengths must be told apart.
    pub fn pair_probes(&mut self) -> Vec<Value> {
        (0..PROBES)
            .map(|_| Value::pair(self.int_value(), self.str_value()))
            .collect()
    }

    /// Salted hash function into bounded integers, with integer probes.
    /// Deterministic in the salt and total on the whole universe.
    pub fn int_fn(&mut self) -> SampledFn {
        let salt: u64 = self.rng.gen();
        let probes = self.int_probes();
        SampledFn::new(move |v| Value::Int(hash_int(salt, v)), probes)
    }

    /// Salted hash function into short strings.
    pub fn str_fn(&mut self) -> SampledFn {
        let salt: u64 = self.rng.gen();
        let probes = self.int_probes();
        SampledFn::new(
            move |v| {
                let h = fnv1a(salt, &v.encode());
                let n = (h % 4) as usize;
                let s: String = (0..n)
                    .map(|i| char::from(b'a' + ((h >> (8 * i)) % 6) as u8))
                    .collect();
                Value::Str(s)
            },
            probes,
        )
    }

    /// Function value (for applicative payloads), hash-based, integer probes.
    pub fn fun_value(&mut self) -> Value {
        Value::fun(self.int_fn())
    }
}

/// Salted bounded-integer hash of a value's canonical encoding.
pub fn hash_int(salt: u64, v: &Value) -> i64 {
    (fnv1a(salt, &v.encode()) % 33) as i64 - 16
}

/// Salted label from the same alphabet Gen::label uses.
pub fn hash_label(salt: u64, v: &Value) -> String {
    const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
    LABELS[(fnv1a(salt, &v.encode()) % 6) as usize].to_string()
}
