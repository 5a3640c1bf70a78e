//! Name-addressed law checking over every shipped instance.
//!
//! `check_laws` pairs a suite id with an instance id, runs the suite, and
//! returns a serialisable report. The registry is the single catalogue the
//! CLI and the foreign-function layer dispatch through, so unknown names
//! are configuration errors rather than panics.

use thiserror::Error;

use crate::arrow::{
    ArrowRepF, DoubleA, DoubleB, FreePA, HomP, KleisliWP, PreExpF, TambaraP,
};
use crate::day::{DayF, FreeApF, RepApF};
use crate::free_monad::{CodensityF, ConsoleSig, FreeMonadF, PairSig};
use crate::functor::{Functor, IdF, KleisliFn, ListF, Monad, MultiF, WriterF};
use crate::gen::Gen;
use crate::laws::{
    applicative_laws, arrow_laws, functor_laws, monad_laws, monoid_laws,
    monoidal_laws, prearrow_laws, profunctor_laws, run_laws, strength_laws,
    Law, SuiteReport,
};
use crate::observe::Observation;
use crate::set_monoid::{EndoMonoid, IntAdd, IntMul, ListAppend, StrConcat};
use crate::transport::{KleisliA, MonadAp, RevF, StaticA};
use crate::value::{SampledFn, Value};
use crate::writer::Writer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown law suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown instance `{instance}` for suite `{suite}`")]
    UnknownInstance { suite: String, instance: String },
}

/// Suite ids accepted by `check_laws`. `applicative` is the apply-style
/// presentation; `monoidal` is the tensor-style presentation of the same
/// structure.
pub const SUITES: &[&str] = &[
    "monoid",
    "functor",
    "monad",
    "applicative",
    "monoidal",
    "profunctor",
    "prearrow",
    "strength",
    "arrow",
];

const MONOID_INSTANCES: &[&str] = &[
    "int-add",
    "int-mul",
    "string-concat",
    "list-append",
    "endo-int-add",
    "endo-list-append",
];

const FUNCTOR_INSTANCES: &[&str] = &[
    "identity",
    "list",
    "writer",
    "multi",
    "day-writer-list",
    "free-applicative-writer",
    "rep-applicative-writer",
    "free-monad-console",
    "free-monad-pair",
    "codensity-console",
];

const MONAD_INSTANCES: &[&str] = &[
    "identity",
    "writer",
    "free-monad-console",
    "free-monad-pair",
    "codensity-console",
    "codensity-pair",
    "broken-writer",
];

const APPLICATIVE_INSTANCES: &[&str] = &[
    "identity",
    "list",
    "writer",
    "multi",
    "free-applicative-writer",
    "free-applicative-list",
    "rep-applicative-writer",
    "rep-applicative-multi",
    "monad-writer",
    "reversed-writer",
];

const PROFUNCTOR_INSTANCES: &[&str] = &[
    "hom",
    "kleisli-writer",
    "double-a",
    "double-b",
    "free-prearrow-kleisli",
    "free-prearrow-hom",
    "pre-exp-kleisli",
    "tambara-kleisli",
    "tambara-hom",
    "tambara-double-a",
    "arrow-rep-kleisli",
    "arrow-rep-hom",
    "static-writer",
    "static-identity",
    "kleisli-arrow-writer",
    "kleisli-arrow-console",
];

const PREARROW_INSTANCES: &[&str] = &[
    "hom",
    "kleisli-writer",
    "free-prearrow-kleisli",
    "free-prearrow-hom",
    "pre-exp-kleisli",
    "tambara-kleisli",
    "tambara-hom",
    "arrow-rep-kleisli",
    "arrow-rep-hom",
    "static-writer",
    "static-identity",
    "kleisli-arrow-writer",
    "kleisli-arrow-console",
];

const STRENGTH_INSTANCES: &[&str] = &[
    "hom",
    "kleisli-writer",
    "double-a",
    "double-b",
    "free-prearrow-kleisli",
    "free-prearrow-hom",
    "tambara-kleisli",
    "tambara-hom",
    "tambara-double-a",
    "arrow-rep-kleisli",
    "arrow-rep-hom",
    "static-writer",
    "static-identity",
    "kleisli-arrow-writer",
    "kleisli-arrow-console",
];

const ARROW_INSTANCES: &[&str] = &[
    "hom",
    "kleisli-writer",
    "free-prearrow-kleisli",
    "free-prearrow-hom",
    "tambara-kleisli",
    "tambara-hom",
    "arrow-rep-kleisli",
    "arrow-rep-hom",
    "static-writer",
    "static-identity",
    "kleisli-arrow-writer",
    "kleisli-arrow-console",
];

/// Valid instance ids for a suite.
pub fn instances(suite: &str) -> Result<&'static [&'static str], ConfigError> {
    match suite {
        "monoid" => Ok(MONOID_INSTANCES),
        "functor" => Ok(FUNCTOR_INSTANCES),
        "monad" => Ok(MONAD_INSTANCES),
        "applicative" | "monoidal" => Ok(APPLICATIVE_INSTANCES),
        "profunctor" => Ok(PROFUNCTOR_INSTANCES),
        "prearrow" => Ok(PREARROW_INSTANCES),
        "strength" => Ok(STRENGTH_INSTANCES),
        "arrow" => Ok(ARROW_INSTANCES),
        other => Err(ConfigError::UnknownSuite(other.to_string())),
    }
}

/// Writer monad with a bind that drops the first computation's log. Kept in
/// the registry so the harness's ability to catch violations stays
/// demonstrable end to end.
#[derive(Clone, Copy, Default)]
struct BrokenWriterF;

impl Functor for BrokenWriterF {
    type Val = Writer;

    fn fmap(&self, f: &SampledFn, x: &Writer) -> Writer {
        WriterF.fmap(f, x)
    }

    fn generate_with(
        &self,
        g: &mut Gen,
        payload: &mut dyn FnMut(&mut Gen) -> Value,
    ) -> Writer {
        WriterF.generate_with(g, payload)
    }

    fn observe(&self, x: &Writer) -> Observation {
        WriterF.observe(x)
    }
}

impl Monad for BrokenWriterF {
    fn ret(&self, v: Value) -> Writer {
        Writer::ret(v)
    }

    fn bind(&self, m: &Writer, k: &KleisliFn<Writer>) -> Writer {
        k.apply(&m.val)
    }

    fn gen_kleisli(&self, g: &mut Gen) -> KleisliFn<Writer> {
        WriterF.gen_kleisli(g)
    }
}

fn unknown(suite: &str, instance: &str) -> ConfigError {
    ConfigError::UnknownInstance {
        suite: suite.to_string(),
        instance: instance.to_string(),
    }
}

fn monoid_suite(instance: &str) -> Option<Vec<Law>> {
    Some(match instance {
        "int-add" => monoid_laws(IntAdd),
        "int-mul" => monoid_laws(IntMul),
        "string-concat" => monoid_laws(StrConcat),
        "list-append" => monoid_laws(ListAppend),
        "endo-int-add" => monoid_laws(EndoMonoid { base: IntAdd }),
        "endo-list-append" => monoid_laws(EndoMonoid { base: ListAppend }),
        _ => return None,
    })
}

fn functor_suite(instance: &str) -> Option<Vec<Law>> {
    Some(match instance {
        "identity" => functor_laws(IdF),
        "list" => functor_laws(ListF),
        "writer" => functor_laws(WriterF),
        "multi" => functor_laws(MultiF),
        "day-writer-list" => functor_laws(DayF {
            f: WriterF,
            g: ListF,
        }),
        "free-applicative-writer" => functor_laws(FreeApF { eff: WriterF }),
        "rep-applicative-writer" => functor_laws(RepApF { base: WriterF }),
        "free-monad-console" => functor_laws(FreeMonadF { sig: ConsoleSig }),
        "free-monad-pair" => functor_laws(FreeMonadF { sig: PairSig }),
        "codensity-console" => functor_laws(CodensityF { sig: ConsoleSig }),
        _ => return None,
    })
}

fn monad_suite(instance: &str) -> Option<Vec<Law>> {
    Some(match instance {
        "identity" => monad_laws(IdF),
        "writer" => monad_laws(WriterF),
        "free-monad-console" => monad_laws(FreeMonadF { sig: ConsoleSig }),
        "free-monad-pair" => monad_laws(FreeMonadF { sig: PairSig }),
        "codensity-console" => monad_laws(CodensityF { sig: ConsoleSig }),
        "codensity-pair" => monad_laws(CodensityF { sig: PairSig }),
        "broken-writer" => monad_laws(BrokenWriterF),
        _ => return None,
    })
}

fn applicative_suite(instance: &str, monoidal: bool) -> Option<Vec<Law>> {
    macro_rules! pick {
        ($d:expr) => {
            if monoidal {
                monoidal_laws($d)
            } else {
                applicative_laws($d)
            }
        };
    }
    Some(match instance {
        "identity" => pick!(IdF),
        "list" => pick!(ListF),
        "writer" => pick!(WriterF),
        "multi" => pick!(MultiF),
        "free-applicative-writer" => pick!(FreeApF { eff: WriterF }),
        "free-applicative-list" => pick!(FreeApF { eff: ListF }),
        "rep-applicative-writer" => pick!(RepApF { base: WriterF }),
        "rep-applicative-multi" => pick!(RepApF { base: MultiF }),
        "monad-writer" => pick!(MonadAp { base: WriterF }),
        "reversed-writer" => pick!(RevF { base: WriterF }),
        _ => return None,
    })
}

fn profunctor_style_suite(
    suite: &str,
    instance: &str,
) -> Option<Option<Vec<Law>>> {
    macro_rules! pick {
        ($d:expr, pro) => {
            match suite {
                "profunctor" => Some(profunctor_laws($d)),
                "strength" | "prearrow" | "arrow" => None,
                _ => unreachable!(),
            }
        };
        ($d:expr, strong) => {
            match suite {
                "profunctor" => Some(profunctor_laws($d)),
                "strength" => Some(strength_laws($d)),
                "prearrow" | "arrow" => None,
                _ => unreachable!(),
            }
        };
        ($d:expr, pre) => {
            match suite {
                "profunctor" => Some(profunctor_laws($d)),
                "prearrow" => Some(prearrow_laws($d)),
                "strength" | "arrow" => None,
                _ => unreachable!(),
            }
        };
        ($d:expr, arrow) => {
            match suite {
                "profunctor" => Some(profunctor_laws($d)),
                "prearrow" => Some(prearrow_laws($d)),
                "strength" => Some(strength_laws($d)),
                "arrow" => Some(arrow_laws($d)),
                _ => unreachable!(),
            }
        };
    }
    Some(match instance {
        "hom" => pick!(HomP, arrow),
        "kleisli-writer" => pick!(KleisliWP, arrow),
        "double-a" => pick!(DoubleA, strong),
        "double-b" => pick!(DoubleB, strong),
        "free-prearrow-kleisli" => pick!(FreePA { atom: KleisliWP }, arrow),
        "free-prearrow-hom" => pick!(FreePA { atom: HomP }, arrow),
        "pre-exp-kleisli" => pick!(PreExpF { base: KleisliWP }, pre),
        "tambara-kleisli" => pick!(TambaraP { base: KleisliWP }, arrow),
        "tambara-hom" => pick!(TambaraP { base: HomP }, arrow),
        "tambara-double-a" => pick!(TambaraP { base: DoubleA }, strong),
        "arrow-rep-kleisli" => pick!(ArrowRepF { base: KleisliWP }, arrow),
        "arrow-rep-hom" => pick!(ArrowRepF { base: HomP }, arrow),
        "static-writer" => pick!(StaticA { base: WriterF }, arrow),
        "static-identity" => pick!(StaticA { base: IdF }, arrow),
        "kleisli-arrow-writer" => pick!(KleisliA { base: WriterF }, arrow),
        "kleisli-arrow-console" => pick!(
            KleisliA {
                base: FreeMonadF { sig: ConsoleSig },
            },
            arrow
        ),
        _ => return None,
    })
}

/// Run the named suite against the named instance.
pub fn check_laws(
    suite: &str,
    instance: &str,
    seed: u64,
    size: usize,
    trials: u64,
) -> Result<SuiteReport, ConfigError> {
    let laws = match suite {
        "monoid" => monoid_suite(instance),
        "functor" => functor_suite(instance),
        "monad" => monad_suite(instance),
        "applicative" => applicative_suite(instance, false),
        "monoidal" => applicative_suite(instance, true),
        "profunctor" | "prearrow" | "strength" | "arrow" => {
            match profunctor_style_suite(suite, instance) {
                Some(Some(laws)) => Some(laws),
                Some(None) | None => None,
            }
        }
        other => return Err(ConfigError::UnknownSuite(other.to_string())),
    };
    let laws = laws.ok_or_else(|| unknown(suite, instance))?;
    Ok(SuiteReport {
        suite: suite.to_string(),
        instance: instance.to_string(),
        laws: run_laws(laws, seed, size, trials),
    })
}
