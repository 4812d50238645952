//! Job configuration. Every struct rejects unknown keys.

use gauss_sieve::gaussseq::Role;
use gauss_sieve::objects::{Alphabet, BarrierRule};
use gauss_sieve::semigroup::{Bead, Component, SemigroupInstance, Window};
use gauss_sieve::tubings::{Graph, TubingStat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceConfig {
    #[default]
    PositiveInts,
    Free {
        beads: Vec<Bead>,
    },
    Chain {
        base: Box<InstanceConfig>,
        extras: Vec<Component>,
    },
}

impl InstanceConfig {
    pub fn build(&self) -> SemigroupInstance {
        match self {
            InstanceConfig::PositiveInts => SemigroupInstance::PositiveInts,
            InstanceConfig::Free { beads } => SemigroupInstance::free(beads.clone()),
            InstanceConfig::Chain { base, extras } => SemigroupInstance::chain(base.build(), extras),
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedSequence {
    /// c-sequence `c_1 = c_2 = 1`.
    Lucas,
    /// a-sequence `λ^n`.
    Powers,
    /// a-sequence `σ(n)`.
    Sigma,
    /// a-sequence `-σ(n)`.
    NegSigma,
    /// a-sequence `n`.
    Identity,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SequenceConfig {
    /// `[v_1, v_2, ...]` on `ℤ≥1`; entries past the list read as zero.
    Values { role: Role, values: Vec<i64> },
    /// `(coordinates, value)` pairs; unlisted elements read as zero.
    Support { role: Role, entries: Vec<(Vec<i64>, i64)> },
    Named {
        name: NamedSequence,
        #[serde(default)]
        lambda: Option<i64>,
    },
    /// `a_n = tr(M^n)`.
    Trace { matrix: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqConfig {
    #[serde(default)]
    pub instance: InstanceConfig,
    pub window: Window,
    pub sequence: SequenceConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Ramanujan,
    FromB,
    FromC,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClosedForm {
    ConstantOne,
    QIntegers,
    Eps,
    Lucas,
    TwoPowerPlusSign,
    AllCycleTubings,
    QBinomial,
    RiordanEven,
    RiordanGeometric,
    StrictTubings,
    CycleTubings,
    ColouredCycleTubings {
        lambda: i64,
    },
    /// `[ψ]_q qmultinomial / [|α|]_q` on a free instance.
    Fund,
    Zero,
}

impl ClosedForm {
    pub fn name(&self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v["name"].as_str().map(str::to_owned))
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Checker {
    Definition,
    Roots,
}

fn both_checkers() -> Vec<Checker> {
    vec![Checker::Definition, Checker::Roots]
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QgaussConfig {
    #[serde(default)]
    pub instance: InstanceConfig,
    pub window: Window,
    #[serde(default)]
    pub sequence: Option<SequenceConfig>,
    #[serde(default)]
    pub constructions: Vec<Construction>,
    #[serde(default)]
    pub closed_forms: Vec<ClosedForm>,
    #[serde(default = "both_checkers")]
    pub checkers: Vec<Checker>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilyConfig {
    Words {
        letters: usize,
        max_rank: u64,
    },
    Compositions {
        max_n: u64,
        k_bounds: (i64, i64),
        alphabet: Alphabet,
    },
    FestoonsContent {
        beads: Vec<Bead>,
        max_rank: u64,
    },
    FestoonsColored {
        c: Vec<i64>,
    },
    FestoonsRepeated {
        b: Vec<i64>,
    },
    /// Festoons counted by beads, on `ℤ≥1[ℤ≥1]`.
    FestoonsByBeads {
        c: Vec<i64>,
    },
    SignedFestoons {
        c: Vec<i64>,
    },
    BarrierFestoons {
        max_n: u64,
        rule: BarrierRule,
    },
    TubingsCycle {
        max_n: u64,
        #[serde(default)]
        stat: Option<TubingStat>,
        #[serde(default)]
        lambda: Option<u32>,
    },
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PolySource {
    /// Ramanujan construction from the family's own (signed) cardinalities.
    #[default]
    Ramanujan,
    /// Sum of `q^maj` over each set.
    Maj,
    ClosedForm {
        form: ClosedForm,
    },
}

fn default_object_cap() -> usize {
    2_000_000
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CspConfig {
    pub family: FamilyConfig,
    #[serde(default)]
    pub polynomial: PolySource,
    #[serde(default)]
    pub dump_objects: bool,
    #[serde(default = "default_object_cap")]
    pub max_objects: usize,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Interval,
    Cycle,
}

impl GraphKind {
    pub fn graph(self, n: usize) -> Graph {
        match self {
            GraphKind::Interval => Graph::Interval(n),
            GraphKind::Cycle => Graph::Cycle(n),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BijectionConfig {
    pub graph: GraphKind,
    pub max_n: usize,
    #[serde(default)]
    pub basepoints: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum DSeries {
    /// `1 + t²`
    Even,
    /// `1/(1-t)`
    Geometric,
    /// `(1-t)/(1-2t)`
    StrictSchroder,
    /// `d_0 + d_1 t + ...`, zero past the list.
    Coefficients { coeffs: Vec<i64> },
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RiordanConfig {
    pub d: DSeries,
    pub max_n: u64,
    #[serde(default = "yes")]
    pub verify: bool,
}
