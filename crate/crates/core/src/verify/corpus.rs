use crate::error::{Error, Result};
use crate::families::{iterated_mycielskian, FamilySpec, MycielskiGraph};
use crate::graph::Graph;

use super::Profile;

/// A named graph of the fixed test corpus.
#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: &'static str,
    pub full_only: bool,
}

const fn entry(name: &'static str, spec: &'static str, full_only: bool) -> CorpusEntry {
    CorpusEntry { name, spec, full_only }
}

pub const CORPUS: &[CorpusEntry] = &[
    entry("K2", "complete 2", false),
    entry("K3", "complete 3", false),
    entry("K4", "complete 4", false),
    entry("P4", "path 4", false),
    entry("C5", "cycle 5", false),
    entry("C7", "cycle 7", false),
    entry("K2xK3", "product complete 2 complete 3", false),
    entry("KG(5,2)", "kneser 5 2", false),
    entry("KG(4,2)", "kneser 4 2", false),
    entry("SG(5,2)", "schrijver 5 2", false),
    entry("SG(6,2)", "schrijver 6 2", false),
    entry("M(K2)", "mycielski 1 complete 2", false),
    entry("M(K3)", "mycielski 1 complete 3", false),
    entry("M(C5)", "mycielski 1 cycle 5", false),
    entry("KG(6,2)", "kneser 6 2", true),
    entry("KG(7,2)", "kneser 7 2", true),
    entry("KG(7,3)", "kneser 7 3", true),
    entry("KG(6,3,1)", "gen_kneser 6 3 1", true),
    entry("M2(K2)", "mycielski 2 complete 2", true),
    entry("M2(K3)", "mycielski 2 complete 3", true),
    entry("M(KG(5,2))", "mycielski 1 kneser 5 2", true),
];

impl CorpusEntry {
    pub fn family(&self) -> FamilySpec {
        let words: Vec<&str> = self.spec.split_whitespace().collect();
        FamilySpec::parse(&words).expect("corpus specs parse")
    }

    pub fn graph(&self) -> Result<Graph> {
        self.family().build()
    }

    /// Mycielski bookkeeping when the entry is an iterated Mycielskian.
    pub fn mycielski(&self) -> Result<Option<MycielskiGraph>> {
        match self.family() {
            FamilySpec::Mycielski { t, base } => Ok(Some(iterated_mycielskian(&base.build()?, t)?)),
            _ => Ok(None),
        }
    }
}

/// Corpus members of a profile, in registry order.
pub fn corpus(profile: Profile) -> impl Iterator<Item = &'static CorpusEntry> {
    CORPUS.iter().filter(move |e| profile == Profile::Full || !e.full_only)
}

pub fn lookup(name: &str) -> Result<&'static CorpusEntry> {
    CORPUS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Precondition(format!("unknown corpus graph {name:?}")))
}
