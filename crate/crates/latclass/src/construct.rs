//! Choice handling and batch assembly for the `construct` subcommand.

use std::collections::BTreeSet;

use latclass_core::constructions::choice_len;
use latclass_core::{
    assemble_cardinality, assemble_symmetric, canonical_form, AssemblyTrace, ChoiceVector,
    LatticePolygon, MTauMode,
};
use rayon::prelude::*;

use crate::format::{ConstructionReport, InvariantsJson, PolygonJson, PolygonReport, TraceJson};
use crate::{Failure, Runner};

/// Without `--all`, at most `2^CHOICE_CAP_BITS` choice vectors are expanded.
pub const CHOICE_CAP_BITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assembly {
    Symmetric,
    Cardinality,
}

impl Assembly {
    fn shape(self) -> MTauMode {
        match self {
            Assembly::Symmetric => MTauMode::Quarter,
            Assembly::Cardinality => MTauMode::Half,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Assembly::Symmetric => "assemble-sym",
            Assembly::Cardinality => "assemble-card",
        }
    }

    fn run(self, tau2: i64, target: i64, u: &ChoiceVector) -> latclass_core::Result<(LatticePolygon, AssemblyTrace)> {
        match self {
            Assembly::Symmetric => assemble_symmetric(tau2, target, u),
            Assembly::Cardinality => assemble_cardinality(tau2, target, u),
        }
    }
}

/// Parses `1,2,1` or `121`.
pub fn parse_choice(text: &str) -> Result<ChoiceVector, Failure> {
    let bits = text
        .chars()
        .filter(|c| *c != ',' && !c.is_whitespace())
        .map(|c| match c {
            '1' => Ok(1),
            '2' => Ok(2),
            _ => Err(Failure::Usage(format!("choice entry {c:?} is not 1 or 2"))),
        })
        .collect::<Result<Vec<u8>, _>>()?;
    Ok(ChoiceVector::new(bits)?)
}

/// The choice vectors to build: the given one, or all of them. Expanding
/// more than `2^CHOICE_CAP_BITS` needs `all`.
pub fn choices(
    assembly: Assembly,
    tau2: i64,
    choice: Option<&str>,
    all: bool,
) -> Result<Vec<ChoiceVector>, Failure> {
    let len = choice_len(tau2, assembly.shape())?;
    if let Some(text) = choice {
        let u = parse_choice(text)?;
        if u.len() != len {
            return Err(Failure::Usage(format!(
                "tau^2 = {tau2} needs {len} choice entries, got {}",
                u.len()
            )));
        }
        return Ok(vec![u]);
    }
    if len > CHOICE_CAP_BITS && !all {
        return Err(Failure::Usage(format!(
            "tau^2 = {tau2} has 2^{len} choice vectors; pass --choice or --all"
        )));
    }
    if len >= 63 {
        return Err(Failure::Usage(format!("2^{len} choice vectors cannot be listed")));
    }
    Ok(ChoiceVector::all(len).collect())
}

/// Builds one polygon per choice vector, in choice order.
pub fn assemble_batch(
    runner: &Runner,
    assembly: Assembly,
    tau2: i64,
    target: i64,
    choices: &[ChoiceVector],
) -> Result<ConstructionReport, Failure> {
    let built: Vec<(LatticePolygon, AssemblyTrace)> = runner.install(|| {
        choices
            .par_iter()
            .map(|u| assembly.run(tau2, target, u))
            .collect::<latclass_core::Result<_>>()
    })?;
    let classes: BTreeSet<_> = built.iter().map(|(p, _)| canonical_form(p)).collect();
    let polygons = choices
        .iter()
        .zip(&built)
        .map(|(u, (p, trace))| PolygonReport {
            choice: Some(u.to_string()),
            polygon: PolygonJson::new(p.vertices()),
            invariants: InvariantsJson::of(p),
            trace: Some(TraceJson::from(trace)),
        })
        .collect();
    Ok(ConstructionReport { family: assembly.name(), polygons, classes: classes.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choice_syntax() {
        assert_eq!(parse_choice("1,2, 1").unwrap().bits(), &[1, 2, 1]);
        assert_eq!(parse_choice("212").unwrap().bits(), &[2, 1, 2]);
        assert_eq!(parse_choice("1,3").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn all_choices_in_order() {
        let len = choice_len(4, MTauMode::Quarter).unwrap();
        let cs = choices(Assembly::Symmetric, 4, None, false).unwrap();
        assert_eq!(cs.len(), 1 << len);
        assert!(cs.windows(2).all(|w| w[0] < w[1]));
        assert!(choices(Assembly::Symmetric, 4, Some("1"), false).is_err() || len == 1);
    }

    #[test]
    fn batch_is_independent_of_threads() {
        let cs = choices(Assembly::Cardinality, 4, None, false).unwrap();
        let w = latclass_core::constructions::min_cardinality_target(4).unwrap() + 5;
        let one = assemble_batch(&Runner::new(1, None).unwrap(), Assembly::Cardinality, 4, w, &cs).unwrap();
        let many = assemble_batch(&Runner::new(4, None).unwrap(), Assembly::Cardinality, 4, w, &cs).unwrap();
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
        assert!(one.polygons.iter().all(|p| p.invariants.total == w));
    }
}
