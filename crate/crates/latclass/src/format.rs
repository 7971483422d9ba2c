//! Text formats for census tables, catalogs, growth tables and construction
//! reports. Every writer produces bytes that depend only on its input.

use std::fmt::Write as _;

use latclass_core::constructions::{AssemblyTrace, Padding};
use latclass_core::polytope::Witness;
use latclass_core::{
    invariant_vector, CensusResult, LatticePoint, LatticePolygon, LatticePolytopeD,
    RationalVolume,
};
use serde::Serialize;

use crate::Failure;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonJson {
    pub vertices: Vec<[i64; 2]>,
}

impl PolygonJson {
    pub fn new(vertices: &[LatticePoint]) -> Self {
        PolygonJson { vertices: vertices.iter().map(|v| [v.x, v.y]).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsJson {
    pub run: i64,
    pub vertices: i64,
    pub interior: i64,
    pub area2: i64,
    pub total: i64,
    pub boundary: i64,
    /// Symmetric about some point of `Z^2 / 2`.
    pub symmetric: bool,
    /// Symmetric about a lattice point.
    pub lattice_symmetric: bool,
}

impl InvariantsJson {
    pub fn of(p: &LatticePolygon) -> Self {
        let inv = invariant_vector(p);
        InvariantsJson {
            run: inv.run,
            vertices: inv.vertices,
            interior: inv.interior,
            area2: inv.area2,
            total: inv.total,
            boundary: inv.boundary,
            symmetric: inv.symmetric,
            lattice_symmetric: p.is_lattice_symmetric(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogLine<'a> {
    pub param: i64,
    pub mode: &'a str,
    pub canonical: PolygonJson,
    pub invariants: InvariantsJson,
}

/// `param,count` with one row per parameter.
pub fn census_csv(rows: &[CensusResult]) -> String {
    let mut out = String::from("param,count\n");
    for r in rows {
        writeln!(out, "{},{}", r.parameter, r.count()).unwrap();
    }
    out
}

/// One JSON object per class, ordered by parameter and then by the bytes of
/// the serialized canonical polygon.
pub fn catalog_jsonl(rows: &[CensusResult]) -> Result<String, Failure> {
    let mut lines = Vec::new();
    for r in rows {
        for form in &r.classes {
            let canonical = PolygonJson::new(form.vertices());
            let key = serde_json::to_vec(&canonical)?;
            let line = CatalogLine {
                param: r.parameter,
                mode: r.mode.as_str(),
                canonical,
                invariants: InvariantsJson::of(&form.to_polygon()),
            };
            lines.push((r.parameter, key, serde_json::to_string(&line)?));
        }
    }
    lines.sort();
    let mut out = String::new();
    for (_, _, line) in lines {
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

/// `param,count,log2_count,log2_count_over_cuberoot`, floats with six
/// decimals. The log columns are empty for a zero count.
pub fn growth_csv(rows: &[CensusResult]) -> String {
    let mut out = String::from("param,count,log2_count,log2_count_over_cuberoot\n");
    for r in rows {
        let count = r.count();
        if count == 0 {
            writeln!(out, "{},0,,", r.parameter).unwrap();
            continue;
        }
        let lg = (count as f64).log2();
        let scaled = lg / (r.parameter as f64).cbrt();
        writeln!(out, "{},{},{:.6},{:.6}", r.parameter, count, lg, scaled).unwrap();
    }
    out
}

/// `d,w,k,volume_num,volume_den,count`; an empty count means the scan was
/// over budget.
pub fn witness_csv(d: i64, w: i64, witnesses: &[Witness]) -> String {
    let mut out = String::from("d,w,k,volume_num,volume_den,count\n");
    for wit in witnesses {
        let count = wit.count.map(|c| c.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{d},{w},{},{},{},{count}",
            wit.k,
            wit.volume.numerator(),
            wit.volume.denominator()
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeJson {
    pub num: i64,
    pub den: i64,
}

impl From<RationalVolume> for VolumeJson {
    fn from(v: RationalVolume) -> Self {
        VolumeJson { num: v.numerator(), den: v.denominator() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub volume: VolumeJson,
    pub count: Option<i64>,
}

impl PolytopeJson {
    pub fn new(p: &LatticePolytopeD, volume: RationalVolume, count: Option<i64>) -> Self {
        PolytopeJson {
            dim: p.dim(),
            vertices: p.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            volume: volume.into(),
            count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub tau2: i64,
    pub target: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder: Option<i64>,
    pub base: PolygonJson,
    pub sizes: Vec<(String, i64)>,
}

impl From<&AssemblyTrace> for TraceJson {
    fn from(t: &AssemblyTrace) -> Self {
        let mut out = TraceJson {
            tau2: t.tau2,
            target: t.target,
            j: None,
            mu2: None,
            n: None,
            k: None,
            remainder: None,
            base: PolygonJson::new(t.base.vertices()),
            sizes: t.part_sizes.iter().map(|&(name, n)| (name.to_string(), n)).collect(),
        };
        match t.padding {
            Padding::Symmetric { j, mu2 } => {
                out.j = Some(j);
                out.mu2 = Some(mu2);
            }
            Padding::Cardinality { n, k, remainder } => {
                out.n = Some(n);
                out.k = Some(k);
                out.remainder = Some(remainder);
            }
        }
        out
    }
}

/// One constructed polygon, with the choice and trace when it came from an
/// assembly.
#[derive(Debug, Clone, Serialize)]
pub struct PolygonReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub choice: Option<String>,
    pub polygon: PolygonJson,
    pub invariants: InvariantsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

impl PolygonReport {
    pub fn plain(p: &LatticePolygon) -> Self {
        PolygonReport {
            choice: None,
            polygon: PolygonJson::new(p.vertices()),
            invariants: InvariantsJson::of(p),
            trace: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub family: &'static str,
    pub polygons: Vec<PolygonReport>,
    /// Number of pairwise inequivalent polygons among `polygons`.
    pub classes: usize,
}

pub fn to_json_line<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use latclass_core::{census_table, CensusMode};

    #[test]
    fn census_rows() {
        let rows = census_table(CensusMode::Area, 1..=4, false).unwrap();
        assert_eq!(census_csv(&rows), "param,count\n1,1\n2,2\n3,3\n4,7\n");
    }

    #[test]
    fn catalog_is_one_object_per_class() {
        let rows = census_table(CensusMode::Cardinality, 3..=5, false).unwrap();
        let text = catalog_jsonl(&rows).unwrap();
        assert_eq!(text.lines().count(), 1 + 3 + 6);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["param"], 3);
        assert_eq!(first["mode"], "cardinality");
        assert_eq!(first["invariants"]["area2"], 1);
        assert_eq!(first["canonical"]["vertices"][0], serde_json::json!([0, 0]));
    }

    #[test]
    fn growth_columns() {
        let rows = census_table(CensusMode::Cardinality, 3..=4, false).unwrap();
        let text = growth_csv(&rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "3,1,0.000000,0.000000");
        let cols: Vec<&str> = lines[2].split(',').collect();
        assert_eq!(cols[..3], ["4", "3", "1.584963"]);
    }

    #[test]
    fn trace_fields_follow_padding() {
        let len = latclass_core::constructions::choice_len(4, latclass_core::MTauMode::Quarter).unwrap();
        let u = latclass_core::ChoiceVector::new(vec![1; len]).unwrap();
        let m = latclass_core::constructions::min_symmetric_target(4).unwrap();
        let (_, trace) = latclass_core::assemble_symmetric(4, m, &u).unwrap();
        let v = serde_json::to_value(TraceJson::from(&trace)).unwrap();
        assert!(v.get("j").is_some() && v.get("mu2").is_some());
        assert!(v.get("n").is_none());
    }
}
