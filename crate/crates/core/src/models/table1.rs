use std::fmt::Write;

use serde::Serialize;

use super::{build_model, ModelKind, Realisation, Regime};
use crate::complex::{SurfaceTag, SurfaceType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub kind: ModelKind,
    pub expected: SurfaceTag,
    pub computed: Option<SurfaceType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub cells: Vec<Table1Cell>,
    pub pass: bool,
}

fn expected(kind: ModelKind) -> SurfaceTag {
    match (kind.regime, kind.realisation) {
        (Regime::Valid, Realisation::Unrealised) => SurfaceTag::Annulus,
        (Regime::Valid, Realisation::Realised) => SurfaceTag::Sphere,
        (Regime::Contradictory, Realisation::Unrealised) => SurfaceTag::KleinBottle,
        (Regime::Contradictory, Realisation::Realised) => SurfaceTag::ProjectivePlane,
    }
}

/// Builds and classifies all four models from scratch.
pub fn table1_report() -> Table1Report {
    let cells: Vec<Table1Cell> = ModelKind::ALL
        .into_iter()
        .map(|kind| {
            let result = build_model(kind).map_err(|e| e.to_string()).and_then(|m| m.complex.classify().map_err(|e| e.to_string()));
            let expected = expected(kind);
            match result {
                Ok(t) => Table1Cell { kind, expected, pass: t.tag == expected, computed: Some(t), error: None },
                Err(e) => Table1Cell { kind, expected, computed: None, error: Some(e), pass: false },
            }
        })
        .collect();
    let pass = cells.iter().all(|c| c.pass);
    Table1Report { cells, pass }
}

impl Table1Report {
    pub fn cell(&self, kind: ModelKind) -> &Table1Cell {
        self.cells.iter().find(|c| c.kind == kind).expect("all four cells")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Rows by cycle regime, columns by realisation.
    pub fn to_text(&self) -> String {
        let show = |c: &Table1Cell| match &c.computed {
            Some(t) if c.pass => format!("{} (chi={})", t.tag, t.record.euler_characteristic),
            Some(t) => format!("{} != {}", t.tag, c.expected),
            None => format!("error != {}", c.expected),
        };
        let mut out = String::new();
        writeln!(out, "{:<16}| {:<28}| {:<28}", "Preference cycles", "Unrealised", "Realised").unwrap();
        writeln!(out, "{}", "-".repeat(76)).unwrap();
        for (name, regime) in [("Valid", Regime::Valid), ("Contradictory", Regime::Contradictory)] {
            let u = self.cell(ModelKind { regime, realisation: Realisation::Unrealised });
            let r = self.cell(ModelKind { regime, realisation: Realisation::Realised });
            writeln!(out, "{:<16}| {:<28}| {:<28}", name, show(u), show(r)).unwrap();
        }
        for c in self.cells.iter().filter(|c| !c.pass) {
            if let Some(e) = &c.error {
                writeln!(out, "{}: {e}", c.kind).unwrap();
            }
        }
        writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}
