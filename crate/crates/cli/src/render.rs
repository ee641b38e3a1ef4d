use clap::ValueEnum;
use gridnet_core::constructions::SandwichReport;
use gridnet_core::search::{LineDigraphRow, SweepRow};
use gridnet_core::{BoundsReport, Diameter, FamilyParams, Prediction, SearchResult};
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub enum Report {
    Diameter { instance: String, order: usize, diameter: Diameter },
    Bounds(BoundsReport),
    Derive {
        source: FamilyParams,
        source_diameter: Diameter,
        derived: FamilyParams,
        derived_diameter: Diameter,
        failed_conditions: Vec<String>,
    },
    Search(SearchResult),
    Sweep(Vec<SweepRow>),
    Table(Vec<SweepRow>),
    Sandwich(Vec<SandwichReport>),
    LineDigraph(Vec<LineDigraphRow>),
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn pass(b: bool) -> String {
    if b { "pass" } else { "FAIL" }.to_string()
}

fn prediction(p: Prediction) -> String {
    match p {
        Prediction::Predicted { diameter, case } => format!("{diameter} ({case})"),
        Prediction::NotCovered => "not covered".into(),
        Prediction::Outside => "outside".into(),
    }
}

/// Header plus rows, rendered either as aligned text or CSV.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.header.clone());
        for row in &self.rows {
            out += &line(row.iter().map(String::as_str).collect());
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

impl Report {
    pub fn all_pass(&self) -> bool {
        match self {
            Report::Sweep(rows) | Report::Table(rows) => rows.iter().all(|r| r.pass),
            Report::Sandwich(rows) => rows.iter().all(|r| r.pass),
            Report::LineDigraph(rows) => rows.iter().all(|r| r.pass && r.matches_translation != Some(false)),
            Report::Derive { failed_conditions, .. } => failed_conditions.is_empty(),
            _ => true,
        }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json()).expect("serializable")),
            Format::Text => print!("{}", self.text()),
            Format::Csv => print!("{}", self.table().csv()),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Report::Diameter { instance, order, diameter } => {
                json!({ "instance": instance, "order": order, "diameter": diameter })
            }
            Report::Bounds(r) => json!(r),
            Report::Derive { source, source_diameter, derived, derived_diameter, failed_conditions } => json!({
                "source": source,
                "source_diameter": source_diameter,
                "derived": derived,
                "derived_diameter": derived_diameter,
                "failed_conditions": failed_conditions,
            }),
            Report::Search(r) => json!(r),
            Report::Sweep(rows) | Report::Table(rows) => json!({ "all_pass": self.all_pass(), "rows": rows }),
            Report::Sandwich(rows) => json!({ "all_pass": self.all_pass(), "rows": rows }),
            Report::LineDigraph(rows) => json!({ "all_pass": self.all_pass(), "rows": rows }),
        }
    }

    fn text(&self) -> String {
        match self {
            Report::Diameter { diameter, .. } => format!("{diameter}\n"),
            Report::Search(r) => {
                let mut out = String::new();
                out += &format!("{} search, order {} ({})\n", r.family, r.order, r.mode);
                out += &format!("min diameter       {}\n", opt(r.min_diameter));
                out += &format!("optima             {}\n", r.optimum_count);
                out += &format!("candidates         {}\n", r.candidates_examined);
                out += &format!("moore min diameter {}\n", r.moore_min_diameter);
                out += &format!("moore bound at min {}\n", opt(r.moore_bound_for_min));
                out += &format!("prediction         {}\n", prediction(r.prediction));
                out += &format!("meets prediction   {}\n", serde_json::to_value(r.meets_theorem_prediction).unwrap().as_str().unwrap());
                out += &format!("witnesses ({} shown)\n", r.witnesses.len());
                for w in &r.witnesses {
                    out += &format!("  {w}\n");
                }
                out
            }
            Report::Derive { .. } | Report::Bounds(_) => self.table().text(),
            _ => {
                let mut out = self.table().text();
                let total = self.row_count();
                let failed = total - self.pass_count();
                out += &format!("{} rows, {failed} failed\n", total);
                out
            }
        }
    }

    fn row_count(&self) -> usize {
        match self {
            Report::Sweep(r) | Report::Table(r) => r.len(),
            Report::Sandwich(r) => r.len(),
            Report::LineDigraph(r) => r.len(),
            _ => 1,
        }
    }

    fn pass_count(&self) -> usize {
        match self {
            Report::Sweep(r) | Report::Table(r) => r.iter().filter(|x| x.pass).count(),
            Report::Sandwich(r) => r.iter().filter(|x| x.pass).count(),
            Report::LineDigraph(r) => r.iter().filter(|x| x.pass && x.matches_translation != Some(false)).count(),
            _ => usize::from(self.all_pass()),
        }
    }

    fn table(&self) -> Table {
        match self {
            Report::Diameter { instance, order, diameter } => Table {
                header: vec!["instance", "order", "diameter"],
                rows: vec![vec![instance.clone(), order.to_string(), opt(diameter.finite())]],
            },
            Report::Bounds(r) => {
                let range = |x: Option<gridnet_core::OrderRange>| {
                    x.map_or("-".into(), |x| match x.missing {
                        Some(m) => format!("{}..={} (missing {m})", x.low, x.high),
                        None => format!("{}..={}", x.low, x.high),
                    })
                };
                Table {
                    header: vec!["family", "k", "moore_bound", "moore_sum", "achievable_orders", "moore_optimal_orders"],
                    rows: vec![vec![
                        r.family.to_string(),
                        r.k.to_string(),
                        r.moore_value.to_string(),
                        r.moore_sum.to_string(),
                        range(r.achievable),
                        range(Some(r.moore_optimal)),
                    ]],
                }
            }
            Report::Derive { source, source_diameter, derived, derived_diameter, failed_conditions } => Table {
                header: vec!["source", "source_diameter", "derived", "derived_diameter", "conditions"],
                rows: vec![vec![
                    source.to_string(),
                    opt(source_diameter.finite()),
                    derived.to_string(),
                    opt(derived_diameter.finite()),
                    if failed_conditions.is_empty() { "ok".into() } else { failed_conditions.join("; ") },
                ]],
            },
            Report::Search(r) => Table {
                header: vec!["family", "order", "mode", "min_diameter", "witness"],
                rows: r
                    .witnesses
                    .iter()
                    .map(|w| vec![r.family.to_string(), r.order.to_string(), r.mode.into(), opt(r.min_diameter), w.to_string()])
                    .collect(),
            },
            Report::Sweep(rows) => Table {
                header: vec!["theorem", "k", "order", "case", "instance", "predicted", "constructed", "via_na", "searched", "result"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.theorem.to_string(),
                            r.k.to_string(),
                            r.order.to_string(),
                            r.case.into(),
                            r.instance.clone(),
                            r.predicted.map_or_else(|| format!("({})", opt(r.claimed_optimum)), |p| p.to_string()),
                            opt(r.constructed.finite()),
                            opt(r.via_na.and_then(Diameter::finite)),
                            opt(r.searched),
                            pass(r.pass),
                        ]
                    })
                    .collect(),
            },
            Report::Table(rows) => Table {
                header: vec!["k", "order", "case", "diameter", "expected", "result"],
                rows: rows
                    .iter()
                    .map(|r| {
                        let expected = r.predicted.or(r.claimed_optimum);
                        vec![
                            r.k.to_string(),
                            r.order.to_string(),
                            r.case.into(),
                            opt(r.constructed.finite()),
                            opt(expected),
                            pass(r.pass),
                        ]
                    })
                    .collect(),
            },
            Report::Sandwich(rows) => Table {
                header: vec!["kind", "ds", "k", "derived_diameter", "low", "high", "result"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            serde_json::to_value(r.kind).unwrap().as_str().unwrap().to_string(),
                            r.ds.clone(),
                            r.k.to_string(),
                            opt(r.derived_diameter.finite()),
                            r.low.to_string(),
                            r.high.to_string(),
                            pass(r.pass),
                        ]
                    })
                    .collect(),
            },
            Report::LineDigraph(rows) => Table {
                header: vec!["instance", "diameter", "line_order", "line_diameter", "matches_translation", "result"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.instance.clone(),
                            r.diameter.to_string(),
                            r.line_order.to_string(),
                            opt(r.line_diameter.finite()),
                            opt(r.matches_translation),
                            pass(r.pass && r.matches_translation != Some(false)),
                        ]
                    })
                    .collect(),
            },
        }
    }
}
