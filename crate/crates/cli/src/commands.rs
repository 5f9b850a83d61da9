//! One function per subcommand; each returns a serializable value.

use anyhow::{bail, Context, Result};
use aqt_core::arr::{charpoly_ff, zaslavsky_counts};
use aqt_core::paths::{area_prime, from_labeled_path, to_labeled_path};
use aqt_core::qt::{genfun, is_qt_symmetric, matrix_csv, specialize_antidiagonal, Sign};
use aqt_core::regions::{census, dominant_inverse_filter, enumerate_simplex};
use aqt_core::stats::{ish_closed, shi, StatRecord};
use aqt_core::{
    choose2, Arrangement, Error, Family, LabeledPath, QPoly, QTPoly, SimplexSpec, Window,
};
use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Default cap on enumerated alcoves and on brute-force point counting work.
pub const DEFAULT_BUDGET: u128 = 1_000_000;
/// Point counting is far cheaper per operation than enumeration.
pub const CHARPOLY_BUDGET_FACTOR: u128 = 1_000;

pub fn parse_window(text: &str, n: Option<usize>) -> Result<Window> {
    let w: Window = text
        .parse()
        .with_context(|| format!("invalid window {text:?}"))?;
    if let Some(n) = n {
        if w.n() != n {
            return Err(Error::BadLength {
                expected: n,
                found: w.n(),
            }
            .into());
        }
    }
    Ok(w)
}

pub fn cmd_stat(window: &str, n: Option<usize>) -> Result<StatRecord> {
    Ok(StatRecord::of(&parse_window(window, n)?))
}

/// Which alcoves a table or generating function runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Selection {
    pub n: usize,
    pub m: u32,
    pub sign: Sign,
    pub positive_only: bool,
}

impl Selection {
    pub fn simplex(&self) -> Result<SimplexSpec> {
        if self.m == 0 {
            bail!(Error::BadArgs("m must be at least 1".into()));
        }
        let p = self.sign.p(self.n, self.m);
        if p < 1 {
            bail!(Error::BadArgs(format!(
                "no simplex for n = {}, m = {}",
                self.n, self.m
            )));
        }
        Ok(SimplexSpec::new(self.n, p as u64)?)
    }

    pub fn alcoves(&self, budget: u128) -> Result<Vec<Window>> {
        let s = self.simplex()?;
        if s.alcove_count() > budget {
            bail!(Error::BudgetExceeded {
                needed: s.alcove_count(),
                budget
            });
        }
        let ws = enumerate_simplex(&s);
        Ok(if self.positive_only {
            dominant_inverse_filter(&ws)
        } else {
            ws
        })
    }

    pub fn offset(&self) -> i64 {
        self.sign.t_offset(self.n, self.m)
    }

    pub fn genfun(&self, budget: u128) -> Result<QTPoly> {
        Ok(genfun(&self.alcoves(budget)?, self.m, self.sign)?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableOutput {
    #[serde(flatten)]
    pub selection: Selection,
    /// `rows[shi][ish]` counts alcoves by `shi^m` and `ish` of the inverse.
    pub rows: Vec<Vec<i64>>,
    pub total: i64,
}

impl TableOutput {
    pub fn csv(&self) -> String {
        let rows: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        matrix_csv(&rows, "shi", "ish_inv")
    }
}

pub fn cmd_table(selection: Selection, budget: u128) -> Result<TableOutput> {
    let f = selection.genfun(budget)?;
    let rows: Vec<Vec<i64>> = f
        .matrix(selection.offset() as u32)?
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| i64::try_from(c).expect("table entry fits"))
                .collect()
        })
        .collect();
    let total = rows.iter().flatten().sum();
    Ok(TableOutput {
        selection,
        rows,
        total,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GenfunOutput {
    #[serde(flatten)]
    pub selection: Selection,
    pub genfun: QTPoly,
    pub text: String,
    /// `q^offset F(q, 1/q)`.
    pub antidiagonal: QPoly,
    pub antidiagonal_text: String,
    pub qt_symmetric: bool,
}

pub fn cmd_genfun(selection: Selection, budget: u128) -> Result<GenfunOutput> {
    let f = selection.genfun(budget)?;
    let antidiagonal = specialize_antidiagonal(&f, selection.offset())?;
    Ok(GenfunOutput {
        selection,
        text: f.to_string(),
        antidiagonal_text: antidiagonal.to_string(),
        qt_symmetric: is_qt_symmetric(&f),
        genfun: f,
        antidiagonal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplexOutput {
    pub n: usize,
    pub p: u64,
    pub alcoves: Vec<Window>,
}

pub fn cmd_enumerate_simplex(
    n: usize,
    p: u64,
    dominant_inverse: bool,
    budget: u128,
) -> Result<SimplexOutput> {
    let s = SimplexSpec::new(n, p)?;
    if s.alcove_count() > budget {
        bail!(Error::BudgetExceeded {
            needed: s.alcove_count(),
            budget
        });
    }
    let mut alcoves = enumerate_simplex(&s);
    if dominant_inverse {
        alcoves = dominant_inverse_filter(&alcoves);
    }
    Ok(SimplexOutput { n, p, alcoves })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChamberRow {
    pub descriptor: String,
    pub descriptor_hash: String,
    pub min_window: Window,
    pub length: usize,
    pub bounded: bool,
    pub max_window: Option<Window>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusOutput {
    pub n: usize,
    pub m: u32,
    pub chambers: Vec<ChamberRow>,
    pub chamber_count: usize,
    pub bounded_count: usize,
}

impl CensusOutput {
    pub fn csv(&self) -> String {
        let mut out = String::from("descriptor-hash,min-window,length,bounded\n");
        for c in &self.chambers {
            out.push_str(&format!(
                "{},\"{}\",{},{}\n",
                c.descriptor_hash, c.min_window, c.length, c.bounded
            ));
        }
        out
    }
}

fn short_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn cmd_enumerate_chambers(n: usize, m: u32, budget: u128) -> Result<CensusOutput> {
    let expected = (m as u128 * n as u128 + 1).pow(n.saturating_sub(1) as u32);
    if expected > budget {
        bail!(Error::BudgetExceeded {
            needed: expected,
            budget
        });
    }
    let chambers: Vec<ChamberRow> = census(n, m)?
        .into_iter()
        .map(|r| {
            let descriptor = r.descriptor.to_string();
            ChamberRow {
                descriptor_hash: short_hash(&descriptor),
                descriptor,
                length: r.min.length(),
                min_window: r.min,
                bounded: r.bounded,
                max_window: r.max,
            }
        })
        .collect();
    let bounded_count = chambers.iter().filter(|c| c.bounded).count();
    Ok(CensusOutput {
        n,
        m,
        chamber_count: chambers.len(),
        bounded_count,
        chambers,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharpolyOutput {
    pub family: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub coeffs: Vec<serde_json::Value>,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chambers: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded: Option<serde_json::Value>,
}

fn json_int(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => v.into(),
        Err(_) => c.to_string().into(),
    }
}

pub fn cmd_charpoly(
    family: &str,
    n: usize,
    m: Option<u32>,
    with_counts: bool,
    budget: u128,
) -> Result<CharpolyOutput> {
    let family = Family::parse(family, m)?;
    let arr = Arrangement::build(family, n)?;
    let chi = charpoly_ff(&arr, budget.saturating_mul(CHARPOLY_BUDGET_FACTOR))?;
    let (chambers, bounded) = if with_counts {
        let (c, b) = zaslavsky_counts(&chi, n);
        (Some(json_int(&c)), Some(json_int(&b)))
    } else {
        (None, None)
    };
    Ok(CharpolyOutput {
        family: family.name().to_string(),
        n,
        m: match family {
            Family::ShiM(m) | Family::AffTruncated(m) => Some(m),
            _ => None,
        },
        coeffs: chi.coeffs().iter().map(json_int).collect(),
        text: chi.to_string(),
        chambers,
        bounded,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionOutput {
    pub window: Window,
    pub path: LabeledPath,
    pub render: String,
    pub shi: i64,
    pub ish: i64,
    pub area_prime: i64,
    pub bounce: i64,
    pub statistics_match: bool,
}

fn describe(w: Window, path: LabeledPath) -> BijectionOutput {
    let n = w.n();
    let (s, i) = (shi(&w), ish_closed(&w));
    let (a, b) = (area_prime(&path), path.ideal().bounce());
    BijectionOutput {
        render: path.render(),
        statistics_match: (choose2(n) - s, i) == (a, b),
        window: w,
        path,
        shi: s,
        ish: i,
        area_prime: a,
        bounce: b,
    }
}

/// Representing alcove to labeled path, or back when `path_json` is given.
pub fn cmd_bijection(
    window: Option<&str>,
    path_json: Option<&str>,
    n: Option<usize>,
) -> Result<BijectionOutput> {
    match (window, path_json) {
        (Some(text), None) => {
            let w = parse_window(text, n)?;
            let path = to_labeled_path(&w)?;
            Ok(describe(w, path))
        }
        (None, Some(json)) => {
            let path: LabeledPath =
                serde_json::from_str(json).map_err(|e| Error::InvalidLabeledPath(e.to_string()))?;
            let w = from_labeled_path(&path)?;
            Ok(describe(w, path))
        }
        _ => bail!(Error::BadArgs(
            "give exactly one of --window and --path".into()
        )),
    }
}
