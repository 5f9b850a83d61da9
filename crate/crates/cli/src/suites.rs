//! Batch verification suites behind `aqt verify`.

use std::collections::BTreeSet;
use std::str::FromStr;

use anyhow::{bail, Result};
use aqt_core::arr::{charpoly_ff, default_primes, ish_cyclic_count, zaslavsky_counts_u128};
use aqt_core::paths::{area_prime, from_labeled_path, to_labeled_path};
use aqt_core::qt::{
    is_qt_symmetric, q_catalan, q_fuss_catalan, q_int, q_negative_fuss_catalan, q_rational,
    specialize_antidiagonal, Sign,
};
use aqt_core::regions::{census, dominant_inverse_filter, enumerate_simplex};
use aqt_core::stats::{inversion_partition, ish_closed, ish_def, ish_inv, shi};
use aqt_core::{
    choose2, Arrangement, Family, LabeledPath, QPoly, QTPoly, RootIdeal, SimplexSpec, Window,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{cmd_table, Selection, CHARPOLY_BUDGET_FACTOR};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Assertions,
    ConjecturesPositive,
    ConjecturesNegative,
    Bijection,
    InverseStatistics,
    Charpoly,
    Census,
    MysteryCase,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Assertions,
        Suite::ConjecturesPositive,
        Suite::ConjecturesNegative,
        Suite::Bijection,
        Suite::InverseStatistics,
        Suite::Charpoly,
        Suite::Census,
        Suite::MysteryCase,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Assertions => "assertions",
            Suite::ConjecturesPositive => "conjectures-positive",
            Suite::ConjecturesNegative => "conjectures-negative",
            Suite::Bijection => "bijection",
            Suite::InverseStatistics => "inverse-statistics",
            Suite::Charpoly => "charpoly",
            Suite::Census => "census",
            Suite::MysteryCase => "mystery-case",
        }
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match Suite::ALL.iter().find(|x| x.name() == s) {
            Some(x) => Ok(*x),
            None => bail!(aqt_core::Error::BadArgs(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub n_max: Option<usize>,
    pub seed: u64,
    pub budget: u128,
    /// Random windows drawn by the inverse-statistics suite.
    pub samples: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            n_max: None,
            seed: 0,
            budget: crate::commands::DEFAULT_BUDGET,
            samples: 10_000,
        }
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite.name());
    match suite {
        Suite::Assertions => assertions(&mut report, bounds)?,
        Suite::ConjecturesPositive => conjectures_positive(&mut report, bounds)?,
        Suite::ConjecturesNegative => conjectures_negative(&mut report, bounds)?,
        Suite::Bijection => bijection(&mut report, bounds)?,
        Suite::InverseStatistics => inverse_statistics(&mut report, bounds)?,
        Suite::Charpoly => charpoly(&mut report, bounds)?,
        Suite::Census => census_suite(&mut report)?,
        Suite::MysteryCase => mystery_case(&mut report, bounds)?,
    }
    Ok(report)
}

fn genfun(n: usize, m: u32, sign: Sign, positive_only: bool, budget: u128) -> Result<QTPoly> {
    Selection {
        n,
        m,
        sign,
        positive_only,
    }
    .genfun(budget)
}

fn text(p: &QPoly) -> String {
    p.to_string()
}

fn assertions(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    let table = cmd_table(
        Selection {
            n: 3,
            m: 1,
            sign: Sign::Positive,
            positive_only: false,
        },
        bounds.budget,
    )?;
    report.check(
        "joint-distribution-table",
        json!({"n": 3, "m": 1}),
        true,
        vec![
            vec![1, 0, 0, 0],
            vec![2, 1, 0, 0],
            vec![2, 3, 1, 0],
            vec![1, 2, 2, 1],
        ],
        &table.rows,
    );
    for n in 2..=bounds.n_max.unwrap_or(5) {
        let k = choose2(n);
        let full = genfun(n, 1, Sign::Positive, false, bounds.budget)?;
        report.check(
            "antidiagonal-full",
            json!({"n": n}),
            true,
            text(&q_int(n + 1).pow(n as u32 - 1)),
            text(&specialize_antidiagonal(&full, k)?),
        );
        let pos = genfun(n, 1, Sign::Positive, true, bounds.budget)?;
        report.check(
            "antidiagonal-positive",
            json!({"n": n}),
            true,
            text(&q_catalan(n)?),
            text(&specialize_antidiagonal(&pos, k)?),
        );
        let mut by_ideals = QTPoly::zero();
        for ideal in RootIdeal::all(n) {
            by_ideals.add_term(ideal.bounce() as u32, ideal.area() as u32, 1);
        }
        report.check(
            "positive-part-bounce-area",
            json!({"n": n}),
            true,
            by_ideals.to_string(),
            pos.to_string(),
        );
    }
    Ok(())
}

type Matrix = Vec<Vec<i64>>;

fn padded(rows: &[&[i64]]) -> Matrix {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    rows.iter()
        .map(|r| {
            let mut v = r.to_vec();
            v.resize(width, 0);
            v
        })
        .collect()
}

pub fn printed_tables() -> [(Sign, bool, Matrix); 4] {
    [
        (
            Sign::Positive,
            false,
            padded(&[
                &[1],
                &[2, 1],
                &[2, 3, 1],
                &[1, 4, 3, 1],
                &[0, 3, 5, 3, 1],
                &[0, 1, 3, 4, 3, 1],
                &[0, 0, 0, 1, 2, 2, 1],
            ]),
        ),
        (
            Sign::Positive,
            true,
            padded(&[
                &[1],
                &[0, 1],
                &[0, 1, 1],
                &[0, 0, 1, 1],
                &[0, 0, 1, 1, 1],
                &[0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 0, 0, 1],
            ]),
        ),
        (
            Sign::Negative,
            false,
            padded(&[&[1], &[2, 1], &[2, 3, 1], &[1, 4, 3, 1], &[0, 1, 2, 2, 1]]),
        ),
        (
            Sign::Negative,
            true,
            padded(&[&[1], &[0, 1], &[0, 1, 1], &[0, 0, 1, 1], &[0, 0, 0, 0, 1]]),
        ),
    ]
}

fn table_cases(report: &mut VerificationReport, sign: Sign, budget: u128) -> Result<()> {
    for (s, positive_only, want) in printed_tables() {
        if s != sign {
            continue;
        }
        let got = cmd_table(
            Selection {
                n: 3,
                m: 2,
                sign,
                positive_only,
            },
            budget,
        )?;
        report.check(
            "printed-table",
            json!({"n": 3, "m": 2, "sign": sign, "positive_only": positive_only}),
            true,
            want,
            got.rows,
        );
    }
    Ok(())
}

fn conjectures_positive(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    table_cases(report, Sign::Positive, bounds.budget)?;
    for (n, m) in [(3usize, 2u32), (3, 3), (4, 2)] {
        let k = m as i64 * choose2(n);
        let full = genfun(n, m, Sign::Positive, false, bounds.budget)?;
        report.check(
            "antidiagonal-full",
            json!({"n": n, "m": m}),
            false,
            text(&q_int(m as usize * n + 1).pow(n as u32 - 1)),
            text(&specialize_antidiagonal(&full, k)?),
        );
        let pos = genfun(n, m, Sign::Positive, true, bounds.budget)?;
        report.check(
            "antidiagonal-positive",
            json!({"n": n, "m": m}),
            false,
            text(&q_fuss_catalan(n, m as usize)?),
            text(&specialize_antidiagonal(&pos, k)?),
        );
    }
    for n in 2..=bounds.n_max.unwrap_or(5) {
        for positive_only in [false, true] {
            let f = genfun(n, 1, Sign::Positive, positive_only, bounds.budget)?;
            report.check(
                "qt-symmetry",
                json!({"n": n, "positive_only": positive_only}),
                false,
                true,
                is_qt_symmetric(&f),
            );
        }
    }
    Ok(())
}

fn conjectures_negative(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    table_cases(report, Sign::Negative, bounds.budget)?;
    for (n, m) in [(3usize, 2u32), (3, 3)] {
        let k = Sign::Negative.t_offset(n, m);
        let full = genfun(n, m, Sign::Negative, false, bounds.budget)?;
        report.check(
            "antidiagonal-full",
            json!({"n": n, "m": m}),
            false,
            text(&q_int(m as usize * n - 1).pow(n as u32 - 1)),
            text(&specialize_antidiagonal(&full, k)?),
        );
        let pos = genfun(n, m, Sign::Negative, true, bounds.budget)?;
        report.check(
            "antidiagonal-positive",
            json!({"n": n, "m": m}),
            false,
            text(&q_negative_fuss_catalan(n, m as usize)?),
            text(&specialize_antidiagonal(&pos, k)?),
        );
    }
    Ok(())
}

fn bijection(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    for n in 2..=bounds.n_max.unwrap_or(4) {
        let records = census(n, 1)?;
        let mut images = BTreeSet::new();
        let (mut stat_failures, mut round_trip_failures) = (0usize, 0usize);
        for r in &records {
            let w = &r.min;
            let path = to_labeled_path(w)?;
            if from_labeled_path(&path)? != *w {
                round_trip_failures += 1;
            }
            if (choose2(n) - shi(w), ish_closed(w)) != (area_prime(&path), path.ideal().bounce()) {
                stat_failures += 1;
            }
            images.insert(serde_json::to_string(&path)?);
        }
        let all: BTreeSet<String> = LabeledPath::all(n)
            .iter()
            .map(serde_json::to_string)
            .collect::<Result<_, _>>()?;
        let params = json!({"n": n, "chambers": records.len()});
        report.check(
            "image-is-all-labeled-paths",
            params.clone(),
            true,
            all.len(),
            images.len(),
        );
        report.check(
            "image-equals-labeled-paths",
            params.clone(),
            true,
            true,
            images == all,
        );
        report.check(
            "round-trip-failures",
            params.clone(),
            true,
            0,
            round_trip_failures,
        );
        report.check("statistic-failures", params, true, 0, stat_failures);
    }
    Ok(())
}

fn inverse_statistics_failures(ws: impl IntoIterator<Item = Window>) -> (usize, usize) {
    let mut checked = 0;
    let mut failures = 0;
    for w in ws {
        let inv = w.invert();
        checked += 1;
        let ok = shi(&w) == shi(&inv)
            && inversion_partition(&w) == inversion_partition(&inv)
            && ish_def(&w) == ish_closed(&w)
            && ish_inv(&w) == ish_closed(&inv);
        if !ok {
            failures += 1;
        }
    }
    (checked, failures)
}

/// Random walk of at most `max_len` wall crossings from the fundamental alcove.
pub fn random_window(rng: &mut ChaCha8Rng, max_n: usize, max_len: usize) -> Window {
    let n = rng.gen_range(2..=max_n);
    let steps = rng.gen_range(0..=max_len);
    let mut w = Window::identity(n);
    for _ in 0..steps {
        w = w.left_multiply_generator(rng.gen_range(1..=n));
    }
    w
}

fn inverse_statistics(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    for p in [4u64, 7, 5] {
        let ws = enumerate_simplex(&SimplexSpec::new(3, p)?);
        let (checked, failures) = inverse_statistics_failures(ws);
        report.check(
            "inverse-statistics",
            json!({"n": 3, "p": p, "windows": checked}),
            true,
            0,
            failures,
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let samples: Vec<Window> = (0..bounds.samples)
        .map(|_| random_window(&mut rng, 6, 12))
        .collect();
    let (checked, failures) = inverse_statistics_failures(samples);
    report.check(
        "inverse-statistics-random",
        json!({"max_n": 6, "max_length": 12, "seed": bounds.seed, "windows": checked}),
        true,
        0,
        failures,
    );
    Ok(())
}

fn charpoly(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    let budget = bounds.budget.saturating_mul(CHARPOLY_BUDGET_FACTOR);
    let q_shifted =
        |c: i64, n: usize| &QPoly::monomial(1, 1) * &QPoly::from_i64s(&[-c, 1]).pow(n as u32 - 1);
    for n in 2..=bounds.n_max.unwrap_or(4) {
        for family in [Family::Shi, Family::Ish] {
            let arr = Arrangement::build(family, n)?;
            let chi = charpoly_ff(&arr, budget)?;
            let params = json!({"family": family.name(), "n": n});
            report.check(
                "charpoly",
                params.clone(),
                true,
                text(&q_shifted(n as i64, n)),
                text(&chi),
            );
            let counts = zaslavsky_counts_u128(&chi, n);
            let want = (
                (n as u128 + 1).pow(n as u32 - 1),
                (n as u128 - 1).pow(n as u32 - 1),
            );
            report.check("zaslavsky-counts", params.clone(), true, want, counts);
            if family == Family::Ish {
                for p in default_primes(&arr) {
                    report.check(
                        "cyclic-count",
                        json!({"n": n, "p": p}),
                        true,
                        arr.count_complement(p),
                        ish_cyclic_count(n, p),
                    );
                }
            }
        }
    }
    for (n, m) in [(2usize, 2u32), (2, 3), (3, 2)] {
        let chi = charpoly_ff(&Arrangement::build(Family::ShiM(m), n)?, budget)?;
        report.check(
            "charpoly",
            json!({"family": "shi_m", "n": n, "m": m}),
            true,
            text(&q_shifted(m as i64 * n as i64, n)),
            text(&chi),
        );
    }
    Ok(())
}

fn census_suite(report: &mut VerificationReport) -> Result<()> {
    for (n, m) in [(3usize, 1u32), (3, 2), (4, 1)] {
        let params = json!({"n": n, "m": m});
        let records = match census(n, m) {
            Ok(r) => r,
            Err(e) => {
                report.check(
                    "unique-extremal-alcoves",
                    params,
                    m == 1,
                    "unique",
                    e.to_string(),
                );
                continue;
            }
        };
        report.check(
            "unique-extremal-alcoves",
            params.clone(),
            m == 1,
            "unique",
            "unique",
        );
        let (mi, ni) = (m as u128, n as u128);
        let bounded = records.iter().filter(|r| r.bounded).count() as u128;
        report.check(
            "chamber-count",
            params.clone(),
            true,
            (mi * ni + 1).pow(n as u32 - 1),
            records.len(),
        );
        report.check(
            "bounded-count",
            params.clone(),
            true,
            (mi * ni - 1).pow(n as u32 - 1),
            bounded,
        );
        let chi = charpoly_ff(&Arrangement::build(Family::ShiM(m), n)?, u128::MAX)?;
        report.check(
            "census-matches-zaslavsky",
            params.clone(),
            true,
            zaslavsky_counts_u128(&chi, n),
            (records.len() as u128, bounded),
        );
        let simplex = |p: u64| -> Result<Vec<String>> {
            Ok(enumerate_simplex(&SimplexSpec::new(n, p)?)
                .iter()
                .map(|w| w.to_string())
                .collect())
        };
        let sorted_inverses = |ws: Vec<&Window>| -> Vec<String> {
            let mut v: Vec<Window> = ws.into_iter().map(|w| w.invert()).collect();
            v.sort();
            v.iter().map(|w| w.to_string()).collect()
        };
        let mins = sorted_inverses(records.iter().map(|r| &r.min).collect());
        report.check(
            "minimum-inverses-fill-simplex",
            params.clone(),
            false,
            simplex(m as u64 * n as u64 + 1)?,
            mins,
        );
        let maxs = sorted_inverses(records.iter().filter_map(|r| r.max.as_ref()).collect());
        report.check(
            "maximum-inverses-fill-simplex",
            params,
            m == 1,
            simplex(m as u64 * n as u64 - 1)?,
            maxs,
        );
    }
    Ok(())
}

/// The sixteen alcoves of `D^2(5)`. One entry is commonly printed as
/// `[0,3,1,4,6]`, which is not a window (its entries sum to 14).
pub const MYSTERY_WINDOWS: [[i64; 5]; 16] = [
    [-1, 2, 5, 3, 6],
    [0, 3, 2, 4, 6],
    [1, 2, 4, 3, 5],
    [2, 1, 3, 4, 5],
    [0, 2, 3, 4, 6],
    [2, 0, 3, 6, 4],
    [1, 3, 2, 4, 5],
    [2, 1, 3, 5, 4],
    [0, 2, 4, 3, 6],
    [1, 2, 3, 4, 5],
    [1, 3, 2, 5, 4],
    [2, 1, 4, 3, 5],
    [0, 3, 1, 4, 7],
    [1, 2, 3, 5, 4],
    [1, 4, 2, 5, 3],
    [3, 1, 4, 2, 5],
];

fn ish_inv_distribution(ws: &[Window]) -> QPoly {
    ws.iter().fold(QPoly::zero(), |acc, w| {
        &acc + &QPoly::monomial(1, ish_inv(w) as usize)
    })
}

fn mystery_case(report: &mut VerificationReport, bounds: &Bounds) -> Result<()> {
    let s = SimplexSpec::new(5, 2)?;
    if s.alcove_count() > bounds.budget {
        bail!(aqt_core::Error::BudgetExceeded {
            needed: s.alcove_count(),
            budget: bounds.budget
        });
    }
    let ws = enumerate_simplex(&s);
    let mut want: Vec<Window> = MYSTERY_WINDOWS
        .iter()
        .map(|v| Window::new(v.to_vec()))
        .collect::<Result<_, _>>()?;
    want.sort();
    let params = json!({"n": 5, "p": 2, "corrected_entry": "[0,3,1,4,6] -> [0,3,1,4,7]"});
    report.check("simplex-alcoves", params, true, &want, &ws);
    report.check(
        "printed-entry-is-not-a-window",
        json!({"entry": "[0,3,1,4,6]"}),
        true,
        true,
        Window::new(vec![0, 3, 1, 4, 6]).is_err(),
    );
    report.check(
        "ish-inverse-distribution",
        json!({"n": 5, "p": 2}),
        true,
        "10+5q+q^2",
        text(&ish_inv_distribution(&ws)),
    );
    let dom = dominant_inverse_filter(&ws);
    let want_dom: Vec<Window> = [[1, 2, 3, 4, 5], [0, 2, 3, 4, 6], [2, 0, 3, 6, 4]]
        .iter()
        .map(|v| Window::new(v.to_vec()))
        .collect::<Result<_, _>>()?;
    let (mut sorted_want, mut sorted_dom) = (want_dom, dom.clone());
    sorted_want.sort();
    sorted_dom.sort();
    report.check(
        "dominant-inverse-alcoves",
        json!({"n": 5, "p": 2}),
        true,
        &sorted_want,
        &sorted_dom,
    );
    let rational_count = q_rational(5, 2)?.eval(1).to_string();
    report.check(
        "dominant-inverse-count",
        json!({"n": 5, "p": 2}),
        true,
        rational_count,
        dom.len().to_string(),
    );
    report.check(
        "dominant-ish-inverse-distribution",
        json!({"n": 5, "p": 2}),
        true,
        "1+q+q^2",
        text(&ish_inv_distribution(&dom)),
    );
    Ok(())
}
