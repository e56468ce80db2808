//! Verification sweeps behind `eulerian verify`.

use clap::ValueEnum;
use num_bigint::BigInt;

use eulerian_core::insertion::{verify_insertion_recursion, Side};
use eulerian_core::numbers::{
    eulerian_analytic, eulerian_triangle, factorial, remark_sides, ExpansionCache,
};
use eulerian_core::oracle::{lemma_cells, main_theorem_sides, WeakExcedanceCensus};
use eulerian_core::{enumerate_permutations, EnumerationCap, Result};

use crate::render::Report;

pub const DEFAULT_ENUMERATION_MAX_N: usize = 7;
pub const DEFAULT_FORMULA_MAX_N: usize = 20;

/// Smallest `n` swept by the insertion suites. At `n = 2` the size-1 classes
/// are empty while `AW_{2,2}` and `BW_{2,1}` are not, so the recursion has
/// nothing to build them from.
pub const INSERTION_MIN_N: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    All,
    MainTheorem,
    Symmetry,
    RowSum,
    Remark,
    Lemma,
    AwBw,
    #[value(alias = "insertion-A")]
    InsertionA,
    #[value(alias = "insertion-B")]
    InsertionB,
    FormulaEquivalence,
}

impl Suite {
    /// Concrete suites in report order.
    pub const ALL: [Suite; 9] = [
        Suite::FormulaEquivalence,
        Suite::RowSum,
        Suite::Symmetry,
        Suite::Remark,
        Suite::MainTheorem,
        Suite::Lemma,
        Suite::AwBw,
        Suite::InsertionA,
        Suite::InsertionB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::MainTheorem => "main-theorem",
            Suite::Symmetry => "symmetry",
            Suite::RowSum => "row-sum",
            Suite::Remark => "remark",
            Suite::Lemma => "lemma",
            Suite::AwBw => "aw-bw",
            Suite::InsertionA => "insertion-A",
            Suite::InsertionB => "insertion-B",
            Suite::FormulaEquivalence => "formula-equivalence",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL.to_vec(),
            s => vec![s],
        }
    }

    /// Whether the suite walks `S_n` and is therefore subject to the cap.
    pub fn enumerates(self) -> bool {
        matches!(
            self,
            Suite::All
                | Suite::MainTheorem
                | Suite::Lemma
                | Suite::AwBw
                | Suite::InsertionA
                | Suite::InsertionB
        )
    }

    pub fn default_max_n(self) -> usize {
        if self.enumerates() {
            DEFAULT_ENUMERATION_MAX_N
        } else {
            DEFAULT_FORMULA_MAX_N
        }
    }
}

/// One checked cell. `detail` is empty unless the cell failed for a reason
/// the two sides alone do not show.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub suite: Suite,
    pub check: &'static str,
    pub n: usize,
    pub k: Option<usize>,
    pub j: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub detail: String,
}

impl Cell {
    fn equal(
        suite: Suite,
        check: &'static str,
        n: usize,
        k: Option<usize>,
        j: Option<usize>,
        lhs: BigInt,
        rhs: BigInt,
    ) -> Self {
        Cell {
            suite,
            check,
            n,
            k,
            j,
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: String::new(),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }

    fn plain_line(&self) -> String {
        let mut line = format!(
            "{} {} {} n={}",
            self.status(),
            self.suite.name(),
            self.check,
            self.n
        );
        if let Some(k) = self.k {
            line.push_str(&format!(" k={k}"));
        }
        if let Some(j) = self.j {
            line.push_str(&format!(" j={j}"));
        }
        line.push_str(&format!(" lhs={} rhs={}", self.lhs, self.rhs));
        if !self.detail.is_empty() {
            line.push_str(&format!(" {}", self.detail));
        }
        line
    }
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Runs one concrete suite over `n` in `lo..=hi`.
pub fn run_suite(suite: Suite, lo: usize, hi: usize, cap: EnumerationCap) -> Result<Vec<Cell>> {
    let lo = lo.max(1);
    let mut cells = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::ALL {
                cells.extend(run_suite(s, lo, hi, cap)?);
            }
        }
        Suite::FormulaEquivalence => {
            let triangle = eulerian_triangle(hi);
            for (n, row) in triangle.iter().enumerate().skip(lo) {
                for (k, rec) in row.iter().enumerate().skip(1) {
                    cells.push(Cell::equal(
                        suite,
                        "recurrence=analytic",
                        n,
                        Some(k),
                        None,
                        rec.clone(),
                        eulerian_analytic(n, k),
                    ));
                }
            }
        }
        Suite::RowSum => {
            let cache = ExpansionCache::new();
            for n in lo..=hi {
                for j in 0..=n {
                    let sum: BigInt = (0..=n).map(|k| cache.coefficient(n, k, j)).sum();
                    cells.push(Cell::equal(
                        suite,
                        "sum_k c=n!",
                        n,
                        None,
                        Some(j),
                        sum,
                        factorial(n),
                    ));
                }
            }
        }
        Suite::Symmetry => {
            let cache = ExpansionCache::new();
            for n in lo..=hi {
                for k in 0..=n {
                    for j in 0..=n {
                        let lhs = cache.coefficient(n, k, j);
                        let rhs = cache.coefficient(n, n - k, n - j);
                        cells.push(Cell::equal(
                            suite,
                            "c(k,j)=c(n-k,n-j)",
                            n,
                            Some(k),
                            Some(j),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        Suite::Remark => {
            for n in lo..=hi {
                for k in 0..=n {
                    for j in 0..=n {
                        let (lhs, rhs) = remark_sides(n, k, j);
                        cells.push(Cell::equal(
                            suite,
                            "sum_i=sum_l",
                            n,
                            Some(k),
                            Some(j),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        Suite::MainTheorem => {
            for n in lo..=hi {
                let census = WeakExcedanceCensus::new(n, cap)?;
                for k in 0..=n {
                    for j in 0..=n {
                        let (lhs, rhs) = main_theorem_sides(&census, k, j);
                        cells.push(Cell::equal(
                            suite,
                            "c=census",
                            n,
                            Some(k),
                            Some(j),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        Suite::Lemma => {
            for n in lo..=hi {
                for cell in lemma_cells(n, cap)? {
                    let pass = cell.is_bijection();
                    cells.push(Cell {
                        suite,
                        check: "|S|=|T|,bijective",
                        n,
                        k: Some(cell.k),
                        j: Some(cell.j),
                        lhs: cell.source_size.to_string(),
                        rhs: cell.target_size.to_string(),
                        pass,
                        detail: if pass {
                            String::new()
                        } else {
                            format!(
                                "distinct_images={} stray_images={}",
                                cell.distinct_images, cell.stray_images
                            )
                        },
                    });
                }
            }
        }
        Suite::AwBw => {
            for n in lo.max(2)..=hi {
                let (aw, bw) = side_class_sizes(n, cap)?;
                let size = |v: &[u64], k: usize| v.get(k).copied().unwrap_or(0);
                let cache = ExpansionCache::new();
                for k in 0..=n {
                    let lhs = cache.coefficient(n, k, 1);
                    let rhs = BigInt::from(2 * size(&aw, k + 1));
                    cells.push(Cell::equal(
                        suite,
                        "c(j=1)=2|AW(k+1)|",
                        n,
                        Some(k),
                        Some(1),
                        lhs,
                        rhs,
                    ));
                }
                for k in 0..=n {
                    let lhs = cache.coefficient(n, k, n - 1);
                    let rhs = BigInt::from(2 * size(&bw, k));
                    cells.push(Cell::equal(
                        suite,
                        "c(j=n-1)=2|BW(k)|",
                        n,
                        Some(k),
                        Some(n - 1),
                        lhs,
                        rhs,
                    ));
                }
                for k in 1..=n {
                    let lhs = BigInt::from(size(&aw, k));
                    let rhs = BigInt::from(size(&bw, n + 1 - k));
                    cells.push(Cell::equal(
                        suite,
                        "|AW(k)|=|BW(n+1-k)|",
                        n,
                        Some(k),
                        None,
                        lhs,
                        rhs,
                    ));
                }
            }
        }
        Suite::InsertionA | Suite::InsertionB => {
            let side = if suite == Suite::InsertionA {
                Side::A
            } else {
                Side::B
            };
            for n in lo.max(INSERTION_MIN_N)..=hi {
                for k in 1..=n {
                    let report = verify_insertion_recursion(side, n, k, cap)?;
                    let pass = report.holds();
                    let detail = if pass {
                        String::new()
                    } else {
                        format!(
                            "records={} distinct_images={} stray={} missing={} wrong_site_counts={} row_errors={}",
                            report.records,
                            report.distinct_images,
                            report.stray_images.len(),
                            report.missing_images.len(),
                            report.wrong_site_counts.len(),
                            report.row_errors.len()
                        )
                    };
                    cells.push(Cell {
                        suite,
                        check: "recursion,bijective",
                        n,
                        k: Some(k),
                        j: None,
                        lhs: report.recursion_value().to_string(),
                        rhs: report.target_size.to_string(),
                        pass,
                        detail,
                    });
                }
            }
        }
    }
    Ok(cells)
}

/// `(|AW_{n,k}|, |BW_{n,k}|)` indexed by `k`, from one pass over `S_n`.
fn side_class_sizes(n: usize, cap: EnumerationCap) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut aw = vec![0u64; n + 1];
    let mut bw = vec![0u64; n + 1];
    for pi in enumerate_permutations(n, cap)? {
        let k = pi.weak_excedance_count();
        if Side::A.contains(&pi) {
            aw[k] += 1;
        } else if Side::B.contains(&pi) {
            bw[k] += 1;
        }
    }
    Ok((aw, bw))
}

pub fn report(cells: &[Cell]) -> Report {
    let mut report = Report::new(&[
        "suite", "check", "n", "k", "j", "lhs", "rhs", "status", "detail",
    ]);
    for cell in cells {
        report.push_row(vec![
            cell.suite.name().to_string(),
            cell.check.to_string(),
            cell.n.to_string(),
            opt(cell.k),
            opt(cell.j),
            cell.lhs.clone(),
            cell.rhs.clone(),
            cell.status().to_string(),
            cell.detail.clone(),
        ]);
        report.plain.push(cell.plain_line());
    }
    let failed = cells.iter().filter(|c| !c.pass).count();
    report
        .plain
        .push(format!("cells={} failed={}", cells.len(), failed));
    report
}
