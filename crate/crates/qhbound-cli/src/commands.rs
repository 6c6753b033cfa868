//! Subcommand implementations. Each returns the process exit code:
//! 0 ok, 2 assertion/certification failure, 3 resource refusal; validation
//! problems surface as errors and exit 1.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use qhbound::{
    build_bacon_shor, hamming_check, min_distance, min_span_weight, odd_family, purity,
    rect_family, singleton_check, square_family, verify_chain, CodeParams, DistanceError,
    DistanceOutcome, LatticeError, Purity, DEFAULT_BUDGET,
};

use crate::report::{
    self, check_block, code_block, proof_table, scan_table, CheckRecord, CodeReportRecord,
    DistanceSection, ProofRow, ScanRecord, CSV_HEADER,
};

/// Name of the environment variable holding the default candidate budget
/// for distance searches; `--budget` overrides it.
const BUDGET_ENV: &str = "QHBOUND_BUDGET";

/// Span-enumeration cap for the reported minimum stabilizer weight: spans
/// of rank above this are not enumerated.
const STAB_WEIGHT_CAP: u32 = 20;

// ---------------------------------------------------------------------------
// check

#[derive(Args)]
pub struct CheckArgs {
    /// Physical qubits
    n: u64,
    /// Logical qubits
    k: u64,
    /// Gauge qubits
    r: u64,
    /// Minimum distance
    d: u64,
    /// Emit one JSON object instead of the human block
    #[arg(long)]
    json: bool,
    /// Exit 2 unless the packing bound is satisfied
    #[arg(long, conflicts_with = "assert_violates")]
    assert_holds: bool,
    /// Exit 2 unless the packing bound is violated
    #[arg(long)]
    assert_violates: bool,
}

pub fn cmd_check(args: CheckArgs) -> Result<u8> {
    let params = CodeParams::new(args.n, args.k, args.r, args.d)?;
    let hamming = hamming_check(&params);
    let singleton = singleton_check(&params);

    if args.json {
        let record = CheckRecord::new(&params, &hamming, &singleton);
        println!("{}", serde_json::to_string(&record)?);
    } else {
        print!("{}", check_block(&params, &hamming, &singleton));
    }

    let assertion_failed = (args.assert_holds && !hamming.satisfied)
        || (args.assert_violates && hamming.satisfied);
    Ok(if assertion_failed { 2 } else { 0 })
}

// ---------------------------------------------------------------------------
// scan

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Square lattices a x a
    Square,
    /// Rectangular lattices a x b
    Rect,
    /// Odd square lattices with side 2t + 1, indexed by t
    Odd,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Square => "square",
            Family::Rect => "rect",
            Family::Odd => "odd",
        })
    }
}

/// Inclusive integer range: `N` or `LO..HI`, both bounds at least 1.
#[derive(Copy, Clone, Debug)]
pub struct RangeArg {
    lo: u64,
    hi: u64,
}

impl RangeArg {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_bound = |txt: &str| {
            txt.parse::<u64>()
                .map_err(|_| format!("invalid range bound {txt:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse_bound(lo)?, parse_bound(hi)?),
            None => {
                let v = parse_bound(s)?;
                (v, v)
            }
        };
        if lo == 0 {
            return Err("range bounds must be positive".to_owned());
        }
        if lo > hi {
            return Err(format!("range lower bound {lo} exceeds upper bound {hi}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

#[derive(Args)]
pub struct ScanArgs {
    /// Code family to sweep
    family: Family,
    /// Side range, e.g. `3` or `1..6` (square and rect)
    #[arg(long)]
    a: Option<RangeArg>,
    /// Second side range (rect only)
    #[arg(long)]
    b: Option<RangeArg>,
    /// Index range for the odd family
    #[arg(long)]
    t: Option<RangeArg>,
    /// Emit one JSON object per line
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with a header row
    #[arg(long)]
    csv: bool,
    /// Keep only members violating the packing bound
    #[arg(long)]
    violations_only: bool,
}

fn require(range: Option<RangeArg>, flag: &str, family: Family) -> Result<RangeArg> {
    range.with_context(|| format!("scan {family} requires {flag}"))
}

fn forbid(range: Option<RangeArg>, flag: &str, family: Family) -> Result<()> {
    if range.is_some() {
        bail!("scan {family} does not take {flag}");
    }
    Ok(())
}

fn scan_members(args: &ScanArgs) -> Result<Vec<ScanRecord>> {
    let mut records = Vec::new();
    let mut push = |family: &'static str, a: u64, b: u64, t: Option<u64>, p: CodeParams| {
        let hamming = hamming_check(&p);
        let singleton = singleton_check(&p);
        records.push(ScanRecord::new(family, a, b, t, &p, &hamming, &singleton));
    };

    match args.family {
        Family::Square => {
            let ra = require(args.a, "--a", args.family)?;
            forbid(args.b, "--b", args.family)?;
            forbid(args.t, "--t", args.family)?;
            for a in ra.iter() {
                push("square", a, a, None, square_family(a)?);
            }
        }
        Family::Rect => {
            let ra = require(args.a, "--a", args.family)?;
            let rb = require(args.b, "--b", args.family)?;
            forbid(args.t, "--t", args.family)?;
            for a in ra.iter() {
                for b in rb.iter() {
                    push("rect", a, b, None, rect_family(a, b)?);
                }
            }
        }
        Family::Odd => {
            let rt = require(args.t, "--t", args.family)?;
            forbid(args.a, "--a", args.family)?;
            forbid(args.b, "--b", args.family)?;
            for t in rt.iter() {
                push("odd", 2 * t + 1, 2 * t + 1, Some(t), odd_family(t)?);
            }
        }
    }

    if args.violations_only {
        records.retain(|rec| !rec.hamming.satisfied);
    }
    Ok(records)
}

pub fn cmd_scan(args: ScanArgs) -> Result<u8> {
    let records = scan_members(&args)?;
    if args.json {
        for rec in &records {
            println!("{}", serde_json::to_string(rec)?);
        }
    } else if args.csv {
        println!("{CSV_HEADER}");
        for rec in &records {
            println!("{}", report::csv_row(rec));
        }
    } else {
        print!("{}", scan_table(&records));
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// proof

#[derive(Args)]
pub struct ProofArgs {
    /// Verify the lemma chain for every index from 1 to this bound
    #[arg(long = "t-max", value_parser = clap::value_parser!(u64).range(1..))]
    t_max: u64,
    /// Emit one JSON object per row
    #[arg(long)]
    json: bool,
}

pub fn cmd_proof(args: ProofArgs) -> Result<u8> {
    let rows = verify_chain(args.t_max);
    if args.json {
        for row in &rows {
            println!("{}", serde_json::to_string(&ProofRow::from(row))?);
        }
    } else {
        print!("{}", proof_table(&rows));
    }
    Ok(if rows.iter().all(|r| r.all_ok()) { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// code

#[derive(Args)]
pub struct CodeArgs {
    /// Lattice rows
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    a: u64,
    /// Lattice columns
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    b: u64,
    /// Brute-force the minimum distance and the purity of the code
    #[arg(long)]
    distance: bool,
    /// Largest operator weight to search (default: min(a, b))
    #[arg(long, requires = "distance")]
    max_weight: Option<usize>,
    /// Candidate budget for the search (default: QHBOUND_BUDGET or 100000000)
    #[arg(long, requires = "distance", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Emit one JSON object instead of the human block
    #[arg(long)]
    json: bool,
}

fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => {
            let parsed: u64 = raw
                .trim()
                .parse()
                .ok()
                .filter(|b| *b >= 1)
                .with_context(|| {
                    format!("{BUDGET_ENV} must be a positive integer, got {raw:?}")
                })?;
            Ok(parsed)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(e).context(format!("{BUDGET_ENV} is not valid unicode")),
    }
}

fn emit_code_report(record: &CodeReportRecord, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(record)?);
    } else {
        print!("{}", code_block(record));
    }
    Ok(())
}

pub fn cmd_code(args: CodeArgs) -> Result<u8> {
    let code = match build_bacon_shor(args.a as usize, args.b as usize) {
        Ok(code) => code,
        Err(e @ LatticeError::TooLarge { .. }) => {
            eprintln!("error: {e}");
            return Ok(3);
        }
        Err(e) => return Err(e.into()),
    };
    let certified = code.certify();
    let min_stab_weight = min_span_weight(code.stabilizer(), STAB_WEIGHT_CAP).map(|(w, _)| w);

    let mut exit = if certified { 0 } else { 2 };
    let mut section = None;

    if args.distance {
        let budget = resolve_budget(args.budget)?;
        let family_distance = code.a().min(code.b());
        let max_weight = args.max_weight.unwrap_or(family_distance);

        match min_distance(&code, max_weight, budget) {
            Ok(result) => {
                section = Some(match result.outcome {
                    DistanceOutcome::Found { d, witness } => {
                        if d != family_distance {
                            exit = exit.max(2);
                        }
                        let (purity_tag, purity_witness) = match purity(&code, d, budget)? {
                            Purity::Pure => ("pure", None),
                            Purity::Impure { witness } => ("impure", Some(witness.to_string())),
                        };
                        DistanceSection {
                            max_weight,
                            budget,
                            outcome: "found",
                            d: Some(d),
                            witness: Some(witness.to_string()),
                            enumerated: result.enumerated,
                            family_distance,
                            matches_family: Some(d == family_distance),
                            purity: Some(purity_tag),
                            purity_witness,
                        }
                    }
                    DistanceOutcome::Truncated { max_weight: w } => {
                        // Nothing found up to w: a genuine mismatch only if
                        // the family distance lay within reach.
                        let verdict = if w >= family_distance {
                            exit = exit.max(2);
                            Some(false)
                        } else {
                            None
                        };
                        DistanceSection {
                            max_weight,
                            budget,
                            outcome: "truncated",
                            d: None,
                            witness: None,
                            enumerated: result.enumerated,
                            family_distance,
                            matches_family: verdict,
                            purity: None,
                            purity_witness: None,
                        }
                    }
                });
            }
            Err(DistanceError::BudgetExceeded { estimate, budget }) => {
                // Parameters and generators are still reported; the refusal
                // and its exact workload go to stderr.
                let record = CodeReportRecord::new(&code, certified, min_stab_weight, None);
                emit_code_report(&record, args.json)?;
                eprintln!(
                    "error: estimated workload of {estimate} candidates exceeds the budget of {budget}"
                );
                return Ok(3);
            }
            Err(e @ DistanceError::WeightRange { .. }) => return Err(e.into()),
        }
    }

    let record = CodeReportRecord::new(&code, certified, min_stab_weight, section);
    emit_code_report(&record, args.json)?;
    Ok(exit)
}
