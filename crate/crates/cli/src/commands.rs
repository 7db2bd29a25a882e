//! The three subcommands. Each returns `Ok(solved)` on a completed run so
//! `main` can map the outcome to a process status, or a `CmdError` that
//! distinguishes data errors from I/O errors.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufWriter, Write as _};
use std::path::Path;

use queens_ga::{
    fitness, pairwise_attack_count, parse_tuple, render_board, run, GaConfig, TerminationCause,
    DEFAULT_RENDER_CAP,
};

use crate::record::{CsvRecord, ResultRecord};
use crate::{BenchArgs, FileFormat, RecordFormat, SolveArgs, VerifyArgs};

#[derive(Debug)]
pub enum CmdError {
    /// Parse or validation failure.
    Data(String),
    /// File read/write failure.
    Io(String),
}

fn data_err(err: impl std::fmt::Display) -> CmdError {
    CmdError::Data(err.to_string())
}

pub fn solve(args: &SolveArgs) -> Result<bool, CmdError> {
    if args.render && args.n > DEFAULT_RENDER_CAP {
        return Err(CmdError::Data(format!(
            "--render supports boards up to n = {DEFAULT_RENDER_CAP}, got {}",
            args.n
        )));
    }
    let config = args.solver.to_config(args.n);
    let result = run(&config).map_err(data_err)?;

    println!("{}", result.best);
    if args.render {
        println!(
            "{}",
            render_board(&result.best, DEFAULT_RENDER_CAP).map_err(data_err)?
        );
    }

    let record = ResultRecord::new(&config, &result);
    match args.format {
        RecordFormat::Text => print!("{}", record.to_text()),
        RecordFormat::Json => println!("{}", record.to_json_line()),
        RecordFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .serialize(CsvRecord::from(&record))
                .map_err(data_err)?;
            let bytes = writer.into_inner().map_err(data_err)?;
            print!("{}", String::from_utf8(bytes).expect("csv output is utf-8"));
        }
    }
    Ok(result.terminated_by == TerminationCause::Solved)
}

pub fn verify(args: &VerifyArgs) -> Result<bool, CmdError> {
    let text = match (&args.tuple, &args.file) {
        (Some(tuple), None) => tuple.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))?,
        _ => unreachable!("clap enforces exactly one tuple source"),
    };
    let chrom = parse_tuple(text.trim()).map_err(data_err)?;
    let score = fitness(&chrom);
    let report = pairwise_attack_count(&chrom);

    println!("n: {}", chrom.n());
    println!("fitness: {score}");
    println!("attacking_pairs: {}", report.attacking_pairs);
    let conflicts: Vec<_> = report.conflicting_diagonals().collect();
    if conflicts.is_empty() {
        println!("conflicting_diagonals: none");
    } else {
        println!("conflicting_diagonals:");
        for ((direction, key), count) in conflicts {
            println!("  {direction} {key}: {count} queens");
        }
    }
    Ok(score.is_solution())
}

pub fn bench(args: &BenchArgs) -> Result<bool, CmdError> {
    if args.n_list.is_empty() {
        return Err(CmdError::Data("--n-list must not be empty".into()));
    }
    if args.trials == 0 {
        return Err(CmdError::Data("--trials must be at least 1".into()));
    }

    // Records are ordered by n, then trial index, independent of input order.
    let mut sizes = args.n_list.clone();
    sizes.sort_unstable();

    let mut configs: Vec<GaConfig> = Vec::new();
    for &n in &sizes {
        for trial in 0..args.trials {
            let mut config = args.solver.to_config(n);
            config.seed = args.solver.seed.wrapping_add(trial);
            config.validate().map_err(data_err)?;
            configs.push(config);
        }
    }

    let mut records = Vec::with_capacity(configs.len());
    for config in &configs {
        let result = run(config).map_err(data_err)?;
        records.push(ResultRecord::new(config, &result));
    }

    write_records(&args.out, args.format, &records)?;
    print_summary(&records);
    Ok(records.iter().all(|r| r.terminated_by == "solved"))
}

fn write_records(
    path: &Path,
    format: FileFormat,
    records: &[ResultRecord],
) -> Result<(), CmdError> {
    let io_err = |e: &dyn std::fmt::Display| CmdError::Io(format!("{}: {e}", path.display()));
    let file = File::create(path).map_err(|e| io_err(&e))?;
    let mut out = BufWriter::new(file);
    match format {
        FileFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            for record in records {
                writer
                    .serialize(CsvRecord::from(record))
                    .map_err(|e| io_err(&e))?;
            }
            writer.flush().map_err(|e| io_err(&e))?;
        }
        FileFormat::Json => {
            for record in records {
                writeln!(out, "{}", record.to_json_line()).map_err(|e| io_err(&e))?;
            }
            out.flush().map_err(|e| io_err(&e))?;
        }
    }
    Ok(())
}

fn print_summary(records: &[ResultRecord]) {
    let mut by_n: BTreeMap<usize, Vec<&ResultRecord>> = BTreeMap::new();
    for record in records {
        by_n.entry(record.n).or_default().push(record);
    }
    println!(
        "{:>5} {:>7} {:>7} {:>6} {:>12} {:>10}",
        "n", "trials", "solved", "rate", "median_gens", "median_ms"
    );
    for (n, group) in by_n {
        let solved = group.iter().filter(|r| r.terminated_by == "solved").count();
        let rate = solved as f64 / group.len() as f64;
        let median_gens = median(group.iter().map(|r| r.generations_run).collect());
        let median_ms = median(group.iter().map(|r| r.wall_time_ms).collect());
        println!(
            "{n:>5} {:>7} {solved:>7} {rate:>6.2} {median_gens:>12} {median_ms:>10}",
            group.len()
        );
    }
}

/// Lower median of a non-empty list.
fn median(mut values: Vec<u64>) -> u64 {
    values.sort_unstable();
    values[(values.len() - 1) / 2]
}
