use std::path::{Path, PathBuf};
use std::time::Instant;

use abelian::{primary_decomposition, remak_abelian};
use bilinear::{bi_of_group, centroid, frame_decomposition};
use decomp::{direct_complement, find_remak, reduce_general_operators, Complement, Decomposition, Refusal, Settings};
use perm_core::algo::{nilpotent_sylow, upper_central_series, upper_central_term};
use perm_core::{Operator, OperatorSet, PermGroup};
use rayon::prelude::*;
use ring::FiniteCommRing;
use serde::{Deserialize, Serialize};

use crate::check::{compare_with_oracle, OracleComparison};
use crate::corpus::corpus;
use crate::input::{load_group, load_operators, load_subgroup, perm_file, table_file, Loaded};
use crate::report::{canonical_generators, cycle_string, digest, FactorReport, RunReport};
use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub coset_bound: usize,
    pub oracle_bound: usize,
    pub certify: bool,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            coset_bound: Settings::default().coset_bound,
            oracle_bound: oracle::DEFAULT_ORDER_BOUND,
            certify: false,
            timing: false,
        }
    }
}

impl Options {
    pub fn settings(&self) -> Settings {
        Settings { coset_bound: self.coset_bound }
    }

    pub fn bounds(&self) -> oracle::Bounds {
        oracle::Bounds { order: self.oracle_bound, ..oracle::Bounds::default() }
    }
}

/// Output in both formats.
pub trait Render {
    fn to_text(&self) -> String;
    fn to_json(&self) -> String;
}

impl Render for RunReport {
    fn to_text(&self) -> String {
        RunReport::to_text(self)
    }

    fn to_json(&self) -> String {
        RunReport::to_json(self)
    }
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("report serializes")
}

fn with_operators(loaded: &mut Loaded, operators: Option<&str>) -> Result<(), CliError> {
    if let Some(text) = operators {
        for op in load_operators(text, loaded)?.iter() {
            loaded.ops.push(op.clone());
        }
    }
    Ok(())
}

fn has_singular_map(g: &PermGroup, ops: &OperatorSet) -> bool {
    ops.iter().any(|op| match op {
        Operator::Map(h) => h.image_group().order() < g.order(),
        Operator::Conj(_) => false,
    })
}

/// Remak decomposition of a loaded group, splitting off kernels and images
/// of singular operators first.
pub fn decompose_group(g: &PermGroup, ops: &OperatorSet, opts: &Options) -> Result<Decomposition, CliError> {
    let d = if has_singular_map(g, ops) {
        reduce_general_operators(g, ops, &opts.settings())?
    } else {
        find_remak(g, ops, &opts.settings())?
    };
    if !d.is_direct {
        return Err(CliError::Failed("result is not a direct decomposition".into()));
    }
    Ok(d)
}

pub fn decompose(input: &str, operators: Option<&str>, opts: &Options) -> Result<RunReport, CliError> {
    let mut loaded = load_group(input)?;
    with_operators(&mut loaded, operators)?;
    let start = Instant::now();
    let d = decompose_group(&loaded.group, &loaded.ops, opts)?;
    let elapsed = start.elapsed();
    let verified = opts.certify.then(|| d.verify(&loaded.ops));
    if verified == Some(false) {
        return Err(CliError::Failed("certificate does not re-verify".into()));
    }
    let mut report = RunReport::from_decomposition(input, "decompose", &d, loaded.table.as_ref(), verified);
    if opts.timing {
        report.timing_ms = Some(elapsed.as_secs_f64() * 1000.0);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementReport {
    pub input_digest: String,
    pub subgroup_order: u64,
    pub complement: Option<FactorReport>,
    /// Failed stage: not-invariant, product-too-small,
    /// centralizer-not-invariant or infeasible.
    pub refusal: Option<String>,
    pub witness: Option<String>,
    pub verified: Option<bool>,
}

impl Render for ComplementReport {
    fn to_text(&self) -> String {
        let mut s = format!("input {}\nsubgroup-order {}\n", self.input_digest, self.subgroup_order);
        if let Some(c) = &self.complement {
            s += &format!("complement {} {}\n", c.order, c.generators.join(" "));
        }
        if let Some(r) = &self.refusal {
            s += &format!("refusal {r}\n");
        }
        if let Some(w) = &self.witness {
            s += &format!("witness {w}\n");
        }
        if let Some(v) = self.verified {
            s += &format!("verified {}\n", if v { "yes" } else { "no" });
        }
        s
    }

    fn to_json(&self) -> String {
        json(self)
    }
}

pub fn refusal_stage(r: &Refusal) -> (&'static str, Option<String>) {
    match r {
        Refusal::NotInvariant(w) => ("not-invariant", Some(cycle_string(w))),
        Refusal::ProductTooSmall { product, order } => ("product-too-small", Some(format!("{product} < {order}"))),
        Refusal::CentralizerNotInvariant(w) => ("centralizer-not-invariant", Some(cycle_string(w))),
        Refusal::Infeasible => ("infeasible", None),
    }
}

pub fn complement(
    input: &str,
    subgroup: &str,
    operators: Option<&str>,
    opts: &Options,
) -> Result<ComplementReport, CliError> {
    let mut loaded = load_group(input)?;
    with_operators(&mut loaded, operators)?;
    let h = load_subgroup(subgroup, &loaded)?;
    let g = &loaded.group;
    let mut report = ComplementReport {
        input_digest: digest(input),
        subgroup_order: h.order() as u64,
        complement: None,
        refusal: None,
        witness: None,
        verified: None,
    };
    match direct_complement(g, &h, &loaded.ops, &opts.settings())? {
        Complement::Found(k) => {
            let d = Decomposition::new(g, vec![h.clone(), k.clone()], &loaded.ops, false);
            let ok = if k.is_trivial() { h.order() == g.order() } else { d.is_direct && d.omega_stable };
            if opts.certify {
                report.verified = Some(ok);
            }
            if !ok {
                return Err(CliError::Failed("complement does not verify".into()));
            }
            let gens = canonical_generators(&k);
            let generators = match &loaded.table {
                Some(t) => gens.iter().map(|x| t.label_of(x).expect("table element").to_string()).collect(),
                None => gens.iter().map(cycle_string).collect(),
            };
            report.complement = Some(FactorReport { order: k.order() as u64, generators, indecomposable: false });
        }
        Complement::NotFactor(r) => {
            let (stage, witness) = refusal_stage(&r);
            report.refusal = Some(stage.into());
            report.witness = witness;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianReport {
    pub input_digest: String,
    pub order: u64,
    /// Orders of a primary basis.
    pub basis: Vec<u64>,
    pub factors: Vec<u64>,
}

impl Render for AbelianReport {
    fn to_text(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        format!(
            "input {}\norder {}\nbasis {}\nfactors {}\n",
            self.input_digest,
            self.order,
            join(&self.basis),
            join(&self.factors)
        )
    }

    fn to_json(&self) -> String {
        json(self)
    }
}

pub fn abelian(input: &str, operators: Option<&str>) -> Result<AbelianReport, CliError> {
    let mut loaded = load_group(input)?;
    with_operators(&mut loaded, operators)?;
    let g = &loaded.group;
    let pres = primary_decomposition(g)?;
    let mut factors: Vec<u64> = remak_abelian(g, &loaded.ops)?.iter().map(|f| f.order() as u64).collect();
    factors.sort_unstable();
    Ok(AbelianReport { input_digest: digest(input), order: g.order() as u64, basis: pres.orders(), factors })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentroidPart {
    pub p: u64,
    pub v_exps: Vec<u32>,
    pub w_exps: Vec<u32>,
    pub rank: usize,
    pub frame_size: usize,
    /// `(dim V e, dim W e)` for each frame block.
    pub blocks: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentroidReport {
    pub input_digest: String,
    pub order: u64,
    pub parts: Vec<CentroidPart>,
}

impl Render for CentroidReport {
    fn to_text(&self) -> String {
        let mut s = format!("input {}\norder {}\n", self.input_digest, self.order);
        for c in &self.parts {
            let blocks: Vec<String> = c.blocks.iter().map(|(v, w)| format!("{v}/{w}")).collect();
            s += &format!(
                "prime {} dim-v {} dim-w {} rank {} frame {} blocks {}\n",
                c.p,
                c.v_exps.len(),
                c.w_exps.len(),
                c.rank,
                c.frame_size,
                blocks.join(" ")
            );
        }
        s
    }

    fn to_json(&self) -> String {
        json(self)
    }
}

/// Centroid and frame of `Bi` of every Sylow subgroup of a nilpotent group
/// of class at most 2.
pub fn centroid_parts(g: &PermGroup, coset_bound: usize) -> Result<Vec<CentroidPart>, CliError> {
    let series = upper_central_series(g, coset_bound)?;
    if series.last().map(|z| z.order()) != Some(g.order()) {
        return Err(CliError::Invalid("group is not nilpotent".into()));
    }
    let mut parts = Vec::new();
    let mut n = g.order();
    let mut p = 2u128;
    while n > 1 {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            let sylow = nilpotent_sylow(g, p as u64);
            let b = bi_of_group(&sylow)?;
            let c = centroid(&b)?;
            let frame = frame_decomposition(&b)?;
            parts.push(CentroidPart {
                p: b.p(),
                v_exps: b.v().exps.clone(),
                w_exps: b.w().exps.clone(),
                rank: c.rank(),
                frame_size: frame.len(),
                blocks: frame.iter().map(|blk| (blk.v_basis.len(), blk.w_basis.len())).collect(),
            });
        }
        p += 1;
    }
    Ok(parts)
}

pub fn centroid_report(input: &str, zeta2: bool, opts: &Options) -> Result<CentroidReport, CliError> {
    let loaded = load_group(input)?;
    let g = if zeta2 { upper_central_term(&loaded.group, 2, opts.coset_bound)? } else { loaded.group.clone() };
    Ok(CentroidReport { input_digest: digest(input), order: g.order() as u64, parts: centroid_parts(&g, opts.coset_bound)? })
}

/// Structure constants of a commutative ring: `table[x][y]` holds the
/// coordinates of `b_x b_y`; basis element `i` has additive order
/// `p^exps[i]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingFile {
    pub p: u64,
    pub exps: Vec<u32>,
    pub table: Vec<Vec<Vec<u64>>>,
    pub one: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameReport {
    pub input_digest: String,
    pub rank: usize,
    pub frame: Vec<Vec<u64>>,
}

impl Render for FrameReport {
    fn to_text(&self) -> String {
        let mut s = format!("input {}\nrank {}\nframe {}\n", self.input_digest, self.rank, self.frame.len());
        for e in &self.frame {
            s += &format!("idempotent {}\n", e.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        }
        s
    }

    fn to_json(&self) -> String {
        json(self)
    }
}

pub fn frame(input: &str) -> Result<FrameReport, CliError> {
    let file: RingFile = serde_json::from_str(input)?;
    let r = FiniteCommRing::with_orders(file.p, file.exps, file.table, file.one)?;
    Ok(FrameReport { input_digest: digest(input), rank: r.rank(), frame: r.frame() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub input_digest: String,
    pub order: u64,
    pub comparison: OracleComparison,
    pub agree: bool,
}

impl Render for OracleReport {
    fn to_text(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let iso = match self.comparison.isomorphic {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unchecked",
        };
        format!(
            "input {}\norder {}\npipeline {}\noracle {}\nisomorphic {}\nagree {}\n",
            self.input_digest,
            self.order,
            join(&self.comparison.pipeline),
            join(&self.comparison.oracle),
            iso,
            if self.agree { "yes" } else { "no" }
        )
    }

    fn to_json(&self) -> String {
        json(self)
    }
}

pub fn oracle_check(input: &str, opts: &Options) -> Result<OracleReport, CliError> {
    let loaded = load_group(input)?;
    if !loaded.ops.is_empty() {
        return Err(CliError::Invalid("the oracle does not take operators".into()));
    }
    let d = decompose_group(&loaded.group, &loaded.ops, opts)?;
    let comparison = compare_with_oracle(&d, &opts.bounds())?;
    let agree = comparison.agrees();
    Ok(OracleReport { input_digest: digest(input), order: d.ambient.order() as u64, comparison, agree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRow {
    pub file: String,
    pub order: Option<u64>,
    /// Factor orders separated by spaces.
    pub factors: String,
    /// ok, resource, invalid or failed.
    pub status: String,
    /// agree, disagree, skipped, or empty without `--oracle`.
    pub oracle: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub rows: Vec<BatchRow>,
    #[serde(skip)]
    pub reports: Vec<Option<RunReport>>,
}

impl BatchReport {
    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("utf-8")
    }
}

impl Render for BatchReport {
    fn to_text(&self) -> String {
        self.csv()
    }

    fn to_json(&self) -> String {
        json(&self.rows)
    }
}

fn status_of(e: &CliError) -> &'static str {
    match e {
        CliError::Resource(_) => "resource",
        CliError::Invalid(_) => "invalid",
        CliError::Failed(_) => "failed",
    }
}

fn batch_one(path: &Path, oracle: bool, opts: &Options) -> (BatchRow, Option<RunReport>) {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let mut row = BatchRow {
        file,
        order: None,
        factors: String::new(),
        status: "ok".into(),
        oracle: String::new(),
        message: String::new(),
    };
    let result = std::fs::read_to_string(path).map_err(CliError::from).and_then(|text| {
        let report = decompose(&text, None, opts)?;
        let check = if oracle { Some(oracle_check(&text, opts)) } else { None };
        Ok((report, check))
    });
    match result {
        Ok((report, check)) => {
            row.order = Some(report.order);
            row.factors = report.orders().iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            row.oracle = match check {
                None => String::new(),
                Some(Ok(o)) if o.agree => "agree".into(),
                Some(Ok(_)) => "disagree".into(),
                Some(Err(e)) => {
                    row.message = e.to_string();
                    "skipped".into()
                }
            };
            (row, Some(report))
        }
        Err(e) => {
            row.status = status_of(&e).into();
            row.message = e.to_string();
            (row, None)
        }
    }
}

/// Decompose every `.json` file in `dir`, in name order. A failing file
/// is reported in its row and does not stop the others.
pub fn batch(dir: &Path, oracle: bool, opts: &Options) -> Result<BatchReport, CliError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let (rows, reports) = files.par_iter().map(|p| batch_one(p, oracle, opts)).unzip();
    Ok(BatchReport { rows, reports })
}

/// Write the corpus as group files, one per group; returns the count.
pub fn write_corpus(dir: &Path, tables_up_to: u128) -> Result<usize, CliError> {
    std::fs::create_dir_all(dir)?;
    let entries = corpus();
    for e in &entries {
        std::fs::write(dir.join(format!("{}.json", e.name)), serde_json::to_string(&perm_file(&e.group))?)?;
        if e.group.order() <= tables_up_to {
            let path = dir.join(format!("{}.table.json", e.name));
            std::fs::write(path, serde_json::to_string(&table_file(&e.group))?)?;
        }
    }
    Ok(entries.len())
}
