use decomp::Decomposition;
use perm_core::catalog::TableGroup;
use perm_core::{PermGroup, Permutation};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub order: u64,
    /// Cycles with 1-based points, or element labels in table mode.
    pub generators: Vec<String>,
    pub indecomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub is_direct: bool,
    pub omega_stable: bool,
    pub span_order: u64,
    pub complement_orders: Vec<u64>,
    /// Result of recomputing the certificate, when asked for.
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input_digest: String,
    pub command: String,
    pub order: u64,
    pub factors: Vec<FactorReport>,
    pub certificate: CertificateReport,
    pub notices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

pub fn digest(text: &str) -> String {
    format!("sha256:{:x}", Sha256::digest(text.as_bytes()))
}

/// Cycle string with 1-based points, `()` for the identity.
pub fn cycle_string(x: &Permutation) -> String {
    let cycles = x.to_cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect()
}

/// A short generating set: sorted generators, each kept only when it is
/// not already generated by the earlier ones.
pub fn canonical_generators(h: &PermGroup) -> Vec<Permutation> {
    let mut all: Vec<Permutation> = h.gens().to_vec();
    all.sort_by(|a, b| a.images().cmp(b.images()));
    all.dedup();
    let mut kept: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::trivial(h.degree());
    for x in all {
        if span.order() == h.order() {
            break;
        }
        if !span.contains(&x) {
            kept.push(x);
            span = PermGroup::generated(h.degree(), kept.clone());
        }
    }
    kept
}

fn factor_report(h: &PermGroup, table: Option<&TableGroup>, indecomposable: bool) -> FactorReport {
    let gens = canonical_generators(h);
    let generators = match table {
        Some(t) => gens.iter().map(|x| t.label_of(x).expect("table element").to_string()).collect(),
        None => gens.iter().map(cycle_string).collect(),
    };
    FactorReport { order: h.order() as u64, generators, indecomposable }
}

impl RunReport {
    /// Factors sorted by order, then by generators.
    pub fn from_decomposition(
        input: &str,
        command: &str,
        d: &Decomposition,
        table: Option<&TableGroup>,
        verified: Option<bool>,
    ) -> Self {
        let mut factors: Vec<FactorReport> =
            d.factors.iter().map(|h| factor_report(h, table, d.is_remak_claimed)).collect();
        factors.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.generators.cmp(&b.generators)));
        let c = &d.certificate;
        RunReport {
            input_digest: digest(input),
            command: command.into(),
            order: d.ambient.order() as u64,
            factors,
            certificate: CertificateReport {
                is_direct: d.is_direct,
                omega_stable: d.omega_stable,
                span_order: c.span_order as u64,
                complement_orders: c.complement_orders.iter().map(|&o| o as u64).collect(),
                verified,
            },
            notices: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        s += &format!("input {}\n", self.input_digest);
        s += &format!("command {}\n", self.command);
        s += &format!("order {}\n", self.order);
        s += &format!("factors {}\n", self.factors.len());
        for f in &self.factors {
            let kind = if f.indecomposable { "indecomposable" } else { "unclaimed" };
            s += &format!("factor {} {} {}\n", f.order, kind, f.generators.join(" "));
        }
        let c = &self.certificate;
        s += &format!("direct {}\n", yn(c.is_direct));
        s += &format!("omega-stable {}\n", yn(c.omega_stable));
        if let Some(v) = c.verified {
            s += &format!("verified {}\n", yn(v));
        }
        for n in &self.notices {
            s += &format!("notice {n}\n");
        }
        if let Some(t) = self.timing_ms {
            s += &format!("time-ms {t:.3}\n");
        }
        s
    }
}

/// Read factor lines back from [`RunReport::to_text`] output.
pub fn parse_text_factors(text: &str) -> Option<Vec<FactorReport>> {
    text.lines()
        .filter_map(|l| l.strip_prefix("factor "))
        .map(|rest| {
            let mut parts = rest.split(' ');
            let order = parts.next()?.parse().ok()?;
            let indecomposable = match parts.next()? {
                "indecomposable" => true,
                "unclaimed" => false,
                _ => return None,
            };
            let generators = parts.filter(|p| !p.is_empty()).map(String::from).collect();
            Some(FactorReport { order, generators, indecomposable })
        })
        .collect()
}
