//! Output shaping: one stable JSON object per run, or plain text.

use serde::Serialize;

use rrgb::buchberger::{GbStats, GbTrace, TraceAction};
use rrgb::ReductionRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct TraceEntry {
    pub action: String,
    pub pair: Option<(usize, usize)>,
    pub red: String,
    pub pairs: usize,
    pub crit: usize,
    pub added: Option<String>,
}

#[derive(Debug, Serialize, Default)]
pub struct Stats {
    pub transitions: u64,
    pub pairs_processed: u64,
    pub h_zero: u64,
    pub elements_added: u64,
    pub reductions: u64,
}

impl From<GbStats> for Stats {
    fn from(s: GbStats) -> Self {
        Stats {
            transitions: s.transitions,
            pairs_processed: s.pairs_processed,
            h_zero: s.h_zero,
            elements_added: s.elements_added,
            reductions: s.reductions,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ResultBody {
    Basis { basis: Vec<String> },
    NormalForm { normal_form: String },
    Member { member: bool },
    Equal { equal: bool },
    Check(CheckBody),
}

#[derive(Debug, Serialize)]
pub struct CheckBody {
    pub gb_confluent: bool,
    pub gb_criterion: bool,
    pub ideal_preserved: bool,
    pub input_confluent: bool,
    pub input_criterion: bool,
    pub criterion_agreement: bool,
    pub method: String,
}

impl CheckBody {
    pub fn passed(&self) -> bool {
        self.gb_confluent && self.gb_criterion && self.ideal_preserved && self.criterion_agreement
    }
}

/// The single object every run emits in JSON mode.
#[derive(Debug, Serialize)]
pub struct Report {
    pub ring: String,
    pub result: ResultBody,
    pub stats: Stats,
    pub trace: Vec<TraceEntry>,
}

pub fn trace_entries<R: ReductionRing>(
    ring: &R,
    trace: &GbTrace<R::Element>,
    enabled: bool,
) -> Vec<TraceEntry> {
    if !enabled {
        return Vec::new();
    }
    trace
        .steps
        .iter()
        .map(|s| TraceEntry {
            action: match s.action {
                TraceAction::Base => "base".to_string(),
                TraceAction::LoadPair { .. } => "load-pair".to_string(),
                TraceAction::HZero => "h-zero".to_string(),
                TraceAction::HAdded => "h-added".to_string(),
            },
            pair: match s.action {
                TraceAction::LoadPair { k, l } => Some((k, l)),
                _ => None,
            },
            red: s.red_tag.clone(),
            pairs: s.queue_len,
            crit: s.crit_len,
            added: s.added.as_ref().map(|h| ring.render(h)),
        })
        .collect()
}

impl Report {
    pub fn print(&self, format: Format) {
        match format {
            Format::Json => {
                println!("{}", serde_json::to_string(self).expect("serializable report"));
            }
            Format::Text => self.print_text(),
        }
    }

    fn print_text(&self) {
        println!("ring: {}", self.ring);
        match &self.result {
            ResultBody::Basis { basis } => {
                println!("basis:");
                for (i, e) in basis.iter().enumerate() {
                    println!("  {}: {}", i + 1, e);
                }
            }
            ResultBody::NormalForm { normal_form } => println!("normal_form: {normal_form}"),
            ResultBody::Member { member } => println!("member: {member}"),
            ResultBody::Equal { equal } => println!("equal: {equal}"),
            ResultBody::Check(c) => {
                let verdict = |b: bool| if b { "pass" } else { "FAIL" };
                println!("method: {}", c.method);
                println!("gb_confluent: {}", verdict(c.gb_confluent));
                println!("gb_criterion: {}", verdict(c.gb_criterion));
                println!("ideal_preserved: {}", verdict(c.ideal_preserved));
                println!(
                    "criterion_agreement: {} (input confluent={}, criterion={})",
                    verdict(c.criterion_agreement),
                    c.input_confluent,
                    c.input_criterion
                );
            }
        }
        println!(
            "stats: transitions={} pairs={} h_zero={} added={} reductions={}",
            self.stats.transitions,
            self.stats.pairs_processed,
            self.stats.h_zero,
            self.stats.elements_added,
            self.stats.reductions
        );
        if !self.trace.is_empty() {
            println!("trace:");
            for (i, t) in self.trace.iter().enumerate() {
                let mut line = format!(
                    "  {}. {} [{} |P|={} |M|={}]",
                    i + 1,
                    t.action,
                    t.red,
                    t.pairs,
                    t.crit
                );
                if let Some((k, l)) = t.pair {
                    line.push_str(&format!(" pair=({k},{l})"));
                }
                if let Some(h) = &t.added {
                    line.push_str(&format!(" added={h}"));
                }
                println!("{line}");
            }
        }
    }
}
