use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::Path;

use homlab::extremal::{
    check_lemma10, cycle_bound_threshold, describe_h, path_bound_threshold, profile,
    verify_2conn_max, verify_2conn_max_on, verify_cycle_kq, verify_cycle_kq_on,
    verify_hoffman_london, verify_tree_max, verify_tree_min, VerificationReport,
};
use homlab::family::{gen_graphs, ingest_graph6_stream, FamilyKind, FamilySpec, IngestOptions};
use homlab::graph::{certificate, h_certificate, parse_hgraph, serialize_graph6};
use homlab::hom::{count_hom, count_hom_restricted, Assignment};
use homlab::structure::{
    check_decomposition, ear_decomposition, is_2_connected, is_2_edge_connected,
    is_minimally_2_connected, normal_form_ears, open_ear_decomposition, EarDecomposition,
};
use homlab::{Error, ExactCount, HGraph, Result, SimpleGraph};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::Cache;
use crate::{CountArgs, Theorem, VerifyArgs};

fn read_h(path: &Path) -> Result<HGraph> {
    Ok(parse_hgraph(&fs::read_to_string(path)?)?)
}

fn read_graphs(path: &Path, opts: &IngestOptions) -> Result<Vec<SimpleGraph>> {
    let file = File::open(path)?;
    let opts = IngestOptions {
        strict: true,
        ..opts.clone()
    };
    Ok(ingest_graph6_stream(BufReader::new(file), &opts)?.graphs)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let line = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    println!("{line}");
    Ok(())
}

#[derive(Serialize)]
struct CountLine {
    graph: String,
    h: String,
    count: ExactCount,
}

pub fn count(args: &CountArgs) -> Result<u8> {
    let h = read_h(&args.h)?;
    let graphs = match (&args.graph, args.family, args.n) {
        (Some(path), _, _) => read_graphs(path, &IngestOptions::default())?,
        (None, Some(kind), Some(n)) => gen_graphs(FamilySpec::new(kind, n)?)?,
        _ => {
            return Err(Error::InvalidParameter(
                "give --graph or --family with --n".into(),
            ))
        }
    };
    let pins: Assignment = args.pins.iter().copied().collect();
    if let Some(g) = graphs.iter().find(|g| !pins.is_valid_for(g, &h)) {
        return Err(Error::InvalidParameter(format!(
            "pins reference vertices outside {} or the target",
            serialize_graph6(g)
        )));
    }
    let counts: Vec<ExactCount> = match (&args.cache, pins.is_empty()) {
        (Some(dir), true) => cached_counts(dir, &graphs, &h)?,
        _ => graphs
            .par_iter()
            .map(|g| count_hom_restricted(g, &h, &pins))
            .collect(),
    };
    let hd = describe_h(&h);
    for (g, c) in graphs.iter().zip(counts) {
        print_json(&CountLine {
            graph: serialize_graph6(g),
            h: hd.clone(),
            count: c,
        })?;
    }
    Ok(0)
}

/// Looks counts up by certificate; misses are computed in parallel and
/// written back from this thread only.
fn cached_counts(dir: &Path, graphs: &[SimpleGraph], h: &HGraph) -> Result<Vec<ExactCount>> {
    let mut cache = Cache::open(dir)?;
    let h_cert = h_certificate(h).to_hex();
    let certs: Vec<String> = graphs
        .iter()
        .map(|g| certificate(g).map(|c| c.to_hex()))
        .collect::<Result<_>>()?;
    let found: Vec<Option<ExactCount>> = certs
        .iter()
        .map(|c| cache.get(c, &h_cert).cloned())
        .collect();
    let computed: Vec<Option<ExactCount>> = graphs
        .par_iter()
        .zip(&found)
        .map(|(g, f)| f.is_none().then(|| count_hom(g, h)))
        .collect();
    let fresh = certs
        .iter()
        .zip(&computed)
        .filter_map(|(c, x)| x.as_ref().map(|x| (c.clone(), h_cert.clone(), x.clone())))
        .collect();
    cache.append(fresh)?;
    Ok(found
        .into_iter()
        .zip(computed)
        .map(|(f, c)| f.or(c).expect("either cached or computed"))
        .collect())
}

fn write_report(out: Option<&Path>, report: &impl Serialize, csv: Option<String>) -> Result<()> {
    let Some(path) = out else {
        return Ok(());
    };
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let body = match (is_csv, csv) {
        (true, Some(text)) => text,
        _ => {
            let mut s =
                serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    fs::write(path, body)?;
    Ok(())
}

fn finish(report: &VerificationReport, out: Option<&Path>) -> Result<u8> {
    write_report(out, report, Some(report.to_csv()))?;
    println!("{}", report.summary());
    Ok(match report.status() {
        "FAIL" => 1,
        "N/A" => 4,
        _ => 0,
    })
}

fn family_graphs(path: &Path, n: usize, kind: FamilyKind) -> Result<Vec<SimpleGraph>> {
    let graphs = read_graphs(
        path,
        &IngestOptions {
            strict: true,
            dedup: true,
            filter: Some(kind),
        },
    )?;
    Ok(graphs.into_iter().filter(|g| g.n() == n).collect())
}

pub fn verify(args: &VerifyArgs) -> Result<u8> {
    let out = args.out.as_deref();
    match &args.theorem {
        Theorem::TreeMin { base, ell, n } => {
            let report = verify_tree_min(&read_h(base)?, *ell, *n)?;
            finish(&report, out)
        }
        Theorem::TreeMax { h, n } => finish(&verify_tree_max(&read_h(h)?, *n)?, out),
        Theorem::TwoConn {
            h,
            n,
            minimal,
            graphs,
        } => {
            let h = read_h(h)?;
            let report = match graphs {
                Some(path) => {
                    let kind = if *minimal {
                        FamilyKind::MinimallyTwoConnected
                    } else {
                        FamilyKind::TwoConnected
                    };
                    let gs = family_graphs(path, *n, kind)?;
                    let label = format!("{}(n={n}) from {}", kind, path.display());
                    verify_2conn_max_on(&h, &gs, *n, &label)?
                }
                None => verify_2conn_max(&h, *n, *minimal)?,
            };
            finish(&report, out)
        }
        Theorem::CycleKq {
            q,
            n,
            family,
            graphs,
        } => {
            let report = match graphs {
                Some(path) => {
                    if !matches!(
                        family,
                        FamilyKind::TwoConnected | FamilyKind::TwoEdgeConnected
                    ) {
                        return Err(Error::InvalidParameter(format!(
                            "cycle-kq needs a 2conn or 2econn family, got {family}"
                        )));
                    }
                    let gs = family_graphs(path, *n, *family)?;
                    let label = format!("{family}(n={n}) from {}", path.display());
                    verify_cycle_kq_on(*q, &gs, *n, &label)?
                }
                None => verify_cycle_kq(*q, *n, *family)?,
            };
            finish(&report, out)
        }
        Theorem::Lemma10 { h, k } => {
            let report = check_lemma10(&read_h(h)?, *k)?;
            write_report(out, &report, None)?;
            let max = report
                .max
                .as_ref()
                .map(|m| format!("max ({},{}) = {}", m.i, m.j, m.count))
                .unwrap_or_else(|| "max -".into());
            println!(
                "{} lemma10 k={} bound {}, {max}",
                report.status(),
                report.k,
                report.bound
            );
            Ok(match report.status() {
                "FAIL" => 1,
                "N/A" => 4,
                _ => 0,
            })
        }
        Theorem::HoffmanLondon { h, n } => {
            let h = read_h(h)?;
            let report = verify_hoffman_london(&h, *n);
            write_report(out, &report, None)?;
            println!("{} hoffman-london h={} n<={n}", report.status(), report.h);
            Ok(if report.verdict.is_confirmed() { 0 } else { 1 })
        }
    }
}

#[derive(Serialize)]
struct Bounds {
    delta: usize,
    v_eq_delta: Vec<usize>,
    s: ExactCount,
    regular: bool,
    connected: bool,
    #[serde(rename = "ell_H", skip_serializing_if = "Option::is_none")]
    ell_h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_cutoff: Option<usize>,
}

pub fn bounds(path: &Path) -> Result<u8> {
    let h = read_h(path)?;
    let p = profile(&h);
    let ell_h = if p.regular {
        None
    } else {
        path_bound_threshold(&h).ok()
    };
    let cycle = if p.regular {
        cycle_bound_threshold(&h).ok()
    } else {
        None
    };
    print_json(&Bounds {
        delta: p.delta,
        v_eq_delta: p.v_eq_delta,
        s: p.s,
        regular: p.regular,
        connected: p.connected,
        ell_h,
        cycle_threshold: cycle.as_ref().map(|c| c.threshold),
        cycle_cutoff: cycle.as_ref().map(|c| c.cutoff),
    })?;
    Ok(0)
}

pub fn gen(kind: FamilyKind, n: usize, format: &str, out: Option<&Path>) -> Result<u8> {
    if format != "g6" {
        return Err(Error::InvalidParameter(format!(
            "unsupported format {format:?}"
        )));
    }
    let graphs = gen_graphs(FamilySpec::new(kind, n)?)?;
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&serialize_graph6(g));
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct Analysis {
    graph: String,
    n: usize,
    edges: usize,
    two_connected: bool,
    two_edge_connected: bool,
    minimally_two_connected: bool,
    ear_decomposition: Option<Ears>,
}

#[derive(Serialize)]
struct Ears {
    open: bool,
    cycle: Vec<usize>,
    ears: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    long_ears: Option<usize>,
}

impl Ears {
    fn new(dec: EarDecomposition, long_ears: Option<usize>) -> Ears {
        Ears {
            open: dec.all_open(),
            cycle: dec.cycle,
            ears: dec.ears.into_iter().map(|e| e.vertices).collect(),
            long_ears,
        }
    }
}

fn analyze_one(g: &SimpleGraph) -> Result<Analysis> {
    let two = is_2_connected(g);
    let two_edge = is_2_edge_connected(g);
    let minimal = two && is_minimally_2_connected(g)?;
    let ears = if minimal {
        let nf = normal_form_ears(g)?;
        check_decomposition(g, &nf.decomposition, true)?;
        Some(Ears::new(nf.decomposition, Some(nf.long_ears)))
    } else if two {
        let dec = open_ear_decomposition(g)?;
        check_decomposition(g, &dec, true)?;
        Some(Ears::new(dec, None))
    } else if two_edge {
        let dec = ear_decomposition(g)?;
        check_decomposition(g, &dec, false)?;
        Some(Ears::new(dec, None))
    } else {
        None
    };
    Ok(Analysis {
        graph: serialize_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        two_connected: two,
        two_edge_connected: two_edge,
        minimally_two_connected: minimal,
        ear_decomposition: ears,
    })
}

pub fn analyze(path: &Path) -> Result<u8> {
    for g in read_graphs(path, &IngestOptions::default())? {
        print_json(&analyze_one(&g)?)?;
    }
    Ok(0)
}
