use bcres_core::arrangement::{koszul_report, Arrangement};
use bcres_core::betti::{betti_table, classify_linearity, componentwise_linear_check};
use bcres_core::complex::bc_complex;
use bcres_core::corpus::matroid_corpus;
use bcres_core::decomposition::{
    cross_validate, extremal_h_check, fvector_bound_check, stratify, two_term_decomposition, verify_stratification,
    ClaimStatus, CrossOptions, CrossReport,
};
use bcres_core::graph::{build_gnr, gnr_report};
use bcres_core::hilbert::{binomial_form_fit, default_horizon, hilbert_function, linear_value_criterion};
use bcres_core::ideal::{broken_circuit_ideal, colon_sequence, quotients_analysis, OrderSearch};
use bcres_core::{ElementOrder, Error, Graph, Matroid, MonomialIdeal};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::input::{element_order, Subject};
use crate::{CliError, Command, LoadedInput, Options, Provenance, Report, Verdict, TOOL_VERSION};

/// Largest Hilbert-function horizon reported by `hilbert`.
const HILBERT_HORIZON: u32 = 10;

struct Builder {
    verdicts: Vec<Verdict>,
    result: Map<String, Value>,
    inconclusive: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            verdicts: Vec::new(),
            result: Map::new(),
            inconclusive: Vec::new(),
        }
    }

    fn verdict(&mut self, name: &str, value: impl ToString, operation: &str) {
        self.verdicts.push(Verdict {
            name: name.into(),
            value: value.to_string(),
            operation: operation.into(),
        });
    }

    fn set(&mut self, key: &str, value: impl serde::Serialize) {
        self.result
            .insert(key.into(), serde_json::to_value(value).expect("results serialize"));
    }

    /// Keep going past a bound failure, recording it; other errors abort.
    fn soft<T>(&mut self, what: &str, r: bcres_core::Result<T>) -> Result<Option<T>, CliError> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_bound() => {
                self.inconclusive.push(format!("bound: {what}: {e}"));
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.into())
}

fn subject_matroid(s: &Subject) -> Result<Matroid, CliError> {
    match s {
        Subject::Matroid(m) => Ok(m.clone()),
        Subject::Arrangement(a) => Ok(a.matroid()?),
        Subject::Graph(g) => Ok(g.cycle_matroid()?),
        Subject::Ideal(_) => Err(usage("this command needs a matroid, arrangement or graph input")),
    }
}

fn labelled(x: &Matroid, masks: &[u64]) -> Vec<Vec<String>> {
    masks.iter().map(|&m| x.labels_of(m)).collect()
}

/// The input's matroid with its element order, or `None` for ideal inputs.
fn matroid_and_order(subject: &Subject, order: Option<&[String]>) -> Result<Option<(Matroid, ElementOrder)>, CliError> {
    if let Subject::Ideal(_) = subject {
        if order.is_some() {
            return Err(usage("an element order applies only to matroid, arrangement and graph inputs"));
        }
        return Ok(None);
    }
    let x = subject_matroid(subject)?;
    let ord = element_order(&x, order)?;
    Ok(Some((x, ord)))
}

fn working_ideal(subject: &Subject, mo: &Option<(Matroid, ElementOrder)>) -> Result<MonomialIdeal, CliError> {
    match (subject, mo) {
        (Subject::Ideal(i), _) => Ok(i.clone()),
        (_, Some((x, ord))) => Ok(broken_circuit_ideal(x, ord)?),
        _ => unreachable!("non-ideal subjects always carry a matroid"),
    }
}

/// Dispatch one command. `input` may be absent only for `gnr` and batch `cross-validate`.
pub fn run_command(command: Command, input: Option<&LoadedInput>, opts: &Options) -> Result<Report, CliError> {
    let subject = input.map(|i| i.document.subject()).transpose()?;
    let order: Option<Vec<String>> = opts
        .order
        .clone()
        .or_else(|| input.and_then(|i| i.document.order.clone()));
    let mut b = Builder::new();

    match (command, &subject) {
        (Command::Gnr, _) => gnr(&mut b, opts)?,
        (Command::CrossValidate, None) => cross_batch(&mut b, opts)?,
        (_, None) => return Err(usage(&format!("{} needs an input document", command.name()))),
        (_, Some(s)) => {
            let mo = matroid_and_order(s, order.as_deref())?;
            match command {
                Command::Info => info(&mut b, s, &mo)?,
                Command::Bc => bc(&mut b, &need_matroid(&mo)?)?,
                Command::Ideal => ideal(&mut b, &working_ideal(s, &mo)?),
                Command::Betti => betti(&mut b, &working_ideal(s, &mo)?, opts)?,
                Command::Hilbert => hilbert(&mut b, &working_ideal(s, &mo)?)?,
                Command::Decompose => decompose(&mut b, &need_matroid(&mo)?.0)?,
                Command::Stratify => stratify_cmd(&mut b, &need_matroid(&mo)?.0)?,
                Command::Ci => ci(&mut b, &working_ideal(s, &mo)?, mo.is_some())?,
                Command::CrossValidate => {
                    let (x, ord) = need_matroid(&mo)?;
                    cross_single(&mut b, &x, &ord, opts)?
                }
                Command::Arrangement => match s {
                    Subject::Arrangement(a) => arrangement(&mut b, a)?,
                    _ => return Err(usage("arrangement needs an arrangement input")),
                },
                Command::Graph => match s {
                    Subject::Graph(g) => graph(&mut b, g, &need_matroid(&mo)?.1, opts)?,
                    _ => return Err(usage("graph needs a graph input")),
                },
                Command::Gnr => unreachable!("handled above"),
            }
        }
    }

    Ok(Report {
        command: command.name().into(),
        verdicts: b.verdicts,
        result: Value::Object(b.result),
        inconclusive: b.inconclusive,
        provenance: Provenance {
            input_sha256: input.map(|i| i.sha256.clone()),
            tool_version: TOOL_VERSION.into(),
            options: opts.clone(),
        },
    })
}

fn need_matroid(mo: &Option<(Matroid, ElementOrder)>) -> Result<(Matroid, ElementOrder), CliError> {
    mo.clone()
        .ok_or_else(|| usage("this command needs a matroid, arrangement or graph input"))
}

fn info(b: &mut Builder, s: &Subject, mo: &Option<(Matroid, ElementOrder)>) -> Result<(), CliError> {
    if let Subject::Ideal(i) = s {
        b.set("variables", i.names());
        b.set("ideal", i.render());
        b.set("generators", i.gens().len());
        b.set("initial_degree", i.indeg());
        b.set("max_degree", i.max_degree());
        b.verdict("squarefree", i.is_squarefree(), "MonomialIdeal::is_squarefree");
        b.verdict("equigenerated", i.is_equigenerated(), "MonomialIdeal::is_equigenerated");
        return Ok(());
    }
    let (x, _) = need_matroid(mo)?;
    let (components, coloops) = x.components_and_coloops();
    let tutte = x.tutte_polynomial();
    b.set("ground", x.labels());
    b.set("n", x.n());
    b.set("rank", x.full_rank());
    b.set("circuits", x.circuit_labels());
    b.set("loops", x.labels_of(x.loops()));
    b.set("coloops", x.labels_of(coloops));
    b.set("components", labelled(&x, &components));
    b.set("independent_sets_by_size", x.independence_profile());
    b.set("bases", tutte.eval(1, 1));
    b.set("tutte_polynomial", tutte.to_string());
    b.verdict("rank", x.full_rank(), "Matroid::full_rank");
    b.verdict("simple", x.is_simple(), "Matroid::is_simple");
    b.verdict("tutte polynomial", &tutte, "Matroid::tutte_polynomial");
    Ok(())
}

fn bc(b: &mut Builder, (x, ord): &(Matroid, ElementOrder)) -> Result<(), CliError> {
    let broken = x.broken_circuits(ord)?;
    let complex = bc_complex(x, ord)?;
    let fh = complex.f_h_vectors();
    let ideal = broken_circuit_ideal(x, ord)?;
    b.set("order", ord.sequence().iter().map(|&e| &x.labels()[e]).collect::<Vec<_>>());
    b.set("broken_circuits", labelled(x, &broken.all));
    b.set("minimal_broken_circuits", labelled(x, &broken.minimal));
    b.set("facets", complex.facet_labels());
    b.set("f_vector", &fh.f);
    b.set("h_vector", &fh.h);
    b.set("ideal", ideal.render());
    b.verdict("broken-circuit ideal", ideal.render(), "broken_circuit_ideal");
    b.verdict("h-vector", format!("{:?}", fh.h), "SimplicialComplex::f_h_vectors");
    Ok(())
}

fn order_label(s: &OrderSearch, ideal: &MonomialIdeal) -> String {
    match s {
        OrderSearch::Found(o) => {
            let gens: Vec<String> = o.iter().map(|&k| ideal.gens()[k].render(ideal.names())).collect();
            format!("yes, order {}", gens.join(", "))
        }
        OrderSearch::None => "no".into(),
        OrderSearch::Inconclusive => "inconclusive".into(),
    }
}

fn ideal(b: &mut Builder, ideal: &MonomialIdeal) {
    let q = quotients_analysis(ideal);
    b.set("ideal", ideal.render());
    b.set("generators", ideal.gens().iter().map(|g| g.render(ideal.names())).collect::<Vec<_>>());
    b.set("quotients", &q);
    if let Some(o) = q.graded_linear_quotients.found().or(q.linear_quotients.found()) {
        b.set(
            "colon_ideals",
            colon_sequence(ideal, o).iter().map(|j| j.render()).collect::<Vec<_>>(),
        );
    }
    for (name, s) in [
        ("linear quotients", &q.linear_quotients),
        ("graded linear quotients", &q.graded_linear_quotients),
    ] {
        if *s == OrderSearch::Inconclusive {
            b.inconclusive.push(format!("bound: {name}: heuristic search failed beyond the exhaustive limit"));
        }
        b.verdict(name, order_label(s, ideal), "quotients_analysis");
    }
    b.verdict("regular sequence", q.regular_sequence, "quotients_analysis");
}

fn betti(b: &mut Builder, ideal: &MonomialIdeal, opts: &Options) -> Result<(), CliError> {
    b.set("ideal", ideal.render());
    let Some(t) = b.soft("betti table", betti_table(ideal, opts.characteristic))? else {
        return Ok(());
    };
    let v = classify_linearity(&t);
    b.set("betti_grid", t.render());
    b.set("betti", &t);
    b.set("regularity", t.regularity());
    b.set("projective_dimension", t.projective_dimension());
    b.set("alternating_numerator", t.alternating_numerator().to_string());
    b.verdict("linearity", v.label(), "classify_linearity(betti_table)");
    let cw = componentwise_linear_check(ideal, opts.characteristic);
    match cw.holds {
        Some(h) => b.verdict("componentwise linear", h, "componentwise_linear_check"),
        None => b
            .inconclusive
            .push("bound: componentwise linear: a component exceeded the Betti oracle limits".into()),
    }
    b.set("componentwise", &cw);
    Ok(())
}

fn hilbert(b: &mut Builder, ideal: &MonomialIdeal) -> Result<(), CliError> {
    let horizon = default_horizon(ideal).max(HILBERT_HORIZON);
    let data = hilbert_function(ideal, horizon)?;
    b.set("ideal", ideal.render());
    b.set("values", &data.values);
    b.set("dimension", data.dim);
    b.set("codimension", data.codim);
    b.set("numerator", data.numerator.to_string());
    b.set("coefficients", &data.coefficients);
    b.set("coefficient_exponent", data.coefficient_exponent);
    match binomial_form_fit(&data) {
        Ok(fit) => {
            b.verdict("binomial form at the codimension", format!("c = {:?}", fit.c), "binomial_form_fit");
            b.set("binomial_form", &fit);
        }
        Err(e @ Error::DenominatorExceedsCodim { .. }) => {
            b.verdict("binomial form at the codimension", format!("not applicable: {e}"), "binomial_form_fit")
        }
        Err(e) => return Err(e.into()),
    }
    let lv = linear_value_criterion(ideal)?;
    b.verdict("single-value linearity criterion", lv.holds, "linear_value_criterion");
    b.set("linear_value", &lv);
    b.verdict("numerator", data.numerator.to_string(), "hilbert_function");
    Ok(())
}

fn decompose(b: &mut Builder, x: &Matroid) -> Result<(), CliError> {
    let two = two_term_decomposition(x)?;
    let s = x.min_circuit_size().map_or(x.full_rank(), |m| m - 1);
    let ext = extremal_h_check(x, s)?;
    let bound = fvector_bound_check(x, s)?;
    b.verdict(
        "two-term decomposition",
        match &two {
            Some(t) => format!("U({},{}) plus {} coloops", t.s, t.uniform_part.len(), t.coloops.len()),
            None => "none".into(),
        },
        "two_term_decomposition",
    );
    b.verdict("extremal h-vector", ext.holds, "extremal_h_check");
    b.verdict("f-vector bound holds", bound.iter().all(|r| r.holds), "fvector_bound_check");
    b.set("s", s);
    b.set("two_term", &two);
    b.set("extremal_h", &ext);
    b.set("fvector_bound", &bound);
    Ok(())
}

fn stratify_cmd(b: &mut Builder, x: &Matroid) -> Result<(), CliError> {
    let Some(found) = b.soft("stratification search", stratify(x))? else {
        return Ok(());
    };
    match found {
        Some(st) => {
            b.verdict("stratification", format!("{} strata", st.depth()), "stratify");
            b.verdict("certificates re-verify", verify_stratification(x, &st), "verify_stratification");
            b.verdict("rank sum equals rank", st.rank_sum_matches, "stratify");
            b.set("stratification", &st);
        }
        None => {
            b.verdict("stratification", "none", "stratify");
            b.set("stratification", Value::Null);
        }
    }
    Ok(())
}

fn ci(b: &mut Builder, ideal: &MonomialIdeal, from_matroid: bool) -> Result<(), CliError> {
    let ci = ideal.is_complete_intersection();
    b.set("ideal", ideal.render());
    b.set("generators", ideal.gens().len());
    if ideal.is_squarefree() {
        let data = hilbert_function(ideal, 0)?;
        b.set("height", data.codim);
    }
    b.verdict("complete intersection", ci, "MonomialIdeal::is_complete_intersection");
    if from_matroid {
        b.verdict("cohen-macaulay", true, "bc_complex (shellable)");
    } else if ci {
        b.verdict("cohen-macaulay", true, "complete intersection");
    }
    Ok(())
}

/// One-line reading of a cross-validation, e.g. "graded-linear, no two-term decomposition".
pub fn cross_summary(r: &CrossReport) -> String {
    let shape = match &r.verdict {
        Some(v) if v.is_linear() => v.label(),
        Some(v) if v.is_graded_linear() => "graded-linear".into(),
        Some(_) => "not graded-linear".into(),
        None => "Betti table inconclusive".into(),
    };
    let two = match &r.two_term {
        Some(t) => format!("two-term decomposition with s = {}", t.s),
        None => "no two-term decomposition".into(),
    };
    format!("{shape}, {two}")
}

fn status_name(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Confirmed => "confirmed",
        ClaimStatus::Refuted => "refuted",
        ClaimStatus::Inconclusive => "inconclusive",
    }
}

fn cross_options(opts: &Options) -> CrossOptions {
    CrossOptions {
        characteristic: opts.characteristic,
        max_power: opts.max_power,
    }
}

fn cross_single(b: &mut Builder, x: &Matroid, ord: &ElementOrder, opts: &Options) -> Result<(), CliError> {
    let r = cross_validate(x, ord, cross_options(opts))?;
    b.verdict("summary", cross_summary(&r), "cross_validate");
    for c in &r.claims {
        let tag = if c.empirical { " (empirical)" } else { "" };
        b.verdict(&format!("{}{tag}", c.statement), status_name(c.status), "cross_validate");
        if c.status == ClaimStatus::Inconclusive {
            b.inconclusive.push(format!("claim not decided within bounds: {}", c.statement));
        }
    }
    if let Some(t) = &r.betti {
        b.set("betti_grid", t.render());
    }
    b.set("cross_validation", &r);
    Ok(())
}

fn cross_batch(b: &mut Builder, opts: &Options) -> Result<(), CliError> {
    let seed = opts
        .seed
        .ok_or_else(|| usage("cross-validate needs an input document or --seed for the corpus"))?;
    let corpus = matroid_corpus(seed);
    let co = cross_options(opts);
    let reports: Vec<(String, bcres_core::Result<CrossReport>)> = corpus
        .par_iter()
        .map(|m| {
            let ord = ElementOrder::natural(m.value.n());
            (m.name.clone(), cross_validate(&m.value, &ord, co))
        })
        .collect();

    let mut instances = Vec::with_capacity(reports.len());
    let mut tally: Vec<(String, bool, [usize; 3])> = Vec::new();
    let mut asserted_refutations = 0usize;
    for (name, res) in &reports {
        let r = match res {
            Ok(r) => r,
            Err(e) if e.is_bound() => {
                b.inconclusive.push(format!("bound: {name}: {e}"));
                continue;
            }
            Err(e) => return Err(CliError::Core(e.clone())),
        };
        let mut claims = Map::new();
        for (k, c) in r.claims.iter().enumerate() {
            if tally.len() <= k {
                tally.push((c.statement.clone(), c.empirical, [0; 3]));
            }
            let slot = match c.status {
                ClaimStatus::Confirmed => 0,
                ClaimStatus::Refuted => 1,
                ClaimStatus::Inconclusive => 2,
            };
            tally[k].2[slot] += 1;
            if c.status == ClaimStatus::Inconclusive {
                b.inconclusive.push(format!("{name}: {}", c.statement));
            }
            claims.insert(c.statement.clone(), json!(status_name(c.status)));
        }
        asserted_refutations += r.refuted().count();
        instances.push(json!({
            "name": name,
            "ideal": r.ideal,
            "summary": cross_summary(r),
            "claims": claims,
        }));
    }
    let matrix: Vec<Value> = tally
        .iter()
        .map(|(statement, empirical, [c, f, i])| {
            json!({
                "claim": statement,
                "empirical": empirical,
                "confirmed": c,
                "refuted": f,
                "inconclusive": i,
            })
        })
        .collect();
    b.verdict("instances", instances.len(), "corpus::matroid_corpus");
    b.verdict("asserted claims refuted", asserted_refutations, "cross_validate");
    b.set("seed", seed);
    b.set("consistency_matrix", matrix);
    b.set("instances", instances);
    Ok(())
}

fn arrangement(b: &mut Builder, a: &Arrangement) -> Result<(), CliError> {
    let x = a.matroid()?;
    let rows: Vec<Vec<String>> = a.rows().iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect();
    b.set("labels", a.labels());
    b.set("rows", rows);
    b.set("dimension", a.dimension());
    b.set("rank", x.full_rank());
    b.set("circuits", x.circuit_labels());
    b.set("cone_size", a.cone().n());
    b.verdict("essential", a.is_essential(), "Arrangement::is_essential");
    let factors = a.detect_product()?;
    b.verdict("product factors", factors.len(), "Arrangement::detect_product");
    b.set("factors", &factors);
    b.set("generators", a.os_ot_generators()?);
    if a.is_essential() {
        let k = koszul_report(a)?;
        b.verdict("koszul", serde_json::to_value(k.verdict).expect("enum").as_str().unwrap_or_default(), "koszul_report");
        b.set("koszul", &k);
    } else {
        b.set("koszul", Value::Null);
    }
    Ok(())
}

fn graph(b: &mut Builder, g: &Graph, ord: &ElementOrder, opts: &Options) -> Result<(), CliError> {
    b.set("vertices", g.vertices());
    b.set(
        "edges",
        g.edges()
            .iter()
            .zip(g.edge_labels())
            .map(|(&(u, v), l)| json!({"label": l, "ends": [&g.vertices()[u], &g.vertices()[v]]}))
            .collect::<Vec<_>>(),
    );
    b.set("components", g.n_components());
    b.verdict("simple", g.is_simple(), "Graph::is_simple");
    gnr_section(b, g, ord, opts.expected_cycles)
}

fn gnr_section(b: &mut Builder, g: &Graph, ord: &ElementOrder, expected: Option<usize>) -> Result<(), CliError> {
    let Some(r) = b.soft("cycle enumeration", gnr_report(g, ord, expected))? else {
        return Ok(());
    };
    b.verdict("edge-disjoint cycles", r.edge_disjoint, "gnr_report");
    b.verdict("complete intersection", r.complete_intersection, "gnr_report");
    b.verdict("cohen-macaulay", r.cohen_macaulay, "gnr_report");
    b.set("gnr", &r);
    Ok(())
}

fn gnr(b: &mut Builder, opts: &Options) -> Result<(), CliError> {
    let sizes = opts
        .cycles
        .as_ref()
        .ok_or_else(|| usage("gnr needs --cycles, e.g. --cycles 3,3"))?;
    let g = build_gnr(sizes, opts.bridge)?;
    let x = g.cycle_matroid()?;
    let ord = element_order(&x, opts.order.as_deref())?;
    b.set("cycle_sizes", sizes);
    b.set("bridge", opts.bridge);
    b.set("vertices", g.vertices().len());
    b.set("edges", g.n_edges());
    gnr_section(b, &g, &ord, opts.expected_cycles.or(Some(sizes.len())))
}
