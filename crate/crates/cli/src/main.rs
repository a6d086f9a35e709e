//! `graphcert`: batch front end. Exit codes: 0 computed (including negative
//! verdicts), 1 usage or input error, 2 a search cap was exceeded.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use graphcert::coloring::{self, ColorAssignment, EdgeScheme, GreedyOrder, TotalScheme};
use graphcert::connectivity::{self, PathMode};
use graphcert::degseq::{self, SeqClass};
use graphcert::families::{self, FamilySpec};
use graphcert::graphcore::{self, AnyGraph, Bipartition, Graph};
use graphcert::matching::{self, FactorKind};
use graphcert::planar::{self, GenusFamily, RotationSystem};
use graphcert::transform::{self, Edit, ProductKind};
use graphcert::{io, morphism, traversal, trees, Error};
use report::Report;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "graphcert", version, about = "Graph computations with checkable witnesses")]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest order for isomorphism, homomorphism and automorphism search.
    #[arg(long, global = true, default_value_t = morphism::DEFAULT_CAP)]
    cap_search: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

/// GRAPH arguments name an edge-list file, `-` for stdin, or `fam:NAME[:P,..]`.
#[derive(Subcommand)]
enum Cmd {
    /// Emit a named family as an edge list.
    Gen { family: String },
    /// Degrees, distances, components and bipartiteness.
    Info { graph: String },
    /// Apply an operation and emit the result.
    Transform {
        graph: String,
        #[arg(long, value_enum)]
        op: Op,
        /// Vertex or `u,v` edge operand.
        #[arg(long)]
        at: Option<String>,
        /// Second graph for join, union and product.
        #[arg(long)]
        with: Option<String>,
        #[arg(long, default_value = "cartesian")]
        product: String,
    },
    /// Isomorphism (or homomorphism with --hom) between two graphs.
    Iso {
        g: String,
        h: String,
        #[arg(long)]
        hom: bool,
    },
    /// Automorphism group and orbits.
    Aut { graph: String },
    /// Realize a degree sequence in a class.
    Degseq {
        #[arg(long, default_value = "simple")]
        class: String,
        /// Comma-separated degrees.
        seq: String,
    },
    /// Tree characterizations, spanning trees and Prüfer codes.
    Trees {
        graph: Option<String>,
        /// Decode a comma-separated Prüfer code instead.
        #[arg(long = "prufer-decode", alias = "decode")]
        decode: Option<String>,
        /// Print only the spanning tree count.
        #[arg(long)]
        count: bool,
        /// Print only the Prüfer code of the input tree.
        #[arg(long = "prufer-encode")]
        encode: bool,
    },
    /// Cut vertices, bridges, κ, λ, ears and Menger paths.
    Connect {
        graph: String,
        /// Endpoints `u,v` for disjoint paths.
        #[arg(long)]
        menger: Option<String>,
        #[arg(long, default_value = "vertex")]
        mode: String,
    },
    /// Euler and Hamilton questions, toughness, closure, brute-force TSP.
    Walk {
        graph: Option<String>,
        #[arg(long)]
        euler: bool,
        #[arg(long)]
        hamilton: bool,
        #[arg(long)]
        toughness: bool,
        #[arg(long)]
        closure: bool,
        /// Weight matrix file: optionally n, then one row of integers per line.
        #[arg(long)]
        tsp: Option<String>,
    },
    /// Matchings, min-max numbers, factors and arboricity.
    Match {
        graph: Option<String>,
        /// Poset file: ground-set size, then one `x y` pair (x ≤ y) per line.
        #[arg(long)]
        poset: Option<String>,
        /// Dense 0/1 matrix file for the König–Egerváry pair.
        #[arg(long)]
        matrix: Option<String>,
        /// one_regular_bipartite, two_even_regular or one_complete.
        #[arg(long)]
        factor: Option<String>,
        /// Comma-separated f for an f-factor.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        arboricity: bool,
    },
    /// Vertex, edge or total coloring.
    Color {
        graph: String,
        #[arg(long, value_enum, default_value = "vertex")]
        mode: ColorMode,
        /// vertex: exact, greedy, welsh_powell, smallest_last, five.
        /// edge: vizing, konig, rotation, exact.
        /// total: exact, bipartite_plus2, complete, complete_bipartite.
        #[arg(long)]
        alg: Option<String>,
        /// Print DOT instead of the report.
        #[arg(long)]
        dot: bool,
    },
    /// Planarity, outerplanarity, rotation systems, genus and crossings.
    Planar {
        graph: Option<String>,
        #[arg(long)]
        outer: bool,
        /// Rotation sidecar: one line of neighbours per vertex.
        #[arg(long)]
        rotation: Option<String>,
        /// complete:N, complete_bipartite:M,N or hypercube:N.
        #[arg(long)]
        genus: Option<String>,
        /// `m,n` for the K_{m,n} drawing.
        #[arg(long)]
        zarankiewicz: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Complement,
    Line,
    Total,
    Mycielski,
    DeleteVertex,
    AddVertex,
    DeleteEdge,
    AddEdge,
    Subdivide,
    Contract,
    Join,
    Union,
    Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMode {
    Vertex,
    Edge,
    Total,
}

enum Fail {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn read(path: &str) -> Res<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| usage(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

fn load_any(arg: &str) -> Res<AnyGraph> {
    if let Some(spec) = arg.strip_prefix("fam:") {
        let spec: FamilySpec = spec.parse()?;
        return Ok(AnyGraph::Simple(families::generate(&spec)?));
    }
    Ok(io::parse_edge_list(&read(arg)?)?)
}

fn load(arg: &str) -> Res<Graph> {
    match load_any(arg)? {
        AnyGraph::Simple(g) => Ok(g),
        AnyGraph::Multi(g) => Ok(g.to_simple()?),
    }
}

fn list(s: &str) -> Res<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad integer {t:?}"))))
        .collect()
}

fn pair(s: &str) -> Res<(usize, usize)> {
    match list(s)?[..] {
        [u, v] => Ok((u, v)),
        _ => Err(usage(format!("expected u,v, got {s:?}"))),
    }
}

/// Records a cap hit and yields None; other errors propagate.
fn capped<T>(r: &mut Report, res: graphcert::Result<T>) -> Res<Option<T>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => {
            r.caps_hit.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(Fail::Lib(e)),
    }
}

/// Report plus optional raw text printed instead of the human summary.
struct Outcome {
    report: Report,
    raw: Option<String>,
}

fn run(cli: &Cli) -> Res<Outcome> {
    let cap = cli.cap_search;
    let mut raw = None;
    let report = match &cli.cmd {
        Cmd::Gen { family } => {
            let spec: FamilySpec = family.parse()?;
            let g = families::generate(&spec)?;
            let mut r = Report::new("gen");
            r.digest_of(family);
            r.put("n", g.n());
            r.put("m", g.m());
            r.witness("edges", g.edges());
            raw = Some(io::emit_simple(&g));
            r
        }
        Cmd::Info { graph } => {
            let any = load_any(graph)?;
            let mut r = Report::new("info");
            r.digest_of(&io::emit_edge_list(&any));
            r.put("n", any.n());
            r.put("m", any.edges().len());
            r.put("mode", any.mode().as_str());
            r.put("degrees", any.degree_profile());
            if let AnyGraph::Simple(g) = &any {
                let m = graphcore::metrics(g);
                r.put("radius", m.radius);
                r.put("diameter", m.diameter);
                r.put("center", &m.center);
                r.put("components", m.component_count);
                r.put("cyclomatic", m.cyclomatic);
                match graphcore::bipartition(g) {
                    Bipartition::Parts { v1, v2 } => {
                        r.put("bipartite", true);
                        r.witness("parts", [v1, v2]);
                    }
                    Bipartition::OddCycle(c) => {
                        r.put("bipartite", false);
                        r.witness("odd_cycle", c);
                    }
                }
            }
            r
        }
        Cmd::Transform { graph, op, at, with, product } => {
            let g = load(graph)?;
            let other = || with.as_deref().ok_or_else(|| usage("--with is required")).and_then(load);
            let vertex = || at.as_deref().ok_or_else(|| usage("--at is required")).and_then(|s| {
                s.trim().parse::<usize>().map_err(|_| usage(format!("bad vertex {s:?}")))
            });
            let edge = || at.as_deref().ok_or_else(|| usage("--at u,v is required")).and_then(pair);
            let out = match op {
                Op::Complement => transform::complement(&g),
                Op::Line => transform::line_graph(&g),
                Op::Total => transform::total_graph(&g),
                Op::Mycielski => transform::mycielski(&g),
                Op::DeleteVertex => transform::edit(&g, Edit::DeleteVertex(vertex()?))?,
                Op::AddVertex => transform::edit(&g, Edit::AddVertex)?,
                Op::DeleteEdge => {
                    let (u, v) = edge()?;
                    transform::edit(&g, Edit::DeleteEdge(u, v))?
                }
                Op::AddEdge => {
                    let (u, v) = edge()?;
                    transform::edit(&g, Edit::AddEdge(u, v))?
                }
                Op::Subdivide => {
                    let (u, v) = edge()?;
                    transform::edit(&g, Edit::Subdivide(u, v))?
                }
                Op::Contract => {
                    let (u, v) = edge()?;
                    transform::contract_edge(&g, u, v)?
                }
                Op::Join => transform::join(&g, &other()?),
                Op::Union => transform::union(&g, &other()?),
                Op::Product => {
                    let kind: ProductKind = product.parse()?;
                    transform::product(&g, &other()?, kind)
                }
            };
            let mut r = Report::new("transform");
            r.digest_of(&io::emit_simple(&g));
            r.put("n", out.n());
            r.put("m", out.m());
            r.witness("edges", out.edges());
            raw = Some(io::emit_simple(&out));
            r
        }
        Cmd::Iso { g, h, hom } => {
            let (g, h) = (load(g)?, load(h)?);
            let mut r = Report::new(if *hom { "hom" } else { "iso" });
            r.digest_of(&(io::emit_simple(&g) + &io::emit_simple(&h)));
            let found = if *hom {
                capped(&mut r, morphism::homomorphism(&g, &h, cap))?
            } else {
                capped(&mut r, morphism::isomorphic(&g, &h, cap))?
            };
            if let Some(found) = found {
                let key = if *hom { "homomorphic" } else { "isomorphic" };
                r.put(key, found.is_some());
                if let Some(map) = found {
                    let ok = if *hom {
                        morphism::is_homomorphism(&g, &h, &map.map)
                    } else {
                        morphism::is_isomorphism(&g, &h, &map.map)
                    };
                    r.put("verified", ok);
                    r.witness("map", map.map);
                } else {
                    r.put("violated_condition", "exhaustive search found no map");
                }
            }
            r
        }
        Cmd::Aut { graph } => {
            let g = load(graph)?;
            let mut r = Report::new("aut");
            r.digest_of(&io::emit_simple(&g));
            if let Some(auts) = capped(&mut r, morphism::automorphisms(&g, cap))? {
                let perms: Vec<Vec<usize>> = auts.into_iter().map(|a| a.map).collect();
                r.put("order", perms.len());
                r.put("verified", morphism::is_group(&perms));
                if let Some(t) = capped(&mut r, morphism::transitivity(&g, cap))? {
                    r.put("vertex_transitive", t.vertex_transitive);
                    r.put("edge_transitive", t.edge_transitive);
                    r.put("asymmetric", t.asymmetric);
                    r.put("vertex_orbits", t.vertex_orbits);
                    r.put("edge_orbits", t.edge_orbits);
                }
                r.witness("automorphisms", perms);
            }
            r
        }
        Cmd::Degseq { class, seq } => {
            let class: SeqClass = class.parse()?;
            let d = list(seq)?;
            let mut r = Report::new("degseq");
            r.digest_of(&format!("{class:?} {seq}"));
            if let Some(v) = capped(&mut r, degseq::realize(&d, class))? {
                r.put("class", v.class);
                r.put("verdict", if v.realizable { "realizable" } else { "not realizable" });
                if class == SeqClass::Simple {
                    r.put("graphical", v.realizable);
                    let eg = degseq::erdos_gallai(&d);
                    let hh = degseq::havel_hakimi(&d);
                    r.put("erdos_gallai", &eg);
                    r.put("havel_hakimi_steps", hh);
                }
                if let Some(why) = &v.violated_condition {
                    r.put("violated_condition", why);
                }
                r.put("fallback_used", v.fallback_used);
                if let Some(w) = &v.witness {
                    r.put("verified", degseq::degrees_of(d.len(), w) == d);
                    r.witness("edges", w);
                }
                if let Some(pm) = &v.perfect_matching {
                    r.witness("perfect_matching", pm);
                }
            }
            r
        }
        Cmd::Trees { graph, decode, count, encode } => {
            let mut r = Report::new("trees");
            if let Some(code) = decode {
                let code = list(code)?;
                let t = trees::prufer_decode(&code, code.len() + 2)?;
                r.digest_of(&format!("prufer {code:?}"));
                r.put("n", t.n());
                r.put("reencodes", trees::prufer_encode(&t)? == code);
                r.witness("edges", t.edges());
                raw = Some(io::emit_simple(&t));
            } else {
                let g = load(graph.as_deref().ok_or_else(|| usage("a graph or --decode is required"))?)?;
                r.digest_of(&io::emit_simple(&g));
                let tau = trees::spanning_tree_count(&g).to_string();
                r.put("spanning_trees", &tau);
                if *count {
                    raw = Some(format!("{tau}\n"));
                }
                if let Some(check) = capped(&mut r, trees::tree_check(&g))? {
                    r.put("characterizations_agree", check.all_equal());
                    r.put("checks", &check);
                }
                let is_tree = g.n() > 0 && g.is_connected() && g.m() + 1 == g.n();
                r.put("tree", is_tree);
                if is_tree {
                    r.put("center", trees::tree_center(&g)?);
                    if g.n() >= 2 {
                        let code = trees::prufer_encode(&g)?;
                        if *encode {
                            let text: Vec<String> = code.iter().map(|x| x.to_string()).collect();
                            raw = Some(text.join(",") + "\n");
                        }
                        r.witness("prufer", code);
                    }
                } else if *encode {
                    return Err(usage("--prufer-encode needs a tree"));
                } else if let Ok(t) = trees::spanning_tree(&g) {
                    r.witness("spanning_tree", t.edges());
                }
            }
            r
        }
        Cmd::Connect { graph, menger, mode } => {
            let g = load(graph)?;
            let mut r = Report::new("connect");
            r.digest_of(&io::emit_simple(&g));
            let cuts = connectivity::cut_structure(&g);
            r.put("cut_vertices", &cuts.cut_vertices);
            r.put("bridges", &cuts.bridges);
            if let Some(c) = capped(&mut r, connectivity::connectivity_numbers(&g))? {
                r.put("kappa", c.kappa);
                r.put("lambda", c.lambda);
                r.put("delta", c.delta);
                r.put("whitney_holds", c.consistent());
                r.witness("vertex_cut", &c.vertex_cut);
                r.witness("edge_cut", &c.edge_cut);
            }
            match connectivity::ear_decomposition(&g, false) {
                connectivity::EarOutcome::Decomposition(d) => {
                    r.put("ear_decomposition", "open ears");
                    r.put("verified", d.verify(&g, false));
                    r.witness("ears", d);
                }
                other => r.put("ear_decomposition", other),
            }
            if let Some(ends) = menger {
                let (u, v) = pair(ends)?;
                let mode = match mode.as_str() {
                    "vertex" => PathMode::Vertex,
                    "edge" => PathMode::Edge,
                    m => return Err(usage(format!("unknown mode {m:?}; use vertex or edge"))),
                };
                let res = connectivity::menger(&g, u, v, mode)?;
                r.put("disjoint_paths", res.system.paths.len());
                r.put("cut_size", res.cut_size());
                r.put("paths_verified", res.system.verify(&g));
                r.put("cut_separates", res.cut_separates(&g));
                r.witness("menger", res);
            }
            r
        }
        Cmd::Walk { graph, euler, hamilton, toughness, closure, tsp } => {
            let mut r = Report::new("walk");
            let mut input = String::new();
            if let Some(path) = tsp {
                let mut w = io::parse_matrix(&read(path)?)?;
                // a leading line holding only n is optional
                if w.len() > 1 && w[0].len() == 1 && w[0][0] == w.len() as i64 - 1 {
                    w.remove(0);
                }
                input += &format!("{w:?}");
                if let Some(t) = capped(&mut r, traversal::tsp_bruteforce(&w))? {
                    r.put("tour_length", t.length);
                    r.witness("tour", t.tour);
                }
            }
            if let Some(graph) = graph {
                let g = load(graph)?;
                input += &io::emit_simple(&g);
                let none = !(*euler || *hamilton || *toughness || *closure);
                if *euler || none {
                    let e = traversal::euler(&g);
                    r.put("euler", e.kind);
                    r.put("odd_vertices", &e.odd_vertices);
                    if !e.sequence.is_empty() {
                        r.put("trail_length", e.edge_order.len());
                        r.put("fleury_admissible", traversal::fleury_admissible(&g, &e.sequence));
                        r.witness("trail", &e.sequence);
                    }
                }
                if *hamilton {
                    if let Some(h) = capped(&mut r, traversal::hamilton(&g))? {
                        r.put("hamiltonian", h.cycle.is_some());
                        r.put("traceable", h.path.is_some());
                        r.put("sufficient_conditions_consistent", h.flags_consistent());
                        r.put("conditions", &h);
                    }
                }
                if *toughness {
                    if let Some(t) = capped(&mut r, traversal::toughness(&g))? {
                        r.put("toughness", t);
                    }
                }
                if *closure {
                    let c = traversal::closure(&g);
                    r.put("closure_complete", c.is_complete());
                    r.witness("closure_edges", c.edges());
                }
            } else if tsp.is_none() {
                return Err(usage("a graph or --tsp is required"));
            }
            r.digest_of(&input);
            r
        }
        Cmd::Match { graph, poset, matrix, factor, f, arboricity } => {
            let mut r = Report::new("match");
            let mut input = String::new();
            if let Some(path) = poset {
                let rows = io::parse_matrix(&read(path)?)?;
                input += &format!("poset {rows:?}");
                let n = match rows.first().map(|r| &r[..]) {
                    Some(&[n]) if n >= 0 => n as usize,
                    _ => return Err(usage("poset file must start with the ground-set size")),
                };
                let pairs = rows[1..]
                    .iter()
                    .map(|p| match p[..] {
                        [x, y] if x >= 0 && y >= 0 => Ok((x as usize, y as usize)),
                        _ => Err(usage("poset relation lines must be `x y`")),
                    })
                    .collect::<Res<Vec<_>>>()?;
                let p = matching::Poset::from_pairs(n, &pairs)?;
                let d = matching::dilworth(&p)?;
                r.put("width", d.antichain.len());
                r.put("chain_count", d.chains.len());
                r.put("dilworth_method", d.method);
                r.put("verified", p.is_antichain(&d.antichain) && d.chains.iter().all(|c| p.is_chain(c)));
                r.witness("antichain", &d.antichain);
                r.witness("chains", &d.chains);
            }
            if let Some(path) = matrix {
                let rows = io::parse_matrix(&read(path)?)?;
                input += &format!("matrix {rows:?}");
                let a: Vec<Vec<u8>> = rows
                    .iter()
                    .map(|row| row.iter().map(|&x| u8::try_from(x).map_err(|_| usage("matrix entries must be 0 or 1"))).collect())
                    .collect::<Res<_>>()?;
                let mm = matching::matrix_minmax(&a)?;
                r.put("independent_ones", mm.ones.len());
                r.put("covering_lines", mm.lines.len());
                r.witness("ones", &mm.ones);
                r.witness("lines", &mm.lines);
            }
            let Some(graph) = graph else {
                if poset.is_none() && matrix.is_none() {
                    return Err(usage("a graph, --poset or --matrix is required"));
                }
                r.digest_of(&input);
                return Ok(Outcome { report: r, raw });
            };
            let g = load(graph)?;
            input += &io::emit_simple(&g);
            r.digest_of(&input);
            let m = matching::max_matching(&g);
            r.put("matching_size", m.size());
            r.put("perfect", m.is_perfect(g.n()));
            r.put("verified", matching::is_matching(&g, &m.edges));
            r.witness("matching", &m.edges);
            if let Some(o) = capped(&mut r, matching::optimization_numbers(&g))? {
                r.put("identities_hold", o.identities_hold(g.n()));
                r.put("numbers", o);
            }
            if let Some(t) = capped(&mut r, matching::matching_deficiency(&g))? {
                r.put("deficiency", t.deficiency);
                r.put("tutte_berge_holds", t.berge_max == t.deficiency);
                r.witness("tutte_berge_set", &t.set);
            }
            if let Some(kind) = factor {
                let kind: FactorKind = kind.parse()?;
                let fz = matching::factorize(&g, kind)?;
                r.put("factorization_verified", fz.verify(&g));
                r.witness("factors", fz);
            }
            if let Some(f) = f {
                let f = list(f)?;
                if let Some(found) = capped(&mut r, matching::f_factor(&g, &f))? {
                    r.put("f_factor", found.is_some());
                    if let Some(h) = found {
                        r.witness("f_factor_edges", h.edges());
                    }
                }
            }
            if *arboricity {
                if let Some(a) = capped(&mut r, matching::arboricity(&g))? {
                    r.put("arboricity", a.value);
                    r.witness("forests", a.forests);
                    r.witness("densest", a.densest);
                }
            }
            r
        }
        Cmd::Color { graph, mode, alg, dot } => {
            let g = load(graph)?;
            let mut r = Report::new("color");
            r.digest_of(&io::emit_simple(&g));
            r.put("max_degree", g.max_degree());
            let coloring: Option<ColorAssignment> = match mode {
                ColorMode::Vertex => {
                    r.put("welsh_powell_bound", coloring::welsh_powell_bound(&g));
                    r.put("degeneracy_bound", coloring::degeneracy(&g) + 1);
                    match alg.as_deref().unwrap_or("exact") {
                        "exact" => capped(&mut r, coloring::chromatic_number(&g))?.map(|c| {
                            r.put("chromatic_number", c.chi);
                            r.put("bounds_hold", c.bounds_hold(g.n()));
                            r.put("brooks_applies", c.brooks_applies);
                            c.coloring
                        }),
                        "five" => Some(coloring::five_color_planar(&g, true)?),
                        a => {
                            let order: GreedyOrder = if a == "greedy" { GreedyOrder::Given } else { a.parse()? };
                            Some(coloring::greedy_color(&g, order, None)?)
                        }
                    }
                }
                ColorMode::Edge => match alg.as_deref().unwrap_or("vizing") {
                    "exact" => capped(&mut r, coloring::chromatic_index(&g))?.map(|c| {
                        r.put("chromatic_index", c.chi_prime);
                        r.put("class", format!("class {}", c.class));
                        r.put("overfull", c.overfull);
                        c.coloring
                    }),
                    "vizing" => {
                        let (c, trace) = coloring::vizing(&g);
                        r.put("vizing_cases", trace);
                        Some(c)
                    }
                    a => {
                        let scheme: EdgeScheme = a.parse()?;
                        capped(&mut r, coloring::edge_color(&g, scheme))?
                    }
                },
                ColorMode::Total => {
                    let scheme: TotalScheme = alg.as_deref().unwrap_or("exact").parse()?;
                    capped(&mut r, coloring::total_color(&g, scheme))?
                }
            };
            if let Some(c) = &coloring {
                r.put("colors", c.k);
                r.put("proper", coloring::is_proper(&g, c));
                r.witness("coloring", &c.colors);
                if *dot {
                    raw = Some(io::emit_dot(&g, Some(c)));
                }
            }
            r
        }
        Cmd::Planar { graph, outer, rotation, genus, zarankiewicz } => {
            let mut r = Report::new("planar");
            let mut input = String::new();
            if let Some(spec) = genus {
                input += spec;
                let (name, args) = spec.split_once(':').ok_or_else(|| usage("genus needs family:params"))?;
                let ps = list(args)?;
                let fam = match (name, &ps[..]) {
                    ("complete", [n]) => GenusFamily::Complete(*n),
                    ("complete_bipartite", [a, b]) => GenusFamily::CompleteBipartite(*a, *b),
                    ("hypercube", [d]) => GenusFamily::Hypercube(*d),
                    _ => return Err(usage(format!("unknown genus family {spec:?}"))),
                };
                r.put("genus", planar::genus_formula(fam)?);
            }
            if let Some(mn) = zarankiewicz {
                input += mn;
                let (m, n) = pair(mn)?;
                let d = planar::zarankiewicz_drawing(m, n);
                r.put("crossings", d.crossings);
                r.put("zarankiewicz_number", planar::zarankiewicz_number(m, n));
                let mut text = String::new();
                for (x, y) in &d.coords {
                    text += &format!("{x} {y}\n");
                }
                text += &format!("crossings {}\n", d.crossings);
                raw = Some(text);
                r.witness("drawing", d);
            }
            if let Some(graph) = graph {
                let g = load(graph)?;
                input += &io::emit_simple(&g);
                let rep = if *outer { capped(&mut r, planar::outerplanarity(&g))? } else { capped(&mut r, planar::planarity(&g))? };
                if let Some(rep) = rep {
                    r.put("planar", rep.planar);
                    r.put("maximal_planar", rep.maximal_planar);
                    r.put("crossing_lower_bound", rep.crossing_lower_bound);
                    if let Some(p) = &rep.prefilter {
                        r.put("violated_condition", p);
                    }
                    if let Some(s) = &rep.subdivision {
                        r.put("subdivision_verified", s.verify(&g));
                        r.witness("subdivision", s);
                    }
                    if let Some(m) = &rep.minor {
                        r.put("minor_verified", m.verify(&g));
                        r.witness("minor", m);
                    }
                    if let Some(o) = rep.outerplanar {
                        r.put("outerplanar", o);
                    }
                    if let Some(w) = &rep.outer_witness {
                        r.witness("outer_minor", w);
                    }
                }
                if let Some(path) = rotation {
                    let rot = RotationSystem::parse(&read(path)?)?;
                    let e = planar::euler_check(&g, &rot)?;
                    r.put("faces", e.faces);
                    r.put("rotation_genus", e.genus);
                }
                if g.is_complete() && g.n() >= 5 {
                    r.put("guy_bound", planar::guy_bound(g.n()));
                }
            } else if genus.is_none() && zarankiewicz.is_none() {
                return Err(usage("a graph, --genus or --zarankiewicz is required"));
            }
            r.digest_of(&input);
            r
        }
    };
    Ok(Outcome { report, raw })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome { report, raw }) => {
            if cli.json {
                print!("{}", report.to_json());
            } else if let Some(text) = raw {
                print!("{text}");
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(if report.caps_hit.is_empty() { 0 } else { 2 })
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 2 } else { 1 })
        }
    }
}
