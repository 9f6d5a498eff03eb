use crate::{Cli, Command, CountWhat, GroupAction, Labelled, TbpawMethod};
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;
use topsnut::graph::{classify_tree, leaf_identity_check};
use topsnut::graph::io::{parse_graph, write_graph};
use topsnut::graph::spanning::{
    random_spanning_tree, spanning_tree_degree_preserve, spanning_tree_max_leaf, spanning_tree_predefined,
    SpanningTree,
};
use topsnut::groups::{group_add, tree_group_coloring, EveryZeroGraphicGroup};
use topsnut::labelling::{
    caterpillar_set_ordered_graceful, graceful_to_odd_graceful, image_labelling, odd_image_labelling,
    six_c_from_set_ordered_graceful, verify,
};
use topsnut::matrix::{matrix_count, partition_count_a, raw_pair_count, tbpaw_count, FactoredCount};
use topsnut::netcrypt::{pipeline_encrypt, JoinPolicy, TreeAlgo};
use topsnut::tbpaw::{
    cycle_formula_count, euler_hamilton_method, lobster_neighbor_method, noise_decode, noise_encode, path_method,
    Noise,
};
use topsnut::{Graph, Kind, Labelling, Lcg, NeighborPolicy, Route, Scheme, TbPaw, TopsnutMatrix};

/// What a command produced: the artifact (a string or file body) and the
/// key=value lines describing it.
#[derive(Default)]
struct Output {
    artifact: String,
    kv: Vec<(String, String)>,
    failed: bool,
}

impl Output {
    fn artifact(s: impl Into<String>) -> Self {
        Output { artifact: s.into(), ..Default::default() }
    }

    fn kv(mut self, k: &str, v: impl Display) -> Self {
        self.kv.push((k.to_string(), v.to_string()));
        self
    }

    fn fail_if(mut self, bad: bool) -> Self {
        self.failed |= bad;
        self
    }
}

/// Bad input of any kind. Exits 2.
struct Usage(String);

impl<E: std::error::Error> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Res = Result<Output, Usage>;

pub fn run(cli: Cli) -> ExitCode {
    let seed = cli.seed;
    match dispatch(cli.command, seed) {
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(out) => {
            let mut text = out.artifact.clone();
            if !text.is_empty() && !text.ends_with('\n') {
                text.push('\n');
            }
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
                text = format!("out={}\n", path.display());
            }
            for (k, v) in &out.kv {
                text.push_str(&format!("{k}={v}\n"));
            }
            // a closed pipe downstream is not our failure
            let _ = io::stdout().lock().write_all(text.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Usage> {
    Ok(parse_graph(&read(path)?)?)
}

fn load_labelled(input: &Labelled) -> Result<(Graph, Labelling), Usage> {
    let g = load_graph(&input.graph)?;
    let l = Labelling::parse(&read(&input.labels)?, &g)?;
    Ok((g, l))
}

/// A plain id, or `u<k>` counted from one.
fn vertex(s: &str) -> Result<usize, Usage> {
    let bad = || Usage(format!("bad vertex {s:?}"));
    match s.strip_prefix('u') {
        Some(k) => k.parse::<usize>().ok().and_then(|k| k.checked_sub(1)).ok_or_else(bad),
        None => s.parse().map_err(|_| bad()),
    }
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, Usage>
where
    T::Err: Display,
{
    s.parse().map_err(|e: T::Err| Usage(e.to_string()))
}

fn tbpaw_out(d: &TbPaw) -> Output {
    let mut text = String::new();
    if !d.provenance.is_empty() {
        text.push_str(&format!("# {}\n", d.provenance));
    }
    text.push_str(&d.rendered());
    Output::artifact(text).kv("length", d.rendered().len()).kv("tokens", d.tokens.len())
}

fn joined<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn dispatch(cmd: Command, seed: u64) -> Res {
    match cmd {
        Command::Label { graph, scheme } => label(&load_graph(&graph)?, &scheme),
        Command::Verify { input, scheme } => {
            let (g, l) = load_labelled(&input)?;
            let scheme = match scheme {
                Some(s) => Scheme::parse(&s)?,
                None => l.scheme.clone().ok_or_else(|| Usage("no scheme given or in the labelling file".into()))?,
            };
            let report = verify(&g, &l, &scheme)?;
            let mut out = Output::default().kv("scheme", &scheme).kv("pass", report.pass);
            for (k, v) in &report.values {
                out = out.kv(k, v);
            }
            if let (Some(k2), None) = (report.value("k_double_prime"), report.value("k2")) {
                out = out.kv("k2", k2);
            }
            for (c, w) in &report.violated {
                out = out.kv("violated", format!("{c}:{w}"));
            }
            Ok(out.fail_if(!report.pass))
        }
        Command::Matrix { graph, labels, matrix, route } => {
            let m = match (graph, labels, matrix) {
                (Some(graph), Some(labels), None) => {
                    let (g, l) = load_labelled(&Labelled { graph, labels })?;
                    TopsnutMatrix::of(&g, &l)?
                }
                (None, None, Some(path)) => TopsnutMatrix::parse(&read(&path)?)?,
                _ => return Err(Usage("give --graph with --labels, or --matrix".into())),
            };
            match route {
                Some(r) => Ok(tbpaw_out(&m.extract(&Route::parse(&r)?)?).kv("route", r)),
                None => Ok(Output::artifact(m.write()).kv("q", m.q())),
            }
        }
        Command::Tbpaw { method } => tbpaw(method),
        Command::Group { action } => group(action, seed),
        Command::Encrypt { graph, base, labels, n, tree, route, policy, dump } => {
            let snapshot = load_graph(&graph)?;
            let (h, f) = load_labelled(&Labelled { graph: base, labels })?;
            let grp = EveryZeroGraphicGroup::new(h, f, n)?;
            let algo: TreeAlgo = parse(&tree)?;
            let policy: JoinPolicy = parse(&policy)?;
            let run = pipeline_encrypt(&snapshot, &grp, algo, &Route::parse(&route)?, seed)?;
            let run = if policy == run.network.policy {
                run
            } else {
                let net = topsnut::netcrypt::encrypt_network(&run.tree, &grp, &run.network.assignment, policy)?;
                let (tbpaw, account) = net.emit_tbpaw(&bfs_traversal(&run.tree, run.start), &Route::parse(&route)?)?;
                topsnut::netcrypt::PipelineRun { network: net, tbpaw, account, ..run }
            };
            if let Some(path) = dump {
                fs::write(&path, run.network.dump()).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            }
            let checked = run.network.check();
            let mut out = Output::artifact(run.tbpaw.rendered())
                .kv("blocks", run.network.blocks.len())
                .kv("joins", run.network.joins.len())
                .kv("zero", run.network.assignment.zero)
                .kv("start", run.start)
                .kv("bytes", run.account.total)
                .kv("check", checked.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()));
            out = out.fail_if(checked.is_err());
            Ok(out)
        }
        Command::Spantree { graph, algo, require, threshold } => {
            let g = load_graph(&graph)?;
            let summary = |t: SpanningTree| {
                let leaves = t.tree.leaves().len();
                Output::artifact(write_graph(&t.tree))
                    .kv("vertices", t.tree.n())
                    .kv("edges", t.tree.q())
                    .kv("leaves", leaves)
                    .kv("dominating", joined(&t.dominating))
            };
            match algo.as_str() {
                "max-leaf" => Ok(summary(spanning_tree_max_leaf(&g)?)),
                "degree" => Ok(summary(spanning_tree_degree_preserve(&g, threshold)?)),
                "random" => Ok(summary(random_spanning_tree(&g, &mut Lcg::new(seed)))),
                "predefined" => {
                    let req = require.iter().map(|s| vertex(s)).collect::<Result<Vec<_>, _>>()?;
                    let set = spanning_tree_predefined(&g, &req)?;
                    Ok(Output::default().kv("dominating", joined(&set)).kv("size", set.len()))
                }
                other => Err(Usage(format!("unknown spanning tree algorithm {other}"))),
            }
        }
        Command::Count { what } => count(what),
        Command::Noise { tokens, table, letters, decode } => {
            let noise = match &table {
                Some(t) => Noise::parse_table(t)?,
                None => Noise::InsertLetters { seed, count: letters },
            };
            match decode {
                Some(s) => Ok(Output::artifact(noise_decode(&s, &noise)?.rendered())),
                None => {
                    let d = TbPaw::from_numbers(&tokens, "");
                    let enc = noise_encode(&d, &noise)?;
                    Ok(Output::artifact(enc.clone()).kv("plain", d.rendered()).kv("length", enc.len()))
                }
            }
        }
        Command::Classify { graph } => {
            let g = load_graph(&graph)?;
            let c = classify_tree(&g);
            let mut out = Output::default()
                .kv("kind", format!("{:?}", c.kind).to_lowercase())
                .kv("caterpillar", c.is_caterpillar)
                .kv("lobster", c.is_lobster)
                .kv("spider", c.is_spider)
                .kv("leaves", g.leaves().len());
            if g.is_tree() {
                let ok = leaf_identity_check(&g)?;
                out = out.kv("leaf_identity", ok).fail_if(!ok);
            }
            Ok(out)
        }
    }
}

fn bfs_traversal(t: &Graph, start: usize) -> topsnut::netcrypt::Traversal {
    let edges = t.bfs_order(start).into_iter().filter_map(|(p, c)| t.find_edge(p, c)).collect();
    topsnut::netcrypt::Traversal::EdgeBlocks(edges)
}

fn label(t: &Graph, scheme: &str) -> Res {
    let graceful = caterpillar_set_ordered_graceful(t)?;
    let (l, k) = match scheme {
        "set-ordered-graceful" | "graceful" => (graceful, None),
        "set-ordered-odd-graceful" | "odd-graceful" => (graceful_to_odd_graceful(t, &graceful)?, None),
        "6c" => (six_c_from_set_ordered_graceful(t, &graceful)?, None),
        "image" => {
            let (l, k) = image_labelling(t, &graceful)?;
            (l, Some(k))
        }
        "odd-image" => {
            let (l, k) = odd_image_labelling(t, &graceful_to_odd_graceful(t, &graceful)?)?;
            (l, Some(k))
        }
        other => return Err(Usage(format!("no constructor for scheme {other}"))),
    };
    let mut out = Output::artifact(l.write(t));
    if let Some(s) = &l.scheme {
        let r = verify(t, &l, s)?;
        out = out.kv("scheme", s).kv("pass", r.pass).fail_if(!r.pass);
    }
    if let Some(k) = k {
        out = out.kv("image_sum", k);
    }
    Ok(out)
}

fn tbpaw(method: TbpawMethod) -> Res {
    let d = match method {
        TbpawMethod::Path { input, path, kind } => {
            let (g, l) = load_labelled(&input)?;
            let walk = path.iter().map(|s| vertex(s)).collect::<Result<Vec<_>, _>>()?;
            path_method(&g, &l, &walk, parse::<Kind>(&kind)?)?
        }
        TbpawMethod::Lobster { input, policy, kind } => {
            let (g, l) = load_labelled(&input)?;
            lobster_neighbor_method(&g, &l, &parse::<NeighborPolicy>(&policy)?, parse::<Kind>(&kind)?)?
        }
        TbpawMethod::Euler { input } => {
            let (g, l) = load_labelled(&input)?;
            euler_hamilton_method(&g, &l, None)?
        }
        TbpawMethod::Matrix { input, route } => {
            let (g, l) = load_labelled(&input)?;
            TopsnutMatrix::of(&g, &l)?.extract(&Route::parse(&route)?)?
        }
    };
    Ok(tbpaw_out(&d))
}

fn group(action: GroupAction, seed: u64) -> Res {
    match action {
        GroupAction::Add { n, zero, i, j } => Ok(Output::artifact(group_add(n, i, j, zero)?.to_string())),
        GroupAction::Elements { input, n } => {
            let (h, f) = load_labelled(&input)?;
            let grp = EveryZeroGraphicGroup::new(h, f, n)?;
            let mut text = String::new();
            for i in 1..=n {
                text.push_str(&format!("H{i} {}\n", joined(&grp.vertex_labels(i)?)));
            }
            Ok(Output::artifact(text).kv("order", n).kv("axioms", "ok"))
        }
        GroupAction::Colour { graph, n, zero, sequence, start } => {
            let t = load_graph(&graph)?;
            let sequence = if sequence.is_empty() {
                let mut rng = Lcg::new(seed);
                (0..t.q()).map(|_| rng.range(1, n)).collect()
            } else {
                sequence
            };
            let gl = tree_group_coloring(&t, n, &sequence, zero, start)?;
            let l = Labelling::total(
                &t,
                &gl.vertex.iter().map(|&x| x as i64).collect::<Vec<_>>(),
                &gl.edge.iter().map(|&x| x as i64).collect::<Vec<_>>(),
            );
            let checked = gl.check(&t).and_then(|_| gl.check_sequence(&t, &sequence));
            Ok(Output::artifact(l.write(&t))
                .kv("order", n)
                .kv("zero", zero)
                .kv("sequence", joined(&sequence))
                .kv("labelling", gl.is_labelling())
                .kv("check", checked.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()))
                .fail_if(checked.is_err()))
        }
    }
}

fn count(what: CountWhat) -> Res {
    Ok(match what {
        CountWhat::Tbpaws { q } => Output::artifact(tbpaw_count(q).to_string()).kv("q", q),
        CountWhat::Matrices { q } => Output::artifact(matrix_count(q).to_string()).kv("q", q),
        CountWhat::RawPairs { q, expand } => {
            let f = FactoredCount::raw_pairs(q);
            let out = Output::artifact(f.to_string()).kv("q", q);
            match (expand, q <= 200) {
                (true, true) => out.kv("value", raw_pair_count(q)),
                (true, false) => return Err(Usage(format!("refusing to expand q={q}"))),
                (false, _) => out,
            }
        }
        CountWhat::Partitions { m, k } => Output::artifact(partition_count_a(m, k)?.to_string()),
        CountWhat::Cycle { blocks } => Output::artifact(cycle_formula_count(&blocks)?.to_string()),
    })
}
