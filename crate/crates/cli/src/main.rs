//! `onerel`: command-line frontend for the normal forms, classifiers and
//! embedding verifiers in `onerel-core`.
//!
//! Exit status: 0 on success, 1 when a verification finds a collision or a
//! kernel element, 2 on usage or input errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use onerel_core::concrete::{HnnTrefoil, HnnTrefoilElement, NamedGroup, Trefoil, TrefoilElement};
use onerel_core::embeddings::{
    composite_bs_map, forest_embed, forest_map, named_path, paris, phi_p4_map, prop14_elements,
    star_embed, star_graph, verify_monoid_injective, verify_no_kernel, MonoidMap,
};
use onerel_core::gbs::{classify_cstar, p_nai_verdict, reduce_gbs, GbsGraph};
use onerel_core::regression;
use onerel_core::stallings::{find_free_power, StallingsGraph};
use onerel_core::{Alphabet, FreeWord, OneRelatorPresentation, RaagElement, SimpGraph, Trace};

#[derive(Parser)]
#[command(name = "onerel", version, about = "Normal forms, embeddings and C*-simplicity verdicts for small groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a word.
    Nf {
        #[command(subcommand)]
        kind: NfKind,
    },
    /// Decide whether two words are equal.
    Eq {
        #[command(subcommand)]
        kind: EqKind,
    },
    /// Graph queries.
    Graph {
        #[command(subcommand)]
        query: GraphQuery,
    },
    /// Subgroups of free groups via folded graphs.
    Stallings {
        #[command(subcommand)]
        query: StallingsQuery,
    },
    /// Evaluate a word in a concrete group (`bs:<n>`, `trefoil`, `hnn-trefoil`).
    Group {
        name: String,
        action: GroupAction,
        word: String,
    },
    /// Generalised Baumslag-Solitar graphs.
    Gbs {
        #[command(subcommand)]
        query: GbsQuery,
    },
    /// Classify a one-relator presentation such as "< a, t | t a t^-1 a^-2 >".
    Classify { presentation: String },
    /// Apply one of the explicit embeddings.
    Embed {
        #[command(subcommand)]
        map: EmbedMap,
    },
    /// Bounded verification runs.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Bounded searches.
    Explore {
        #[command(subcommand)]
        what: ExploreWhat,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Graph file: `vertices: a b c` then `edge: a b` lines.
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand)]
enum NfKind {
    Trace {
        #[command(flatten)]
        g: GraphArg,
        word: String,
    },
    Raag {
        #[command(flatten)]
        g: GraphArg,
        word: String,
    },
}

#[derive(Subcommand)]
enum EqKind {
    Trace {
        #[command(flatten)]
        g: GraphArg,
        u: String,
        v: String,
    },
    Raag {
        #[command(flatten)]
        g: GraphArg,
        u: String,
        v: String,
    },
    Group { name: String, u: String, v: String },
}

#[derive(Subcommand)]
enum GraphQuery {
    Forest {
        #[command(flatten)]
        g: GraphArg,
    },
    Diam {
        #[command(flatten)]
        g: GraphArg,
    },
    InducedPath {
        #[command(flatten)]
        g: GraphArg,
        n: usize,
    },
}

#[derive(Args)]
struct AlphabetArg {
    /// Space-separated generator names of the free group.
    #[arg(long, default_value = "a b")]
    alphabet: String,
}

#[derive(Subcommand)]
enum StallingsQuery {
    /// Rank of the subgroup generated by comma-separated words.
    Rank {
        #[command(flatten)]
        a: AlphabetArg,
        gens: String,
    },
    Member {
        #[command(flatten)]
        a: AlphabetArg,
        gens: String,
        word: String,
    },
    Intersect {
        #[command(flatten)]
        a: AlphabetArg,
        gens1: String,
        gens2: String,
    },
    Findpower {
        #[command(flatten)]
        a: AlphabetArg,
        elements: String,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupAction {
    Eval,
}

#[derive(Subcommand)]
enum GbsQuery {
    Classify { file: String },
}

#[derive(Subcommand)]
enum EmbedMap {
    /// Positive word over `a b c d` (the path a-b-c-d) into three free monoids on x, y.
    PhiP4 { word: String },
    /// Positive word read in the RAAG of the same graph.
    Paris {
        #[command(flatten)]
        g: GraphArg,
        word: String,
    },
    /// Word over `c l1 … lk` (star with centre c) into A(a-b-c).
    Star { k: usize, word: String },
    /// Word over a forest into A(P_{d+1}) * <f>.
    Forest {
        #[command(flatten)]
        g: GraphArg,
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InjectiveMap {
    PhiP4,
    Paris,
    Trefoil,
    HnnTrefoil,
    CompositeBs,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelMap {
    Trefoil,
    HnnTrefoil,
    Identity,
    Star,
    Forest,
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// The bundled regression suite.
    Paper {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Bounded injectivity of a monoid map out of a trace monoid.
    Injective {
        #[arg(long, value_enum, default_value = "phi-p4")]
        map: InjectiveMap,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Bounded search for kernel elements of a group map out of a RAAG.
    NoKernel {
        #[arg(long, value_enum, default_value = "trefoil")]
        map: KernelMap,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Source graph for `identity` and `forest`.
        #[arg(long)]
        graph: Option<String>,
        /// Number of leaves for `star`.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum ExploreWhat {
    /// Kernel search over (a c^k a^-1, b^l, c^m, d^-1 b^n d) in the HNN group.
    Prop14 {
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<onerel_core::Error> for Failure {
    fn from(e: onerel_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn load_graph(path: &str) -> Result<Arc<SimpGraph>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(Arc::new(SimpGraph::parse(&text)?))
}

fn word_list(a: &Alphabet, text: &str) -> Result<Vec<FreeWord>, Failure> {
    text.split(',').map(|w| a.parse_word(w.trim()).map_err(Failure::from)).collect()
}

fn parse_alphabet(text: &str) -> Result<Alphabet, Failure> {
    let names: Vec<&str> = text.split_whitespace().collect();
    Ok(Alphabet::new(&names)?)
}

fn nf(kind: NfKind) -> Out {
    match kind {
        NfKind::Trace { g, word } => {
            let graph = load_graph(&g.graph)?;
            let w = graph.alphabet().parse_positive(&word)?;
            Ok(Trace::normalize(&graph, &w)?.display())
        }
        NfKind::Raag { g, word } => {
            let graph = load_graph(&g.graph)?;
            let w = graph.alphabet().parse_word(&word)?;
            Ok(RaagElement::normalize(&graph, &w)?.display())
        }
    }
}

fn eq(kind: EqKind) -> Out {
    let equal = match kind {
        EqKind::Trace { g, u, v } => {
            let graph = load_graph(&g.graph)?;
            let a = graph.alphabet();
            let tu = Trace::normalize(&graph, &a.parse_positive(&u)?)?;
            let tv = Trace::normalize(&graph, &a.parse_positive(&v)?)?;
            tu.equal(&tv)?
        }
        EqKind::Raag { g, u, v } => {
            let graph = load_graph(&g.graph)?;
            let a = graph.alphabet();
            RaagElement::normalize(&graph, &a.parse_word(&u)?)? == RaagElement::normalize(&graph, &a.parse_word(&v)?)?
        }
        EqKind::Group { name, u, v } => {
            let group = NamedGroup::parse(&name)?;
            let a = group.alphabet();
            group.equal(&a.parse_word(&u)?, &a.parse_word(&v)?)?
        }
    };
    Ok(format!("equal={equal}"))
}

fn graph(query: GraphQuery) -> Out {
    match query {
        GraphQuery::Forest { g } => Ok(format!("forest={}", load_graph(&g.graph)?.is_forest())),
        GraphQuery::Diam { g } => Ok(format!("diameter={}", load_graph(&g.graph)?.max_component_diameter()?)),
        GraphQuery::InducedPath { g, n } => {
            let graph = load_graph(&g.graph)?;
            Ok(match graph.find_induced_path(n) {
                None => "induced_path=none".to_string(),
                Some(p) => {
                    let names: Vec<&str> = p.iter().map(|&v| graph.name(v)).collect();
                    format!("induced_path={}", names.join(" "))
                }
            })
        }
    }
}

fn stallings(query: StallingsQuery) -> Out {
    match query {
        StallingsQuery::Rank { a, gens } => {
            let al = parse_alphabet(&a.alphabet)?;
            let s = StallingsGraph::from_generators(al.len(), &word_list(&al, &gens)?)?;
            Ok(format!("rank={} vertices={} edges={}", s.subgroup_rank(), s.vertex_count(), s.edge_count()))
        }
        StallingsQuery::Member { a, gens, word } => {
            let al = parse_alphabet(&a.alphabet)?;
            let s = StallingsGraph::from_generators(al.len(), &word_list(&al, &gens)?)?;
            Ok(format!("member={}", s.contains(&al.parse_word(&word)?)?))
        }
        StallingsQuery::Intersect { a, gens1, gens2 } => {
            let al = parse_alphabet(&a.alphabet)?;
            let s1 = StallingsGraph::from_generators(al.len(), &word_list(&al, &gens1)?)?;
            let s2 = StallingsGraph::from_generators(al.len(), &word_list(&al, &gens2)?)?;
            let i = s1.intersect(&s2)?;
            let basis: Vec<String> = i.basis().iter().map(|w| al.format_word(w)).collect();
            Ok(format!("rank={} basis={}", i.subgroup_rank(), if basis.is_empty() { "-".into() } else { basis.join(",") }))
        }
        StallingsQuery::Findpower { a, elements, r_max } => {
            let al = parse_alphabet(&a.alphabet)?;
            let found = find_free_power(al.len(), &word_list(&al, &elements)?, r_max)?;
            Ok(match found {
                Some(r) => format!("power={r}"),
                None => format!("power=none r_max={r_max}"),
            })
        }
    }
}

fn gbs(query: GbsQuery) -> Out {
    let GbsQuery::Classify { file } = query;
    let text = std::fs::read_to_string(&file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    let g = GbsGraph::parse(&text)?;
    let c = classify_cstar(&g)?;
    let reduced = reduce_gbs(&g)?;
    Ok(format!(
        "{c}\np_nai={}\nreduced_vertices={} reduced_edges={}",
        if p_nai_verdict(&g)? { "Yes" } else { "No" },
        reduced.vertex_count(),
        reduced.edges().len()
    ))
}

fn embed(map: EmbedMap) -> Out {
    match map {
        EmbedMap::PhiP4 { word } => {
            let p4 = named_path(4)?;
            let w = p4.alphabet().parse_positive(&word)?;
            let (x, y, z) = phi_p4_map(&p4)?.apply_trace(&Trace::normalize(&p4, &w)?)?;
            let xy = Alphabet::new(&["x", "y"])?;
            Ok(format!("phi=({}, {}, {})", xy.format_positive(&x), xy.format_positive(&y), xy.format_positive(&z)))
        }
        EmbedMap::Paris { g, word } => {
            let graph = load_graph(&g.graph)?;
            let w = graph.alphabet().parse_positive(&word)?;
            Ok(paris(&graph, &w)?.display())
        }
        EmbedMap::Star { k, word } => {
            let sg = star_graph(k)?;
            let w = sg.alphabet().parse_word(&word)?;
            Ok(star_embed(k, &w)?.display())
        }
        EmbedMap::Forest { g, word } => {
            let graph = load_graph(&g.graph)?;
            let w = graph.alphabet().parse_word(&word)?;
            Ok(forest_embed(&graph, &w)?.to_string())
        }
    }
}

fn verdict(text: String, ok: bool) -> Out {
    if ok {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn trefoil_map() -> Result<MonoidMap<TrefoilElement>, Failure> {
    let p3 = named_path(3)?;
    Ok(MonoidMap::new(&p3, TrefoilElement::identity(), vec![Trefoil::a(), Trefoil::b(), Trefoil::c()])?)
}

fn hnn_map() -> Result<MonoidMap<HnnTrefoilElement>, Failure> {
    let p4 = named_path(4)?;
    let images = vec![HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d()];
    Ok(MonoidMap::new(&p4, HnnTrefoilElement::identity(), images)?)
}

fn verify(what: VerifyWhat) -> Out {
    match what {
        VerifyWhat::Paper { max_len } => {
            let results = regression::run_all(max_len);
            let mut out = String::new();
            for r in &results {
                writeln!(out, "{r}").expect("writing to a string");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            write!(out, "checks={} failed={failed}", results.len()).expect("writing to a string");
            verdict(out, failed == 0)
        }
        VerifyWhat::Injective { map, max_len } => {
            let p4 = named_path(4)?;
            let report = match map {
                InjectiveMap::PhiP4 => verify_monoid_injective(&phi_p4_map(&p4)?, max_len).to_string(),
                InjectiveMap::Paris => {
                    let images = (0..4).map(|v| RaagElement::generator(&p4, v)).collect::<Result<_, _>>()?;
                    let m = MonoidMap::new(&p4, RaagElement::identity(&p4), images)?;
                    verify_monoid_injective(&m, max_len).to_string()
                }
                InjectiveMap::Trefoil => verify_monoid_injective(&trefoil_map()?, max_len).to_string(),
                InjectiveMap::HnnTrefoil => verify_monoid_injective(&hnn_map()?, max_len).to_string(),
                InjectiveMap::CompositeBs => verify_monoid_injective(&composite_bs_map(&p4)?, max_len).to_string(),
            };
            let ok = report.contains(" collisions=0\n");
            verdict(report, ok)
        }
        VerifyWhat::NoKernel { map, max_len, graph, k } => {
            let report = match map {
                KernelMap::Trefoil => verify_no_kernel(&trefoil_map()?, max_len),
                KernelMap::HnnTrefoil => verify_no_kernel(&hnn_map()?, max_len),
                KernelMap::Identity => {
                    let g = match graph {
                        Some(path) => load_graph(&path)?,
                        None => named_path(4)?,
                    };
                    let images = (0..g.len()).map(|v| RaagElement::generator(&g, v)).collect::<Result<_, _>>()?;
                    verify_no_kernel(&MonoidMap::new(&g, RaagElement::identity(&g), images)?, max_len)
                }
                KernelMap::Star => {
                    let (p3, images) = onerel_core::embeddings::star_images(k)?;
                    verify_no_kernel(&MonoidMap::new(&star_graph(k)?, RaagElement::identity(&p3), images)?, max_len)
                }
                KernelMap::Forest => {
                    let path = graph.ok_or_else(|| Failure::Usage("--graph is required for the forest map".into()))?;
                    verify_no_kernel(&forest_map(&load_graph(&path)?)?, max_len)
                }
            };
            let ok = report.is_empty();
            verdict(report.to_string(), ok)
        }
    }
}

fn explore(what: ExploreWhat) -> Out {
    let ExploreWhat::Prop14 { bound, max_len } = what;
    if bound < 1 {
        return Err(Failure::Usage("--bound must be at least 1".into()));
    }
    let p4 = named_path(4)?;
    let id = HnnTrefoilElement::identity();
    let (a, b, c, d) = (HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d());
    let range: Vec<i64> = (-bound..=bound).filter(|&e| e != 0).collect();
    let mut out = String::new();
    let (mut tuples, mut clean) = (0, 0);
    for &k in &range {
        for &l in &range {
            for &m in &range {
                for &n in &range {
                    let images = prop14_elements(&id, &a, &b, &c, &d, k, l, m, n)?;
                    let map = MonoidMap::new(&p4, id.clone(), images.to_vec())?;
                    let r = verify_no_kernel(&map, max_len);
                    tuples += 1;
                    if r.is_empty() {
                        clean += 1;
                    }
                    writeln!(out, "k={k} l={l} m={m} n={n} checked={} kernel={}", r.checked, r.kernel.len())
                        .expect("writing to a string");
                }
            }
        }
    }
    write!(out, "tuples={tuples} kernel_free={clean} max_len={max_len} note=bounded evidence only")
        .expect("writing to a string");
    Ok(out)
}

fn classify(presentation: &str) -> Out {
    let p = OneRelatorPresentation::parse(presentation)?;
    Ok(format!("{}\np_nai={}", p.classify(), p.p_nai()))
}

fn group(name: &str, word: &str) -> Out {
    let g = NamedGroup::parse(name)?;
    Ok(g.eval(&g.alphabet().parse_word(word)?)?)
}

fn run(cli: Cli) -> Out {
    match cli.command {
        Command::Nf { kind } => nf(kind),
        Command::Eq { kind } => eq(kind),
        Command::Graph { query } => graph(query),
        Command::Stallings { query } => stallings(query),
        Command::Group { name, action: GroupAction::Eval, word } => group(&name, &word),
        Command::Gbs { query } => gbs(query),
        Command::Classify { presentation } => classify(&presentation),
        Command::Embed { map } => embed(map),
        Command::Verify { what } => verify(what),
        Command::Explore { what } => explore(what),
    }
}

/// Writes to stdout, ignoring a closed pipe (`onerel … | head`).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            emit(&text);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
