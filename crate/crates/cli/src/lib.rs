//! Command-line front end: compute q-chromatic functions and Frobenius
//! characteristics, and run verification campaigns with JSON Lines reports.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qchromatic::cancel::verify_cancellation;
use qchromatic::chromatic::{csf_bruteforce, psi, CsfMode};
use qchromatic::exact::{QPoly, QRational};
use qchromatic::gkm::{frobenius_with_basis, FlowUpBasis, FrobeniusRecord, Ring, DEFAULT_MAX_N};
use qchromatic::graphs::{
    connected_components, enumerate_hessenberg, HessenbergFunction, OrderedGraph,
};
use qchromatic::oghopf::Character;
use qchromatic::symfun::{eulerian, id_star_s_eq, m_to_p, omega, p_to_m, zeta_q, SymFunctionJson};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid h: {0}")]
    InvalidH(qchromatic::Error),
    #[error("size {n} exceeds the ceiling {max}")]
    SizeExceeded { n: usize, max: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] qchromatic::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidH(_) | CliError::SizeExceeded { .. } | CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::L => Ring::L,
            RingArg::R => Ring::R,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "p")]
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "qchromatic",
    version,
    about = "q-chromatic symmetric functions and Hessenberg Frobenius characteristics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; `text` for csfq/frob and `json` for verify/involution by default.
    #[arg(long, global = true)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The q-chromatic quasisymmetric function of G(h).
    Csfq {
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "M")]
        basis: BasisArg,
    },
    /// Graded Frobenius characteristic of the equivariant cohomology of h.
    Frob {
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "L")]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
    },
    /// Check the identities for every h of size at most n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Also check Psi against brute force on 50 random ordered graphs drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the cancellation involution on G(h), or on every connected G(h) up to n.
    Involution {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        h: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Output text plus whether every check passed.
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

const RANDOM_GRAPHS: usize = 50;

fn parse_h(s: &str) -> Result<HessenbergFunction, CliError> {
    s.parse().map_err(CliError::InvalidH)
}

fn check_size(n: usize) -> Result<(), CliError> {
    if n > DEFAULT_MAX_N {
        return Err(CliError::SizeExceeded {
            n,
            max: DEFAULT_MAX_N,
        });
    }
    Ok(())
}

fn json_line(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("report serializes") + "\n"
}

fn json_pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("value serializes") + "\n"
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn csfq(h: &HessenbergFunction, basis: BasisArg, format: Format) -> Result<Outcome, CliError> {
    let x = psi(&h.graph(), &Character::Zeta0);
    let text = match (basis, format) {
        (BasisArg::M, Format::Text) => format!("{x}\n"),
        (BasisArg::M, Format::Json) => json_pretty(&SymFunctionJson::from(&x)),
        (BasisArg::P, Format::Text) => format!("{}\n", m_to_p(&x)?),
        (BasisArg::P, Format::Json) => json_pretty(&SymFunctionJson::from(&m_to_p(&x)?)),
    };
    Ok(Outcome { text, pass: true })
}

fn frob(
    h: &HessenbergFunction,
    ring: Ring,
    basis: BasisArg,
    format: Format,
) -> Result<Outcome, CliError> {
    check_size(h.n())?;
    let x = frobenius_with_basis(&FlowUpBasis::new(h)?, ring)?;
    let text = match (basis, format) {
        (BasisArg::P, Format::Text) => format!("{x}\n"),
        (BasisArg::M, Format::Text) => format!("{}\n", p_to_m(&x)),
        (BasisArg::P, Format::Json) => json_pretty(&FrobeniusRecord::new(h, ring, &x)),
        (BasisArg::M, Format::Json) => json_pretty(&FrobeniusRecord {
            h: h.clone(),
            ring,
            value: SymFunctionJson::from(&p_to_m(&x)),
        }),
    };
    Ok(Outcome { text, pass: true })
}

#[derive(Debug, Clone, Serialize)]
struct VerifyLine {
    h: HessenbergFunction,
    n: usize,
    #[serde(rename = "identity_L")]
    identity_l: bool,
    #[serde(rename = "identity_R")]
    identity_r: bool,
    base_change: bool,
    sign_lemma: bool,
    pass: bool,
}

fn verify_one(h: &HessenbergFunction) -> Result<VerifyLine, CliError> {
    let g = h.graph();
    let basis = FlowUpBasis::new(h)?;
    let frob_l = frobenius_with_basis(&basis, Ring::L)?;
    let frob_r = frobenius_with_basis(&basis, Ring::R)?;
    let omega_r = p_to_m(&omega(&frob_r));
    let identity_l = p_to_m(&omega(&frob_l)) == psi(&g, &Character::Zeta0);
    let identity_r = omega_r == psi(&g, &Character::ZetaQ);
    let one_minus_q = QRational::from_poly(QPoly::from_ints(&[1, -1]));
    let base_change = eulerian(&frob_l, &one_minus_q) == id_star_s_eq(&frob_r);
    let sign_lemma = zeta_q(&omega_r) == QRational::q_pow(g.edge_count());
    Ok(VerifyLine {
        h: h.clone(),
        n: h.n(),
        identity_l,
        identity_r,
        base_change,
        sign_lemma,
        pass: identity_l && identity_r && base_change && sign_lemma,
    })
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> OrderedGraph {
    let n = rng.gen_range(0..=max_n);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    OrderedGraph::new(n, edges).expect("valid edges")
}

fn psi_matches_bruteforce(g: &OrderedGraph) -> bool {
    let t = QRational::q_pow(2);
    psi(g, &Character::Zeta0) == csf_bruteforce(g, &CsfMode::ProperStrict)
        && psi(g, &Character::Zeta1) == csf_bruteforce(g, &CsfMode::AllStrict)
        && psi(g, &Character::ZetaQ) == csf_bruteforce(g, &CsfMode::AllWeak)
        && psi(g, &Character::ZetaT(t.clone())) == csf_bruteforce(g, &CsfMode::MonoWeighted(t))
}

fn verify(n: usize, seed: Option<u64>, format: Format) -> Result<Outcome, CliError> {
    check_size(n)?;
    let hs: Vec<HessenbergFunction> = (0..=n).flat_map(enumerate_hessenberg).collect();
    let lines = hs
        .par_iter()
        .map(verify_one)
        .collect::<Result<Vec<_>, _>>()?;
    let mut pass = lines.iter().all(|l| l.pass);
    let mut text = String::new();
    for l in &lines {
        text += &match format {
            Format::Json => json_line(l),
            Format::Text => format!(
                "h={} identity_L={} identity_R={} base_change={} sign_lemma={} {}\n",
                l.h,
                mark(l.identity_l),
                mark(l.identity_r),
                mark(l.base_change),
                mark(l.sign_lemma),
                if l.pass { "PASS" } else { "FAIL" }
            ),
        };
    }
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graphs: Vec<OrderedGraph> = (0..RANDOM_GRAPHS)
            .map(|_| random_graph(&mut rng, n.min(4)))
            .collect();
        let results: Vec<bool> = graphs.par_iter().map(psi_matches_bruteforce).collect();
        for (g, ok) in graphs.iter().zip(results) {
            pass &= ok;
            text += &match format {
                Format::Json => json_line(
                    &json!({"graph": g.to_string(), "seed": seed, "psi_bruteforce": ok, "pass": ok}),
                ),
                Format::Text => format!(
                    "{g} psi_bruteforce={} {}\n",
                    mark(ok),
                    if ok { "PASS" } else { "FAIL" }
                ),
            };
        }
    }
    Ok(Outcome { text, pass })
}

fn involution(h: Option<&str>, n: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    let graphs: Vec<OrderedGraph> = match (h, n) {
        (Some(h), _) => {
            let h = parse_h(h)?;
            check_size(h.n())?;
            vec![h.graph()]
        }
        (None, Some(n)) => {
            check_size(n)?;
            (1..=n)
                .flat_map(enumerate_hessenberg)
                .map(|h| h.graph())
                .filter(|g| connected_components(g).len() == 1)
                .collect()
        }
        (None, None) => return Err(CliError::Usage("involution needs --h or --n".into())),
    };
    let reports = graphs
        .par_iter()
        .map(verify_cancellation)
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    for r in &reports {
        text += &match format {
            Format::Json => json_line(&r.to_json()),
            Format::Text => format!(
                "{} terms={} paired={} fixed_points={} sum={} {}\n",
                r.graph,
                r.terms,
                r.paired,
                r.fixed_points,
                r.sum,
                if r.pass { "PASS" } else { "FAIL" }
            ),
        };
    }
    Ok(Outcome {
        text,
        pass: reports.iter().all(|r| r.pass),
    })
}

/// Runs the command on a pool of `cli.jobs` threads and returns its output.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if cli.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Csfq { h, basis } => {
            csfq(&parse_h(h)?, *basis, cli.format.unwrap_or(Format::Text))
        }
        Command::Frob { h, ring, basis } => frob(
            &parse_h(h)?,
            (*ring).into(),
            *basis,
            cli.format.unwrap_or(Format::Text),
        ),
        Command::Verify { n, seed } => verify(*n, *seed, cli.format.unwrap_or(Format::Json)),
        Command::Involution { h, n } => {
            involution(h.as_deref(), *n, cli.format.unwrap_or(Format::Json))
        }
    })
}

/// Runs `cli`, writes its output, and returns the process exit code.
pub fn main_with(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> u8 {
    let result = run(cli).and_then(|outcome| {
        match &cli.out {
            Some(path) => std::fs::write(path, &outcome.text)?,
            None => stdout.write_all(outcome.text.as_bytes())?,
        }
        Ok(outcome.pass)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
