use anyhow::{anyhow, bail, Result};
use clap::{Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use yibre::bezout::{bezout_operator, rota_baxter, rb_source, BezoutKind, MatOperator, RbKind, RbSide};
use yibre::blocks::{block_matrix, BlockKind};
use yibre::cg::{cg_matrix, CgParams};
use yibre::classical::{build_classical, ClassicalKind};
use yibre::kernel::{format_rational, parse_rational, parse_vector};
use yibre::poisson::{pencil_bracket, PencilParams, PolyBracket, Rho};
use yibre::rime::{strict_rime_r, unitary_rime_r};
use yibre::{Operator2, Rational};

fn rational(s: &str) -> Result<Rational, yibre::Error> {
    parse_rational(s)
}

/// A comma-separated list of rationals.
#[derive(Clone, Debug)]
pub struct Values(Vec<Rational>);

fn vector(s: &str) -> Result<Values, yibre::Error> {
    parse_vector(s).map(Values)
}

/// Objects that `construct` can build.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
pub enum Object {
    /// Strict rime R̂(φ, β).
    StrictRime {
        /// Pairwise distinct φ₁,…,φₙ.
        #[arg(long, value_parser = vector)]
        phi: Values,
        #[arg(long, value_parser = rational)]
        beta: Rational,
    },
    /// Unitary rime R̂(μ).
    UnitaryRime {
        /// Pairwise distinct μ₁,…,μₙ.
        #[arg(long, value_parser = vector)]
        mu: Values,
    },
    /// Cremmer–Gervais matrix R̂_{CG,p}.
    Cg {
        #[arg(long)]
        n: usize,
        /// The value q⁻².
        #[arg(long, value_parser = rational)]
        qsq_inv: Rational,
        #[arg(long, value_parser = rational, default_value = "1")]
        p: Rational,
    },
    /// A member of the 4×4 catalog.
    Block(BlockArgs),
    /// A classical r-matrix.
    Classical {
        #[arg(long)]
        kind: ClassicalArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = vector)]
        phi: Option<Values>,
        #[arg(long, value_parser = vector)]
        mu: Option<Values>,
    },
    /// A Bézout operator on polynomials of degree below n in each variable.
    Bezout {
        #[arg(long)]
        kind: BezoutArg,
        #[arg(long)]
        n: usize,
    },
    /// The Rota–Baxter operator of a Bézout or rime r-matrix, as a matrix on Mat(n).
    RotaBaxter {
        #[arg(long)]
        kind: RotaArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = vector)]
        phi: Option<Values>,
    },
    /// A member of the quadratic rime Poisson pencil.
    Poisson {
        /// Pairwise distinct ψ₁,…,ψₙ.
        #[arg(long, value_parser = vector)]
        psi: Values,
        /// Coefficients a,b,c of ϱ(t) = at² + bt + c.
        #[arg(long, value_parser = vector)]
        rho: Values,
    },
}

#[derive(Debug, clap::Args)]
pub struct BlockArgs {
    /// Catalog name, see `yibre catalog`.
    #[arg(long)]
    kind: String,
    #[arg(long, value_parser = rational)]
    q: Option<Rational>,
    #[arg(long, value_parser = rational)]
    gamma: Option<Rational>,
    #[arg(long, value_parser = rational)]
    omega: Option<Rational>,
    #[arg(long, value_parser = rational)]
    p: Option<Rational>,
    #[arg(long, value_parser = rational)]
    epsilon: Option<Rational>,
    #[arg(long, value_parser = rational)]
    h1: Option<Rational>,
    #[arg(long, value_parser = rational)]
    h2: Option<Rational>,
    #[arg(long, value_parser = rational)]
    h3: Option<Rational>,
    #[arg(long, value_parser = rational)]
    a: Option<Rational>,
    #[arg(long, value_parser = rational)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational)]
    c: Option<Rational>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ClassicalArg {
    RimeNonskew,
    Rcg,
    RcgPrime,
    B,
    Bcg,
    RimeSkew,
    RimeSkewSl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BezoutArg {
    B0,
    B,
    Rs,
    Btilde,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RotaArg {
    B0,
    B,
    Rs,
    Rime,
}

fn required(v: &Option<Rational>, name: &str, kind: &str) -> Result<Rational> {
    v.clone().ok_or_else(|| anyhow!("block {kind} needs --{name}"))
}

fn block_kind(args: &BlockArgs) -> Result<BlockKind> {
    let k = args.kind.as_str();
    let get = |v: &Option<Rational>, name: &str| required(v, name, k);
    Ok(match k {
        "rbl1" => BlockKind::Rbl1 { q: get(&args.q, "q")?, gamma: get(&args.gamma, "gamma")? },
        "rbl2" => BlockKind::Rbl2 { q: get(&args.q, "q")?, gamma: get(&args.gamma, "gamma")? },
        "rbl3" => BlockKind::Rbl3 { q: get(&args.q, "q")?, gamma: get(&args.gamma, "gamma")? },
        "rbl4" => BlockKind::Rbl4 {
            q: get(&args.q, "q")?,
            omega: get(&args.omega, "omega")?,
            gamma: get(&args.gamma, "gamma")?,
        },
        "gl2" => BlockKind::Gl2Std { q: get(&args.q, "q")?, p: get(&args.p, "p")? },
        "gl11" => BlockKind::Gl11Std { q: get(&args.q, "q")?, p: get(&args.p, "p")? },
        "eight-vertex" => BlockKind::EightVertex { q: get(&args.q, "q")? },
        "r2" => BlockKind::RII { q: get(&args.q, "q")?, epsilon: get(&args.epsilon, "epsilon")? },
        "jordanian" => BlockKind::Jordanian { h1: get(&args.h1, "h1")?, h2: get(&args.h2, "h2")? },
        "perm-like" => BlockKind::PermLike {
            a: get(&args.a, "a")?,
            b: get(&args.b, "b")?,
            c: get(&args.c, "c")?,
        },
        "r-prime" => BlockKind::RPrime { a: get(&args.a, "a")? },
        "r-double-prime" => BlockKind::RDoublePrime {
            h1: get(&args.h1, "h1")?,
            h2: get(&args.h2, "h2")?,
            h3: get(&args.h3, "h3")?,
        },
        "r-triple-prime" => BlockKind::RTriplePrime,
        other => bail!("unknown block kind {other:?}"),
    })
}

fn dimension(n: Option<usize>, params: Option<&[Rational]>, name: &str) -> Result<usize> {
    match (n, params) {
        (Some(n), Some(p)) if n != p.len() => bail!("--n {n} disagrees with {} values of --{name}", p.len()),
        (_, Some(p)) => Ok(p.len()),
        (Some(n), None) => Ok(n),
        (None, None) => bail!("give --n or --{name}"),
    }
}

fn classical_kind(kind: ClassicalArg, phi: Option<&[Rational]>, mu: Option<&[Rational]>) -> Result<ClassicalKind> {
    let need = |v: Option<&[Rational]>, name: &str| v.map(<[Rational]>::to_vec).ok_or_else(|| anyhow!("this kind needs --{name}"));
    Ok(match kind {
        ClassicalArg::RimeNonskew => ClassicalKind::RimeNonSkew(need(phi, "phi")?),
        ClassicalArg::Rcg => ClassicalKind::RCG,
        ClassicalArg::RcgPrime => ClassicalKind::RCGPrime,
        ClassicalArg::B => ClassicalKind::BSkew,
        ClassicalArg::Bcg => ClassicalKind::BCG,
        ClassicalArg::RimeSkew => ClassicalKind::RimeSkew(need(mu, "mu")?),
        ClassicalArg::RimeSkewSl => ClassicalKind::RimeSkewSL(need(mu, "mu")?),
    })
}

fn operator_json(object: &str, r: &Operator2) -> Value {
    let entries: Map<String, Value> = r.sparse_entries().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
    json!({ "object": object, "n": r.dim(), "entries": entries })
}

fn mat_operator_json(object: &str, rb: &MatOperator) -> Value {
    let n = rb.dim();
    let m = rb.matrix();
    let mut entries = Map::new();
    for r in 0..n * n {
        for c in 0..n * n {
            let v = &m[(r, c)];
            if !num_is_zero(v) {
                let key = format!("{},{}|{},{}", r / n + 1, r % n + 1, c / n + 1, c % n + 1);
                entries.insert(key, Value::String(format_rational(v)));
            }
        }
    }
    json!({ "object": object, "n": n, "entries": entries })
}

fn num_is_zero(v: &Rational) -> bool {
    *v.numer() == 0.into()
}

fn bracket_json(br: &PolyBracket) -> Value {
    let n = br.dim();
    let mut out = Map::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let terms: Map<String, Value> = br
                .get(i, j)
                .terms()
                .map(|(vars, c)| {
                    let name: Vec<String> = vars.iter().map(|v| format!("x{}", v + 1)).collect();
                    (name.join("*"), Value::String(format_rational(c)))
                })
                .collect();
            out.insert(format!("{i},{j}"), Value::Object(terms));
        }
    }
    json!({ "object": "poisson", "n": n, "bracket": out })
}

/// Builds the requested object and serializes it.
pub fn build(object: &Object) -> Result<Value> {
    Ok(match object {
        Object::StrictRime { phi, beta } => operator_json("strict-rime", &strict_rime_r(&phi.0, beta)?),
        Object::UnitaryRime { mu } => operator_json("unitary-rime", &unitary_rime_r(&mu.0)?),
        Object::Cg { n, qsq_inv, p } => {
            let params = CgParams { n: *n, qsq_inv: qsq_inv.clone(), p: p.clone() };
            operator_json("cg", &cg_matrix(&params)?)
        }
        Object::Block(args) => {
            let kind = block_kind(args)?;
            operator_json(kind.name(), &block_matrix(&kind)?)
        }
        Object::Classical { kind, n, phi, mu } => {
            let (phi, mu) = (phi.as_ref().map(|v| v.0.as_slice()), mu.as_ref().map(|v| v.0.as_slice()));
            let n = dimension(*n, phi.or(mu), if phi.is_some() { "phi" } else { "mu" })?;
            let kind = classical_kind(*kind, phi, mu)?;
            operator_json(kind.name(), &build_classical(&kind, n)?)
        }
        Object::Bezout { kind, n } => {
            let kind = match kind {
                BezoutArg::B0 => BezoutKind::B0,
                BezoutArg::B => BezoutKind::B,
                BezoutArg::Rs => BezoutKind::RS,
                BezoutArg::Btilde => BezoutKind::BTilde,
            };
            operator_json(kind.name(), &bezout_operator(kind, *n)?)
        }
        Object::RotaBaxter { kind, n, phi } => {
            let (rb_kind, n) = match kind {
                RotaArg::B0 => (RbKind::B0, dimension(*n, None, "n")?),
                RotaArg::B => (RbKind::B, dimension(*n, None, "n")?),
                RotaArg::Rs => (RbKind::RS, dimension(*n, None, "n")?),
                RotaArg::Rime => {
                    let phi = phi.clone().ok_or_else(|| anyhow!("rime needs --phi"))?.0;
                    let n = dimension(*n, Some(&phi), "phi")?;
                    (RbKind::RimePhi(phi), n)
                }
            };
            mat_operator_json("rota-baxter", &rota_baxter(&rb_source(&rb_kind, n)?, RbSide::Left))
        }
        Object::Poisson { psi, rho } => {
            let [a, b, c] = <[Rational; 3]>::try_from(rho.0.clone())
                .map_err(|_| anyhow!("--rho takes three coefficients a,b,c"))?;
            let params = PencilParams::new(psi.0.clone(), Rho::new(a, b, c))?;
            bracket_json(&pencil_bracket(&params)?)
        }
    })
}
