//! One function per subcommand. Each returns structured verdicts plus the
//! lines of the annotated report; every bound it produces is re-certified
//! from scratch before it is reported.

use loewner_core::{
    certify_maximal, commutant_glb, commuting_glb, compare, constrained_at_vector, extend_to_maximal, finite_infimum,
    is_psd, maximal_in_lu, mlb_mt, parallel_sum_family, positive_glb_family, positive_maximal_lb, range_nullspace,
    signature_matrix, spectral, stott_mx, stott_recover_x, subspace_intersect, two_op_positive_glb, CMatrix, CVector,
    Error as CoreError, HermitianMatrix, MatrixSet, MaximalityCertificate, OrderRelation, StottParam, Tolerances,
};
use num_complex::Complex;
use serde_json::{json, Value};

use crate::document::{
    general_value, hermitian_value, parse_document, parse_general_matrix, parse_json, FieldTag, MatrixSetDocument,
};
use crate::error::{CliError, CliResult};
use crate::report::{hermitian_lines, matrix_lines, yes_no, InputDigest};

/// What a command hands back to the dispatcher.
pub struct Outcome {
    pub verdicts: Value,
    pub lines: Vec<String>,
}

/// Source of one named input: its bytes go into the digest.
pub struct Loaded {
    pub name: String,
    pub text: String,
}

pub fn read_file(path: &str) -> CliResult<Loaded> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    Ok(Loaded {
        name: path.to_string(),
        text,
    })
}

/// Inline JSON, or the contents of a file for `@path`.
pub fn read_inline(arg: &str, option: &str) -> CliResult<Loaded> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(path),
        None => Ok(Loaded {
            name: format!("--{option}"),
            text: arg.to_string(),
        }),
    }
}

pub struct Ctx<'a> {
    pub tol: Tolerances<f64>,
    pub digest: &'a mut InputDigest,
}

impl Ctx<'_> {
    fn document(&mut self, role: &str, src: &Loaded) -> CliResult<MatrixSetDocument> {
        self.digest.add(role, src.text.as_bytes());
        parse_document(&src.text, &src.name, &self.tol)
    }

    /// A document that must hold exactly one matrix.
    fn single(&mut self, role: &str, src: &Loaded, dim: Option<usize>) -> CliResult<HermitianMatrix<f64>> {
        let doc = self.document(role, src)?;
        if doc.set.len() != 1 {
            return Err(validation(
                &src.name,
                "matrices",
                format!("expected one matrix, found {}", doc.set.len()),
            ));
        }
        if let Some(n) = dim {
            if doc.dim() != n {
                return Err(validation(
                    &src.name,
                    "dim",
                    format!("expected dimension {n}, found {}", doc.dim()),
                ));
            }
        }
        Ok(doc.set.members()[0].clone())
    }
}

fn validation(source: &str, locator: &str, message: String) -> CliError {
    CliError::Validation {
        source_name: source.to_string(),
        locator: locator.to_string(),
        message,
    }
}

fn arity(doc: &MatrixSetDocument, source: &str, want: usize, command: &str) -> CliResult<()> {
    if doc.set.len() != want {
        return Err(validation(
            source,
            "matrices",
            format!("{command} needs exactly {want} matrices, found {}", doc.set.len()),
        ));
    }
    Ok(())
}

fn certificate_value(c: &MaximalityCertificate) -> Value {
    json!({
        "is_lower_bound": c.is_lower_bound,
        "is_maximal": c.is_maximal,
        "span_dim": c.span_dim,
        "range_intersection_dim": c.range_intersection_dim,
        "ambient_dim": c.ambient_dim,
        "per_member_nullspace_dims": c.per_member_nullspace_dims,
        "criteria_agree": c.criteria_agree(),
    })
}

fn certificate_lines(c: &MaximalityCertificate) -> Vec<String> {
    vec![
        format!("  lower bound: {}", yes_no(c.is_lower_bound)),
        format!(
            "  null-space spanning certificate: dim Σ N(A − M) = {} of {} (per member {:?}); dim ∩ R(A − M) = {}",
            c.span_dim, c.ambient_dim, c.per_member_nullspace_dims, c.range_intersection_dim
        ),
        format!("  maximal lower bound: {}", yes_no(c.is_maximal)),
    ]
}

/// Certifies `m` against `set` and appends the result under `key`.
fn certified(
    command: &str,
    m: &HermitianMatrix<f64>,
    set: &MatrixSet<f64>,
    tol: &Tolerances<f64>,
    lines: &mut Vec<String>,
) -> CliResult<Value> {
    let c = certify_maximal(m, set, tol).map_err(|e| CliError::core(command, e))?;
    lines.extend(certificate_lines(&c));
    Ok(certificate_value(&c))
}

fn relation_str(r: OrderRelation) -> &'static str {
    match r {
        OrderRelation::Below => "below",
        OrderRelation::Above => "above",
        OrderRelation::Equal => "equal",
        OrderRelation::Incomparable => "incomparable",
    }
}

pub fn check_order(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "check-order";
    let doc = ctx.document("input", src)?;
    arity(&doc, &src.name, 2, CMD)?;
    let (s, t) = (&doc.set.members()[0], &doc.set.members()[1]);
    let rel = compare(s, t, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
    let diff = spectral(&(t - s)).map_err(|e| CliError::core(CMD, e))?;
    let mut lines = vec![
        format!("S = {}, T = {}", doc.label(0), doc.label(1)),
        format!("spectrum of T − S: [{:.6e}, {:.6e}]", diff.min(), diff.max()),
        format!("Loewner relation: {rel}"),
    ];
    if rel.is_comparable() {
        lines.push("the pair is comparable; the smaller member is the infimum".into());
    } else {
        lines.push("the pair is incomparable; by the Kadison anti-lattice theorem it has no infimum".into());
    }
    Ok(Outcome {
        verdicts: json!({
            "relation": relation_str(rel),
            "s_le_t": rel.is_le(),
            "t_le_s": rel.is_ge(),
            "min_eigenvalue_t_minus_s": diff.min(),
            "max_eigenvalue_t_minus_s": diff.max(),
        }),
        lines,
    })
}

pub fn infimum(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "infimum";
    let doc = ctx.document("input", src)?;
    let rep = finite_infimum(&doc.set, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
    let mut lines = vec![format!("{} members of dimension {}", doc.set.len(), doc.dim())];
    let mut v = json!({ "exists": rep.exists });
    match (&rep.infimum, rep.minimizing_index) {
        (Some(inf), Some(i)) => {
            lines.push(format!(
                "infimum exists: member {} lies below every member",
                doc.label(i)
            ));
            lines.extend(hermitian_lines(inf, 2));
            lines.push("an infimum is the unique maximal lower bound:".into());
            v["infimum"] = hermitian_value(inf);
            v["minimizing_index"] = json!(i);
            v["minimizing_label"] = json!(doc.label(i));
            v["certificate"] = certified(CMD, inf, &doc.set, &ctx.tol, &mut lines)?;
        }
        _ => {
            lines.push("no infimum: no member lies below all the others".into());
            lines.push(
                "(Kadison anti-lattice: a finite set has an infimum only if it contains its own minimum; \
                 maximal lower bounds are then not unique, see maximal-extend)"
                    .into(),
            );
        }
    }
    Ok(Outcome { verdicts: v, lines })
}

pub fn maximal_extend(ctx: &mut Ctx, src: &Loaded, lower: Option<&Loaded>) -> CliResult<Outcome> {
    const CMD: &str = "maximal-extend";
    let doc = ctx.document("input", src)?;
    let core = |e| CliError::core(CMD, e);
    let (l, origin) = match lower {
        Some(l) => (ctx.single("lower", l, Some(doc.dim()))?, l.name.clone()),
        None => {
            let mut floor = f64::INFINITY;
            for a in doc.set.iter() {
                floor = floor.min(spectral(a).map_err(core)?.min());
            }
            (
                HermitianMatrix::scalar(doc.dim(), floor),
                format!("{floor:.6e}·I (smallest member eigenvalue)"),
            )
        }
    };
    let m = extend_to_maximal(&l, &doc.set, &ctx.tol).map_err(core)?;
    let dominates = compare(&l, &m, &ctx.tol).map_err(core)?.is_le();
    let mut lines = vec![format!("starting lower bound L = {origin}")];
    lines.extend(hermitian_lines(&l, 2));
    lines.push("maximal lower bound M ≥ L (recursive construction on the set − L):".into());
    lines.extend(hermitian_lines(&m, 2));
    lines.push(format!("  L ≤ M: {}", yes_no(dominates)));
    let cert = certified(CMD, &m, &doc.set, &ctx.tol, &mut lines)?;
    Ok(Outcome {
        verdicts: json!({
            "lower": hermitian_value(&l),
            "maximal": hermitian_value(&m),
            "dominates_lower": dominates,
            "certificate": cert,
        }),
        lines,
    })
}

pub fn commuting(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "commuting-glb";
    let doc = ctx.document("input", src)?;
    let mut lines = Vec::new();
    let mut v = json!({});
    let glb = match commuting_glb(&doc.set, &ctx.tol) {
        Ok(rep) => {
            lines.push("the members commute: greatest commuting lower bound by two routes".into());
            lines.push(format!(
                "  pairwise recursion ½(M + A − |M − A|) vs joint eigenbasis minimum: gap {:.3e}, agree: {}",
                rep.route_gap,
                yes_no(rep.routes_agree)
            ));
            v["commuting_family"] = json!(true);
            v["route_gap"] = json!(rep.route_gap);
            v["routes_agree"] = json!(rep.routes_agree);
            v["diagonalized"] = hermitian_value(&rep.diagonalized);
            rep.glb
        }
        Err(CoreError::NotCommutingFamily { i, j, commutator }) => {
            let rep = commutant_glb(&doc.set, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
            lines.push(format!(
                "members {} and {} do not commute (commutator {commutator:.3e}); using the commutant of the set",
                doc.label(i),
                doc.label(j)
            ));
            lines.push(format!(
                "  commutant dimension {}, central blocks {:?}, scalars only: {}",
                rep.commutant_dim,
                rep.block_dims,
                yes_no(rep.scalar_only)
            ));
            v["commuting_family"] = json!(false);
            v["commutant_dim"] = json!(rep.commutant_dim);
            v["block_dims"] = json!(rep.block_dims);
            v["scalar_only"] = json!(rep.scalar_only);
            rep.glb
        }
        Err(e) => return Err(CliError::core(CMD, e)),
    };
    lines.push("greatest lower bound among operators commuting with the set:".into());
    lines.extend(hermitian_lines(&glb, 2));
    v["glb"] = hermitian_value(&glb);
    let cert = certified(CMD, &glb, &doc.set, &ctx.tol, &mut lines)?;
    if !cert["is_maximal"].as_bool().unwrap_or(false) {
        lines.push("  the commuting greatest lower bound is not a maximal lower bound of the full set".into());
    }
    v["certificate"] = cert;
    Ok(Outcome { verdicts: v, lines })
}

pub fn positive_mlb(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "positive-mlb";
    let doc = ctx.document("input", src)?;
    let core = |e| CliError::core(CMD, e);
    let m = positive_maximal_lb(&doc.set, &ctx.tol).map_err(core)?;
    let psd = is_psd(&m, &ctx.tol).map_err(core)?;
    let mut lines = vec!["maximal lower bound by recursive eigenvector reduction:".into()];
    lines.extend(hermitian_lines(&m, 2));
    lines.push(format!("  positive semidefinite: {}", yes_no(psd)));
    let cert = certified(CMD, &m, &doc.set, &ctx.tol, &mut lines)?;
    Ok(Outcome {
        verdicts: json!({ "maximal": hermitian_value(&m), "is_psd": psd, "certificate": cert }),
        lines,
    })
}

pub fn positive_glb(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "positive-glb";
    let doc = ctx.document("input", src)?;
    let rep = positive_glb_family(&doc.set, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
    let mut lines = vec![
        format!("common range K = ∩ R(A_j): dimension {}", rep.k_subspace.dim()),
        "parallel sum S of the family (R(S) = K):".into(),
    ];
    lines.extend(hermitian_lines(&rep.s_parallel, 2));
    lines.push("Ando limits [S]A_j:".into());
    for (j, t) in rep.tilde_set.iter().enumerate() {
        lines.push(format!("  [S]{}:", doc.label(j)));
        lines.extend(hermitian_lines(t, 4));
    }
    let mut v = json!({
        "k_dim": rep.k_subspace.dim(),
        "s_parallel": hermitian_value(&rep.s_parallel),
        "tilde_set": rep.tilde_set.iter().map(hermitian_value).collect::<Vec<_>>(),
        "exists": rep.exists,
        "glb_supported_on_k": rep.glb_supported_on_k,
    });
    match (&rep.glb, rep.minimizing_index) {
        (Some(g), Some(i)) => {
            lines.push(format!(
                "greatest positive lower bound exists: [S]{} is the least Ando limit",
                doc.label(i)
            ));
            lines.extend(hermitian_lines(g, 2));
            lines.push(format!("  supported on K: {}", yes_no(rep.glb_supported_on_k)));
            v["glb"] = hermitian_value(g);
            v["minimizing_index"] = json!(i);
            v["certificate"] = certified(CMD, g, &doc.set, &ctx.tol, &mut lines)?;
        }
        _ => lines.push("no greatest positive lower bound: the Ando limits [S]A_j have no least element".into()),
    }
    Ok(Outcome { verdicts: v, lines })
}

/// A matrix option: JSON rows (numbers or `[re, im]` pairs), or a number.
fn matrix_option(src: &Loaded, ctx: &mut Ctx, role: &str) -> CliResult<Result<CMatrix<f64>, f64>> {
    ctx.digest.add(role, src.text.as_bytes());
    let v = parse_json(&src.text, &src.name)?;
    if let Some(c) = v.as_f64() {
        return Ok(Err(c));
    }
    Ok(Ok(parse_general_matrix(&v, FieldTag::Complex, &src.name, "")?))
}

pub fn mlb_mt_cmd(ctx: &mut Ctx, src: &Loaded, t: Option<&Loaded>) -> CliResult<Outcome> {
    const CMD: &str = "mlb-mt";
    let doc = ctx.document("input", src)?;
    arity(&doc, &src.name, 2, CMD)?;
    let n = doc.dim();
    let t = match t {
        None => CMatrix::identity(n, n),
        Some(t_src) => match matrix_option(t_src, ctx, "t")? {
            Err(c) => CMatrix::identity(n, n) * Complex::new(c, 0.0),
            Ok(m) if m.shape() == (n, n) => m,
            Ok(m) => {
                return Err(validation(
                    &t_src.name,
                    "",
                    format!("T is {}x{}, expected {n}x{n}", m.nrows(), m.ncols()),
                ))
            }
        },
    };
    let (a, b) = (&doc.set.members()[0], &doc.set.members()[1]);
    let m = mlb_mt(a, b, &t, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
    let mut lines = vec!["congruence T:".into()];
    lines.extend(matrix_lines(&t, 2));
    lines.push(format!(
        "M_T = ½(A + B − Tᴴ|T^-ᴴ(A − B)T^-1|T) with A = {}, B = {}:",
        doc.label(0),
        doc.label(1)
    ));
    lines.extend(hermitian_lines(&m, 2));
    let cert = certified(CMD, &m, &doc.set, &ctx.tol, &mut lines)?;
    Ok(Outcome {
        verdicts: json!({ "t": general_value(&t), "maximal": hermitian_value(&m), "certificate": cert }),
        lines,
    })
}

pub fn stott(ctx: &mut Ctx, p: usize, q: usize, x: Option<&Loaded>, m: Option<&Loaded>) -> CliResult<Outcome> {
    const CMD: &str = "stott";
    if p == 0 || q == 0 {
        return Err(CliError::Usage("--p and --q must be positive".into()));
    }
    ctx.digest
        .add("p", &(p as u64).to_le_bytes())
        .add("q", &(q as u64).to_le_bytes());
    let core = |e| CliError::core(CMD, e);
    let pair = MatrixSet::new(vec![signature_matrix(p, q), HermitianMatrix::zeros(p + q)]).map_err(core)?;
    let mut lines = vec![format!("J = diag(I_{p}, −I_{q}); maximal lower bounds of {{J, 0}}")];
    let mut v = json!({ "p": p, "q": q });
    match (x, m) {
        (Some(x_src), _) => {
            let x = match matrix_option(x_src, ctx, "x")? {
                Err(c) => CMatrix::from_element(p, q, Complex::new(c, 0.0)),
                Ok(x) if x.shape() == (p, q) => x,
                Ok(x) => {
                    return Err(validation(
                        &x_src.name,
                        "",
                        format!("X is {}x{}, expected {p}x{q}", x.nrows(), x.ncols()),
                    ))
                }
            };
            let param = StottParam::new(x.clone()).map_err(core)?;
            let (sx, mx) = stott_mx(&param, &ctx.tol).map_err(core)?;
            let back = stott_recover_x(&mx, p, q, &ctx.tol).map_err(core)?;
            let err = (&back.x - &x).iter().map(|z| z.norm()).fold(0.0, f64::max);
            lines.push("Stott parametrization, X ↦ M(X) = J − S(X):".into());
            lines.extend(matrix_lines(&x, 2));
            lines.push("M(X):".into());
            lines.extend(hermitian_lines(&mx, 2));
            lines.push(format!(
                "  round trip through the angular operator: max |X − X'| = {err:.3e}"
            ));
            v["x"] = general_value(&x);
            v["s"] = hermitian_value(&sx);
            v["m"] = hermitian_value(&mx);
            v["roundtrip_error"] = json!(err);
            v["certificate"] = certified(CMD, &mx, &pair, &ctx.tol, &mut lines)?;
        }
        (None, Some(m_src)) => {
            let mm = ctx.single("m", m_src, Some(p + q))?;
            let param = stott_recover_x(&mm, p, q, &ctx.tol).map_err(core)?;
            let (_, again) = stott_mx(&param, &ctx.tol).map_err(core)?;
            let err = again.distance(&mm);
            lines.push("angular operator of N(M) gives the Stott parameter X:".into());
            lines.extend(matrix_lines(&param.x, 2));
            lines.push(format!("  |M(X) − M| = {err:.3e}"));
            v["x"] = general_value(&param.x);
            v["m"] = hermitian_value(&mm);
            v["roundtrip_error"] = json!(err);
            v["certificate"] = certified(CMD, &mm, &pair, &ctx.tol, &mut lines)?;
        }
        (None, None) => return Err(CliError::Usage("stott needs --x or --m".into())),
    }
    Ok(Outcome { verdicts: v, lines })
}

fn parse_vector(src: &Loaded, n: usize) -> CliResult<CVector<f64>> {
    let v = parse_json(&src.text, &src.name)?;
    let wrapped = match &v {
        serde_json::Value::Array(items) => json!([items.clone()]),
        _ => {
            return Err(CliError::Parse {
                source_name: src.name.clone(),
                locator: "".into(),
                message: "expected a JSON array".into(),
            })
        }
    };
    let row = parse_general_matrix(&wrapped, FieldTag::Complex, &src.name, "")?;
    if row.ncols() != n {
        return Err(validation(
            &src.name,
            "",
            format!("vector has {} entries, expected {n}", row.ncols()),
        ));
    }
    Ok(row.row(0).transpose())
}

pub fn constrained(ctx: &mut Ctx, src: &Loaded, u_src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "constrained";
    let doc = ctx.document("input", src)?;
    ctx.digest.add("u", u_src.text.as_bytes());
    let u = parse_vector(u_src, doc.dim())?;
    let core = |e| CliError::core(CMD, e);
    let c = constrained_at_vector(&doc.set, &u, &ctx.tol).map_err(core)?;
    let attaining: Vec<String> = c.attaining.iter().map(|&i| doc.label(i)).collect();
    let mut lines = vec![
        format!("α = min (A u, u) = {:.12}", c.alpha),
        format!("attained by {}", attaining.join(", ")),
        format!(
            "attaining members agree on u (Au = Bu), needed for a lower bound with (Lu, u) = α: {}",
            yes_no(c.condition_holds)
        ),
    ];
    let mut v = json!({
        "alpha": c.alpha,
        "attaining": c.attaining,
        "condition_holds": c.condition_holds,
    });
    if let Some(r) = &c.reduced_set {
        lines.push(format!(
            "reduced set on u⊥ (Schur complement form): {} members",
            r.len()
        ));
        v["reduced_set"] = json!(r.iter().map(hermitian_value).collect::<Vec<_>>());
    }
    match maximal_in_lu(&doc.set, &u, &ctx.tol).map_err(core)? {
        None => {
            lines.push("no lower bound L satisfies (Lu, u) = α: the constrained set is empty".into());
            v["constrained_empty"] = json!(true);
        }
        Some(m) => {
            let value = m.quadratic_form(&u.normalize());
            lines.push(format!(
                "maximal element of the constrained set ((Mu, u) = {value:.12}):"
            ));
            lines.extend(hermitian_lines(&m, 2));
            v["constrained_empty"] = json!(false);
            v["maximal"] = hermitian_value(&m);
            v["maximal_uu"] = json!(value);
            v["certificate"] = certified(CMD, &m, &doc.set, &ctx.tol, &mut lines)?;
        }
    }
    Ok(Outcome { verdicts: v, lines })
}

pub fn certify(ctx: &mut Ctx, src: &Loaded, cand: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "certify";
    let doc = ctx.document("input", src)?;
    let m = ctx.single("candidate", cand, Some(doc.dim()))?;
    let mut lines = vec!["candidate M:".into()];
    lines.extend(hermitian_lines(&m, 2));
    let cert = certified(CMD, &m, &doc.set, &ctx.tol, &mut lines)?;
    Ok(Outcome {
        verdicts: json!({ "candidate": hermitian_value(&m), "certificate": cert }),
        lines,
    })
}

pub fn parallel(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "parallel-sum";
    let doc = ctx.document("input", src)?;
    let core = |e| CliError::core(CMD, e);
    let s = parallel_sum_family(&doc.set, &ctx.tol).map_err(core)?;
    let (range, _) = range_nullspace(&s, &ctx.tol).map_err(core)?;
    let ranges = doc
        .set
        .iter()
        .map(|a| range_nullspace(a, &ctx.tol).map(|(r, _)| r))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core)?;
    let common = subspace_intersect(&ranges, &ctx.tol).map_err(core)?;
    let mut lines = vec!["parallel sum S = A_1 : A_2 : … (A : B = A(A + B)^#B):".into()];
    lines.extend(hermitian_lines(&s, 2));
    lines.push(format!(
        "  rank S = {}, dim ∩ R(A_j) = {} (range of a parallel sum is the intersection of ranges)",
        range.dim(),
        common.dim()
    ));
    let mut v = json!({
        "parallel_sum": hermitian_value(&s),
        "rank": range.dim(),
        "range_intersection_dim": common.dim(),
    });
    v["certificate"] = certified(CMD, &s, &doc.set, &ctx.tol, &mut lines)?;
    Ok(Outcome { verdicts: v, lines })
}

pub fn ando(ctx: &mut Ctx, src: &Loaded) -> CliResult<Outcome> {
    const CMD: &str = "ando";
    let doc = ctx.document("input", src)?;
    arity(&doc, &src.name, 2, CMD)?;
    let (a, b) = (&doc.set.members()[0], &doc.set.members()[1]);
    let r = two_op_positive_glb(a, b, &ctx.tol).map_err(|e| CliError::core(CMD, e))?;
    let (la, lb) = (doc.label(0), doc.label(1));
    let mut lines = vec![format!("Ando limit [{la}]{lb} = lim (m{la}):{lb}:")];
    lines.extend(hermitian_lines(&r.ando_ab, 2));
    lines.push(format!("Ando limit [{lb}]{la}:"));
    lines.extend(hermitian_lines(&r.ando_ba, 2));
    lines.push(format!("relation of [{la}]{lb} to [{lb}]{la}: {}", r.comparability));
    let mut v = json!({
        "ando_ab": hermitian_value(&r.ando_ab),
        "ando_ba": hermitian_value(&r.ando_ba),
        "relation": relation_str(r.comparability),
        "exists": r.exists,
    });
    match &r.glb {
        Some(g) => {
            lines.push("greatest positive lower bound (the smaller Ando limit):".into());
            lines.extend(hermitian_lines(g, 2));
            v["glb"] = hermitian_value(g);
            v["certificate"] = certified(CMD, g, &doc.set, &ctx.tol, &mut lines)?;
        }
        None => lines.push("the Ando limits are incomparable: no greatest positive lower bound".into()),
    }
    Ok(Outcome { verdicts: v, lines })
}
