//! Command implementations behind the `burnside` binary. Each `cmd_*`
//! function returns a [`Report`]: a JSON payload plus a plain-text rendering.

use std::fs;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use burnside_core::burnside::{idempotents, ring_multiply, trace_categorical, trace_direct, BurnsideElement, SpanMorphism};
use burnside_core::arith::{next_prime_after, valuation};
use burnside_core::ellcurve::{
    extension_count, for_each_curve_counted, obstruction_certificate, point_count, point_count_naive, supported_fields_up_to,
    FiniteField, WeierstrassCurve, ENUMERATION_BOUND,
};
use burnside_core::groups::{FiniteGroup, Group};
use burnside_core::gw::{realize_in_burnside, FieldDescriptor, GWElement};
use burnside_core::json::{morphism_to_json, parse_morphism_str};
use burnside_core::linrep::{
    character_of_multiplicities, construct_e_i, cyclic_injectivity_check, has_integer_traces, permutation_character,
    permutation_counterexample_search, theta, theta_of_idempotent, MultiplicityVector,
};
use burnside_core::random::{random_endomorphism, random_gset};
use burnside_core::scalar::{format_rational, parse_rational, CoeffRing, Rational};
use burnside_core::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub payload: Value,
    pub text: String,
}

impl Report {
    fn new(command: &str, payload: Value, text: String) -> Self {
        Report { command: command.to_string(), payload, text }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&json!({ "command": self.command, "payload": self.payload }))
            .expect("report serializes")
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn class_labels(group: &Group) -> Result<Vec<Value>> {
    let classes = group.subgroup_conjugacy_classes()?;
    let sizes = group.subgroup_class_sizes()?;
    Ok(classes
        .iter()
        .zip(sizes)
        .enumerate()
        .map(|(k, (h, &n))| json!({ "index": k, "label": format!("G/H{k}"), "subgroup_order": h.order(), "conjugates": n }))
        .collect())
}

fn render_element(x: &BurnsideElement<i64>) -> String {
    let mut out = String::new();
    for (k, &c) in x.coeffs().iter().enumerate().filter(|(_, c)| **c != 0) {
        let sign = match (out.is_empty(), c < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let mag = c.unsigned_abs();
        out += &if mag == 1 { format!("{sign}[G/H{k}]") } else { format!("{sign}{mag}[G/H{k}]") };
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn cmd_burnside_table(group: &Group) -> Result<Report> {
    let n = group.num_subgroup_classes()?;
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let a = BurnsideElement::<i64>::basis(group, i)?;
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(ring_multiply(&a, &BurnsideElement::basis(group, j)?)?.coeffs().to_vec());
        }
        table.push(row);
    }
    let marks = group.table_of_marks()?.to_vec();
    let classes = class_labels(group)?;
    let mut text = format!("Burnside ring of {} (order {}), {n} subgroup classes\n", group.spec(), group.order());
    for (k, c) in classes.iter().enumerate() {
        text += &format!("  G/H{k}: |H| = {}, {} conjugate(s)\n", c["subgroup_order"], c["conjugates"]);
    }
    text += "products:\n";
    for (i, row) in table.iter().enumerate() {
        for (j, prod) in row.iter().enumerate().skip(i) {
            text += &format!("  [G/H{i}]·[G/H{j}] = {}\n", render_element(&BurnsideElement::new(group, prod.clone())?));
        }
    }
    text += "table of marks (row H, column G/K, entry |(G/K)^H|):\n";
    for row in &marks {
        text += &format!("  {}\n", join(row, " "));
    }
    let payload = json!({
        "group": group.spec(),
        "order": group.order(),
        "classes": classes,
        "multiplication": table,
        "marks": marks,
    });
    Ok(Report::new("burnside-table", payload, text))
}

pub fn cmd_idempotents(group: &Group) -> Result<Report> {
    let es = idempotents(group)?;
    let mut items = Vec::new();
    let mut text = format!("{} idempotent(s) of A({})\n", es.len(), group.spec());
    for e in &es {
        let th = theta_of_idempotent(e)?;
        let class = th.classify();
        text += &format!("  {}  marks [{}]  θ = ({}) {}\n", render_element(e), join(&e.marks()?, ","), join(&th.character_strings(), ","), class.as_str());
        items.push(json!({
            "coeffs": e.coeffs(),
            "marks": e.marks()?,
            "theta": th.character_strings(),
            "theta_class": class.as_str(),
        }));
    }
    let all_zero_or_trivial = items.iter().all(|i| i["theta_class"] != "other");
    Ok(Report::new("idempotents", json!({ "group": group.spec(), "idempotents": items, "theta_zero_or_trivial": all_zero_or_trivial }), text))
}

fn rational_coeffs(x: &BurnsideElement<Rational>) -> Vec<String> {
    x.coeffs().iter().map(format_rational).collect()
}

fn trace_summary(f: &SpanMorphism<Rational>) -> Result<Value> {
    let d = trace_direct(f)?;
    let c = trace_categorical(f)?;
    let th = theta(&d, CoeffRing::Rationals)?;
    Ok(json!({
        "direct": rational_coeffs(&d),
        "categorical": rational_coeffs(&c),
        "agree": d == c,
        "theta": th.character_strings(),
    }))
}

pub fn cmd_trace_json(doc: &str, default_group: Option<&Group>) -> Result<Report> {
    let f = parse_morphism_str(doc, default_group)?;
    if !f.is_endomorphism() {
        return Err(Error::NotAnEndomorphism);
    }
    let summary = trace_summary(&f)?;
    let text = format!(
        "trace over {}: direct ({}) categorical ({}) agree: {}\nθ over Q: ({})\n",
        f.group().spec(),
        join(&strings(&summary["direct"]), ", "),
        join(&strings(&summary["categorical"]), ", "),
        summary["agree"],
        join(&strings(&summary["theta"]), ", "),
    );
    Ok(Report::new("trace", json!({ "group": f.group().spec(), "morphism": morphism_to_json(&f), "trace": summary }), text))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string)).collect()).unwrap_or_default()
}

/// Random endomorphisms on random G-sets of size ≤ 4, apex ≤ 8.
pub fn cmd_trace_random(group: &Group, count: usize, seed: u64) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut disagreements = Vec::new();
    for i in 0..count {
        let t = random_gset(group, &mut rng, 4)?;
        let f = random_endomorphism(&t, &mut rng, 3, 8)?;
        if trace_direct(&f)? != trace_categorical(&f)? {
            disagreements.push(json!({ "index": i, "morphism": morphism_to_json(&f) }));
        }
    }
    let text = format!("{count} random endomorphism(s) over {} (seed {seed}): {} disagreement(s)\n", group.spec(), disagreements.len());
    let payload = json!({ "group": group.spec(), "seed": seed, "samples": count, "all_agree": disagreements.is_empty(), "disagreements": disagreements });
    Ok(Report::new("trace", payload, text))
}

pub fn cmd_theta(group: &Group, element: &str, ring: CoeffRing) -> Result<Report> {
    let coeffs: Vec<Rational> = element.split(',').map(|s| parse_rational(s.trim())).collect::<Result<_>>()?;
    let x = BurnsideElement::new(group, coeffs)?;
    let th = theta(&x, ring)?;
    let reps = group.class_representatives();
    let text = format!(
        "θ({}) over {ring}: ({})  [{}]\n",
        join(&rational_coeffs(&x), ","),
        join(&th.character_strings(), ", "),
        th.classify().as_str()
    );
    let payload = json!({
        "group": group.spec(),
        "ring": ring.to_string(),
        "element": rational_coeffs(&x),
        "class_representatives": reps.iter().map(|&g| group.element(g).to_string()).collect::<Vec<_>>(),
        "character": th.character_strings(),
        "class": th.classify().as_str(),
    });
    Ok(Report::new("theta", payload, text))
}

pub fn cmd_rep_counterexample(group: &Group, max_size: usize) -> Result<Report> {
    let found = permutation_counterexample_search(group, max_size)?;
    let Some((a, b)) = found else {
        let text = format!("no pair of non-isomorphic {}-sets of size ≤ {max_size} with equal characters\n", group.spec());
        return Ok(Report::new("rep-counterexample", json!({ "group": group.spec(), "max_size": max_size, "found": false }), text));
    };
    let describe = |t: &burnside_core::gsets::GSet| -> Result<Value> {
        Ok(json!({
            "size": t.size(),
            "orbit_counts": t.orbit_type()?.counts,
            "character": permutation_character(t, CoeffRing::Rationals).character_strings(),
        }))
    };
    let (da, db) = (describe(&a)?, describe(&b)?);
    let text = format!(
        "non-isomorphic {}-sets of size {} with character ({}):\n  orbit counts {}\n  orbit counts {}\n",
        group.spec(),
        a.size(),
        join(&strings(&da["character"]), ","),
        da["orbit_counts"],
        db["orbit_counts"],
    );
    Ok(Report::new("rep-counterexample", json!({ "group": group.spec(), "max_size": max_size, "found": true, "pair": [da, db] }), text))
}

pub fn cmd_cyclic_lemma(n: usize, max_size: usize, multiplicities: Option<&str>) -> Result<Report> {
    if let Some(ms) = multiplicities {
        let m: Vec<u64> = ms
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("invalid multiplicity list '{ms}'"))))
            .collect::<Result<_>>()?;
        let m = MultiplicityVector::new(m)?;
        if !has_integer_traces(&m) {
            return Err(Error::Precondition("multiplicities must depend only on the order of the eigenvalue".into()));
        }
        let (e, i) = construct_e_i(&m)?;
        let chi = character_of_multiplicities(&m)?;
        let text = format!(
            "V with multiplicities ({}) over Z/{}: V ⊕ θE ≅ θI with E orbit sizes [{}], I orbit sizes [{}]\n",
            join(&m.m, ","),
            m.n,
            join(&e, ","),
            join(&i, ",")
        );
        let payload = json!({ "n": m.n, "multiplicities": m.m, "character": chi, "e_orbit_sizes": e, "i_orbit_sizes": i });
        return Ok(Report::new("cyclic-lemma", payload, text));
    }
    let ok = cyclic_injectivity_check(n, max_size)?;
    let text = format!("Z/{n}-sets of size ≤ {max_size}: equal characters imply isomorphic: {ok}\n");
    Ok(Report::new("cyclic-lemma", json!({ "n": n, "max_size": max_size, "injective": ok }), text))
}

pub fn cmd_gw(form: &str, field: FieldDescriptor) -> Result<Report> {
    let x = GWElement::parse_diagonal(field, form)?;
    let mut payload = json!({ "field": field.to_string(), "form": form, "normal_form": x.normal_form(), "rank": x.rank() });
    let mut text = format!("{form} over {field}: {}\n", x.normal_form());
    match field {
        FieldDescriptor::Reals => {
            let (r, s) = x.rank_signature()?;
            let b = realize_in_burnside(&x)?;
            payload["signature"] = json!(s);
            payload["burnside_cyclic2"] = json!(b.coeffs());
            payload["marks"] = json!(b.marks()?);
            text += &format!("  rank {r}, signature {s}\n  in A(Z/2): {}\n", render_element(&b));
        }
        FieldDescriptor::PrimeField(_) => {
            let (r, d) = x.rank_discriminant()?;
            payload["discriminant"] = json!(if d == 1 { "square" } else { "nonsquare" });
            text += &format!("  rank {r}, discriminant {}\n", if d == 1 { "square" } else { "nonsquare" });
        }
    }
    Ok(Report::new("gw", payload, text))
}

pub fn parse_curve(field: &str, curve: &str) -> Result<WeierstrassCurve> {
    WeierstrassCurve::parse(FiniteField::parse(field)?, curve)
}

pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',').map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("invalid prime list '{s}'")))).collect()
}

pub fn cmd_ec_count(e: &WeierstrassCurve, r: u32, naive: bool) -> Result<Report> {
    let fd = point_count(e)?;
    let mut ext = Vec::new();
    for k in 1..=r {
        ext.push(extension_count(&fd, k)?.to_string());
    }
    let mut payload = json!({
        "curve": e.to_string(),
        "l": fd.l,
        "count": fd.count,
        "a": fd.a,
        "hasse": fd.satisfies_hasse(),
        "extension_counts": ext,
    });
    let mut text = format!("{e}\n  |E| = {}, a = {}, Hasse a² ≤ 4ℓ: {}\n", fd.count, fd.a, fd.satisfies_hasse());
    if r > 1 {
        text += &format!("  |E(F_ℓ^r)| for r = 1..{r}: {}\n", ext.join(", "));
    }
    if naive {
        let agrees = point_count_naive(e)? == fd;
        payload["naive_agrees"] = json!(agrees);
        text += &format!("  naive enumeration agrees: {agrees}\n");
    }
    Ok(Report::new("ec-count", payload, text))
}

fn obstruction_narrative(cert: &burnside_core::ellcurve::ObstructionCertificate) -> String {
    let ns: Vec<String> = cert.per_prime.iter().map(|w| format!("n ≥ {} (p = {})", w.min_n, w.p)).collect();
    format!(
        "χ_{{𝔸¹}}(E) = 0 (Hoyois, cited; assumed, not computed) but θ_n χ would be ≠ 0 in ℤ/pⁿ for {}, since 1 + ℓ − a = {} ≢ 0",
        if ns.is_empty() { "no requested prime".to_string() } else { ns.join(", ") },
        cert.gap
    )
}

pub fn cmd_obstruction(e: &WeierstrassCurve, primes: &[u64]) -> Result<Report> {
    let cert = obstruction_certificate(e, primes)?;
    let narrative = obstruction_narrative(&cert);
    let text = format!(
        "{}\n  count {}, a {}, gap {}, smallest prime above the count {}\n{}\n",
        cert.curve,
        cert.count,
        cert.a,
        cert.gap,
        cert.lemma36_prime,
        cert.per_prime.iter().map(|w| format!("  p = {}: minimal n = {}\n", w.p, w.min_n)).collect::<String>() + &narrative
    );
    let mut payload = serde_json::to_value(&cert).expect("certificate serializes");
    payload["assumption"] = json!("the 𝔸¹-Euler characteristic of an elliptic curve is 0 (cited, not computed)");
    payload["narrative"] = json!(narrative);
    Ok(Report::new("obstruction", payload, text))
}

/// Exhaustive certificate scan over every supported field of size `≤ lmax`.
pub fn cmd_ec_scan(command: &str, lmax: u64, primes: &[u64]) -> Result<Report> {
    if lmax > ENUMERATION_BOUND {
        return Err(Error::FieldTooLarge { size: lmax, bound: ENUMERATION_BOUND });
    }
    let mut fields = Vec::new();
    let mut all_ok = true;
    let mut text = format!("{:<16} {:>9} {:>6} {:>6} {:>8} {:>8}  checks\n", "field", "curves", "min#", "max#", "max|a|", "min gap");
    for field in supported_fields_up_to(lmax)? {
        let l = field.size();
        let usable: Vec<u64> = primes.iter().copied().filter(|p| l % p != 0).collect();
        let (mut curves, mut min_count, mut max_count, mut max_abs_a, mut min_gap) = (0u64, u64::MAX, 0u64, 0i64, u64::MAX);
        let (mut hasse, mut gap_positive, mut coprime_next_prime) = (true, true, true);
        let mut max_min_n = vec![0u32; usable.len()];
        for_each_curve_counted(field, |_, fd| {
            let gap = (1 + l as i64 - fd.a).max(0) as u64;
            curves += 1;
            min_count = min_count.min(fd.count);
            max_count = max_count.max(fd.count);
            max_abs_a = max_abs_a.max(fd.a.abs());
            min_gap = min_gap.min(gap);
            hasse &= fd.satisfies_hasse();
            gap_positive &= gap > 0;
            coprime_next_prime &= fd.count % next_prime_after(fd.count) != 0;
            for (m, &p) in max_min_n.iter_mut().zip(&usable) {
                *m = (*m).max(valuation(gap, p) + 1);
            }
        })?;
        let ok = hasse && gap_positive && coprime_next_prime && curves > 0;
        all_ok &= ok;
        text += &format!(
            "{:<16} {curves:>9} {min_count:>6} {max_count:>6} {max_abs_a:>8} {min_gap:>8}  {}\n",
            field.to_string(),
            if ok { "ok" } else { "FAILED" }
        );
        fields.push(json!({
            "field": field.to_string(),
            "l": l,
            "curves": curves,
            "min_count": min_count,
            "max_count": max_count,
            "max_abs_a": max_abs_a,
            "min_gap": min_gap,
            "hasse": hasse,
            "gap_positive": gap_positive,
            "count_prime_to_next_prime": coprime_next_prime,
            "max_min_n": usable.iter().zip(&max_min_n).map(|(p, n)| json!({ "p": p, "max_min_n": n })).collect::<Vec<_>>(),
        }));
    }
    text += &format!("all checks passed: {all_ok}\n");
    Ok(Report::new(command, json!({ "lmax": lmax, "primes": primes, "fields": fields, "all_ok": all_ok }), text))
}

#[derive(Parser, Debug)]
#[command(name = "burnside", version, about = "Burnside rings, span traces, permutation representations, Grothendieck-Witt classes and elliptic-curve certificates")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Group spec: cyclic:n, klein4, sym:n, alt:n, dihedral:n or perm:<cycles>;...;n=<degree>.
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis, multiplication table and table of marks of A(G).
    BurnsideTable,
    /// All idempotents of A(G) with θ over Q.
    Idempotents,
    /// Trace of an endomorphism span, by both implementations.
    Trace {
        /// JSON file holding a span or a morphism.
        #[arg(long, conflicts_with = "random")]
        span: Option<String>,
        /// Check this many random endomorphisms instead.
        #[arg(long)]
        random: Option<usize>,
    },
    /// θ of a Burnside-ring element given by coefficients in class order.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Q, Fp (e.g. F7), or Z/p^n.
        #[arg(long, default_value = "Q")]
        ring: String,
    },
    /// Smallest non-isomorphic G-sets with equal permutation characters (default group klein4).
    RepCounterexample {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Injectivity of θ for Z/n-sets, or the E, I construction for a multiplicity vector.
    CyclicLemma {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Comma-separated eigenvalue multiplicities m_0,…,m_{n-1}.
        #[arg(long)]
        multiplicities: Option<String>,
    },
    /// Normal form of a diagonal form such as "1,-1,2".
    Gw {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// R, or Fp:p / Fp for an odd prime p.
        #[arg(long, default_value = "R")]
        field: String,
    },
    /// Point count and Frobenius trace of a curve.
    EcCount {
        /// Field: a prime, 2^d, or 2^d:poly=<modulus>.
        #[arg(long)]
        field: String,
        /// Coefficients a1,a2,a3,a4,a6.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Also report counts over extensions of degree up to r.
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Cross-check against naive enumeration.
        #[arg(long)]
        naive: bool,
    },
    /// Exhaustive scan of all curves over fields of size ≤ lmax.
    EcScan {
        #[arg(long, default_value_t = 13)]
        lmax: u64,
        #[arg(long, default_value = "3")]
        primes: String,
    },
    /// Obstruction certificate for one curve, or a scan with --lmax.
    Obstruction {
        #[arg(long, required_unless_present = "lmax")]
        field: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "lmax")]
        curve: Option<String>,
        #[arg(long, default_value = "3")]
        primes: String,
        #[arg(long, conflicts_with_all = ["field", "curve"])]
        lmax: Option<u64>,
    },
}

fn require_group(spec: &Option<String>, fallback: Option<&str>) -> Result<Group> {
    match spec.as_deref().or(fallback) {
        Some(s) => FiniteGroup::from_spec(s),
        None => Err(Error::Parse("this command needs --group".into())),
    }
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::BurnsideTable => cmd_burnside_table(&require_group(&cli.group, None)?),
        Command::Idempotents => cmd_idempotents(&require_group(&cli.group, None)?),
        Command::Trace { span: Some(path), .. } => {
            let doc = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let group = cli.group.as_deref().map(FiniteGroup::from_spec).transpose()?;
            cmd_trace_json(&doc, group.as_ref())
        }
        Command::Trace { random: Some(n), .. } => cmd_trace_random(&require_group(&cli.group, None)?, *n, cli.seed),
        Command::Trace { .. } => Err(Error::Parse("trace needs --span FILE or --random N".into())),
        Command::Theta { element, ring } => cmd_theta(&require_group(&cli.group, None)?, element, CoeffRing::parse(ring)?),
        Command::RepCounterexample { max_size } => cmd_rep_counterexample(&require_group(&cli.group, Some("klein4"))?, *max_size),
        Command::CyclicLemma { n, max_size, multiplicities } => cmd_cyclic_lemma(*n, *max_size, multiplicities.as_deref()),
        Command::Gw { form, field } => cmd_gw(form, FieldDescriptor::parse(field)?),
        Command::EcCount { field, curve, r, naive } => cmd_ec_count(&parse_curve(field, curve)?, *r, *naive),
        Command::EcScan { lmax, primes } => cmd_ec_scan("ec-scan", *lmax, &parse_primes(primes)?),
        Command::Obstruction { lmax: Some(lmax), primes, .. } => cmd_ec_scan("obstruction", *lmax, &parse_primes(primes)?),
        Command::Obstruction { field, curve, primes, .. } => {
            let (Some(field), Some(curve)) = (field, curve) else {
                return Err(Error::Parse("obstruction needs --field and --curve, or --lmax".into()));
            };
            cmd_obstruction(&parse_curve(field, curve)?, &parse_primes(primes)?)
        }
    }
}

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes: 0 success, 1 usage error, 2 domain error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json { report.to_json() + "\n" } else { report.text };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: if e.is_usage() { 1 } else { 2 }, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
