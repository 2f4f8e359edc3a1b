use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use parkspace::group::GroupLabel;

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "parkspace", version, about = "Verify parking-space identities for finite reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Group label such as A3, B4, D4, I2:7, G2, H3, F4.
    #[arg(long, global = true)]
    pub group: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Order at which q-series are truncated.
    #[arg(long, global = true)]
    pub truncation: Option<usize>,

    /// Permit the large groups H4 and E6.
    #[arg(long, global = true)]
    pub allow_stretch: bool,

    /// Fuss parameter, or the modulus of the finite torus.
    #[arg(long, global = true)]
    pub p: Option<u64>,

    /// Kirkman index.
    #[arg(long, global = true)]
    pub k: Option<usize>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Compare the noncrossing and algebraic W × C characters.
    WeakConjecture,
    /// Cyclic sieving for noncrossing flats under c.
    Csp,
    /// q-Kirkman polynomials from the intertwiner against closed forms.
    Qkirkman,
    /// Narayana and Kirkman numbers and exterior-power multiplicities.
    Narayana,
    /// The explicit bijection Park^NC → V^Θ in types B and D.
    Bijection,
    /// The type A count (n+1)^{r_d(u)} three ways.
    EquivariantCount,
    /// Shi regions and their nonnesting labels.
    Shi,
    /// W-orbits on the finite torus Q/pQ.
    Torus,
    /// Fuss–Catalan number and h-polynomial at parameter p.
    Fuss,
    /// The near-boundary product formulas for τ̃.
    NearBoundary,
    /// Identity suite: Orlik–Solomon, Etingof sum, det once, 2|T| = hn.
    Invariants,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::WeakConjecture => "weak-conjecture",
            Command::Csp => "csp",
            Command::Qkirkman => "qkirkman",
            Command::Narayana => "narayana",
            Command::Bijection => "bijection",
            Command::EquivariantCount => "equivariant-count",
            Command::Shi => "shi",
            Command::Torus => "torus",
            Command::Fuss => "fuss",
            Command::NearBoundary => "near-boundary",
            Command::Invariants => "invariants",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

/// A parsed invocation with the group label in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub group: String,
    pub format: Format,
    pub threads: Option<usize>,
    pub truncation: Option<usize>,
    pub allow_stretch: bool,
    pub p: Option<u64>,
    pub k: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Option<Self> {
        let raw = cli.group?;
        // a label that does not parse is kept as typed so the error can name it
        let group = raw.parse::<GroupLabel>().map(|l| l.to_string()).unwrap_or(raw);
        Some(RunConfig {
            command: cli.command,
            group,
            format: cli.format,
            threads: cli.threads,
            truncation: cli.truncation,
            allow_stretch: cli.allow_stretch,
            p: cli.p,
            k: cli.k,
            seed: cli.seed,
        })
    }

    pub fn parse_from<I, T>(args: I) -> Result<Option<Self>, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        Cli::try_parse_from(args).map(Self::from_cli)
    }

    /// The argument list that reproduces this configuration.
    pub fn args(&self) -> Vec<String> {
        let mut v = vec![self.command.name().to_string(), "--group".into(), self.group.clone(), "--format".into()];
        v.push(match self.format {
            Format::Json => "json".into(),
            Format::Markdown => "markdown".into(),
        });
        if let Some(t) = self.threads {
            v.extend(["--threads".into(), t.to_string()]);
        }
        if let Some(t) = self.truncation {
            v.extend(["--truncation".into(), t.to_string()]);
        }
        if self.allow_stretch {
            v.push("--allow-stretch".into());
        }
        if let Some(p) = self.p {
            v.extend(["--p".into(), p.to_string()]);
        }
        if let Some(k) = self.k {
            v.extend(["--k".into(), k.to_string()]);
        }
        v.extend(["--seed".into(), self.seed.to_string()]);
        v
    }
}

impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parkspace {}", self.args().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RunConfig {
        RunConfig::parse_from(s.split_whitespace()).unwrap().unwrap()
    }

    #[test]
    fn canonical_string_round_trips() {
        for s in [
            "parkspace csp --group h3",
            "parkspace --group C3 weak-conjecture --threads 2",
            "parkspace qkirkman --group A3 --k 1 --truncation 40 --format markdown",
            "parkspace fuss --group B2 --p 5 --seed 9",
            "parkspace invariants --group H4 --allow-stretch",
        ] {
            let c = parse(s);
            let again = parse(&c.to_string());
            assert_eq!(c, again, "{s}");
            assert_eq!(again.to_string(), c.to_string());
        }
        assert_eq!(parse("parkspace csp --group c3").group, "B3");
    }

    #[test]
    fn usage_errors() {
        assert!(RunConfig::parse_from("parkspace frobnicate --group A2".split_whitespace()).is_err());
        assert!(RunConfig::parse_from("parkspace csp --group A2 --p x".split_whitespace()).is_err());
        assert_eq!(RunConfig::parse_from("parkspace csp".split_whitespace()).unwrap(), None);
    }
}
