//! The identity catalog: one [`IdentitySpec`] per verified identity, each
//! carrying its parameter signature, pole guard, and a pair of independent
//! evaluators for the two sides.
//!
//! Exact-mode entries compare arbitrary-precision rationals for equality;
//! float-mode entries (the gamma-form summation theorems) compare truncated
//! series against gamma closed forms under a relative tolerance. Verification
//! is by value: there is no simplification layer, and the right side is never
//! computed from the left.

pub mod exact;
pub mod gamma;

use std::fmt;
use std::sync::Arc;

use harmonid_core::{CoreError, Rational};
use serde::Serialize;

pub use gamma::{reduction_checks, FloatSettings, FloatValue, ReductionCheck};

/// How a parameter is swept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    /// Swept over an integer grid.
    Natural,
    /// As Natural, but the identity is undefined at 0.
    NaturalPositive,
    /// Sampled from seeded random rationals.
    Rational,
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

impl ParamSpec {
    const fn nat(name: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::Natural,
        }
    }

    const fn nat_pos(name: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::NaturalPositive,
        }
    }

    const fn rat(name: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::Rational,
        }
    }
}

/// A concrete value bound to a parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Natural(u64),
    Rational(Rational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Natural(n) => write!(f, "{}", n),
            Value::Rational(r) => write!(f, "{}", r),
        }
    }
}

/// An ordered binding of every parameter in an identity's signature.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Assignment {
    pub bindings: Vec<(&'static str, Value)>,
}

impl Assignment {
    pub fn new(bindings: Vec<(&'static str, Value)>) -> Self {
        Assignment { bindings }
    }

    fn get(&self, name: &str) -> &Value {
        self.bindings
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
            .unwrap_or_else(|| panic!("parameter {name} not bound"))
    }

    /// The natural bound to `name`; panics on a kind mismatch (catalog bug).
    pub fn nat(&self, name: &str) -> u64 {
        match self.get(name) {
            Value::Natural(n) => *n,
            Value::Rational(_) => panic!("parameter {name} is rational, expected natural"),
        }
    }

    /// The rational bound to `name`; panics on a kind mismatch (catalog bug).
    pub fn rat(&self, name: &str) -> &Rational {
        match self.get(name) {
            Value::Rational(r) => r,
            Value::Natural(_) => panic!("parameter {name} is natural, expected rational"),
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.bindings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", name, value)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

pub type ExactFn = Arc<dyn Fn(&Assignment) -> Result<Rational, CoreError> + Send + Sync>;
pub type FloatFn =
    Arc<dyn Fn(&Assignment, &FloatSettings) -> Result<FloatValue, CoreError> + Send + Sync>;
pub type GuardFn = Arc<dyn Fn(&Assignment) -> bool + Send + Sync>;

/// The two evaluation tracks.
#[derive(Clone)]
pub enum Verification {
    Exact { lhs: ExactFn, rhs: ExactFn },
    Float { lhs: FloatFn, rhs: FloatFn },
}

/// One catalog identity.
#[derive(Clone)]
pub struct IdentitySpec {
    pub id: String,
    pub params: Vec<ParamSpec>,
    /// Signature-level domain constraint; assignments failing it are outside
    /// the identity's domain and are not enumerated at all.
    pub constraint: Option<GuardFn>,
    /// Pole guard: true means both sides evaluate without hitting a zero
    /// denominator. Grid points failing it are recorded as skipped.
    pub pole_guard: GuardFn,
    pub verification: Verification,
    /// Self-contained description of the identity.
    pub anchor: &'static str,
}

impl IdentitySpec {
    pub fn mode(&self) -> Mode {
        match self.verification {
            Verification::Exact { .. } => Mode::Exact,
            Verification::Float { .. } => Mode::Float,
        }
    }

    /// Evaluates both sides at a guard-passing assignment (exact mode).
    pub fn evaluate_exact(&self, a: &Assignment) -> Result<(Rational, Rational), CoreError> {
        match &self.verification {
            Verification::Exact { lhs, rhs } => Ok((lhs(a)?, rhs(a)?)),
            Verification::Float { .. } => panic!("{} is a float-mode identity", self.id),
        }
    }

    /// Evaluates both sides at a guard-passing assignment (float mode).
    pub fn evaluate_float(
        &self,
        a: &Assignment,
        settings: &FloatSettings,
    ) -> Result<(FloatValue, FloatValue), CoreError> {
        match &self.verification {
            Verification::Float { lhs, rhs } => Ok((lhs(a, settings)?, rhs(a, settings)?)),
            Verification::Exact { .. } => panic!("{} is an exact-mode identity", self.id),
        }
    }
}

fn guard_true() -> GuardFn {
    Arc::new(|_| true)
}

fn spec(
    id: &str,
    params: Vec<ParamSpec>,
    pole_guard: GuardFn,
    verification: Verification,
    anchor: &'static str,
) -> IdentitySpec {
    IdentitySpec {
        id: id.to_string(),
        params,
        constraint: None,
        pole_guard,
        verification,
        anchor,
    }
}

/// The complete catalog, in stable order.
pub fn entries() -> Vec<IdentitySpec> {
    use exact as ex;
    use gamma as ga;

    let mut out: Vec<IdentitySpec> = Vec::with_capacity(33);

    // -- gamma-form identities, float track ---------------------------------
    out.push(spec(
        "dougall_5f4",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
            ParamSpec::rat("d"),
        ],
        Arc::new(|a| ga::dougall_guard(a.rat("a"), a.rat("b"), a.rat("c"), a.rat("d"))),
        Verification::Float {
            lhs: Arc::new(|a, s| {
                ga::dougall_lhs(a.rat("a"), a.rat("b"), a.rat("c"), a.rat("d"), s)
            }),
            rhs: Arc::new(|a, _| ga::dougall_rhs(a.rat("a"), a.rat("b"), a.rat("c"), a.rat("d"))),
        },
        "Dougall's well-poised 5F4 summation, gamma closed form",
    ));
    out.push(spec(
        "dixon_3f2",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
        ],
        Arc::new(|a| ga::dixon_guard(a.rat("a"), a.rat("b"), a.rat("c"))),
        Verification::Float {
            lhs: Arc::new(|a, s| ga::dixon_lhs(a.rat("a"), a.rat("b"), a.rat("c"), s)),
            rhs: Arc::new(|a, _| ga::dixon_rhs(a.rat("a"), a.rat("b"), a.rat("c"))),
        },
        "Dixon's 3F2 summation, gamma closed form",
    ));
    out.push(spec(
        "dixonlike_3f2",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
        ],
        Arc::new(|a| ga::dixonlike_guard(a.rat("a"), a.rat("b"), a.rat("c"))),
        Verification::Float {
            lhs: Arc::new(|a, s| ga::dixonlike_lhs(a.rat("a"), a.rat("b"), a.rat("c"), s)),
            rhs: Arc::new(|a, _| ga::dixonlike_rhs(a.rat("a"), a.rat("b"), a.rat("c"))),
        },
        "Dixon-like 3F2 summation, two-term gamma closed form",
    ));
    out.push(spec(
        "whipple",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
        ],
        Arc::new(|a| ga::whipple_guard(a.rat("a"), a.rat("b"), a.rat("c"))),
        Verification::Float {
            lhs: Arc::new(|a, s| ga::whipple_lhs(a.rat("a"), a.rat("b"), a.rat("c"), s)),
            rhs: Arc::new(|a, _| ga::whipple_rhs(a.rat("a"), a.rat("b"), a.rat("c"))),
        },
        "Whipple's 3F2 summation",
    ));
    out.push(spec(
        "whipple_shifted",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
        ],
        Arc::new(|a| ga::whipple_shifted_guard(a.rat("a"), a.rat("b"), a.rat("c"))),
        Verification::Float {
            lhs: Arc::new(|a, s| ga::whipple_shifted_lhs(a.rat("a"), a.rat("b"), a.rat("c"), s)),
            rhs: Arc::new(|a, _| ga::whipple_shifted_rhs(a.rat("a"), a.rat("b"), a.rat("c"))),
        },
        "Whipple's summation with the first parameter shifted by one",
    ));
    out.push(spec(
        "whipple_like",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
        ],
        Arc::new(|a| ga::whipple_like_guard(a.rat("a"), a.rat("b"), a.rat("c"))),
        Verification::Float {
            lhs: Arc::new(|a, s| ga::whipple_like_lhs(a.rat("a"), a.rat("b"), a.rat("c"), s)),
            rhs: Arc::new(|a, _| ga::whipple_like_rhs(a.rat("a"), a.rat("b"), a.rat("c"))),
        },
        "average of the two Whipple forms, summing 3F2 with opposed first parameters",
    ));
    out.push(spec(
        "kummer",
        vec![
            ParamSpec::rat("a"),
            ParamSpec::rat("b"),
            ParamSpec::rat("c"),
            ParamSpec::rat("d"),
            ParamSpec::rat("e"),
        ],
        Arc::new(|a| ga::kummer_guard(a.rat("a"), a.rat("b"), a.rat("c"), a.rat("d"), a.rat("e"))),
        Verification::Float {
            lhs: Arc::new(|a, s| {
                ga::kummer_lhs(
                    a.rat("a"),
                    a.rat("b"),
                    a.rat("c"),
                    a.rat("d"),
                    a.rat("e"),
                    s,
                )
            }),
            rhs: Arc::new(|a, s| {
                ga::kummer_rhs(
                    a.rat("a"),
                    a.rat("b"),
                    a.rat("c"),
                    a.rat("d"),
                    a.rat("e"),
                    s,
                )
            }),
        },
        "Kummer's 3F2 transformation at unit argument",
    ));

    // -- exact identities ----------------------------------------------------
    out.push(spec(
        "eq_a",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::eq_a_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_a_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::eq_a_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "alternating binomial-ratio sum with two free parameters, degree-0 weight",
    ));
    out.push(spec(
        "thm_a",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::thm_a_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_a_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::thm_a_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "alternating binomial-ratio sum against H_k(x)",
    ));
    out.push(spec(
        "harmonic_aa",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::nat("p"),
            ParamSpec::nat("q"),
        ],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_aa_lhs(a.nat("n"), a.nat("p"), a.nat("q"))),
            rhs: Arc::new(|a| ex::harmonic_aa_rhs(a.nat("n"), a.nat("p"), a.nat("q"))),
        },
        "integer specialization of the H_k(x) binomial-ratio sum",
    ));
    out.push(spec(
        "eq_b",
        vec![ParamSpec::nat("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::eq_b_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_b_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::eq_b_rhs(a.nat("n"), a.rat("x"))),
        },
        "squared-weight sum against H_k(x)^2 + H_k(x) H_{2n-k}(x)",
    ));
    out.push(spec(
        "thm_b",
        vec![ParamSpec::nat("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::thm_b_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_b_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::thm_b_rhs(a.nat("n"), a.rat("x"))),
        },
        "squared-weight sum against second-order H_k(x)",
    ));
    out.push(spec(
        "harmonic_bb",
        vec![ParamSpec::nat("n"), ParamSpec::nat("p")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_bb_lhs(a.nat("n"), a.nat("p"))),
            rhs: Arc::new(|a| ex::harmonic_bb_rhs(a.nat("n"), a.nat("p"))),
        },
        "integer specialization of the second-order squared-weight sum",
    ));
    out.push(spec(
        "wgy_cor21",
        vec![ParamSpec::nat("n")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::wgy_cor21_lhs(a.nat("n"))),
            rhs: Arc::new(|a| ex::wgy_cor21_rhs(a.nat("n"))),
        },
        "reciprocal-binomial sum of H_k H_{2n-k}",
    ));
    out.push(spec(
        "prop_a",
        vec![ParamSpec::nat("n")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::prop_a_lhs(a.nat("n"))),
            rhs: Arc::new(|a| ex::prop_a_rhs(a.nat("n"))),
        },
        "reciprocal-binomial sum of squared harmonic numbers",
    ));
    out.push(spec(
        "intro_id1",
        vec![ParamSpec::nat("n")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::intro_id1_lhs(a.nat("n"))),
            rhs: Arc::new(|a| ex::intro_id1_rhs(a.nat("n"))),
        },
        "reciprocal-binomial sum of second-order harmonic numbers",
    ));
    out.push(spec(
        "eq_c",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::eq_c_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_c_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::eq_c_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "Dixon-like reduction in binomial form, degree-0 weight",
    ));
    out.push(spec(
        "eq_d",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::eq_d_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_d_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::eq_d_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "derivative of the Dixon-like binomial identity in its second parameter",
    ));
    out.push(spec(
        "thm_c",
        vec![ParamSpec::nat_pos("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::thm_c_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_c_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::thm_c_rhs(a.nat("n"), a.rat("x"))),
        },
        "single-variable H_k(x) sum with 4^{n-1} closed form",
    ));
    out.push(spec(
        "harmonic_cc",
        vec![ParamSpec::nat_pos("n"), ParamSpec::nat("p")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_cc_lhs(a.nat("n"), a.nat("p"))),
            rhs: Arc::new(|a| ex::harmonic_cc_rhs(a.nat("n"), a.nat("p"))),
        },
        "integer specialization of the 4^{n-1} closed form",
    ));
    out.push(spec(
        "thm_d",
        vec![ParamSpec::nat("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::thm_d_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_d_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::thm_d_rhs(a.nat("n"), a.rat("x"))),
        },
        "half-shift sum against H_{2k}(x) with offsets -3/4 and -5/4",
    ));
    out.push(spec(
        "harmonic_dd",
        vec![ParamSpec::nat("n"), ParamSpec::nat("p")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_dd_lhs(a.nat("n"), a.nat("p"))),
            rhs: Arc::new(|a| ex::harmonic_dd_rhs(a.nat("n"), a.nat("p"))),
        },
        "integer specialization of the half-shift H_{2k} sum",
    ));
    out.push(spec(
        "eq_e",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
            ParamSpec::rat("z"),
        ],
        Arc::new(|a| ex::eq_e_guard(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_e_lhs(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
            rhs: Arc::new(|a| ex::eq_e_rhs(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
        },
        "well-poised three-parameter sum, degree-0 weight",
    ));
    out.push(spec(
        "eq_f",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
            ParamSpec::rat("z"),
        ],
        Arc::new(|a| ex::eq_f_guard(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::eq_f_lhs(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
            rhs: Arc::new(|a| ex::eq_f_rhs(a.nat("n"), a.rat("x"), a.rat("y"), a.rat("z"))),
        },
        "derivative of the well-poised sum in its third parameter",
    ));
    out.push(spec(
        "thm_e",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::thm_e_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_e_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::thm_e_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "two-parameter well-poised sum against H_k(x)",
    ));
    let mut harmonic_ee = spec(
        "harmonic_ee",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::nat("p"),
            ParamSpec::nat("q"),
        ],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_ee_lhs(a.nat("n"), a.nat("p"), a.nat("q"))),
            rhs: Arc::new(|a| ex::harmonic_ee_rhs(a.nat("n"), a.nat("p"), a.nat("q"))),
        },
        "integer specialization of the well-poised H_k sum",
    );
    // H_{p-q-1} needs a nonnegative index
    harmonic_ee.constraint = Some(Arc::new(|a| a.nat("q") < a.nat("p")));
    out.push(harmonic_ee);
    out.push(spec(
        "thm_f",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::rat("x"),
            ParamSpec::rat("y"),
        ],
        Arc::new(|a| ex::thm_f_guard(a.nat("n"), a.rat("x"), a.rat("y"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_f_lhs(a.nat("n"), a.rat("x"), a.rat("y"))),
            rhs: Arc::new(|a| ex::thm_f_rhs(a.nat("n"), a.rat("x"), a.rat("y"))),
        },
        "half-shift well-poised sum against H_{2k}(x)",
    ));
    out.push(spec(
        "harmonic_ff",
        vec![
            ParamSpec::nat("n"),
            ParamSpec::nat("p"),
            ParamSpec::nat("q"),
        ],
        Arc::new(|a| ex::harmonic_ff_guard(a.nat("n"), a.nat("p"), a.nat("q"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_ff_lhs(a.nat("n"), a.nat("p"), a.nat("q"))),
            rhs: Arc::new(|a| ex::harmonic_ff_rhs(a.nat("n"), a.nat("p"), a.nat("q"))),
        },
        "integer specialization of the half-shift well-poised sum",
    ));
    out.push(spec(
        "thm_g",
        vec![ParamSpec::nat_pos("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::thm_g_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_g_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::thm_g_rhs(a.nat("n"), a.rat("x"))),
        },
        "well-poised sum against H_k(x)^2 with H_{n-1} closed form",
    ));
    out.push(spec(
        "harmonic_gg",
        vec![ParamSpec::nat_pos("n"), ParamSpec::nat("p")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_gg_lhs(a.nat("n"), a.nat("p"))),
            rhs: Arc::new(|a| ex::harmonic_gg_rhs(a.nat("n"), a.nat("p"))),
        },
        "integer specialization of the squared-harmonic well-poised sum",
    ));
    out.push(spec(
        "thm_h",
        vec![ParamSpec::nat("n"), ParamSpec::rat("x")],
        Arc::new(|a| ex::thm_h_guard(a.nat("n"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::thm_h_lhs(a.nat("n"), a.rat("x"))),
            rhs: Arc::new(|a| ex::thm_h_rhs(a.nat("n"), a.rat("x"))),
        },
        "half-shift well-poised sum against H_{2k}(x)^2",
    ));
    out.push(spec(
        "harmonic_hh",
        vec![ParamSpec::nat("n"), ParamSpec::nat("p")],
        guard_true(),
        Verification::Exact {
            lhs: Arc::new(|a| ex::harmonic_hh_lhs(a.nat("n"), a.nat("p"))),
            rhs: Arc::new(|a| ex::harmonic_hh_rhs(a.nat("n"), a.nat("p"))),
        },
        "integer specialization of the half-shift squared-harmonic sum",
    ));
    out.push(spec(
        "bisect_relation",
        vec![ParamSpec::nat("k"), ParamSpec::rat("x")],
        Arc::new(|a| ex::bisect_guard(a.nat("k"), a.rat("x"))),
        Verification::Exact {
            lhs: Arc::new(|a| ex::bisect_lhs(a.nat("k"), a.rat("x"))),
            rhs: Arc::new(|a| ex::bisect_rhs(a.nat("k"), a.rat("x"))),
        },
        "bisection of a harmonic sum by parity of the shift",
    ));

    out
}

/// Looks up an entry by id.
pub fn find(id: &str) -> Option<IdentitySpec> {
    entries().into_iter().find(|e| e.id == id)
}

/// Deliberately falsified clones of exact entries: each right side is offset
/// by 1/1000000, so a sound sweep must produce at least one counterexample.
pub fn negative_controls() -> Vec<IdentitySpec> {
    let targets = [
        "prop_a",
        "thm_a",
        "harmonic_bb",
        "eq_e",
        "thm_g",
        "bisect_relation",
    ];
    let offset = Rational::new(1, 1_000_000).unwrap();
    entries()
        .into_iter()
        .filter(|e| targets.contains(&e.id.as_str()))
        .map(|mut e| {
            e.id = format!("{}__mutated", e.id);
            e.verification = match e.verification {
                Verification::Exact { lhs, rhs } => {
                    let offset = offset.clone();
                    Verification::Exact {
                        lhs,
                        rhs: Arc::new(move |a| Ok(&rhs(a)? + &offset)),
                    }
                }
                float => float,
            };
            e
        })
        .collect()
}

pub use exact::{
    reversal_guard, reversal_symmetry_check, thm_g_intermediate_check, thm_g_sub_a, thm_g_sub_b,
    thm_h_intermediate_check, thm_h_sub_c,
};
