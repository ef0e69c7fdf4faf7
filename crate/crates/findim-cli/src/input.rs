//! The JSON input format and its validation.
//!
//! A document fixes the ambient dimension `n` and lists generators, each in
//! one of three encodings:
//!
//! ```json
//! {
//!   "n": 2,
//!   "generators": [
//!     {"nabla": {"i": 1, "a": [0, 2]}},
//!     {"delta": {"p": [1, 0], "beta": ["1", "-1"]}},
//!     {"raw":   {"c": [-1, 0], "alpha": ["1", "0"]}}
//!   ]
//! }
//! ```
//!
//! `nabla` is `x^a d_i` (1-based `i`, `a >= 0`, `a_i = 0`); `delta` is
//! `x^p sum_j beta_j x_j d_j` (`p >= 0`, `beta != 0`); `raw` is a general
//! homogeneous derivation by degree and coefficient vector. Rationals are
//! decimal-free strings `"num"` or `"num/den"` with a positive denominator.
//! Every validation failure carries a stable diagnostic code and names the
//! offending generator and field.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use findim_core::{HomogeneousDerivation, Int, LatticeVector, Rat, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: usize,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum GeneratorSpec {
    Nabla { i: usize, a: Vec<i64> },
    Delta { p: Vec<i64>, beta: Vec<String> },
    Raw { c: Vec<i64>, alpha: Vec<String> },
}

/// A validation failure. `generator` indices are 1-based in messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Json(String),
    Dimension {
        n: usize,
    },
    Length {
        generator: usize,
        field: &'static str,
        expected: usize,
        got: usize,
    },
    IndexRange {
        generator: usize,
        i: usize,
        n: usize,
    },
    ExponentAtOwnVariable {
        generator: usize,
    },
    NegativeEntry {
        generator: usize,
        field: &'static str,
        position: usize,
    },
    ZeroCoefficients {
        generator: usize,
        field: &'static str,
    },
    Rational {
        generator: usize,
        field: &'static str,
        position: usize,
        text: String,
    },
    Denominator {
        generator: usize,
        field: &'static str,
        position: usize,
        text: String,
    },
}

impl ParseError {
    /// Stable diagnostic code.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Json(_) => "malformed-json",
            ParseError::Dimension { .. } => "invalid-dimension",
            ParseError::Length { .. } => "length-mismatch",
            ParseError::IndexRange { .. } => "variable-index-out-of-range",
            ParseError::ExponentAtOwnVariable { .. } => "exponent-at-own-variable",
            ParseError::NegativeEntry { .. } => "negative-entry",
            ParseError::ZeroCoefficients { .. } => "zero-coefficient-vector",
            ParseError::Rational { .. } => "invalid-rational",
            ParseError::Denominator { .. } => "invalid-denominator",
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Json(msg) => write!(f, "malformed JSON: {msg}"),
            ParseError::Dimension { n } => {
                write!(f, "ambient dimension n must be at least 1, got {n}")
            }
            ParseError::Length {
                generator,
                field,
                expected,
                got,
            } => write!(
                f,
                "generator {generator}, field \"{field}\": expected length {expected}, got {got}"
            ),
            ParseError::IndexRange { generator, i, n } => write!(
                f,
                "generator {generator}, field \"i\": index {i} out of range 1..={n}"
            ),
            ParseError::ExponentAtOwnVariable { generator } => write!(
                f,
                "generator {generator}, field \"a\": a_i must be zero"
            ),
            ParseError::NegativeEntry {
                generator,
                field,
                position,
            } => write!(
                f,
                "generator {generator}, field \"{field}\": entry {position} must be non-negative"
            ),
            ParseError::ZeroCoefficients { generator, field } => write!(
                f,
                "generator {generator}, field \"{field}\": coefficient vector must be nonzero"
            ),
            ParseError::Rational {
                generator,
                field,
                position,
                text,
            } => write!(
                f,
                "generator {generator}, field \"{field}\", entry {position}: \"{text}\" is not a rational \"num\" or \"num/den\""
            ),
            ParseError::Denominator {
                generator,
                field,
                position,
                text,
            } => write!(
                f,
                "generator {generator}, field \"{field}\", entry {position}: \"{text}\" must have a positive denominator"
            ),
        }
        .and_then(|()| write!(f, " (code: {})", self.code()))
    }
}

fn parse_rational(
    text: &str,
    generator: usize,
    field: &'static str,
    position: usize,
) -> Result<Rat, ParseError> {
    let rational_error = || ParseError::Rational {
        generator: generator + 1,
        field,
        position,
        text: text.to_string(),
    };
    let mut parts = text.splitn(3, '/');
    let numer_text = parts.next().ok_or_else(rational_error)?;
    let numer = Int::from_str(numer_text).map_err(|_| rational_error())?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(denom_text) => {
            if parts.next().is_some() {
                return Err(rational_error());
            }
            let denom = Int::from_str(denom_text).map_err(|_| rational_error())?;
            if !denom.is_positive() {
                return Err(ParseError::Denominator {
                    generator: generator + 1,
                    field,
                    position,
                    text: text.to_string(),
                });
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

fn check_length(
    generator: usize,
    field: &'static str,
    expected: usize,
    got: usize,
) -> Result<(), ParseError> {
    if expected == got {
        Ok(())
    } else {
        Err(ParseError::Length {
            generator: generator + 1,
            field,
            expected,
            got,
        })
    }
}

fn check_nonnegative(
    generator: usize,
    field: &'static str,
    entries: &[i64],
) -> Result<(), ParseError> {
    match entries.iter().position(|&e| e < 0) {
        None => Ok(()),
        Some(position) => Err(ParseError::NegativeEntry {
            generator: generator + 1,
            field,
            position,
        }),
    }
}

fn parse_coeff_vector(
    generator: usize,
    field: &'static str,
    texts: &[String],
) -> Result<RationalVector, ParseError> {
    let mut entries = Vec::with_capacity(texts.len());
    for (position, text) in texts.iter().enumerate() {
        entries.push(parse_rational(text, generator, field, position)?);
    }
    let v = RationalVector::new(entries);
    if v.is_zero() {
        return Err(ParseError::ZeroCoefficients {
            generator: generator + 1,
            field,
        });
    }
    Ok(v)
}

/// Parses and validates a document, returning it together with the generators
/// it encodes.
pub fn parse(text: &str) -> Result<(InputDocument, Vec<HomogeneousDerivation>), ParseError> {
    let doc: InputDocument =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let n = doc.n;
    if n == 0 {
        return Err(ParseError::Dimension { n });
    }
    let mut gens = Vec::with_capacity(doc.generators.len());
    for (g, spec) in doc.generators.iter().enumerate() {
        let derivation = match spec {
            GeneratorSpec::Nabla { i, a } => {
                check_length(g, "a", n, a.len())?;
                if *i < 1 || *i > n {
                    return Err(ParseError::IndexRange {
                        generator: g + 1,
                        i: *i,
                        n,
                    });
                }
                check_nonnegative(g, "a", a)?;
                if a[*i - 1] != 0 {
                    return Err(ParseError::ExponentAtOwnVariable { generator: g + 1 });
                }
                HomogeneousDerivation::nabla(*i - 1, &LatticeVector::from_i64(a))
                    .expect("validated above")
            }
            GeneratorSpec::Delta { p, beta } => {
                check_length(g, "p", n, p.len())?;
                check_length(g, "beta", n, beta.len())?;
                check_nonnegative(g, "p", p)?;
                let coeffs = parse_coeff_vector(g, "beta", beta)?;
                HomogeneousDerivation::delta(&LatticeVector::from_i64(p), &coeffs)
                    .expect("validated above")
            }
            GeneratorSpec::Raw { c, alpha } => {
                check_length(g, "c", n, c.len())?;
                check_length(g, "alpha", n, alpha.len())?;
                let coeffs = parse_coeff_vector(g, "alpha", alpha)?;
                HomogeneousDerivation::new(LatticeVector::from_i64(c), coeffs)
                    .expect("validated above")
            }
        };
        gens.push(derivation);
    }
    Ok((doc, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_encodings() {
        let text = r#"{"n":2,"generators":[
            {"delta":{"p":[1,0],"beta":["1","-1"]}},
            {"delta":{"p":[0,1],"beta":["0","1"]}},
            {"nabla":{"i":1,"a":[0,2]}},
            {"raw":{"c":[-1,0],"alpha":["1/2","0"]}}
        ]}"#;
        let (doc, gens) = parse(text).unwrap();
        assert_eq!(doc.n, 2);
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[0].to_string(), "x1^2*d1 - x1*x2*d2");
        assert_eq!(gens[2].to_string(), "x2^2*d1");
    }

    #[test]
    fn empty_generator_list_is_valid() {
        let (doc, gens) = parse(r#"{"n":1,"generators":[]}"#).unwrap();
        assert_eq!(doc.n, 1);
        assert!(gens.is_empty());
    }

    #[test]
    fn nabla_exponent_at_own_variable_is_rejected() {
        let err = parse(r#"{"n":2,"generators":[{"nabla":{"i":1,"a":[1,0]}}]}"#).unwrap_err();
        assert_eq!(err.code(), "exponent-at-own-variable");
        assert!(err.to_string().contains("a_i must be zero"));
    }

    #[test]
    fn distinct_diagnostics() {
        let cases: Vec<(&str, &str)> = vec![
            ("not json", "malformed-json"),
            (r#"{"n":0,"generators":[]}"#, "invalid-dimension"),
            (
                r#"{"n":2,"generators":[{"nabla":{"i":1,"a":[0]}}]}"#,
                "length-mismatch",
            ),
            (
                r#"{"n":2,"generators":[{"nabla":{"i":3,"a":[0,0]}}]}"#,
                "variable-index-out-of-range",
            ),
            (
                r#"{"n":2,"generators":[{"delta":{"p":[-1,0],"beta":["1","0"]}}]}"#,
                "negative-entry",
            ),
            (
                r#"{"n":2,"generators":[{"delta":{"p":[1,0],"beta":["0","0"]}}]}"#,
                "zero-coefficient-vector",
            ),
            (
                r#"{"n":2,"generators":[{"delta":{"p":[1,0],"beta":["1.5","0"]}}]}"#,
                "invalid-rational",
            ),
            (
                r#"{"n":2,"generators":[{"delta":{"p":[1,0],"beta":["1/-2","0"]}}]}"#,
                "invalid-denominator",
            ),
            (
                r#"{"n":2,"generators":[{"raw":{"c":[1,0],"alpha":["0","0"]}}]}"#,
                "zero-coefficient-vector",
            ),
        ];
        for (text, code) in cases {
            let err = parse(text).unwrap_err();
            assert_eq!(err.code(), code, "for input {text}");
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let text = r#"{"n":2,"generators":[
            {"delta":{"p":[1,0],"beta":["2/4","-1"]}},
            {"nabla":{"i":2,"a":[1,0]}}
        ]}"#;
        let (doc, _) = parse(text).unwrap();
        let serialized = serde_json::to_string(&doc).unwrap();
        let (again, _) = parse(&serialized).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn rejects_denominator_zero_and_junk() {
        let err =
            parse(r#"{"n":1,"generators":[{"delta":{"p":[1],"beta":["1/0"]}}]}"#).unwrap_err();
        assert_eq!(err.code(), "invalid-denominator");
        let err =
            parse(r#"{"n":1,"generators":[{"delta":{"p":[1],"beta":["1/2/3"]}}]}"#).unwrap_err();
        assert_eq!(err.code(), "invalid-rational");
    }
}
