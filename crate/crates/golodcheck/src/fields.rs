//! Runtime choice of coefficient field.

use std::fmt;
use std::str::FromStr;

/// The coefficient fields accepted on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    Fp2,
    Fp3,
    Fp101,
    #[default]
    Fp32003,
    Qq,
}

impl FieldChoice {
    pub const ALL: [FieldChoice; 5] = [FieldChoice::Fp2, FieldChoice::Fp3, FieldChoice::Fp101, FieldChoice::Fp32003, FieldChoice::Qq];

    pub fn tag(self) -> &'static str {
        match self {
            FieldChoice::Fp2 => "fp:2",
            FieldChoice::Fp3 => "fp:3",
            FieldChoice::Fp101 => "fp:101",
            FieldChoice::Fp32003 => "fp:32003",
            FieldChoice::Qq => "qq",
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FieldChoice::ALL.into_iter().find(|c| c.tag() == s.trim()).ok_or_else(|| {
            let known: Vec<&str> = FieldChoice::ALL.iter().map(|c| c.tag()).collect();
            format!("unsupported field {s:?} (expected one of {})", known.join(", "))
        })
    }
}

/// Runs `$body` with the type alias `$F` bound to the chosen field.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {
        match $choice {
            $crate::FieldChoice::Fp2 => {
                type $F = golodcheck_core::Fp<2>;
                $body
            }
            $crate::FieldChoice::Fp3 => {
                type $F = golodcheck_core::Fp<3>;
                $body
            }
            $crate::FieldChoice::Fp101 => {
                type $F = golodcheck_core::Fp<101>;
                $body
            }
            $crate::FieldChoice::Fp32003 => {
                type $F = golodcheck_core::F32003;
                $body
            }
            $crate::FieldChoice::Qq => {
                type $F = golodcheck_core::QQ;
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for c in FieldChoice::ALL {
            assert_eq!(c.tag().parse::<FieldChoice>().unwrap(), c);
        }
        assert!("fp:7".parse::<FieldChoice>().is_err());
    }
}
