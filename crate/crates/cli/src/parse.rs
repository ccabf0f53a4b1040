//! Parsers for the textual argument formats: comma-separated partitions
//! and signatures, semicolon-separated permutation lists in cycle
//! notation, and rationals as `p` or `p/q`.

use anyhow::{anyhow, bail, Context, Result};
use tforge_core::exact::Rational;
use tforge_core::perm::{parse_perm, Perm};

pub fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .with_context(|| format!("bad {what} entry {part:?}"))
        })
        .collect()
}

pub fn parse_signature(s: &str) -> Result<[u64; 3]> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .with_context(|| format!("bad signature entry {part:?}"))
        })
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        &[r1, r2, r3] => Ok([r1, r2, r3]),
        other => bail!("signature needs exactly 3 entries, got {}", other.len()),
    }
}

pub fn parse_perm_list(s: &str, degree: usize) -> Result<Vec<Perm>> {
    s.split(';')
        .map(|cycles| parse_one_perm(cycles, degree))
        .collect()
}

pub fn parse_one_perm(s: &str, degree: usize) -> Result<Perm> {
    parse_perm(s.trim(), degree).map_err(|e| anyhow!("bad permutation {s:?}: {e}"))
}

/// Exactly three permutations, for triple-valued arguments.
pub fn parse_perm_triple(s: &str, degree: usize) -> Result<[Perm; 3]> {
    let perms = parse_perm_list(s, degree)?;
    <[Perm; 3]>::try_from(perms)
        .map_err(|v: Vec<Perm>| anyhow!("expected 3 permutations, got {}", v.len()))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| anyhow!("bad rational {s:?}: {e}"))
}

/// Comma-separated rationals, constant coefficient first.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(parse_signature("5, 5,5").unwrap(), [5, 5, 5]);
        assert!(parse_signature("5,5").is_err());
        assert!(parse_signature("5,5,x").is_err());
    }

    #[test]
    fn perm_lists() {
        let perms = parse_perm_list("(1,2)(3,4); (1,5,7)(2,3)(4,6)", 7).unwrap();
        assert_eq!(perms.len(), 2);
        assert!(parse_perm_triple("(1,2)", 3).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/4").unwrap().to_string(), "3/4");
        assert_eq!(parse_rational(" -2 ").unwrap().to_string(), "-2");
        assert!(parse_rational("1/0").is_err());
    }
}
