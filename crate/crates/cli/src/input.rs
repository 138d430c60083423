//! Graph arguments: named literals, files, or `-` for stdin.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use tensorcirc::{complete, complete_bipartite, kn_star, CirculantSpec, Graph};

/// Parses `K n`, `K* n`, `K n,n` (any `K a,b`) or a `C n {..}` literal.
pub fn parse_literal(text: &str) -> Result<Option<Graph>> {
    let t = text.trim();
    if t.starts_with('C') {
        let spec: CirculantSpec = t
            .parse()
            .with_context(|| format!("bad circulant literal {t:?}"))?;
        return Ok(Some(spec.build()));
    }
    let Some(rest) = t.strip_prefix('K') else {
        return Ok(None);
    };
    let (looped, rest) = match rest.strip_prefix('*') {
        Some(r) => (true, r),
        None => (false, rest),
    };
    let rest = rest.trim();
    let number = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .with_context(|| format!("bad order in literal {t:?}"))
    };
    if let Some((a, b)) = rest.split_once(',') {
        if looped {
            bail!("K* takes a single order, got {t:?}");
        }
        return Ok(Some(complete_bipartite(number(a)?, number(b)?)));
    }
    let n = number(rest)?;
    Ok(Some(if looped { kn_star(n) } else { complete(n) }))
}

/// Reads a graph from a literal, a file in the edge-list format, or stdin.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        return text.parse().context("parsing graph from stdin");
    }
    if !Path::new(arg).exists() {
        if let Some(g) = parse_literal(arg)? {
            return Ok(g);
        }
        bail!("no such file: {arg}");
    }
    let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
    text.parse().with_context(|| format!("parsing {arg}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_literal("K 3").unwrap(), Some(complete(3)));
        assert_eq!(parse_literal("K* 2").unwrap(), Some(kn_star(2)));
        assert_eq!(
            parse_literal("K 3,3").unwrap(),
            Some(complete_bipartite(3, 3))
        );
        assert_eq!(parse_literal("C 4 {2}").unwrap().unwrap().edge_count(), 2);
        assert!(parse_literal("C 4 {3}").is_err());
        assert!(parse_literal("K x").is_err());
        assert!(parse_literal("K* 2,2").is_err());
        assert_eq!(parse_literal("graph.txt").unwrap(), None);
    }
}
