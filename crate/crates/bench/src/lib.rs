//! Shared inputs for the benchmarks.

use polydecomp::{parse, Polynomial};

/// Parses a fixture expression; fixtures are static, so failure is a bug.
pub fn poly(text: &str) -> Polynomial {
    parse(text).unwrap_or_else(|e| panic!("bad fixture {text:?}: {e}"))
}

/// Composite inputs of growing degree: (x^2 + x) iterated `depth` times.
pub fn iterated_quadratic(depth: usize) -> Polynomial {
    let q = poly("x^2 + x");
    let mut f = q.clone();
    for _ in 1..depth {
        f = q.compose(&f);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterated_degree() {
        assert_eq!(iterated_quadratic(3).degree(), Some(8));
    }
}
