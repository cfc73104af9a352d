//! Algebras bundled with the crate.

use std::path::Path;
use std::sync::Arc;

use crate::algebra::{parse_algebra, Algebra};
use crate::error::Result;
use crate::field::Field;

pub const BUNDLED: &[(&str, &str)] = &[
    ("3d", include_str!("../algebras/3d.alg")),
    ("3e", include_str!("../algebras/3e.alg")),
    ("36", include_str!("../algebras/36.alg")),
    ("61", include_str!("../algebras/61.alg")),
    ("kronecker", include_str!("../algebras/kronecker.alg")),
    ("a2", include_str!("../algebras/a2.alg")),
    ("semisimple2", include_str!("../algebras/semisimple2.alg")),
    ("rad2", include_str!("../algebras/rad2.alg")),
    ("local", include_str!("../algebras/local.alg")),
];

/// Source text of a bundled algebra. Accepts `3d`, `3d.alg` and paths
/// ending in `3d.alg`.
pub fn bundled(name: &str) -> Option<&'static str> {
    let stem = Path::new(name).file_stem()?.to_str()?;
    let ext_ok = Path::new(name).extension().is_none_or(|e| e == "alg");
    BUNDLED.iter().find(|(n, _)| *n == stem && ext_ok).map(|(_, t)| *t)
}

pub fn load<F: Field>(name: &str) -> Result<Arc<Algebra<F>>> {
    let text = bundled(name)
        .ok_or_else(|| crate::Error::Invalid(format!("no bundled algebra named {name}")))?;
    parse_algebra(text)?.build::<F>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    #[test]
    fn all_bundled_build() {
        let dims = [7, 6, 10, 10, 4, 3, 2, 6, 2];
        for ((name, _), d) in BUNDLED.iter().zip(dims) {
            assert_eq!(load::<Rational>(name).unwrap().dim(), d, "{name}");
            assert_eq!(load::<Fp<5>>(name).unwrap().dim(), d, "{name}");
        }
        assert!(bundled("examples/3d.alg").is_some());
        assert!(bundled("3d.txt").is_none());
        assert!(bundled("nope").is_none());
    }
}
