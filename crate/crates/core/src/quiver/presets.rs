//! Named quivers.
//!
//! Orientations:
//! * `An`: linear, `1 <- 2 <- ... <- n`.
//! * `Dn`: chain `1 <- 2 <- ... <- n-2`, with `n-1 -> n-2` and `n -> n-2`.
//! * `En`: chain `1 <- 2 <- ... <- n-1`, with `n -> 3`.
//! * `K2`: Kronecker `1 <= 2` (two arrows `2 -> 1`).
//! * `W2m<m>`: `m` parallel arrows `2 -> 1`, e.g. `W2m3`.
//! * `W4`: `1 <= 2 <- 3 -> 4`.

use super::{Quiver, QuiverError};

fn build(name: String, n: usize, arrows: Vec<(usize, usize)>) -> Quiver {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = arrows
        .into_iter()
        .enumerate()
        .map(|(k, (s, t))| (format!("a{}", k + 1), s.to_string(), t.to_string()))
        .collect();
    let refs: Vec<(&str, &str, &str)> = arrows.iter().map(|(l, s, t)| (l.as_str(), s.as_str(), t.as_str())).collect();
    let vrefs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    Quiver::new(name, &vrefs, &refs).expect("preset quivers are valid")
}

pub fn dynkin_a(n: usize) -> Quiver {
    assert!(n >= 1);
    build(format!("A{n}"), n, (1..n).map(|i| (i + 1, i)).collect())
}

pub fn dynkin_d(n: usize) -> Quiver {
    assert!(n >= 4);
    let mut arrows: Vec<(usize, usize)> = (1..n - 2).map(|i| (i + 1, i)).collect();
    arrows.push((n - 1, n - 2));
    arrows.push((n, n - 2));
    build(format!("D{n}"), n, arrows)
}

pub fn dynkin_e(n: usize) -> Quiver {
    assert!((6..=8).contains(&n));
    let mut arrows: Vec<(usize, usize)> = (1..n - 1).map(|i| (i + 1, i)).collect();
    arrows.push((n, 3));
    build(format!("E{n}"), n, arrows)
}

/// Two vertices with `m` parallel arrows `2 -> 1`.
pub fn generalized_kronecker(m: usize) -> Quiver {
    assert!(m >= 1);
    let name = if m == 2 { "K2".to_string() } else { format!("W2m{m}") };
    build(name, 2, vec![(2, 1); m])
}

pub fn kronecker() -> Quiver {
    generalized_kronecker(2)
}

/// The wild quiver `1 <= 2 <- 3 -> 4`.
pub fn w4() -> Quiver {
    Quiver::new(
        "W4",
        &["1", "2", "3", "4"],
        &[("a", "2", "1"), ("b", "2", "1"), ("c", "3", "2"), ("d", "3", "4")],
    )
    .expect("W4 is acyclic")
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<Quiver, QuiverError> {
    let unknown = || QuiverError::UnknownPreset(name.to_string());
    let rank = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    if name == "K2" {
        return Ok(kronecker());
    }
    if name == "W4" {
        return Ok(w4());
    }
    if let Some(m) = rank("W2m") {
        return if m >= 3 { Ok(generalized_kronecker(m)) } else { Err(unknown()) };
    }
    if let Some(n) = rank("A") {
        return if (1..=8).contains(&n) { Ok(dynkin_a(n)) } else { Err(unknown()) };
    }
    if let Some(n) = rank("D") {
        return if (4..=6).contains(&n) { Ok(dynkin_d(n)) } else { Err(unknown()) };
    }
    if let Some(n) = rank("E") {
        return if (6..=8).contains(&n) { Ok(dynkin_e(n)) } else { Err(unknown()) };
    }
    Err(unknown())
}

/// Every preset name with a finite, fixed quiver (generalized Kronecker
/// quivers excluded).
pub fn preset_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
    names.extend((4..=6).map(|n| format!("D{n}")));
    names.extend((6..=8).map(|n| format!("E{n}")));
    names.push("K2".into());
    names.push("W4".into());
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_lookup() {
        assert_eq!(preset("A3").unwrap().n(), 3);
        assert_eq!(preset("D4").unwrap().arrows().len(), 3);
        assert_eq!(preset("E8").unwrap().n(), 8);
        assert_eq!(preset("W2m3").unwrap().arrows().len(), 3);
        assert_eq!(preset("K2").unwrap(), kronecker());
        assert!(preset("W2m2").is_err());
        assert!(preset("A9").is_err());
        assert!(preset("F4").is_err());
        for name in preset_names() {
            assert!(preset(&name).is_ok(), "{name}");
        }
    }

    #[test]
    fn d_fork_is_at_n_minus_2() {
        let q = dynkin_d(5);
        let fork = q.vertex_index("3").unwrap();
        let degree = q.arrows().iter().filter(|a| a.source == fork || a.target == fork).count();
        assert_eq!(degree, 3);
    }
}
