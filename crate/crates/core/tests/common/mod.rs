//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use brahmagupta::param::{EulerParams, SastryParams};
use brahmagupta::pentagon::PentagonParams;
use brahmagupta::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `±a/b` with `1 <= a <= max_num`, `1 <= b <= max_den`.
pub fn small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64, signed: bool) -> Rational {
    let a = rng.gen_range(1..=max_num);
    let b = rng.gen_range(1..=max_den);
    let sign = if signed && rng.gen_bool(0.5) { -1 } else { 1 };
    Rational::new(sign * a, b)
}

pub fn sorted(values: impl IntoIterator<Item = Rational>) -> Vec<Rational> {
    let mut v: Vec<Rational> = values.into_iter().collect();
    v.sort();
    v
}

pub fn sorted_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Vec<Rational> {
    sorted(values.into_iter().map(Rational::abs))
}

pub fn all_lengths(poly: &brahmagupta::CyclicPolygon) -> Vec<Rational> {
    poly.sides()
        .iter()
        .chain(poly.diagonals().values())
        .cloned()
        .collect()
}

/// Side multiset of the pentagon taken from the second root `t = q/p` of the
/// gluing conditions, with the matching triangle scale `k`.
///
/// Returns `None` when the pieces are undefined (a vanishing parameter).
pub fn second_root_sides(pp: &PentagonParams) -> Option<Vec<Rational>> {
    let PentagonParams { m, n, p, q, u, v } = pp;
    let t = q / p;
    let k = q * m * n * (u.square() + 1) * (v.square() + 1) / (p * (m.square() + n.square()));
    let quad = SastryParams::new(t, u.clone(), v.clone()).ok()?.formulas();
    let tri = EulerParams::new(m.clone(), n.clone(), p.clone(), q.clone(), k)
        .ok()?
        .sides();
    // the triangle's first side is the shared chord
    assert_eq!(
        tri[0], quad.sides[2],
        "second root must keep the shared chord"
    );
    let [a1, a2, _, a4] = &quad.sides;
    let [_, b, c] = &tri;
    Some(sorted_abs([a1, a2, b, c, a4]))
}

/// Cheap necessary condition for `build_hexagon` to succeed: both halves are
/// Sastry quadrilaterals at one common scale, so all eight of their raw sides
/// share a sign. Used only to skip hopeless draws quickly.
pub fn hexagon_candidate(m: &Rational, t: &Rational, u1: &Rational, u2: &Rational) -> bool {
    let Ok((v1, v2)) = brahmagupta::hexagon::solve_hexagon_condition(m, u1, u2) else {
        return false;
    };
    let halves = [(u1.clone(), v1), (u2.clone(), v2)];
    let mut signs =
        halves
            .into_iter()
            .flat_map(|(u, v)| match SastryParams::new(t.clone(), u, v) {
                Ok(sp) => sp.formulas().sides.map(|s| s.signum()).to_vec(),
                Err(_) => vec![0],
            });
    let first = signs.next().unwrap_or(0);
    first != 0 && signs.all(|s| s == first)
}
