//! Cantor pairing as a fair schedule.
//!
//! Inning `n` is assigned the slot `(r, j) = unpair(n)`: it serves rank `r`
//! for the `j`-th time. Rank `r` is served at innings `pair(r, 0) < pair(r,
//! 1) < ...`, so the item of rank `r` has been served `m` times by inning
//! `bound(r, m) = pair(r, m - 1)`, provided it was seen by inning
//! `pair(r, 0)`.

/// `pair(r, j) = (r + j)(r + j + 1)/2 + j`.
pub fn pair(r: u64, j: u64) -> u64 {
    let s = r + j;
    s * (s + 1) / 2 + j
}

/// Inverse of [`pair`].
pub fn unpair(n: u64) -> (u64, u64) {
    // largest s with s(s+1)/2 <= n
    let mut s = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while s * (s + 1) / 2 > n {
        s -= 1;
    }
    while (s + 1) * (s + 2) / 2 <= n {
        s += 1;
    }
    let j = n - s * (s + 1) / 2;
    (s - j, j)
}

/// Inning by which rank `r` has been served `m >= 1` times.
pub fn bound(r: u64, m: u64) -> u64 {
    assert!(m >= 1, "bound needs m >= 1");
    pair(r, m - 1)
}

/// The piece `S_r = {k : unpair(k).0 = r}` of the partition of the naturals.
pub fn piece_of(k: u64) -> u64 {
    unpair(k).0
}

/// The first `count` members of `S_r`.
pub fn piece_members(r: u64, count: u64) -> impl Iterator<Item = u64> {
    (0..count).map(move |j| pair(r, j))
}
