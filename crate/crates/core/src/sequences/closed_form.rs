//! Counting functions with closed forms in terms of the integer square root.
//! All of them use `u64::isqrt`; floating point floors go wrong next to
//! perfect squares.

/// Number of odd squares `1, 9, 25, ...` that are `<= x`: ⌊(√x + 1)/2⌋.
pub fn odd_square_count(x: u64) -> u64 {
    x.isqrt().div_ceil(2)
}

/// Number of even squares `0, 4, 16, ...` that are `<= x`: ⌊(√x + 2)/2⌋.
pub fn even_square_count(x: u64) -> u64 {
    (x.isqrt() + 2) / 2
}

/// Number of pronic numbers `j(j+1)`, `j >= 0`, that are `<= x`:
/// ⌊(1 + √(4x + 1))/2⌋.
pub fn pronic_count(x: u64) -> u64 {
    (4 * x + 1).isqrt().div_ceil(2)
}
