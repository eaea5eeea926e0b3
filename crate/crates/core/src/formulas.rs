//! Closed-form values that the computed quantities are checked against.
//!
//! Everything here is exact integer arithmetic in `u128`/`i128`.

use crate::space::FormType;

fn pow(q: u64, e: usize) -> u128 {
    (q as u128).pow(e as u32)
}

/// `|Omega^eps| = q^m (q^m + eps) / 2`, the number of type-`eps` forms.
pub fn omega_size(m: usize, q: u64, ty: FormType) -> u128 {
    let qm = pow(q, m);
    match ty {
        FormType::Plus => qm * (qm + 1) / 2,
        FormType::Minus => qm * (qm - 1) / 2,
    }
}

/// Number of 1-spaces, `|G:P| = (q^{2m} - 1) / (q - 1)`.
pub fn line_count(m: usize, q: u64) -> u128 {
    (pow(q, 2 * m) - 1) / (q as u128 - 1)
}

/// `<pi_0, pi_0>`: orbits of `G_v` on `V \ 0`. The class `v^perp \ <v>` is
/// empty when `m = 1`.
pub fn pi0_norm(m: usize, q: u64) -> u64 {
    if m == 1 {
        2 * q - 2
    } else {
        2 * q - 1
    }
}

/// `<pi^eps, pi^eps> = q/2 + 1`, except `q/2` for `pi^-` when `m = 1`.
pub fn omega_norm(m: usize, q: u64, ty: FormType) -> u64 {
    if m == 1 && ty == FormType::Minus {
        q / 2
    } else {
        q / 2 + 1
    }
}

/// `<pi^+, pi^-> = q/2 = |{a + a^2}|`.
pub fn omega_cross(q: u64) -> u64 {
    q / 2
}

/// `<pi_0, pi^eps>`: the number of nonempty level sets `{v != 0 : Q(v) = c}`.
/// All `q` are nonempty except the singular level of `Q-` when `m = 1`.
pub fn pi0_omega(m: usize, q: u64, ty: FormType) -> u64 {
    if m == 1 && ty == FormType::Minus {
        q - 1
    } else {
        q
    }
}

/// Rank of `G` on 1-spaces: 3, or 2 for the doubly transitive `m = 1`.
pub fn line_rank(m: usize) -> u64 {
    if m == 1 {
        2
    } else {
        3
    }
}

/// `((q^{2m}-1)/(q-1), (q^{2m-1}-q)/(q-1), (q^{2m-2}-1)/(q-1) - 2, (q^{2m-2}-1)/(q-1))`.
pub fn srg_params(m: usize, q: u64) -> (u128, u128, i128, u128) {
    let d = q as u128 - 1;
    let v = (pow(q, 2 * m) - 1) / d;
    let k = (pow(q, 2 * m - 1) - q as u128) / d;
    let mu = (pow(q, 2 * m - 2) - 1) / d;
    (v, k, mu as i128 - 2, mu)
}

/// `chi^-(1), chi^+(1) = ((q^{2m} - q)/(q - 1) -+ q^m) / 2`.
pub fn chi_degrees(m: usize, q: u64) -> (u128, u128) {
    let base = (pow(q, 2 * m) - q as u128) / (q as u128 - 1);
    let qm = pow(q, m);
    ((base - qm) / 2, (base + qm) / 2)
}

/// `pi'(1) = (q/2 - 1) |G:P|`.
pub fn pi_prime_degree(m: usize, q: u64) -> u128 {
    (q as u128 / 2 - 1) * line_count(m, q)
}
