use super::poly::{Coeff, Poly};

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int<C: Coeff>(n: usize) -> Poly<C> {
    Poly::from_coeffs(vec![C::one(); n])
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial<C: Coeff>(n: usize) -> Poly<C> {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial `[a choose b]_q`, zero when `b < 0` or `b > a`.
pub fn q_binom<C: Coeff>(a: i64, b: i64) -> Poly<C> {
    if b < 0 || b > a {
        return Poly::zero();
    }
    let (a, b) = (a as usize, b.min(a - b) as usize);
    // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], row by row up to column b.
    let mut row: Vec<Poly<C>> = vec![Poly::one()];
    for m in 1..=a {
        let width = b.min(m);
        let mut next = Vec::with_capacity(width + 1);
        for j in 0..=width {
            let left = if j > 0 { row[j - 1].clone() } else { Poly::zero() };
            let up = if j < row.len() && j < m { row[j].shift(j) } else { Poly::zero() };
            next.push(&left + &up);
        }
        row = next;
    }
    row[b].clone()
}
