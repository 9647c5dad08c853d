//! The functor pair `F(A) = E₁₁A` and `G(B) = Bⁿ` between `M_n(S)`- and `S`-semimodules.

use std::sync::Arc;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::constructions::products::MatrixCoding;
use crate::error::{Error, Result};
use crate::table::MAX_ORDER;

fn coding(s: &FiniteSemiring, ms: &FiniteSemiring, n: usize) -> Result<MatrixCoding> {
    let coding = MatrixCoding { base: s.order(), n };
    if n == 0 || coding.order() != ms.order() {
        return Err(Error::BaseMismatch);
    }
    Ok(coding)
}

/// `F(A) = {E₁₁a | a ∈ A}` with `s` acting as `sE₁₁`. Elements keep the
/// relative order of their indices in `A`.
pub fn morita_reduce(
    a: &FiniteSemimodule,
    s: &Arc<FiniteSemiring>,
    n: usize,
) -> Result<FiniteSemimodule> {
    let c = coding(s, a.base(), n)?;
    let e11 = c.unit(0, 0, s.one());
    let mut carrier: Vec<usize> = (0..a.order()).map(|x| a.act(e11, x)).collect();
    carrier.sort_unstable();
    carrier.dedup();
    let pos = |x: usize| carrier.binary_search(&x).expect("E11·A is closed");
    FiniteSemimodule::from_fn(
        s,
        carrier.len(),
        |x, y| pos(a.add(carrier[x], carrier[y])),
        |t, x| pos(a.act(c.unit(0, 0, t), carrier[x])),
    )
}

/// `G(B) = Bⁿ` as column vectors with the matrix action. A tuple is indexed by
/// its entries read as base-`|B|` digits, first entry most significant.
pub fn morita_expand(
    b: &FiniteSemimodule,
    ms: &Arc<FiniteSemiring>,
    n: usize,
) -> Result<FiniteSemimodule> {
    let c = coding(b.base(), ms, n)?;
    let k = b.order();
    let size =
        k.checked_pow(n as u32)
            .filter(|&x| x <= MAX_ORDER)
            .ok_or(Error::SizeCapExceeded {
                what: "expanded semimodule order",
                size: usize::MAX,
                cap: MAX_ORDER,
            })?;
    let decode = |mut x: usize| {
        let mut v = vec![0; n];
        for e in v.iter_mut().rev() {
            *e = x % k;
            x /= k;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &e| acc * k + e);
    FiniteSemimodule::from_fn(
        ms,
        size,
        |x, y| {
            let (u, v) = (decode(x), decode(y));
            encode(
                &u.iter()
                    .zip(&v)
                    .map(|(&p, &q)| b.add(p, q))
                    .collect::<Vec<_>>(),
            )
        },
        |m, x| {
            let (mat, v) = (c.decode(m), decode(x));
            let w: Vec<usize> = (0..n)
                .map(|i| (0..n).fold(0, |acc, j| b.add(acc, b.act(mat[i * n + j], v[j]))))
                .collect();
            encode(&w)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain_semiring, matrix_semiring};
    use crate::limits::Limits;

    #[test]
    fn reduce_and_expand_sizes() {
        let b = Arc::new(chain_semiring(1).unwrap());
        let m2 = Arc::new(matrix_semiring(&b, 2, &Limits::default()).unwrap());
        let reg = FiniteSemimodule::regular(&m2);
        let f = morita_reduce(&reg, &b, 2).unwrap();
        assert_eq!(f.order(), 4);
        let g = morita_expand(&f, &m2, 2).unwrap();
        assert_eq!(g.order(), 16);
        assert!(morita_reduce(&reg, &b, 1).is_err());
    }
}
