use rug::Rational;

use crate::series::TruncatedSeries;

/// Residue-class split of a series: component `r` holds the coefficients of
/// `q^{mn+r}`, reindexed by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    source_order: usize,
    components: Vec<TruncatedSeries>,
}

impl Dissection {
    pub fn modulus(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[TruncatedSeries] {
        &self.components
    }

    pub fn component(&self, r: usize) -> &TruncatedSeries {
        &self.components[r]
    }

    /// Order of the series this was cut from.
    pub fn source_order(&self) -> usize {
        self.source_order
    }

    /// Reassembles the original series.
    pub fn interleave(&self) -> TruncatedSeries {
        interleave(self)
    }
}

/// `m`-dissection of `series`.
///
/// # Panics
/// If `m == 0`, or if `series.order() + 1 < m` (some residue class would
/// have no known coefficient).
pub fn dissect(series: &TruncatedSeries, m: usize) -> Dissection {
    assert!(m >= 1, "dissection modulus must be positive");
    let order = series.order();
    assert!(order + 1 >= m, "order {order} is too small for a {m}-dissection");
    let components = (0..m)
        .map(|r| {
            let coeffs = series.coeffs().iter().skip(r).step_by(m).cloned().collect();
            TruncatedSeries::new(coeffs)
        })
        .collect();
    Dissection { source_order: order, components }
}

pub fn interleave(d: &Dissection) -> TruncatedSeries {
    let m = d.modulus();
    let mut coeffs = vec![Rational::new(); d.source_order + 1];
    for (r, comp) in d.components.iter().enumerate() {
        for (n, c) in comp.coeffs().iter().enumerate() {
            coeffs[m * n + r] = c.clone();
        }
    }
    TruncatedSeries::new(coeffs)
}

/// `(A, B, C)` with `G = A(q³) − q·B(q³) − q²·C(q³)`: the residue-1 and
/// residue-2 components enter with a minus sign.
pub fn conjecture1_components(series: &TruncatedSeries) -> [TruncatedSeries; 3] {
    let d = dissect(series, 3);
    [d.components[0].clone(), -&d.components[1], -&d.components[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_split() {
        let s = TruncatedSeries::from_integers([1, 1, 1, 1]);
        let d = dissect(&s, 3);
        assert_eq!(d.component(0), &TruncatedSeries::from_integers([1, 1]));
        assert_eq!(d.component(1), &TruncatedSeries::from_integers([1]));
        assert_eq!(d.component(2), &TruncatedSeries::from_integers([1]));
        assert_eq!(d.interleave(), s);
    }

    #[test]
    fn conjecture_convention() {
        let s = TruncatedSeries::from_integers([5, -2, -3, 7, 1]);
        let [a, b, c] = conjecture1_components(&s);
        assert_eq!(a, TruncatedSeries::from_integers([5, 7]));
        assert_eq!(b, TruncatedSeries::from_integers([2, -1]));
        assert_eq!(c, TruncatedSeries::from_integers([3]));
    }

    proptest! {
        #[test]
        fn round_trip(v in proptest::collection::vec(-50i64..50, 1..80), m in 1usize..9) {
            prop_assume!(v.len() >= m);
            let s = TruncatedSeries::from_integers(v);
            prop_assert_eq!(dissect(&s, m).interleave(), s);
        }
    }
}
