/// Compensated accumulator. The alternating signs of the Möbius function
/// lose around three digits under naive summation at a sieve limit of 1e6;
/// the compensation term recovers them.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    err: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

impl From<KahanSum> for f64 {
    fn from(k: KahanSum) -> f64 {
        k.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_small_terms() {
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..10_000_000 {
            k.add(1e-16);
        }
        let naive = (0..10_000_000).fold(1.0f64, |s, _| s + 1e-16);
        let exact = 1.0 + 1e-9;
        assert!((k.value() - exact).abs() < 1e-15, "kahan {} vs {}", k.value(), exact);
        assert!((naive - exact).abs() > 1e-10, "naive summation should visibly drift");
    }
}
