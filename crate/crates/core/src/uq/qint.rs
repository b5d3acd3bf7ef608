use serde::Serialize;

/// The quantum integer `[k] = (q^k − q^{−k}) / (q − q^{−1})`.
pub fn qint(k: i32, q: f64) -> f64 {
    (q.powi(k) - q.powi(-k)) / (q - q.recip())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QInt {
    pub k: i32,
    pub value: f64,
}

impl QInt {
    pub fn new(k: i32, q: f64) -> Self {
        QInt { k, value: qint(k, q) }
    }
}
