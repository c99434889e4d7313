//! Dense row-major f64 tensors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::DetRng;

/// Handle to a node on a [`crate::autodiff::Tape`].
pub type NodeId = usize;

/// A dense real tensor. `data` is row-major and `data.len()` always equals
/// the product of `shape`. A scalar has shape `[]` and one element.
///
/// `node` is set when the tensor was produced by (or registered on) a tape;
/// it is transient and never serialized.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
    #[serde(skip)]
    node: Option<NodeId>,
}

impl Tensor {
    /// Build a tensor from a shape and flat row-major data.
    pub fn from_vec(shape: Vec<usize>, data: Vec<f64>) -> Result<Tensor> {
        let expect: usize = shape.iter().product();
        if expect != data.len() {
            return Err(Error::InvalidArgument(format!(
                "tensor shape {:?} implies {} elements, got {}",
                shape,
                expect,
                data.len()
            )));
        }
        Ok(Tensor { shape, data, node: None })
    }

    pub fn zeros(shape: Vec<usize>) -> Tensor {
        let n: usize = shape.iter().product();
        Tensor { shape, data: vec![0.0; n], node: None }
    }

    pub fn scalar(v: f64) -> Tensor {
        Tensor { shape: vec![], data: vec![v], node: None }
    }

    /// 2-D convenience constructor from nested rows.
    pub fn matrix(rows: &[&[f64]]) -> Tensor {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Tensor { shape: vec![r, c], data, node: None }
    }

    pub fn vector(values: &[f64]) -> Tensor {
        Tensor { shape: vec![values.len()], data: values.to_vec(), node: None }
    }

    /// Entries drawn uniformly from `[-bound, bound]`.
    pub fn uniform(shape: Vec<usize>, bound: f64, rng: &mut DetRng) -> Tensor {
        use rand::Rng;
        let n: usize = shape.iter().product();
        let data = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        Tensor { shape, data, node: None }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn is_scalar(&self) -> bool {
        self.shape.is_empty()
    }

    /// Value of a scalar tensor.
    pub fn item(&self) -> Result<f64> {
        if self.is_scalar() {
            Ok(self.data[0])
        } else {
            Err(Error::NotScalar { op: "item", shape: self.shape.clone() })
        }
    }

    /// Row `r` of a 2-D tensor.
    pub fn row(&self, r: usize) -> &[f64] {
        assert_eq!(self.shape.len(), 2, "row() requires a 2-D tensor");
        let cols = self.shape[1];
        &self.data[r * cols..(r + 1) * cols]
    }

    pub fn node(&self) -> Option<NodeId> {
        self.node
    }

    pub(crate) fn set_node(&mut self, id: NodeId) {
        self.node = Some(id);
    }

    pub(crate) fn with_node(shape: Vec<usize>, data: Vec<f64>, node: NodeId) -> Tensor {
        Tensor { shape, data, node: Some(node) }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Equality on values only; tape attachment is ignored.
impl PartialEq for Tensor {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.data == other.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_validates_length() {
        assert!(Tensor::from_vec(vec![2, 3], vec![0.0; 6]).is_ok());
        assert!(Tensor::from_vec(vec![2, 3], vec![0.0; 5]).is_err());
    }

    #[test]
    fn scalar_roundtrip() {
        let s = Tensor::scalar(4.5);
        assert!(s.is_scalar());
        assert_eq!(s.item().unwrap(), 4.5);
        assert!(Tensor::vector(&[1.0, 2.0]).item().is_err());
    }

    #[test]
    fn serde_drops_node_handle() {
        let mut t = Tensor::vector(&[1.0, 2.0, 3.0]);
        t.set_node(5);
        let json = serde_json::to_string(&t).unwrap();
        let back: Tensor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.node(), None);
    }
}
