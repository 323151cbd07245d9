//! Collocation node generators.

use crate::constants::c_of_t;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    MappedChebyshev,
    Equispaced,
}

/// Ordered collocation nodes in [-1,1].
#[derive(Clone, Debug)]
pub struct NodeSet<R> {
    pub kind: NodeKind,
    pub nodes: Vec<R>,
}

impl<R: Real> NodeSet<R> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// 2N+2 nodes: Chebyshev points of [-1,1] pulled back through the x -> z map
/// and reflected about x = 0, so x_n = -x_(-n-1) holds exactly.
pub fn mapped_chebyshev_nodes<R: Real>(n: usize, t: &R) -> NodeSet<R> {
    let c = c_of_t(t);
    let half = R::from_f64(0.5);
    let lo = half.clone() * (R::one() - c.clone());
    let hi = half * (R::one() + c);
    let count = n + 1;
    let mut pos: Vec<R> = (0..count)
        .map(|k| {
            let theta =
                R::from_f64((2 * k + 1) as f64) * R::pi() / R::from_f64((2 * count) as f64);
            let y = lo.clone() * theta.cos() + hi.clone();
            t.clone() / R::pi() * y.acos()
        })
        .collect();
    // ascending in k already; assemble mirrored halves
    let mut nodes: Vec<R> = pos.iter().rev().map(|x| -x.clone()).collect();
    nodes.append(&mut pos);
    NodeSet {
        kind: NodeKind::MappedChebyshev,
        nodes,
    }
}

/// 2M+1 nodes n/M for n = -M..M, endpoints included.
pub fn equispaced_nodes<R: Real>(m: usize) -> NodeSet<R> {
    assert!(m >= 1, "equispaced grid needs M >= 1");
    let mf = R::from_usize(m);
    let nodes = (-(m as i64)..=m as i64)
        .map(|k| R::from_f64(k as f64) / mf.clone())
        .collect();
    NodeSet {
        kind: NodeKind::Equispaced,
        nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::map_to_z;

    #[test]
    fn smallest_mapped_set() {
        // N=0, T=2: the two nodes are +/- 2/3
        let ns = mapped_chebyshev_nodes(0, &2.0_f64);
        assert_eq!(ns.len(), 2);
        assert!((ns.nodes[0] + 2.0 / 3.0).abs() < 1e-15);
        assert!((ns.nodes[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn mapped_n1_values() {
        let ns = mapped_chebyshev_nodes(1, &2.0_f64);
        let c4 = (std::f64::consts::PI / 4.0).cos();
        let want0 = 2.0 / std::f64::consts::PI * (0.5 * c4 + 0.5).acos();
        let want1 = 2.0 / std::f64::consts::PI * (-0.5 * c4 + 0.5).acos();
        assert!((ns.nodes[2] - want0).abs() < 1e-15);
        assert!((ns.nodes[3] - want1).abs() < 1e-15);
    }

    #[test]
    fn symmetry_is_bitwise() {
        for n in [0usize, 1, 5, 12] {
            let ns = mapped_chebyshev_nodes(n, &2.0_f64);
            let len = ns.len();
            for k in 0..len / 2 {
                assert_eq!(ns.nodes[k], -ns.nodes[len - 1 - k]);
            }
            assert!(ns.nodes.iter().all(|x| x.abs() < 1.0));
        }
    }

    #[test]
    fn map_recovers_chebyshev_points() {
        // z(x_k) must be the Chebyshev points cos((2k+1)pi/(2N+2)), best first
        for t in [4.0 / 3.0, 2.0, 4.0] {
            let n = 7usize;
            let ns = mapped_chebyshev_nodes(n, &t);
            let pos = &ns.nodes[n + 1..];
            for (k, x) in pos.iter().enumerate() {
                let z = map_to_z(x, &t);
                let want = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * (n + 1)) as f64).cos();
                assert!((z - want).abs() < 1e-13, "T={t} k={k}");
            }
        }
    }

    #[test]
    fn equispaced_values() {
        let ns = equispaced_nodes::<f64>(1);
        assert_eq!(ns.nodes, vec![-1.0, 0.0, 1.0]);
        let ns = equispaced_nodes::<f64>(2);
        assert_eq!(ns.nodes, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        for m in [1usize, 3, 17] {
            assert_eq!(equispaced_nodes::<f64>(m).len(), 2 * m + 1);
        }
    }
}
