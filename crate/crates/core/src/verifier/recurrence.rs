//! Degree slices of the two deletion recurrences for `Y_G`.

use serde::{Deserialize, Serialize};

use crate::chromatic::{
    sum_over_weight_maps, two_row_y_fast, ORACLE_MAX_DEGREE, ORACLE_MAX_VERTICES,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};
use crate::poly::Poly;
use crate::scalar::to_rational;
use crate::schur2::{fp_profile, Profile};
use crate::TwoRowProfile;

/// `lhs = deletion + product + error` on one degree slice, each term
/// computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceIdentity {
    pub degree: usize,
    pub lhs: TwoRowProfile,
    pub deletion: TwoRowProfile,
    pub product: TwoRowProfile,
    pub error: TwoRowProfile,
}

impl SliceIdentity {
    pub fn rhs(&self) -> TwoRowProfile {
        self.deletion.add(&self.product).add(&self.error)
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::OutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(())
}

fn guard(g: &Graph, d: usize) -> Result<()> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "recurrence graph",
            size: g.n(),
            limit: ORACLE_MAX_VERTICES,
        });
    }
    if d > ORACLE_MAX_DEGREE {
        return Err(Error::TooLarge {
            what: "recurrence degree",
            size: d,
            limit: ORACLE_MAX_DEGREE,
        });
    }
    Ok(())
}

/// `(A - 1) B` on degree `d`.
fn shifted_product(a: &TwoRowProfile, b: &TwoRowProfile, d: usize) -> TwoRowProfile {
    a.sub(&Profile::one())
        .truncate(d)
        .product(&b.truncate(d))
        .slice(d)
}

/// `Y_G = Y_{G-v} + (Y_v - 1) Y_{G-N[v]} + sum X_G^alpha` on degree `d`,
/// the sum running over maps with `alpha(v) >= 1` and `alpha(u) >= 1` for
/// some neighbour `u` of `v`.
///
/// The `Y` terms come from independence polynomials; the error term is
/// summed over weight maps.
pub fn verify_deletion_slice(g: &Graph, v: usize, d: usize) -> Result<SliceIdentity> {
    check_vertex(g, v)?;
    guard(g, d)?;
    let minus_v = g.delete_vertices(&[v])?.graph;
    let minus_nv = g.delete_vertices(&g.closed_neighborhood(v))?.graph;
    let y_v = two_row_y_fast(&Graph::empty(1));
    let error = sum_over_weight_maps(g, d, |alpha| {
        alpha[v] >= 1 && g.neighbors(v).iter().any(|&u| alpha[u] >= 1)
    })?;
    Ok(SliceIdentity {
        degree: d,
        lhs: two_row_y_fast(g).slice(d),
        deletion: two_row_y_fast(&minus_v).slice(d),
        product: shifted_product(&y_v, &two_row_y_fast(&minus_nv), d),
        error,
    })
}

/// The clan-graph version: `v` is a leaf with neighbour `u`, and `G_v^n`
/// blows `v` up into `K_n`. On degree `d`,
/// `Y_{G_v^n} = Y_{G-v} + (Y_{K_n} - 1) Y_{G-{u,v}} + sum X_{G_v^n}^alpha`,
/// the sum running over maps on `V(G_v^n)` with `alpha(u) >= 1` and some
/// clique vertex weighted.
pub fn verify_leaf_clique_slice(g: &Graph, v: usize, n: usize, d: usize) -> Result<SliceIdentity> {
    check_vertex(g, v)?;
    let [u] = g.neighbors(v) else {
        return Err(Error::NotALeaf(v));
    };
    let u = *u;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "clique size {n}, expected at least 2"
        )));
    }
    let mut weights = WeightMap::ones(g.n());
    weights[v] = n;
    let clan = g.clan_graph(&weights)?;
    guard(&clan.graph, d)?;
    let u_clan = clan
        .block
        .iter()
        .position(|&b| b == u)
        .expect("u has weight 1");
    let clique: Vec<usize> = (0..clan.graph.n())
        .filter(|&i| clan.block[i] == v)
        .collect();
    let y_kn = fp_profile(&Poly::from_u64s(&[1, n as u64]), 4)?.map(to_rational);
    let minus_v = g.delete_vertices(&[v])?.graph;
    let minus_uv = g.delete_vertices(&[u, v])?.graph;
    let error = sum_over_weight_maps(&clan.graph, d, |alpha| {
        alpha[u_clan] >= 1 && clique.iter().any(|&c| alpha[c] >= 1)
    })?;
    Ok(SliceIdentity {
        degree: d,
        lhs: two_row_y_fast(&clan.graph).slice(d),
        deletion: two_row_y_fast(&minus_v).slice(d),
        product: shifted_product(&y_kn, &two_row_y_fast(&minus_uv), d),
        error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        for d in 0..=4 {
            assert!(verify_deletion_slice(&Graph::complete(2), 0, d).unwrap().holds());
            assert!(verify_deletion_slice(&Graph::empty(1), 0, d).unwrap().holds());
        }
        for d in 0..=5 {
            let r = verify_deletion_slice(&Graph::star(3), 0, d).unwrap();
            assert!(r.holds(), "degree {d}: {} vs {}", r.lhs, r.rhs());
        }
        let k1 = verify_deletion_slice(&Graph::empty(1), 0, 3).unwrap();
        assert!(k1.error.is_zero());
        for n in 2..=3 {
            for d in 0..=4 {
                assert!(verify_leaf_clique_slice(&Graph::complete(2), 1, n, d)
                    .unwrap()
                    .holds());
                assert!(verify_leaf_clique_slice(&Graph::path(3), 2, n, d).unwrap().holds());
            }
        }
        assert_eq!(
            verify_leaf_clique_slice(&Graph::path(3), 1, 2, 2).unwrap_err(),
            Error::NotALeaf(1)
        );
        assert!(verify_leaf_clique_slice(&Graph::path(3), 0, 1, 2).is_err());
        assert!(verify_deletion_slice(&Graph::empty(11), 0, 2).is_err());
    }

    #[test]
    fn complete_graph_y_from_its_polynomial() {
        for n in 1..=5 {
            let from_poly = fp_profile(&Poly::<num_bigint::BigInt>::from_u64s(&[1, n]), 4)
                .unwrap()
                .map(to_rational);
            assert_eq!(from_poly, two_row_y_fast(&Graph::complete(n as usize)));
        }
    }
}
