use crate::error::{Error, Result};
use crate::graph::Graph;

/// Scans vertices in index order, keeping each one whose addition leaves
/// the set k-limited. For `k = 1` this picks vertices pairwise at distance
/// at least 3, so at least `n / (Δ² + 1)` of them.
pub fn greedy_k_limited(g: &Graph, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let mut load = vec![0usize; g.vertex_count()];
    let mut chosen = Vec::new();
    for v in g.vertices() {
        let fits = load[v] < k && g.neighbors(v).iter().all(|&w| load[w] < k);
        if fits {
            load[v] += 1;
            for &w in g.neighbors(v) {
                load[w] += 1;
            }
            chosen.push(v);
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_named, gen_random_regular, NamedFamily};
    use crate::verify::verify_k_limited;

    #[test]
    fn small_cases() {
        assert_eq!(
            greedy_k_limited(&gen_cycle(6).unwrap(), 1).unwrap(),
            vec![0, 3]
        );
        assert_eq!(
            greedy_k_limited(&gen_cycle(6).unwrap(), 2).unwrap(),
            vec![0, 1, 3, 4]
        );
        assert_eq!(
            greedy_k_limited(&gen_named(NamedFamily::Petersen), 1)
                .unwrap()
                .len(),
            1
        );
        assert!(greedy_k_limited(&Graph::new(3), 0).is_err());
    }

    #[test]
    fn valid_and_meets_distance_bound() {
        for seed in 0..30 {
            let g = gen_random_regular(40, 4, seed).unwrap();
            for k in 1..=5 {
                let x = greedy_k_limited(&g, k).unwrap();
                assert!(verify_k_limited(&g, &x, k).unwrap().valid);
                if k == 1 {
                    assert!(x.len() * 17 >= 40);
                }
                if k > 4 {
                    assert_eq!(x.len(), 40);
                }
            }
        }
    }
}
