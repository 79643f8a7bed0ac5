//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! The rank over `Z` computed this way equals the rank over `Q`.

/// Rank of a dense row-major integer matrix.
pub fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for c in 0..cols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c];
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[c];
            for (x, &p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                // Exact by Sylvester's identity.
                *x = (pivot * *x - factor * p) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(integer_rank(vec![]), 0);
        assert_eq!(integer_rank(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(vec![vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(
            integer_rank(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
            3
        );
        // Boundary of the triangle's edges onto its vertices has rank 2.
        assert_eq!(
            integer_rank(vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]),
            2
        );
    }

    #[test]
    fn rank_deficient_after_swaps() {
        let m = vec![
            vec![0, 2, 4, 6],
            vec![1, 1, 1, 1],
            vec![1, 3, 5, 7],
            vec![2, 4, 6, 8],
        ];
        assert_eq!(integer_rank(m), 2);
    }
}
