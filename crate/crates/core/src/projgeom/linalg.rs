use crate::exactnum::CycloNum;

/// Basis of the right null space of `rows` (each of length `ncols`), by exact
/// Gauss-Jordan elimination over the cyclotomic field.
pub fn kernel(rows: &[Vec<CycloNum>], ncols: usize, zero: &CycloNum) -> Vec<Vec<CycloNum>> {
    let mut m: Vec<Vec<CycloNum>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = m[i].iter().zip(&m[r]).map(|(a, b)| a - &(&f * b)).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let one = zero.field().one();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero.clone(); ncols];
            v[free] = one.clone();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][free];
            }
            v
        })
        .collect()
}

/// Rank of the matrix given by `rows`.
pub fn rank(rows: &[Vec<CycloNum>], ncols: usize, zero: &CycloNum) -> usize {
    ncols - kernel(rows, ncols, zero).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CyclotomicField;

    #[test]
    fn kernel_vectors_annihilate_rows() {
        let k = CyclotomicField::new(8).unwrap();
        let z = k.zeta();
        let rows = vec![
            vec![z.clone(), k.one(), k.zero(), k.zero()],
            vec![k.zero(), k.zero(), k.from_int(2), &z * &z],
        ];
        let ker = kernel(&rows, 4, &k.zero());
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &rows {
                let dot = row.iter().zip(v).fold(k.zero(), |acc, (a, b)| &acc + &(a * b));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&rows, 4, &k.zero()), 2);
    }

    #[test]
    fn dependent_rows_have_lower_rank() {
        let k = CyclotomicField::new(6).unwrap();
        let z = k.zeta();
        let r1 = vec![k.one(), z.clone(), k.zero(), k.from_int(3)];
        let r2: Vec<CycloNum> = r1.iter().map(|x| x * &z).collect();
        assert_eq!(rank(&[r1, r2], 4, &k.zero()), 1);
    }
}
