//! The linearized polynomial `f(x) = a^(2^alpha) x^(2^(2 alpha)) + a x`.
//!
//! `f` is GF(2)-linear, so `f(x) = rhs` is solved by writing down its
//! `e x e` bit matrix on the polynomial basis and eliminating.

use crate::error::{Error, Result};
use crate::gf2::{Element, Field};

/// Evaluates `a^(2^alpha) x^(2^(2 alpha)) + a x`.
pub fn linearized_map(field: &Field, alpha: u32, a: Element, x: Element) -> Element {
    let a_frob = field.frobenius(a, alpha);
    let x_frob2 = field.frobenius(x, 2 * (alpha % field.degree()));
    field.mul(a_frob, x_frob2) + field.mul(a, x)
}

/// Solution set of `f(x) = rhs`: empty, or `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedSolution {
    particular: Option<Element>,
    kernel_basis: Vec<Element>,
}

impl LinearizedSolution {
    pub fn solvable(&self) -> bool {
        self.particular.is_some()
    }

    /// Dimension of `ker f` over GF(2), whether or not `rhs` is attained.
    pub fn kernel_dim(&self) -> u32 {
        self.kernel_basis.len() as u32
    }

    pub fn kernel_basis(&self) -> &[Element] {
        &self.kernel_basis
    }

    /// One solution; the canonical choice has all free coordinates zero.
    pub fn particular(&self) -> Option<Element> {
        self.particular
    }

    /// `2^kernel_dim` when solvable, otherwise 0.
    pub fn solution_count(&self) -> u64 {
        if self.solvable() {
            1 << self.kernel_dim()
        } else {
            0
        }
    }

    /// Every solution, in the order of the binary counter over the kernel basis.
    pub fn solutions(&self) -> impl Iterator<Item = Element> + '_ {
        let count = self.solution_count();
        let base = self.particular.unwrap_or(Element::ZERO);
        (0..count).map(move |mask| {
            self.kernel_basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(base, |acc, (_, &k)| acc + k)
        })
    }
}

/// Solves `f(x) = rhs` for `f(x) = a^(2^alpha) x^(2^(2 alpha)) + a x`.
pub fn solve_linearized(
    field: &Field,
    alpha: u32,
    a: Element,
    rhs: Element,
) -> Result<LinearizedSolution> {
    if a.is_zero() {
        return Err(Error::ZeroArgument { what: "a" });
    }
    let columns: Vec<u32> = (0..field.degree())
        .map(|i| linearized_map(field, alpha, a, Element::from_bits(1 << i)).bits())
        .collect();
    let (particular, kernel) = solve_gf2(&columns, field.degree(), rhs.bits());
    Ok(LinearizedSolution {
        particular: particular.map(Element::from_bits),
        kernel_basis: kernel.into_iter().map(Element::from_bits).collect(),
    })
}

/// Solves `sum_i s_i columns[i] = rhs` over GF(2), with `rows` output bits
/// per column. Returns one solution (free variables zero) if any, and a basis
/// of the null space.
pub(crate) fn solve_gf2(columns: &[u32], rows: u32, rhs: u32) -> (Option<u32>, Vec<u32>) {
    let ncols = columns.len();
    assert!(ncols < 64, "at most 63 unknowns");
    let rhs_bit = 1u64 << ncols;
    // row j: bit i = bit j of column i; bit ncols = bit j of rhs
    let mut matrix: Vec<u64> = (0..rows)
        .map(|j| {
            let coeffs = columns
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (((c >> j) & 1) as u64) << i);
            coeffs | ((((rhs >> j) & 1) as u64) * rhs_bit)
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0;
    for col in 0..ncols {
        let Some(found) = (row..matrix.len()).find(|&r| matrix[r] >> col & 1 == 1) else {
            continue;
        };
        matrix.swap(row, found);
        let pivot_row = matrix[row];
        for (r, other) in matrix.iter_mut().enumerate() {
            if r != row && *other >> col & 1 == 1 {
                *other ^= pivot_row;
            }
        }
        pivots.push((row, col));
        row += 1;
    }

    let consistent = matrix[row..].iter().all(|&r| r & rhs_bit == 0);
    let particular = consistent.then(|| {
        pivots.iter().fold(0u32, |acc, &(r, c)| {
            if matrix[r] & rhs_bit != 0 {
                acc | 1 << c
            } else {
                acc
            }
        })
    });

    let is_pivot = |c: usize| pivots.iter().any(|&(_, pc)| pc == c);
    let kernel = (0..ncols)
        .filter(|&c| !is_pivot(c))
        .map(|free| {
            pivots.iter().fold(1u32 << free, |acc, &(r, pc)| {
                if matrix[r] >> free & 1 == 1 {
                    acc | 1 << pc
                } else {
                    acc
                }
            })
        })
        .collect();
    (particular, kernel)
}
