//! Brute-force enumerators used as ground truth for the closed forms.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use crate::chromatic::DEFAULT_NODE_BUDGET;

/// Largest symbol set the bitmask searches support.
pub const MAX_SYMBOLS: u64 = 64;

/// A 3 x n array over the symbols `1..=lambda`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rectangle {
    pub rows: [Vec<u64>; 3],
}

impl Rectangle {
    pub fn columns(&self) -> usize {
        self.rows[0].len()
    }

    /// Rows are injective, columns hold three distinct symbols, every entry is in `1..=lambda`.
    pub fn is_latin(&self, lambda: u64) -> bool {
        let n = self.columns();
        if self.rows.iter().any(|r| r.len() != n) {
            return false;
        }
        let in_range = self
            .rows
            .iter()
            .flatten()
            .all(|&s| (1..=lambda).contains(&s));
        let rows_ok = self
            .rows
            .iter()
            .all(|r| (0..n).all(|i| (i + 1..n).all(|j| r[i] != r[j])));
        let cols_ok = (0..n).all(|j| {
            let [a, b, c] = [self.rows[0][j], self.rows[1][j], self.rows[2][j]];
            a != b && b != c && a != c
        });
        in_range && rows_ok && cols_ok
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_symbols(lambda: u64) -> Result<()> {
    if lambda > MAX_SYMBOLS {
        return Err(Error::invalid(format!(
            "at most {MAX_SYMBOLS} symbols supported, got {lambda}"
        )));
    }
    Ok(())
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Counts 3 x n Latin rectangles over `1..=lambda`, filling one column at a time.
///
/// With `fixed_first_row` the first row is pinned to `1, 2, ..., n`.
pub fn count_latin(
    n: usize,
    lambda: u64,
    fixed_first_row: bool,
    node_budget: u64,
) -> Result<BigInt> {
    if n == 0 || lambda == 0 {
        return Err(Error::invalid("n and lambda must be at least 1"));
    }
    check_symbols(lambda)?;
    if fixed_first_row && n as u64 > lambda {
        return Ok(BigInt::from(0));
    }
    let mut search = ColumnSearch {
        n,
        lambda,
        fixed_first_row,
        used: [0; 3],
        budget: Budget::new(node_budget),
        count: 0,
    };
    search.column(0)?;
    Ok(BigInt::from(search.count))
}

struct ColumnSearch {
    n: usize,
    lambda: u64,
    fixed_first_row: bool,
    /// Symbols already placed in each row, as bitmasks over `0..lambda`.
    used: [u64; 3],
    budget: Budget,
    count: u128,
}

impl ColumnSearch {
    fn column(&mut self, j: usize) -> Result<()> {
        if j == self.n {
            self.count += 1;
            return Ok(());
        }
        let top: Vec<u64> = if self.fixed_first_row {
            vec![j as u64]
        } else {
            (0..self.lambda).collect()
        };
        for a in top {
            self.budget.tick()?;
            if self.used[0] & (1 << a) != 0 {
                continue;
            }
            for b in 0..self.lambda {
                self.budget.tick()?;
                if b == a || self.used[1] & (1 << b) != 0 {
                    continue;
                }
                for c in 0..self.lambda {
                    self.budget.tick()?;
                    if c == a || c == b || self.used[2] & (1 << c) != 0 {
                        continue;
                    }
                    self.used[0] |= 1 << a;
                    self.used[1] |= 1 << b;
                    self.used[2] |= 1 << c;
                    let r = self.column(j + 1);
                    self.used[0] &= !(1 << a);
                    self.used[1] &= !(1 << b);
                    self.used[2] &= !(1 << c);
                    r?;
                }
            }
        }
        Ok(())
    }
}

/// Lists Latin rectangles in row-major lexicographic order, stopping after `limit`.
pub fn enumerate_latin(
    n: usize,
    lambda: u64,
    limit: usize,
    node_budget: u64,
) -> Result<Vec<Rectangle>> {
    if n == 0 || lambda == 0 {
        return Err(Error::invalid("n and lambda must be at least 1"));
    }
    check_symbols(lambda)?;
    let mut search = RowMajorSearch {
        n,
        lambda,
        cells: vec![0; 3 * n],
        budget: Budget::new(node_budget),
        limit,
        out: Vec::new(),
    };
    search.cell(0)?;
    Ok(search.out)
}

struct RowMajorSearch {
    n: usize,
    lambda: u64,
    cells: Vec<u64>,
    budget: Budget,
    limit: usize,
    out: Vec<Rectangle>,
}

impl RowMajorSearch {
    fn cell(&mut self, k: usize) -> Result<()> {
        if self.out.len() >= self.limit {
            return Ok(());
        }
        let n = self.n;
        if k == 3 * n {
            let rows = [0, 1, 2].map(|r| {
                self.cells[r * n..(r + 1) * n]
                    .iter()
                    .map(|s| s + 1)
                    .collect()
            });
            self.out.push(Rectangle { rows });
            return Ok(());
        }
        let (row, col) = (k / n, k % n);
        for s in 0..self.lambda {
            self.budget.tick()?;
            let clash_row = (0..col).any(|c| self.cells[row * n + c] == s);
            let clash_col = (0..row).any(|r| self.cells[r * n + col] == s);
            if clash_row || clash_col {
                continue;
            }
            self.cells[k] = s;
            self.cell(k + 1)?;
            if self.out.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }
}

/// Exhaustively counts injections `f: {1..n} -> {1..lambda}` with `f(j) != j`
/// for `j = 1..=t`.
pub fn count_injections_forbidden(lambda: u64, n: u64, t: u64, node_budget: u64) -> Result<BigInt> {
    if t > n || n > lambda {
        return Err(Error::invalid(format!(
            "need t <= n <= lambda, got lambda={lambda}, n={n}, t={t}"
        )));
    }
    check_symbols(lambda)?;
    let mut search = InjectionSearch {
        n,
        lambda,
        t,
        used: 0,
        budget: Budget::new(node_budget),
        count: 0,
    };
    search.position(0)?;
    Ok(BigInt::from(search.count))
}

struct InjectionSearch {
    n: u64,
    lambda: u64,
    t: u64,
    used: u64,
    budget: Budget,
    count: u128,
}

impl InjectionSearch {
    fn position(&mut self, j: u64) -> Result<()> {
        if j == self.n {
            self.count += 1;
            return Ok(());
        }
        for color in 0..self.lambda {
            self.budget.tick()?;
            if self.used & (1 << color) != 0 || (j < self.t && color == j) {
                continue;
            }
            self.used |= 1 << color;
            let r = self.position(j + 1);
            self.used &= !(1 << color);
            r?;
        }
        Ok(())
    }
}
