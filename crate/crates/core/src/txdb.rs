//! Transaction databases, the two text input formats, and exact support
//! counting.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{MineError, Result};
use crate::itemset::{ItemId, ItemMask, Itemset};

/// 0-based position of a transaction within its database.
pub type TxId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    id: TxId,
    items: Itemset,
    mask: ItemMask,
}

impl Transaction {
    pub fn id(&self) -> TxId {
        self.id
    }

    pub fn items(&self) -> &Itemset {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn mask(&self) -> &ItemMask {
        &self.mask
    }

    pub fn contains(&self, mask: &ItemMask) -> bool {
        self.mask.contains(mask)
    }
}

/// An itemset together with its exact support and the transactions that
/// contain it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportedItemset {
    pub itemset: Itemset,
    pub support: u64,
    pub sources: Vec<TxId>,
}

impl SupportedItemset {
    pub fn new(itemset: Itemset, sources: Vec<TxId>) -> Self {
        SupportedItemset {
            itemset,
            support: sources.len() as u64,
            sources,
        }
    }
}

#[derive(Debug, Serialize)]
struct SupportedItemsetJson {
    items: Vec<u64>,
    support: u64,
}

impl Serialize for SupportedItemset {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SupportedItemsetJson {
            items: self.itemset.labels(),
            support: self.support,
        }
        .serialize(serializer)
    }
}

/// Ordered, immutable list of transactions over a fixed item universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionDatabase {
    universe_size: usize,
    transactions: Vec<Transaction>,
}

impl TransactionDatabase {
    /// Builds a database, assigning ids in order. Fails if any item falls
    /// outside the universe.
    pub fn new(universe_size: usize, rows: Vec<Itemset>) -> Result<Self> {
        let transactions = rows
            .into_iter()
            .enumerate()
            .map(|(id, items)| {
                if let Some(max) = items.max_item() {
                    if max.index() >= universe_size {
                        return Err(MineError::ItemOutOfRange {
                            item: max.one_based(),
                            universe: universe_size,
                        });
                    }
                }
                let mask = ItemMask::new(universe_size, &items);
                Ok(Transaction { id, items, mask })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TransactionDatabase {
            universe_size,
            transactions,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn transaction(&self, id: TxId) -> &Transaction {
        &self.transactions[id]
    }

    /// Item count of every transaction, in order.
    pub fn transaction_sizes(&self) -> Vec<usize> {
        self.transactions.iter().map(Transaction::len).collect()
    }

    pub fn check_in_range(&self, x: &Itemset) -> Result<()> {
        match x.max_item() {
            Some(max) if max.index() >= self.universe_size => Err(MineError::ItemOutOfRange {
                item: max.one_based(),
                universe: self.universe_size,
            }),
            _ => Ok(()),
        }
    }

    pub fn mask(&self, x: &Itemset) -> ItemMask {
        ItemMask::new(self.universe_size, x)
    }

    /// Exact support of `x` with the ids of every containing transaction.
    /// The empty itemset is contained in every transaction.
    pub fn support(&self, x: &Itemset) -> Result<SupportedItemset> {
        self.check_in_range(x)?;
        let mask = self.mask(x);
        let sources = self
            .transactions
            .iter()
            .filter(|t| t.contains(&mask))
            .map(Transaction::id)
            .collect();
        Ok(SupportedItemset::new(x.clone(), sources))
    }

    /// Support count only. `x` must be in range.
    pub fn support_count(&self, x: &Itemset) -> u64 {
        let mask = self.mask(x);
        self.transactions
            .iter()
            .filter(|t| t.contains(&mask))
            .count() as u64
    }

    /// 0/1 matrix text, one row per transaction, single-space separated.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            out.push_str(&t.items.to_row(self.universe_size));
            out.push('\n');
        }
        out
    }

    /// Item-list text with 1-based item numbers; empty transactions become
    /// blank lines.
    pub fn to_item_lists_text(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            let mut first = true;
            for item in t.items.iter() {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{}", item.one_based());
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the dense 0/1 format: one transaction per line, one whitespace
/// separated flag per item. Blank lines are skipped.
pub fn parse_matrix(text: &str) -> Result<TransactionDatabase> {
    let mut width: Option<usize> = None;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match width {
            None => width = Some(tokens.len()),
            Some(w) if w != tokens.len() => {
                return Err(MineError::format(
                    lineno,
                    format!("ragged row: expected {w} columns, found {}", tokens.len()),
                ));
            }
            Some(_) => {}
        }
        let mut items = Vec::new();
        for (col, token) in tokens.iter().enumerate() {
            match *token {
                "1" => items.push(ItemId(col as u32)),
                "0" => {}
                other => {
                    return Err(MineError::format(
                        lineno,
                        format!("column {}: expected 0 or 1, found {other:?}", col + 1),
                    ));
                }
            }
        }
        rows.push(Itemset::from_sorted_unchecked(items));
    }
    match width {
        Some(w) => TransactionDatabase::new(w, rows),
        None => Err(MineError::NoTransactions),
    }
}

/// Parses the sparse format: one transaction per line holding 1-based item
/// numbers. A blank line is an empty transaction.
pub fn parse_item_lists(text: &str, universe_size: usize) -> Result<TransactionDatabase> {
    if universe_size == 0 {
        return Err(MineError::Params("universe size must be positive".into()));
    }
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let mut items = Vec::new();
        for token in line.split_whitespace() {
            let n: u64 = token.parse().map_err(|_| {
                MineError::format(lineno, format!("expected an item number, found {token:?}"))
            })?;
            if n < 1 || n > universe_size as u64 {
                return Err(MineError::ItemOutOfRange {
                    item: n,
                    universe: universe_size,
                });
            }
            items.push(ItemId((n - 1) as u32));
        }
        let len = items.len();
        let itemset = Itemset::new(items);
        if itemset.len() != len {
            return Err(MineError::format(lineno, "duplicate item in transaction"));
        }
        rows.push(itemset);
    }
    if rows.is_empty() {
        return Err(MineError::NoTransactions);
    }
    TransactionDatabase::new(universe_size, rows)
}

/// Input format selector for [`read_database`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Matrix,
    /// Item lists; the universe is the given size, or the largest item
    /// number seen when `None`.
    Items(Option<usize>),
}

pub fn read_database(path: &Path, format: InputFormat) -> Result<TransactionDatabase> {
    let text = std::fs::read_to_string(path).map_err(|source| MineError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match format {
        InputFormat::Matrix => parse_matrix(&text),
        InputFormat::Items(Some(universe)) => parse_item_lists(&text, universe),
        InputFormat::Items(None) => {
            let largest = text
                .split_whitespace()
                .filter_map(|t| t.parse::<u64>().ok())
                .max()
                .unwrap_or(1)
                .max(1);
            parse_item_lists(&text, largest as usize)
        }
    }
}
