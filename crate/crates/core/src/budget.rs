use crate::error::{Error, Result};

/// Default cap on search nodes (assignments) per operation.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;
/// Default cap on the order of graphs handed to exponential searches.
pub const DEFAULT_VERTEX_LIMIT: usize = 64;
/// Hard cap on the order of constructed graphs.
pub const MAX_CONSTRUCTION_ORDER: usize = 5_000;

/// Work limits for the exponential searches, plus a running node count.
///
/// Running out of nodes is reported as [`Error::Exhausted`]; it is never
/// confused with a negative answer.
#[derive(Debug, Clone)]
pub struct Budget {
    pub node_limit: u64,
    pub vertex_limit: usize,
    nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_LIMIT)
    }
}

impl Budget {
    pub fn new(node_limit: u64) -> Self {
        Budget {
            node_limit,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            nodes: 0,
        }
    }

    pub fn with_vertex_limit(mut self, vertex_limit: usize) -> Self {
        self.vertex_limit = vertex_limit;
        self
    }

    /// Nodes consumed so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn remaining(&self) -> u64 {
        self.node_limit.saturating_sub(self.nodes)
    }

    /// A fresh budget with the same limits and a zeroed counter.
    pub fn fresh(&self) -> Budget {
        Budget {
            node_limit: self.node_limit,
            vertex_limit: self.vertex_limit,
            nodes: 0,
        }
    }

    /// Adds the nodes spent by a sub-search run on a separate budget.
    pub fn absorb(&mut self, other: &Budget) {
        self.nodes += other.nodes;
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            Err(Error::Exhausted { nodes: self.nodes })
        } else {
            Ok(())
        }
    }

    pub fn check_order(&self, order: usize) -> Result<()> {
        if order > self.vertex_limit {
            Err(Error::SizeGuard {
                requested: order,
                limit: self.vertex_limit,
            })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn check_construction(order: usize) -> Result<()> {
    if order > MAX_CONSTRUCTION_ORDER {
        Err(Error::SizeGuard {
            requested: order,
            limit: MAX_CONSTRUCTION_ORDER,
        })
    } else {
        Ok(())
    }
}
