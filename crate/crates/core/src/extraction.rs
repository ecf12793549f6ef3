//! Extraction of a maximum irredundant subfamily.
//!
//! After reduction, the incidence of the generating family obtained from
//! any restriction `F|t` is `N_x F|t - N_x S|t`, with no need to re-run the
//! reduction. A point `x` of net incidence one roots a binary search tree:
//! the node takes a member of `F|t` containing `x`, and the subtrees are
//! built on the parts of `t` left and right of `x`. Read in postorder, the
//! node intervals form an irredundant sequence as long as `G`.

use crate::error::{Error, Result};
use crate::family::{Family, Interval};
use crate::reduction::{fk_run, ReductionResult};

/// A node of the search tree. Children are indices into
/// [`SearchTree::nodes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub x: usize,
    pub interval: Interval,
    /// The window this node was built for; `interval` lies inside it.
    pub window: Interval,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// Binary search tree stored as an arena, so arbitrarily deep trees are
/// built, walked and dropped without recursion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchTree {
    nodes: Vec<TreeNode>,
    root: Option<usize>,
}

impl SearchTree {
    pub fn root(&self) -> Option<&TreeNode> {
        self.root.map(|i| &self.nodes[i])
    }

    pub fn root_index(&self) -> Option<usize> {
        self.root
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &TreeNode {
        &self.nodes[index]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Left subtree, right subtree, then the node itself.
    pub fn postorder(&self) -> Vec<(usize, Interval)> {
        // reverse of a (node, right, left) preorder
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(i) = stack.pop() {
            let node = &self.nodes[i];
            out.push((node.x, node.interval));
            stack.extend(node.left);
            stack.extend(node.right);
        }
        out.reverse();
        out
    }

    /// Node points in symmetric order; strictly increasing for a valid tree.
    pub fn inorder_points(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = Vec::new();
        let mut cursor = self.root;
        loop {
            while let Some(i) = cursor {
                stack.push(i);
                cursor = self.nodes[i].left;
            }
            let Some(i) = stack.pop() else { break };
            out.push(self.nodes[i].x);
            cursor = self.nodes[i].right;
        }
        out
    }

    /// The node intervals as a family on `[0, n)`.
    pub fn intervals(&self, n: usize) -> Family {
        Family::from_vec_unchecked(n, self.nodes.iter().map(|node| node.interval).collect())
    }
}

/// Free-function form of [`SearchTree::postorder`].
pub fn postorder(tree: &SearchTree) -> Vec<(usize, Interval)> {
    tree.postorder()
}

#[derive(Clone, Copy)]
enum Slot {
    Root,
    Left(usize),
    Right(usize),
}

/// Builds the search tree of `F|window` from a family and its reduced
/// multiset `S`.
///
/// At each window the largest point with net incidence one is chosen, and
/// the member of `F|window` containing it with the largest right endpoint
/// (then smallest left endpoint). Fails with [`Error::Inconsistent`] when a
/// nonempty window has no point of net incidence one, which means `S` did
/// not come from reducing `F`.
pub fn build_tree(family: &Family, reduced: &[Interval], window: &Interval) -> Result<SearchTree> {
    let mut tree = SearchTree::default();
    let mut pending = vec![(*window, Slot::Root)];
    while let Some((t, slot)) = pending.pop() {
        let members: Vec<&Interval> = family.iter().filter(|f| t.contains(f)).collect();
        if members.is_empty() {
            continue;
        }
        let x = pick_point(&members, reduced, &t).ok_or(Error::Inconsistent { window: t })?;
        let interval = members
            .iter()
            .filter(|f| f.contains_point(x))
            .max_by_key(|f| (f.hi(), std::cmp::Reverse(f.lo())))
            .copied()
            .copied()
            .ok_or(Error::Inconsistent { window: t })?;
        let index = tree.nodes.len();
        tree.nodes.push(TreeNode {
            x,
            interval,
            window: t,
            left: None,
            right: None,
        });
        match slot {
            Slot::Root => tree.root = Some(index),
            Slot::Left(parent) => tree.nodes[parent].left = Some(index),
            Slot::Right(parent) => tree.nodes[parent].right = Some(index),
        }
        if let Some(right) = Interval::try_new(x + 1, t.hi()) {
            pending.push((right, Slot::Right(index)));
        }
        if let Some(left) = Interval::try_new(t.lo(), x) {
            pending.push((left, Slot::Left(index)));
        }
    }
    Ok(tree)
}

/// Largest `x` in `t` with `N_x F|t - N_x S|t == 1`.
fn pick_point(members: &[&Interval], reduced: &[Interval], t: &Interval) -> Option<usize> {
    let mut diff = vec![0isize; t.len() + 1];
    for f in members {
        diff[f.lo() - t.lo()] += 1;
        diff[f.hi() - t.lo()] -= 1;
    }
    for s in reduced.iter().filter(|s| t.contains(s)) {
        diff[s.lo() - t.lo()] -= 1;
        diff[s.hi() - t.lo()] += 1;
    }
    let mut net = 0isize;
    let nets: Vec<isize> = diff[..t.len()]
        .iter()
        .map(|d| {
            net += d;
            net
        })
        .collect();
    nets.iter()
        .rposition(|&c| c == 1)
        .map(|offset| t.lo() + offset)
}

/// Everything computed for one family: the reduction and the search tree.
#[derive(Debug, Clone)]
pub struct Solution {
    n: usize,
    reduction: ReductionResult,
    tree: SearchTree,
}

impl Solution {
    pub fn reduction(&self) -> &ReductionResult {
        &self.reduction
    }

    pub fn generators(&self) -> &Family {
        self.reduction.generators()
    }

    pub fn reduced(&self) -> &[Interval] {
        self.reduction.reduced()
    }

    pub fn tree(&self) -> &SearchTree {
        &self.tree
    }

    /// The maximum irredundant subfamily `F'`.
    pub fn irredundant(&self) -> Family {
        self.tree.intervals(self.n)
    }
}

pub fn solve(family: &Family) -> Result<Solution> {
    let reduction = fk_run(family);
    let tree = match family.span() {
        Some(all) => build_tree(family, reduction.reduced(), &all)?,
        None => SearchTree::default(),
    };
    Ok(Solution {
        n: family.n(),
        reduction,
        tree,
    })
}

/// A maximum irredundant subfamily of `F`, as large as its minimum
/// generating family.
pub fn irredundant_subfamily(family: &Family) -> Result<Family> {
    solve(family).map(|s| s.irredundant())
}
