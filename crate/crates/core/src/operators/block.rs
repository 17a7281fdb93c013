use super::{CenteredAdjacency, LinearOperator};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which 2n x 2n operator a [`BlockOperator`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockRole {
    /// `[[A, I - D], [I, 0]]`
    Nb,
    /// `[[A̲, I - D̲], [I, 0]]`
    CenteredNb,
    /// `[[A̲/√α, (I - D̲)/α], [I, 0]]`
    Rescaled,
    /// `[[A̲/√α, 0], [I, 0]]`
    RescaledH0,
    /// `[[0, (I - D̲)/α], [0, 0]]`
    EPart,
}

#[derive(Debug, Clone)]
enum TopLeft<'g> {
    Zero,
    Adjacency(&'g Graph),
    Centered(CenteredAdjacency<'g>),
}

/// Matrix-free 2n x 2n block operator `[[c M, diag(t)], [b I, 0]]`.
#[derive(Debug, Clone)]
pub struct BlockOperator<'g> {
    role: BlockRole,
    n: usize,
    top_left: TopLeft<'g>,
    scale: f64,
    top_right: Option<Vec<f64>>,
    bottom_identity: bool,
}

/// `H = [[A, I - D], [I, 0]]`.
pub fn nb_operator(g: &Graph) -> BlockOperator<'_> {
    BlockOperator {
        role: BlockRole::Nb,
        n: g.n(),
        top_left: TopLeft::Adjacency(g),
        scale: 1.0,
        top_right: Some((0..g.n()).map(|i| 1.0 - g.degree(i) as f64).collect()),
        bottom_identity: true,
    }
}

/// `Ĥ̲ = [[Â̲, I - D̲̂], [I, 0]]` where `D̲̂` holds the row sums of `Â̲`.
pub fn centered_nb_operator<'g>(g: &'g Graph, est: &super::ModelEstimate) -> Result<BlockOperator<'g>> {
    let centered = CenteredAdjacency::new(g, est)?;
    let top_right = (0..g.n()).map(|i| 1.0 - centered.row_sum(i)).collect();
    Ok(BlockOperator {
        role: BlockRole::CenteredNb,
        n: g.n(),
        top_left: TopLeft::Centered(centered),
        scale: 1.0,
        top_right: Some(top_right),
        bottom_identity: true,
    })
}

/// Split the rescaled conjugate `H̃ = H̃₀ + E` of a centered operator.
pub fn rescaled_split<'g>(
    op: &BlockOperator<'g>,
    alpha: f64,
) -> Result<(BlockOperator<'g>, BlockOperator<'g>, BlockOperator<'g>)> {
    if op.role != BlockRole::CenteredNb {
        return Err(Error::param("rescaled_split expects a centered non-backtracking operator"));
    }
    if !(alpha > 0.0) {
        return Err(Error::param(format!("alpha = {alpha} must be positive")));
    }
    let diag: Vec<f64> = op.top_right.as_ref().unwrap().iter().map(|t| t / alpha).collect();
    let scale = 1.0 / alpha.sqrt();
    let full = BlockOperator {
        role: BlockRole::Rescaled,
        scale,
        top_right: Some(diag.clone()),
        ..op.clone()
    };
    let h0 = BlockOperator {
        role: BlockRole::RescaledH0,
        scale,
        top_right: None,
        ..op.clone()
    };
    let e = BlockOperator {
        role: BlockRole::EPart,
        n: op.n,
        top_left: TopLeft::Zero,
        scale: 1.0,
        top_right: Some(diag),
        bottom_identity: false,
    };
    Ok((full, h0, e))
}

impl BlockOperator<'_> {
    pub fn role(&self) -> BlockRole {
        self.role
    }

    /// Half dimension n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonal of the top-right block.
    pub fn top_right_diagonal(&self) -> Option<&[f64]> {
        self.top_right.as_deref()
    }

    /// Scale applied to the top-left block.
    pub fn top_left_scale(&self) -> f64 {
        self.scale
    }

    /// Apply the top-left block alone (including its scale).
    pub fn apply_top_left(&self, x: &[f64], y: &mut [f64]) {
        match &self.top_left {
            TopLeft::Zero => y.fill(0.0),
            TopLeft::Adjacency(g) => g.adj_matvec(x, y),
            TopLeft::Centered(c) => c.apply(x, y),
        }
        if self.scale != 1.0 {
            y.iter_mut().for_each(|v| *v *= self.scale);
        }
    }
}

impl LinearOperator for BlockOperator<'_> {
    fn dim(&self) -> usize {
        2 * self.n
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let n = self.n;
        let (x1, x2) = x.split_at(n);
        let (y1, y2) = y.split_at_mut(n);
        self.apply_top_left(x1, y1);
        if let Some(t) = &self.top_right {
            for i in 0..n {
                y1[i] += t[i] * x2[i];
            }
        }
        if self.bottom_identity {
            y2.copy_from_slice(x1);
        } else {
            y2.fill(0.0);
        }
    }
}
