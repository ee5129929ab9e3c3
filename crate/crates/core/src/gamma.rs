//! Permutation-module realization of the rank-4 combinatorics.
//!
//! X is a fixed 4-element set; Pairs is the set of its 6 two-element
//! subsets in lexicographic order; Parts is the set of its 3 partitions
//! into two pairs. The augmentation, norm, pair-sum, dual, complement and
//! relative maps are explicit integer matrices in these canonical bases,
//! reproducible byte-for-byte. Exactness of the named sequences is decided
//! by Smith-normal-form homology of lattice presentations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zmat::IntMatrix;

/// Pairs in lexicographic order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Partitions into two pairs, ordered by the pair containing 0; entries
/// index into PAIRS.
pub const PARTITIONS: [[usize; 2]; 3] = [[0, 5], [1, 4], [2, 3]];

/// Complement pair: PAIR_COMPLEMENT[i] indexes X \ PAIRS[i].
pub const PAIR_COMPLEMENT: [usize; 6] = [5, 4, 3, 2, 1, 0];

/// Partition containing each pair.
pub const PARTITION_OF_PAIR: [usize; 6] = [0, 1, 2, 2, 1, 0];

pub fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    PAIRS.iter().position(|&p| p == (a, b)).expect("not a pair")
}

/// Ambient space of a map end, used for shapes and the permutation action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    X,
    Pairs,
    Parts,
    /// The trivial lattice Z.
    Z,
    /// Z[X] x Z.
    XxZ,
}

impl Space {
    pub fn rank(&self) -> usize {
        match self {
            Space::X => 4,
            Space::Pairs => 6,
            Space::Parts => 3,
            Space::Z => 1,
            Space::XxZ => 5,
        }
    }

    /// Matrix of the permutation g of X acting on this space.
    pub fn perm_matrix(&self, g: &[usize; 4]) -> IntMatrix {
        match self {
            Space::Z => IntMatrix::identity(1),
            Space::X => {
                let mut m = IntMatrix::zero(4, 4);
                for (j, &gj) in g.iter().enumerate() {
                    m[(gj, j)] = BigInt::one();
                }
                m
            }
            Space::Pairs => {
                let mut m = IntMatrix::zero(6, 6);
                for (j, &(a, b)) in PAIRS.iter().enumerate() {
                    m[(pair_index(g[a], g[b]), j)] = BigInt::one();
                }
                m
            }
            Space::Parts => {
                let mut m = IntMatrix::zero(3, 3);
                for (j, part) in PARTITIONS.iter().enumerate() {
                    let image_pair = {
                        let (a, b) = PAIRS[part[0]];
                        pair_index(g[a], g[b])
                    };
                    m[(PARTITION_OF_PAIR[image_pair], j)] = BigInt::one();
                }
                m
            }
            Space::XxZ => {
                let mut m = IntMatrix::identity(5);
                let px = Space::X.perm_matrix(g);
                for i in 0..4 {
                    for j in 0..4 {
                        m[(i, j)] = px[(i, j)].clone();
                    }
                }
                m
            }
        }
    }
}

/// A named equivariant map between permutation lattices.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub name: String,
    pub src: Space,
    pub dst: Space,
    pub mat: IntMatrix,
}

impl ModuleMap {
    fn new(name: &str, src: Space, dst: Space, mat: IntMatrix) -> ModuleMap {
        assert_eq!(mat.rows(), dst.rank());
        assert_eq!(mat.cols(), src.rank());
        ModuleMap { name: name.to_string(), src, dst, mat }
    }

    pub fn compose(&self, inner: &ModuleMap) -> Result<IntMatrix> {
        if inner.dst != self.src {
            return Err(Error::ShapeMismatch(format!(
                "{} . {}: {:?} vs {:?}",
                self.name, inner.name, self.src, inner.dst
            )));
        }
        Ok(self.mat.mul(&inner.mat))
    }

    /// Commutation with every permutation of X.
    pub fn is_equivariant(&self) -> bool {
        all_permutations().iter().all(|g| {
            let left = self.dst.perm_matrix(g).mul(&self.mat);
            let right = self.mat.mul(&self.src.perm_matrix(g));
            left == right
        })
    }
}

pub fn all_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut items = [0usize, 1, 2, 3];
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All map names accepted by `build_map`.
pub const MAP_NAMES: [&str; 12] = [
    "epsilon_X",
    "nu_X",
    "sigma",
    "tau",
    "gamma",
    "id_minus_gamma",
    "eps_rel",
    "nu_rel",
    "epsilon_R",
    "nu_R",
    "epsilon_P6",
    "nu_P6",
];

/// The named maps in canonical bases.
pub fn build_map(name: &str) -> Result<ModuleMap> {
    let ones = |r: usize, c: usize| IntMatrix::from_fn(r, c, |_, _| 1);
    let map = match name {
        "epsilon_X" => ModuleMap::new(name, Space::X, Space::Z, ones(1, 4)),
        "nu_X" => ModuleMap::new(name, Space::Z, Space::X, ones(4, 1)),
        "epsilon_P6" => ModuleMap::new(name, Space::Pairs, Space::Z, ones(1, 6)),
        "nu_P6" => ModuleMap::new(name, Space::Z, Space::Pairs, ones(6, 1)),
        "epsilon_R" => ModuleMap::new(name, Space::Parts, Space::Z, ones(1, 3)),
        "nu_R" => ModuleMap::new(name, Space::Z, Space::Parts, ones(3, 1)),
        "sigma" => {
            let mut m = IntMatrix::zero(4, 6);
            for (j, &(a, b)) in PAIRS.iter().enumerate() {
                m[(a, j)] = BigInt::one();
                m[(b, j)] = BigInt::one();
            }
            ModuleMap::new(name, Space::Pairs, Space::X, m)
        }
        "tau" => {
            let sigma = build_map("sigma")?;
            ModuleMap::new(name, Space::X, Space::Pairs, sigma.mat.transpose())
        }
        "gamma" => {
            let mut m = IntMatrix::zero(6, 6);
            for (j, &cj) in PAIR_COMPLEMENT.iter().enumerate() {
                m[(cj, j)] = BigInt::one();
            }
            ModuleMap::new(name, Space::Pairs, Space::Pairs, m)
        }
        "id_minus_gamma" => {
            let g = build_map("gamma")?;
            ModuleMap::new(
                name,
                Space::Pairs,
                Space::Pairs,
                IntMatrix::identity(6).add(&g.mat.neg()),
            )
        }
        "eps_rel" => {
            let mut m = IntMatrix::zero(3, 6);
            for (j, &r) in PARTITION_OF_PAIR.iter().enumerate() {
                m[(r, j)] = BigInt::one();
            }
            ModuleMap::new(name, Space::Pairs, Space::Parts, m)
        }
        "nu_rel" => {
            let e = build_map("eps_rel")?;
            ModuleMap::new(name, Space::Parts, Space::Pairs, e.mat.transpose())
        }
        other => return Err(Error::UnknownMapName(other.to_string())),
    };
    Ok(map)
}

// ------------------------------------------------------------------ homology

/// A finitely presented abelian group Z^ambient / column span of `relations`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    pub name: String,
    pub ambient: usize,
    pub relations: IntMatrix,
}

impl PresentedModule {
    pub fn free(name: &str, ambient: usize) -> PresentedModule {
        PresentedModule {
            name: name.to_string(),
            ambient,
            relations: IntMatrix::zero(ambient, 0),
        }
    }

    pub fn quotient(name: &str, relations: IntMatrix) -> PresentedModule {
        PresentedModule { name: name.to_string(), ambient: relations.rows(), relations }
    }
}

/// A complex  n_0 <- n_1 <- ... <- n_k  with maps given on ambient lattices.
/// `maps[i]` sends node i+1 to node i.
#[derive(Clone, Debug)]
pub struct Complex {
    pub name: String,
    pub nodes: Vec<PresentedModule>,
    pub maps: Vec<IntMatrix>,
}

/// Homology at one node: invariant factors > 1 plus the free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeHomology {
    pub node: String,
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl NodeHomology {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn render(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.join(" + ")
    }
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub complex: String,
    pub nodes: Vec<NodeHomology>,
}

impl HomologyReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(NodeHomology::is_trivial)
    }
}

impl Complex {
    /// Checks shapes, well-definedness on the quotients, that consecutive
    /// composites vanish, and returns the homology at every node
    /// (including surjectivity at the left end and injectivity at the right).
    pub fn check_exact(&self) -> Result<HomologyReport> {
        let k = self.nodes.len();
        assert_eq!(self.maps.len() + 1, k, "complex shape");
        for (i, m) in self.maps.iter().enumerate() {
            if m.rows() != self.nodes[i].ambient || m.cols() != self.nodes[i + 1].ambient {
                return Err(Error::ShapeMismatch(format!(
                    "map {} of complex {}",
                    i, self.name
                )));
            }
            // well-defined on quotients: m * relations_{i+1} lands in relations_i
            let moved = m.mul(&self.nodes[i + 1].relations);
            if self.nodes[i].relations.solve_matrix(&moved).is_none() {
                return Err(Error::Internal(format!(
                    "map {} of {} not defined on the quotient",
                    i, self.name
                )));
            }
        }
        // consecutive composites vanish modulo relations
        for i in 0..k.saturating_sub(2) {
            let comp = self.maps[i].mul(&self.maps[i + 1]);
            if self.nodes[i].relations.solve_matrix(&comp).is_none() {
                return Err(Error::Internal(format!(
                    "composite at node {} of {} is nonzero",
                    i + 1,
                    self.name
                )));
            }
        }
        let mut nodes = Vec::with_capacity(k);
        for i in 0..k {
            let node = &self.nodes[i];
            let incoming = if i + 1 < k {
                self.maps[i].clone()
            } else {
                IntMatrix::zero(node.ambient, 0)
            };
            let outgoing = if i > 0 {
                Some((&self.maps[i - 1], &self.nodes[i - 1]))
            } else {
                None
            };
            nodes.push(homology_at(node, &incoming, outgoing));
        }
        Ok(HomologyReport { complex: self.name.clone(), nodes })
    }
}

/// ker(out)/im(in) for maps of presented modules, computed integrally.
fn homology_at(
    node: &PresentedModule,
    incoming: &IntMatrix,
    outgoing: Option<(&IntMatrix, &PresentedModule)>,
) -> NodeHomology {
    // kernel lattice of the induced outgoing map
    let kernel_gens = match outgoing {
        None => IntMatrix::identity(node.ambient),
        Some((b, target)) => {
            // x in ker  <=>  exists y with B x + R_target y = 0
            let stacked = b.hcat(&target.relations);
            let ker = stacked.kernel();
            let mut gens = IntMatrix::zero(node.ambient, ker.cols());
            for j in 0..ker.cols() {
                for i in 0..node.ambient {
                    gens[(i, j)] = ker[(i, j)].clone();
                }
            }
            gens
        }
    };
    // subgroup to kill: image of incoming plus relations
    let killed = incoming.hcat(&node.relations);
    // express the killed generators in kernel coordinates
    let y = kernel_gens
        .solve_matrix(&killed)
        .expect("image not contained in kernel despite zero composite");
    // the kernel generators may be linearly dependent; quotient out their
    // own syzygies as well
    let syzygies = kernel_gens.kernel();
    let presentation = y.hcat(&syzygies);
    let s = kernel_gens.cols();
    let inv = presentation.invariant_factors();
    let torsion: Vec<BigInt> = inv.iter().filter(|d| !d.is_one()).cloned().collect();
    let free_rank = s - inv.len();
    NodeHomology { node: node.name.clone(), torsion, free_rank }
}

// ---------------------------------------------------------- named sequences

/// Basis of the augmentation kernel inside Z^n: columns e_i - e_{i+1}.
fn augmentation_kernel_basis(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zero(n, n - 1);
    for j in 0..n - 1 {
        m[(j, j)] = BigInt::one();
        m[(j + 1, j)] = -BigInt::one();
    }
    m
}

pub const SEQUENCE_NAMES: [&str; 6] = [
    "relative_four_term",
    "pair_sum_four_term",
    "augmentation_kernels",
    "norm_cokernels_split",
    "dual_four_term",
    "norm_cokernels",
];

/// The six exact sequences, as lattice presentations.
pub fn build_sequence(name: &str) -> Result<Complex> {
    let sigma = build_map("sigma")?.mat;
    let tau = build_map("tau")?.mat;
    let eps_rel = build_map("eps_rel")?.mat;
    let nu_rel = build_map("nu_rel")?.mat;
    let id_minus_gamma = build_map("id_minus_gamma")?.mat;
    let epsilon_x = build_map("epsilon_X")?.mat;
    let ones = |r: usize, c: usize| IntMatrix::from_fn(r, c, |_, _| 1);

    let complex = match name {
        // 0 <- Z[R] <- Z[P6] <- Z[P6] <- Z[R] <- 0
        "relative_four_term" => Complex {
            name: name.to_string(),
            nodes: vec![
                PresentedModule::free("Z[R]", 3),
                PresentedModule::free("Z[P6]", 6),
                PresentedModule::free("Z[P6]'", 6),
                PresentedModule::free("Z[R]'", 3),
            ],
            maps: vec![eps_rel, id_minus_gamma, nu_rel],
        },
        // 0 <- Z/2 <- Z[X] <- Z[P6] <- I[R] <- 0
        "pair_sum_four_term" => {
            let two = IntMatrix::from_rows(&[&[2]]);
            let incl = augmentation_kernel_basis(3);
            Complex {
                name: name.to_string(),
                nodes: vec![
                    PresentedModule::quotient("Z/2", two),
                    PresentedModule::free("Z[X]", 4),
                    PresentedModule::free("Z[P6]", 6),
                    PresentedModule::free("I[R]", 2),
                ],
                maps: vec![epsilon_x, sigma, nu_rel.mul(&incl)],
            }
        }
        // 0 <- I[X] <- I[P6] <- I[R] <- 0 in explicit kernel bases
        "augmentation_kernels" => {
            let bx = augmentation_kernel_basis(4);
            let bp = augmentation_kernel_basis(6);
            let br = augmentation_kernel_basis(3);
            // sigma restricted: solve B_X * S = sigma * B_P
            let sigma_i = solve_in_basis(&bx, &sigma.mul(&bp))?;
            let nu_i = solve_in_basis(&bp, &nu_rel.mul(&br))?;
            Complex {
                name: name.to_string(),
                nodes: vec![
                    PresentedModule::free("I[X]", 3),
                    PresentedModule::free("I[P6]", 5),
                    PresentedModule::free("I[R]", 2),
                ],
                maps: vec![sigma_i, nu_i],
            }
        }
        // 0 <- Z <- J'[X] <- J[P6/R] <- 0
        "norm_cokernels_split" => {
            // J'[X] is the cokernel of (nu_X, 2): Z -> Z[X] x Z
            let rel_jpx = IntMatrix::from_rows(&[&[1], &[1], &[1], &[1], &[2]]);
            let rel_jrel = nu_rel.clone();
            let eps_prime = IntMatrix::from_rows(&[&[1, 1, 1, 1, -2]]);
            let sigma_eps = sigma.vcat(&ones(1, 6));
            Complex {
                name: name.to_string(),
                nodes: vec![
                    PresentedModule::free("Z", 1),
                    PresentedModule::quotient("J'[X]", rel_jpx),
                    PresentedModule::quotient("J[P6/R]", rel_jrel),
                ],
                maps: vec![eps_prime, sigma_eps],
            }
        }
        // 0 <- J[R] <- Z[P6] <- Z[X] x Z <- Z <- 0
        "dual_four_term" => {
            let rel_jr = ones(3, 1);
            let tau_nu = tau.hcat(&ones(6, 1));
            let nu_minus2 = IntMatrix::from_rows(&[&[1], &[1], &[1], &[1], &[-2]]);
            Complex {
                name: name.to_string(),
                nodes: vec![
                    PresentedModule::quotient("J[R]", rel_jr),
                    PresentedModule::free("Z[P6]", 6),
                    PresentedModule::free("Z[X]xZ", 5),
                    PresentedModule::free("Z", 1),
                ],
                maps: vec![eps_rel, tau_nu, nu_minus2],
            }
        }
        // 0 <- J[R] <- J[P6] <- J[X] <- 0
        "norm_cokernels" => Complex {
            name: name.to_string(),
            nodes: vec![
                PresentedModule::quotient("J[R]", ones(3, 1)),
                PresentedModule::quotient("J[P6]", ones(6, 1)),
                PresentedModule::quotient("J[X]", ones(4, 1)),
            ],
            maps: vec![eps_rel, tau],
        },
        other => return Err(Error::UnknownMapName(other.to_string())),
    };
    Ok(complex)
}

/// Solves basis * X = image column by column; errors if the image does not
/// lie in the sublattice.
fn solve_in_basis(basis: &IntMatrix, image: &IntMatrix) -> Result<IntMatrix> {
    basis
        .solve_matrix(image)
        .ok_or_else(|| Error::Internal("image not inside sublattice".into()))
}

// ------------------------------------------------------- commuting squares

/// One commuting square f . g = h . e.
pub struct Square {
    pub name: String,
    pub f: ModuleMap,
    pub g: ModuleMap,
    pub h: ModuleMap,
    pub e: ModuleMap,
}

/// true iff the two composites agree as integer matrices.
pub fn check_square(f: &ModuleMap, g: &ModuleMap, h: &ModuleMap, e: &ModuleMap) -> Result<bool> {
    let left = f.compose(g)?;
    let right = h.compose(e)?;
    if left.rows() != right.rows() || left.cols() != right.cols() {
        return Err(Error::ShapeMismatch("square composites differ in shape".into()));
    }
    Ok(left == right)
}

fn scaling(name: &str, space: Space, factor: i64) -> ModuleMap {
    ModuleMap::new(name, space, space, IntMatrix::identity(space.rank()).scale(factor))
}

/// The five commuting squares attached to the pair-sum map and its dual.
pub fn named_squares() -> Result<Vec<Square>> {
    let m = build_map;
    Ok(vec![
        // epsilon_X . sigma = 2 . epsilon_P6
        Square {
            name: "pair_sum_augmentation".to_string(),
            f: m("epsilon_X")?,
            g: m("sigma")?,
            h: scaling("times2", Space::Z, 2),
            e: m("epsilon_P6")?,
        },
        // sigma . nu_rel = nu_X . epsilon_R
        Square {
            name: "pair_sum_norm".to_string(),
            f: m("sigma")?,
            g: m("nu_rel")?,
            h: m("nu_X")?,
            e: m("epsilon_R")?,
        },
        // (sigma x eps_P6) . nu_rel = (nu_X, 2) . epsilon_R
        Square {
            name: "pair_sum_norm_augmented".to_string(),
            f: {
                let s = m("sigma")?;
                let e = m("epsilon_P6")?;
                ModuleMap::new("sigma_x_eps", Space::Pairs, Space::XxZ, s.mat.vcat(&e.mat))
            },
            g: m("nu_rel")?,
            h: ModuleMap::new(
                "nu_x_2",
                Space::Z,
                Space::XxZ,
                IntMatrix::from_rows(&[&[1], &[1], &[1], &[1], &[2]]),
            ),
            e: m("epsilon_R")?,
        },
        // tau . nu_X = nu_P6 . 2
        Square {
            name: "dual_norm".to_string(),
            f: m("tau")?,
            g: m("nu_X")?,
            h: m("nu_P6")?,
            e: scaling("times2", Space::Z, 2),
        },
        // eps_rel . tau = nu_R . epsilon_X
        Square {
            name: "dual_augmentation".to_string(),
            f: m("eps_rel")?,
            g: m("tau")?,
            h: m("nu_R")?,
            e: m("epsilon_X")?,
        },
    ])
}

/// tau is the transpose of sigma; every norm is the transpose of the matching
/// augmentation; the complement involution is symmetric.
pub fn check_duality() -> Result<bool> {
    let pairs = [
        ("tau", "sigma"),
        ("nu_X", "epsilon_X"),
        ("nu_P6", "epsilon_P6"),
        ("nu_R", "epsilon_R"),
        ("nu_rel", "eps_rel"),
    ];
    for (a, b) in pairs {
        if build_map(a)?.mat != build_map(b)?.mat.transpose() {
            return Ok(false);
        }
    }
    let g = build_map("gamma")?.mat;
    Ok(g == g.transpose())
}

/// sigma . tau as a 4x4 matrix; must equal 2*Id + nu_X * epsilon_X.
pub fn composite_sigma_tau() -> Result<IntMatrix> {
    let sigma = build_map("sigma")?;
    let tau = build_map("tau")?;
    sigma.compose(&tau)
}

/// The complement involution induces an isomorphism from coker(nu_rel) to
/// ker(eps_rel); returns the determinant in adapted bases (must be +-1).
pub fn relative_kernel_cokernel_iso_det() -> Result<BigInt> {
    let eps_rel = build_map("eps_rel")?.mat;
    let nu_rel = build_map("nu_rel")?.mat;
    let id_minus_gamma = build_map("id_minus_gamma")?.mat;
    let kernel = eps_rel.kernel(); // 6 x 3 basis of the kernel lattice
    let snf = nu_rel.snf();
    let rank = nu_rel.rank();
    // the cokernel is free here (invariant factors of nu_rel are 1); a basis
    // is represented by the columns of U^{-1} past the rank
    let u_inv = snf
        .u
        .solve_matrix(&IntMatrix::identity(6))
        .ok_or_else(|| Error::Internal("unimodular matrix failed to invert".into()))?;
    let reps = u_inv.submatrix_cols(&(rank..6).collect::<Vec<_>>());
    let moved = id_minus_gamma.mul(&reps);
    let y = kernel
        .solve_matrix(&moved)
        .ok_or_else(|| Error::Internal("complement image left the kernel".into()))?;
    Ok(y.det())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_matrices() {
        let sigma = build_map("sigma").unwrap();
        // column for the pair {0,1} is e_0 + e_1
        assert_eq!(
            sigma.mat.column(0),
            vec![BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::zero()]
        );
        let tau = build_map("tau").unwrap();
        // column for 0 hits the three pairs containing 0
        assert_eq!(
            tau.mat.column(0),
            [1, 1, 1, 0, 0, 0].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
        let gamma = build_map("gamma").unwrap();
        // {0,1} -> {2,3}
        assert_eq!(
            gamma.mat.column(0),
            [0, 0, 0, 0, 0, 1].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
        assert!(build_map("nope").is_err());
    }

    #[test]
    fn all_named_maps_are_equivariant() {
        for name in MAP_NAMES {
            let m = build_map(name).unwrap();
            assert!(m.is_equivariant(), "{name} not equivariant");
        }
    }

    #[test]
    fn duality_holds() {
        assert!(check_duality().unwrap());
    }

    #[test]
    fn sigma_tau_composite() {
        let st = composite_sigma_tau().unwrap();
        let expected = IntMatrix::identity(4)
            .scale(2)
            .add(&IntMatrix::from_fn(4, 4, |_, _| 1));
        assert_eq!(st, expected);
        assert_eq!(st[(0, 0)], BigInt::from(3));
        assert_eq!(st[(0, 1)], BigInt::one());
        for i in 0..4 {
            let row_sum: BigInt = (0..4).map(|j| st[(i, j)].clone()).sum();
            assert_eq!(row_sum, BigInt::from(6));
        }
    }

    #[test]
    fn sigma_snf_has_cokernel_z2() {
        let sigma = build_map("sigma").unwrap();
        let inv = sigma.mat.invariant_factors();
        let want: Vec<BigInt> = [1, 1, 1, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(inv, want);
    }

    #[test]
    fn trivial_two_term_complex_is_exact() {
        let c = Complex {
            name: "identity".into(),
            nodes: vec![PresentedModule::free("Z", 1), PresentedModule::free("Z", 1)],
            maps: vec![IntMatrix::identity(1)],
        };
        let rep = c.check_exact().unwrap();
        assert!(rep.is_exact());
    }

    #[test]
    fn all_six_sequences_are_exact() {
        for name in SEQUENCE_NAMES {
            let c = build_sequence(name).unwrap();
            let rep = c.check_exact().unwrap();
            assert!(
                rep.is_exact(),
                "{name}: {:?}",
                rep.nodes.iter().map(NodeHomology::render).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn tampered_sigma_fails_with_nontrivial_homology() {
        let mut c = build_sequence("pair_sum_four_term").unwrap();
        // drop the {0,1} column of sigma
        c.maps[1][(0, 0)] = BigInt::zero();
        c.maps[1][(1, 0)] = BigInt::zero();
        match c.check_exact() {
            Ok(rep) => assert!(!rep.is_exact()),
            Err(_) => {} // the composite may also fail to vanish
        }
    }

    #[test]
    fn squares_commute() {
        for sq in named_squares().unwrap() {
            assert!(check_square(&sq.f, &sq.g, &sq.h, &sq.e).unwrap(), "{}", sq.name);
        }
    }

    #[test]
    fn degenerate_zero_square_commutes() {
        let z = ModuleMap::new("zero", Space::X, Space::X, IntMatrix::zero(4, 4));
        assert!(check_square(&z, &z, &z, &z).unwrap());
    }

    #[test]
    fn relative_iso_is_unimodular() {
        let d = relative_kernel_cokernel_iso_det().unwrap();
        assert!(d == BigInt::one() || d == -BigInt::one(), "det {d}");
    }
}
