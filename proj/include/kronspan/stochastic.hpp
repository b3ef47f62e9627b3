#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/lp.hpp"
#include "kronspan/permutation.hpp"
#include "kronspan/sparse.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace kronspan {

// ---------------------------------------------------------------------------
// Linear description of im(Phi)

/// Which families of equations to generate.
enum ImageConditions : unsigned {
  place_symmetry = 1u << 0,  // invariance under place permutations
  pair_pattern = 1u << 1,    // i1 = i2 xor j1 = j2 forces a zero
  marginal_balance = 1u << 2, // first-slot column sums = row sums
  all_conditions = place_symmetry | pair_pattern | marginal_balance,
};

/// Homogeneous system over the n^{2r} unknowns x_{I,J} (row-major flat
/// index I * n^r + J), one sparse row per equation.
std::vector<SparseVector> image_equations(int n, int r,
                                          unsigned conditions = all_conditions);

/// Kernel basis of the full system. With `verify`, also checks that the
/// solution space equals span{vec P(w)^{⊗r}} and throws VerificationError
/// otherwise.
std::vector<SparseVector> section5_solution_space(int n, int r, const Budget &budget = {},
                                                  bool verify = true);

// ---------------------------------------------------------------------------
// Omega: doubly stochastic matrices in im(Phi)

bool is_doubly_stochastic(const SparseMatrix &m);

/// Coordinates on im(Phi) in the increasing basis {P(b)^{⊗r} : IS(b) >= n-r}.
/// Each matrix entry is a linear functional of the coordinates; entries
/// with identical functionals are grouped.
class OmegaGeometry {
public:
  OmegaGeometry(int n, int r, const Budget &budget = {});

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t side() const { return side_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Permutation> &basis() const { return basis_; }

  /// Distinct nonzero entry functionals: functional k is the indicator of
  /// basis positions supports()[k]; it is the value of every entry listed in
  /// entries()[k] (flat row-major positions).
  const std::vector<std::vector<std::size_t>> &supports() const { return supports_; }
  const std::vector<std::vector<std::size_t>> &entries() const { return entries_; }
  /// Functional index of a flat entry; nullopt for entries vanishing on all
  /// of im(Phi).
  std::optional<std::size_t> functional_of(std::size_t flat) const;

  /// Functionals other than sums of single-coordinate functionals; these
  /// alone cut out Omega.
  std::vector<std::size_t> irredundant_functionals() const;

  SparseMatrix to_matrix(const std::vector<Rational> &coords) const;
  /// nullopt when m is not in im(Phi) (or has the wrong size).
  std::optional<std::vector<Rational>> coordinates_of(const SparseMatrix &m) const;
  Rational functional_value(std::size_t k, const std::vector<Rational> &coords) const;

  /// Rank of the active entry functionals at `coords` together with the
  /// all-ones normal of the affine constraint.
  std::size_t active_rank(const std::vector<Rational> &coords) const;

private:
  int n_, r_;
  std::size_t side_;
  std::vector<Permutation> basis_;
  std::vector<SparseVector> basis_vectors_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<std::size_t>> entries_;
  std::unordered_map<std::size_t, std::size_t> functional_index_;
};

struct OmegaPoint {
  SparseMatrix matrix;
  int n = 0, r = 0;
  std::optional<std::vector<Rational>> coordinates;
};

/// Doubly stochastic and inside span{P(w)^{⊗r}}. Throws on size mismatch.
bool omega_membership(const SparseMatrix &m, int n, int r);

/// First w (lexicographic) whose Kronecker-power diagonal in m is entrywise
/// positive.
std::optional<Permutation> positive_kron_diagonal(const SparseMatrix &m, int n, int r);

/// Entries m_{w(j_1)..w(j_r), j_1..j_r} in column order.
std::vector<Rational> kronecker_diagonal(const SparseMatrix &m, const Permutation &w, int r);

struct GreedyResult {
  bool success = false;
  std::vector<std::pair<Permutation, Rational>> weights;
  /// Nonzero counts of the successive residual matrices.
  std::vector<std::size_t> nonzero_trace;
  /// Residual without a positive diagonal when !success.
  SparseMatrix residual;
};

/// Peels off c_w P(w)^{⊗r} with c_w the minimum of a positive Kronecker
/// diagonal and renormalizes until a Kronecker power remains or no positive
/// diagonal exists. Throws std::invalid_argument if m is not in Omega.
GreedyResult greedy_decompose(const SparseMatrix &m, int n, int r);

/// Weights over W_n with sum 1 reproducing the matrix, or a Farkas vector
/// for the system {sum_w c_w P(w)^{⊗r} = M, sum_w c_w = 1, c >= 0}. The
/// Farkas vector is indexed by the n^{2r} entries (row-major) followed by
/// the normalization row.
struct ConvexCertificate {
  std::optional<std::map<Permutation, Rational>> weights;
  std::optional<std::vector<Rational>> farkas;
  bool feasible() const { return weights.has_value(); }
};

ConvexCertificate conv_hull_membership(const SparseMatrix &m, int n, int r,
                                       const Budget &budget = {});
bool verify_certificate(const ConvexCertificate &cert, const SparseMatrix &m, int n, int r);
/// {"weights": {"2 1 3": "1/2", ...}} or {"farkas": ["p/q", ...]}.
std::string certificate_json(const ConvexCertificate &cert);

/// Counterexample matrix for (n, r) = (4, 2): -1/5 on the identity plus 1/5 on
/// each transposition.
OmegaPoint roberson_schmidt_matrix();

/// Vertex test by the rank of the active constraints. Throws
/// std::invalid_argument for points outside Omega.
bool is_vertex(const SparseMatrix &m, int n, int r);
bool is_vertex(const OmegaGeometry &geom, const std::vector<Rational> &coords);

/// Maximizes a linear objective (in coordinates) over Omega; returns a
/// vertex.
std::vector<Rational> omega_lp_vertex(const OmegaGeometry &geom,
                                      const std::vector<Rational> &objective);

/// Seeded points of Omega: LP optima for random integer objectives and
/// random rational convex combinations of a few of them.
std::vector<OmegaPoint> sample_omega_points(const OmegaGeometry &geom, std::size_t count,
                                            std::uint64_t seed);

struct VertexEnumeration {
  std::vector<OmegaPoint> vertices; // sorted by row-major entries
  bool complete = true;
  std::size_t max_intermediate_rays = 0;
};

/// Double description on the homogenized cone {c : F c >= 0}; every
/// extreme ray scaled to coordinate sum 1 is a vertex.
VertexEnumeration enumerate_vertices(int n, int r, const Budget &budget = {});
/// Graph search from P(identity)^{⊗r}: extreme rays of each vertex's tangent
/// cone give edge directions, and an exact ratio test walks each edge.
VertexEnumeration enumerate_vertices_by_edges(int n, int r, const Budget &budget = {});

/// Extreme rays of the pointed cone {x : A x >= 0} (rows of A), each as a
/// primitive integer vector. Throws std::invalid_argument if A lacks full
/// column rank.
std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>> &rows,
                                               std::size_t dim,
                                               std::size_t *max_intermediate = nullptr,
                                               std::size_t ray_limit = 0);

} // namespace kronspan
