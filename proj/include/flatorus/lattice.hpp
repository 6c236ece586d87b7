#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "flatorus/error.hpp"

namespace flatorus {

// Full-rank lattice given by a basis matrix whose columns are the basis
// vectors.  The Gram matrix is cached on construction.  Dimensions 1 and 2
// support the full geometric toolkit below; higher dimensions are accepted
// as containers for orthogonal sums (basis, Gram, determinant, dual only).
class Lattice {
 public:
  // `rows[i]` is the i-th basis vector (the row-major file convention);
  // internally the vectors become columns.
  static Lattice from_basis_rows(const std::vector<std::vector<double>>& rows);
  static Lattice from_basis(Eigen::MatrixXd basis_columns);

  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  double abs_det() const { return abs_det_; }

  Lattice dual() const;

  // Ambient vector of the lattice point with the given integer coordinates.
  Eigen::VectorXd vector_at(std::span<const std::int64_t> coords) const;

  // Integer coordinates of an ambient lattice vector; NotALatticeVector if
  // any coordinate is farther than `tol` from an integer.
  std::vector<std::int64_t> coordinates_of(const Eigen::VectorXd& v, double tol = 1e-9) const;

 private:
  explicit Lattice(Eigen::MatrixXd basis_columns);

  Eigen::MatrixXd basis_;
  Eigen::MatrixXd gram_;
  double abs_det_ = 0.0;
};

// Lagrange-reduced basis of a 2D lattice: |b1| <= |b2|, |b1.b2| <= |b1|^2/2
// and b1.b2 <= 0 after sign normalization.  `transform` is the unimodular
// matrix with (b1 b2) = basis * transform.
struct ReducedBasis2D {
  Eigen::Vector2d b1;
  Eigen::Vector2d b2;
  Eigen::Matrix<std::int64_t, 2, 2> transform;
};

ReducedBasis2D lagrange_reduce(const Lattice& lattice);

struct ShortestVectorResult {
  Eigen::VectorXd vector;
  double length;
};

// Shortest nonzero lattice vector (dimensions 1 and 2).
ShortestVectorResult shortest_vector(const Lattice& lattice);

// All vectors of minimal norm in the coset v + 2L, ties within relative
// 1e-9 included.  v must be a lattice vector.
std::vector<Eigen::Vector2d> coset_shortest_vectors(const Lattice& lattice,
                                                    const Eigen::Vector2d& v);

// Lattice vectors w such that +-w are the unique shortest vectors of their
// coset mod 2L; these are exactly the facet normals of the Voronoi cell.
// Returned in +- pairs, 4 (rectangle) or 6 (hexagon) vectors.
std::vector<Eigen::Vector2d> voronoi_relevant_vectors(const Lattice& lattice);

struct VoronoiCell2D {
  std::vector<Eigen::Vector2d> vertices;  // counterclockwise cycle
  std::vector<Eigen::Vector2d> relevant_vectors;
  double inradius = 0.0;     // lambda(L)/2
  double circumradius = 0.0;  // mu(L)
  Eigen::Vector2d deep_hole = Eigen::Vector2d::Zero();  // vertex attaining mu
  bool is_rectangle = false;
};

VoronoiCell2D voronoi_cell(const Lattice& lattice);

// mu(L) for dimensions 1 and 2.
double covering_radius(const Lattice& lattice);

bool cell_contains(const VoronoiCell2D& cell, const Eigen::Vector2d& x);

}  // namespace flatorus
