#include "flatorus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flatorus {

namespace {

constexpr double kConditionLimit = 1e8;
constexpr double kCosetTieRel = 1e-9;

}  // namespace

Lattice::Lattice(Eigen::MatrixXd basis_columns) : basis_(std::move(basis_columns)) {
  const int n = static_cast<int>(basis_.cols());
  if (n == 0 || basis_.rows() != n) {
    raise(ErrorCode::dimension_mismatch, "basis must be square and nonempty");
  }
  double max_col = 0.0;
  for (int j = 0; j < n; ++j) max_col = std::max(max_col, basis_.col(j).norm());
  const double det = basis_.determinant();
  abs_det_ = std::abs(det);
  if (abs_det_ < 1e-12 * std::pow(max_col, n)) {
    raise(ErrorCode::singular_basis, "basis determinant vanishes");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis_);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > kConditionLimit) {
    raise(ErrorCode::singular_basis, "basis condition number exceeds 1e8");
  }
  gram_ = basis_.transpose() * basis_;
}

Lattice Lattice::from_basis(Eigen::MatrixXd basis_columns) {
  return Lattice(std::move(basis_columns));
}

Lattice Lattice::from_basis_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) raise(ErrorCode::dimension_mismatch, "empty basis");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      raise(ErrorCode::dimension_mismatch, "ragged basis rows");
    }
    for (std::size_t j = 0; j < n; ++j) m(static_cast<int>(j), static_cast<int>(i)) = rows[i][j];
  }
  return Lattice(std::move(m));
}

Lattice Lattice::dual() const {
  // Dual basis is B^{-T}: integral inner products against every lattice vector.
  Eigen::MatrixXd inv_t = basis_.inverse().transpose();
  return Lattice(std::move(inv_t));
}

Eigen::VectorXd Lattice::vector_at(std::span<const std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) != dim()) {
    raise(ErrorCode::dimension_mismatch, "coordinate count does not match dimension");
  }
  Eigen::VectorXd c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = static_cast<double>(coords[i]);
  return basis_ * c;
}

std::vector<std::int64_t> Lattice::coordinates_of(const Eigen::VectorXd& v, double tol) const {
  if (v.size() != dim()) {
    raise(ErrorCode::dimension_mismatch, "vector dimension does not match lattice");
  }
  Eigen::VectorXd c = basis_.fullPivLu().solve(v);
  std::vector<std::int64_t> out(dim());
  for (int i = 0; i < dim(); ++i) {
    const double r = std::nearbyint(c[i]);
    if (std::abs(c[i] - r) > tol) {
      raise(ErrorCode::not_a_lattice_vector, "coordinates are not integral");
    }
    out[i] = static_cast<std::int64_t>(r);
  }
  return out;
}

ReducedBasis2D lagrange_reduce(const Lattice& lattice) {
  if (lattice.dim() != 2) raise(ErrorCode::unsupported_dimension, "reduction requires dim 2");
  Eigen::Vector2d b1 = lattice.basis().col(0);
  Eigen::Vector2d b2 = lattice.basis().col(1);
  Eigen::Matrix<std::int64_t, 2, 2> U;
  U << 1, 0, 0, 1;
  auto swap_cols = [&] {
    std::swap(b1, b2);
    std::swap(U(0, 0), U(0, 1));
    std::swap(U(1, 0), U(1, 1));
  };
  if (b1.squaredNorm() > b2.squaredNorm()) swap_cols();
  // Classical Gauss reduction: shorten b2 against b1 until stable.
  for (int guard = 0; guard < 256; ++guard) {
    const double mu = std::nearbyint(b1.dot(b2) / b1.squaredNorm());
    if (mu != 0.0) {
      b2 -= mu * b1;
      const auto mi = static_cast<std::int64_t>(mu);
      U(0, 1) -= mi * U(0, 0);
      U(1, 1) -= mi * U(1, 0);
    }
    if (b2.squaredNorm() < b1.squaredNorm()) {
      swap_cols();
      continue;
    }
    break;
  }
  if (b1.dot(b2) > 0.0) {
    b2 = -b2;
    U(0, 1) = -U(0, 1);
    U(1, 1) = -U(1, 1);
  }
  return {b1, b2, U};
}

ShortestVectorResult shortest_vector(const Lattice& lattice) {
  if (lattice.dim() == 1) {
    Eigen::VectorXd v = lattice.basis().col(0);
    return {v, v.norm()};
  }
  if (lattice.dim() == 2) {
    const ReducedBasis2D red = lagrange_reduce(lattice);
    Eigen::VectorXd v(2);
    v << red.b1[0], red.b1[1];
    return {v, red.b1.norm()};
  }
  raise(ErrorCode::unsupported_dimension, "shortest vector requires dim 1 or 2");
}

std::vector<Eigen::Vector2d> coset_shortest_vectors(const Lattice& lattice,
                                                    const Eigen::Vector2d& v) {
  if (lattice.dim() != 2) raise(ErrorCode::unsupported_dimension, "coset search requires dim 2");
  Eigen::VectorXd vx(2);
  vx << v[0], v[1];
  const std::vector<std::int64_t> coords = lattice.coordinates_of(vx);

  // Work in the reduced basis: there |k1 b1 + k2 b2|^2 >= (3/4) lambda^2 max(ki)^2,
  // so the box below provably covers every coset vector at least as short as
  // the coset minimum (which is at most |v| and at most 2 mu).
  const ReducedBasis2D red = lagrange_reduce(lattice);
  const Eigen::Matrix<std::int64_t, 2, 2> U = red.transform;
  const std::int64_t det_u = U(0, 0) * U(1, 1) - U(0, 1) * U(1, 0);
  // U is unimodular; invert exactly over the integers.
  Eigen::Matrix<std::int64_t, 2, 2> Uinv;
  Uinv << det_u * U(1, 1), -det_u * U(0, 1), -det_u * U(1, 0), det_u * U(0, 0);
  const std::int64_t c1 = Uinv(0, 0) * coords[0] + Uinv(0, 1) * coords[1];
  const std::int64_t c2 = Uinv(1, 0) * coords[0] + Uinv(1, 1) * coords[1];

  const double lambda = red.b1.norm();
  const double mu = covering_radius(lattice);
  const double vnorm = v.norm();
  const std::int64_t radius =
      static_cast<std::int64_t>(std::ceil((vnorm + 2.0 * mu) / (std::sqrt(3.0) * lambda))) + 1;

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, Eigen::Vector2d>> found;
  for (std::int64_t k1 = -radius; k1 <= radius; ++k1) {
    for (std::int64_t k2 = -radius; k2 <= radius; ++k2) {
      const double a = static_cast<double>(c1 + 2 * k1);
      const double b = static_cast<double>(c2 + 2 * k2);
      const Eigen::Vector2d w = a * red.b1 + b * red.b2;
      const double norm = w.norm();
      found.emplace_back(norm, w);
      best = std::min(best, norm);
    }
  }
  std::vector<Eigen::Vector2d> out;
  const double cutoff = best + kCosetTieRel * std::max(best, lambda);
  for (const auto& [norm, w] : found) {
    if (norm <= cutoff) out.push_back(w);
  }
  // Deterministic order: lexicographic by (x, y).
  std::sort(out.begin(), out.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  return out;
}

std::vector<Eigen::Vector2d> voronoi_relevant_vectors(const Lattice& lattice) {
  if (lattice.dim() != 2) raise(ErrorCode::unsupported_dimension, "Voronoi vectors require dim 2");
  const ReducedBasis2D red = lagrange_reduce(lattice);
  std::vector<Eigen::Vector2d> out;
  const std::int64_t classes[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (const auto& cls : classes) {
    const Eigen::Vector2d rep =
        static_cast<double>(cls[0]) * red.b1 + static_cast<double>(cls[1]) * red.b2;
    std::vector<Eigen::Vector2d> shortest = coset_shortest_vectors(lattice, rep);
    // +-w are the only shortest vectors in their coset <=> facet normal pair.
    if (shortest.size() == 2) {
      out.push_back(shortest[1]);
      out.push_back(shortest[0]);
    }
  }
  return out;
}

VoronoiCell2D voronoi_cell(const Lattice& lattice) {
  if (lattice.dim() != 2) raise(ErrorCode::unsupported_dimension, "Voronoi cell requires dim 2");
  VoronoiCell2D cell;
  cell.relevant_vectors = voronoi_relevant_vectors(lattice);
  const std::size_t m = cell.relevant_vectors.size();
  if (m != 4 && m != 6) {
    raise(ErrorCode::internal_consistency, "expected 4 or 6 Voronoi-relevant vectors");
  }
  cell.is_rectangle = (m == 4);

  // Intersect the bisector half-planes v.x <= |v|^2/2; every relevant vector
  // supports a facet, so the vertex count must equal the half-plane count.
  std::vector<Eigen::Vector2d> candidates;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Eigen::Vector2d& a = cell.relevant_vectors[i];
      const Eigen::Vector2d& b = cell.relevant_vectors[j];
      const double det = a[0] * b[1] - a[1] * b[0];
      const double scale = a.norm() * b.norm();
      if (std::abs(det) <= 1e-12 * scale) continue;
      const double ha = 0.5 * a.squaredNorm();
      const double hb = 0.5 * b.squaredNorm();
      Eigen::Vector2d x((ha * b[1] - hb * a[1]) / det, (hb * a[0] - ha * b[0]) / det);
      bool inside = true;
      for (const Eigen::Vector2d& w : cell.relevant_vectors) {
        const double h = 0.5 * w.squaredNorm();
        if (w.dot(x) > h + 1e-9 * std::max(1.0, h)) {
          inside = false;
          break;
        }
      }
      if (inside) candidates.push_back(x);
    }
  }
  // Deduplicate coincident intersections.
  const double diam = 2.0 * std::sqrt(lattice.gram().trace());
  std::vector<Eigen::Vector2d> vertices;
  for (const Eigen::Vector2d& x : candidates) {
    bool dup = false;
    for (const Eigen::Vector2d& y : vertices) {
      if ((x - y).norm() <= 1e-9 * diam) {
        dup = true;
        break;
      }
    }
    if (!dup) vertices.push_back(x);
  }
  std::sort(vertices.begin(), vertices.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  if (vertices.size() != m) {
    raise(ErrorCode::internal_consistency,
          "half-plane intersection does not close to a rectangle or hexagon");
  }
  cell.vertices = std::move(vertices);

  cell.inradius = 0.5 * shortest_vector(lattice).length;
  cell.circumradius = 0.0;
  for (const Eigen::Vector2d& x : cell.vertices) {
    cell.circumradius = std::max(cell.circumradius, x.norm());
  }
  // Deep hole: max-norm vertex, lexicographic tie-break for determinism.
  const Eigen::Vector2d* hole = nullptr;
  for (const Eigen::Vector2d& x : cell.vertices) {
    if (x.norm() < cell.circumradius * (1.0 - 1e-12)) continue;
    if (hole == nullptr || x[0] < (*hole)[0] ||
        (x[0] == (*hole)[0] && x[1] < (*hole)[1])) {
      hole = &x;
    }
  }
  cell.deep_hole = *hole;
  return cell;
}

double covering_radius(const Lattice& lattice) {
  if (lattice.dim() == 1) return 0.5 * std::abs(lattice.basis()(0, 0));
  if (lattice.dim() == 2) return voronoi_cell(lattice).circumradius;
  raise(ErrorCode::unsupported_dimension, "covering radius requires dim 1 or 2");
}

bool cell_contains(const VoronoiCell2D& cell, const Eigen::Vector2d& x) {
  for (const Eigen::Vector2d& v : cell.relevant_vectors) {
    if (v.dot(x) > 0.5 * v.squaredNorm() + 1e-12) return false;
  }
  return true;
}

}  // namespace flatorus
