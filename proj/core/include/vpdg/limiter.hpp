#pragma once

#include <vector>

#include "vpdg/field.hpp"

namespace vpdg {

/// Reference points S = (Gauss_x x Lobatto_v) U (Lobatto_x x Gauss_v), l+1 points per direction.
struct LimiterPointSet {
  std::vector<double> xi;
  std::vector<double> eta;
  std::size_t size() const { return xi.size(); }
};

/// Empty for l = 0 (the limiter reduces to a check of the cell averages).
LimiterPointSet limiter_points(int degree);

struct LimiterStats {
  long cells_limited = 0;
  long negative_averages = 0;  ///< cells flattened to their (negative) mean
};

/// Scaling limiter: per cell, f <- avg + theta (f - avg) with theta = min(1, |avg| / |T - avg|),
/// T the minimum over the point set. Cell averages are untouched.
class PositivityLimiter {
 public:
  explicit PositivityLimiter(const BasisSpec& spec);

  LimiterStats apply(DGField& f) const;
  /// theta for one cell's coefficients.
  double theta(const double* c) const;
  /// Minimum over the point set for one cell.
  double min_on_points(const double* c) const;

  const LimiterPointSet& points() const { return pts_; }

 private:
  BasisSpec spec_;
  LimiterPointSet pts_;
  std::vector<double> vals_;  // basis values [k * dim + a]
};

/// Limited copy of f.
DGField apply_positivity(const DGField& f, LimiterStats* stats = nullptr);

}  // namespace vpdg
