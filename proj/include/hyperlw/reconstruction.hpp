#pragma once

#include <span>
#include <vector>

namespace hyperlw {

/// Polynomial data for the r substencils of a (2r-1)-cell window centered on
/// cell 0 (unit spacing). Substencil k covers window slots k..k+r-1, i.e.
/// cells k-r+1..k, and p_k is the degree r-1 polynomial whose averages over
/// those cells equal the window values.
struct ReconstructionTables {
  int r = 0;
  /// right[k][j]: weight of slot k+j in p_k(+1/2).
  std::vector<std::vector<double>> right;
  /// left[k][j]: weight of slot k+j in p_k(-1/2).
  std::vector<std::vector<double>> left;
  /// smoothness[k]: r x r row-major form Q_k with
  /// v^T Q_k v = sum_{l=1}^{r-1} int_{-1/2}^{1/2} (p_k^{(l)})^2 dx.
  std::vector<std::vector<double>> smoothness;
  /// Ideal weights d_k with sum_k d_k p_k(+1/2) equal to the (2r-1)-cell
  /// reconstruction at +1/2.
  std::vector<double> linear_weights;
  /// Ideal weights c_k with sum_k c_k (p_k(1/2) - p_k(-1/2)) equal to the
  /// (2r-1)-point centered first derivative at node 0.
  std::vector<double> derivative_weights;

  /// v^T Q_k v for the r values of substencil k.
  double indicator(int k, std::span<const double> v) const;
};

inline constexpr int kMinWenoR = 2;
inline constexpr int kMaxWenoR = 6;

/// Tables for r in [2, 6]; built once, safe for concurrent lookup.
/// Throws ConfigError for other r.
const ReconstructionTables& reconstruction_tables(int r);

}  // namespace hyperlw
