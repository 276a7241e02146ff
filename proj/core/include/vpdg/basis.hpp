#pragma once

#include <string>
#include <vector>

namespace vpdg {

/// Polynomial family on a phase-space cell: tensor-product Q^l or total-degree P^l.
enum class Family { TensorQ, TotalDegreeP };

/// Degree pair of a modal basis function: phi(xi, eta) = L_px(xi) * L_pv(eta).
struct Mode {
  int px = 0;
  int pv = 0;
};

inline constexpr int kMaxDegree = 3;

/// Local polynomial space descriptor. Modes are ordered by total degree, then by
/// decreasing x-degree, so P^l is always a prefix of Q^l and mode 0 is the constant.
class BasisSpec {
 public:
  BasisSpec(Family family, int degree);

  Family family() const { return family_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(modes_.size()); }
  const std::vector<Mode>& modes() const { return modes_; }
  const Mode& mode(int a) const { return modes_.at(a); }

  /// Index of mode (px, pv), or -1 when it is not in the space.
  int index_of(int px, int pv) const;

  /// "Q2", "P1", ...
  std::string name() const;

  friend bool operator==(const BasisSpec& a, const BasisSpec& b) {
    return a.family_ == b.family_ && a.degree_ == b.degree_;
  }

 private:
  Family family_;
  int degree_;
  std::vector<Mode> modes_;
};

/// Parses "q1", "Q2", "p0", ... Throws std::invalid_argument.
BasisSpec parse_basis(const std::string& text);

/// Theoretical local dimension: (l+1)^2 for Q^l, (l+1)(l+2)/2 for P^l.
int basis_dimension(Family family, int degree);

/// Orthonormal Legendre polynomial on [-1/2, 1/2]: sqrt(2p+1) P_p(2 xi).
double legendre(int p, double xi);
double legendre_derivative(int p, double xi);

/// Value of modal basis function `mode_index` at reference point (xi, eta).
/// Throws std::out_of_range for a bad mode index.
double basis_eval(const BasisSpec& spec, int mode_index, double xi, double eta);

/// One-dimensional reference operators for degrees 0..n-1, exact integrals over
/// [-1/2, 1/2]. Matrices are row-major n*n, first index = test function.
struct Reference1D {
  int n = 0;
  std::vector<double> stiffness;  ///< S[p][q] = int L_q L_p'
  std::vector<double> moment1;    ///< H[p][q] = int s L_p L_q
  std::vector<double> right;      ///< L_p(+1/2)
  std::vector<double> left;       ///< L_p(-1/2)
  std::vector<double> mean_pow0;  ///< int L_p
  std::vector<double> mean_pow1;  ///< int s L_p
  std::vector<double> mean_pow2;  ///< int s^2 L_p

  explicit Reference1D(int degree);
  double S(int p, int q) const { return stiffness[p * n + q]; }
  double H(int p, int q) const { return moment1[p * n + q]; }
};

/// Monomial coefficients (in xi) of the orthonormal Legendre polynomial of degree p.
std::vector<double> legendre_monomial(int p);

}  // namespace vpdg
