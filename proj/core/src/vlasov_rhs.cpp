#include "vpdg/vlasov_rhs.hpp"

#include <cmath>
#include <stdexcept>

namespace vpdg {

double flux_v(double v, double f_minus, double f_plus) { return v >= 0.0 ? v * f_minus : v * f_plus; }

double flux_E(double cell_int_E, double f_minus, double f_plus, double E_at_node) {
  return cell_int_E <= 0.0 ? E_at_node * f_minus : E_at_node * f_plus;
}

namespace {

// y += M x for a row-major D x D block; D fixed at compile time for the common spaces.
template <int D>
inline void matvec_add(const double* __restrict M, const double* __restrict x, double* __restrict y) {
  for (int a = 0; a < D; ++a) {
    double s = 0.0;
    for (int b = 0; b < D; ++b) s += M[a * D + b] * x[b];
    y[a] += s;
  }
}

inline void matvec_add_dyn(int D, const double* M, const double* x, double* y) {
  for (int a = 0; a < D; ++a) {
    double s = 0.0;
    for (int b = 0; b < D; ++b) s += M[a * D + b] * x[b];
    y[a] += s;
  }
}

template <class F>
void dispatch_dim(int dim, F&& body) {
  switch (dim) {
    case 1: body(std::integral_constant<int, 1>{}); break;
    case 3: body(std::integral_constant<int, 3>{}); break;
    case 4: body(std::integral_constant<int, 4>{}); break;
    case 6: body(std::integral_constant<int, 6>{}); break;
    case 9: body(std::integral_constant<int, 9>{}); break;
    case 10: body(std::integral_constant<int, 10>{}); break;
    case 16: body(std::integral_constant<int, 16>{}); break;
    default: body(std::integral_constant<int, 0>{}); break;
  }
}

template <int D>
inline void mv(int dim, const double* M, const double* x, double* y) {
  if constexpr (D == 0) {
    matvec_add_dyn(dim, M, x, y);
  } else {
    matvec_add<D>(M, x, y);
  }
}

void check_field(const VlasovOperator& op, const DGField& f) {
  if (!(f.mesh() == op.mesh()) || !(f.spec() == op.spec())) {
    throw std::invalid_argument("field mesh/basis does not match the operator");
  }
}

}  // namespace

VlasovOperator::VlasovOperator(const Mesh& mesh, const BasisSpec& spec)
    : mesh_(mesh), spec_(spec), n1_(spec.degree() + 1), dim_(spec.dim()) {
  // E_h has degree l+1, so E L_p L_q has degree 3l+1; l+3 Gauss points integrate it exactly.
  xq_ = quadrature(QuadratureKind::Gauss, spec.degree() + 3);
  const int nq = static_cast<int>(xq_.size());
  lx_nodes_.resize(nq * n1_);
  for (int n = 0; n < nq; ++n)
    for (int p = 0; p < n1_; ++p) lx_nodes_[n * n1_ + p] = legendre(p, xq_.nodes[n]);

  const Reference1D ref(spec.degree());
  D_ = ref.stiffness;
  H_ = ref.moment1;
  pp_ = ref.right;
  pm_ = ref.left;
  const int n = n1_;
  auto outer = [&](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(n * n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) r[p * n + q] = a[p] * b[q];
    return r;
  };
  const auto PP = outer(pp_, pp_), MP = outer(pm_, pp_), MM = outer(pm_, pm_), PM = outer(pp_, pm_);

  // x-direction 1D factors (scaled by 1/dx).
  std::vector<double> xs_pos(n * n), xn_pos(n * n), xs_neg(n * n), xn_neg(n * n);
  for (int k = 0; k < n * n; ++k) {
    xs_pos[k] = (D_[k] - PP[k]) / mesh.dx;
    xn_pos[k] = MP[k] / mesh.dx;
    xs_neg[k] = (D_[k] + MM[k]) / mesh.dx;
    xn_neg[k] = -PM[k] / mesh.dx;
  }
  // v-direction 1D factors (scaled by 1/dv), multiplied by E moments at run time.
  vs_neg_.resize(n * n);
  vn_neg_.resize(n * n);
  vs_pos_.resize(n * n);
  vn_pos_.resize(n * n);
  for (int k = 0; k < n * n; ++k) {
    vs_neg_[k] = (-D_[k] + PP[k]) / mesh.dv;
    vn_neg_[k] = -MP[k] / mesh.dv;
    vs_pos_[k] = (-D_[k] - MM[k]) / mesh.dv;
    vn_pos_[k] = PM[k] / mesh.dv;
  }

  ax_self_.resize(mesh.Nv);
  ax_nb_.resize(mesh.Nv);
  for (int j = 0; j < mesh.Nv; ++j) {
    const double vj = mesh.v_centers[j];
    const bool pos = vj > 0.0;
    const auto& xs = pos ? xs_pos : xs_neg;
    const auto& xn = pos ? xn_pos : xn_neg;
    std::vector<double> S(dim_ * dim_), N(dim_ * dim_);
    for (int a = 0; a < dim_; ++a) {
      const Mode& ma = spec.mode(a);
      for (int b = 0; b < dim_; ++b) {
        const Mode& mb = spec.mode(b);
        const double vmat = (ma.pv == mb.pv ? vj : 0.0) + mesh.dv * H_[ma.pv * n + mb.pv];
        S[a * dim_ + b] = xs[ma.px * n + mb.px] * vmat;
        N[a * dim_ + b] = xn[ma.px * n + mb.px] * vmat;
      }
    }
    ax_self_[j] = std::move(S);
    ax_nb_[j] = std::move(N);
  }
}

std::vector<double> VlasovOperator::sample_field(const ElectricFieldPoly& E, const ExternalField& ext) const {
  const int nq = static_cast<int>(xq_.size());
  std::vector<double> e(static_cast<std::size_t>(mesh_.Nx) * nq);
  for (int i = 0; i < mesh_.Nx; ++i) {
    for (int n = 0; n < nq; ++n) {
      double val = E.cell_E(i, xq_.nodes[n]);
      if (ext) val += ext(mesh_.x_centers[i] + mesh_.dx * xq_.nodes[n]);
      e[i * nq + n] = val;
    }
  }
  return e;
}

void VlasovOperator::set_equilibrium_derivative(const std::function<double(double)>& feq_prime) {
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, 12);
  g_.assign(static_cast<std::size_t>(mesh_.Nv) * n1_, 0.0);
  for (int j = 0; j < mesh_.Nv; ++j)
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double fp = feq_prime(mesh_.v_centers[j] + mesh_.dv * q.nodes[k]);
      for (int r = 0; r < n1_; ++r) g_[j * n1_ + r] += q.weights[k] * fp * legendre(r, q.nodes[k]);
    }
}

void VlasovOperator::x_advect_into(const DGField& f, DGField& out) const {
  check_field(*this, f);
  if (!out.compatible(f)) out = DGField(mesh_, spec_);
  const int Nx = mesh_.Nx, Nv = mesh_.Nv, dim = dim_;
  dispatch_dim(dim, [&](auto dtag) {
    constexpr int DT = decltype(dtag)::value;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < Nx; ++i) {
      const int im = (i + Nx - 1) % Nx;
      const int ip = (i + 1) % Nx;
      for (int j = 0; j < Nv; ++j) {
        double* y = out.cell(i, j);
        for (int a = 0; a < dim; ++a) y[a] = 0.0;
        const int nb = mesh_.v_centers[j] > 0.0 ? im : ip;
        mv<DT>(dim, ax_self_[j].data(), f.cell(i, j), y);
        mv<DT>(dim, ax_nb_[j].data(), f.cell(nb, j), y);
      }
    }
  });
}

void VlasovOperator::v_transport_add(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const {
  const int Nx = mesh_.Nx, Nv = mesh_.Nv, dim = dim_, n = n1_;
  const int nq = static_cast<int>(xq_.size());
  if (e_nodes.size() != static_cast<std::size_t>(Nx) * nq) {
    throw std::invalid_argument("field samples do not match the operator's x quadrature");
  }
  dispatch_dim(dim, [&](auto dtag) {
    constexpr int DT = decltype(dtag)::value;
#pragma omp parallel
    {
      std::vector<double> Ex(n * n), S(dim * dim), N(dim * dim);
#pragma omp for schedule(static)
      for (int i = 0; i < Nx; ++i) {
        const double* e = e_nodes.data() + static_cast<std::size_t>(i) * nq;
        double cell_int = 0.0;
        for (int k = 0; k < n * n; ++k) Ex[k] = 0.0;
        for (int q = 0; q < nq; ++q) {
          const double we = xq_.weights[q] * e[q];
          cell_int += we;
          const double* L = lx_nodes_.data() + q * n;
          for (int p = 0; p < n; ++p)
            for (int r = 0; r < n; ++r) Ex[p * n + r] += we * L[p] * L[r];
        }
        const bool upward = cell_int <= 0.0;  // characteristic speed -E >= 0: take f from below
        const auto& vs = upward ? vs_neg_ : vs_pos_;
        const auto& vn = upward ? vn_neg_ : vn_pos_;
        for (int a = 0; a < dim; ++a) {
          const Mode& ma = spec_.mode(a);
          for (int b = 0; b < dim; ++b) {
            const Mode& mb = spec_.mode(b);
            const double ex = Ex[ma.px * n + mb.px];
            S[a * dim + b] = ex * vs[ma.pv * n + mb.pv];
            N[a * dim + b] = ex * vn[ma.pv * n + mb.pv];
          }
        }
        for (int j = 0; j < Nv; ++j) {
          double* y = out.cell(i, j);
          mv<DT>(dim, S.data(), f.cell(i, j), y);
          const int jn = upward ? j - 1 : j + 1;
          if (jn >= 0 && jn < Nv) mv<DT>(dim, N.data(), f.cell(i, jn), y);
        }
      }
    }
  });
}

void VlasovOperator::advection(const DGField& f, DGField& out) const { x_advect_into(f, out); }

void VlasovOperator::transport(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const {
  x_advect_into(f, out);
  v_transport_add(f, e_nodes, out);
}

void VlasovOperator::linear(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const {
  if (g_.empty()) throw std::logic_error("linear operator requires an equilibrium derivative");
  x_advect_into(f, out);
  const int Nx = mesh_.Nx, Nv = mesh_.Nv, dim = dim_, n = n1_;
  const int nq = static_cast<int>(xq_.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < Nx; ++i) {
    double ei[kMaxDegree + 1] = {0.0, 0.0, 0.0, 0.0};
    for (int q = 0; q < nq; ++q) {
      const double we = xq_.weights[q] * e_nodes[static_cast<std::size_t>(i) * nq + q];
      for (int p = 0; p < n; ++p) ei[p] += we * lx_nodes_[q * n + p];
    }
    for (int j = 0; j < Nv; ++j) {
      double* y = out.cell(i, j);
      const double* g = g_.data() + static_cast<std::size_t>(j) * n;
      for (int a = 0; a < dim; ++a) y[a] += ei[spec_.mode(a).px] * g[spec_.mode(a).pv];
    }
  }
}

DGField rhs_nonlinear(const VlasovOperator& op, const DGField& f, const ElectricFieldPoly& E,
                      const ExternalField& ext) {
  if (!(E.mesh == op.mesh())) throw std::invalid_argument("electric field mesh does not match the operator");
  DGField out(op.mesh(), op.spec());
  op.transport(f, op.sample_field(E, ext), out);
  return out;
}

DGField rhs_linear(const VlasovOperator& op, const DGField& f, const ElectricFieldPoly& E) {
  if (!(E.mesh == op.mesh())) throw std::invalid_argument("electric field mesh does not match the operator");
  DGField out(op.mesh(), op.spec());
  op.linear(f, op.sample_field(E), out);
  return out;
}

}  // namespace vpdg
