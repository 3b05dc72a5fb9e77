#include "bpv/dissipation.hpp"

#include <cmath>
#include <sstream>

#include "bpv/kernels.hpp"
#include "bpv/spectral.hpp"

namespace bpv {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

double alternating(int n) { return n % 2 == 1 ? 1.0 : -1.0; }  // (-1)^{n-1}

double ipow(double v, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= v;
  return r;
}

RealField pointwise(const RealField& a, auto&& f) {
  RealField out(a.grid());
  kernels::transform(out.values(), f, a.values());
  return out;
}

RealField pointwise(const RealField& a, const RealField& b, auto&& f) {
  RealField out(a.grid());
  kernels::transform(out.values(), f, a.values(), b.values());
  return out;
}

RealField pointwise(const RealField& a, const RealField& b, const RealField& c, auto&& f) {
  RealField out(a.grid());
  kernels::transform(out.values(), f, a.values(), b.values(), c.values());
  return out;
}

RealField classical(int n, double nu, const RealField& zeta) {
  RealField d = laplacian_power(zeta, n);
  d *= alternating(n) * nu;
  return d;
}

RealField invariant_hyper(int n, double nu, const RealField& psi, const RealField& zeta) {
  const RealField lap = laplacian_power(zeta, n);
  const RealField psi_x = spectral_derivative(psi, Axis::x);
  const double c = alternating(n) * nu;
  const double w = 0.5 * (2 * n + 1);
  return pointwise(psi_x, lap, [=](double px, double l) { return c * std::pow(std::abs(px), w) * l; });
}

RealField down_gradient(double K, const RealField& psi, const RealField& zeta) {
  const RealField lap = laplacian(zeta);
  const RealField psi_x = spectral_derivative(psi, Axis::x);
  return pointwise(psi_x, lap, [=](double px, double l) { return K * px * std::sqrt(std::abs(px)) * l; });
}

RealField anticipated(double nu, const RealField& psi, const RealField& zeta, double beta) {
  const Grid& g = psi.grid();
  const SpectralField P = dft2(psi);
  const RealField psi_x = spectral_derivative(P, Axis::x);
  const RealField psi_y = spectral_derivative(P, Axis::y);
  const RealField zeta_yy = spectral_derivative(zeta, Axis::y, 2);
  // J(psi_y, zeta + beta y) = J(psi_y, zeta) + beta d_x psi_y; beta y is not
  // periodic, so its part is taken analytically.
  RealField jac(g);
  kernels::arakawa_jacobian(g, psi_y.data(), zeta.data(), jac.data());
  if (beta != 0.0) jac += beta * spectral_derivative(psi_y, Axis::x);
  return pointwise(psi_x, jac, zeta_yy, [=](double px, double j, double eyy) {
    const double eps = px > 0 ? 1.0 : px < 0 ? -1.0 : 0.0;
    return nu * std::sqrt(std::abs(px)) * (eps * j + px * eyy);
  });
}

RealField seventh(double nu, const RealField& zeta) {
  const SpectralField Z = dft2(zeta);
  const RealField lap = laplacian_power(Z, 1);
  const RealField zx = spectral_derivative(Z, Axis::x);
  const RealField zy = spectral_derivative(Z, Axis::y);
  RealField grad2 = pointwise(zx, zy, [](double a, double b) { return a * a + b * b; });
  RealField inner = pointwise(zeta, lap, grad2, [](double z, double l, double g2) {
    const double z4 = z * z * z * z;
    return z4 * (z * l + 6.0 * g2);
  });
  RealField d = laplacian(inner);
  d *= 7.0 * nu;
  return d;
}

RealField fourth(double nu, const RealField& zeta) {
  RealField d = laplacian(pointwise(zeta, [](double z) { return z * z * z * z; }));
  d *= nu;
  return d;
}

RealField isotropic_a(int n, double nu, const RealField& zeta) {
  const RealField lap = laplacian_power(zeta, n);
  const double c = alternating(n) * nu;
  return pointwise(zeta, lap, [=](double z, double l) { return c * ipow(z, 2 * n + 1) * l; });
}

RealField isotropic_b(int n, double nu, const RealField& zeta) {
  const SpectralField L = dft2(laplacian_power(zeta, n - 1));
  const RealField gx = spectral_derivative(L, Axis::x);
  const RealField gy = spectral_derivative(L, Axis::y);
  const RealField fx = pointwise(zeta, gx, [=](double z, double v) { return ipow(z, 2 * n + 1) * v; });
  const RealField fy = pointwise(zeta, gy, [=](double z, double v) { return ipow(z, 2 * n + 1) * v; });
  RealField d = spectral_derivative(fx, Axis::x) + spectral_derivative(fy, Axis::y);
  d *= alternating(n) * nu;
  return d;
}

}  // namespace

std::string spec_name(const DissipationSpec& spec) {
  return std::visit(Overloaded{
                        [](const closure::None&) { return "none"; },
                        [](const closure::Classical&) { return "classical"; },
                        [](const closure::InvariantHyper&) { return "invariant_hyper"; },
                        [](const closure::DownGradientInvariant&) { return "down_gradient"; },
                        [](const closure::AnticipatedInvariant&) { return "anticipated"; },
                        [](const closure::ConservativeSeventh&) { return "conservative_seventh"; },
                        [](const closure::ConservativeFourth&) { return "conservative_fourth"; },
                        [](const closure::IsotropicA&) { return "isotropic_a"; },
                        [](const closure::IsotropicB&) { return "isotropic_b"; },
                    },
                    spec);
}

DissipationSpec spec_from_name(const std::string& name) {
  if (name == "none") return closure::None{};
  if (name == "classical") return closure::Classical{};
  if (name == "invariant_hyper") return closure::InvariantHyper{};
  if (name == "down_gradient") return closure::DownGradientInvariant{};
  if (name == "anticipated") return closure::AnticipatedInvariant{};
  if (name == "conservative_seventh") return closure::ConservativeSeventh{};
  if (name == "conservative_fourth") return closure::ConservativeFourth{};
  if (name == "isotropic_a") return closure::IsotropicA{};
  if (name == "isotropic_b") return closure::IsotropicB{};
  throw ConfigError("unknown dissipation '" + name + "'");
}

std::string describe(const DissipationSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << spec_name(spec);
  std::visit(Overloaded{
                 [](const closure::None&) {},
                 [&](const closure::DownGradientInvariant& s) { os << "(K=" << s.K << ")"; },
                 [&](const auto& s) {
                   if constexpr (requires { s.n; })
                     os << "(n=" << s.n << ", nu=" << s.nu << ")";
                   else
                     os << "(nu=" << s.nu << ")";
                 },
             },
             spec);
  return os.str();
}

int spec_order(const DissipationSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        if constexpr (requires { s.n; })
          return s.n;
        else
          return 0;
      },
      spec);
}

void validate(const DissipationSpec& spec) {
  std::visit(
      [](const auto& s) {
        if constexpr (requires { s.n; })
          if (s.n < 1) throw ConfigError("dissipation order n must be >= 1");
        if constexpr (requires { s.nu; })
          if (!(s.nu >= 0.0)) throw ConfigError("dissipation coefficient nu must be non-negative");
        if constexpr (requires { s.K; })
          if (!(s.K >= 0.0)) throw ConfigError("dissipation coefficient K must be non-negative");
      },
      spec);
}

RealField dissipation(const DissipationSpec& spec, const RealField& psi, const RealField& zeta, double beta) {
  require_same_grid(psi, zeta, "dissipation");
  validate(spec);
  RealField d = std::visit(
      Overloaded{
          [&](const closure::None&) { return RealField(zeta.grid()); },
          [&](const closure::Classical& s) { return classical(s.n, s.nu, zeta); },
          [&](const closure::InvariantHyper& s) { return invariant_hyper(s.n, s.nu, psi, zeta); },
          [&](const closure::DownGradientInvariant& s) { return down_gradient(s.K, psi, zeta); },
          [&](const closure::AnticipatedInvariant& s) { return anticipated(s.nu, psi, zeta, beta); },
          [&](const closure::ConservativeSeventh& s) { return seventh(s.nu, zeta); },
          [&](const closure::ConservativeFourth& s) { return fourth(s.nu, zeta); },
          [&](const closure::IsotropicA& s) { return isotropic_a(s.n, s.nu, zeta); },
          [&](const closure::IsotropicB& s) { return isotropic_b(s.n, s.nu, zeta); },
      },
      spec);
  if (!d.all_finite()) throw OverflowError(spec_name(spec) + " closure produced non-finite values");
  return d;
}

}  // namespace bpv
