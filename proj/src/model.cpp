#include "tcsde/model.hpp"

#include <cmath>
#include <stdexcept>

#include "tcsde/rng.hpp"

namespace tcsde {

double SinusoidCoef::operator()(double t1, double t2) const {
  return c0 + a1 * std::sin(w1 * t1) + a2 * std::cos(w2 * t2);
}

double SinusoidCoef::bound() const {
  return std::abs(c0) + std::abs(a1) + std::abs(a2);
}

double Example2Params::a(double t2) const {
  return 0.5 * b0 * b0 - theta + c * std::cos(t2);
}

double Example2Params::K() const { return std::abs(c); }

namespace {

template <class F>
double dispatch(const CoefficientModel::Family& fam, F&& fn) {
  return std::visit(std::forward<F>(fn), fam);
}

}  // namespace

double CoefficientModel::rho(double t1, double t2, double x) const {
  return dispatch(family_, [&](const auto& m) -> double {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, LinearConstant>) {
      return -m.rho1 * x;
    } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
      return -m.rho1(t1, t2) * x;
    } else {
      return 0.0 * x;  // Example2: no real-time drift
    }
  });
}

double CoefficientModel::f(double t1, double t2, double x) const {
  return dispatch(family_, [&](const auto& m) -> double {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, LinearConstant>) {
      return m.f1 * x;
    } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
      return m.f1(t1, t2) * x;
    } else {
      return m.a(t2) * x;
    }
  });
}

double CoefficientModel::g(double t1, double t2, double x) const {
  return dispatch(family_, [&](const auto& m) -> double {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, LinearConstant>) {
      return m.g1 * x;
    } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
      return m.g1(t1, t2) * x;
    } else {
      return m.b0 * x;
    }
  });
}

double CoefficientModel::bound() const {
  return dispatch(family_, [](const auto& m) -> double {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, LinearConstant>) {
      return std::abs(m.rho1) + std::abs(m.f1) + std::abs(m.g1);
    } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
      return m.rho1.bound() + m.f1.bound() + m.g1.bound();
    } else {
      return std::abs(m.a(0.0)) + std::abs(m.c) + std::abs(m.b0);
    }
  });
}

bool CoefficientModel::autonomous() const {
  return std::visit(
      [](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearConstant>) {
          return m.rho1 == 0.0;
        } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
          return m.rho1.bound() == 0.0 && !m.f1.depends_on_t1() &&
                 !m.g1.depends_on_t1();
        } else {
          return true;
        }
      },
      family_);
}

std::string CoefficientModel::name() const {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearConstant>) {
          return "linear_constant";
        } else if constexpr (std::is_same_v<T, LinearTimeVarying>) {
          return "linear_time_varying";
        } else {
          return "example2";
        }
      },
      family_);
}

LipschitzProbe lipschitz_probe(const CoefficientModel& model, double x_lo,
                               double x_hi, double t1_hi, double t2_hi,
                               int samples, std::uint64_t seed) {
  if (!(x_hi > x_lo) || samples <= 0) {
    throw std::domain_error("lipschitz_probe: empty sampling range");
  }
  RngStream rng(seed);
  LipschitzProbe best;
  for (int i = 0; i < samples; ++i) {
    const double t1 = t1_hi * rng.uniform01();
    const double t2 = t2_hi * rng.uniform01();
    const double x = x_lo + (x_hi - x_lo) * rng.uniform01();
    double y = x_lo + (x_hi - x_lo) * rng.uniform01();
    if (y == x) {
      y = x + 0.5 * (x_hi - x_lo) * 1e-6;
    }
    const double q =
        (std::abs(model.rho(t1, t2, x) - model.rho(t1, t2, y)) +
         std::abs(model.f(t1, t2, x) - model.f(t1, t2, y)) +
         std::abs(model.g(t1, t2, x) - model.g(t1, t2, y))) /
        std::abs(x - y);
    if (q > best.K) {
      best = {q, t1, t2, x, y};
    }
  }
  return best;
}

}  // namespace tcsde
