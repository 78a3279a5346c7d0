#include <array>
#include <cmath>
#include <vector>

#include "ffsieve/weight.hpp"

namespace ffsieve {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights on the odd Kronrod nodes (indices 1, 3, 5, 7).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxIntervals = 200;

struct Segment {
  double a, b, value, error;
};

class Integrator {
 public:
  Integrator(int dim, const std::function<double(std::span<const double>)>& f, double tol)
      : dim_(dim), f_(f), tol_(tol), point_(dim, 0.0) {}

  QuadratureResult run() {
    QuadratureResult res;
    if (dim_ == 0) {
      res.value = f_(std::span<const double>());
      evaluations_ = 1;
    } else {
      const auto [v, e] = level(0, 1.0);
      res.value = v;
      res.error = e;
    }
    res.evaluations = evaluations_;
    if (!(res.error <= tol_ * std::max(1.0, std::abs(res.value))))
      throw QuadratureError("integrate_simplex: tolerance not reached", res.error);
    return res;
  }

 private:
  // Integrates over t_lvl in [0, upper], the remaining coordinates recursively.
  std::pair<double, double> level(int lvl, double upper) {
    if (upper <= 0) return {0.0, 0.0};
    auto inner = [&](double x) -> std::pair<double, double> {
      point_[lvl] = x;
      if (lvl + 1 == dim_) {
        ++evaluations_;
        return {f_(point_), 0.0};
      }
      return level(lvl + 1, upper - x);
    };
    auto gk = [&](double a, double b) {
      const double c = 0.5 * (a + b), h = 0.5 * (b - a);
      double kron = 0, gauss = 0, inner_err = 0;
      for (int i = 0; i < 8; ++i) {
        if (i == 7) {
          const auto [v, e] = inner(c);
          kron += kWgk[i] * v;
          gauss += kWg[3] * v;
          inner_err += kWgk[i] * e;
          continue;
        }
        const auto [v1, e1] = inner(c - h * kXgk[i]);
        const auto [v2, e2] = inner(c + h * kXgk[i]);
        kron += kWgk[i] * (v1 + v2);
        inner_err += kWgk[i] * (e1 + e2);
        if (i % 2 == 1) gauss += kWg[i / 2] * (v1 + v2);
      }
      return Segment{a, b, kron * h, std::abs((kron - gauss) * h) + inner_err * h};
    };

    std::vector<Segment> segs{gk(0.0, upper)};
    auto totals = [&] {
      double v = 0, e = 0;
      for (const auto& s : segs) {
        v += s.value;
        e += s.error;
      }
      return std::pair{v, e};
    };
    for (;;) {
      const auto [v, e] = totals();
      if (e <= 0.1 * tol_ * std::max(1.0, std::abs(v)) || static_cast<int>(segs.size()) >= kMaxIntervals)
        return {v, e};
      std::size_t worst = 0;
      for (std::size_t i = 1; i < segs.size(); ++i)
        if (segs[i].error > segs[worst].error) worst = i;
      const Segment s = segs[worst];
      const double mid = 0.5 * (s.a + s.b);
      if (mid <= s.a || mid >= s.b) return {v, e};
      segs[worst] = gk(s.a, mid);
      segs.push_back(gk(mid, s.b));
    }
  }

  int dim_;
  const std::function<double(std::span<const double>)>& f_;
  double tol_;
  std::vector<double> point_;
  long evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate_simplex(int dim, const std::function<double(std::span<const double>)>& f, double tol) {
  if (dim < 0) throw std::invalid_argument("integrate_simplex: negative dimension");
  if (!(tol > 0)) throw std::invalid_argument("integrate_simplex: tolerance must be positive");
  return Integrator(dim, f, tol).run();
}

}  // namespace ffsieve
