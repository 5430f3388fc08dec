#include "hypint/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "hypint/errors.hpp"

namespace hypint::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;
// Halfline nodes with x beyond ~1/kFarCut are dropped; for decay x^{−1−p} the
// omitted tail is O(kFarCut^p).
constexpr double kFarCut = 1e-150;

// Kronrod 15-point nodes on [0,1] half (symmetric), with weights; Gauss 7 weights on the even nodes.
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
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error, abs_value;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const EndpointFn& f, double a, double b, double lo, double hi, std::size_t& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  auto eval = [&](double x) { return f(x, x - lo, hi - x); };
  const double fc = eval(c);
  double resk = fc * kWgk[7], resg = fc * kWg[3], resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = eval(c - dx), f2 = eval(c + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  resk *= h;
  resg *= h;
  resabs *= std::abs(h);
  const double err = std::max(std::abs(resk - resg), 50.0 * kEps * resabs);
  return {a, b, resk, err, resabs};
}

double target_error(double value, double tol) { return tol * std::max(std::abs(value), 1e-6); }

// Returns false when refinement stalls at an endpoint or the panel budget runs out.
bool gauss_kronrod(const EndpointFn& f, double a, double b, double tol, QuadratureResult& out) {
  std::priority_queue<Panel> heap;
  std::size_t evals = 0;
  heap.push(gk15(f, a, b, a, b, evals));
  double total = heap.top().value, err = heap.top().error;
  const double min_width = 1e-9 * (b - a);
  for (int iter = 0; iter < 2000; ++iter) {
    if (!std::isfinite(total)) return false;
    if (err <= target_error(total, tol)) break;
    Panel p = heap.top();
    if (p.b - p.a < min_width) return false;
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    const Panel l = gk15(f, p.a, m, a, b, evals), r = gk15(f, m, p.b, a, b, evals);
    total += l.value + r.value - p.value;
    err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
  }
  if (err > target_error(total, tol)) return false;
  // Re-sum in a fixed order for a stable result.
  std::vector<Panel> panels;
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double sum = 0.0, esum = 0.0;
  for (const Panel& p : panels) {
    sum += p.value;
    esum += p.error;
  }
  out = {sum, esum, evals, "gauss-kronrod"};
  return true;
}

// Tanh-sinh on [a, b]; node offsets from the nearer endpoint are formed directly.
QuadratureResult tanh_sinh(const EndpointFn& f, double a, double b, double tol) {
  const double half = 0.5 * (b - a);
  std::size_t evals = 0;
  auto sample = [&](double t, double& absacc) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double comp = 2.0 * e / (1.0 + e);  // 1 − |tanh u|
    if (comp < 1e-150) return 0.0;  // omitted mass is O(1e-150^{1+α}) for x^α, α > −1
    const double w = 0.5 * kPi * std::cosh(t) * comp * (2.0 - comp);  // π/2 cosh t / cosh² u
    const double d = half * comp;
    double x, da, db;
    if (t < 0) {
      x = a + d; da = d; db = (b - a) - d;
    } else {
      x = b - d; da = (b - a) - d; db = d;
    }
    if (da <= 0.0 || db <= 0.0) return 0.0;
    ++evals;
    const double v = f(x, da, db) * w;
    if (!std::isfinite(v)) throw ConvergenceError("tanh-sinh: integrand not finite near an endpoint");
    absacc += std::abs(v);
    return v;
  };
  constexpr double kTmax = 6.5;
  constexpr double kH0 = 0.5;
  double abs_sum = 0.0;
  double sum = sample(0.0, abs_sum);
  for (int k = 1; k * kH0 <= kTmax; ++k) sum += sample(k * kH0, abs_sum) + sample(-k * kH0, abs_sum);
  double prev = sum * kH0 * half;
  for (int level = 1; level <= 14; ++level) {
    const double h = kH0 / static_cast<double>(1 << level);
    for (int k = 1; k * h <= kTmax; k += 2) sum += sample(k * h, abs_sum) + sample(-k * h, abs_sum);
    const double cur = sum * h * half;
    const double diff = std::abs(cur - prev);
    const double floor = 20.0 * kEps * abs_sum * h * half;
    prev = cur;
    if (level >= 3 && diff <= std::max(target_error(cur, tol), floor)) {
      return {cur, std::max(diff, floor), evals, "tanh-sinh"};
    }
    if (evals > kNodeBudget) break;
  }
  throw ConvergenceError("quadrature did not converge within the node budget");
}

}  // namespace

QuadratureResult quad_finite(const EndpointFn& f, double a, double b, double tol) {
  if (!(b > a)) throw DomainError("quad_finite requires a < b");
  QuadratureResult r;
  if (gauss_kronrod(f, a, b, tol, r)) return r;
  return tanh_sinh(f, a, b, tol);
}

QuadratureResult quad_finite(const RealFn& f, double a, double b, double tol) {
  return quad_finite(EndpointFn([&f](double x, double, double) { return f(x); }), a, b, tol);
}

QuadratureResult quad_halfline(const RealFn& f, double tol, HalflineMap map) {
  const double near = std::abs(f(1e2)) * 1e2, far = std::abs(f(1e12)) * 1e12;
  if (!std::isfinite(far) || (far > 0.0 && far >= 0.9 * near))
    throw DivergenceError("quad_halfline: integrand does not decay faster than 1/x");
  EndpointFn g;
  if (map == HalflineMap::Rational) {
    // x = t/(1−t), dx = dt/(1−t)²; s = 1 − t is the exact distance to the right end.
    g = [&f](double t, double, double s) { return s < kFarCut ? 0.0 : f(t / s) / (s * s); };
  } else {
    // x = tan(πt/2) = cot(πs/2), dx = (π/2) / sin²(πs/2).
    g = [&f](double, double, double s) {
      if (s < kFarCut) return 0.0;
      const double sn = std::sin(0.5 * kPi * s);
      return f(std::cos(0.5 * kPi * s) / sn) * 0.5 * kPi / (sn * sn);
    };
  }
  return quad_finite(g, 0.0, 1.0, tol);
}

namespace elementary {

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
    if (std::abs(a - b) <= 4 * kEps * a) break;
  }
  return 0.5 * (a + b);
}

double ellipk(double k, double one_minus_k) {
  const double kp = std::sqrt(one_minus_k * (1.0 + k));
  if (kp == 0.0) throw DomainError("ellipk: modulus 1 is a logarithmic singularity");
  return 0.5 * kPi / agm(1.0, kp);
}

double ellipk_imag(double k) { return 0.5 * kPi / agm(1.0, std::hypot(1.0, k)); }

double sqrt1p_m1(double x) { return x / (std::sqrt(1.0 + x) + 1.0); }

double trinomial_root(int n, double alpha, double x) {
  if (x == 0.0) return 0.0;
  // p(y) = α yⁿ + y − x is increasing and convex on y > 0; start from an upper bound.
  double hi = std::min(x, std::pow(x / alpha, 1.0 / n)), lo = 0.0;
  double y = hi;
  for (int i = 0; i < 200; ++i) {
    const double yn1 = std::pow(y, n - 1);
    const double p = alpha * yn1 * y + y - x;
    if (p > 0) hi = y; else lo = y;
    double next = y - p / (n * alpha * yn1 + 1.0);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - y) <= 2 * kEps * y) return next;
    y = next;
  }
  return y;
}

}  // namespace elementary

}  // namespace hypint::oracle
