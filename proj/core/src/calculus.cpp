#include "monadica/calculus.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "monadica/error.hpp"

namespace monadica::calc {
namespace {

constexpr int kCells = 1024;

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void require_in_domain(const GenFn& f, double xi) {
  if (!f.domain().contains(xi)) {
    fail(ErrorCode::OutOfDomain, "shadow lies outside the domain of the function");
  }
}

double factorial(std::uint32_t n) {
  double r = 1.0;
  for (std::uint32_t k = 2; k <= n; ++k) r *= static_cast<double>(k);
  return r;
}

bool opposite(double p, double q) { return (p < 0.0 && q > 0.0) || (p > 0.0 && q < 0.0); }

// Bisection on [a, b] where h(a), h(b) have opposite signs.
template <class H>
double bisect(H&& h, double a, double b, double ha) {
  for (int it = 0; it < 200; ++it) {
    const double mid = a / 2.0 + b / 2.0;
    if (mid <= a || mid >= b) break;
    const double hm = h(mid);
    if (hm == 0.0) return mid;
    if (opposite(ha, hm)) {
      b = mid;
    } else {
      a = mid;
      ha = hm;
    }
  }
  return a / 2.0 + b / 2.0;
}

struct Scan {
  std::vector<double> xs;
  std::vector<double> hs;
};

template <class H>
Scan scan(H&& h, double a, double b, int cells) {
  Scan s;
  s.xs.reserve(static_cast<std::size_t>(cells) + 1);
  s.hs.reserve(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    const double x = i == cells ? b : a + (b - a) * (static_cast<double>(i) / cells);
    s.xs.push_back(x);
    s.hs.push_back(h(x));
  }
  return s;
}

// First root strictly inside ]a, b[, or the interior grid point of least
// |h| when that is within tol.
template <class H>
std::optional<double> first_root(H&& h, const Scan& s, double tol) {
  const std::size_t n = s.xs.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (i + 1 < n && s.hs[i] == 0.0) return s.xs[i];
    if (opposite(s.hs[i - 1], s.hs[i])) {
      const double r = bisect(h, s.xs[i - 1], s.xs[i], s.hs[i - 1]);
      if (r > s.xs.front() && r < s.xs.back()) return r;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (best == 0 || std::abs(s.hs[i]) < std::abs(s.hs[best])) best = i;
  }
  if (best != 0 && std::abs(s.hs[best]) <= tol) return s.xs[best];
  return std::nullopt;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

// --- GenFn ---

GenFn::GenFn(Expr phi, OpenInterval domain)
    : phi_(std::move(phi)), lambda_(calc::lambda(phi_)), domain_(domain) {
  if (!(domain_.lo < domain_.hi)) fail(ErrorCode::DomainError, "empty domain interval");
  if (!range_over(phi_, domain_)) {
    fail(ErrorCode::OutOfDomain, "'" + phi_.to_string() + "' is not defined on the whole domain");
  }
  if (!range_over(lambda_, domain_)) {
    fail(ErrorCode::NotDifferentiable,
         "'" + phi_.to_string() + "' is not differentiable on the whole domain");
  }
}

GenFn GenFn::local(Expr phi, double xi0) {
  if (!std::isfinite(xi0)) fail(ErrorCode::NonFiniteInput, "non-finite point");
  std::optional<Error> last;
  for (int k = 0; k <= 40; ++k) {
    const double r = std::ldexp(1.0, -k);
    try {
      return GenFn(phi, OpenInterval{xi0 - r, xi0 + r});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfDomain && e.code() != ErrorCode::NotDifferentiable) throw;
      last = e;
    }
  }
  throw *last;
}

Expr GenFn::derivative_expr(std::uint32_t m) const {
  if (m == 0) return phi_;
  if (m == 1) return lambda_;
  Expr d = lambda_chain(phi_, m).back();
  if (m > 1 && !range_over(d, domain_)) {
    fail(ErrorCode::NotDifferentiable,
         "derivative of order " + std::to_string(m) + " may not exist on the whole domain");
  }
  return d;
}

// --- natural extension and derivatives ---

GeneralizedReal nat_ext_eval(const GenFn& f, const GeneralizedReal& x) {
  const double s = x.shadow();
  require_in_domain(f, s);
  return GeneralizedReal(f.expr().eval(s)) +
         linear_combination(f.lambda().eval(s), x.differential(), 0.0, GeneralizedReal{});
}

GeneralizedReal gen_eval(const Expr& e, const GeneralizedReal& x) { return e.gen_eval(x); }

double derivative_at(const GenFn& f, const GeneralizedReal& x) {
  require_in_domain(f, x.shadow());
  return f.lambda().eval(x.shadow());
}

GeneralizedReal mth_ext_eval(const GenFn& f, std::uint32_t m, const GeneralizedReal& x) {
  if (m == 0) fail(ErrorCode::DomainError, "order must be at least 1");
  const double s = x.shadow();
  require_in_domain(f, s);
  const Expr lower = f.derivative_expr(m - 1);
  const Expr upper = lambda_chain(f.expr(), m).back();
  if (!range_over(upper, f.domain())) {
    fail(ErrorCode::NotDifferentiable,
         "derivative of order " + std::to_string(m) + " may not exist on the whole domain");
  }
  return GeneralizedReal(lower.eval(s)) +
         linear_combination(upper.eval(s), x.differential(), 0.0, GeneralizedReal{});
}

double mth_derivative(const GenFn& f, std::uint32_t m, const GeneralizedReal& x) {
  require_in_domain(f, x.shadow());
  return f.derivative_expr(m).eval(x.shadow());
}

// --- Taylor ---

TaylorResult taylor(const GenFn& f, double xi0, std::uint32_t m, const GeneralizedReal& x) {
  const double s = x.shadow();
  require_in_domain(f, xi0);
  require_in_domain(f, s);
  if (s == xi0) fail(ErrorCode::DomainError, "the evaluation point must differ from the center");

  const std::vector<Expr> d = lambda_chain(f.expr(), m + 1);
  if (!range_over(d.back(), f.domain())) {
    fail(ErrorCode::NotDifferentiable,
         "derivative of order " + std::to_string(m + 1) + " may not exist on the whole domain");
  }

  const double h = s - xi0;
  TaylorResult r;
  r.function_value = d[0].eval(s);
  double scale = std::max(1.0, std::abs(r.function_value));
  double hk = 1.0;
  for (std::uint32_t k = 0; k <= m; ++k) {
    const double term = d[k].eval(xi0) * hk / factorial(k);
    r.partial_sum += term;
    scale = std::max(scale, std::abs(term));
    hk *= h;
  }
  const double c = hk / factorial(m + 1);  // h^(m+1) / (m+1)!
  const Program top(d[m + 1]);
  const double gap = r.function_value - r.partial_sum;
  auto g = [&](double theta) { return gap - c * top(xi0 + theta * h); };

  const Scan sc = scan(g, 0.0, 1.0, kCells);
  if (max_abs(sc.hs) <= 64.0 * DBL_EPSILON * scale) {
    r.theta = 0.5;
  } else {
    r.theta = first_root(g, sc, 1e-10 * scale);
  }

  double peak = 0.0;
  if (c != 0.0) {
    for (double v : sc.hs) peak = std::max(peak, std::abs((gap - v) / c));
  } else {
    for (double theta : sc.xs) peak = std::max(peak, std::abs(top(xi0 + theta * h)));
  }
  if (r.theta) peak = std::max(peak, std::abs(top(xi0 + *r.theta * h)));
  r.remainder_bound = peak * std::abs(c);
  return r;
}

// --- mean value theorem ---

double mvt_gamma(const GenFn& f, const GeneralizedReal& a, const GeneralizedReal& b) {
  const double sa = a.shadow();
  const double sb = b.shadow();
  if (!(sa < sb)) fail(ErrorCode::DomainError, "mvt needs shadow(a) < shadow(b)");
  require_in_domain(f, sa);
  require_in_domain(f, sb);
  const double slope = (f.expr().eval(sb) - f.expr().eval(sa)) / (sb - sa);
  const Program lam(f.lambda());
  auto h = [&](double g) { return lam(g) - slope; };

  const Scan sc = scan(h, sa, sb, kCells);
  double scale = std::max(1.0, std::abs(slope));
  for (double v : sc.hs) scale = std::max(scale, std::abs(v + slope));
  if (max_abs(sc.hs) <= 64.0 * DBL_EPSILON * scale) return sa / 2.0 + sb / 2.0;
  if (auto g = first_root(h, sc, 1e-9 * scale)) return *g;
  fail(ErrorCode::GammaNotFound, "no intermediate point found for the mean value identity");
}

MvtSides mvt_sides(const GenFn& f, const GeneralizedReal& a, const GeneralizedReal& b,
                   double gamma) {
  const double lg = f.lambda().eval(gamma);
  const double la = derivative_at(f, a);
  const double lb = derivative_at(f, b);
  MvtSides out;
  out.lhs = nat_ext_eval(f, b) - nat_ext_eval(f, a);
  out.rhs = linear_combination(lg, b - a, 1.0,
                               linear_combination(lb - lg, b.differential(), lg - la,
                                                  a.differential()));
  out.rhs = out.rhs + GeneralizedReal(lg * (b.shadow() - a.shadow()));
  return out;
}

// --- inverse ---

std::vector<double> sample_points(const OpenInterval& d, std::size_t n) {
  std::vector<double> pts;
  pts.reserve(n);
  const bool lo_fin = std::isfinite(d.lo);
  const bool hi_fin = std::isfinite(d.hi);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n + 1);  // in ]0,1[
    double p = 0.0;
    if (lo_fin && hi_fin) {
      p = d.lo + (d.hi - d.lo) * t;
    } else if (lo_fin) {
      p = d.lo + t / (1.0 - t);
    } else if (hi_fin) {
      p = d.hi - (1.0 - t) / t;
    } else {
      const double u = 2.0 * t - 1.0;
      p = u / (1.0 - u * u);
    }
    if (d.contains(p)) pts.push_back(p);
  }
  return pts;
}

GenFn inverse_ext(const GenFn& f) {
  const auto slope_range = range_over(f.lambda(), f.domain());
  if (!(slope_range && slope_range->excludes_zero())) {
    const std::vector<double> pts = sample_points(f.domain(), kCells);
    std::vector<double> vals;
    vals.reserve(pts.size());
    for (double p : pts) vals.push_back(f.expr().eval(p));
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < vals.size(); ++i) {
      up = up && vals[i] > vals[i - 1];
      down = down && vals[i] < vals[i - 1];
    }
    if (!up && !down) fail(ErrorCode::NotInjective, "the function is not injective on its domain");
    for (double p : pts) {
      const double l = f.lambda().eval(p);
      if (l == 0.0 || (up && l < 0.0) || (down && l > 0.0)) {
        fail(ErrorCode::VanishingDerivative, "the derivative vanishes on the domain");
      }
    }
  }
  const OpenInterval img = monotone_image(f.expr(), f.domain());
  try {
    return GenFn(inverse_of(f.expr(), f.domain()), img);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotDifferentiable) {
      fail(ErrorCode::VanishingDerivative,
           "could not show that the derivative stays away from zero on the domain");
    }
    throw;
  }
}

// --- images of monadic sets ---

namespace {

using sets::GeneralizedSet;
using sets::Interval;
using sets::RealSet;

struct ImageParts {
  std::vector<Interval> pieces;
  std::vector<double> extras;
};

void image_point(const GenFn& f, double p, ImageParts& out) {
  require_in_domain(f, p);
  const double v = f.expr().eval(p);
  if (f.lambda().eval(p) == 0.0) {
    out.extras.push_back(v);
  } else {
    out.pieces.push_back(Interval::point(v));
  }
}

bool critical_end(const GenFn& f, double p) {
  return std::abs(f.lambda().eval(p)) <= 1e-13;
}

void image_interval(const GenFn& f, const Interval& piece, ImageParts& out) {
  const OpenInterval& dom = f.domain();
  const bool lo_ok = piece.lo > dom.lo || (piece.lo == dom.lo && !piece.lo_closed);
  const bool hi_ok = piece.hi < dom.hi || (piece.hi == dom.hi && !piece.hi_closed);
  if (!lo_ok || !hi_ok) fail(ErrorCode::OutOfDomain, "set is not contained in the domain");

  const OpenInterval inner{piece.lo, piece.hi};
  const Expr& phi = f.expr();
  const Expr& lam = f.lambda();

  // Critical points strictly inside the piece.
  std::vector<double> crit;
  const auto slope_range = range_over(lam, inner);
  if (!(slope_range && slope_range->excludes_zero())) {
    if (!inner.is_bounded()) {
      fail(ErrorCode::NotRepresentable,
           "image over an unbounded interval needs a derivative of constant sign");
    }
    std::vector<double> xs = sample_points(inner, 4095);
    const Program dl(lam);
    std::vector<double> ls;
    ls.reserve(xs.size());
    for (double x : xs) ls.push_back(dl(x));
    if (max_abs(ls) == 0.0) {
      out.extras.push_back(phi.eval(xs[xs.size() / 2]));
      if (piece.lo_closed) out.extras.push_back(phi.eval(piece.lo));
      if (piece.hi_closed) out.extras.push_back(phi.eval(piece.hi));
      return;
    }
    auto h = [&](double x) { return dl(x); };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (ls[i] == 0.0) {
        crit.push_back(xs[i]);
      } else if (i > 0 && opposite(ls[i - 1], ls[i])) {
        crit.push_back(bisect(h, xs[i - 1], xs[i], ls[i - 1]));
      }
    }
  }

  const bool lo_crit = piece.lo_closed && critical_end(f, piece.lo);
  const bool hi_crit = piece.hi_closed && critical_end(f, piece.hi);
  for (double c : crit) out.extras.push_back(phi.eval(c));
  if (lo_crit) out.extras.push_back(phi.eval(piece.lo));
  if (hi_crit) out.extras.push_back(phi.eval(piece.hi));

  std::vector<double> cuts;
  cuts.push_back(piece.lo);
  cuts.insert(cuts.end(), crit.begin(), crit.end());
  cuts.push_back(piece.hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double p = cuts[i];
    const double q = cuts[i + 1];
    if (!(p < q)) continue;
    const OpenInterval seg{p, q};
    const double mid = sample_points(seg, 1).front();
    const bool increasing = lam.eval(mid) > 0.0;
    const OpenInterval img = monotone_image(phi, seg);
    const bool p_closed = i == 0 && piece.lo_closed && !lo_crit;
    const bool q_closed = i + 2 == cuts.size() && piece.hi_closed && !hi_crit;
    double vp = increasing ? img.lo : img.hi;
    double vq = increasing ? img.hi : img.lo;
    if (dom.contains(p)) vp = phi.eval(p);
    if (dom.contains(q)) vq = phi.eval(q);
    if (increasing) {
      out.pieces.push_back(Interval{vp, vq, p_closed, q_closed});
    } else {
      out.pieces.push_back(Interval{vq, vp, q_closed, p_closed});
    }
  }
}

}  // namespace

sets::GeneralizedSet image(const GenFn& f, const sets::GeneralizedSet& g) {
  ImageParts parts;
  for (const Interval& piece : g.base().pieces()) {
    if (piece.is_point()) {
      image_point(f, piece.lo, parts);
    } else {
      image_interval(f, piece, parts);
    }
  }
  for (double r : g.extras()) {
    require_in_domain(f, r);
    parts.extras.push_back(f.expr().eval(r));
  }
  return GeneralizedSet(RealSet(std::move(parts.pieces)), std::move(parts.extras));
}

}  // namespace monadica::calc
