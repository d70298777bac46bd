#include "monadica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "monadica/calculus.hpp"
#include "monadica/error.hpp"
#include "monadica/generalized_real.hpp"
#include "monadica/generalized_set.hpp"
#include "monadica/piecewise.hpp"
#include "monadica/real_set.hpp"
#include "monadica/sequence.hpp"

namespace monadica::verify {
namespace {

using calc::Expr;
using calc::GenFn;
using sets::GeneralizedSet;
using sets::Interval;
using sets::RealSet;

using Failure = std::optional<std::string>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

 private:
  std::mt19937_64 eng_;
};

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) {
    report_.suite = std::move(name);
    report_.seed = seed;
  }

  void property(std::string name, std::size_t n, const std::function<Failure(std::size_t)>& body) {
    PropertyResult r{std::move(name), true, 0, ""};
    for (std::size_t i = 0; i < n; ++i) {
      ++r.cases;
      Failure bad;
      try {
        bad = body(i);
      } catch (const std::exception& e) {
        bad = std::string("unexpected exception: ") + e.what();
      }
      if (bad) {
        r.pass = false;
        r.detail = "case " + std::to_string(i) + ": " + *bad;
        break;
      }
    }
    report_.results.push_back(std::move(r));
  }

  void check(std::string name, const std::function<Failure()>& body) {
    property(std::move(name), 1, [&](std::size_t) { return body(); });
  }

  SuiteReport done() { return std::move(report_); }

 private:
  SuiteReport report_;
};

template <class... T>
std::string str(const T&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  return os.str();
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

Failure expect_close(const GeneralizedReal& got, const GeneralizedReal& want, double rel) {
  if (approx_equal(got, want, rel)) return std::nullopt;
  return str("got ", got, ", want ", want);
}

Failure expect_close(double got, double want, double rel) {
  if (close(got, want, rel)) return std::nullopt;
  return str("got ", got, ", want ", want);
}

template <class E>
Failure expect_error(ErrorCode code, E&& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == code) return std::nullopt;
    return str("threw ", to_string(e.code()), " instead of ", to_string(code));
  }
  return str("expected ", to_string(code));
}

const std::vector<GeneratorId>& pool() {
  static const std::vector<GeneratorId> ids = {"e:1", "e:2", "e:3", "h", "g:0.5", "g:0.25"};
  return ids;
}

GeneralizedReal random_infinitesimal(Rng& r, int min_terms = 1) {
  GeneralizedReal::Coefficients c;
  const int n = r.integer(min_terms, 3);
  std::vector<GeneratorId> ids = pool();
  for (int k = 0; k < n; ++k) {
    const auto j = static_cast<std::size_t>(r.integer(0, static_cast<int>(ids.size()) - 1));
    c.emplace_back(ids[j], r.uniform(-3.0, 3.0));
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::sort(c.begin(), c.end());
  return GeneralizedReal::make(0.0, std::move(c));
}

GeneralizedReal random_value(Rng& r, double lo, double hi) {
  return GeneralizedReal(r.uniform(lo, hi)) + random_infinitesimal(r, 0);
}

// Shadow bounded away from zero.
GeneralizedReal random_unit(Rng& r) {
  const double s = r.uniform(0.5, 5.0) * (r.coin() ? 1.0 : -1.0);
  return GeneralizedReal(s) + random_infinitesimal(r, 0);
}

using CoeffMap = std::map<std::string, double>;

CoeffMap coeffs(const GeneralizedReal& x) {
  CoeffMap m;
  for (const auto& [id, v] : x.coefficients()) m[id.str()] = v;
  return m;
}

Failure expect_coeffs(const GeneralizedReal& got, const CoeffMap& want, double rel) {
  CoeffMap g = coeffs(got);
  CoeffMap all = want;
  for (const auto& [k, v] : g) all.emplace(k, 0.0);
  for (const auto& [k, v] : all) {
    const double a = g.count(k) ? g.at(k) : 0.0;
    const double b = want.count(k) ? want.at(k) : 0.0;
    if (!close(a, b, rel)) return str("coefficient ", k, ": got ", a, ", want ", b);
  }
  return std::nullopt;
}

CoeffMap combine(double a, const CoeffMap& x, double b, const CoeffMap& y) {
  CoeffMap out;
  for (const auto& [k, v] : x) out[k] += a * v;
  for (const auto& [k, v] : y) out[k] += b * v;
  return out;
}

// --- random expressions, all defined and smooth on the whole real line ---

Expr random_leaf(Rng& r) {
  const Expr x = Expr::variable();
  if (r.coin(0.5)) return x;
  return Expr::constant(r.uniform(-1.5, 1.5)) * x + Expr::constant(r.uniform(-1.0, 1.0));
}

Expr random_expr(Rng& r, int depth) {
  if (depth == 0) return random_leaf(r);
  const Expr u = random_expr(r, depth - 1);
  const Expr one = Expr::constant(1.0);
  const Expr two = Expr::constant(2.0);
  switch (r.integer(0, 10)) {
    case 0: return u + random_expr(r, depth - 1);
    case 1: return u - random_expr(r, depth - 1);
    case 2: return u * random_expr(r, depth - 1);
    case 3: return calc::sin(u);
    case 4: return calc::cos(u);
    case 5: return calc::exp(calc::sin(u));
    case 6: return calc::log(one + calc::pow_int(u, 2));
    case 7: return u / (two + calc::cos(random_expr(r, depth - 1)));
    case 8: return calc::root(two + calc::sin(u), 2);
    case 9: return calc::pow_int(u, static_cast<std::uint32_t>(r.integer(2, 3)));
    default: return calc::exp(Expr::constant(0.5) * random_leaf(r));
  }
}

// ===================================================================

SuiteReport identities(std::uint64_t seed) {
  Suite s("identities", seed);
  const GeneralizedReal dx = GeneralizedReal::generator("e:1", 1.0);
  const GeneralizedReal one_dx = GeneralizedReal(1.0) + dx;
  s.check("exp(dx) = 1 + dx", [&] { return expect_close(calc::exp_hat(dx), one_dx, 1e-12); });
  s.check("log(1 + dx) = dx", [&] { return expect_close(calc::log_hat(one_dx), dx, 1e-12); });
  s.check("sin(dx) = dx", [&] { return expect_close(calc::sin_hat(dx), dx, 1e-12); });
  s.check("cos(dx) = 1", [&] { return expect_close(calc::cos_hat(dx), GeneralizedReal(1.0), 1e-12); });
  for (double alpha : {-1.0, 0.5, 2.0, std::numbers::pi}) {
    s.check(str("(1 + dx)^", alpha, " = 1 + ", alpha, " dx"), [&] {
      const GeneralizedReal want = GeneralizedReal(1.0) + GeneralizedReal::generator("e:1", alpha);
      return expect_close(calc::pow_real_hat(one_dx, alpha), want, 1e-12);
    });
  }
  s.check("sin^2 + cos^2 = 1 at 0.7 + dx", [&]() -> Failure {
    const Expr x = Expr::variable();
    const Expr e = calc::pow_int(calc::sin(x), 2) + calc::pow_int(calc::cos(x), 2);
    const GeneralizedReal v = e.gen_eval(GeneralizedReal(0.7) + dx);
    if (!v.is_real()) return str("dpart not empty: ", v);
    return expect_close(v.shadow(), 1.0, 1e-12);
  });
  s.check("dx * dx = 0", [&]() -> Failure {
    const GeneralizedReal sq = dx * dx;
    if (sq.is_real() && sq.shadow() == 0.0) return std::nullopt;
    return str("got ", sq);
  });
  return s.done();
}

SuiteReport ring(std::uint64_t seed) {
  Suite s("ring", seed);
  constexpr std::size_t n = 1000;
  constexpr double tol = 1e-12;
  Rng r(seed);
  struct Triple {
    GeneralizedReal x, y, z;
  };
  std::vector<Triple> t(n);
  for (auto& k : t) {
    k.x = random_value(r, -10.0, 10.0);
    k.y = r.coin(0.1) ? GeneralizedReal(k.x.shadow()) + random_infinitesimal(r)
                      : random_value(r, -10.0, 10.0);
    k.z = random_value(r, -10.0, 10.0);
  }
  s.property("addition is commutative", n, [&](std::size_t i) {
    return expect_close(t[i].x + t[i].y, t[i].y + t[i].x, tol);
  });
  s.property("addition is associative", n, [&](std::size_t i) {
    const auto& [x, y, z] = t[i];
    return expect_close((x + y) + z, x + (y + z), tol);
  });
  s.property("multiplication is commutative", n, [&](std::size_t i) {
    return expect_close(t[i].x * t[i].y, t[i].y * t[i].x, tol);
  });
  s.property("multiplication is associative", n, [&](std::size_t i) {
    const auto& [x, y, z] = t[i];
    return expect_close((x * y) * z, x * (y * z), tol);
  });
  s.property("multiplication distributes over addition", n, [&](std::size_t i) {
    const auto& [x, y, z] = t[i];
    return expect_close(x * (y + z), x * y + x * z, tol);
  });
  s.property("0 and 1 are identities", n, [&](std::size_t i) -> Failure {
    const auto& x = t[i].x;
    if (!(x + GeneralizedReal(0.0) == x)) return str("x + 0 != x for ", x);
    if (!(x * GeneralizedReal(1.0) == x)) return str("x * 1 != x for ", x);
    if (!(x + (-x) == GeneralizedReal(0.0))) return str("x - x != 0 for ", x);
    return std::nullopt;
  });
  s.property("trichotomy", n, [&](std::size_t i) -> Failure {
    const auto& [x, y, z] = t[i];
    const int count = int(lt(x, y)) + int(indiscernible(x, y)) + int(lt(y, x));
    if (count != 1) return str(count, " relations hold between ", x, " and ", y);
    return std::nullopt;
  });
  s.property("order is compatible with + and *", n, [&](std::size_t i) -> Failure {
    auto [x, y, z] = t[i];
    if (lt(y, x)) std::swap(x, y);
    if (!lt(x, y)) return std::nullopt;
    const auto below = [](const GeneralizedReal& a, const GeneralizedReal& b) {
      return lt(a, b) || close(a.shadow(), b.shadow(), tol);
    };
    if (!below(x + z, y + z)) return str("x + z < y + z fails for z = ", z);
    if (z.shadow() > 0.0 && !below(x * z, y * z)) return str("x z < y z fails for z = ", z);
    return std::nullopt;
  });
  s.property("infinitesimals are nilpotent", n, [&](std::size_t) -> Failure {
    const GeneralizedReal e = random_infinitesimal(r);
    const GeneralizedReal sq = e * e;
    if (sq.is_real() && sq.shadow() == 0.0) return std::nullopt;
    return str(e, " squared is ", sq);
  });
  s.property("x * inv(x) = 1", n, [&](std::size_t) -> Failure {
    const GeneralizedReal x = random_unit(r);
    const GeneralizedReal p = x * inv(x);
    if (!p.is_real()) return str("dpart of x inv(x) not empty for x = ", x, ": ", p);
    return expect_close(p.shadow(), 1.0, tol);
  });
  s.property("shadow is a ring homomorphism", n, [&](std::size_t i) -> Failure {
    const auto& [x, y, z] = t[i];
    if (sigma(x * y) != sigma(x) * sigma(y)) return str("sigma(xy) for ", x, ", ", y);
    if (sigma(x + y) != sigma(x) + sigma(y)) return str("sigma(x+y) for ", x, ", ", y);
    if (sigma(GeneralizedReal(sigma(x))) != sigma(x)) return str("sigma not idempotent at ", x);
    return std::nullopt;
  });
  s.property("x = sigma(x) + dpart(x) uniquely", n, [&](std::size_t i) -> Failure {
    const auto& x = t[i].x;
    if (!(GeneralizedReal::make(sigma(x), x.coefficients()) == x)) return str("rebuild of ", x);
    if (sigma(dpart(x)) != 0.0) return str("sigma(dpart) != 0 for ", x);
    if (!(dpart(dpart(x)) == dpart(x))) return str("dpart not idempotent at ", x);
    if (!dpart(GeneralizedReal(sigma(x))).is_real()) return "dpart of a real is not 0";
    return std::nullopt;
  });
  s.property("infinitesimals lie between negatives and positives", n, [&](std::size_t) -> Failure {
    const GeneralizedReal e = random_infinitesimal(r);
    const GeneralizedReal p = GeneralizedReal(r.uniform(1e-6, 10.0)) + random_infinitesimal(r, 0);
    if (!lt(e, p) || !lt(-p, e)) return str(e, " vs ", p);
    return std::nullopt;
  });
  return s.done();
}

Failure compare_prefix(const std::vector<double>& got, const std::vector<double>& want) {
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (!close(got[k], want[k], 1e-12)) {
      return str("term ", k + 1, ": core gives ", got[k], ", oracle ", want[k]);
    }
  }
  return std::nullopt;
}

SuiteReport oracle(std::uint64_t seed) {
  Suite s("oracle", seed);
  constexpr std::size_t n = 500;
  constexpr std::size_t terms = 64;
  Rng r(seed);
  s.property("add matches the termwise formula", n, [&](std::size_t) {
    const auto x = random_value(r, -5.0, 5.0);
    const auto y = random_value(r, -5.0, 5.0);
    return compare_prefix(seq::prefix(x + y, terms), seq::oracle_binary(seq::BinaryOp::Add, x, y, terms));
  });
  s.property("mul matches the termwise formula", n, [&](std::size_t) {
    const auto x = random_value(r, -5.0, 5.0);
    const auto y = random_value(r, -5.0, 5.0);
    return compare_prefix(seq::prefix(x * y, terms), seq::oracle_binary(seq::BinaryOp::Mul, x, y, terms));
  });
  s.property("inv matches the termwise formula", n, [&](std::size_t) {
    const auto x = random_unit(r);
    return compare_prefix(seq::prefix(inv(x), terms), seq::oracle_inverse(x, terms));
  });
  s.property("pow_nat matches the folded termwise product", n, [&](std::size_t) {
    const auto x = random_value(r, -3.0, 3.0);
    const auto m = static_cast<std::uint32_t>(r.integer(1, 5));
    return compare_prefix(seq::prefix(pow_nat(x, m), terms), seq::oracle_pow(x, m, terms));
  });
  s.check("catalog generators converge", []() -> Failure {
    for (const char* id : {"e:1", "e:7", "e:1000", "h", "g:0.5", "g:0.25", "g:0.9"}) {
      const auto w = seq::convergence_witness(GeneralizedReal::generator(id, 1.0), 1e-6, 10'000'000);
      if (!w) return str(id, " has no witness");
    }
    return std::nullopt;
  });
  s.check("convergence witness examples", []() -> Failure {
    const auto a = seq::convergence_witness(GeneralizedReal(2.0) + GeneralizedReal::generator("e:1", 1.0), 1e-9, 1000);
    const auto b = seq::convergence_witness(GeneralizedReal::generator("h", 1.0), 0.01, 1000);
    const auto c = seq::convergence_witness(GeneralizedReal(5.0), 1e-3, 1000);
    if (a != 2u) return "2 + e:1 should give 2";
    if (b != 101u) return "h at 0.01 should give 101";
    if (c != 1u) return "a real should give 1";
    return std::nullopt;
  });
  s.property("catalog generators are linearly independent", 50, [&](std::size_t) -> Failure {
    std::vector<GeneratorId> ids = {"e:1", "e:2", "e:3", "e:5", "e:8", "h", "g:0.5", "g:0.25", "g:0.75", "g:0.9"};
    std::shuffle(ids.begin(), ids.end(), std::mt19937_64(static_cast<std::uint64_t>(r.integer(0, 1 << 30))));
    ids.resize(static_cast<std::size_t>(r.integer(1, 8)));
    const std::size_t rank = seq::prefix_rank(ids, terms);
    if (rank != ids.size()) return str("rank ", rank, " for ", ids.size(), " generators");
    return std::nullopt;
  });
  return s.done();
}

SuiteReport differential(std::uint64_t seed) {
  Suite s("differential", seed);
  constexpr std::size_t n = 500;
  constexpr double tol = 1e-12;
  Rng r(seed);
  s.property("d(x + y) = dx + dy and d(x - y) = dx - dy", n, [&](std::size_t) -> Failure {
    const auto x = random_value(r, -5.0, 5.0);
    const auto y = random_value(r, -5.0, 5.0);
    if (auto f = expect_coeffs(x + y, combine(1.0, coeffs(x), 1.0, coeffs(y)), tol)) return f;
    return expect_coeffs(x - y, combine(1.0, coeffs(x), -1.0, coeffs(y)), tol);
  });
  s.property("d(xy) = sx dy + sy dx", n, [&](std::size_t) {
    const auto x = random_value(r, -5.0, 5.0);
    const auto y = random_value(r, -5.0, 5.0);
    return expect_coeffs(x * y, combine(x.shadow(), coeffs(y), y.shadow(), coeffs(x)), tol);
  });
  s.property("d(x^m) = m sx^(m-1) dx", n, [&](std::size_t) {
    const auto x = random_value(r, -3.0, 3.0);
    const auto m = static_cast<std::uint32_t>(r.integer(1, 6));
    const double k = m * std::pow(x.shadow(), m - 1.0);
    return expect_coeffs(pow_nat(x, m), combine(k, coeffs(x), 0.0, {}), tol);
  });
  s.property("d(1/x) = -dx / sx^2", n, [&](std::size_t) {
    const auto x = random_unit(r);
    return expect_coeffs(inv(x), combine(-1.0 / (x.shadow() * x.shadow()), coeffs(x), 0.0, {}), tol);
  });
  s.property("d(y/x) = (sx dy - sy dx) / sx^2", n, [&](std::size_t) {
    const auto x = random_unit(r);
    const auto y = random_value(r, -5.0, 5.0);
    const double q = x.shadow() * x.shadow();
    return expect_coeffs(div(y, x), combine(x.shadow() / q, coeffs(y), -y.shadow() / q, coeffs(x)), tol);
  });
  s.property("d(root_m x) = dx / (m root_m(sx)^(m-1))", n, [&](std::size_t) {
    const auto x = GeneralizedReal(r.uniform(0.1, 10.0)) + random_infinitesimal(r, 0);
    const auto m = static_cast<std::uint32_t>(r.integer(2, 5));
    const double rt = std::pow(x.shadow(), 1.0 / m);
    return expect_coeffs(root(x, m), combine(1.0 / (m * std::pow(rt, m - 1.0)), coeffs(x), 0.0, {}), tol);
  });
  return s.done();
}

// --- sets ---

struct RawSet {
  std::vector<Interval> parts;

  bool contains(double v) const {
    return std::any_of(parts.begin(), parts.end(), [v](const Interval& i) { return i.contains(v); });
  }
  RealSet normalized() const { return RealSet(parts); }
};

double grid_value(Rng& r) { return r.integer(-12, 12) * 0.5; }

RawSet random_raw(Rng& r, bool bounded) {
  RawSet s;
  const int k = r.integer(0, 3);
  for (int i = 0; i < k; ++i) {
    double a = grid_value(r);
    double b = grid_value(r);
    if (a > b) std::swap(a, b);
    Interval iv{a, b, r.coin(), r.coin()};
    if (!bounded && r.coin(0.15)) iv.lo = -sets::kInf, iv.lo_closed = false;
    if (!bounded && r.coin(0.15)) iv.hi = sets::kInf, iv.hi_closed = false;
    s.parts.push_back(iv);
  }
  const int p = r.integer(0, 2);
  for (int i = 0; i < p; ++i) s.parts.push_back(Interval::point(grid_value(r)));
  if (bounded && s.parts.empty()) s.parts.push_back(Interval::point(grid_value(r)));
  return s;
}

std::vector<double> probes() {
  std::vector<double> v;
  for (int i = -30; i <= 30; ++i) v.push_back(i * 0.25);
  return v;
}

// Membership of the monad point p + e1 (and of p itself) must agree with a predicate.
template <class P>
Failure monad_agrees(const GeneralizedSet& g, P&& pred, const char* what) {
  const GeneralizedReal e1 = GeneralizedReal::generator("e:1", 1.0);
  for (double p : probes()) {
    const bool want = pred(p);
    if (sets::member(GeneralizedReal(p) + e1, g) != want || sets::member(GeneralizedReal(p), g) != want) {
      return str(what, ": membership differs at ", p, " in ", g);
    }
  }
  return std::nullopt;
}

// Standard-topology oracles on sets whose features sit on the half-integer grid.
bool in_interior(const RawSet& a, double p) {
  return a.contains(p) && a.contains(p - 0.125) && a.contains(p + 0.125);
}
bool in_closure(const RawSet& a, double p) {
  return a.contains(p) || a.contains(p - 0.125) || a.contains(p + 0.125);
}

SuiteReport sets_suite(std::uint64_t seed) {
  Suite s("sets", seed);
  constexpr std::size_t n = 200;
  Rng r(seed);
  struct Case {
    RawSet a, b, c;
  };
  std::vector<Case> cases(n);
  for (auto& c : cases) {
    c.a = random_raw(r, false);
    c.b = random_raw(r, false);
    c.c = random_raw(r, false);
  }
  s.property("normalization preserves membership", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    for (double p : probes()) {
      if (a.contains(p) != cases[i].a.contains(p)) return str("at ", p, " in ", a);
    }
    return std::nullopt;
  });
  s.property("monad commutes with union, intersection, difference", n, [&](std::size_t i) -> Failure {
    const auto& [ra, rb, rc] = cases[i];
    const RealSet a = ra.normalized();
    const RealSet b = rb.normalized();
    const auto ma = sets::monad(a);
    const auto mb = sets::monad(b);
    const auto u = sets::set_union(ma, mb);
    const auto x = sets::set_intersect(ma, mb);
    const auto d = sets::set_difference(ma, mb);
    if (!(u == sets::monad(a.union_with(b)))) return "union";
    if (!(x == sets::monad(a.intersect(b)))) return "intersection";
    if (!(d == sets::monad(a.difference(b)))) return "difference";
    if (auto f = monad_agrees(u, [&](double p) { return ra.contains(p) || rb.contains(p); }, "union")) return f;
    if (auto f = monad_agrees(x, [&](double p) { return ra.contains(p) && rb.contains(p); }, "intersection")) return f;
    return monad_agrees(d, [&](double p) { return ra.contains(p) && !rb.contains(p); }, "difference");
  });
  s.property("shadow commutes with union, intersection, difference", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    const RealSet b = cases[i].b.normalized();
    const auto ma = sets::monad(a);
    const auto mb = sets::monad(b);
    if (!(sets::shadow(sets::set_union(ma, mb)) == a.union_with(b))) return "union";
    if (!(sets::shadow(sets::set_intersect(ma, mb)) == a.intersect(b))) return "intersection";
    if (!(sets::shadow(sets::set_difference(ma, mb)) == a.difference(b))) return "difference";
    return std::nullopt;
  });
  s.property("monad and shadow are idempotent", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    const auto ma = sets::monad(a);
    if (!(sets::shadow(ma) == a)) return "shadow(monad(A)) != A";
    if (!(sets::monad(sets::shadow(ma)) == ma)) return "monad(shadow(m(A))) != m(A)";
    if (!(sets::shadow(sets::monad(sets::shadow(ma))) == sets::shadow(ma))) return "shadow not idempotent";
    return std::nullopt;
  });
  s.property("finite families distribute", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    const RealSet b = cases[i].b.normalized();
    const RealSet c = cases[i].c.normalized();
    const auto u = sets::set_union(sets::set_union(sets::monad(a), sets::monad(b)), sets::monad(c));
    const auto x = sets::set_intersect(sets::set_intersect(sets::monad(a), sets::monad(b)), sets::monad(c));
    if (!(u == sets::monad(a.union_with(b).union_with(c)))) return "union of three";
    if (!(x == sets::monad(a.intersect(b).intersect(c)))) return "intersection of three";
    if (!(sets::shadow(u) == a.union_with(b).union_with(c))) return "shadow of union of three";
    return std::nullopt;
  });
  s.property("topology operators commute with monad and shadow", n, [&](std::size_t i) -> Failure {
    const RawSet& raw = cases[i].a;
    const RealSet a = raw.normalized();
    const auto ma = sets::monad(a);
    const std::pair<sets::TopoOp, RealSet> ops[] = {
        {sets::TopoOp::Interior, a.interior()},
        {sets::TopoOp::Closure, a.closure()},
        {sets::TopoOp::Boundary, a.boundary()},
        {sets::TopoOp::Exterior, a.exterior()},
    };
    for (const auto& [op, real] : ops) {
      const auto t = sets::topo(op, ma);
      if (!(t == sets::monad(real))) return str("operator ", int(op), " on ", a);
      if (!(sets::shadow(t) == real)) return str("shadow mirror of operator ", int(op), " on ", a);
    }
    if (auto f = monad_agrees(sets::topo(sets::TopoOp::Interior, ma), [&](double p) { return in_interior(raw, p); }, "interior")) return f;
    if (auto f = monad_agrees(sets::topo(sets::TopoOp::Closure, ma), [&](double p) { return in_closure(raw, p); }, "closure")) return f;
    if (auto f = monad_agrees(sets::topo(sets::TopoOp::Boundary, ma), [&](double p) { return in_closure(raw, p) && !in_interior(raw, p); }, "boundary")) return f;
    return monad_agrees(sets::topo(sets::TopoOp::Exterior, ma), [&](double p) { return !in_closure(raw, p); }, "exterior");
  });
  s.property("topological predicates follow the base", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    const auto ma = sets::monad(a);
    if (sets::is_open(ma) != (a.interior() == a)) return str("is_open on ", a);
    if (sets::is_closed(ma) != (a.closure() == a)) return str("is_closed on ", a);
    if (sets::is_compact(ma) != (a.closure() == a && a.is_bounded())) return str("is_compact on ", a);
    if (sets::is_connected(ma) != (a.pieces().size() <= 1)) return str("is_connected on ", a);
    return std::nullopt;
  });
  s.property("monad is injective on real sets", n, [&](std::size_t i) -> Failure {
    const RealSet a = cases[i].a.normalized();
    const RealSet b = (i % 4 == 0) ? cases[i].a.normalized() : cases[i].b.normalized();
    const bool same_monad = sets::monad(a) == sets::monad(b);
    bool same_members = true;
    for (double p : probes()) same_members = same_members && a.contains(p) == b.contains(p);
    if (same_monad != (a == b)) return str("monad equality disagrees with base equality for ", a, ", ", b);
    if (same_monad && !same_members) return "equal monads over different sets";
    return std::nullopt;
  });
  s.property("hat intervals are monads of intervals", n, [&](std::size_t) -> Failure {
    double a = grid_value(r);
    double b = grid_value(r);
    if (a > b) std::swap(a, b);
    if (r.coin(0.2)) b = a;
    using K = sets::IntervalKind;
    const std::pair<K, Interval> bounded[] = {
        {K::Closed, {a, b, true, true}},
        {K::Open, {a, b, false, false}},
        {K::HalfLo, {a, b, false, true}},
        {K::HalfHi, {a, b, true, false}},
    };
    std::vector<GeneralizedSet> made;
    for (const auto& [kind, iv] : bounded) {
      const auto h = sets::hat_interval(kind, a, b);
      if (!(h == sets::monad(RealSet::of(iv)))) return str("kind ", int(kind), " on ", a, ", ", b);
      made.push_back(h);
      const double len = sets::length(h);
      const double want = (a == b && kind != K::Closed) ? 0.0 : b - a;
      if (len != want) return str("length ", len, " for kind ", int(kind), " on ", a, ", ", b);
    }
    if (a < b) {
      for (std::size_t p = 0; p < made.size(); ++p) {
        for (std::size_t q = p + 1; q < made.size(); ++q) {
          if (made[p] == made[q]) return str("kinds ", p, " and ", q, " coincide for ", a, " < ", b);
        }
      }
    } else {
      if (!(made[0] == sets::monad(RealSet::point(a)))) return "[a,a] is not the monad of a";
      for (std::size_t k = 1; k < made.size(); ++k) {
        if (!made[k].is_empty()) return "degenerate open or half-open interval is not empty";
      }
    }
    for (K ray : {K::RayGe, K::RayGt, K::RayLe, K::RayLt, K::All}) {
      if (auto f = expect_error(ErrorCode::LengthUndefined, [&] { sets::length(sets::hat_interval(ray, a, b)); })) {
        return f;
      }
    }
    if (auto f = expect_error(ErrorCode::DomainError, [&] { sets::hat_interval(K::Closed, b + 1.0, b); })) return f;
    return std::nullopt;
  });
  return s.done();
}

SuiteReport completeness(std::uint64_t seed) {
  Suite s("completeness", seed);
  constexpr std::size_t n = 200;
  Rng r(seed);
  s.property("real supremum equals the classical supremum", n, [&](std::size_t) -> Failure {
    const RawSet raw = random_raw(r, true);
    const RealSet a = raw.normalized();
    if (a.is_empty()) return std::nullopt;
    double sup = -sets::kInf;
    double inf = sets::kInf;
    bool sup_attained = false;
    for (const auto& iv : raw.parts) {
      if (iv.is_empty()) continue;
      sup = std::max(sup, iv.hi);
      inf = std::min(inf, iv.lo);
    }
    for (const auto& iv : raw.parts) {
      if (!iv.is_empty() && iv.hi == sup && iv.hi_closed) sup_attained = true;
    }
    const auto g = sets::monad(a);
    if (sets::sup_r(g) != sup) return str("sup_r ", sets::sup_r(g), " vs ", sup, " for ", a);
    if (sets::inf_r(g) != inf) return str("inf_r ", sets::inf_r(g), " vs ", inf, " for ", a);
    if (sets::max_r(g).has_value() != sup_attained) return str("max_r presence for ", a);
    const GeneralizedReal e1 = GeneralizedReal::generator("e:1", 1.0);
    if (!sets::is_upper_bound(GeneralizedReal(sup) - e1, g)) return "sup - e1 is a <~ upper bound";
    if (sets::is_upper_bound(GeneralizedReal(sup - 0.25), g)) return "sup - 0.25 is not an upper bound";
    return std::nullopt;
  });
  s.check("empty and unbounded sets have no real supremum", []() -> Failure {
    if (auto f = expect_error(ErrorCode::EmptySet, [] { sets::sup_r(GeneralizedSet{}); })) return f;
    return expect_error(ErrorCode::Unbounded, [] {
      sets::sup_r(sets::hat_interval(sets::IntervalKind::RayGe, 0.0));
    });
  });
  return s.done();
}

// --- calculus ---

SuiteReport calculus(std::uint64_t seed) {
  Suite s("calculus", seed);
  constexpr std::size_t n = 200;
  Rng r(seed);
  s.property("chain rule", n, [&](std::size_t) -> Failure {
    const Expr f = random_expr(r, r.integer(0, 2));
    const Expr g = random_expr(r, r.integer(0, 2));
    const double xi = r.uniform(-2.0, 2.0);
    const double lhs = calc::derivative_at(GenFn::local(calc::compose(g, f), xi), xi);
    const double fx = f.eval(xi);
    const double rhs = calc::derivative_at(GenFn::local(g, fx), fx) * calc::derivative_at(GenFn::local(f, xi), xi);
    if (auto bad = expect_close(lhs, rhs, 1e-9)) return *bad + " for g = " + g.to_string() + ", f = " + f.to_string();
    return std::nullopt;
  });
  s.property("structural evaluation is the natural extension", n, [&](std::size_t) -> Failure {
    const Expr e = random_expr(r, r.integer(1, 3));
    const GeneralizedReal x = GeneralizedReal(r.uniform(-2.0, 2.0)) + random_infinitesimal(r);
    const GenFn f = GenFn::local(e, x.shadow());
    if (auto bad = expect_close(e.gen_eval(x), calc::nat_ext_eval(f, x), 1e-9)) return *bad + " for " + e.to_string();
    return std::nullopt;
  });
  s.property("derivative matches the central difference quotient", n, [&](std::size_t) -> Failure {
    const Expr e = random_expr(r, r.integer(1, 3));
    const double xi = r.uniform(-2.0, 2.0);
    const double h = 1e-6;
    const double dq = (e.eval(xi + h) - e.eval(xi - h)) / (2.0 * h);
    const double d = calc::derivative_at(GenFn::local(e, xi), xi);
    if (std::abs(d - dq) > 1e-5 * std::max(1.0, std::abs(d))) {
      return str("derivative ", d, " vs quotient ", dq, " for ", e.to_string(), " at ", xi);
    }
    return std::nullopt;
  });
  s.property("extension agrees with the function on reals", n, [&](std::size_t) -> Failure {
    const Expr e = random_expr(r, r.integer(1, 3));
    const double xi = r.uniform(-2.0, 2.0);
    const GenFn f = GenFn::local(e, xi);
    const GeneralizedReal at_real = calc::nat_ext_eval(f, GeneralizedReal(xi));
    if (!at_real.is_real() || at_real.shadow() != e.eval(xi)) return str("at real ", xi, ": ", at_real);
    const GeneralizedReal x = GeneralizedReal(xi) + random_infinitesimal(r);
    if (calc::nat_ext_eval(f, x).shadow() != e.eval(xi)) return str("shadow differs at ", x);
    if (calc::derivative_at(f, x) != calc::derivative_at(f, GeneralizedReal(xi))) return "derivative not constant on the monad";
    return std::nullopt;
  });
  s.property("positive derivative gives a strictly increasing extension", n, [&](std::size_t) -> Failure {
    const Expr x = Expr::variable();
    const Expr e = r.coin() ? calc::exp(x) : calc::pow_int(x, 3) + x;
    const GenFn f(e, calc::OpenInterval{});
    GeneralizedReal a = random_value(r, -3.0, 3.0);
    GeneralizedReal b = random_value(r, -3.0, 3.0);
    if (lt(b, a)) std::swap(a, b);
    if (!lt(a, b)) return std::nullopt;
    if (!lt(calc::nat_ext_eval(f, a), calc::nat_ext_eval(f, b))) return str("not increasing between ", a, " and ", b);
    return std::nullopt;
  });
  s.check("zero derivative gives a constant extension", []() -> Failure {
    const GenFn f(Expr::constant(4.0), calc::OpenInterval{});
    for (double v : {-3.0, 0.0, 2.5}) {
      const auto y = calc::nat_ext_eval(f, GeneralizedReal(v) + GeneralizedReal::generator("h", 2.0));
      if (!(y == GeneralizedReal(4.0))) return str("got ", y);
    }
    return std::nullopt;
  });
  s.property("periodicity, parity and addition formulas", n, [&](std::size_t) -> Failure {
    const GeneralizedReal x = random_value(r, -4.0, 4.0);
    const GeneralizedReal y = random_value(r, -4.0, 4.0);
    const GeneralizedReal two_pi(2.0 * std::numbers::pi);
    if (auto f = expect_close(calc::sin_hat(x + two_pi), calc::sin_hat(x), 1e-12)) return "periodicity: " + *f;
    if (auto f = expect_close(calc::cos_hat(-x), calc::cos_hat(x), 1e-12)) return "cos parity: " + *f;
    if (auto f = expect_close(calc::sin_hat(-x), -calc::sin_hat(x), 1e-12)) return "sin parity: " + *f;
    const auto plus = calc::sin_hat(x) * calc::cos_hat(y) + calc::sin_hat(y) * calc::cos_hat(x);
    const auto minus = calc::sin_hat(x) * calc::cos_hat(y) - calc::sin_hat(y) * calc::cos_hat(x);
    if (auto f = expect_close(calc::sin_hat(x + y), plus, 1e-12)) return "sin(x + y): " + *f;
    if (auto f = expect_close(calc::sin_hat(x - y), minus, 1e-12)) return "sin(x - y): " + *f;
    if (auto f = expect_close(calc::exp_hat(x) * calc::exp_hat(y), calc::exp_hat(x + y), 1e-12)) return "exp: " + *f;
    return std::nullopt;
  });
  s.check("exp maps the whole line onto the positive monad", []() -> Failure {
    const GenFn f(calc::exp(Expr::variable()), calc::OpenInterval{});
    const auto img = calc::image(f, sets::monad(RealSet::all()));
    const auto want = sets::hat_interval(sets::IntervalKind::RayGt, 0.0);
    if (!(img == want)) return str("got ", img);
    return std::nullopt;
  });
  s.property("sin maps the line onto m(]-1,1[) plus {-1, 1}", 8, [&](std::size_t i) -> Failure {
    const GenFn f(calc::sin(Expr::variable()), calc::OpenInterval{});
    const double l = i == 0 ? 2.0 * std::numbers::pi + 0.1 : r.uniform(6.5, 40.0);
    const auto img = calc::image(f, sets::monad(RealSet::of(Interval::open(-l, l))));
    const GeneralizedSet want(RealSet::of(Interval::open(-1.0, 1.0)), {-1.0, 1.0});
    if (!(img == want)) return str("window ", l, ": got ", img);
    return std::nullopt;
  });
  s.check("inverse of exp is log", []() -> Failure {
    const GenFn f(calc::exp(Expr::variable()), calc::OpenInterval{});
    const GenFn g = calc::inverse_ext(f);
    const GeneralizedReal e1 = GeneralizedReal::generator("e:1", 1.0);
    if (auto bad = expect_close(calc::nat_ext_eval(g, GeneralizedReal(1.0) + e1), e1, 1e-12)) return bad;
    if (auto bad = expect_close(calc::derivative_at(g, GeneralizedReal(std::numbers::e)), 1.0 / std::numbers::e, 1e-12)) return bad;
    return expect_error(ErrorCode::NotInjective, [] {
      calc::inverse_ext(GenFn(calc::pow_int(Expr::variable(), 2), calc::OpenInterval{-1.0, 1.0}));
    });
  });
  return s.done();
}

SuiteReport taylor(std::uint64_t seed) {
  Suite s("taylor", seed);
  Rng r(seed);
  s.check("exp about 0 to order 3 at 0.5", []() -> Failure {
    const GenFn f(calc::exp(Expr::variable()), calc::OpenInterval{});
    const auto t = calc::taylor(f, 0.0, 3, GeneralizedReal(0.5));
    if (std::abs(t.partial_sum - 1.6458333) > 1e-7) return str("partial sum ", t.partial_sum);
    if (!t.theta || !(*t.theta > 0.0 && *t.theta < 1.0)) return "no theta in ]0,1[";
    const double g = std::exp(0.5) - t.partial_sum - std::pow(0.5, 4) / 24.0 * std::exp(*t.theta * 0.5);
    if (std::abs(g) > 1e-10) return str("Lagrange identity off by ", g);
    if (std::abs(*t.theta - 0.2068) > 1e-3) return str("theta ", *t.theta);
    return std::nullopt;
  });
  s.check("polynomial of degree m is reproduced exactly", []() -> Failure {
    const GenFn f(calc::pow_int(Expr::variable(), 2), calc::OpenInterval{});
    const auto t = calc::taylor(f, 1.0, 2, GeneralizedReal(3.0));
    if (t.partial_sum != 9.0) return str("partial sum ", t.partial_sum);
    if (t.remainder_bound != 0.0) return str("bound ", t.remainder_bound);
    if (!t.theta) return "theta missing";
    return std::nullopt;
  });
  s.property("Lagrange bound holds and theta satisfies the identity", 100, [&](std::size_t) -> Failure {
    const Expr e = random_expr(r, r.integer(1, 2));
    const GenFn f(e, calc::OpenInterval{});
    const double xi0 = r.uniform(-1.5, 1.5);
    const auto m = static_cast<std::uint32_t>(r.integer(1, 4));
    double off = r.uniform(-1.0, 1.0);
    if (off == 0.0) off = 0.5;
    const GeneralizedReal x = GeneralizedReal(xi0 + off) + random_infinitesimal(r);
    const auto t = calc::taylor(f, xi0, m, x);
    const double err = std::abs(t.function_value - t.partial_sum);
    const double slack = 1e-12 * std::max(1.0, std::abs(t.function_value));
    if (err > t.remainder_bound * (1.0 + 1e-9) + slack) {
      return str("error ", err, " exceeds bound ", t.remainder_bound, " for ", e.to_string());
    }
    if (t.theta) {
      const double h = x.shadow() - xi0;
      double c = std::pow(h, m + 1.0);
      for (std::uint32_t k = 2; k <= m + 1; ++k) c /= k;
      const double top = f.derivative_expr(m + 1).eval(xi0 + *t.theta * h);
      const double g = t.function_value - t.partial_sum - c * top;
      if (std::abs(g) > 1e-10 * std::max(1.0, std::abs(t.function_value))) return str("identity off by ", g);
    }
    return std::nullopt;
  });
  return s.done();
}

SuiteReport mvt(std::uint64_t seed) {
  Suite s("mvt", seed);
  Rng r(seed);
  s.check("examples", []() -> Failure {
    const Expr x = Expr::variable();
    const GenFn sq(calc::pow_int(x, 2), calc::OpenInterval{});
    const GenFn cube(calc::pow_int(x, 3), calc::OpenInterval{});
    if (auto f = expect_close(calc::mvt_gamma(sq, GeneralizedReal(1.0), GeneralizedReal(2.0)), 1.5, 1e-12)) return f;
    if (auto f = expect_close(calc::mvt_gamma(cube, GeneralizedReal(0.0), GeneralizedReal(3.0)), std::sqrt(3.0), 1e-12)) return f;
    return expect_error(ErrorCode::DomainError, [&] {
      calc::mvt_gamma(sq, GeneralizedReal::generator("e:1", 1.0), GeneralizedReal::generator("e:2", 1.0));
    });
  });
  s.property("mean value identity with nonreal endpoints", 100, [&](std::size_t) -> Failure {
    const Expr e = random_expr(r, r.integer(1, 2));
    const GenFn f(e, calc::OpenInterval{});
    const double sa = r.uniform(-2.0, 1.0);
    const GeneralizedReal a = GeneralizedReal(sa) + random_infinitesimal(r);
    const GeneralizedReal b = GeneralizedReal(sa + r.uniform(0.1, 2.0)) + random_infinitesimal(r);
    const double gamma = calc::mvt_gamma(f, a, b);
    if (!(gamma > a.shadow() && gamma < b.shadow())) return str("gamma ", gamma, " outside ]sa, sb[");
    const auto sides = calc::mvt_sides(f, a, b, gamma);
    if (auto bad = expect_coeffs(sides.lhs, coeffs(sides.rhs), 1e-12)) return *bad + " for " + e.to_string();
    if (auto bad = expect_close(sides.lhs.shadow(), sides.rhs.shadow(), 1e-9)) return *bad + " for " + e.to_string();
    const GeneralizedReal ra(a.shadow());
    const GeneralizedReal rb(b.shadow());
    const auto real_sides = calc::mvt_sides(f, ra, rb, gamma);
    if (!real_sides.rhs.is_real()) return "real endpoints give a nonreal identity";
    return expect_close(real_sides.lhs, real_sides.rhs, 1e-9);
  });
  return s.done();
}

calc::PiecewiseGenFn constants(double left, double monad, double right) {
  return {{0.0}, {Expr::constant(left), Expr::constant(right)}, {{monad, 0.0}}};
}

SuiteReport ode(std::uint64_t seed) {
  Suite s("ode", seed);
  const Expr t = Expr::variable();
  const calc::PiecewiseGenFn kink = constants(-1.0, 1.0, 1.0);
  const calc::PiecewiseGenFn step = constants(0.0, 1.0, 0.0);
  auto report_failure = [](const calc::OdeReport& rep) -> std::string {
    for (const auto& reg : rep.regions) {
      if (!reg.pass) return reg.region + ": " + reg.detail;
    }
    return "";
  };
  s.check("{-t | 0 + dt | t} solves x' = {-1 | 1 | 1}", [&]() -> Failure {
    const calc::PiecewiseGenFn sol{{0.0}, {-t, t}, {{0.0, 1.0}}};
    const auto rep = calc::ode_verify(sol, kink);
    if (!rep.all_pass()) return report_failure(rep);
    return std::nullopt;
  });
  s.check("{0 | 1 + dt | 1} solves x' = {0 | 1 | 0}", [&]() -> Failure {
    const calc::PiecewiseGenFn sol{{0.0}, {Expr::constant(0.0), Expr::constant(1.0)}, {{1.0, 1.0}}};
    const auto rep = calc::ode_verify(sol, step);
    if (!rep.all_pass()) return report_failure(rep);
    return std::nullopt;
  });
  s.check("x(t) = t fails x' = {-1 | 1 | 1} on t < 0 only", [&]() -> Failure {
    const calc::PiecewiseGenFn sol{{0.0}, {t, t}, {{0.0, 1.0}}};
    const auto rep = calc::ode_verify(sol, kink);
    if (rep.regions.size() != 3) return "expected three regions";
    if (rep.regions[0].pass || !rep.regions[1].pass || !rep.regions[2].pass) return "wrong failing region";
    return std::nullopt;
  });
  s.check("abs extension has derivative 0 at 0 without a classical limit", [&]() -> Failure {
    const calc::PiecewiseGenFn abs{{0.0}, {-t, t}, {{0.0, 0.0}}};
    const auto d = calc::pw_derivative_at(abs, 0.0);
    if (d.value != 0.0) return str("derivative ", d.value);
    if (d.probe != calc::LimitProbe::Absent) return "probe should report an absent classical limit";
    return std::nullopt;
  });
  s.check("proviso: declared slope must match an existing limit", [&]() -> Failure {
    const Expr sq = calc::pow_int(t, 2);
    const calc::PiecewiseGenFn good{{3.0}, {sq, sq}, {{9.0, 6.0}}};
    const auto d = calc::pw_derivative_at(good, 3.0);
    if (d.value != 6.0 || d.probe != calc::LimitProbe::Exists) return "natural rule at 3 should give 6";
    const calc::PiecewiseGenFn bad{{0.0}, {sq, sq}, {{0.0, 1.0}}};
    return expect_error(ErrorCode::ProvisoViolated, [&] { calc::pw_derivative_at(bad, 0.0); });
  });
  s.check("mismatched breakpoints are rejected", [&]() -> Failure {
    const calc::PiecewiseGenFn sol{{1.0}, {-t, t}, {{0.0, 1.0}}};
    return expect_error(ErrorCode::RegionMismatch, [&] { calc::ode_verify(sol, kink); });
  });
  return s.done();
}

SuiteReport higher(std::uint64_t seed) {
  Suite s("higher", seed);
  Rng r(seed);
  const Expr x = Expr::variable();
  const GenFn sq(calc::pow_int(x, 2), calc::OpenInterval{});
  const GenFn ex(calc::exp(x), calc::OpenInterval{});
  const GenFn sn(calc::sin(x), calc::OpenInterval{});
  const GenFn cs(calc::cos(x), calc::OpenInterval{});
  auto sign = [](std::uint32_t k) { return k % 2 == 0 ? 1.0 : -1.0; };
  s.property("closed forms for m <= 8", 50, [&](std::size_t) -> Failure {
    const GeneralizedReal v = random_value(r, -3.0, 3.0);
    const double sv = v.shadow();
    const GeneralizedReal dx = dpart(v);
    for (std::uint32_t m = 1; m <= 8; ++m) {
      GeneralizedReal want_sq;
      if (m == 1) want_sq = GeneralizedReal(sv * sv) + GeneralizedReal(2.0 * sv) * dx;
      if (m == 2) want_sq = GeneralizedReal(2.0) * v;
      if (m == 3) want_sq = GeneralizedReal(2.0);
      if (auto f = expect_close(calc::mth_ext_eval(sq, m, v), want_sq, 1e-12)) return str("x^2, m = ", m, ": ", *f);
      const double want_sq_d = m == 1 ? 2.0 * sv : (m == 2 ? 2.0 : 0.0);
      if (auto f = expect_close(calc::mth_derivative(sq, m, v), want_sq_d, 1e-12)) return str("(x^2)^(", m, "): ", *f);

      if (auto f = expect_close(calc::mth_ext_eval(ex, m, v), calc::exp_hat(v), 1e-12)) return str("exp, m = ", m, ": ", *f);
      if (auto f = expect_close(calc::mth_derivative(ex, m, v), std::exp(sv), 1e-12)) return str("exp^(", m, "): ", *f);

      const GeneralizedReal want_sin = m % 2 == 1 ? GeneralizedReal(sign((m - 1) / 2)) * calc::sin_hat(v)
                                                  : GeneralizedReal(sign((m - 2) / 2)) * calc::cos_hat(v);
      if (auto f = expect_close(calc::mth_ext_eval(sn, m, v), want_sin, 1e-12)) return str("sin, m = ", m, ": ", *f);
      const double want_sin_d = m % 2 == 1 ? sign((m - 1) / 2) * std::cos(sv) : sign(m / 2) * std::sin(sv);
      if (auto f = expect_close(calc::mth_derivative(sn, m, v), want_sin_d, 1e-12)) return str("sin^(", m, "): ", *f);

      const GeneralizedReal want_cos = m % 2 == 1 ? GeneralizedReal(sign((m - 1) / 2)) * calc::cos_hat(v)
                                                  : GeneralizedReal(sign(m / 2)) * calc::sin_hat(v);
      if (auto f = expect_close(calc::mth_ext_eval(cs, m, v), want_cos, 1e-12)) return str("cos, m = ", m, ": ", *f);
      const double want_cos_d = m % 2 == 1 ? sign((m + 1) / 2) * std::sin(sv) : sign(m / 2) * std::cos(sv);
      if (auto f = expect_close(calc::mth_derivative(cs, m, v), want_cos_d, 1e-12)) return str("cos^(", m, "): ", *f);
    }
    return std::nullopt;
  });
  return s.done();
}

using Runner = SuiteReport (*)(std::uint64_t);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"identities", identities}, {"ring", ring},     {"oracle", oracle},
      {"differential", differential}, {"sets", sets_suite}, {"completeness", completeness},
      {"calculus", calculus},     {"taylor", taylor}, {"mvt", mvt},
      {"ode", ode},               {"higher", higher},
  };
  return r;
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& p) { return p.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, run] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool has_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  for (const auto& [n, run] : registry()) {
    if (n == name) return run(seed);
  }
  throw Error(ErrorCode::DomainError, "unknown suite '" + std::string(name) + "'");
}

}  // namespace monadica::verify
