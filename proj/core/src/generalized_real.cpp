#include "monadica/generalized_real.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>

#include "monadica/error.hpp"

namespace monadica {
namespace {

// Cancellation below this multiple of the contributions' rounding noise is
// treated as an exact zero coefficient.
constexpr double kCancelUlps = 32.0 * DBL_EPSILON;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "non-finite " << what << ": " << v;
    throw Error(ErrorCode::NonFiniteInput, os.str());
  }
}

double snap(double sum, double magnitude) {
  return std::abs(sum) <= kCancelUlps * magnitude ? 0.0 : sum;
}

GeneralizedReal::Coefficients scaled(const GeneralizedReal::Coefficients& c, double k) {
  GeneralizedReal::Coefficients out;
  if (k == 0.0) return out;
  out.reserve(c.size());
  for (const auto& [id, v] : c) {
    const double s = k * v;
    if (s != 0.0) out.emplace_back(id, s);
  }
  return out;
}

}  // namespace

GeneralizedReal::GeneralizedReal(double real) : shadow_(real) {
  require_finite(real, "shadow");
  if (shadow_ == 0.0) shadow_ = 0.0;  // fold -0
}

GeneralizedReal GeneralizedReal::make(double shadow, Coefficients dpart) {
  require_finite(shadow, "shadow");
  for (const auto& [id, v] : dpart) require_finite(v, "coefficient");
  std::stable_sort(dpart.begin(), dpart.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  Coefficients canon;
  canon.reserve(dpart.size());
  for (auto& term : dpart) {
    if (!canon.empty() && canon.back().first == term.first) {
      canon.back().second += term.second;
    } else {
      canon.push_back(std::move(term));
    }
  }
  std::erase_if(canon, [](const Term& t) { return t.second == 0.0; });
  for (const auto& t : canon) require_finite(t.second, "coefficient");
  return GeneralizedReal(shadow == 0.0 ? 0.0 : shadow, std::move(canon), true);
}

GeneralizedReal GeneralizedReal::make(double shadow, std::initializer_list<Term> dpart) {
  return make(shadow, Coefficients(dpart));
}

GeneralizedReal GeneralizedReal::generator(const GeneratorId& id, double coeff) {
  return make(0.0, {Term{id, coeff}});
}

double GeneralizedReal::coefficient(const GeneratorId& id) const noexcept {
  auto it = std::lower_bound(dpart_.begin(), dpart_.end(), id,
                             [](const Term& t, const GeneratorId& k) { return t.first < k; });
  return (it != dpart_.end() && it->first == id) ? it->second : 0.0;
}

GeneralizedReal GeneralizedReal::differential() const {
  return GeneralizedReal(0.0, dpart_, true);
}

GeneralizedReal linear_combination(double a, const GeneralizedReal& x, double b,
                                   const GeneralizedReal& y) {
  const auto& cx = x.dpart_;
  const auto& cy = y.dpart_;
  GeneralizedReal::Coefficients out;
  out.reserve(cx.size() + cy.size());
  auto ix = cx.begin();
  auto iy = cy.begin();
  while (ix != cx.end() || iy != cy.end()) {
    if (iy == cy.end() || (ix != cx.end() && ix->first < iy->first)) {
      if (double v = a * ix->second; v != 0.0) out.emplace_back(ix->first, v);
      ++ix;
    } else if (ix == cx.end() || iy->first < ix->first) {
      if (double v = b * iy->second; v != 0.0) out.emplace_back(iy->first, v);
      ++iy;
    } else {
      const double p = a * ix->second;
      const double q = b * iy->second;
      if (double v = snap(p + q, std::abs(p) + std::abs(q)); v != 0.0) {
        out.emplace_back(ix->first, v);
      }
      ++ix;
      ++iy;
    }
  }
  for (const auto& t : out) {
    if (!std::isfinite(t.second)) throw Error(ErrorCode::NonFiniteInput, "coefficient overflow");
  }
  return GeneralizedReal(0.0, std::move(out), true);
}

GeneralizedReal GeneralizedReal::operator-() const {
  GeneralizedReal r(shadow_ == 0.0 ? 0.0 : -shadow_, scaled(dpart_, -1.0), true);
  return r;
}

GeneralizedReal& GeneralizedReal::operator+=(const GeneralizedReal& rhs) {
  GeneralizedReal d = linear_combination(1.0, *this, 1.0, rhs);
  const double s = shadow_ + rhs.shadow_;
  require_finite(s, "shadow");
  shadow_ = (s == 0.0) ? 0.0 : s;
  dpart_ = std::move(d.dpart_);
  return *this;
}

GeneralizedReal& GeneralizedReal::operator-=(const GeneralizedReal& rhs) {
  GeneralizedReal d = linear_combination(1.0, *this, -1.0, rhs);
  const double s = shadow_ - rhs.shadow_;
  require_finite(s, "shadow");
  shadow_ = (s == 0.0) ? 0.0 : s;
  dpart_ = std::move(d.dpart_);
  return *this;
}

GeneralizedReal& GeneralizedReal::operator*=(const GeneralizedReal& rhs) {
  // d(xy) = sx*dy + sy*dx; dx*dy vanishes.
  GeneralizedReal d = linear_combination(rhs.shadow_, *this, shadow_, rhs);
  const double s = shadow_ * rhs.shadow_;
  require_finite(s, "shadow");
  shadow_ = (s == 0.0) ? 0.0 : s;
  dpart_ = std::move(d.dpart_);
  return *this;
}

GeneralizedReal& GeneralizedReal::operator/=(const GeneralizedReal& rhs) {
  *this = div(*this, rhs);
  return *this;
}

bool operator==(const GeneralizedReal& a, const GeneralizedReal& b) noexcept {
  return a.shadow_ == b.shadow_ && a.dpart_ == b.dpart_;
}

std::ostream& operator<<(std::ostream& os, const GeneralizedReal& x) {
  os << x.shadow();
  for (const auto& [id, v] : x.coefficients()) {
    os << (v < 0 ? " - " : " + ") << std::abs(v) << "*" << id.str();
  }
  return os;
}

double sigma(const GeneralizedReal& x) noexcept { return x.shadow(); }

GeneralizedReal dpart(const GeneralizedReal& x) { return x.differential(); }

GeneralizedReal add(const GeneralizedReal& x, const GeneralizedReal& y) { return x + y; }
GeneralizedReal neg(const GeneralizedReal& x) { return -x; }
GeneralizedReal sub(const GeneralizedReal& x, const GeneralizedReal& y) { return x - y; }
GeneralizedReal mul(const GeneralizedReal& x, const GeneralizedReal& y) { return x * y; }

GeneralizedReal inv(const GeneralizedReal& x) {
  const double s = x.shadow();
  if (s == 0.0) {
    throw Error(ErrorCode::NotInvertible, "infinitesimal values have no multiplicative inverse");
  }
  // 1/x = 1/s - dx/s^2
  const double r = 1.0 / s;
  GeneralizedReal d = linear_combination(-r * r, x.differential(), 0.0, GeneralizedReal{});
  return GeneralizedReal(r) + d;
}

GeneralizedReal div(const GeneralizedReal& y, const GeneralizedReal& x) {
  const double sx = x.shadow();
  if (sx == 0.0) {
    throw Error(ErrorCode::NotInvertible, "division by an infinitesimal");
  }
  // y/x = sy/sx + (sx*dy - sy*dx)/sx^2
  const double sy = y.shadow();
  GeneralizedReal d = linear_combination(1.0 / sx, y.differential(), -sy / (sx * sx),
                                         x.differential());
  return GeneralizedReal(sy / sx) + d;
}

GeneralizedReal pow_nat(const GeneralizedReal& x, std::uint32_t m) {
  if (m == 0) return GeneralizedReal(1.0);
  if (m == 1) return x;
  const double s = x.shadow();
  const double head = std::pow(s, static_cast<double>(m));
  const double slope = static_cast<double>(m) * std::pow(s, static_cast<double>(m - 1));
  GeneralizedReal d = linear_combination(slope, x.differential(), 0.0, GeneralizedReal{});
  return GeneralizedReal(head) + d;
}

GeneralizedReal root(const GeneralizedReal& x, std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "root order must exceed 1");
  const double s = x.shadow();
  if (!(s > 0.0)) throw Error(ErrorCode::DomainError, "root requires a positive shadow");
  const double head = std::pow(s, 1.0 / static_cast<double>(m));
  // d(x^(1/m)) = dx / (m * (s^(1/m))^(m-1))
  const double slope = 1.0 / (static_cast<double>(m) * std::pow(head, static_cast<double>(m - 1)));
  GeneralizedReal d = linear_combination(slope, x.differential(), 0.0, GeneralizedReal{});
  return GeneralizedReal(head) + d;
}

Cmp3 cmp3(const GeneralizedReal& x, const GeneralizedReal& y) noexcept {
  if (x.shadow() < y.shadow()) return Cmp3::Less;
  if (x.shadow() > y.shadow()) return Cmp3::Greater;
  return Cmp3::Indiscernible;
}

bool lt(const GeneralizedReal& x, const GeneralizedReal& y) noexcept {
  return x.shadow() < y.shadow();
}

bool indiscernible(const GeneralizedReal& x, const GeneralizedReal& y) noexcept {
  return x.shadow() == y.shadow();
}

bool lesssim(const GeneralizedReal& x, const GeneralizedReal& y) noexcept {
  return x.shadow() <= y.shadow();
}

std::uint64_t archimedean_witness(const GeneralizedReal& x, const GeneralizedReal& y) {
  const double sx = x.shadow();
  const double sy = y.shadow();
  if (!(sx > 0.0)) throw Error(ErrorCode::DomainError, "archimedean witness needs x > 0");
  const double q = std::floor(sy / sx) + 1.0;
  if (q > 9.0e18) throw Error(ErrorCode::DomainError, "witness exceeds 64-bit range");
  auto m = static_cast<std::uint64_t>(std::max(1.0, q));
  // floor() of a rounded quotient can be one off in either direction.
  while (m > 1 && static_cast<double>(m - 1) * sx > sy) --m;
  while (!(static_cast<double>(m) * sx > sy)) ++m;
  return m;
}

double density_real_between(const GeneralizedReal& x, const GeneralizedReal& y) {
  if (!lt(x, y)) throw Error(ErrorCode::DomainError, "density needs x < y");
  const double mid = x.shadow() / 2.0 + y.shadow() / 2.0;
  return mid;
}

GeneralizedReal density_nonreal_between(double lo, double hi) {
  require_finite(lo, "bound");
  require_finite(hi, "bound");
  if (!(lo < hi)) throw Error(ErrorCode::DomainError, "density needs lo < hi");
  return GeneralizedReal(lo / 2.0 + hi / 2.0) + GeneralizedReal::generator("e:1");
}

double quotient_repr(const GeneralizedReal& x) noexcept { return x.shadow(); }

bool approx_equal(const GeneralizedReal& x, const GeneralizedReal& y, double rel_tol) {
  auto close = [rel_tol](double a, double b) {
    return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (!close(x.shadow(), y.shadow())) return false;
  const auto& cx = x.coefficients();
  const auto& cy = y.coefficients();
  auto ix = cx.begin();
  auto iy = cy.begin();
  while (ix != cx.end() || iy != cy.end()) {
    if (iy == cy.end() || (ix != cx.end() && ix->first < iy->first)) {
      if (!close(ix->second, 0.0)) return false;
      ++ix;
    } else if (ix == cx.end() || iy->first < ix->first) {
      if (!close(0.0, iy->second)) return false;
      ++iy;
    } else {
      if (!close(ix->second, iy->second)) return false;
      ++ix;
      ++iy;
    }
  }
  return true;
}

}  // namespace monadica
