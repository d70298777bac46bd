#include "monadica/sequence.hpp"

#include <Eigen/Dense>
#include <charconv>
#include <cmath>
#include <limits>

#include "monadica/error.hpp"

namespace monadica::seq {
namespace {

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::optional<std::uint64_t> parse_index(std::string_view s) {
  if (s.empty() || s.front() == '0') return std::nullopt;
  std::uint64_t k = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return k;
}

std::optional<double> parse_ratio(std::string_view s) {
  double r = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), r);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  if (!(r > 0.0 && r < 1.0)) return std::nullopt;
  // Only the canonical rendering names the generator.
  if (shortest(r) != s) return std::nullopt;
  return r;
}

[[noreturn]] void unknown(const GeneratorId& id) {
  throw Error(ErrorCode::UnknownGenerator, "unknown generator id '" + id.str() + "'");
}

}  // namespace

const Catalog& Catalog::standard() {
  static const Catalog catalog;
  return catalog;
}

bool Catalog::contains(const GeneratorId& id) const noexcept {
  const std::string_view s = id.str();
  if (s == "h") return true;
  if (s.starts_with("e:")) return parse_index(s.substr(2)).has_value();
  if (s.starts_with("g:")) return parse_ratio(s.substr(2)).has_value();
  return false;
}

SequenceGenerator Catalog::resolve(const GeneratorId& id) const {
  const std::string_view s = id.str();
  if (s == "h") {
    return {id, [](std::uint64_t n) { return 1.0 / static_cast<double>(n); }};
  }
  if (s.starts_with("e:")) {
    if (auto k = parse_index(s.substr(2))) {
      return {id, [k = *k](std::uint64_t n) { return n == k ? 1.0 : 0.0; }};
    }
  }
  if (s.starts_with("g:")) {
    if (auto r = parse_ratio(s.substr(2))) {
      return {id, [r = *r](std::uint64_t n) { return std::pow(r, static_cast<double>(n)); }};
    }
  }
  unknown(id);
}

GeneratorId Catalog::impulse(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::DomainError, "impulse index starts at 1");
  return GeneratorId("e:" + std::to_string(k));
}

GeneratorId Catalog::harmonic() { return GeneratorId("h"); }

GeneratorId Catalog::geometric(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::DomainError, "geometric ratio must lie in ]0,1[");
  return GeneratorId("g:" + shortest(r));
}

double term(const GeneralizedReal& x, std::uint64_t n, const Catalog& catalog) {
  if (n == 0) throw Error(ErrorCode::DomainError, "sequence indices start at 1");
  double v = x.shadow();
  for (const auto& [id, c] : x.coefficients()) v += c * catalog.resolve(id).term(n);
  return v;
}

std::vector<double> prefix(const GeneralizedReal& x, std::size_t n_terms, const Catalog& catalog) {
  std::vector<SequenceGenerator> gens;
  for (const auto& [id, c] : x.coefficients()) gens.push_back(catalog.resolve(id));
  std::vector<double> out(n_terms, x.shadow());
  for (std::size_t i = 0; i < n_terms; ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      out[i] += x.coefficients()[g].second * gens[g].term(i + 1);
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t nmax) {
  std::vector<std::uint64_t> idx;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(nmax, 1024); ++n) idx.push_back(n);
  for (int k = 11; k <= 23; ++k) {
    const std::uint64_t p = std::uint64_t{1} << k;
    if (p <= nmax) idx.push_back(p);
  }
  return idx;
}

std::optional<std::uint64_t> convergence_witness(const GeneralizedReal& x, double eps,
                                                 std::uint64_t nmax, const Catalog& catalog) {
  if (!(eps > 0.0)) throw Error(ErrorCode::DomainError, "eps must be positive");
  if (nmax < 1) throw Error(ErrorCode::DomainError, "nmax must be at least 1");
  const auto idx = sample_indices(nmax);
  std::vector<SequenceGenerator> gens;
  for (const auto& [id, c] : x.coefficients()) gens.push_back(catalog.resolve(id));
  auto deviation = [&](std::uint64_t n) {
    double v = 0.0;
    for (std::size_t g = 0; g < gens.size(); ++g) v += x.coefficients()[g].second * gens[g].term(n);
    return std::abs(v);
  };
  // Walk backwards: the witness is the start of the longest passing tail.
  std::optional<std::uint64_t> witness;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (!(deviation(*it) < eps)) break;
    witness = *it;
  }
  return witness;
}

std::vector<double> oracle_binary(BinaryOp op, const GeneralizedReal& x, const GeneralizedReal& y,
                                  std::size_t n_terms, const Catalog& catalog) {
  if (n_terms < 1) throw Error(ErrorCode::DomainError, "need at least one term");
  const auto xs = prefix(x, n_terms, catalog);
  const auto ys = prefix(y, n_terms, catalog);
  const double lx = x.shadow();
  const double ly = y.shadow();
  std::vector<double> out(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    out[n] = op == BinaryOp::Add ? xs[n] + ys[n] : lx * ys[n] + ly * xs[n] - lx * ly;
  }
  return out;
}

std::vector<double> oracle_inverse(const GeneralizedReal& x, std::size_t n_terms,
                                   const Catalog& catalog) {
  const double lx = x.shadow();
  if (lx == 0.0) throw Error(ErrorCode::NotInvertible, "null limit");
  const auto xs = prefix(x, n_terms, catalog);
  std::vector<double> out(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) out[n] = 1.0 / lx - (xs[n] - lx) / (lx * lx);
  return out;
}

std::vector<double> oracle_pow(const GeneralizedReal& x, std::uint32_t m, std::size_t n_terms,
                               const Catalog& catalog) {
  if (m == 0) return std::vector<double>(n_terms, 1.0);
  const auto xs = prefix(x, n_terms, catalog);
  const double lx = x.shadow();
  std::vector<double> acc = xs;
  double lacc = lx;
  for (std::uint32_t k = 1; k < m; ++k) {
    for (std::size_t n = 0; n < n_terms; ++n) acc[n] = lacc * xs[n] + lx * acc[n] - lacc * lx;
    lacc *= lx;
  }
  return acc;
}

std::size_t prefix_rank(std::span<const GeneratorId> ids, std::size_t n_terms,
                        const Catalog& catalog) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n_terms), static_cast<Eigen::Index>(ids.size()));
  for (std::size_t c = 0; c < ids.size(); ++c) {
    const auto gen = catalog.resolve(ids[c]);
    for (std::size_t r = 0; r < n_terms; ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = gen.term(r + 1);
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  return static_cast<std::size_t>(qr.rank());
}

}  // namespace monadica::seq
