#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monadica/generalized_real.hpp"

namespace monadica::seq {

/// A concrete null sequence n -> term(n), n >= 1.
class SequenceGenerator {
 public:
  using TermFn = std::function<double(std::uint64_t)>;

  SequenceGenerator(GeneratorId id, TermFn term) : id_(std::move(id)), term_(std::move(term)) {}

  const GeneratorId& id() const noexcept { return id_; }
  double term(std::uint64_t n) const { return term_(n); }

 private:
  GeneratorId id_;
  TermFn term_;
};

/**
 * The fixed family of generators that coefficient vectors range over:
 *
 *   e:k   impulse, 1 at index k and 0 elsewhere (k >= 1)
 *   h     harmonic, 1/n
 *   g:r   geometric, r^n with 0 < r < 1
 *
 * Ids are parsed, not registered, so the catalog is immutable and shared.
 */
class Catalog {
 public:
  static const Catalog& standard();

  /// Throws Error(UnknownGenerator) for an id outside the family.
  SequenceGenerator resolve(const GeneratorId& id) const;
  bool contains(const GeneratorId& id) const noexcept;

  static GeneratorId impulse(std::uint64_t k);
  static GeneratorId harmonic();
  /// Throws Error(DomainError) unless 0 < r < 1.
  static GeneratorId geometric(double r);
};

/// n-th term of the sequence behind x: shadow + sum of coeff * generator(n).
double term(const GeneralizedReal& x, std::uint64_t n, const Catalog& catalog = Catalog::standard());

std::vector<double> prefix(const GeneralizedReal& x, std::size_t n_terms,
                           const Catalog& catalog = Catalog::standard());

/// Sampled indices {1..1024} and {2^k : k <= 23}, clipped to nmax, ascending.
std::vector<std::uint64_t> sample_indices(std::uint64_t nmax);

/// Smallest sampled N <= nmax such that every sampled n in [N, nmax] has
/// |term(x, n) - shadow(x)| < eps. nullopt when no such N exists.
std::optional<std::uint64_t> convergence_witness(const GeneralizedReal& x, double eps,
                                                 std::uint64_t nmax,
                                                 const Catalog& catalog = Catalog::standard());

enum class BinaryOp { Add, Mul };

// Literal termwise formulas on sequences. These never touch the coefficient
// arithmetic in GeneralizedReal; they exist to check it.

/// add: xi_n + eta_n.  mul: lim x * eta_n + lim y * xi_n - lim x * lim y.
std::vector<double> oracle_binary(BinaryOp op, const GeneralizedReal& x, const GeneralizedReal& y,
                                  std::size_t n_terms, const Catalog& catalog = Catalog::standard());

/// 1/lim x - (xi_n - lim x) / (lim x)^2. Throws Error(NotInvertible) on a null limit.
std::vector<double> oracle_inverse(const GeneralizedReal& x, std::size_t n_terms,
                                   const Catalog& catalog = Catalog::standard());

/// x^m by folding the termwise product m - 1 times.
std::vector<double> oracle_pow(const GeneralizedReal& x, std::uint32_t m, std::size_t n_terms,
                               const Catalog& catalog = Catalog::standard());

/// Numerical rank of the n_terms x k matrix of generator prefixes.
std::size_t prefix_rank(std::span<const GeneratorId> ids, std::size_t n_terms,
                        const Catalog& catalog = Catalog::standard());

}  // namespace monadica::seq
