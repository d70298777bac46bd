#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace monadica {

/// Name of an infinitesimal generator sequence, e.g. "e:1", "h", "g:0.5".
/// The catalog in sequence.hpp gives each id its concrete terms.
class GeneratorId {
 public:
  GeneratorId() = default;
  explicit GeneratorId(std::string name) : name_(std::move(name)) {}
  GeneratorId(const char* name) : name_(name) {}  // NOLINT: literal ids read naturally

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;

 private:
  std::string name_;
};

enum class Cmp3 { Less, Indiscernible, Greater };

/**
 * A convergent real sequence held in shadow + differential form.
 *
 * The shadow is the limit of the sequence. The differential is a finite real
 * linear combination of generator sequences, each converging to zero. Since
 * the product of two null sequences is annihilated by the ring product, every
 * ring operation keeps the differential inside that span, so no sequence is
 * ever materialized.
 *
 * Canonical form: coefficients are sorted by id and never zero. Two values
 * compare equal iff shadow and coefficients agree bit for bit.
 */
class GeneralizedReal {
 public:
  using Term = std::pair<GeneratorId, double>;
  using Coefficients = std::vector<Term>;

  GeneralizedReal() = default;

  // Reals embed as constant sequences.
  GeneralizedReal(double real);  // NOLINT(google-explicit-constructor)

  /// Throws Error(NonFiniteInput) on NaN or infinite input. Repeated ids are summed.
  static GeneralizedReal make(double shadow, Coefficients dpart);
  static GeneralizedReal make(double shadow, std::initializer_list<Term> dpart);

  /// coeff * (the generator sequence named by id).
  static GeneralizedReal generator(const GeneratorId& id, double coeff = 1.0);

  double shadow() const noexcept { return shadow_; }
  const Coefficients& coefficients() const noexcept { return dpart_; }
  double coefficient(const GeneratorId& id) const noexcept;

  /// The infinitesimal dx with x = shadow + dx.
  GeneralizedReal differential() const;

  bool is_real() const noexcept { return dpart_.empty(); }
  bool is_infinitesimal() const noexcept { return shadow_ == 0.0; }

  GeneralizedReal operator-() const;
  GeneralizedReal& operator+=(const GeneralizedReal& rhs);
  GeneralizedReal& operator-=(const GeneralizedReal& rhs);
  GeneralizedReal& operator*=(const GeneralizedReal& rhs);
  GeneralizedReal& operator/=(const GeneralizedReal& rhs);

  friend GeneralizedReal operator+(GeneralizedReal lhs, const GeneralizedReal& rhs) {
    return lhs += rhs;
  }
  friend GeneralizedReal operator-(GeneralizedReal lhs, const GeneralizedReal& rhs) {
    return lhs -= rhs;
  }
  friend GeneralizedReal operator*(GeneralizedReal lhs, const GeneralizedReal& rhs) {
    return lhs *= rhs;
  }
  friend GeneralizedReal operator/(GeneralizedReal lhs, const GeneralizedReal& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const GeneralizedReal& a, const GeneralizedReal& b) noexcept;

 private:
  GeneralizedReal(double shadow, Coefficients dpart, bool) noexcept
      : shadow_(shadow), dpart_(std::move(dpart)) {}

  friend GeneralizedReal linear_combination(double, const GeneralizedReal&, double,
                                            const GeneralizedReal&);

  double shadow_ = 0.0;
  Coefficients dpart_;
};

std::ostream& operator<<(std::ostream& os, const GeneralizedReal& x);

// Decomposition.
double sigma(const GeneralizedReal& x) noexcept;
GeneralizedReal dpart(const GeneralizedReal& x);

/// a*x + b*y, coefficient by coefficient. A coefficient whose magnitude falls
/// below the rounding noise of its two contributions is stored as zero.
GeneralizedReal linear_combination(double a, const GeneralizedReal& x, double b,
                                   const GeneralizedReal& y);

GeneralizedReal add(const GeneralizedReal& x, const GeneralizedReal& y);
GeneralizedReal neg(const GeneralizedReal& x);
GeneralizedReal sub(const GeneralizedReal& x, const GeneralizedReal& y);
GeneralizedReal mul(const GeneralizedReal& x, const GeneralizedReal& y);

/// Throws Error(NotInvertible) when x is infinitesimal.
GeneralizedReal inv(const GeneralizedReal& x);
GeneralizedReal div(const GeneralizedReal& y, const GeneralizedReal& x);

/// x^m for m >= 0 (x^0 = 1).
GeneralizedReal pow_nat(const GeneralizedReal& x, std::uint32_t m);

/// Positive m-th root, m > 1. Throws Error(DomainError) unless shadow(x) > 0.
GeneralizedReal root(const GeneralizedReal& x, std::uint32_t m);

// Ordering lives entirely on shadows.
Cmp3 cmp3(const GeneralizedReal& x, const GeneralizedReal& y) noexcept;
bool lt(const GeneralizedReal& x, const GeneralizedReal& y) noexcept;
bool indiscernible(const GeneralizedReal& x, const GeneralizedReal& y) noexcept;
bool lesssim(const GeneralizedReal& x, const GeneralizedReal& y) noexcept;

/// Smallest m >= 1 with m*x > y. Requires x positive.
std::uint64_t archimedean_witness(const GeneralizedReal& x, const GeneralizedReal& y);

/// A real strictly between x < y (midpoint of shadows).
double density_real_between(const GeneralizedReal& x, const GeneralizedReal& y);

/// A non-real value strictly between two reals: the midpoint plus e:1.
GeneralizedReal density_nonreal_between(double lo, double hi);

/// Image of x in the quotient by indiscernibility, identified with R.
double quotient_repr(const GeneralizedReal& x) noexcept;

/// Shadows within rel_tol (relative, floored at 1) and every coefficient
/// within rel_tol of the larger magnitude on either side.
bool approx_equal(const GeneralizedReal& x, const GeneralizedReal& y, double rel_tol);

}  // namespace monadica
