#ifndef PGROUP_ABELIAN_TYPE_HPP
#define PGROUP_ABELIAN_TYPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgroup/errors.hpp"

namespace pgroup {

/// Isomorphism type of a finite abelian p-group: the non-increasing exponent
/// multiset [e1 >= e2 >= ...] with A isomorphic to the direct product of the
/// cyclic groups of order p^ei. The empty list is the trivial group.
class AbelianType {
public:
  AbelianType() : prime_(0) {}

  AbelianType(std::uint32_t prime, std::vector<std::uint32_t> exponents)
      : prime_(prime), exponents_(std::move(exponents)) {
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (exponents_[i] == 0)
        throw DomainError("abelian type exponents must be >= 1");
      if (i > 0 && exponents_[i] > exponents_[i - 1])
        throw DomainError("abelian type exponents must be non-increasing");
    }
  }

  std::uint32_t prime() const { return prime_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  bool trivial() const { return exponents_.empty(); }

  /// p^(sum of exponents). Throws DomainError on 64-bit overflow.
  std::uint64_t order() const;

  /// "[2,1]" for C_{p^2} x C_p; "[]" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianType& a, const AbelianType& b) {
    return a.exponents_ == b.exponents_ &&
           (a.exponents_.empty() || a.prime_ == b.prime_);
  }
  friend bool operator!=(const AbelianType& a, const AbelianType& b) {
    return !(a == b);
  }

private:
  std::uint32_t prime_;
  std::vector<std::uint32_t> exponents_;
};

/// p^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

/// Number of homomorphisms A -> B between finite abelian p-groups at the same
/// prime, by the primary-decomposition product: prod_{i,j} p^min(a_i, b_j).
/// Throws DomainError on prime mismatch or 64-bit overflow.
std::uint64_t hom_order(const AbelianType& a, const AbelianType& b);

}  // namespace pgroup

#endif  // PGROUP_ABELIAN_TYPE_HPP
