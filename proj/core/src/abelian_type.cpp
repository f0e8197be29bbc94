#include "pgroup/abelian_type.hpp"

#include <algorithm>

namespace pgroup {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw DomainError("power " + std::to_string(base) + "^" +
                        std::to_string(exp) + " overflows 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t AbelianType::order() const {
  std::uint64_t total = 0;
  for (auto e : exponents_) total += e;
  if (total > UINT32_MAX) throw DomainError("abelian type order overflows");
  return checked_pow(prime_, static_cast<std::uint32_t>(total));
}

std::string AbelianType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exponents_[i]);
  }
  return s + "]";
}

std::uint64_t hom_order(const AbelianType& a, const AbelianType& b) {
  if (!a.trivial() && !b.trivial() && a.prime() != b.prime())
    throw DomainError("hom_order: prime mismatch (" +
                      std::to_string(a.prime()) + " vs " +
                      std::to_string(b.prime()) + ")");
  const std::uint64_t p = a.trivial() ? b.prime() : a.prime();
  std::uint64_t total = 0;
  for (auto ai : a.exponents())
    for (auto bj : b.exponents()) total += std::min(ai, bj);
  if (total > UINT32_MAX) throw DomainError("hom_order overflows");
  return checked_pow(p, static_cast<std::uint32_t>(total));
}

}  // namespace pgroup
