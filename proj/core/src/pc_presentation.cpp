#include "pgroup/pc_presentation.hpp"

#include <algorithm>
#include <cstdlib>

#include "pgroup/abelian_type.hpp"

namespace pgroup {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint32_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Largest index (1-based) with a nonzero entry; 0 for the identity.
std::uint32_t top_support(const ExponentVec& v) {
  for (std::size_t i = v.size(); i > 0; --i)
    if (v[i - 1] != 0) return static_cast<std::uint32_t>(i);
  return 0;
}

}  // namespace

PcPresentation::PcPresentation(
    std::string name, std::uint32_t prime, std::uint32_t ngens,
    std::map<std::uint32_t, ExponentVec> power_relations,
    std::map<std::pair<std::uint32_t, std::uint32_t>, ExponentVec>
        commutator_relations)
    : name_(std::move(name)), prime_(prime), ngens_(ngens) {
  if (!is_prime(prime_))
    throw DomainError("group '" + name_ + "': " + std::to_string(prime_) +
                      " is not prime");
  if (ngens_ == 0)
    throw DomainError("group '" + name_ + "': ngens must be >= 1");

  auto check_vec = [&](const ExponentVec& v, const std::string& rel) {
    if (v.size() != ngens_)
      throw DomainError("group '" + name_ + "', relation " + rel + ": expected " +
                        std::to_string(ngens_) + " exponents, got " +
                        std::to_string(v.size()));
    for (auto e : v)
      if (e >= prime_)
        throw DomainError("group '" + name_ + "', relation " + rel +
                          ": exponent out of range [0, p)");
  };

  power_.assign(ngens_, std::nullopt);
  for (auto& [i, v] : power_relations) {
    const std::string rel = "pow " + std::to_string(i);
    if (i < 1 || i > ngens_)
      throw DomainError("group '" + name_ + "', relation " + rel +
                        ": generator index out of range");
    check_vec(v, rel);
    for (std::uint32_t k = 1; k <= i; ++k)
      if (v[k - 1] != 0)
        throw DomainError("group '" + name_ + "', relation " + rel +
                          ": weighting violation (supported at index " +
                          std::to_string(k) + " <= " + std::to_string(i) + ")");
    if (top_support(v) != 0) power_[i - 1] = std::move(v);
  }

  comm_.assign(ngens_, {});
  for (std::uint32_t j = 0; j < ngens_; ++j) comm_[j].assign(j, std::nullopt);
  for (auto& [ji, v] : commutator_relations) {
    auto [j, i] = ji;
    const std::string rel = "comm " + std::to_string(j) + " " + std::to_string(i);
    if (j < 1 || j > ngens_ || i < 1 || i > ngens_)
      throw DomainError("group '" + name_ + "', relation " + rel +
                        ": generator index out of range");
    if (j <= i)
      throw DomainError("group '" + name_ + "', relation " + rel +
                        ": requires j > i");
    check_vec(v, rel);
    for (std::uint32_t k = 1; k <= j; ++k)
      if (v[k - 1] != 0)
        throw DomainError("group '" + name_ + "', relation " + rel +
                          ": weighting violation (supported at index " +
                          std::to_string(k) + " <= " + std::to_string(j) + ")");
    if (top_support(v) != 0) comm_[j - 1][i - 1] = std::move(v);
  }

  // Pre-split relation values into runs for the collector.
  auto to_runs = [&](const std::optional<ExponentVec>& v) {
    std::vector<Run> runs;
    if (v)
      for (std::uint32_t g = 0; g < ngens_; ++g)
        if ((*v)[g] != 0) runs.push_back({g, (*v)[g]});
    return runs;
  };
  power_word_.resize(ngens_);
  comm_word_.resize(ngens_);
  for (std::uint32_t j = 0; j < ngens_; ++j) {
    power_word_[j] = to_runs(power_[j]);
    comm_word_[j].resize(j);
    for (std::uint32_t i = 0; i < j; ++i) comm_word_[j][i] = to_runs(comm_[j][i]);
  }
}

std::uint64_t PcPresentation::order() const {
  return checked_pow(prime_, ngens_);
}

ExponentVec PcPresentation::power_relation(std::uint32_t i) const {
  if (i < 1 || i > ngens_) throw DomainError("generator index out of range");
  return power_[i - 1] ? *power_[i - 1] : identity();
}

ExponentVec PcPresentation::commutator_relation(std::uint32_t j,
                                                std::uint32_t i) const {
  if (j < 1 || j > ngens_ || i < 1 || i >= j)
    throw DomainError("commutator relation requires 1 <= i < j <= ngens");
  return comm_[j - 1][i - 1] ? *comm_[j - 1][i - 1] : identity();
}

bool PcPresentation::has_power_relation(std::uint32_t i) const {
  return i >= 1 && i <= ngens_ && power_[i - 1].has_value();
}

bool PcPresentation::has_commutator_relation(std::uint32_t j,
                                             std::uint32_t i) const {
  return j >= 1 && j <= ngens_ && i >= 1 && i < j &&
         comm_[j - 1][i - 1].has_value();
}

std::size_t PcPresentation::power_relation_count() const {
  std::size_t n = 0;
  for (auto& v : power_) n += v.has_value();
  return n;
}

std::size_t PcPresentation::commutator_relation_count() const {
  std::size_t n = 0;
  for (auto& row : comm_)
    for (auto& v : row) n += v.has_value();
  return n;
}

ExponentVec PcPresentation::generator(std::uint32_t i) const {
  if (i < 1 || i > ngens_) throw DomainError("generator index out of range");
  ExponentVec v(ngens_, 0);
  v[i - 1] = 1;
  return v;
}

void PcPresentation::append_element(std::vector<Run>& word,
                                    const ExponentVec& v) const {
  for (std::uint32_t g = 0; g < ngens_; ++g)
    if (v[g] != 0) word.push_back({g, v[g]});
}

// Collection from the left. Each rewrite either applies a power relation
// (gi^e -> gi^(e-p) * word, the word supported strictly above i) or moves one
// out-of-order letter (gj^a gi^b -> gj^(a-1) gi gj [gj,gi] gi^(b-1), the
// commutator word supported strictly above j). The weighting restriction
// gives a standard decreasing measure, so the loop terminates.
ExponentVec PcPresentation::collect(std::vector<Run> word) const {
  const std::uint32_t p = prime_;
  std::size_t scan = 0;
  for (;;) {
    // Normalize around the scan point: drop empty runs, merge equal neighbors.
    // Rewrites only touch positions >= scan-1, so everything to the left of
    // `scan` stays violation-free.
    std::size_t w = 0;
    std::size_t new_scan = 0;
    for (std::size_t r = 0; r < word.size(); ++r) {
      if (r == scan) new_scan = w;
      if (word[r].exp == 0) continue;
      if (w > 0 && word[w - 1].gen == word[r].gen)
        word[w - 1].exp += word[r].exp;
      else
        word[w++] = word[r];
    }
    if (scan >= word.size()) new_scan = w;
    word.resize(w);
    scan = new_scan > 0 ? new_scan - 1 : 0;

    // Find the leftmost violation at or after `scan`.
    std::size_t pos = word.size();
    bool is_power = false;
    for (std::size_t r = scan; r < word.size(); ++r) {
      if (word[r].exp >= p) {
        pos = r;
        is_power = true;
        break;
      }
      if (r + 1 < word.size() && word[r].gen > word[r + 1].gen) {
        pos = r;
        break;
      }
    }
    if (pos == word.size()) break;

    if (is_power) {
      const std::uint32_t g = word[pos].gen;
      word[pos].exp -= p;
      word.insert(word.begin() + pos + 1, power_word_[g].begin(),
                  power_word_[g].end());
    } else {
      const Run x = word[pos];      // gj^a
      const Run y = word[pos + 1];  // gi^b, i < j
      const auto& cw = comm_word_[x.gen][y.gen];
      std::vector<Run> repl;
      repl.reserve(4 + cw.size());
      if (x.exp > 1) repl.push_back({x.gen, x.exp - 1});
      repl.push_back({y.gen, 1});
      repl.push_back({x.gen, 1});
      repl.insert(repl.end(), cw.begin(), cw.end());
      if (y.exp > 1) repl.push_back({y.gen, y.exp - 1});
      word.erase(word.begin() + pos, word.begin() + pos + 2);
      word.insert(word.begin() + pos, repl.begin(), repl.end());
    }
    scan = pos;
  }

  ExponentVec result(ngens_, 0);
  for (const Run& r : word) result[r.gen] = r.exp;
  return result;
}

ExponentVec PcPresentation::product(const ExponentVec& a,
                                    const ExponentVec& b) const {
  if (a.size() != ngens_ || b.size() != ngens_)
    throw DomainError("element has wrong number of exponents");
  std::vector<Run> word;
  word.reserve(2 * ngens_);
  append_element(word, a);
  append_element(word, b);
  return collect(std::move(word));
}

ExponentVec PcPresentation::power(const ExponentVec& a, std::int64_t k) const {
  const std::uint64_t n = order();
  std::uint64_t e;
  if (k >= 0) {
    e = static_cast<std::uint64_t>(k) % n;
  } else {
    // a^-m = a^(n - m mod n) since a^n = identity by Lagrange.
    e = n - (static_cast<std::uint64_t>(-(k + 1)) + 1) % n;
    if (e == n) e = 0;
  }
  ExponentVec result = identity();
  ExponentVec base = a;
  while (e > 0) {
    if (e & 1) result = product(result, base);
    e >>= 1;
    if (e > 0) base = product(base, base);
  }
  return result;
}

ExponentVec PcPresentation::commutator(const ExponentVec& a,
                                       const ExponentVec& b) const {
  return product(product(inverse(a), inverse(b)), product(a, b));
}

std::uint64_t PcPresentation::element_order(const ExponentVec& a) const {
  // In a p-group every order is a power of p: repeatedly take p-th powers.
  std::uint64_t ord = 1;
  ExponentVec x = a;
  const ExponentVec e = identity();
  while (x != e) {
    x = power(x, static_cast<std::int64_t>(prime_));
    ord *= prime_;
  }
  return ord;
}

std::vector<ExponentVec> PcPresentation::enumerate_elements() const {
  const std::uint64_t n = order();
  std::vector<ExponentVec> out;
  out.reserve(n);
  ExponentVec v = identity();
  out.push_back(v);
  for (std::uint64_t c = 1; c < n; ++c) {
    // Lexicographic successor with e1 most significant.
    for (std::size_t i = ngens_; i > 0; --i) {
      if (++v[i - 1] < prime_) break;
      v[i - 1] = 0;
    }
    out.push_back(v);
  }
  return out;
}

ElementId PcPresentation::rank(const ExponentVec& v) const {
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < ngens_; ++i) r = r * prime_ + v[i];
  return static_cast<ElementId>(r);
}

ExponentVec PcPresentation::unrank(ElementId id) const {
  ExponentVec v(ngens_, 0);
  std::uint64_t r = id;
  for (std::uint32_t i = ngens_; i > 0; --i) {
    v[i - 1] = static_cast<std::uint32_t>(r % prime_);
    r /= prime_;
  }
  return v;
}

ConsistencyReport PcPresentation::check_consistency() const {
  ConsistencyReport report;
  report.expected_order = order();
  if (report.expected_order > (std::uint64_t{1} << 26)) {
    report.failures.push_back("order " + std::to_string(report.expected_order) +
                              " exceeds consistency-check capacity (2^26)");
    return report;
  }
  constexpr std::size_t kMaxFailures = 25;
  std::size_t suppressed = 0;
  auto fail = [&](std::string msg) {
    if (report.failures.size() < kMaxFailures)
      report.failures.push_back(std::move(msg));
    else
      ++suppressed;
  };
  auto show = [&](const ExponentVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };

  // (a) closure of the generators under product.
  {
    std::vector<ExponentVec> gens;
    for (std::uint32_t i = 1; i <= ngens_; ++i) gens.push_back(generator(i));
    std::vector<bool> seen(report.expected_order, false);
    std::vector<ExponentVec> frontier{identity()};
    seen[0] = true;
    std::uint64_t count = 1;
    while (!frontier.empty()) {
      std::vector<ExponentVec> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          ExponentVec y = product(x, g);
          ElementId id = rank(y);
          if (!seen[id]) {
            seen[id] = true;
            ++count;
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    report.closure_size = count;
    if (count != report.expected_order)
      fail("closure: generators reach " + std::to_string(count) + " of " +
           std::to_string(report.expected_order) + " normal forms");
  }

  auto gen_power = [&](std::uint32_t i, std::uint32_t k) {
    std::vector<Run> w;
    if (k > 0) w.push_back({i - 1, k});
    return collect(std::move(w));
  };
  auto check_eq = [&](const ExponentVec& lhs, const ExponentVec& rhs,
                      const std::string& label) {
    if (lhs != rhs)
      fail(label + ": " + show(lhs) + " != " + show(rhs));
  };

  // (b) associativity. First the complete overlap set: passing these is
  // equivalent to the collected product being associative everywhere.
  for (std::uint32_t k = 3; k <= ngens_; ++k)
    for (std::uint32_t j = 2; j < k; ++j)
      for (std::uint32_t i = 1; i < j; ++i)
        check_eq(product(generator(k), product(generator(j), generator(i))),
                 product(product(generator(k), generator(j)), generator(i)),
                 "overlap g" + std::to_string(k) + "(g" + std::to_string(j) +
                     " g" + std::to_string(i) + ")");
  for (std::uint32_t j = 2; j <= ngens_; ++j)
    for (std::uint32_t i = 1; i < j; ++i) {
      check_eq(product(gen_power(j, prime_), generator(i)),
               product(gen_power(j, prime_ - 1),
                       product(generator(j), generator(i))),
               "overlap g" + std::to_string(j) + "^p g" + std::to_string(i));
      check_eq(product(generator(j), gen_power(i, prime_)),
               product(product(generator(j), generator(i)),
                       gen_power(i, prime_ - 1)),
               "overlap g" + std::to_string(j) + " g" + std::to_string(i) + "^p");
    }
  for (std::uint32_t i = 1; i <= ngens_; ++i)
    check_eq(product(gen_power(i, prime_), generator(i)),
             product(generator(i), gen_power(i, prime_)),
             "overlap g" + std::to_string(i) + "^p g" + std::to_string(i));

  // All ordered generator triples.
  for (std::uint32_t a = 1; a <= ngens_; ++a)
    for (std::uint32_t b = 1; b <= ngens_; ++b)
      for (std::uint32_t c = 1; c <= ngens_; ++c)
        check_eq(
            product(product(generator(a), generator(b)), generator(c)),
            product(generator(a), product(generator(b), generator(c))),
            "assoc on generators (" + std::to_string(a) + "," +
                std::to_string(b) + "," + std::to_string(c) + ")");

  // Deterministic sample of 10^4 element triples. LCG constants are fixed so
  // any failure is reproducible by index.
  {
    const std::uint64_t n = report.expected_order;
    std::uint32_t state = 12345;
    auto draw = [&]() {
      state = 1664525u * state + 1013904223u;
      return static_cast<ElementId>(state % n);
    };
    for (std::uint32_t t = 0; t < 10000; ++t) {
      ExponentVec a = unrank(draw());
      ExponentVec b = unrank(draw());
      ExponentVec c = unrank(draw());
      ExponentVec lhs = product(product(a, b), c);
      ExponentVec rhs = product(a, product(b, c));
      if (lhs != rhs)
        fail("assoc on sampled triple #" + std::to_string(t) + ": " + show(a) +
             " " + show(b) + " " + show(c));
    }
  }

  // (c) every stored relation re-evaluates to itself.
  for (std::uint32_t i = 1; i <= ngens_; ++i)
    check_eq(gen_power(i, prime_), power_relation(i),
             "relation pow " + std::to_string(i));
  for (std::uint32_t j = 2; j <= ngens_; ++j)
    for (std::uint32_t i = 1; i < j; ++i)
      check_eq(commutator(generator(j), generator(i)),
               commutator_relation(j, i),
               "relation comm " + std::to_string(j) + " " + std::to_string(i));

  if (suppressed > 0)
    report.failures.push_back("+" + std::to_string(suppressed) +
                              " further failures suppressed");
  report.passed = report.failures.empty();
  return report;
}

}  // namespace pgroup
