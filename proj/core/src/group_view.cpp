#include "pgroup/group_view.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pgroup/subgroup.hpp"

namespace pgroup {

namespace {

std::uint32_t log_base(std::uint64_t n, std::uint32_t p) {
  std::uint32_t k = 0;
  while (n > 1) {
    if (n % p != 0) throw DomainError("order is not a power of the prime");
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

void FiniteGroupView::finish_setup() {
  const std::uint32_t n = order_;
  log_order_ = log_base(order_, prime_);

  // Identity must be two-sided at id 0.
  for (std::uint32_t a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw DomainError("group '" + name_ + "': id 0 is not a two-sided identity");

  // Latin square (left/right cancellation), which with closure gives inverses.
  std::vector<bool> seen(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t ab = mul(a, b);
      if (ab >= n || seen[ab])
        throw DomainError("group '" + name_ + "': row " + std::to_string(a) +
                          " is not a permutation");
      seen[ab] = true;
    }
  }
  for (std::uint32_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t a = 0; a < n; ++a) {
      std::uint32_t ab = mul(a, b);
      if (seen[ab])
        throw DomainError("group '" + name_ + "': column " + std::to_string(b) +
                          " is not a permutation");
      seen[ab] = true;
    }
  }

  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0)
          throw DomainError("group '" + name_ + "': one-sided inverse at " +
                            std::to_string(a));
        inverse_[a] = b;
        break;
      }

  // Associativity: exhaustive for small tables, deterministic LCG sample of
  // 10^4 triples above that (corpus-wide exhaustive checks live in the test
  // suite where the cost is budgeted).
  auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw DomainError("group '" + name_ + "': associativity fails at (" +
                        std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
  };
  if (n <= 300) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::uint32_t state = 12345;
    auto draw = [&]() {
      state = 1664525u * state + 1013904223u;
      return state % n;
    };
    for (int t = 0; t < 10000; ++t) {
      std::uint32_t a = draw(), b = draw(), c = draw();
      assoc(a, b, c);
    }
  }

  // Element orders by repeated p-th powers (orders are powers of p).
  elt_order_.assign(n, 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t x = a;
    std::uint32_t ord = 1;
    while (x != 0) {
      // x^p by repeated squaring within the table.
      std::uint32_t base = x;
      std::uint32_t e = prime_;
      std::uint32_t acc = 0;
      while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
      }
      x = acc;
      ord *= prime_;
      if (ord > n) throw DomainError("group '" + name_ + "': element order overflow");
    }
    elt_order_[a] = ord;
  }

  // Generators must generate.
  if (!generators_.empty()) {
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::vector<std::uint32_t> frontier{0};
    std::uint32_t count = 1;
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (auto x : frontier)
        for (auto g : generators_) {
          std::uint32_t y = mul(x, g);
          if (!reached[y]) {
            reached[y] = true;
            ++count;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    if (count != n)
      throw DomainError("group '" + name_ + "': generator set reaches only " +
                        std::to_string(count) + " of " + std::to_string(n) +
                        " elements");
  } else if (n > 1) {
    throw DomainError("group '" + name_ + "': empty generating set");
  }

  abelian_ = true;
  for (auto g : generators_) {
    for (auto h : generators_)
      if (mul(g, h) != mul(h, g)) {
        abelian_ = false;
        break;
      }
    if (!abelian_) break;
  }
}

std::uint32_t FiniteGroupView::power(std::uint32_t a, std::int64_t k) const {
  std::uint64_t e;
  if (k >= 0)
    e = static_cast<std::uint64_t>(k) % order_;
  else {
    e = order_ - (static_cast<std::uint64_t>(-(k + 1)) + 1) % order_;
    if (e == order_) e = 0;
  }
  std::uint32_t acc = 0;
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

FiniteGroupView FiniteGroupView::from_presentation(
    std::shared_ptr<const PcPresentation> pc, std::uint64_t max_order) {
  const std::uint64_t big_order = pc->order();
  if (big_order > max_order)
    throw BudgetExceeded("group '" + pc->name() + "': order too large for a "
                         "multiplication table", big_order, max_order);
  const std::uint32_t n = static_cast<std::uint32_t>(big_order);
  const std::uint32_t ngens = pc->ngens();

  FiniteGroupView view;
  view.name_ = pc->name();
  view.prime_ = pc->prime();
  view.order_ = n;
  view.pc_ = pc;

  // Right multiplication by each generator, computed by collection once.
  std::vector<std::vector<std::uint32_t>> rmul(ngens,
                                               std::vector<std::uint32_t>(n));
  for (std::uint32_t g = 0; g < ngens; ++g) {
    const ExponentVec gen = pc->generator(g + 1);
    for (std::uint32_t x = 0; x < n; ++x)
      rmul[g][x] = pc->rank(pc->product(pc->unrank(x), gen));
  }

  // Chain the remaining columns: if y = y' * g_j with y' the exponent vector
  // of y with its last nonzero entry decremented, then x*y = (x*y')*g_j.
  // Valid because the presentation passed its consistency check, i.e. the
  // collected product is associative.
  view.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t x = 0; x < n; ++x) view.table_[static_cast<std::size_t>(x) * n] = x;
  std::vector<std::uint32_t> radix(ngens);  // id increment of g_j
  {
    std::uint32_t r = 1;
    for (std::uint32_t j = ngens; j > 0; --j) {
      radix[j - 1] = r;
      r *= view.prime_;
    }
  }
  for (std::uint32_t y = 1; y < n; ++y) {
    // Last nonzero exponent of y in the mixed-radix representation.
    std::uint32_t j = ngens;
    std::uint32_t rem = y;
    while (rem % view.prime_ == 0) {
      rem /= view.prime_;
      --j;
    }
    const std::uint32_t yprev = y - radix[j - 1];
    const auto& col = rmul[j - 1];
    for (std::uint32_t x = 0; x < n; ++x)
      view.table_[static_cast<std::size_t>(x) * n + y] =
          col[view.table_[static_cast<std::size_t>(x) * n + yprev]];
  }

  view.generators_.resize(ngens);
  for (std::uint32_t g = 0; g < ngens; ++g)
    view.generators_[g] = pc->rank(pc->generator(g + 1));

  view.finish_setup();
  return view;
}

FiniteGroupView FiniteGroupView::from_table(std::string name,
                                            std::uint32_t prime,
                                            std::vector<std::uint32_t> table,
                                            std::vector<std::uint32_t> generators) {
  FiniteGroupView view;
  view.name_ = std::move(name);
  view.prime_ = prime;
  std::size_t n2 = table.size();
  std::uint32_t n = static_cast<std::uint32_t>(std::llround(std::sqrt(double(n2))));
  while (static_cast<std::size_t>(n) * n < n2) ++n;
  if (static_cast<std::size_t>(n) * n != n2)
    throw DomainError("table size is not a perfect square");
  view.order_ = n;
  view.table_ = std::move(table);
  view.generators_ = std::move(generators);
  view.finish_setup();
  return view;
}

FiniteGroupView FiniteGroupView::abelian_from_type(const AbelianType& type,
                                                   const std::string& name) {
  const std::uint32_t p = type.prime();
  std::vector<std::uint32_t> moduli;
  for (auto e : type.exponents())
    moduli.push_back(static_cast<std::uint32_t>(checked_pow(p, e)));
  std::uint64_t big = 1;
  for (auto m : moduli) big *= m;
  if (big > (std::uint64_t{1} << 20))
    throw DomainError("abelian group too large to synthesize");
  const std::uint32_t n = static_cast<std::uint32_t>(big);

  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> da(moduli.size()), db(moduli.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t r = a;
    for (std::size_t i = moduli.size(); i > 0; --i) {
      da[i - 1] = r % moduli[i - 1];
      r /= moduli[i - 1];
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t s = b;
      for (std::size_t i = moduli.size(); i > 0; --i) {
        db[i - 1] = s % moduli[i - 1];
        s /= moduli[i - 1];
      }
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i)
        id = id * moduli[i] + (da[i] + db[i]) % moduli[i];
      table[static_cast<std::size_t>(a) * n + b] = id;
    }
  }

  std::vector<std::uint32_t> gens;
  std::uint32_t stride = 1;
  for (std::size_t i = moduli.size(); i > 0; --i) {
    gens.push_back(stride);  // unit vector in coordinate i-1
    stride *= moduli[i - 1];
  }
  std::sort(gens.begin(), gens.end());
  if (n == 1) gens.clear();

  FiniteGroupView view;
  view.name_ = name;
  view.prime_ = p;
  view.order_ = n;
  view.table_ = std::move(table);
  view.generators_ = std::move(gens);
  view.finish_setup();
  return view;
}

FiniteGroupView FiniteGroupView::quotient(
    std::shared_ptr<const FiniteGroupView> G, const Subgroup& N) {
  if (N.parent().get() != G.get())
    throw DomainError("quotient: subgroup belongs to a different group");
  if (!N.is_normal())
    throw DomainError("quotient of '" + G->name() + "': subgroup of order " +
                      std::to_string(N.order()) + " is not normal");

  const std::uint32_t n = G->order();
  const std::uint32_t q = n / N.order();
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  reps.reserve(q);
  // Scanning ids in increasing order makes each coset's first unassigned
  // element its minimal one, so coset ids are deterministic.
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (std::uint32_t m : N.members()) coset_of[G->mul(x, m)] = c;
  }

  std::vector<std::uint32_t> table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          coset_of[G->mul(reps[a], reps[b])];

  std::vector<std::uint32_t> gens;
  for (auto g : G->generators()) {
    std::uint32_t img = coset_of[g];
    if (img != 0 && std::find(gens.begin(), gens.end(), img) == gens.end())
      gens.push_back(img);
  }
  if (q > 1 && gens.empty())
    throw DomainError("quotient: generator images are all trivial");

  FiniteGroupView view;
  view.name_ = G->name() + "/N" + std::to_string(N.order());
  view.prime_ = G->prime();
  view.order_ = q;
  view.table_ = std::move(table);
  view.generators_ = std::move(gens);
  view.parent_ = G;
  view.epi_ = std::move(coset_of);
  view.finish_setup();
  return view;
}

}  // namespace pgroup
