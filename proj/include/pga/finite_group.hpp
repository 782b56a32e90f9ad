#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/errors.hpp"
#include "pga/group_spec.hpp"
#include "pga/number_theory.hpp"

namespace pga {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroupOrder = 2000;

/// A finite group given by its Cayley table. Element 0 is the identity.
/// Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t size, std::vector<Element> table, std::vector<std::string> labels,
              std::string description)
      : size_(size),
        table_(std::move(table)),
        labels_(std::move(labels)),
        description_(std::move(description)) {
    if (size_ == 0) throw InternalError("group must be nonempty");
    check_internal(table_.size() == size_ * size_, "Cayley table has wrong shape");
    check_internal(labels_.size() == size_, "label count does not match group order");
    for (Element x : table_) check_internal(x < size_, "Cayley table entry out of range");
    for (Element x = 0; x < size_; ++x) {
      check_internal(mul(0, x) == x && mul(x, 0) == x, "element 0 is not the identity");
    }
    inverse_.assign(size_, 0);
    order_.assign(size_, 0);
    for (Element x = 0; x < size_; ++x) {
      Element y = x;
      std::size_t k = 1;
      while (y != 0) {
        y = mul(y, x);
        ++k;
        check_internal(k <= size_, "element has no finite order; table is not a group");
      }
      order_[x] = k;
      inverse_[x] = power(x, k - 1);
    }
  }

  std::size_t size() const noexcept { return size_; }
  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[a * size_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& description() const noexcept { return description_; }

  Element power(Element x, std::uint64_t k) const {
    Element r = identity();
    Element base = x;
    while (k > 0) {
      if (k & 1U) r = mul(r, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return r;
  }

  /// Smallest k >= 1 with x^k = e.
  std::size_t element_order(Element x) const { return order_[x]; }

  bool is_abelian() const {
    for (Element a = 0; a < size_; ++a)
      for (Element b = a + 1; b < size_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::size_t size_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::string description_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> order_;
};

inline std::size_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

/// Powers x^0, x^1, ..., x^(o(x)-1) in exponent order.
inline std::vector<Element> powers(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  out.reserve(g.element_order(x));
  Element y = FiniteGroup::identity();
  do {
    out.push_back(y);
    y = g.mul(y, x);
  } while (y != FiniteGroup::identity());
  return out;
}

/// <x> as a sorted element set.
inline std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x) {
  auto out = powers(g, x);
  std::sort(out.begin(), out.end());
  return out;
}

/// Generators of <x>, i.e. {x^i : gcd(i, o(x)) = 1}, sorted.
inline std::vector<Element> gen_set(const FiniteGroup& g, Element x) {
  auto pw = powers(g, x);
  const std::size_t n = pw.size();
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i)
    if (nt::gcd(i, n) == 1) out.push_back(pw[i]);
  if (n == 1) out = {FiniteGroup::identity()};
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t centralizer_size(const FiniteGroup& g, Element x) {
  std::size_t count = 0;
  for (Element y = 0; y < g.size(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) ++count;
  return count;
}

/// Exhaustive group-axiom check. Cubic in |G|; intended for small groups.
inline bool check_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.size());
  for (Element a = 0; a < n; ++a) {
    if (g.mul(a, 0) != a || g.mul(0, a) != a) return false;
    if (g.mul(a, g.inverse(a)) != 0 || g.mul(g.inverse(a), a) != 0) return false;
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

inline std::string power_label(const std::string& gen, std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

inline FiniteGroup make_cyclic(std::size_t n, std::string description) {
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = power_label("g", i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(description));
}

/// Z(d1) x ... x Z(dk) with lexicographic tuple ordering; labels are exponent tuples.
inline FiniteGroup make_cyclic_product(const std::vector<std::uint64_t>& dims, std::string description) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  const std::size_t k = dims.size();
  std::vector<std::vector<std::uint64_t>> coords(n, std::vector<std::uint64_t>(k));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = k; f-- > 0;) {
      coords[idx][f] = rest % dims[f];
      rest /= dims[f];
    }
  }
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < k; ++f) idx = idx * dims[f] + c[f];
    return static_cast<Element>(idx);
  };
  std::vector<Element> table(n * n);
  std::vector<std::uint64_t> sum(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < k; ++f) sum[f] = (coords[a][f] + coords[b][f]) % dims[f];
      table[a * n + b] = encode(sum);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::string s = "(";
    for (std::size_t f = 0; f < k; ++f) {
      if (f > 0) s += ',';
      s += std::to_string(coords[idx][f]);
    }
    labels[idx] = s + ")";
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(description));
}

inline std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Permutations of {0..n-1} in lexicographic order (identity first). The
/// product a*b applies b first, then a.
inline FiniteGroup make_symmetric(std::size_t n, std::string description) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t m = perms.size();
  std::vector<Element> table(m * m);
  std::vector<std::size_t> c(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      table[a * m + b] = index.at(c);
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = cycle_notation(perms[i]);
  return FiniteGroup(m, std::move(table), std::move(labels), std::move(description));
}

/// Elements r^i s^j stored at index i + n*j, with s r s = r^-1.
inline FiniteGroup make_dihedral(std::size_t n, std::string description) {
  const std::size_t m = 2 * n;
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t ai = a % n, aj = a / n;
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t bi = b % n, bj = b / n;
      const std::size_t ri = aj == 0 ? (ai + bi) % n : (ai + n - bi) % n;
      table[a * m + b] = static_cast<Element>(ri + n * ((aj + bj) % 2));
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = power_label("r", i);
    labels[i + n] = i == 0 ? "s" : power_label("r", i) + "s";
  }
  return FiniteGroup(m, std::move(table), std::move(labels), std::move(description));
}

/// Order: 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup make_quaternion(std::string description) {
  // unit products over {1,i,j,k} as (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnit{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<Element> table(64);
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      const int sa = (a % 2 == 0) ? 1 : -1, sb = (b % 2 == 0) ? 1 : -1;
      auto [s, u] = kUnit[a / 2][b / 2];
      const int sign = sa * sb * s;
      table[a * 8 + b] = static_cast<Element>(2 * u + (sign < 0 ? 1 : 0));
    }
  }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup(8, std::move(table), std::move(labels), std::move(description));
}

}  // namespace detail

/// External direct product with lexicographic ordering: (a, b) -> a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string description) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      table[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x)
    labels[x] = "(" + a.label(static_cast<Element>(x / nb)) + "," + b.label(static_cast<Element>(x % nb)) + ")";
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(description));
}

/// Builds the Cayley table for a parsed spec. Throws SpecError when the
/// resulting order would exceed `max_order`.
inline FiniteGroup realize(const GroupSpec& spec, std::size_t max_order = kDefaultMaxGroupOrder) {
  const std::uint64_t order = spec_order(spec);
  if (order > max_order) {
    throw SpecError(render(spec) + ": group order " +
                    (order == UINT64_MAX ? std::string("overflows") : std::to_string(order)) +
                    " exceeds the configured maximum " + std::to_string(max_order));
  }
  using K = GroupSpec::Kind;
  std::string desc = render(spec);
  switch (spec.kind) {
    case K::Cyclic:
      return detail::make_cyclic(spec.n, std::move(desc));
    case K::Homocyclic:
      return detail::make_cyclic_product(std::vector<std::uint64_t>(spec.power, spec.n), std::move(desc));
    case K::Abelian:
      return detail::make_cyclic_product(spec.dims, std::move(desc));
    case K::Symmetric:
      return detail::make_symmetric(spec.n, std::move(desc));
    case K::Dihedral:
      return detail::make_dihedral(spec.n, std::move(desc));
    case K::Quaternion:
      return detail::make_quaternion(std::move(desc));
    case K::Product:
      return direct_product(realize(spec.factors[0], max_order), realize(spec.factors[1], max_order),
                            std::move(desc));
  }
  throw InternalError("unhandled spec kind");
}

// ---------------------------------------------------------------------------
// Structure

/// Subgroup on the given elements (must be closed and contain the identity),
/// reindexed in ascending order of the original indices.
inline FiniteGroup induced_subgroup(const FiniteGroup& g, std::vector<Element> elements, std::string description) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  check_internal(!elements.empty() && elements[0] == FiniteGroup::identity(),
                 "subgroup must contain the identity");
  std::vector<std::int64_t> local(g.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = local[g.mul(elements[i], elements[j])];
      check_internal(prod >= 0, "element set is not closed under multiplication");
      table[i * n + j] = static_cast<Element>(prod);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(description));
}

/// True when o is a power of p (including p^0 = 1).
inline bool is_power_of(std::uint64_t o, std::uint64_t p) {
  while (o % p == 0) o /= p;
  return o == 1;
}

struct SylowFactor {
  std::uint64_t prime;
  std::vector<Element> elements;  // indices in the parent group
  FiniteGroup group;
};

/// For a nilpotent group, the Sylow subgroups (one per prime dividing |G|,
/// ascending). Returns nullopt when some p-element set is not of full Sylow
/// order, i.e. G is not nilpotent.
inline std::optional<std::vector<SylowFactor>> sylow_decomposition(const FiniteGroup& g) {
  std::vector<SylowFactor> out;
  for (auto [p, e] : nt::factorize(g.size())) {
    std::vector<Element> members;
    for (Element x = 0; x < g.size(); ++x)
      if (is_power_of(g.element_order(x), p)) members.push_back(x);
    if (members.size() != nt::ipow(p, e)) return std::nullopt;
    // closure check; a set of p-elements of Sylow size is the unique Sylow
    // subgroup exactly when it is closed
    for (Element a : members)
      for (Element b : members)
        if (!is_power_of(g.element_order(g.mul(a, b)), p)) return std::nullopt;
    std::string desc = "Sylow-" + std::to_string(p) + "(" + g.description() + ")";
    FiniteGroup sub = induced_subgroup(g, members, std::move(desc));
    out.push_back({p, std::move(members), std::move(sub)});
  }
  return out;
}

/// Elementary divisors (prime-power cyclic orders) of a finite abelian group,
/// ascending by prime, then by order. Throws if g is not abelian.
inline std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InternalError(g.description() + " is not abelian");
  std::vector<std::uint64_t> out;
  for (auto [p, e] : nt::factorize(g.size())) {
    // |Omega_t| = p^{sum_i min(t, e_i)}; successive log differences count
    // the cyclic factors of exponent >= t.
    std::vector<unsigned> at_least;  // at_least[t-1] = #{i : e_i >= t}
    unsigned prev_log = 0;
    for (unsigned t = 1; t <= e; ++t) {
      const std::uint64_t pt = nt::ipow(p, t);
      std::size_t omega = 0;
      for (Element x = 0; x < g.size(); ++x)
        if (pt % g.element_order(x) == 0) ++omega;
      unsigned log = 0;
      for (std::size_t v = omega; v > 1; v /= p) ++log;
      at_least.push_back(log - prev_log);
      prev_log = log;
      if (log == e) break;
    }
    for (std::size_t t = 0; t < at_least.size(); ++t) {
      const unsigned next = t + 1 < at_least.size() ? at_least[t + 1] : 0;
      for (unsigned c = next; c < at_least[t]; ++c) out.push_back(nt::ipow(p, static_cast<unsigned>(t + 1)));
    }
  }
  return out;
}

}  // namespace pga
