#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ttg/errors.hpp"

namespace ttg {

// Permutations in one-line notation: p[i] is the image of i.
using Perm = std::vector<std::uint8_t>;

inline Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a * b)(x) = a(b(x)): apply b first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

inline bool perm_is_valid(const Perm& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<char> seen(degree, 0);
  for (auto v : p) {
    if (v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline constexpr std::size_t kGroupOrderCap = 256;

// A finite permutation group, materialized: the element list is the closure
// of the generators and every product is a table lookup.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Perm> generators)
      : degree_(degree), generators_(std::move(generators)) {
    if (degree_ == 0 || degree_ > 255) throw InputError("degree must be in [1,255]");
    for (const auto& g : generators_)
      if (!perm_is_valid(g, degree_))
        throw InputError("generator is not a bijection of 0.." + std::to_string(degree_ - 1));
    materialize();
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::size_t mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }
  std::size_t identity_index() const { return 0; }

  std::size_t element_order(std::size_t i) const { return elem_order_[i]; }

  std::size_t index_of(const Perm& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) throw InputError("permutation is not a group element");
    return it->second;
  }

private:
  void materialize() {
    elements_.push_back(perm_identity(degree_));
    lookup_[elements_[0]] = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& g : generators_) {
        Perm next = perm_compose(g, elements_[i]);
        if (lookup_.emplace(next, elements_.size()).second) {
          elements_.push_back(std::move(next));
          if (elements_.size() > kGroupOrderCap)
            throw CapExceededError("group order exceeds the cap of " +
                                   std::to_string(kGroupOrderCap));
        }
      }
    }
    const std::size_t n = elements_.size();
    mult_.assign(n, std::vector<std::uint16_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mult_[i][j] = static_cast<std::uint16_t>(lookup_.at(perm_compose(elements_[i], elements_[j])));
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      inv_[i] = static_cast<std::uint16_t>(lookup_.at(perm_inverse(elements_[i])));
    elem_order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = 1, cur = i;
      while (cur != 0) {
        cur = mult_[cur][i];
        ++k;
      }
      elem_order_[i] = k;
    }
  }

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::map<Perm, std::size_t> lookup_;
  std::vector<std::vector<std::uint16_t>> mult_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::size_t> elem_order_;
};

// -----------------------------------------------------------------------
// Catalog of named groups in faithful permutation representations.

namespace detail {

inline Perm cycle(std::size_t degree, const std::vector<std::vector<std::uint8_t>>& cycles) {
  Perm p = perm_identity(degree);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

// Direct product acting on the disjoint union of the two domains.
inline std::vector<Perm> product_generators(std::size_t deg_a, const std::vector<Perm>& a,
                                            std::size_t deg_b, const std::vector<Perm>& b) {
  std::vector<Perm> gens;
  for (const auto& g : a) {
    Perm p = perm_identity(deg_a + deg_b);
    for (std::size_t i = 0; i < deg_a; ++i) p[i] = g[i];
    gens.push_back(p);
  }
  for (const auto& g : b) {
    Perm p = perm_identity(deg_a + deg_b);
    for (std::size_t i = 0; i < deg_b; ++i) p[deg_a + i] = static_cast<std::uint8_t>(deg_a + g[i]);
    gens.push_back(p);
  }
  return gens;
}

}  // namespace detail

inline PermGroup catalog(const std::string& name_in) {
  std::string name = name_in;
  // Accept a multiplication sign as well as 'x'.
  std::size_t pos;
  while ((pos = name.find("\xc3\x97")) != std::string::npos) name.replace(pos, 2, "x");

  auto parse_n = [&](const std::string& prefix) -> long {
    if (name.rfind(prefix, 0) != 0) return -1;
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return -1;
    return std::stol(rest);
  };

  if (name == "1" || name == "C_1") {
    return PermGroup(1, {});
  }
  if (long n = parse_n("C_"); n >= 2) {
    if (n > 30) throw InputError("catalog: C_n supported for n <= 30");
    std::vector<std::uint8_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    return PermGroup(n, {detail::cycle(n, {c})});
  }
  if (long n = parse_n("D_"); n >= 2) {
    if (n > 12) throw InputError("catalog: D_n supported for n <= 12");
    std::vector<std::uint8_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    Perm rot = detail::cycle(n, {c});
    Perm flip = perm_identity(n);
    for (long i = 0; i < n; ++i) flip[i] = static_cast<std::uint8_t>((n - i) % n);
    return PermGroup(n, {rot, flip});
  }
  if (long n = parse_n("S_"); n >= 2) {
    if (n > 5) throw InputError("catalog: S_n supported for n <= 5");
    std::vector<std::uint8_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    return PermGroup(n, {detail::cycle(n, {c}), detail::cycle(n, {{0, 1}})});
  }
  if (name == "A_4")
    return PermGroup(4, {detail::cycle(4, {{0, 1}, {2, 3}}), detail::cycle(4, {{0, 1, 2}})});
  if (name == "A_5")
    return PermGroup(5, {detail::cycle(5, {{0, 1}, {2, 3}}), detail::cycle(5, {{0, 1, 2, 3, 4}})});
  if (name == "Q_8") {
    // Left-regular action on {1, i, j, k, -1, -i, -j, -k}.
    Perm i_gen = detail::cycle(8, {{0, 1, 4, 5}, {2, 3, 6, 7}});
    Perm j_gen = detail::cycle(8, {{0, 2, 4, 6}, {1, 7, 5, 3}});
    return PermGroup(8, {i_gen, j_gen});
  }
  // C_a x C_b on a + b points.
  if (auto x = name.find('x'); x != std::string::npos) {
    std::string left = name.substr(0, x), right = name.substr(x + 1);
    auto parse_cyclic = [](const std::string& s) -> long {
      if (s.rfind("C_", 0) != 0) return -1;
      const std::string rest = s.substr(2);
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return -1;
      return std::stol(rest);
    };
    long a = parse_cyclic(left), b = parse_cyclic(right);
    if (a >= 2 && b >= 2 && a <= 16 && b <= 16) {
      std::vector<std::uint8_t> ca(a), cb(b);
      std::iota(ca.begin(), ca.end(), 0);
      std::iota(cb.begin(), cb.end(), 0);
      auto gens = detail::product_generators(
          a, {detail::cycle(a, {ca})}, b, {detail::cycle(b, {cb})});
      return PermGroup(a + b, gens);
    }
  }
  throw InputError("unknown catalog group '" + name_in + "'");
}

// The groups exercised by the default verification runs.
inline std::vector<std::string> default_catalog() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("C_" + std::to_string(n));
  names.insert(names.end(), {"S_3", "S_4", "D_4", "D_5", "D_6", "Q_8", "A_4",
                             "C_2xC_2", "C_3xC_3"});
  return names;
}

inline std::vector<long> primes_dividing(std::size_t n) {
  std::vector<long> out;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      out.push_back(static_cast<long>(p));
      while (m % p == 0) m /= p;
    }
  if (m > 1) out.push_back(static_cast<long>(m));
  return out;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace ttg
