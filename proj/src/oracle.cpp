#include "quasicount/oracle.hpp"

#include <algorithm>
#include <set>
#include <numeric>

#include "quasicount/errors.hpp"

namespace quasicount::oracle {

namespace {

void check_bound(u64 n, u64 bound) {
  if (n == 0) throw DomainError("oracle: n must be positive");
  if (n > bound) {
    throw OracleBoundError("oracle: n = " + std::to_string(n) + " exceeds the oracle bound " +
                           std::to_string(bound));
  }
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// A zero-sum triple is determined by its first two entries.
std::size_t key(const std::array<u64, 3>& e, u64 n) { return static_cast<std::size_t>(e[0] * n + e[1]); }

std::array<u64, 3> act(const std::array<u64, 3>& e, u64 unit, const std::array<int, 3>& perm, u64 n) {
  return {unit * e[perm[0]] % n, unit * e[perm[1]] % n, unit * e[perm[2]] % n};
}

// Elements of Z/nZ with additive order exactly d.
std::vector<u64> elements_of_order(u64 d, u64 n) {
  std::vector<u64> out;
  const u64 step = n / d;
  for (u64 k = 0; k < d; ++k) {
    if (std::gcd(k, d) == 1) out.push_back(k * step);
  }
  return out;
}

}  // namespace

std::string GeneratingTriple::to_string() const {
  return "(" + std::to_string(entries[0]) + "," + std::to_string(entries[1]) + "," +
         std::to_string(entries[2]) + ")";
}

u64 element_order(u64 x, u64 n) { return n / std::gcd(x % n, n); }

std::vector<u64> units(u64 n) {
  if (n == 0) throw DomainError("units: n must be positive");
  if (n == 1) return {0};
  std::vector<u64> out;
  for (u64 u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

bool is_generating_triple(const GeneratingTriple& t, const Signature& sig) {
  const u64 n = t.modulus;
  if (n == 0) return false;
  const auto& e = t.entries;
  if (e[0] >= n || e[1] >= n || e[2] >= n) return false;
  if ((e[0] + e[1] + e[2]) % n != 0) return false;
  std::array<u64, 3> orders{element_order(e[0], n), element_order(e[1], n), element_order(e[2], n)};
  if (std::lcm(std::lcm(orders[0], orders[1]), orders[2]) != n) return false;
  std::sort(orders.begin(), orders.end());
  return orders == sig.periods();
}

std::vector<GeneratingTriple> enumerate_triples(u64 n, const Signature& sig, u64 bound) {
  check_bound(n, bound);
  if (!is_admissible(n, sig)) {
    throw DomainError("oracle: signature " + sig.to_string() + " is not admissible for n = " +
                      std::to_string(n));
  }
  std::vector<GeneratingTriple> out;
  std::array<u64, 3> order = sig.periods();
  do {
    const auto first = elements_of_order(order[0], n);
    const auto second = elements_of_order(order[1], n);
    for (u64 a : first) {
      for (u64 b : second) {
        const u64 c = (2 * n - a - b) % n;
        GeneratingTriple t{{a, b, c}, n};
        if (element_order(c, n) == order[2] && is_generating_triple(t, sig)) out.push_back(t);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitClass> orbit_classes(u64 n, const Signature& sig, u64 bound) {
  const auto triples = enumerate_triples(n, sig, bound);
  const auto group_units = units(n);
  std::vector<char> visited(static_cast<std::size_t>(n * n), 0);
  std::vector<OrbitClass> classes;
  for (const auto& t : triples) {
    if (visited[key(t.entries, n)]) continue;
    OrbitClass cls{t, 0};
    for (u64 u : group_units) {
      for (const auto& perm : kPermutations) {
        const auto image = act(t.entries, u, perm, n);
        auto& seen = visited[key(image, n)];
        if (seen) continue;
        seen = 1;
        ++cls.size;
        cls.canonical = std::min(cls.canonical, GeneratingTriple{image, n});
      }
    }
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.canonical < b.canonical; });
  return classes;
}

u64 count_classes(u64 n, const Signature& sig, u64 bound) { return orbit_classes(n, sig, bound).size(); }

u64 count_classes_burnside(u64 n, const Signature& sig, u64 bound) {
  const auto triples = enumerate_triples(n, sig, bound);
  const auto group_units = units(n);
  u64 fixed = 0;
  for (u64 u : group_units) {
    for (const auto& perm : kPermutations) {
      for (const auto& t : triples) {
        if (act(t.entries, u, perm, n) == t.entries) ++fixed;
      }
    }
  }
  const u64 order = group_units.size() * kPermutations.size();
  if (fixed % order != 0) {
    throw ConsistencyError("burnside: fixed-point total " + std::to_string(fixed) +
                           " not divisible by group order " + std::to_string(order));
  }
  return fixed / order;
}

namespace {

bool hyperbolic(const std::array<u64, 3>& o) {
  return o[1] * o[2] + o[0] * o[2] + o[0] * o[1] < o[0] * o[1] * o[2];
}

// Calls fn(triple, sorted orders) for every zero-sum triple of nonzero
// elements whose orders have lcm n, in lexicographic order.
template <typename Fn>
void for_each_generating_triple(u64 n, Fn&& fn) {
  for (u64 a = 1; a < n; ++a) {
    const u64 oa = element_order(a, n);
    for (u64 b = 1; b < n; ++b) {
      const u64 c = (2 * n - a - b) % n;
      if (c == 0) continue;
      std::array<u64, 3> o{oa, element_order(b, n), element_order(c, n)};
      if (std::lcm(std::lcm(o[0], o[1]), o[2]) != n) continue;
      std::sort(o.begin(), o.end());
      fn(std::array<u64, 3>{a, b, c}, o);
    }
  }
}

}  // namespace

std::vector<Signature> realized_signatures(u64 n, bool hyperbolic_only, u64 bound) {
  check_bound(n, bound);
  std::set<std::array<u64, 3>> seen;
  for_each_generating_triple(n, [&](const std::array<u64, 3>&, const std::array<u64, 3>& o) {
    if (!hyperbolic_only || hyperbolic(o)) seen.insert(o);
  });
  std::vector<Signature> out;
  for (const auto& o : seen) out.emplace_back(o[0], o[1], o[2]);
  return out;
}

u64 qc_oracle(u64 n, u64 bound) {
  check_bound(n, bound);
  const auto group_units = units(n);
  std::vector<char> visited(static_cast<std::size_t>(n * n), 0);
  u64 orbits = 0;
  for_each_generating_triple(n, [&](const std::array<u64, 3>& t, const std::array<u64, 3>& o) {
    if (!hyperbolic(o) || visited[key(t, n)]) return;
    ++orbits;
    for (u64 u : group_units) {
      for (const auto& perm : kPermutations) visited[key(act(t, u, perm, n), n)] = 1;
    }
  });
  return orbits;
}

u64 dessin_pairs_oracle(u64 n, u64 bound) {
  check_bound(n, bound);
  const auto group_units = units(n);
  std::vector<char> visited(static_cast<std::size_t>(n * n), 0);
  u64 orbits = 0;
  for (u64 s0 = 0; s0 < n; ++s0) {
    for (u64 s1 = 0; s1 < n; ++s1) {
      if (std::gcd(std::gcd(s0, s1), n) != 1) continue;
      if (visited[s0 * n + s1]) continue;
      ++orbits;
      for (u64 u : group_units) visited[(u * s0 % n) * n + u * s1 % n] = 1;
    }
  }
  return orbits;
}

}  // namespace quasicount::oracle
