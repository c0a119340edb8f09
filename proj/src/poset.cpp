#include "epx/poset.hpp"

#include <algorithm>
#include <cstdint>

#include <fmt/format.h>

namespace epx {

Poset::Poset(std::vector<std::string> names, std::vector<char> leq)
    : names_(std::move(names)), leq_(std::move(leq)), above_(names_.size()) {
  const std::size_t n = names_.size();
  if (leq_.size() != n * n) throw std::invalid_argument("poset relation has the wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a * n + b]) above_[a].push_back(b);
    }
  }
}

std::string check_poset(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.leq(a, a)) return "not reflexive at " + p.name(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.leq(a, b) && p.leq(b, a)) return "not antisymmetric at " + p.name(a) + ", " + p.name(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : p.above(a)) {
      for (std::size_t c : p.above(b)) {
        if (!p.leq(a, c)) {
          return "not transitive at " + p.name(a) + " <= " + p.name(b) + " <= " + p.name(c);
        }
      }
    }
  }
  return {};
}

NondegPoset nondeg_poset(const TruncatedSSet& z) {
  NondegPoset out;
  for (int n = 0; n <= z.cap(); ++n) {
    for (int i = 0; i < static_cast<int>(z.count(n)); ++i) {
      out.element_of[{n, i}] = out.elements.size();
      out.elements.push_back({n, i});
    }
  }
  const std::size_t size = out.elements.size();
  const std::size_t words = (size + 63) / 64;
  // down[e] = bitset of everything reachable from e by iterated faces, e included
  std::vector<std::vector<std::uint64_t>> down(size, std::vector<std::uint64_t>(words, 0));
  for (std::size_t e = 0; e < size; ++e) {
    down[e][e / 64] |= std::uint64_t{1} << (e % 64);
    const SimplexRef ref = out.elements[e];
    if (ref.dim == 0) continue;
    for (const auto& f : z.simplex(ref).faces) {
      const auto& sub = down[out.element_of.at(f.base)];
      for (std::size_t w = 0; w < words; ++w) down[e][w] |= sub[w];
    }
  }
  std::vector<char> leq(size * size, 0);
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t b = 0; b < size; ++b) {
    names.push_back(z.simplex(out.elements[b]).name);
    for (std::size_t a = 0; a < size; ++a) {
      if (down[b][a / 64] >> (a % 64) & 1u) leq[a * size + b] = 1;
    }
  }
  out.poset = Poset(std::move(names), std::move(leq));
  return out;
}

namespace {

void extend_chains(const Poset& p, std::vector<int>& chain, int cap,
                   std::vector<std::vector<std::vector<int>>>& out) {
  const int n = static_cast<int>(chain.size()) - 1;
  if (n >= 1) out[static_cast<std::size_t>(n)].push_back(chain);
  if (n == cap) return;
  for (std::size_t next : p.above(static_cast<std::size_t>(chain.back()))) {
    chain.push_back(static_cast<int>(next));
    extend_chains(p, chain, cap, out);
    chain.pop_back();
  }
}

}  // namespace

TruncatedSSet nerve_of_poset(const Poset& p, int cap) {
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(cap + 1));
  std::vector<int> chain;
  for (std::size_t a = 0; a < p.size(); ++a) {
    chain.assign(1, static_cast<int>(a));
    extend_chains(p, chain, cap, tuples);
  }
  for (auto& lvl : tuples) std::sort(lvl.begin(), lvl.end());
  return tuple_complex(p.names(), tuples, cap);
}

bool is_order_preserving(const Poset& source, const Poset& target,
                         const std::vector<std::size_t>& f) {
  if (f.size() != source.size()) return false;
  for (std::size_t a = 0; a < source.size(); ++a) {
    if (f[a] >= target.size()) return false;
    for (std::size_t b : source.above(a)) {
      if (!target.leq(f[a], f[b])) return false;
    }
  }
  return true;
}

}  // namespace epx
