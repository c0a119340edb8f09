#pragma once

#include <map>
#include <string>
#include <vector>

#include "epx/sset.hpp"

namespace epx {

/// Finite partial order stored as a dense relation matrix.
class Poset {
 public:
  Poset() = default;
  /// leq is row-major n*n with leq[a*n+b] meaning a <= b. Not checked here.
  Poset(std::vector<std::string> names, std::vector<char> leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// Elements strictly above a, ascending.
  const std::vector<std::size_t>& above(std::size_t a) const { return above_.at(a); }

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<std::vector<std::size_t>> above_;
};

/// Empty string when reflexive, antisymmetric and transitive; otherwise a witness.
std::string check_poset(const Poset& p);

/// Poset of non-degenerate simplices with sigma <= tau iff sigma is reached from
/// tau by iterated faces (taking normal-form bases).
struct NondegPoset {
  Poset poset;
  std::vector<SimplexRef> elements;
  std::map<SimplexRef, std::size_t> element_of;
};

NondegPoset nondeg_poset(const TruncatedSSet& z);

/// Nerve truncated at `cap`: strictly increasing chains.
TruncatedSSet nerve_of_poset(const Poset& p, int cap);

/// Monotone map between posets: true iff a <= b implies f(a) <= f(b).
bool is_order_preserving(const Poset& source, const Poset& target,
                         const std::vector<std::size_t>& f);

}  // namespace epx
