#include "epx/ordinal.hpp"

#include <fmt/format.h>

#include "epx/errors.hpp"

namespace epx {

OrdinalMap::OrdinalMap(std::vector<int> values, int codomain_dim)
    : values_(std::move(values)), codomain_dim_(codomain_dim) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > codomain_dim_ || (i > 0 && values_[i] < values_[i - 1])) {
      throw DimensionMismatch("not a monotone ordinal map: " + to_string());
    }
  }
}

OrdinalMap OrdinalMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return OrdinalMap(std::move(v), n);
}

OrdinalMap OrdinalMap::coface(int n, int i) {
  std::vector<int> v;
  for (int j = 0; j <= n; ++j) {
    if (j != i) v.push_back(j);
  }
  return OrdinalMap(std::move(v), n);
}

OrdinalMap OrdinalMap::codegeneracy(int n, int i) {
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return OrdinalMap(std::move(v), n);
}

OrdinalMap OrdinalMap::constant(int n, int value) {
  return OrdinalMap(std::vector<int>(static_cast<std::size_t>(n + 1), value), value);
}

bool OrdinalMap::is_surjective() const noexcept {
  if (values_.empty()) return codomain_dim_ < 0;
  if (values_.front() != 0 || values_.back() != codomain_dim_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] - values_[i - 1] > 1) return false;
  }
  return true;
}

bool OrdinalMap::is_injective() const noexcept {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[i - 1]) return false;
  }
  return true;
}

bool OrdinalMap::is_identity() const noexcept {
  return domain_dim() == codomain_dim_ && is_injective();
}

std::string OrdinalMap::to_string() const {
  return fmt::format("[{}]->[{}]:({})", domain_dim(), codomain_dim_, fmt::join(values_, ","));
}

OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner) {
  if (inner.codomain_dim() != outer.domain_dim()) {
    throw DimensionMismatch("cannot compose " + outer.to_string() + " after " + inner.to_string());
  }
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int x : inner.values()) v.push_back(outer(x));
  return OrdinalMap(std::move(v), outer.codomain_dim());
}

std::pair<OrdinalMap, OrdinalMap> epi_mono(const OrdinalMap& theta) {
  std::vector<int> image;
  std::vector<int> surj;
  for (int x : theta.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  const int j = static_cast<int>(image.size()) - 1;
  return {OrdinalMap(std::move(surj), j), OrdinalMap(std::move(image), theta.codomain_dim())};
}

namespace {

void enumerate(int m, int n, std::vector<int>& prefix, std::vector<OrdinalMap>& out,
               bool surjective_only) {
  if (static_cast<int>(prefix.size()) == m + 1) {
    OrdinalMap map(prefix, n);
    if (!surjective_only || map.is_surjective()) out.push_back(std::move(map));
    return;
  }
  const int start = prefix.empty() ? 0 : prefix.back();
  for (int v = start; v <= n; ++v) {
    prefix.push_back(v);
    enumerate(m, n, prefix, out, surjective_only);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrdinalMap> all_ordinal_maps(int m, int n) {
  std::vector<OrdinalMap> out;
  std::vector<int> prefix;
  if (m >= 0 && n >= 0) enumerate(m, n, prefix, out, false);
  return out;
}

std::vector<OrdinalMap> all_surjections(int m, int n) {
  std::vector<OrdinalMap> out;
  std::vector<int> prefix;
  if (m >= 0 && n >= 0 && n <= m) enumerate(m, n, prefix, out, true);
  return out;
}

}  // namespace epx
