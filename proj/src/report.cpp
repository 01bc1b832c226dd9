#include "syk/report.hpp"

#include <algorithm>
#include <tuple>

namespace syk {

namespace {

bool failure_less(const Failure& a, const Failure& b) {
  return std::tie(a.relation, a.indices) < std::tie(b.relation, b.indices);
}

}  // namespace

void VerifyReport::record(const std::string& relation, std::vector<int> indices, Element residual) {
  ++total_;
  auto& counts = per_relation_[relation];
  ++counts.first;
  if (residual.is_zero()) return;
  ++counts.second;
  Failure f{relation, std::move(indices), std::move(residual)};
  failures_.insert(std::upper_bound(failures_.begin(), failures_.end(), f, failure_less), std::move(f));
}

void VerifyReport::merge(const VerifyReport& other) {
  total_ += other.total_;
  for (const auto& [rel, counts] : other.per_relation_) {
    auto& mine = per_relation_[rel];
    mine.first += counts.first;
    mine.second += counts.second;
  }
  std::vector<Failure> merged;
  merged.reserve(failures_.size() + other.failures_.size());
  std::merge(failures_.begin(), failures_.end(), other.failures_.begin(), other.failures_.end(),
             std::back_inserter(merged), failure_less);
  failures_ = std::move(merged);
}

}  // namespace syk
