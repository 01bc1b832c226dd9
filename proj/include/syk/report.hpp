#pragma once

#include <map>
#include <string>
#include <vector>

#include "syk/element.hpp"

namespace syk {

struct Failure {
  std::string relation;
  std::vector<int> indices;
  Element residual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Pass/fail tally of exact identity checks.
///
/// Merging is order independent: failures are kept sorted by (relation, indices).
class VerifyReport {
 public:
  /// Records one instance; it passes iff residual is zero.
  void record(const std::string& relation, std::vector<int> indices, Element residual);
  void pass(const std::string& relation) { record(relation, {}, Element()); }
  void merge(const VerifyReport& other);

  std::size_t total() const { return total_; }
  std::size_t passed() const { return total_ - failures_.size(); }
  std::size_t failed() const { return failures_.size(); }
  bool ok() const { return failures_.empty(); }
  const std::vector<Failure>& failures() const { return failures_; }
  /// relation -> (total, failed).
  const std::map<std::string, std::pair<std::size_t, std::size_t>>& per_relation() const { return per_relation_; }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;

 private:
  std::size_t total_ = 0;
  std::vector<Failure> failures_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_relation_;
};

}  // namespace syk
