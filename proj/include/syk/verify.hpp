#pragma once

#include <string>

#include "syk/gauss.hpp"
#include "syk/report.hpp"
#include "syk/yangian.hpp"

namespace syk {

enum class Suite { kLevi, kEven, kMn11, kM2n1, kPresentation, kQuaternary, kAll };

std::string suite_name(Suite s);
/// "levi", "even", "mn11", "m2n1", "thm73", "lemma72", "all". Throws ParseError.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  /// 0 means SYK_WORKERS, or 1 when unset.
  int workers = 0;
  GeneratorOrder order = GeneratorOrder::kRIJ;
};

/// SYK_WORKERS if set to a positive integer, else 1.
int default_workers();

/// D^(0) = 1, D D' = 1, the D-D commutators inside and across blocks.
VerifyReport verify_levi(const Composition& mu, int K, const VerifyOptions& opts = {});
/// Non-super block relations on the even part, and on the odd part through
/// the swap map applied to the reversed composition.
VerifyReport verify_block_even(const Composition& mu, int K, const VerifyOptions& opts = {});
/// Single even and single odd block. Throws WrongShape otherwise.
VerifyReport verify_mn11(const Composition& mu, int K, const VerifyOptions& opts = {});
/// Two even blocks and one odd block, or the swapped shape via the swap map.
/// Throws WrongShape otherwise.
VerifyReport verify_m2n1(const Composition& mu, int K, const VerifyOptions& opts = {});
/// The full coefficient presentation, its generating-series form, and their
/// agreement through the difference-quotient kernel.
VerifyReport verify_presentation(const Composition& mu, int K, const VerifyOptions& opts = {});
/// The quaternary odd-block relations. Throws WrongShape unless m > 1 and n > 1.
VerifyReport verify_quaternary(const Composition& mu, int K, const VerifyOptions& opts = {});

/// kAll runs every suite whose shape precondition mu satisfies.
VerifyReport verify_suite(Suite s, const Composition& mu, int K, const VerifyOptions& opts = {});

}  // namespace syk
