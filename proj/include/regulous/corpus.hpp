#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regulous/rat.hpp"

namespace regulous {

/// A regression function with its expected resolution and classification data.
struct CorpusEntry {
  std::string name;
  std::string expr;
  bool regulous = true;
  unsigned stages = 0;
  std::vector<Point> poles;
  /// Expected limits at the poles (regulous entries only).
  std::map<Point, Rat> limits;
  /// Denominator locally definite at every pole.
  bool one_blowup = true;
  unsigned k_max = 1;
  /// Expected max_verified_k at k_max (regulous entries only).
  std::optional<unsigned> max_verified_k;
};

const std::vector<CorpusEntry>& corpus();

/// Certification fixtures: nonnegative functions written with explicit sums of squares.
struct CertifyFixture {
  std::string name;
  std::string expr;
  /// Expected number of certificate terms; nullopt when certification must be refused.
  std::optional<std::size_t> terms;
  std::size_t eliminated = 0;
  /// Error kind expected when refused.
  std::string refusal;
};

const std::vector<CertifyFixture>& certify_fixtures();

}  // namespace regulous
