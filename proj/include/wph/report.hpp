#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wph/poly.hpp"
#include "wph/weights.hpp"

namespace wph {

struct AnalyzeOptions {
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 19;  // inclusive
  long coefficient_bound = 9;
  bool run_probe = true;
};

struct AnalyzeResult {
  std::string json;  // sorted keys, exact integers, rationals as "p/q"
  int status;        // 0 ok; 3 unsupported singularities (partial report)
};

// Full report for one family: strata, singular curves, moduli, Hodge ranks,
// the intersection block when a scroll model exists, and the automorphism
// block over the seed range.  Deterministic given the options.
AnalyzeResult analyze(const HypersurfaceFamily& fam,
                      const AnalyzeOptions& opts = {});

// Human-readable digest of an analyze() report.
std::string render_text(const std::string& json_report);

// Serialization of a polynomial as a list of {exponents, coeff} entries with
// decimal-free "p/q" coefficient strings.
std::string poly_json(const SparsePoly& p);

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};

// Cross-module consistency suite; every row is an exact integer identity.
std::vector<CriterionResult> consistency_suite();

bool all_passed(const std::vector<CriterionResult>& rows);

// Presets: "x8" (1,1,2,2,2; 8), "x12" (1,1,2,2,6; 12), "x14" (1,2,2,2,7; 14),
// "quintic" (1,1,1,1,1; 5).  Throws std::invalid_argument on anything else.
HypersurfaceFamily preset_family(const std::string& name);

}  // namespace wph
