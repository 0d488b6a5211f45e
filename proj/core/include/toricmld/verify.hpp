#pragma once

// Seeded random generation of toric log pairs and checkers for the
// structural properties of minimal log discrepancies on them.
//
// Randomness: std::mt19937_64 seeded per instance with
// splitmix64(seed + instance · 0x9E3779B97F4A7C15), with bounded draws done
// by rejection sampling (no std::*_distribution, whose output is
// implementation-defined). The same seed gives the same pairs everywhere.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricmld/logpair.hpp"

namespace toricmld::verify {

enum class CoefficientMode { ZeroBoundary, RandomRationals, AllOnes };

struct GenConfig {
  std::size_t rank = 3;        // 2..5
  std::size_t max_rays = 8;
  CoefficientMode coefficients = CoefficientMode::RandomRationals;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  long coordinate_bound = 3;  // ray coordinates in [-B, B]
  long max_denominator = 12;
  long max_index = 500;
  std::size_t retry_budget = 200;
};

struct GeneratedPair {
  std::uint64_t instance_seed;
  ToricLogPair pair;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance);

/// One pair from an instance seed. Throws ErrorCode::GenerationExhausted if
/// no valid fan is found within the retry budget.
GeneratedPair gen_pair(const GenConfig& cfg, std::uint64_t seed);
std::vector<GeneratedPair> gen_pairs(const GenConfig& cfg);

struct Violation {
  std::string detail;     // cone(s) and exact values
  std::string pair_dump;  // pair file text, replayable
};

struct PropertyResult {
  std::string property;
  std::size_t instances = 0;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void merge(const PropertyResult& other);
};

/// a_σ + codim σ <= a_τ + codim τ for every face τ of σ.
PropertyResult check_lsc(const ToricLogPair& p);
/// 0 <= a_σ <= dim σ; equality implies a_i = 1 on every ray of σ, and on a
/// nonsingular σ with all a_i = 1 equality holds.
PropertyResult check_bound(const ToricLogPair& p);
/// a_σ > dim σ - 1 implies σ smooth.
PropertyResult check_nonsingularity_criterion(const ToricLogPair& p);
/// a_σ recomputed as min over interior cells of a resolution of the sum of
/// φ over the cell's rays.
PropertyResult check_resolution_oracle(const ToricLogPair& p);
/// a_{σ×τ} = a_σ + a_τ for every cone pair.
PropertyResult check_product(const ToricLogPair& p, const ToricLogPair& q);
/// a_σ = Σ a_i over the rays of every smooth cone.
PropertyResult check_smooth_closed_form(const ToricLogPair& p);
/// Subdividing at the witness of σ yields a ray with log discrepancy a_σ.
PropertyResult check_witness(const ToricLogPair& p);
/// Spectrum is the image of the closed-point mld; strata partition the cones;
/// the face-chain equality propagates through intermediate faces.
PropertyResult check_stratification(const ToricLogPair& p);

/// Names accepted by run_property: lsc, bound, nonsingular, resolution,
/// smooth-sum, witness, strata. ("product" needs two pairs.)
const std::vector<std::string>& single_pair_properties();
PropertyResult run_property(const std::string& name, const ToricLogPair& p);

}  // namespace toricmld::verify
