#pragma once

// Line-oriented text format for toric log pairs. See docs/FORMATS.md for the
// grammar. Example:
//
//   # A1 surface singularity, no boundary
//   name A1
//   rank 2
//   ray 1 0
//   ray 1 2
//   cone 0 1
//   boundary 0 0

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toricmld/logpair.hpp"

namespace toricmld {

struct PairFile {
  std::string name = "pair";
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> cones;  // file ray indices, maximal cones
  std::vector<Rational> boundary;               // b_i, aligned with rays
};

/// Syntax and file-level validation (ray rank, primitivity, indices, boundary
/// length, every ray used). Throws ErrorCode::Parse with a line number.
PairFile parse_pair_file(std::string_view text);

std::string serialize_pair_file(const PairFile& file);

/// The fan described by the file plus the map fan ray index -> file ray index.
struct FileFan {
  Fan fan;
  std::vector<std::size_t> file_ray;
};

/// Throws NotAFan / NotPointed for geometric problems, and NotAFan when a
/// listed ray is not an extreme ray of its cone.
FileFan build_fan(const PairFile& file, FanCheck check = FanCheck::Validate);

/// Throws CoefficientOutOfRange / NotRCartier.
ToricLogPair build_pair(const PairFile& file, const FileFan& fan);

/// Canonical file: rays in fan order, maximal cones in fan order.
PairFile to_pair_file(const Fan& fan, std::vector<Rational> boundary, std::string name);
PairFile to_pair_file(const ToricLogPair& pair, std::string name);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

}  // namespace toricmld
