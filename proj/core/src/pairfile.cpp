#include "toricmld/pairfile.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "toricmld/error.hpp"

namespace toricmld {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message);
}

Integer parse_int(std::string_view word, std::size_t line) {
  try {
    Rational q = parse_rational(word);
    if (word.find('/') != std::string_view::npos) fail(line, "expected an integer, got '" + std::string(word) + "'");
    return q.get_num();
  } catch (const Error&) {
    fail(line, "expected an integer, got '" + std::string(word) + "'");
  }
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  Integer v = parse_int(word, line);
  if (v < 0 || !v.fits_ulong_p()) fail(line, "bad index '" + std::string(word) + "'");
  return v.get_ui();
}

}  // namespace

PairFile parse_pair_file(std::string_view text) {
  PairFile file;
  bool have_rank = false, have_boundary = false, have_name = false;
  std::vector<std::size_t> ray_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string_view key = words.front();

    if (key == "name") {
      if (have_name || words.size() != 2) fail(line_no, "'name' takes exactly one token and appears once");
      file.name = std::string(words[1]);
      have_name = true;
    } else if (key == "rank") {
      if (have_rank || words.size() != 2) fail(line_no, "'rank' takes one integer and appears once");
      if (!file.rays.empty()) fail(line_no, "'rank' must precede the rays");
      file.rank = parse_index(words[1], line_no);
      have_rank = true;
    } else if (key == "ray") {
      if (!have_rank) fail(line_no, "'ray' before 'rank'");
      if (!file.cones.empty() || have_boundary) fail(line_no, "rays must precede cones and boundary");
      if (words.size() != file.rank + 1) fail(line_no, "ray needs " + std::to_string(file.rank) + " coordinates");
      LatticeVector v(file.rank);
      for (std::size_t i = 0; i < file.rank; ++i) v[i] = parse_int(words[i + 1], line_no);
      const std::size_t index = file.rays.size();
      if (v.is_zero()) fail(line_no, "ray " + std::to_string(index) + " is zero");
      if (content(v) != 1) fail(line_no, "ray " + std::to_string(index) + " " + to_string(v) + " is not primitive");
      if (std::find(file.rays.begin(), file.rays.end(), v) != file.rays.end()) {
        fail(line_no, "ray " + std::to_string(index) + " " + to_string(v) + " is listed twice");
      }
      file.rays.push_back(std::move(v));
      ray_lines.push_back(line_no);
    } else if (key == "cone") {
      if (have_boundary) fail(line_no, "cones must precede the boundary");
      if (words.size() < 2) fail(line_no, "cone needs at least one ray index");
      std::vector<std::size_t> cone;
      for (std::size_t i = 1; i < words.size(); ++i) {
        std::size_t r = parse_index(words[i], line_no);
        if (r >= file.rays.size()) fail(line_no, "cone refers to unknown ray " + std::to_string(r));
        cone.push_back(r);
      }
      std::sort(cone.begin(), cone.end());
      if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) fail(line_no, "cone repeats a ray");
      file.cones.push_back(std::move(cone));
    } else if (key == "boundary") {
      if (have_boundary) fail(line_no, "'boundary' appears twice");
      if (words.size() != file.rays.size() + 1) {
        fail(line_no, "boundary needs " + std::to_string(file.rays.size()) + " values, got " + std::to_string(words.size() - 1));
      }
      for (std::size_t i = 1; i < words.size(); ++i) {
        try {
          file.boundary.push_back(parse_rational(words[i]));
        } catch (const Error& e) {
          fail(line_no, "boundary value " + std::to_string(i - 1) + ": " + e.message());
        }
      }
      have_boundary = true;
    } else {
      fail(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_rank) fail(line_no, "missing 'rank'");
  if (!have_boundary) {
    if (!file.rays.empty()) fail(line_no, "missing 'boundary'");
  }
  std::vector<bool> used(file.rays.size(), false);
  for (const auto& c : file.cones)
    for (std::size_t r : c) used[r] = true;
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) fail(ray_lines[r], "ray " + std::to_string(r) + " is not in any cone");
  return file;
}

std::string serialize_pair_file(const PairFile& file) {
  std::ostringstream os;
  os << "name " << file.name << '\n';
  os << "rank " << file.rank << '\n';
  for (const auto& r : file.rays) {
    os << "ray";
    for (const auto& x : r.coords()) os << ' ' << x;
    os << '\n';
  }
  for (const auto& c : file.cones) {
    os << "cone";
    for (std::size_t i : c) os << ' ' << i;
    os << '\n';
  }
  os << "boundary";
  for (const auto& b : file.boundary) os << ' ' << b.get_str();
  os << '\n';
  return os.str();
}

FileFan build_fan(const PairFile& file, FanCheck check) {
  std::vector<Cone> cones;
  for (std::size_t k = 0; k < file.cones.size(); ++k) {
    std::vector<LatticeVector> gens;
    for (std::size_t r : file.cones[k]) gens.push_back(file.rays[r]);
    Cone c;
    try {
      c = Cone::make(file.rank, gens);
    } catch (const Error& e) {
      throw Error(e.code(), "cone " + std::to_string(k) + ": " + e.message());
    }
    if (c.rays().size() != gens.size()) {
      for (std::size_t r : file.cones[k]) {
        if (!std::binary_search(c.rays().begin(), c.rays().end(), file.rays[r])) {
          throw Error(ErrorCode::NotAFan, "cone " + std::to_string(k) + ": ray " + std::to_string(r) + " is not an extreme ray");
        }
      }
    }
    cones.push_back(std::move(c));
  }
  FileFan out{Fan::from_cones(file.rank, std::move(cones), check), {}};
  for (const auto& ray : out.fan.rays()) {
    auto it = std::find(file.rays.begin(), file.rays.end(), ray);
    out.file_ray.push_back(static_cast<std::size_t>(it - file.rays.begin()));
  }
  return out;
}

ToricLogPair build_pair(const PairFile& file, const FileFan& fan) {
  std::vector<Rational> boundary;
  for (std::size_t r = 0; r < fan.file_ray.size(); ++r) {
    const Rational& b = file.boundary.at(fan.file_ray[r]);
    if (b < 0 || b > 1) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "ray " + std::to_string(fan.file_ray[r]) + " has boundary coefficient " + b.get_str() + " outside [0,1]");
    }
    boundary.push_back(b);
  }
  try {
    return ToricLogPair::make(fan.fan, std::move(boundary));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRCartier) throw;
  }
  for (std::size_t k = 0; k < file.cones.size(); ++k) {
    std::vector<LatticeVector> rows;
    std::vector<Rational> rhs;
    for (std::size_t r : file.cones[k]) {
      rows.push_back(file.rays[r]);
      rhs.push_back(Rational(1 - file.boundary[r]));
    }
    if (!solve_rational(IntMatrix::from_rows(rows, file.rank), rhs)) {
      throw Error(ErrorCode::NotRCartier, "cone " + std::to_string(k) + ": no linear form takes the values 1 - b_i on its rays");
    }
  }
  throw Error(ErrorCode::NotRCartier, "K + B is not Q-Cartier");
}

PairFile to_pair_file(const Fan& fan, std::vector<Rational> boundary, std::string name) {
  PairFile file;
  file.name = std::move(name);
  file.rank = fan.rank();
  file.rays = fan.rays();
  for (std::size_t m : fan.maximal_cones()) {
    if (fan.cone(m).is_zero()) continue;
    file.cones.push_back(fan.cone_ray_indices(m));
  }
  file.boundary = std::move(boundary);
  return file;
}

PairFile to_pair_file(const ToricLogPair& pair, std::string name) {
  return to_pair_file(pair.fan(), pair.boundary(), std::move(name));
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace toricmld
