#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "toricmld/toricmld.hpp"

namespace toricmld::cli {

namespace {

using json = nlohmann::ordered_json;

struct Input {
  std::string path;
  std::string text;
  PairFile file;
};

struct LoadedFan {
  Input input;
  FileFan ff;
  std::vector<std::size_t> fan_ray;  // file ray index -> fan ray index
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::Parse, "cannot write " + path);
}

Input load_input(const std::string& path) {
  Input in{path, read_file(path), {}};
  try {
    in.file = parse_pair_file(in.text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
  return in;
}

LoadedFan load_fan(const std::string& path) {
  LoadedFan l{load_input(path), {}, {}};
  l.ff = build_fan(l.input.file);
  l.fan_ray.assign(l.input.file.rays.size(), 0);
  for (std::size_t j = 0; j < l.ff.file_ray.size(); ++j) l.fan_ray[l.ff.file_ray[j]] = j;
  return l;
}

std::vector<std::size_t> file_rays_of(const LoadedFan& l, std::size_t cone) {
  std::vector<std::size_t> out;
  for (std::size_t j : l.ff.fan.cone_ray_indices(cone)) out.push_back(l.ff.file_ray[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string cone_label(const LoadedFan& l, std::size_t cone) {
  std::string s = "{";
  auto rays = file_rays_of(l, cone);
  for (std::size_t k = 0; k < rays.size(); ++k) s += (k ? "," : "") + std::to_string(rays[k]);
  return s + "}";
}

json cone_json(const LoadedFan& l, std::size_t cone) {
  json a = json::array();
  for (std::size_t r : file_rays_of(l, cone)) a.push_back(std::to_string(r));
  return a;
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v.coords()) a.push_back(x.get_str());
  return a;
}

json header(const Input& in) {
  return json{{"tool", "toricmld"},
              {"version", TORICMLD_VERSION},
              {"input_digest", input_digest(in.text)},
              {"name", in.file.name},
              {"rank", std::to_string(in.file.rank)}};
}

std::size_t select_cone(const LoadedFan& l, const std::string& selector) {
  std::vector<std::size_t> fan_rays;
  std::stringstream ss(selector);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long r = 0;
    try {
      r = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw Error(ErrorCode::Parse, "bad cone selector '" + selector + "'");
    if (r >= l.fan_ray.size()) throw Error(ErrorCode::Parse, "cone selector names unknown ray " + item);
    fan_rays.push_back(l.fan_ray[r]);
  }
  auto idx = l.ff.fan.find_by_rays(fan_rays);
  if (!idx) throw Error(ErrorCode::ConeNotInFan, "no cone of the fan has exactly the rays " + selector);
  return *idx;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string index_string(const Cone& c) { return c.is_simplicial() ? box_points(c).index.get_str() : std::string("-"); }

json index_json(const Cone& c) {
  if (!c.is_simplicial()) return nullptr;
  return box_points(c).index.get_str();
}

json mld_record(const LoadedFan& l, const MldReport& rep, std::size_t i) {
  const Cone& c = l.ff.fan.cone(i);
  return json{{"rays", cone_json(l, i)},
              {"dim", std::to_string(c.dim())},
              {"a_sigma", to_string(rep.orbit_mld[i])},
              {"closed_point_mld", to_string(rep.closed_point_mld[i])},
              {"witness", vector_json(rep.witness[i])},
              {"smooth", is_smooth_cone(c)},
              {"index", index_json(c)}};
}

json strata_json(const LoadedFan& l, const MldReport& rep) {
  json out = json::array();
  for (const auto& [value, members] : rep.strata) {
    json cones = json::array();
    for (std::size_t i : members) cones.push_back(cone_json(l, i));
    out.push_back(json{{"value", to_string(value)}, {"cones", cones}});
  }
  return out;
}

json spectrum_json(const MldReport& rep) {
  json out = json::array();
  for (const auto& v : rep.spectrum) out.push_back(to_string(v));
  return out;
}

json classification_json(const LoadedFan& l, const MldReport& rep, const Classification& c) {
  json violations = json::object();
  auto add = [&](const char* name, const std::optional<std::size_t>& v) {
    if (v) violations[name] = json{{"cone", cone_json(l, *v)}, {"a_sigma", to_string(rep.orbit_mld[*v])}};
  };
  add("klt", c.klt_violation);
  add("canonical", c.canonical_violation);
  add("terminal", c.terminal_violation);
  return json{{"log_canonical", c.log_canonical},
              {"klt", c.klt},
              {"canonical", c.canonical},
              {"terminal", c.terminal},
              {"violations", violations}};
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], r[k].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::string cell = r[k];
      if (k + 1 < r.size()) cell.resize(width[k] + 2, ' ');
      line += cell;
    }
    out << line << '\n';
  }
}

void print_title(std::ostream& out, const LoadedFan& l) {
  out << l.input.file.name << "  rank " << l.input.file.rank << "  " << l.ff.fan.rays().size() << " rays  "
      << l.ff.fan.cones().size() << " cones  " << input_digest(l.input.text) << '\n';
}

std::string classification_line(const LoadedFan& l, const MldReport& rep, const char* name, bool flag,
                                 const std::optional<std::size_t>& v) {
  std::string s = std::string(name) + ": " + yes_no(flag);
  if (v) s += " (cone " + cone_label(l, *v) + ": a_sigma = " + to_string(rep.orbit_mld[*v]) + ")";
  return s;
}

// Boundary for a refinement: old rays keep b, new rays get 1 - φ(v).
std::vector<Rational> pullback_boundary(const ToricLogPair& pair, const Fan& target) {
  std::vector<Rational> b;
  for (const auto& r : target.rays()) {
    auto old = pair.fan().ray_index(r);
    b.push_back(old ? pair.boundary()[*old] : Rational(1 - pair.log_discrepancy_at(r)));
  }
  return b;
}

struct Options {
  std::string file, file_b, output = "-", cone, props, coeffs = "random";
  std::vector<std::string> files;
  bool all = false, as_json = false, random = false;
  std::size_t rank = 3, count = 10, max_rays = 8;
  std::uint64_t seed = 0;
};

int cmd_mld(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  MldReport rep = report(build_pair(l.input.file, l.ff));
  std::vector<std::size_t> selected;
  if (!o.cone.empty() && !o.all) {
    selected.push_back(select_cone(l, o.cone));
  } else {
    for (std::size_t i = 0; i < l.ff.fan.cones().size(); ++i) selected.push_back(i);
  }
  if (o.as_json) {
    json j = header(l.input);
    j["cones"] = json::array();
    for (std::size_t i : selected) j["cones"].push_back(mld_record(l, rep, i));
    out << j.dump(2) << '\n';
    return kOk;
  }
  print_title(out, l);
  std::vector<std::vector<std::string>> rows{{"cone", "dim", "a_sigma", "closed_point_mld", "witness"}};
  for (std::size_t i : selected) {
    rows.push_back({cone_label(l, i), std::to_string(l.ff.fan.cone(i).dim()), to_string(rep.orbit_mld[i]),
                    to_string(rep.closed_point_mld[i]), to_string(rep.witness[i])});
  }
  print_table(out, rows);
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  MldReport rep = report(build_pair(l.input.file, l.ff));
  Classification cls = classify(l.ff.fan, rep);
  json j = header(l.input);
  json rays = json::array();
  for (std::size_t r = 0; r < l.input.file.rays.size(); ++r) {
    const Rational& b = l.input.file.boundary[r];
    rays.push_back(json{{"index", std::to_string(r)}, {"coords", vector_json(l.input.file.rays[r])}, {"b", to_string(b)}, {"a", to_string(Rational(1 - b))}});
  }
  j["rays"] = rays;
  j["cones"] = json::array();
  for (std::size_t i = 0; i < l.ff.fan.cones().size(); ++i) j["cones"].push_back(mld_record(l, rep, i));
  j["spectrum"] = spectrum_json(rep);
  j["strata"] = strata_json(l, rep);
  j["classification"] = classification_json(l, rep, cls);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  MldReport rep = report(build_pair(l.input.file, l.ff));
  if (o.as_json) {
    json j = header(l.input);
    j["spectrum"] = spectrum_json(rep);
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::string s;
  for (const auto& v : rep.spectrum) s += (s.empty() ? "" : ", ") + to_string(v);
  out << "spectrum: {" << s << "}\n";
  return kOk;
}

int cmd_stratify(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  MldReport rep = report(build_pair(l.input.file, l.ff));
  if (o.as_json) {
    json j = header(l.input);
    j["strata"] = strata_json(l, rep);
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& [value, members] : rep.strata) {
    out << to_string(value) << ":";
    for (std::size_t i : members) out << ' ' << cone_label(l, i);
    out << '\n';
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  MldReport rep = report(build_pair(l.input.file, l.ff));
  Classification c = classify(l.ff.fan, rep);
  if (o.as_json) {
    json j = header(l.input);
    j["classification"] = classification_json(l, rep, c);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "log canonical: " << yes_no(c.log_canonical) << '\n';
  out << classification_line(l, rep, "klt", c.klt, c.klt_violation) << '\n';
  out << classification_line(l, rep, "canonical", c.canonical, c.canonical_violation) << '\n';
  out << classification_line(l, rep, "terminal", c.terminal, c.terminal_violation) << '\n';
  return kOk;
}

int cmd_smooth(const Options& o, std::ostream& out) {
  LoadedFan l = load_fan(o.file);
  const Fan& fan = l.ff.fan;
  if (o.as_json) {
    json j = header(l.input);
    j["smooth"] = fan.is_smooth();
    j["cones"] = json::array();
    for (std::size_t i = 0; i < fan.cones().size(); ++i) {
      const Cone& c = fan.cone(i);
      j["cones"].push_back(json{{"rays", cone_json(l, i)},
                                {"dim", std::to_string(c.dim())},
                                {"simplicial", c.is_simplicial()},
                                {"smooth", is_smooth_cone(c)},
                                {"index", index_json(c)},
                                {"box_size", index_json(c)}});
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  print_title(out, l);
  std::vector<std::vector<std::string>> rows{{"cone", "dim", "simplicial", "smooth", "index", "box_size"}};
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const Cone& c = fan.cone(i);
    rows.push_back({cone_label(l, i), std::to_string(c.dim()), yes_no(c.is_simplicial()), yes_no(is_smooth_cone(c)), index_string(c),
                    index_string(c)});
  }
  print_table(out, rows);
  out << "fan is " << (fan.is_smooth() ? "smooth" : "not smooth") << '\n';
  return kOk;
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err) {
  LoadedFan l = load_fan(o.file);
  ToricLogPair pair = build_pair(l.input.file, l.ff);
  Subdivision sub = resolve(l.ff.fan);
  PairFile result = to_pair_file(sub.target, pullback_boundary(pair, sub.target), l.input.file.name + "_resolved");
  std::ostream& info = o.output == "-" ? err : out;
  info << "resolved " << l.input.file.name << ": " << sub.new_rays.size() << " new rays, " << sub.target.maximal_cones().size()
       << " maximal cones, all smooth\n";
  for (const auto& r : sub.new_rays) info << "  new ray " << to_string(r) << "  a = " << to_string(pair.log_discrepancy_at(r)) << '\n';
  write_file(o.output, serialize_pair_file(result), out);
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  LoadedFan l = load_fan(o.file);
  ToricLogPair pair = build_pair(l.input.file, l.ff);
  std::size_t idx = select_cone(l, o.cone);
  if (idx == 0) throw Error(ErrorCode::Parse, "the zero cone has no witness to subdivide at");
  OrbitMld m = mld_orbit(pair, idx);
  LatticeVector ray = primitive(m.witness);
  std::ostream& info = o.output == "-" ? err : out;
  info << "cone " << cone_label(l, idx) << ": a_sigma = " << to_string(m.value) << ", witness " << to_string(m.witness) << '\n';
  if (auto existing = l.ff.fan.ray_index(ray)) {
    info << "notice: the witness is the existing ray " << l.ff.file_ray[*existing] << "; no subdivision needed\n";
    write_file(o.output, serialize_pair_file(to_pair_file(pair, l.input.file.name)), out);
    return kOk;
  }
  Subdivision sub = stellar_subdivide(l.ff.fan, m.witness);
  Rational a_new = pair.log_discrepancy_at(ray);
  info << "new ray " << to_string(ray) << ": a = " << to_string(a_new) << '\n';
  PairFile result = to_pair_file(sub.target, pullback_boundary(pair, sub.target), l.input.file.name + "_blowup");
  write_file(o.output, serialize_pair_file(result), out);
  return kOk;
}

int cmd_product(const Options& o, std::ostream& out, std::ostream& err) {
  LoadedFan a = load_fan(o.file), b = load_fan(o.file_b);
  ToricLogPair pa = build_pair(a.input.file, a.ff), pb = build_pair(b.input.file, b.ff);
  const std::size_t rank = pa.rank() + pb.rank();
  if (rank >= 8) err << "warning: product rank " << rank << " >= 8; cone enumeration may be slow\n";
  ToricLogPair p = product(pa, pb);
  write_file(o.output, serialize_pair_file(to_pair_file(p, a.input.file.name + "_x_" + b.input.file.name)), out);
  return kOk;
}

std::vector<std::string> parse_props(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  const auto& known = verify::single_pair_properties();
  while (std::getline(ss, item, ',')) {
    if (item != "product" && std::find(known.begin(), known.end(), item) == known.end()) {
      throw Error(ErrorCode::Parse, "unknown property '" + item + "' in --props");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty() || list.back() == ',') throw Error(ErrorCode::Parse, "malformed --props list '" + list + "'");
  return out;
}

struct Instance {
  std::string label;  // file path or instance seed
  ToricLogPair pair;
};

int cmd_verify(const Options& o, std::ostream& out) {
  auto props = parse_props(o.props);
  if (o.random == !o.files.empty()) throw Error(ErrorCode::Parse, "verify needs either --random or --file");

  std::vector<Instance> instances;
  json inputs = json::array();
  verify::GenConfig cfg;
  if (o.random) {
    cfg.rank = o.rank;
    cfg.count = o.count;
    cfg.seed = o.seed;
    cfg.max_rays = o.max_rays;
    if (o.coeffs == "zero") cfg.coefficients = verify::CoefficientMode::ZeroBoundary;
    else if (o.coeffs == "ones") cfg.coefficients = verify::CoefficientMode::AllOnes;
    else cfg.coefficients = verify::CoefficientMode::RandomRationals;
    for (auto& g : verify::gen_pairs(cfg)) instances.push_back({"instance seed " + std::to_string(g.instance_seed), std::move(g.pair)});
  } else {
    for (const auto& f : o.files) {
      LoadedFan l = load_fan(f);
      instances.push_back({f, build_pair(l.input.file, l.ff)});
      inputs.push_back(json{{"path", f}, {"input_digest", input_digest(l.input.text)}});
    }
  }

  std::vector<std::pair<verify::PropertyResult, std::vector<std::string>>> results;
  for (const auto& name : props) {
    verify::PropertyResult total{name, 0, {}};
    std::vector<std::string> where;
    auto absorb = [&](const verify::PropertyResult& r, const std::string& label) {
      total.merge(r);
      where.resize(total.violations.size(), label);
    };
    if (name == "product") {
      if (!o.random && instances.size() != 2) throw Error(ErrorCode::Parse, "--props product needs exactly two --file inputs");
      if (o.random) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
          const auto& p = instances[i];
          const auto& q = instances[(i + 1) % instances.size()];
          absorb(verify::check_product(p.pair, q.pair), p.label + " x " + q.label);
        }
      } else {
        absorb(verify::check_product(instances[0].pair, instances[1].pair), instances[0].label + " x " + instances[1].label);
      }
    } else {
      for (const auto& inst : instances) absorb(verify::run_property(name, inst.pair), inst.label);
    }
    results.emplace_back(std::move(total), std::move(where));
  }

  bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.first.passed(); });
  if (o.as_json) {
    json j{{"tool", "toricmld"}, {"version", TORICMLD_VERSION}};
    if (o.random) {
      j["seed"] = std::to_string(o.seed);
      j["prng"] = "mt19937_64 seeded by splitmix64";
      j["rank"] = std::to_string(cfg.rank);
      j["coefficients"] = o.coeffs;
    } else {
      j["inputs"] = inputs;
    }
    j["instances"] = std::to_string(instances.size());
    j["properties"] = json::array();
    for (const auto& [r, where] : results) {
      json v = json::array();
      for (std::size_t k = 0; k < r.violations.size(); ++k)
        v.push_back(json{{"instance", where[k]}, {"detail", r.violations[k].detail}, {"pair", r.violations[k].pair_dump}});
      j["properties"].push_back(json{{"name", r.property}, {"checked", std::to_string(r.instances)}, {"violations", v}});
    }
    j["passed"] = passed;
    out << j.dump(2) << '\n';
    return passed ? kOk : kViolation;
  }

  if (o.random) {
    out << "seed " << o.seed << " (mt19937_64 seeded by splitmix64), rank " << cfg.rank << ", " << instances.size()
        << " instances, coefficients " << o.coeffs << '\n';
  } else {
    out << instances.size() << " input files\n";
  }
  for (const auto& [r, where] : results) {
    out << r.property << ": " << r.instances << " checked, " << r.violations.size() << " violations\n";
    for (std::size_t k = 0; k < r.violations.size(); ++k) {
      out << "  " << where[k] << ": " << r.violations[k].detail << '\n';
      std::istringstream dump(r.violations[k].pair_dump);
      for (std::string line; std::getline(dump, line);) out << "    " << line << '\n';
    }
  }
  out << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kOk : kViolation;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::ConeNotInFan:
    case ErrorCode::GenerationExhausted: return kUsage;
    default: return kInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal log discrepancies of toric log pairs", "toricmld"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TORICMLD_VERSION);
  Options o;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "pair file")->required(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "machine-readable output"); };

  auto* mld = app.add_subcommand("mld", "orbit and closed-point mld per cone");
  file_arg(mld);
  auto* cone_opt = mld->add_option("--cone", o.cone, "cone as comma-separated file ray indices");
  mld->add_flag("--all", o.all, "every cone (default)")->excludes(cone_opt);
  json_flag(mld);

  auto* rep = app.add_subcommand("report", "full JSON report");
  file_arg(rep);

  for (const char* name : {"spectrum", "stratify", "classify", "smooth"}) {
    static const std::map<std::string, std::string> help{{"spectrum", "mld spectrum of closed points"},
                                                         {"stratify", "mld stratification by cones"},
                                                         {"classify", "klt / canonical / terminal flags"},
                                                         {"smooth", "smoothness, index and box size per cone"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    file_arg(sub);
    json_flag(sub);
  }

  auto* res = app.add_subcommand("resolve", "smooth resolution by stellar subdivision");
  file_arg(res);
  res->add_option("-o,--output", o.output, "output pair file ('-' for stdout)")->required();

  auto* wit = app.add_subcommand("witness", "subdivide at the mld witness of a cone");
  file_arg(wit);
  wit->add_option("--cone", o.cone, "cone as comma-separated file ray indices")->required();
  wit->add_option("-o,--output", o.output, "output pair file ('-' for stdout)")->required();

  auto* prod = app.add_subcommand("product", "product of two pairs");
  prod->add_option("file_a", o.file, "first pair file")->required();
  prod->add_option("file_b", o.file_b, "second pair file")->required();
  prod->add_option("-o,--output", o.output, "output pair file ('-' for stdout)")->required();

  auto* ver = app.add_subcommand("verify", "check properties on files or random pairs");
  ver->add_option("--file", o.files, "pair file (repeatable)");
  ver->add_flag("--random", o.random, "generate random pairs");
  ver->add_option("--rank", o.rank, "rank of random pairs")->check(CLI::Range(2, 5));
  ver->add_option("--count", o.count, "number of random pairs")->check(CLI::Range(1, 100000));
  ver->add_option("--seed", o.seed, "64-bit seed");
  ver->add_option("--max-rays", o.max_rays, "rays per random fan")->check(CLI::Range(2, 40));
  ver->add_option("--coeffs", o.coeffs, "zero | random | ones")->check(CLI::IsMember({"zero", "random", "ones"}));
  ver->add_option("--props", o.props, "comma-separated: lsc,bound,nonsingular,resolution,smooth-sum,witness,strata,product")->required();
  json_flag(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << TORICMLD_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (mld->parsed()) return cmd_mld(o, out);
    if (rep->parsed()) return cmd_report(o, out);
    if (app.got_subcommand("spectrum")) return cmd_spectrum(o, out);
    if (app.got_subcommand("stratify")) return cmd_stratify(o, out);
    if (app.got_subcommand("classify")) return cmd_classify(o, out);
    if (app.got_subcommand("smooth")) return cmd_smooth(o, out);
    if (res->parsed()) return cmd_resolve(o, out, err);
    if (wit->parsed()) return cmd_witness(o, out, err);
    if (prod->parsed()) return cmd_product(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace toricmld::cli
