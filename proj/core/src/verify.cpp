#include "toricmld/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "toricmld/error.hpp"
#include "toricmld/pairfile.hpp"

namespace toricmld::verify {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

Rational draw_log_discrepancy(Rng& rng, const GenConfig& cfg) {
  switch (cfg.coefficients) {
    case CoefficientMode::ZeroBoundary: return Rational(1);
    case CoefficientMode::AllOnes: return Rational(0);
    case CoefficientMode::RandomRationals: break;
  }
  long q = rng.between(1, cfg.max_denominator);
  long p = rng.between(0, q);
  return make_rational(p, q);
}

bool index_within(const Cone& c, long max_index) {
  for (const auto& cell : triangulate(c)) {
    std::vector<LatticeVector> columns;
    for (const auto& u : cell.rays()) columns.push_back(cell.span().coordinates(u));
    if (abs(determinant(IntMatrix::from_columns(columns, cell.dim()))) > max_index) return false;
  }
  return true;
}

std::optional<Fan> random_fan(Rng& rng, const GenConfig& cfg) {
  const std::size_t n = cfg.rank;
  const std::size_t ray_target = static_cast<std::size_t>(rng.between(static_cast<long>(n), static_cast<long>(std::max(n, cfg.max_rays))));
  std::vector<LatticeVector> rays;
  for (std::size_t tries = 0; rays.size() < ray_target && tries < 50 * ray_target; ++tries) {
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.between(-cfg.coordinate_bound, cfg.coordinate_bound);
    if (v.is_zero()) continue;
    v = primitive(v);
    if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(std::move(v));
  }

  std::vector<Cone> accepted;
  for (std::size_t t = 0; t < 6 * ray_target; ++t) {
    std::size_t k = static_cast<std::size_t>(rng.between(2, static_cast<long>(n)));
    if (n >= 3 && rng.below(5) == 0) k = n + 1;
    if (k > rays.size()) continue;
    std::vector<std::size_t> pick(rays.size());
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(pick[i], pick[i + rng.below(pick.size() - i)]);
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rays[pick[i]]);

    Cone c;
    try {
      c = Cone::make(n, gens);
    } catch (const Error&) {
      continue;
    }
    if (c.rays().size() != k || !index_within(c, cfg.max_index)) continue;
    bool ok = true;
    for (const auto& other : accepted) {
      if (other.has_face(c)) {
        ok = false;
        break;
      }
      Cone meet = intersect(c, other);
      if (!c.has_face(meet) || !other.has_face(meet)) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(std::move(c));
  }
  if (accepted.empty()) return std::nullopt;
  return Fan::from_cones(n, std::move(accepted), FanCheck::Skip);
}

// Log discrepancies ray by ray; a ray in the span of already-assigned rays of
// some maximal cone gets the value forced by φ there.
std::optional<std::vector<Rational>> assign_log_discrepancies(Rng& rng, const GenConfig& cfg, const Fan& fan) {
  const std::size_t nrays = fan.rays().size();
  std::vector<std::optional<Rational>> a(nrays);
  for (std::size_t r = 0; r < nrays; ++r) {
    std::optional<Rational> forced;
    for (std::size_t m : fan.maximal_cones()) {
      const auto& idx = fan.cone_ray_indices(m);
      if (!std::binary_search(idx.begin(), idx.end(), r)) continue;
      std::vector<LatticeVector> known;
      std::vector<Rational> values;
      for (std::size_t j : idx) {
        if (j != r && a[j]) {
          known.push_back(fan.rays()[j]);
          values.push_back(*a[j]);
        }
      }
      if (known.empty()) continue;
      std::size_t before = rank(known);
      known.push_back(fan.rays()[r]);
      if (rank(known) > before) continue;
      known.pop_back();
      auto phi = solve_rational(IntMatrix::from_rows(known, fan.rank()), values);
      if (!phi) return std::nullopt;
      Rational value = LinearForm(*phi)(fan.rays()[r]);
      if (forced && *forced != value) return std::nullopt;
      forced = value;
    }
    if (forced) {
      if (*forced < 0 || *forced > 1 || forced->get_den() > cfg.max_denominator) return std::nullopt;
      a[r] = forced;
    } else {
      a[r] = draw_log_discrepancy(rng, cfg);
    }
  }
  std::vector<Rational> out;
  for (auto& v : a) out.push_back(*v);
  return out;
}

std::vector<Rational> to_boundary(const std::vector<Rational>& a) {
  std::vector<Rational> b;
  for (const auto& x : a) b.push_back(Rational(1 - x));
  return b;
}

std::string dump(const ToricLogPair& p) { return serialize_pair_file(to_pair_file(p, "counterexample")); }

std::string cone_label(const Fan& fan, std::size_t i) {
  std::string s = "cone " + std::to_string(i) + " {";
  const auto& idx = fan.cone_ray_indices(i);
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "}";
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance) {
  return splitmix64(seed + static_cast<std::uint64_t>(instance) * 0x9E3779B97F4A7C15ULL);
}

GeneratedPair gen_pair(const GenConfig& cfg, std::uint64_t seed) {
  if (cfg.rank < 1) throw Error(ErrorCode::DimensionMismatch, "rank must be positive");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    auto fan = random_fan(rng, cfg);
    if (!fan) continue;
    for (int draw = 0; draw < 10; ++draw) {
      auto a = assign_log_discrepancies(rng, cfg, *fan);
      if (!a) continue;
      try {
        return {seed, ToricLogPair::make(*fan, to_boundary(*a))};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRCartier) throw;
      }
    }
    // Keep only the simplicial maximal cones; φ then always exists.
    std::vector<Cone> simplicial;
    for (std::size_t m : fan->maximal_cones())
      if (fan->cone(m).is_simplicial()) simplicial.push_back(fan->cone(m));
    if (simplicial.empty()) continue;
    Fan reduced = Fan::from_cones(cfg.rank, std::move(simplicial), FanCheck::Skip);
    auto a = assign_log_discrepancies(rng, cfg, reduced);
    if (a) return {seed, ToricLogPair::make(std::move(reduced), to_boundary(*a))};
  }
  throw Error(ErrorCode::GenerationExhausted, "no valid fan within the retry budget (seed " + std::to_string(seed) + ")");
}

std::vector<GeneratedPair> gen_pairs(const GenConfig& cfg) {
  std::vector<GeneratedPair> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(gen_pair(cfg, instance_seed(cfg.seed, i)));
  return out;
}

void PropertyResult::merge(const PropertyResult& other) {
  instances += other.instances;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

PropertyResult check_lsc(const ToricLogPair& p) {
  PropertyResult out{"lsc", 1, {}};
  MldReport rep = report(p);
  const Fan& fan = p.fan();
  for (std::size_t s = 0; s < fan.cones().size(); ++s)
    for (std::size_t t : fan.faces_of(s)) {
      if (rep.closed_point_mld[s] > rep.closed_point_mld[t]) {
        out.violations.push_back({cone_label(fan, s) + " closed-point mld " + to_string(rep.closed_point_mld[s]) + " > face " +
                                      cone_label(fan, t) + " value " + to_string(rep.closed_point_mld[t]),
                                  dump(p)});
      }
    }
  return out;
}

PropertyResult check_bound(const ToricLogPair& p) {
  PropertyResult out{"bound", 1, {}};
  MldReport rep = report(p);
  const Fan& fan = p.fan();
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    const Rational& a = rep.orbit_mld[s];
    const long dim = static_cast<long>(fan.cone(s).dim());
    bool all_one = true;
    for (std::size_t r : fan.cone_ray_indices(s)) all_one = all_one && p.log_discrepancies()[r] == 1;
    // Equality forces a_i = 1 on every ray; the converse holds on nonsingular
    // cones (A1 has a_i = 1 and a_σ = 1 < 2).
    const bool smooth = is_smooth_cone(fan.cone(s));
    if (a < 0 || a > dim || (a == dim && !all_one) || (all_one && smooth && a != dim)) {
      out.violations.push_back({cone_label(fan, s) + " a = " + to_string(a) + ", dim = " + std::to_string(dim) +
                                    ", all ray log discrepancies 1: " + (all_one ? "yes" : "no") + ", smooth: " + (smooth ? "yes" : "no"),
                                dump(p)});
    }
  }
  return out;
}

PropertyResult check_nonsingularity_criterion(const ToricLogPair& p) {
  PropertyResult out{"nonsingular", 1, {}};
  MldReport rep = report(p);
  const Fan& fan = p.fan();
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    const long dim = static_cast<long>(fan.cone(s).dim());
    if (rep.orbit_mld[s] > dim - 1 && !is_smooth_cone(fan.cone(s))) {
      out.violations.push_back({cone_label(fan, s) + " a = " + to_string(rep.orbit_mld[s]) + " > dim - 1 but the cone is singular", dump(p)});
    }
  }
  return out;
}

PropertyResult check_resolution_oracle(const ToricLogPair& p) {
  PropertyResult out{"resolution", 1, {}};
  MldReport rep = report(p);
  const Fan& fan = p.fan();
  Subdivision sub = resolve(fan);
  std::vector<std::optional<Rational>> best(fan.cones().size());
  for (const auto& gamma : sub.target.cones()) {
    auto c = fan.carrier(gamma.interior_point());
    if (!c) {
      out.violations.push_back({"resolution cone leaves the support", dump(p)});
      continue;
    }
    if (!is_smooth_cone(gamma)) out.violations.push_back({"resolution contains a singular cone", dump(p)});
    const LinearForm& phi = p.cartier_form(*c);
    Rational sum = 0;
    for (const auto& r : gamma.rays()) sum += phi(r);
    if (!best[*c] || sum < *best[*c]) best[*c] = sum;
  }
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    if (!best[s] || *best[s] != rep.orbit_mld[s]) {
      out.violations.push_back({cone_label(fan, s) + " direct a = " + to_string(rep.orbit_mld[s]) + ", resolution a = " +
                                    (best[s] ? to_string(*best[s]) : std::string("none")),
                                dump(p)});
    }
  }
  return out;
}

PropertyResult check_product(const ToricLogPair& p, const ToricLogPair& q) {
  PropertyResult out{"product", 1, {}};
  ToricLogPair pq = product(p, q);
  MldReport rp = report(p), rq = report(q);
  const LatticeVector zero_p(p.rank()), zero_q(q.rank());
  for (std::size_t s = 0; s < p.fan().cones().size(); ++s)
    for (std::size_t t = 0; t < q.fan().cones().size(); ++t) {
      std::vector<LatticeVector> gens;
      for (const auto& r : p.fan().cone(s).rays()) gens.push_back(direct_sum(r, zero_q));
      for (const auto& r : q.fan().cone(t).rays()) gens.push_back(direct_sum(zero_p, r));
      auto idx = pq.fan().find(Cone::make(pq.rank(), gens));
      if (!idx) {
        out.violations.push_back({"product cone missing for " + cone_label(p.fan(), s) + " x " + cone_label(q.fan(), t), dump(p)});
        continue;
      }
      Rational lhs = mld_orbit(pq, *idx).value;
      Rational rhs = rp.orbit_mld[s] + rq.orbit_mld[t];
      if (lhs != rhs) {
        out.violations.push_back({cone_label(p.fan(), s) + " x " + cone_label(q.fan(), t) + ": a = " + to_string(lhs) +
                                      " but a_sigma + a_tau = " + to_string(rhs),
                                  dump(p) + "---\n" + dump(q)});
      }
    }
  return out;
}

PropertyResult check_smooth_closed_form(const ToricLogPair& p) {
  PropertyResult out{"smooth-sum", 1, {}};
  const Fan& fan = p.fan();
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    if (!is_smooth_cone(fan.cone(s))) continue;
    Rational sum = 0;
    for (std::size_t r : fan.cone_ray_indices(s)) sum += p.log_discrepancies()[r];
    Rational a = mld_orbit(p, s).value;
    if (a != sum) {
      out.violations.push_back({cone_label(fan, s) + " a = " + to_string(a) + " but sum of ray values = " + to_string(sum), dump(p)});
    }
  }
  return out;
}

PropertyResult check_witness(const ToricLogPair& p) {
  PropertyResult out{"witness", 1, {}};
  const Fan& fan = p.fan();
  for (std::size_t s = 1; s < fan.cones().size(); ++s) {
    OrbitMld m = mld_orbit(p, s);
    const Cone& sigma = fan.cone(s);
    if (!sigma.relint_contains(m.witness) || p.cartier_form(s)(m.witness) != m.value) {
      out.violations.push_back({cone_label(fan, s) + " witness " + to_string(m.witness) + " is not a relint minimizer", dump(p)});
      continue;
    }
    Subdivision sub = stellar_subdivide(fan, m.witness);
    LatticeVector ray = primitive(m.witness);
    if (!sub.target.ray_index(ray)) {
      out.violations.push_back({cone_label(fan, s) + " subdivision lacks the ray " + to_string(ray), dump(p)});
      continue;
    }
    Rational a_new = p.log_discrepancy_at(ray);
    if (a_new != m.value) {
      out.violations.push_back({cone_label(fan, s) + " new ray " + to_string(ray) + " has a = " + to_string(a_new) + ", a_sigma = " +
                                    to_string(m.value),
                                dump(p)});
    }
  }
  return out;
}

PropertyResult check_stratification(const ToricLogPair& p) {
  PropertyResult out{"strata", 1, {}};
  const Fan& fan = p.fan();
  MldReport rep = report(p);

  std::set<Rational> image(rep.closed_point_mld.begin(), rep.closed_point_mld.end());
  if (!std::equal(image.begin(), image.end(), rep.spectrum.begin(), rep.spectrum.end())) {
    out.violations.push_back({"spectrum differs from the image of the closed-point mld", dump(p)});
  }
  std::vector<int> seen(fan.cones().size(), 0);
  for (const auto& [value, members] : rep.strata)
    for (std::size_t i : members) {
      ++seen[i];
      if (rep.closed_point_mld[i] != value) out.violations.push_back({cone_label(fan, i) + " filed under the wrong stratum", dump(p)});
    }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1) out.violations.push_back({cone_label(fan, i) + " appears in " + std::to_string(seen[i]) + " strata", dump(p)});

  // If a_τ + codim(τ,σ) = a_σ then every γ with τ ≺ γ ≺ σ has
  // a_γ + codim(γ,σ) = a_σ.
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    auto faces = fan.faces_of(s);
    const long ds = static_cast<long>(fan.cone(s).dim());
    for (std::size_t t : faces) {
      if (rep.orbit_mld[t] + (ds - static_cast<long>(fan.cone(t).dim())) != rep.orbit_mld[s]) continue;
      for (std::size_t g : faces) {
        const auto& gr = fan.cone_ray_indices(g);
        const auto& tr = fan.cone_ray_indices(t);
        if (!std::includes(gr.begin(), gr.end(), tr.begin(), tr.end())) continue;
        if (rep.orbit_mld[g] + (ds - static_cast<long>(fan.cone(g).dim())) != rep.orbit_mld[s]) {
          out.violations.push_back({"face chain " + cone_label(fan, t) + " < " + cone_label(fan, g) + " < " + cone_label(fan, s) +
                                        " breaks the equality",
                                    dump(p)});
        }
      }
    }
  }
  return out;
}

const std::vector<std::string>& single_pair_properties() {
  static const std::vector<std::string> names{"lsc", "bound", "nonsingular", "resolution", "smooth-sum", "witness", "strata"};
  return names;
}

PropertyResult run_property(const std::string& name, const ToricLogPair& p) {
  if (name == "lsc") return check_lsc(p);
  if (name == "bound") return check_bound(p);
  if (name == "nonsingular") return check_nonsingularity_criterion(p);
  if (name == "resolution") return check_resolution_oracle(p);
  if (name == "smooth-sum") return check_smooth_closed_form(p);
  if (name == "witness") return check_witness(p);
  if (name == "strata") return check_stratification(p);
  throw Error(ErrorCode::Parse, "unknown property '" + name + "'");
}

}  // namespace toricmld::verify
