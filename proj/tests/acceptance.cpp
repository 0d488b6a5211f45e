// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or runs longer than 60 s.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toricmld/toricmld.hpp"

using namespace toricmld;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Rational q(long n, long d = 1) { return make_rational(n, d); }

long max_abs_coord(const std::vector<LatticeVector>& rays) {
  long m = 1;
  for (const auto& r : rays)
    for (std::size_t i = 0; i < r.size(); ++i) m = std::max(m, Integer(abs(r[i])).get_si());
  return m;
}

// Minimum of Σ t_i a_i over lattice points v = Σ t_i v_i with all t_i > 0.
// Every point with value <= cap has coordinates bounded by cap / min(a) * max|v_i|.
std::optional<oracle::ScanMin> scan_min(const std::vector<LatticeVector>& rays, const std::vector<Rational>& a, long bound) {
  std::optional<oracle::ScanMin> best;
  oracle::for_each_point(rays.front().size(), bound, [&](const LatticeVector& v) {
    auto t = oracle::barycentric(rays, v);
    if (!t) return;
    Rational val = 0;
    for (std::size_t i = 0; i < t->size(); ++i) {
      if ((*t)[i] <= 0) return;
      val += (*t)[i] * a[i];
    }
    if (!best || val < best->value || (val == best->value && v < best->argmin)) best = oracle::ScanMin{val, v};
  });
  return best;
}

ToricLogPair zero_boundary(const Fan& f) { return ToricLogPair::make(f, std::vector<Rational>(f.rays().size(), Rational(0))); }

std::size_t top_cone(const Fan& f) { return f.cones().size() - 1; }

std::string fmt(const Rational& r) { return to_string(r); }

struct Corpus {
  std::vector<verify::GeneratedPair> pairs;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (std::size_t rank = 2; rank <= 4; ++rank) {
      verify::GenConfig cfg;
      cfg.rank = rank;
      cfg.count = 70;
      cfg.max_rays = rank + 4;
      cfg.seed = 20240 + rank;
      for (auto& g : verify::gen_pairs(cfg)) out.pairs.push_back(std::move(g));
    }
    return out;
  }();
  return c;
}

Outcome property_over_corpus(const std::string& name, std::size_t limit = SIZE_MAX) {
  verify::PropertyResult total{name, 0, {}};
  const auto& pairs = corpus().pairs;
  for (std::size_t i = 0; i < pairs.size() && i < limit; ++i) total.merge(verify::run_property(name, pairs[i].pair));
  Outcome o;
  o.pass = total.passed() && total.instances >= std::min(limit, pairs.size());
  o.detail = std::to_string(total.instances) + " pairs, " + std::to_string(total.violations.size()) + " violations";
  if (!total.violations.empty()) o.detail += "; first: " + total.violations.front().detail;
  return o;
}

Outcome du_val() {
  Outcome o;
  for (long r = 2; r <= 10; ++r) {
    std::vector<LatticeVector> rays{{1, 0}, {1, r}};
    ToricLogPair p = zero_boundary(Fan::make(2, {rays}));
    std::size_t top = top_cone(p.fan());
    Rational a = mld_orbit(p, top).value;
    Rational closed = mld_closed_point(p, top);
    auto scan = scan_min(rays, {1, 1}, 2 * max_abs_coord(rays));
    if (a != 1 || closed != 1 || !scan || scan->value != a) {
      o.pass = false;
      o.detail += "r=" + std::to_string(r) + " a=" + fmt(a) + " closed=" + fmt(closed) + "; ";
    }
  }
  if (o.pass) o.detail = "A_{r-1}, r=2..10: a_sigma = closed-point mld = 1 (lattice scan agrees)";
  return o;
}

Outcome terminal_quotient() {
  Outcome o;
  std::ostringstream literal;
  for (long r = 2; r <= 7; ++r) {
    // 1/r(1,-1,1): (e1 + (r-1) e2 + v3) / r = e3 is the box generator.
    std::vector<LatticeVector> rays{{1, 0, 0}, {0, 1, 0}, {-1, 1 - r, r}};
    ToricLogPair p = zero_boundary(Fan::make(3, {rays}));
    std::size_t top = top_cone(p.fan());
    OrbitMld m = mld_orbit(p, top);
    auto scan = scan_min(rays, {1, 1, 1}, 2 * max_abs_coord(rays));
    Rational expected = 1 + q(1, r);
    if (m.value != expected || !scan || scan->value != expected || scan->argmin != m.witness) {
      o.pass = false;
      o.detail += "r=" + std::to_string(r) + " a=" + fmt(m.value) + "; ";
    }
    std::vector<LatticeVector> sym{{1, 0, 0}, {0, 1, 0}, {-1, -1, r}};
    ToricLogPair sp = zero_boundary(Fan::make(3, {sym}));
    literal << (r > 2 ? "," : "") << fmt(mld_orbit(sp, top_cone(sp.fan())).value);
  }
  if (o.pass) o.detail = "1/r(1,-1,1), r=2..7: a_sigma = 1+1/r (lattice scan agrees)";
  o.detail += "; 1/r(1,1,1) gives " + literal.str();
  return o;
}

Outcome bound_with_literal_count() {
  Outcome o = property_over_corpus("bound");
  std::size_t literal = 0, cones = 0;
  for (const auto& g : corpus().pairs) {
    const ToricLogPair& p = g.pair;
    MldReport rep = report(p);
    for (std::size_t c = 0; c < p.fan().cones().size(); ++c) {
      ++cones;
      bool all_one = true;
      for (std::size_t i : p.fan().cone_ray_indices(c)) all_one = all_one && p.log_discrepancies()[i] == 1;
      bool at_dim = rep.orbit_mld[c] == static_cast<long>(p.fan().cone(c).dim());
      if (all_one != at_dim) ++literal;
    }
  }
  o.detail += "; " + std::to_string(literal) + " of " + std::to_string(cones) +
              " cones have all a_i = 1 with a_sigma < dim (singular cones)";
  return o;
}

Outcome products() {
  Outcome o;
  const auto& pairs = corpus().pairs;
  verify::PropertyResult total{"product", 0, {}};
  for (std::size_t i = 0; i < 20; ++i) total.merge(verify::check_product(pairs[i].pair, pairs[70 + i].pair));
  ToricLogPair a1 = zero_boundary(Fan::make(2, {{{1, 0}, {1, 2}}}));
  ToricLogPair a1a1 = product(a1, a1);
  Rational top = mld_orbit(a1a1, top_cone(a1a1.fan())).value;
  auto scan = scan_min(a1a1.fan().cone(top_cone(a1a1.fan())).rays(), {1, 1, 1, 1}, 4);
  o.pass = total.passed() && total.instances == 20 && top == 2 && scan && scan->value == 2;
  o.detail = "20 products, " + std::to_string(total.violations.size()) + " violations; A1xA1 top cone a_sigma = " + fmt(top);
  if (!total.violations.empty()) o.detail += "; first: " + total.violations.front().detail;
  return o;
}

Outcome strata() {
  Outcome o = property_over_corpus("strata");
  MldReport rep = report(zero_boundary(Fan::make(2, {{{1, 0}, {1, 2}}})));
  bool a1 = rep.spectrum == std::vector<Rational>{1, 2};
  o.pass = o.pass && a1;
  std::string spec;
  for (const auto& s : rep.spectrum) spec += (spec.empty() ? "" : ", ") + fmt(s);
  o.detail += "; A1 spectrum {" + spec + "}";
  return o;
}

// Boundary components realized as distinct signed coordinate rays ±e_k; a set
// of components meets iff its rays lie on distinct axes.
Outcome snc_agreement() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::size_t checked = 0, mismatches = 0;
  for (int inst = 0; inst < 50; ++inst) {
    std::size_t n = 1 + rng() % 5;
    std::size_t m = 1 + rng() % std::min<std::size_t>(5, 2 * n);
    std::vector<std::size_t> slots(2 * n);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(m);
    std::vector<LatticeVector> comp_ray;
    std::vector<std::size_t> axis;
    std::vector<Rational> a;
    for (std::size_t s : slots) {
      LatticeVector v(n);
      v[s / 2] = s % 2 ? -1 : 1;
      comp_ray.push_back(v);
      axis.push_back(s / 2);
      a.push_back(q(static_cast<long>(rng() % 13), 12));
    }
    std::vector<std::vector<LatticeVector>> maximal{{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> on_axis;
      for (std::size_t i = 0; i < m; ++i)
        if (axis[i] == k) on_axis.push_back(i);
      if (on_axis.empty()) continue;
      std::vector<std::vector<LatticeVector>> next;
      for (const auto& c : maximal)
        for (std::size_t i : on_axis) {
          next.push_back(c);
          next.back().push_back(comp_ray[i]);
        }
      maximal = std::move(next);
    }
    Fan fan = Fan::make(n, maximal);
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) b[*fan.ray_index(comp_ray[i])] = 1 - a[i];
    ToricLogPair t = ToricLogPair::make(fan, b);
    std::vector<snc::ComponentSet> nerve;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      snc::ComponentSet j;
      std::vector<bool> used(n, false);
      bool ok = true;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) {
          ok = ok && !used[axis[i]];
          used[axis[i]] = true;
          j.push_back(i);
        }
      if (ok) nerve.push_back(j);
    }
    snc::SncPair s(n, a, nerve);
    if (!fan.is_smooth() || s.nerve().size() != nerve.size()) ++mismatches;
    for (const auto& j : nerve) {
      std::vector<std::size_t> idx;
      for (std::size_t i : j) idx.push_back(*fan.ray_index(comp_ray[i]));
      auto cone = fan.find_by_rays(idx);
      ++checked;
      if (!cone) {
        ++mismatches;
        continue;
      }
      snc::LogDiscrepancy generic = snc::snc_mld(s, {j, j.size()});
      snc::LogDiscrepancy closed = snc::snc_mld(s, {j, n});
      if (!(generic == snc::LogDiscrepancy(mld_orbit(t, *cone).value)) ||
          !(closed == snc::LogDiscrepancy(mld_closed_point(t, *cone))))
        ++mismatches;
    }
  }
  std::size_t slack_checked = 0, slack_bad = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<std::vector<Rational>> coeffs{std::vector<Rational>(m, Rational(0)), std::vector<Rational>(m, Rational(1))};
    for (int k = 0; k < 4; ++k) {
      coeffs.emplace_back();
      for (std::size_t i = 0; i < m; ++i) coeffs.back().push_back(q(static_cast<long>(rng() % 13), 12));
    }
    for (const auto& a : coeffs) {
      snc::SncPair p = snc::SncPair::full(m, a);
      auto pts = p.points();
      for (const auto& eta : pts)
        for (const auto& xi : pts) {
          if (xi.codim > eta.codim) continue;
          if (!std::includes(eta.incident.begin(), eta.incident.end(), xi.incident.begin(), xi.incident.end())) continue;
          snc::HypothesisSlack h = snc::check_hypothesis(p, eta, xi);
          Rational expected = 0;
          for (std::size_t i : eta.incident)
            if (!std::binary_search(xi.incident.begin(), xi.incident.end(), i)) expected += a[i] - 1;
          ++slack_checked;
          if (h.minus_infinity || h.slack != expected || h.slack > 0) ++slack_bad;
        }
    }
  }
  o.pass = mismatches == 0 && slack_bad == 0 && checked > 0;
  o.detail = "50 realizations, " + std::to_string(checked) + " strata, " + std::to_string(mismatches) + " mismatches; slack " +
             std::to_string(slack_checked) + " specializations (|I| <= 6), " + std::to_string(slack_bad) + " violations";
  return o;
}

Outcome divergence() {
  const std::vector<Rational> a_es{q(-2), q(-3, 2), q(-1), q(-1, 2), q(-1, 3), q(0), q(1, 4), q(1, 2), q(3, 4), q(1)};
  const std::vector<Rational> a_e1s{q(-1), q(-1, 2), q(0), q(1, 4), q(1, 3), q(1, 2), q(3, 4), q(1), q(3, 2), q(2)};
  std::size_t points = 0, bad = 0, toric = 0;
  for (const auto& ae : a_es)
    for (const auto& ae1 : a_e1s) {
      ++points;
      Rational prev;
      for (std::uint64_t k = 0; k <= 30; ++k) {
        Rational v = snc::blowup_divergence(ae, ae1, k);
        if (v != Rational(static_cast<long>(k)) * ae + ae1) ++bad;
        if (k > 0 && ae < 0 && !(v < prev)) ++bad;
        prev = v;
      }
      // Toric model: E = D_{e1}, E_1 = blow-up of the origin, E_{k+1} = ray (k+1, 1).
      Rational a2 = ae1 - ae;
      if (ae < 0 || ae > 1 || a2 < 0 || a2 > 1) continue;
      ++toric;
      Fan f = Fan::make(2, {{{1, 0}, {0, 1}}});
      ToricLogPair base = ToricLogPair::make(f, {1 - a2, 1 - ae});
      for (std::uint64_t k = 0; k <= 5; ++k) {
        LatticeVector center{static_cast<long>(k) + 1, 1};
        Subdivision sd = stellar_subdivide(f, center);
        if (sd.new_rays != std::vector<LatticeVector>{center}) ++bad;
        if (base.log_discrepancy_at(center) != snc::blowup_divergence(ae, ae1, k)) ++bad;
        f = sd.target;
      }
    }
  Outcome o;
  o.pass = bad == 0 && points == 100;
  o.detail = std::to_string(points) + " grid points x k=0..30, " + std::to_string(toric) + " also via toric blow-ups, " +
             std::to_string(bad) + " mismatches";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Du Val value", du_val},
      {2, "terminal quotient value", terminal_quotient},
      {3, "smooth-cone closed form", [] { return property_over_corpus("smooth-sum"); }},
      {4, "lower semicontinuity", [] { return property_over_corpus("lsc"); }},
      {5, "boundedness and equality case", bound_with_literal_count},
      {6, "nonsingularity criterion", [] { return property_over_corpus("nonsingular"); }},
      {7, "resolution oracle", [] { return property_over_corpus("resolution", 100); }},
      {8, "witness/blow-up consistency", [] { return property_over_corpus("witness"); }},
      {9, "product additivity", products},
      {10, "finiteness/stratification", strata},
      {11, "SNC/toric agreement", snc_agreement},
      {12, "divergence recursion", divergence},
  };
  std::size_t failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60) {
      o.pass = false;
      o.detail += "; over 60 s";
    }
    if (!o.pass) ++failed;
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail << " [" << t << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
