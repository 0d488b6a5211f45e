#include "toricmld/snc.hpp"

#include <algorithm>

#include "toricmld/error.hpp"

namespace toricmld::snc {

const Rational& LogDiscrepancy::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidPoint, "value() of -infinity");
  return value_;
}

LogDiscrepancy operator+(const LogDiscrepancy& a, const LogDiscrepancy& b) {
  if (!a.finite_ || !b.finite_) return LogDiscrepancy::minus_infinity();
  return LogDiscrepancy(Rational(a.value_ + b.value_));
}

std::string to_string(const LogDiscrepancy& a) { return a.is_finite() ? toricmld::to_string(a.value()) : "-inf"; }

namespace {

void insert_subsets(std::set<ComponentSet>& nerve, const ComponentSet& j) {
  const std::size_t k = j.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ComponentSet sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(j[i]);
    nerve.insert(std::move(sub));
  }
}

}  // namespace

SncPair::SncPair(std::size_t ambient_dim, std::vector<Rational> log_discrepancies, std::vector<ComponentSet> nerve)
    : dim_(ambient_dim), a_(std::move(log_discrepancies)) {
  nerve_.insert(ComponentSet{});
  for (auto j : nerve) {
    std::sort(j.begin(), j.end());
    if (std::adjacent_find(j.begin(), j.end()) != j.end()) throw Error(ErrorCode::InvalidPoint, "repeated component in a stratum");
    if (!j.empty() && j.back() >= a_.size()) throw Error(ErrorCode::InvalidPoint, "stratum names an unknown component");
    if (j.size() > dim_) throw Error(ErrorCode::InvalidPoint, "more components meet than the dimension allows");
    insert_subsets(nerve_, j);
  }
}

SncPair SncPair::full(std::size_t ambient_dim, std::vector<Rational> log_discrepancies) {
  ComponentSet all(log_discrepancies.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SncPair(ambient_dim, std::move(log_discrepancies), {all});
}

bool SncPair::is_valid(const SncPoint& pt) const {
  return nerve_.count(pt.incident) && pt.incident.size() <= pt.codim && pt.codim <= dim_;
}

std::vector<SncPoint> SncPair::points() const {
  std::vector<SncPoint> out;
  for (const auto& j : nerve_)
    for (std::size_t c = j.size(); c <= dim_; ++c) out.push_back({j, c});
  return out;
}

LogDiscrepancy snc_mld(const SncPair& pair, const SncPoint& pt) {
  if (!pair.is_valid(pt)) throw Error(ErrorCode::InvalidPoint, "point is not a stratum of the pair");
  const auto& a = pair.log_discrepancies();
  if (pt.codim == 1 && pt.incident.size() == 1) return LogDiscrepancy(a[pt.incident.front()]);
  Rational sum = 0;
  for (std::size_t i : pt.incident) {
    if (a[i] < 0) return LogDiscrepancy::minus_infinity();
    sum += a[i];
  }
  return LogDiscrepancy(Rational(sum + static_cast<long>(pt.codim) - static_cast<long>(pt.incident.size())));
}

HypothesisSlack check_hypothesis(const SncPair& pair, const SncPoint& eta, const SncPoint& xi) {
  if (!std::includes(eta.incident.begin(), eta.incident.end(), xi.incident.begin(), xi.incident.end()) || xi.codim > eta.codim) {
    throw Error(ErrorCode::NotSpecialization, "eta is not a specialization of xi");
  }
  LogDiscrepancy a_eta = snc_mld(pair, eta);
  if (!a_eta.is_finite()) return {true, Rational(0)};
  LogDiscrepancy a_xi = snc_mld(pair, xi);
  return {false, Rational(a_eta.value() - a_xi.value() - static_cast<long>(eta.codim - xi.codim))};
}

SncPair product(const SncPair& p, const SncPair& q) {
  std::vector<Rational> a = p.log_discrepancies();
  a.insert(a.end(), q.log_discrepancies().begin(), q.log_discrepancies().end());
  std::vector<ComponentSet> nerve;
  for (const auto& jp : p.nerve())
    for (const auto& jq : q.nerve()) {
      ComponentSet j = jp;
      for (std::size_t i : jq) j.push_back(i + p.components());
      nerve.push_back(std::move(j));
    }
  return SncPair(p.ambient_dim() + q.ambient_dim(), std::move(a), std::move(nerve));
}

SncPoint product_point(const SncPair& p, const SncPoint& eta, const SncPoint& xi) {
  SncPoint out{eta.incident, eta.codim + xi.codim};
  for (std::size_t i : xi.incident) out.incident.push_back(i + p.components());
  return out;
}

Rational blowup_divergence(const Rational& a_e, const Rational& a_e1, std::uint64_t k) {
  return Rational(Rational(Integer(std::to_string(k))) * a_e + a_e1);
}

}  // namespace toricmld::snc
