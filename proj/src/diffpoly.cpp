#include "bpv/diffpoly.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace bpv {

DiffPoly::Var DiffPoly::encode(const MultiIndex& a) {
  return static_cast<Var>((a.t << 8) | (a.x << 4) | a.y);
}

MultiIndex DiffPoly::decode(Var v) { return {(v >> 8) & 0xF, (v >> 4) & 0xF, v & 0xF}; }

DiffPoly DiffPoly::constant(double c) {
  DiffPoly p;
  if (c != 0.0) p.terms_[{}] = c;
  return p;
}

DiffPoly DiffPoly::variable(const MultiIndex& a) {
  DiffPoly p;
  p.terms_[{encode(a)}] = 1.0;
  return p;
}

DiffPoly DiffPoly::total_derivative(Direction d) const {
  DiffPoly out;
  for (const auto& [mono, c] : terms_) {
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
      MultiIndex a = decode(mono[pos]);
      (d == Direction::t ? a.t : d == Direction::x ? a.x : a.y) += 1;
      Monomial m = mono;
      m[pos] = encode(a);
      std::sort(m.begin(), m.end());
      out.terms_[m] += c;
    }
  }
  return out;
}

DiffPoly DiffPoly::times_variable(const MultiIndex& a) const {
  DiffPoly out;
  const Var v = encode(a);
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    m.insert(std::upper_bound(m.begin(), m.end(), v), v);
    out.terms_[m] += c;
  }
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  return *this;
}

DiffPoly& DiffPoly::operator*=(double s) {
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

double DiffPoly::evaluate(const Jet& z) const {
  double total = 0.0;
  for (const auto& [mono, c] : terms_) {
    double v = c;
    for (Var var : mono) v *= z(decode(var));
    total += v;
  }
  return total;
}

int DiffPoly::order() const {
  int o = -1;
  for (const auto& [mono, c] : terms_)
    for (Var v : mono) o = std::max(o, decode(v).order());
  return o;
}

const DiffPoly& comoving_power(int k, const MultiIndex& seed) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, DiffPoly> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(k, seed.t, seed.x, seed.y);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  DiffPoly p = DiffPoly::variable(seed);
  for (int step = 0; step < k; ++step) {
    DiffPoly next = p.total_derivative(Direction::t);
    next -= p.total_derivative(Direction::x).times_variable({0, 0, 1});
    p = std::move(next);
  }
  return cache.emplace(key, std::move(p)).first->second;
}

}  // namespace bpv
