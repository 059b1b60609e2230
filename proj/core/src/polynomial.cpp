#include "tau/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tau {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

GradedSymPoly::GradedSymPoly(int nvars, std::optional<int> degree_cap) : nvars_(nvars), cap_(degree_cap) {
  if (nvars < 0) throw std::invalid_argument("GradedSymPoly: negative variable count");
}

GradedSymPoly GradedSymPoly::constant(int nvars, const Rational& c) {
  GradedSymPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

GradedSymPoly GradedSymPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("GradedSymPoly::variable: bad index");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

GradedSymPoly GradedSymPoly::variable_sum(int nvars) {
  GradedSymPoly p(nvars);
  for (int i = 0; i < nvars; ++i) p += variable(nvars, i);
  return p;
}

GradedSymPoly GradedSymPoly::monomial(Exponents e, const Rational& c) {
  GradedSymPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

GradedSymPoly& GradedSymPoly::set_degree_cap(std::optional<int> cap) {
  cap_ = cap;
  if (cap_) std::erase_if(terms_, [&](const auto& t) { return total_degree(t.first) > *cap_; });
  return *this;
}

bool GradedSymPoly::within_cap(const Exponents& e) const { return !cap_ || total_degree(e) <= *cap_; }

void GradedSymPoly::check_arity(const GradedSymPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("GradedSymPoly: variable count mismatch");
}

Rational GradedSymPoly::coefficient(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("coefficient: arity mismatch");
  if (!within_cap(e)) throw std::out_of_range("coefficient: degree exceeds the tracked cap");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSymPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: arity mismatch");
  if (c == 0 || !within_cap(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedSymPoly& GradedSymPoly::operator+=(const GradedSymPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GradedSymPoly& GradedSymPoly::operator-=(const GradedSymPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

GradedSymPoly& GradedSymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedSymPoly operator*(const GradedSymPoly& a, const GradedSymPoly& b) {
  a.check_arity(b);
  std::optional<int> cap = a.cap_;
  if (b.cap_ && (!cap || *b.cap_ < *cap)) cap = b.cap_;
  GradedSymPoly out(a.nvars_, cap);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (cap && da + total_degree(eb) > *cap) continue;
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      product = ca * cb;
      out.add_term(e, product);
    }
  }
  return out;
}

GradedSymPoly GradedSymPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("GradedSymPoly::pow: negative exponent");
  GradedSymPoly result = constant(nvars_, 1);
  result.cap_ = cap_;
  GradedSymPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedSymPoly GradedSymPoly::homogeneous_part(int degree) const {
  GradedSymPoly out(nvars_, cap_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

std::optional<int> GradedSymPoly::max_degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int d = total_degree(e);
    if (!best || d > *best) best = d;
  }
  return best;
}

GradedSymPoly GradedSymPoly::embed(int nvars, std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != nvars_) throw std::invalid_argument("embed: slot count mismatch");
  GradedSymPoly out(nvars, cap_);
  Exponents target(static_cast<std::size_t>(nvars), 0);
  for (const auto& [e, c] : terms_) {
    std::fill(target.begin(), target.end(), 0);
    for (int i = 0; i < nvars_; ++i) target[slots[i]] += e[i];
    out.add_term(target, c);
  }
  return out;
}

GradedSymPoly GradedSymPoly::divide_by_variable_sum() const {
  if (nvars_ == 0) throw DivisibilityError("divide_by_variable_sum: no variables");
  GradedSymPoly work = *this;
  work.cap_.reset();
  GradedSymPoly quotient(nvars_, cap_);
  while (!work.terms_.empty()) {
    // lex-largest term; its x_1 exponent must be positive for the leading
    // term x_1 of the divisor to divide it.
    auto lead = std::prev(work.terms_.end());
    Exponents e = lead->first;
    const Rational c = lead->second;
    if (e[0] == 0) {
      std::ostringstream os;
      os << "nonzero remainder dividing by the variable sum at monomial (";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << ") with coefficient " << to_string(c);
      throw DivisibilityError(os.str());
    }
    e[0] -= 1;
    quotient.terms_.emplace(e, c);
    for (int i = 0; i < nvars_; ++i) {
      e[i] += 1;
      work.add_term(e, -c);
      e[i] -= 1;
    }
  }
  return quotient;
}

GradedSymPoly GradedSymPoly::permuted(std::span<const int> perm) const { return embed(nvars_, perm); }

bool GradedSymPoly::is_symmetric() const {
  if (nvars_ < 2) return true;
  // Transpositions (0 1) and the cycle (0 1 ... n-1) generate S_n.
  std::vector<int> swap01(static_cast<std::size_t>(nvars_));
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  std::vector<int> cycle(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) cycle[i] = (i + 1) % nvars_;
  return permuted(swap01) == *this && permuted(cycle) == *this;
}

std::string GradedSymPoly::dump() const {
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream os;
  for (const auto& [e, c] : sorted) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << " -> " << to_string(c) << '\n';
  }
  return os.str();
}

}  // namespace tau
