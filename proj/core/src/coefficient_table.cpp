#include "diskwalk/coefficient_table.hpp"

#include <algorithm>
#include <cmath>

#include "diskwalk/errors.hpp"

namespace diskwalk {

CoefficientTable::CoefficientTable(double alpha) : alpha_(alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw domain_error("table alpha must exceed -1");
}

CoefficientTable::CoefficientTable(double alpha, Entries entries) : CoefficientTable(alpha) {
  for (const auto& [key, value] : entries) set(key.first, key.second, value);
}

std::complex<double> CoefficientTable::at(int m, int n) const {
  const auto it = entries_.find({m, n});
  return it == entries_.end() ? std::complex<double>{} : it->second;
}

void CoefficientTable::set(int m, int n, std::complex<double> value) {
  if (m < 0 || n < 0) throw domain_error("coefficient indices must be nonnegative");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw domain_error("coefficient values must be finite");
  }
  entries_[{m, n}] = value;
}

void CoefficientTable::accumulate(int m, int n, std::complex<double> value) { set(m, n, at(m, n) + value); }

int CoefficientTable::max_m() const {
  int out = -1;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

int CoefficientTable::max_n() const {
  int out = -1;
  for (const auto& [key, value] : entries_) out = std::max(out, key.second);
  return out;
}

int CoefficientTable::max_degree() const {
  int out = -1;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first + key.second);
  return out;
}

CoefficientTable CoefficientTable::swapped() const {
  CoefficientTable out(alpha_);
  for (const auto& [key, value] : entries_) out.entries_[{key.second, key.first}] = std::conj(value);
  if (support_) out.support_ = support_->swapped();
  return out;
}

CoefficientTable CoefficientTable::pruned(double threshold) const {
  CoefficientTable out(alpha_);
  for (const auto& [key, value] : entries_) {
    if (std::abs(value) > threshold) out.entries_.insert({key, value});
  }
  out.support_ = support_;
  return out;
}

}  // namespace diskwalk
