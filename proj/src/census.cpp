#include "ffmc/census.hpp"

#include <numeric>

#include "ffmc/errors.hpp"

namespace ffmc {

namespace {
void require_q(const Int& q) {
  if (q < 2) throw DomainError("requires q >= 2");
}
}  // namespace

CountResult count_coprime_tuples(const Int& q, const std::vector<int>& degrees) {
  require_q(q);
  const int m = static_cast<int>(degrees.size());
  if (m < 1) throw DomainError("requires m >= 1");
  long long k = 0;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw DomainError("requires all degrees >= 0");
    if (i > 0 && degrees[i] > degrees[i - 1])
      throw DomainError("requires nonincreasing degrees");
    k += degrees[i];
  }
  Int value = int_pow(q, k + m) - int_pow(q, k + 1);
  CountResult res{"coprime-tuples", {{"q", q}, {"m", m}, {"k", Int(k)}}, value, std::nullopt};
  return res;
}

CountResult count_simple(const Int& q, int n, int k) {
  require_q(q);
  if (k < 1) throw DomainError("requires k >= 1");
  if (k >= n) throw DomainError("requires k < n");
  Int value = 1;
  const Int qn = int_pow(q, n);
  for (int i = 1; i <= k; ++i) value *= qn - int_pow(q, i);
  Rat prob(value, int_pow(q, static_cast<std::uint64_t>(n) * k));
  return {"simple", {{"q", q}, {"n", n}, {"k", k}}, value, prob};
}

CountResult count_extension(const Int& q, int n, int k, int t) {
  require_q(q);
  if (k < 0) throw DomainError("requires k >= 0");
  if (t < 1) throw DomainError("requires t >= 1");
  if (k + t >= n) throw DomainError("requires k + t < n");
  Int value = 1;
  const Int qn = int_pow(q, n);
  for (int i = 1; i <= t; ++i) value *= qn - int_pow(q, k + i);
  return {"extension", {{"q", q}, {"n", n}, {"k", k}, {"t", t}}, value, std::nullopt};
}

CountResult fiber_size(const Int& q, int l, int m) {
  require_q(q);
  if (m < 1) throw DomainError("requires m >= 1");
  if (m >= l) throw DomainError("requires m < l");
  Int value = 1;
  const Int ql = int_pow(q, l);
  for (int t = 1; t <= m - 1; ++t) value *= ql - int_pow(q, l - t);
  return {"fiber", {{"q", q}, {"l", l}, {"m", m}}, value, std::nullopt};
}

CountResult count_block_companion(const Int& q, int m, int d) {
  require_q(q);
  if (m < 1) throw DomainError("requires m >= 1");
  if (d < 1) throw DomainError("requires d >= 1");
  Int value = int_pow(q, static_cast<std::uint64_t>(m) * (m - 1) * (d - 1));
  const Int qm = int_pow(q, m);
  for (int i = 1; i <= m - 1; ++i) value *= qm - int_pow(q, i);
  return {"block-companion", {{"q", q}, {"m", m}, {"d", d}}, value, std::nullopt};
}

CountResult count_splitting(const Int& q, int m, int d) {
  require_q(q);
  if (m < 1) throw DomainError("requires m >= 1");
  if (d < 1) throw DomainError("requires d >= 1");
  Int value = (int_pow(q, static_cast<std::uint64_t>(m) * d) - 1) / (int_pow(q, m) - 1);
  value *= int_pow(q, static_cast<std::uint64_t>(m) * (m - 1) * (d - 1));
  return {"splitting", {{"q", q}, {"m", m}, {"d", d}}, value, std::nullopt};
}

Rat unimodular_probability(const Int& q, int n, int k) {
  CountResult cs = count_simple(q, n, k);  // enforces 1 <= k < n
  return *cs.probability;
}

}  // namespace ffmc
