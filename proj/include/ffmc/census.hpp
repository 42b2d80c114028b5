#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffmc/bigint.hpp"

namespace ffmc {

// Exact evaluation of the closed-form counts.  Everything here is integer
// and rational arithmetic only -- no field objects, no floating point.
// Parameter validation mirrors each theorem's hypotheses; out-of-domain
// calls raise DomainError with a message naming the violated hypothesis.

struct CountResult {
  std::string formula;
  std::vector<std::pair<std::string, Int>> params;
  Int value;
  std::optional<Rat> probability;
};

/// Number of coprime tuples (f_i = a_i x^{d_i+1} + h_i, deg h_i <= d_i) for
/// any fixed nonzero a: q^{k+m} - q^{k+1} with k = sum d_i.  Requires m >= 1
/// and every d_i >= 0 (the closed form is proved only there; negative
/// degrees are oracle territory).
CountResult count_coprime_tuples(const Int& q, const std::vector<int>& degrees);

/// Number of A in M_{n,k}(F_q) with x I_{n,k} - A unimodular:
/// prod_{i=1}^{k} (q^n - q^i).  Requires 1 <= k < n.  probability = value / q^{nk}.
CountResult count_simple(const Int& q, int n, int k);

/// Number of n x t blocks extending a fixed unimodular n x k pencil base to
/// a unimodular n x (k+t) pencil: prod_{i=1}^{t} (q^n - q^{k+i}).
/// Requires k >= 0, t >= 1, k + t < n.
CountResult count_extension(const Int& q, int n, int k, int t);

/// Fiber size of the characteristic-polynomial map on m-companion matrices
/// of order l over an irreducible target: prod_{t=1}^{m-1} (q^l - q^{l-t}).
/// Requires 1 <= m < l.
CountResult fiber_size(const Int& q, int l, int m);

/// Number of (m,d)-block companion matrices with a given irreducible
/// characteristic polynomial of degree md:
/// q^{m(m-1)(d-1)} prod_{i=1}^{m-1} (q^m - q^i).  Requires m, d >= 1.
CountResult count_block_companion(const Int& q, int m, int d);

/// Number of m-dimensional alpha-splitting subspaces of F_{q^{md}}:
/// (q^{md} - 1)/(q^m - 1) * q^{m(m-1)(d-1)}.  Requires m, d >= 1.
CountResult count_splitting(const Int& q, int m, int d);

/// Probability that a uniformly random member of M_{n,k}(F_q[x]; d) is
/// unimodular: prod_{i=1}^{k} (1 - q^{i-n}), independent of d.
/// Requires 1 <= k < n.
Rat unimodular_probability(const Int& q, int n, int k);

}  // namespace ffmc
