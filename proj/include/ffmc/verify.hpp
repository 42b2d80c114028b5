#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffmc/bigint.hpp"
#include "ffmc/poly.hpp"

namespace ffmc {

// Brute-force oracles and experiment drivers.  Every experiment enumerates
// its full instance space (or draws a seeded sample), compares against the
// closed form, and reports exactly.  Experiments are deterministic: the
// report is a pure function of the parameters, independent of the job count.

struct VerificationReport {
  std::string experiment;
  std::vector<std::pair<std::string, long long>> params;
  Rat expected;
  Rat observed;
  bool pass;  // always equivalent to expected == observed
  std::uint64_t instances;
  double elapsed_ms;
  std::string note;  // failure detail; empty when pass
};

struct SampleEstimate {
  std::uint64_t trials;
  std::uint64_t successes;
  Rat estimate;
  Rat target;
  double standard_error;  // sqrt(est(1-est)/trials), reporting only
  std::uint64_t seed;
};

struct RunOptions {
  std::uint64_t budget = 1ull << 24;  // max enumerated instances per experiment
  int jobs = 1;
};

// Counter-based deterministic generator (SplitMix64).  Worker count never
// changes the sample set because each counter opens an independent stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next();
  /// Unbiased draw from [0, q) by rejection.
  std::uint64_t below(std::uint64_t q);

 private:
  std::uint64_t s_;
};
/// Stream for a (seed, counter) pair.
SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t counter);

/// Oracle for the coprime-tuple count N_a: enumerates every tuple
/// f_i = a_i x^{d_i + 1} + h_i with deg h_i <= d_i and counts gcd = 1.
/// Degrees may be negative (d_i = -1 pins f_i to the constant a_i; below
/// that f_i = 0), which the closed form does not cover.
std::uint64_t coprime_tuple_oracle(const GfPtr& F, const std::vector<int>& degrees,
                                   const std::vector<Gf::El>& a);

// Exhaustive experiments.  All counts exact; pass iff expected == observed.
VerificationReport verify_count_simple(std::uint64_t q, int n, int k,
                                       const RunOptions& opt = {});
/// Per-base assertion: EVERY unimodular base pencil admits exactly
/// q^n - q^{k+1} unimodular one-column extensions.  Requires k + 1 < n.
VerificationReport verify_extension(std::uint64_t q, int n, int k,
                                    const RunOptions& opt = {});
/// Formula, recurrence and truncation checks over every nonincreasing
/// degree list with entries in [0, max_degree] and every nonzero a.
/// expected / observed = total / passing checks.
VerificationReport verify_coprime_tuples(std::uint64_t q, int m, int max_degree,
                                         const RunOptions& opt = {});
/// Per-irreducible fiber sizes of the characteristic polynomial map on
/// m-companion matrices, plus the stepwise unimodularity profile of every
/// member of an irreducible fiber.
VerificationReport verify_fiber(std::uint64_t q, int l, int m,
                                const RunOptions& opt = {});
/// Exhaustive splitting-subspace census against the closed form; modulus
/// optionally pinned (the count is modulus-invariant).
VerificationReport verify_splitting(std::uint64_t q, int m, int d,
                                    const RunOptions& opt = {},
                                    const std::optional<std::vector<Gf::El>>& modulus_packed =
                                        std::nullopt);
/// Exhaustive density of unimodular members of M_{n,k}(F_q[x]; d); the
/// direct minor-GCD route and the linearized-pencil route must agree on
/// every instance.
VerificationReport verify_density_exhaustive(std::uint64_t q, int n, int k, int d,
                                             const RunOptions& opt = {});

// Structural property experiments.
/// Smith reconstruction U*M*V = D, constant nonzero det(U), det(V),
/// divisibility chain, and determinantal-divisor identity on seeded random
/// matrix polynomials (q in {2,3}, shapes <= 4x4, degree <= 2).
VerificationReport verify_smith_properties(int count, std::uint64_t seed,
                                           const RunOptions& opt = {});
/// Kalman rank criterion vs pencil unimodularity, exhaustive over all pairs
/// with k <= kmax, l <= lmax.
VerificationReport verify_reachability_agreement(std::uint64_t q, int kmax, int lmax,
                                                 const RunOptions& opt = {});
/// Controllability indices are invariant under random Gamma transformations.
VerificationReport verify_gamma_invariance(std::uint64_t q, int transforms_per_pair,
                                           std::uint64_t seed, const RunOptions& opt = {});
/// Wimmer divisibility decision vs brute-force completion existence,
/// exhaustive at the given sizes.
VerificationReport verify_wimmer_agreement(std::uint64_t q, int lmax,
                                           const RunOptions& opt = {});

/// Seeded Monte Carlo estimate of the unimodular density in
/// M_{n,k}(F_q[x]; d).  Bit-identical successes for identical seed+trials.
SampleEstimate estimate_density(std::uint64_t q, int n, int k, int d,
                                std::uint64_t trials, std::uint64_t seed,
                                const RunOptions& opt = {});

}  // namespace ffmc
