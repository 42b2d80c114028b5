#include "ffmc/verify.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "ffmc/census.hpp"
#include "ffmc/control.hpp"
#include "ffmc/errors.hpp"
#include "ffmc/matpoly.hpp"
#include "ffmc/splitfield.hpp"

namespace ffmc {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t q) {
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % q + 1) % q;
  while (true) {
    std::uint64_t r = next();
    if (rem == 0 || r <= std::numeric_limits<std::uint64_t>::max() - rem)
      return r % q;
  }
}

SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 g(seed);
  // decorrelate the per-counter streams with one scramble round
  return SplitMix64(g.next() ^ (counter * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t checked_total(const Int& total, std::uint64_t budget, const char* what) {
  if (total > budget)
    throw BudgetError(std::string(what) + " of size " + total.str() +
                      " exceeds budget " + std::to_string(budget));
  return total.convert_to<std::uint64_t>();
}

// Deterministic chunked reduction over [0, count): results are combined in
// chunk order, so the outcome is independent of scheduling.
template <class R, class Map, class Combine>
R parallel_index_reduce(std::uint64_t count, int jobs, R init, Map map, Combine combine) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t min_chunk = 1024;
  std::uint64_t chunks = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(1, count / min_chunk));
  if (chunks <= 1 || count == 0) return count ? combine(std::move(init), map(0, count)) : init;
  std::vector<std::future<R>> futs;
  futs.reserve(chunks);
  const std::uint64_t step = count / chunks;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t b = c * step;
    const std::uint64_t e = (c + 1 == chunks) ? count : b + step;
    futs.push_back(std::async(std::launch::async, [&map, b, e] { return map(b, e); }));
  }
  R acc = std::move(init);
  for (auto& f : futs) acc = combine(std::move(acc), f.get());
  return acc;
}

VerificationReport finish(std::string experiment,
                          std::vector<std::pair<std::string, long long>> params,
                          Rat expected, Rat observed, std::uint64_t instances,
                          Clock::time_point t0, std::string note = "") {
  const bool pass = expected == observed;
  return {std::move(experiment), std::move(params), std::move(expected),
          std::move(observed), pass, instances, ms_since(t0), std::move(note)};
}

}  // namespace

std::uint64_t coprime_tuple_oracle(const GfPtr& F, const std::vector<int>& degrees,
                                   const std::vector<Gf::El>& a) {
  const int m = static_cast<int>(degrees.size());
  if (m < 1 || a.size() != degrees.size()) throw DomainError("oracle needs m >= 1 and |a| = m");
  bool a_nonzero = false;
  for (auto v : a) a_nonzero |= (v != 0);
  if (!a_nonzero) throw DomainError("oracle needs a nonzero vector a");

  const std::uint64_t q = F->order();
  // Free choices: h_i with deg h_i <= d_i exists only when d_i >= 0.
  std::vector<int> free_digits(m, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i)
    if (degrees[i] >= 0) {
      free_digits[i] = degrees[i] + 1;
      for (int t = 0; t < free_digits[i]; ++t) total *= q;
    }

  std::uint64_t count = 0;
  std::vector<Poly> fs;
  fs.reserve(m);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fs.clear();
    std::uint64_t rest = idx;
    for (int i = 0; i < m; ++i) {
      const int di = degrees[i];
      // leading part a_i x^{d_i + 1}; negative powers of x are zero
      std::vector<Gf::El> c(di + 1 >= 0 ? di + 2 : 0, 0);
      if (di + 1 >= 0) c[di + 1] = a[i];
      for (int t = 0; t < free_digits[i]; ++t) {
        c[t] = static_cast<Gf::El>(rest % q);
        rest /= q;
      }
      fs.emplace_back(F, std::move(c));
    }
    if (gcd_monic(fs).is_one()) ++count;
  }
  return count;
}

VerificationReport verify_count_simple(std::uint64_t q, int n, int k, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const Int expected = count_simple(Int(q), n, k).value;  // validates 1 <= k < n
  GfPtr F = Gf::from_order(q);
  const std::uint64_t total = checked_total(
      int_pow(Int(q), static_cast<std::uint64_t>(n) * k), opt.budget, "pencil sweep");

  auto map = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t c = 0;
    for (std::uint64_t idx = b; idx < e; ++idx)
      if (is_unimodular(linear_pencil(MatF::from_index(F, n, k, idx)))) ++c;
    return c;
  };
  const std::uint64_t observed = parallel_index_reduce<std::uint64_t>(
      total, opt.jobs, 0, map, [](std::uint64_t x, std::uint64_t y) { return x + y; });

  return finish("simple", {{"q", (long long)q}, {"n", n}, {"k", k}}, Rat(expected),
                Rat(Int(observed)), total, t0);
}

VerificationReport verify_extension(std::uint64_t q, int n, int k, const RunOptions& opt) {
  const auto t0 = Clock::now();
  if (k < 1) throw DomainError("requires k >= 1");
  if (k + 1 >= n) throw DomainError("requires k + 1 < n");
  const Int expected = count_extension(Int(q), n, k, 1).value;  // q^n - q^{k+1}
  GfPtr F = Gf::from_order(q);
  const std::uint64_t bases = checked_total(
      int_pow(Int(q), static_cast<std::uint64_t>(n) * k), opt.budget, "base sweep");
  const std::uint64_t ext = int_pow(Int(q), n).convert_to<std::uint64_t>();

  struct Acc {
    std::uint64_t unimodular_bases = 0;
    std::uint64_t instances = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bad;  // (base idx, count)
  };
  auto map = [&](std::uint64_t b, std::uint64_t e) {
    Acc a;
    for (std::uint64_t idx = b; idx < e; ++idx) {
      MatF Y = MatF::from_index(F, n, k, idx);
      ++a.instances;
      if (!is_unimodular(linear_pencil(Y))) continue;
      ++a.unimodular_bases;
      std::uint64_t good = 0;
      for (std::uint64_t bi = 0; bi < ext; ++bi) {
        MatF col = MatF::from_index(F, n, 1, bi);
        if (is_unimodular(linear_pencil(hconcat(Y, col)))) ++good;
        ++a.instances;
      }
      if (Int(good) != expected && !a.bad) a.bad = {idx, good};
    }
    return a;
  };
  Acc acc = parallel_index_reduce<Acc>(bases, opt.jobs, {}, map, [](Acc x, Acc y) {
    x.unimodular_bases += y.unimodular_bases;
    x.instances += y.instances;
    if (!x.bad) x.bad = y.bad;
    return x;
  });

  std::string note;
  Rat observed(expected);
  if (acc.bad) {
    observed = Rat(Int(acc.bad->second));
    note = "base #" + std::to_string(acc.bad->first) + " admits " +
           std::to_string(acc.bad->second) + " extensions";
  }
  auto rep = finish("extension", {{"q", (long long)q}, {"n", n}, {"k", k}}, Rat(expected),
                    observed, acc.instances, t0, note);
  return rep;
}

VerificationReport verify_coprime_tuples(std::uint64_t q, int m, int max_degree,
                                         const RunOptions& opt) {
  const auto t0 = Clock::now();
  if (m < 1) throw DomainError("requires m >= 1");
  if (max_degree < 0) throw DomainError("requires max_degree >= 0");
  GfPtr F = Gf::from_order(q);
  const Int qi(q);

  // All nonincreasing degree lists of length m with entries in [0, max_degree].
  std::vector<std::vector<int>> lists;
  std::vector<int> cur(m);
  auto rec = [&](auto&& self, int i, int hi) -> void {
    if (i == m) {
      lists.push_back(cur);
      return;
    }
    for (int d = hi; d >= 0; --d) {
      cur[i] = d;
      self(self, i + 1, d);
    }
  };
  rec(rec, 0, max_degree);

  // Budget: the largest cell enumerates q^{k+m} tuples.
  {
    long long kmax = static_cast<long long>(max_degree) * m;
    checked_total(int_pow(qi, kmax + m), opt.budget, "coprime tuple cell");
  }

  std::map<std::pair<std::vector<int>, std::vector<Gf::El>>, std::uint64_t> memo;
  std::uint64_t instances = 0;
  auto oracle = [&](const std::vector<int>& degs, const std::vector<Gf::El>& a) {
    auto key = std::make_pair(degs, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t v = coprime_tuple_oracle(F, degs, a);
    std::uint64_t cell = 1;
    for (int d : degs)
      if (d >= 0) cell *= int_pow(qi, d + 1).convert_to<std::uint64_t>();
    instances += cell;
    memo.emplace(std::move(key), v);
    return v;
  };

  long long checks = 0, passed = 0;
  std::string note;
  auto record = [&](bool ok, const std::string& what) {
    ++checks;
    if (ok)
      ++passed;
    else if (note.empty())
      note = what;
  };

  const std::uint64_t avecs = int_pow(qi, m).convert_to<std::uint64_t>();
  for (const auto& degs : lists) {
    long long k = 0;
    for (int d : degs) k += d;
    const Int closed = int_pow(qi, k + m) - int_pow(qi, k + 1);

    for (std::uint64_t av = 1; av < avecs; ++av) {
      std::vector<Gf::El> a(m);
      std::uint64_t t = av;
      for (int i = 0; i < m; ++i) {
        a[i] = static_cast<Gf::El>(t % q);
        t /= q;
      }
      // formula check
      record(Int(oracle(degs, a)) == closed, "formula mismatch");

      // recurrence: q^{k+m} = sum_{d=0}^{d_t+1} q^d N_a(d_1-d, ..., d_m-d)
      int tmax = 0;
      for (int i = 0; i < m; ++i)
        if (a[i] != 0) tmax = i;
      Int lhs = int_pow(qi, k + m);
      Int rhs = 0;
      for (int d = 0; d <= degs[tmax] + 1; ++d) {
        std::vector<int> shifted(degs);
        for (auto& v : shifted) v -= d;
        rhs += int_pow(qi, d) * Int(oracle(shifted, a));

        // truncation: trailing negative degrees drop out entirely
        int s = tmax;
        for (int i = 0; i < m; ++i)
          if (shifted[i] >= 0) s = std::max(s, i);
        if (s + 1 < m) {
          std::vector<int> trunc(shifted.begin(), shifted.begin() + s + 1);
          std::vector<Gf::El> atrunc(a.begin(), a.begin() + s + 1);
          record(oracle(shifted, a) == oracle(trunc, atrunc), "truncation mismatch");
        }
      }
      record(lhs == rhs, "recurrence mismatch");
    }
  }

  return finish("coprime", {{"q", (long long)q}, {"m", m}, {"max_degree", max_degree}},
                Rat(checks), Rat(passed), instances, t0, note);
}

VerificationReport verify_fiber(std::uint64_t q, int l, int m, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const Int expected = fiber_size(Int(q), l, m).value;  // validates 1 <= m < l
  GfPtr F = Gf::from_order(q);
  const std::uint64_t total = checked_total(
      int_pow(Int(q), static_cast<std::uint64_t>(l) * m), opt.budget, "m-companion sweep");

  std::set<std::vector<Gf::El>> irred;
  for (const Poly& f : irreducible_polys(F, l)) irred.insert(f.coeffs());

  struct Acc {
    std::map<std::vector<Gf::El>, std::uint64_t> tally;
    std::uint64_t profile_failures = 0;
  };
  auto map = [&](std::uint64_t b, std::uint64_t e) {
    Acc a;
    for (std::uint64_t idx = b; idx < e; ++idx) {
      MCompanion C{l, m, MatF::from_index(F, l, m, idx)};
      Poly f = mcompanion_char_poly(C);
      ++a.tally[f.coeffs()];
      if (irred.count(f.coeffs())) {
        for (bool ok : stepwise_unimodular_profile(C))
          if (!ok) ++a.profile_failures;
      }
    }
    return a;
  };
  Acc acc = parallel_index_reduce<Acc>(total, opt.jobs, {}, map, [](Acc x, Acc y) {
    for (auto& [key, c] : y.tally) x.tally[key] += c;
    x.profile_failures += y.profile_failures;
    return x;
  });

  // Per-polynomial equality for every irreducible target.
  Rat observed(expected);
  std::string note;
  for (const auto& fc : irred) {
    auto it = acc.tally.find(fc);
    const Int got = it == acc.tally.end() ? Int(0) : Int(it->second);
    if (got != expected) {
      observed = Rat(got);
      note = "an irreducible target has fiber size " + got.str();
      break;
    }
  }
  if (note.empty() && acc.profile_failures > 0) {
    observed = Rat(-1);
    note = std::to_string(acc.profile_failures) + " stepwise profile entries false";
  }
  std::uint64_t sum = 0;
  for (auto& [key, c] : acc.tally) sum += c;
  if (note.empty() && sum != total) {
    observed = Rat(-1);
    note = "fiber sizes do not partition the sweep";
  }
  return finish("fiber", {{"q", (long long)q}, {"l", l}, {"m", m}}, Rat(expected), observed,
                total, t0, note);
}

VerificationReport verify_splitting(std::uint64_t q, int m, int d, const RunOptions& opt,
                                    const std::optional<std::vector<Gf::El>>& modulus_packed) {
  const auto t0 = Clock::now();
  const Int expected = count_splitting(Int(q), m, d).value;
  GfPtr F = Gf::from_order(q);
  std::optional<Poly> modulus;
  if (modulus_packed) modulus = Poly(F, *modulus_packed);
  ExtFieldCtx ctx = make_ext(F, m, d, modulus);
  const std::uint64_t instances =
      checked_total(gaussian_binomial(Int(q), m * d, m), opt.budget, "subspace census");
  Int observed = count_splitting_bruteforce(ctx, opt.budget);
  return finish("splitting", {{"q", (long long)q}, {"m", m}, {"d", d}}, Rat(expected),
                Rat(observed), instances, t0);
}

VerificationReport verify_density_exhaustive(std::uint64_t q, int n, int k, int d,
                                             const RunOptions& opt) {
  const auto t0 = Clock::now();
  if (d < 1) throw DomainError("requires d >= 1");
  const Rat expected = unimodular_probability(Int(q), n, k);  // validates 1 <= k < n
  GfPtr F = Gf::from_order(q);
  const std::uint64_t total = checked_total(
      int_pow(Int(q), static_cast<std::uint64_t>(n) * k * d), opt.budget, "density sweep");
  const std::uint64_t per_coeff = int_pow(Int(q), static_cast<std::uint64_t>(n) * k)
                                      .convert_to<std::uint64_t>();

  struct Acc {
    std::uint64_t unimodular = 0;
    std::uint64_t route_disagreements = 0;
  };
  auto map = [&](std::uint64_t b, std::uint64_t e) {
    Acc a;
    for (std::uint64_t idx = b; idx < e; ++idx) {
      std::vector<MatF> coeffs;
      coeffs.reserve(d + 1);
      std::uint64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        coeffs.push_back(MatF::from_index(F, n, k, rest % per_coeff));
        rest /= per_coeff;
      }
      coeffs.push_back(MatF::rect_identity(F, n, k));
      MatPoly A = MatPoly::from_coeffs(coeffs);
      const bool direct = is_unimodular(A);
      const bool via_linearization = is_unimodular(linearize(A).pencil);
      if (direct != via_linearization) ++a.route_disagreements;
      if (direct) ++a.unimodular;
    }
    return a;
  };
  Acc acc = parallel_index_reduce<Acc>(total, opt.jobs, {}, map, [](Acc x, Acc y) {
    x.unimodular += y.unimodular;
    x.route_disagreements += y.route_disagreements;
    return x;
  });

  Rat observed(Int(acc.unimodular), Int(total));
  std::string note;
  if (acc.route_disagreements > 0) {
    observed = Rat(-1);
    note = std::to_string(acc.route_disagreements) +
           " instances where direct and linearized routes disagree";
  }
  return finish("density", {{"q", (long long)q}, {"n", n}, {"k", k}, {"d", d}}, expected,
                observed, total, t0, note);
}

VerificationReport verify_smith_properties(int count, std::uint64_t seed,
                                           const RunOptions& opt) {
  (void)opt;
  const auto t0 = Clock::now();
  if (count < 1) throw DomainError("requires count >= 1");
  long long passed = 0;
  std::string note;

  GfPtr F2 = Gf::make(2), F3 = Gf::make(3);
  for (int it = 0; it < count; ++it) {
    SplitMix64 g = stream_rng(seed, it);
    const GfPtr& F = (g.below(2) == 0) ? F2 : F3;
    const std::uint64_t q = F->order();
    const int n = 1 + static_cast<int>(g.below(4));
    const int k = 1 + static_cast<int>(g.below(4));
    const int dmax = static_cast<int>(g.below(3));
    MatPoly M = MatPoly::zero(F, n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<Gf::El> c(dmax + 1);
        for (auto& v : c) v = static_cast<Gf::El>(g.below(q));
        M.set(i, j, Poly(F, std::move(c)));
      }

    SmithForm S = smith_form(M);
    bool ok = (S.U * M * S.V) == S.D;
    const Poly du = poly_det(S.U), dv = poly_det(S.V);
    ok = ok && du.is_constant() && !du.is_zero() && dv.is_constant() && !dv.is_zero();
    for (size_t i = 0; ok && i + 1 < S.factors.size(); ++i)
      ok = S.factors[i + 1].is_zero() || divides(S.factors[i], S.factors[i + 1]);
    // determinantal divisors: prod_{j<=i} f_j = gcd of all i x i minors
    Poly prod = Poly::one(F);
    for (size_t i = 0; ok && i < S.factors.size(); ++i) {
      prod = prod * S.factors[i];
      Poly g_i = minors_gcd(M, static_cast<int>(i) + 1);
      ok = (g_i.is_zero() && prod.is_zero()) || (!g_i.is_zero() && prod == g_i);
    }
    if (ok)
      ++passed;
    else if (note.empty())
      note = "instance #" + std::to_string(it) + " failed";
  }
  return finish("smith", {{"count", count}, {"seed", (long long)seed}}, Rat(count),
                Rat(passed), static_cast<std::uint64_t>(count), t0, note);
}

VerificationReport verify_reachability_agreement(std::uint64_t q, int kmax, int lmax,
                                                 const RunOptions& opt) {
  const auto t0 = Clock::now();
  GfPtr F = Gf::from_order(q);
  long long checks = 0, passed = 0;
  std::uint64_t instances = 0;
  std::string note;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) {
      const std::uint64_t na = checked_total(
          int_pow(Int(q), static_cast<std::uint64_t>(k) * k), opt.budget, "pair sweep");
      const std::uint64_t nb = checked_total(
          int_pow(Int(q), static_cast<std::uint64_t>(k) * l), opt.budget, "pair sweep");
      for (std::uint64_t ia = 0; ia < na; ++ia)
        for (std::uint64_t ib = 0; ib < nb; ++ib) {
          MatrixPair P = make_pair(MatF::from_index(F, k, k, ia),
                                   MatF::from_index(F, k, l, ib));
          ++checks;
          ++instances;
          if (is_reachable(P) == is_unimodular(pair_pencil(P)))
            ++passed;
          else if (note.empty())
            note = "disagreement at k=" + std::to_string(k) + " l=" + std::to_string(l);
        }
    }
  return finish("reachability", {{"q", (long long)q}, {"kmax", kmax}, {"lmax", lmax}},
                Rat(checks), Rat(passed), instances, t0, note);
}

namespace {
MatF random_matrix(const GfPtr& F, int rows, int cols, SplitMix64& g) {
  MatF M(F, rows, cols);
  const std::uint64_t q = F->order();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.set(i, j, static_cast<Gf::El>(g.below(q)));
  return M;
}

MatF random_invertible(const GfPtr& F, int n, SplitMix64& g) {
  while (true) {
    MatF M = random_matrix(F, n, n, g);
    if (det(M) != 0) return M;
  }
}
}  // namespace

VerificationReport verify_gamma_invariance(std::uint64_t q, int transforms_per_pair,
                                           std::uint64_t seed, const RunOptions& opt) {
  (void)opt;
  const auto t0 = Clock::now();
  GfPtr F = Gf::from_order(q);

  // Base pairs: every canonical pair with k <= 3, l <= 2, plus seeded random
  // pairs of the same shapes.
  std::vector<MatrixPair> bases;
  for (int l = 1; l <= 2; ++l) {
    std::vector<std::vector<int>> index_lists;
    if (l >= 1) {
      index_lists.push_back({1});
      index_lists.push_back({2});
      index_lists.push_back({3});
    }
    if (l >= 2) {
      index_lists.push_back({1, 1});
      index_lists.push_back({2, 1});
      index_lists.push_back({2, 2});
    }
    for (const auto& idx : index_lists) bases.push_back(brunovsky_pair(idx, l, F));
  }
  SplitMix64 g0 = stream_rng(seed, 0);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 2; ++l)
      bases.push_back(make_pair(random_matrix(F, k, k, g0), random_matrix(F, k, l, g0)));

  long long checks = 0, passed = 0;
  std::string note;
  for (size_t bi = 0; bi < bases.size(); ++bi) {
    const MatrixPair& P = bases[bi];
    const auto base_idx = controllability_indices(P).indices;
    SplitMix64 g = stream_rng(seed, bi + 1);
    for (int t = 0; t < transforms_per_pair; ++t) {
      MatF Pk = random_invertible(F, P.state_dim(), g);
      MatF Q = random_invertible(F, P.input_dim(), g);
      MatF R = random_matrix(F, P.input_dim(), P.state_dim(), g);
      MatrixPair T = gamma_transform(P, Pk, R, Q);
      ++checks;
      if (controllability_indices(T).indices == base_idx)
        ++passed;
      else if (note.empty())
        note = "indices changed under transformation of base pair #" + std::to_string(bi);
    }
  }
  return finish("gamma", {{"q", (long long)q}, {"transforms", transforms_per_pair},
                          {"seed", (long long)seed}},
                Rat(checks), Rat(passed), static_cast<std::uint64_t>(checks), t0, note);
}

VerificationReport verify_wimmer_agreement(std::uint64_t q, int lmax, const RunOptions& opt) {
  const auto t0 = Clock::now();
  GfPtr F = Gf::from_order(q);
  long long checks = 0, passed = 0;
  std::uint64_t instances = 0;
  std::string note;
  for (int l = 2; l <= lmax; ++l)
    for (int k = 1; k < l; ++k) {
      const std::uint64_t ny = checked_total(
          int_pow(Int(q), static_cast<std::uint64_t>(l) * k), opt.budget, "wimmer sweep");
      for (std::uint64_t iy = 0; iy < ny; ++iy) {
        MatF Y = MatF::from_index(F, l, k, iy);
        for_each_monic(F, l, [&](const Poly& f) {
          const bool decided = wimmer_completable(Y, f);
          const bool found = complete_char_poly(Y, f, opt.budget).has_value();
          ++checks;
          ++instances;
          if (decided == found)
            ++passed;
          else if (note.empty())
            note = "decision and search disagree at l=" + std::to_string(l) +
                   " k=" + std::to_string(k);
        });
      }
    }
  return finish("wimmer", {{"q", (long long)q}, {"lmax", lmax}}, Rat(checks), Rat(passed),
                instances, t0, note);
}

SampleEstimate estimate_density(std::uint64_t q, int n, int k, int d, std::uint64_t trials,
                                std::uint64_t seed, const RunOptions& opt) {
  if (trials < 1) throw DomainError("requires trials >= 1");
  if (d < 1) throw DomainError("requires d >= 1");
  const Rat target = unimodular_probability(Int(q), n, k);  // validates 1 <= k < n
  GfPtr F = Gf::from_order(q);

  auto map = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t succ = 0;
    for (std::uint64_t t = b; t < e; ++t) {
      SplitMix64 g = stream_rng(seed, t);
      std::vector<MatF> coeffs;
      coeffs.reserve(d + 1);
      for (int i = 0; i < d; ++i) coeffs.push_back(random_matrix(F, n, k, g));
      coeffs.push_back(MatF::rect_identity(F, n, k));
      if (is_unimodular(MatPoly::from_coeffs(coeffs))) ++succ;
    }
    return succ;
  };
  const std::uint64_t successes = parallel_index_reduce<std::uint64_t>(
      trials, opt.jobs, 0, map, [](std::uint64_t x, std::uint64_t y) { return x + y; });

  const Rat estimate{Int(successes), Int(trials)};
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {trials, successes, estimate, target, se, seed};
}

}  // namespace ffmc
