#include "tinbl/universes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "tinbl/parallel.hpp"

namespace tinbl {

std::string_view universe_name(UniverseKind kind) noexcept {
  switch (kind) {
    case UniverseKind::Binary: return "binary";
    case UniverseKind::TernaryNoVacuum: return "ternary-nv";
    case UniverseKind::Total: return "total";
  }
  return "?";
}

UniverseKind universe_kind_from_name(std::string_view name) {
  if (name == "binary") return UniverseKind::Binary;
  if (name == "ternary-nv" || name == "ternary") return UniverseKind::TernaryNoVacuum;
  if (name == "total") return UniverseKind::Total;
  throw std::invalid_argument("unknown universe kind '" + std::string(name) + "'");
}

std::size_t terms_per_factor(UniverseKind kind) noexcept {
  switch (kind) {
    case UniverseKind::Binary: return 2;
    case UniverseKind::TernaryNoVacuum: return 3;
    case UniverseKind::Total: return 4;
  }
  return 0;
}

std::vector<BitValue> factor_values(UniverseKind kind) {
  switch (kind) {
    case UniverseKind::Binary: return {BitValue::L, BitValue::H};
    case UniverseKind::TernaryNoVacuum: return {BitValue::L, BitValue::H, BitValue::X};
    case UniverseKind::Total: return {BitValue::V, BitValue::L, BitValue::H, BitValue::X};
  }
  return {};
}

SignalExpr build_universe(UniverseKind kind, std::size_t m) {
  if (m == 0) throw std::invalid_argument("universe needs at least one bit");
  std::vector<SignalExpr> factors;
  factors.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    SignalExpr low = SignalExpr::rail(i, 0);
    SignalExpr high = SignalExpr::rail(i, 1);
    std::vector<std::pair<Integer, SignalExpr>> addends{{1, low}, {1, high}};
    if (kind != UniverseKind::Binary) addends.emplace_back(1, SignalExpr::product({low, high}));
    if (kind == UniverseKind::Total) addends.emplace_back(1, SignalExpr::unit());
    factors.push_back(SignalExpr::sum(std::move(addends)));
  }
  return SignalExpr::product(std::move(factors));
}

Amplitude universe_factor_value(UniverseKind kind, std::size_t i, ClockIndex t, const Rns& rns) {
  return factor_value(kind, rns.sign({i, 0}, t), rns.sign({i, 1}, t));
}

void AmplitudeStats::merge(const AmplitudeStats& other) {
  if (other.m != m || other.kind != kind) throw std::invalid_argument("cannot merge stats of different universes");
  ticks += other.ticks;
  zero_count += other.zero_count;
  for (const auto& [a, c] : other.histogram) histogram[a] += c;
  for (std::size_t i = 0; i < sign_pairs.size(); ++i)
    for (std::size_t p = 0; p < 4; ++p) sign_pairs[i][p] += other.sign_pairs[i][p];
  for (std::size_t k = 0; k < both_plus.size(); ++k) both_plus[k] += other.both_plus[k];
}

AmplitudeStats universe_stats(UniverseKind kind, std::size_t m, std::uint64_t n, const Rns& rns, ClockIndex t0,
                              unsigned threads) {
  if (n == 0) throw std::invalid_argument("tick count must be at least 1");
  if (m != rns.bits()) throw std::invalid_argument("universe bit count does not match noise system");
  const SignalExpr universe = build_universe(kind, m);
  auto empty = [&] {
    AmplitudeStats s;
    s.kind = kind;
    s.m = m;
    s.sign_pairs.assign(m, {0, 0, 0, 0});
    s.both_plus.assign(m + 1, 0);
    return s;
  };
  auto parts = map_chunks<AmplitudeStats>(n, threads, [&](std::uint64_t begin, std::uint64_t end) {
    AmplitudeStats s = empty();
    for (std::uint64_t k = begin; k < end; ++k) {
      const ClockIndex t = t0 + k;
      const Amplitude a = eval(universe, t, rns);
      ++s.ticks;
      if (a == 0)
        ++s.zero_count;
      else
        ++s.histogram[abs(a)];
      const std::vector<Sign> signs = rns.rail_signs(t);
      std::size_t plus = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t pair = (signs[2 * i] > 0 ? 2 : 0) + (signs[2 * i + 1] > 0 ? 1 : 0);
        ++s.sign_pairs[i][pair];
        plus += pair == 3;
      }
      ++s.both_plus[plus];
    }
    return s;
  });
  AmplitudeStats total = empty();
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::uint64_t expanded_term_count(UniverseKind kind, std::size_t m) noexcept {
  const std::uint64_t base = terms_per_factor(kind);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(count, base, &count)) return 0;
  }
  return count;
}

Superposition expand_universe(UniverseKind kind, std::size_t m, std::size_t cap) {
  if (m == 0) throw std::invalid_argument("universe needs at least one bit");
  const std::uint64_t count = expanded_term_count(kind, m);
  if (count == 0 || count > cap)
    throw ExpansionLimitError("expanded " + std::string(universe_name(kind)) + " universe on " + std::to_string(m) +
                              " bits exceeds the cap of " + std::to_string(cap) + " terms");
  Superposition result = Superposition::single(ProductString::vacuum(m));
  for (std::size_t i = 1; i <= m; ++i) {
    Superposition factor(m);
    for (BitValue v : factor_values(kind)) {
      ProductString w = ProductString::vacuum(m);
      w.set(i, v);
      factor.accumulate(w, 1);
    }
    result = superpose_mul(result, factor, cap);
  }
  return result;
}

namespace {

Integer power(unsigned base, std::size_t exp) {
  Integer r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

long double binomial_pmf(std::size_t m, std::size_t k, long double p) {
  return std::exp(std::lgamma(static_cast<long double>(m) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
                  std::lgamma(static_cast<long double>(m - k) + 1) + k * std::log(p) + (m - k) * std::log1p(-p));
}

}  // namespace

bool binomial_within(std::uint64_t successes, std::uint64_t n, long double p, double sigmas) {
  const long double mean = n * p;
  const long double sd = std::sqrt(n * p * (1 - p));
  return std::fabs(static_cast<long double>(successes) - mean) <= sigmas * sd;
}

ChiSquareResult chi_square_binomial(const std::vector<std::uint64_t>& counts, std::size_t m, double p,
                                    double sigmas) {
  if (counts.size() != m + 1) throw std::invalid_argument("binomial counts need m + 1 bins");
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  struct Bin {
    long double expected = 0;
    long double observed = 0;
  };
  std::vector<Bin> bins;
  for (std::size_t k = 0; k <= m; ++k) bins.push_back({n * binomial_pmf(m, k, p), static_cast<long double>(counts[k])});
  // Pool sparse bins toward the bulk from both ends.
  while (bins.size() > 2 && bins.back().expected < 5) {
    Bin last = bins.back();
    bins.pop_back();
    bins.back().expected += last.expected;
    bins.back().observed += last.observed;
  }
  while (bins.size() > 2 && bins.front().expected < 5) {
    Bin first = bins.front();
    bins.erase(bins.begin());
    bins.front().expected += first.expected;
    bins.front().observed += first.observed;
  }
  ChiSquareResult r;
  for (const auto& b : bins) {
    const long double d = b.observed - b.expected;
    r.statistic += static_cast<double>(d * d / b.expected);
  }
  r.dof = bins.size() - 1;
  if (r.dof == 0) {
    r.pass = true;
    return r;
  }
  const double tail = std::erfc(sigmas / std::sqrt(2.0));
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.critical = boost::math::quantile(boost::math::complement(dist, tail));
  r.pass = r.statistic <= r.critical;
  return r;
}

std::vector<LawCheck> check_universe_laws(const AmplitudeStats& stats, double sigmas) {
  std::vector<LawCheck> out;
  const std::size_t m = stats.m;
  const std::uint64_t n = stats.ticks;

  std::uint64_t tallied = stats.zero_count;
  for (const auto& [a, c] : stats.histogram) tallied += c;
  out.push_back({"tally", tallied == n, std::to_string(tallied) + " of " + std::to_string(n) + " ticks tallied"});

  auto only_value = [&](const Integer& v) {
    return stats.histogram.empty() || (stats.histogram.size() == 1 && stats.histogram.begin()->first == v);
  };
  const std::uint64_t nonzero = n - stats.zero_count;

  switch (stats.kind) {
    case UniverseKind::Binary: {
      out.push_back({"nonzero_value", only_value(power(2, m)), "nonzero |amplitude| must be 2^" + std::to_string(m)});
      const long double p_zero = 1.0L - std::ldexp(1.0L, -static_cast<int>(m));
      out.push_back({"zero_fraction", binomial_within(stats.zero_count, n, p_zero, sigmas),
                     std::to_string(stats.zero_count) + " zeros, expected fraction 1 - 2^-" + std::to_string(m)});
      break;
    }
    case UniverseKind::TernaryNoVacuum: {
      out.push_back({"never_zero", stats.zero_count == 0, std::to_string(stats.zero_count) + " zero ticks"});
      bool law = true;
      for (std::size_t k = 0; k <= m; ++k) {
        auto it = stats.histogram.find(power(3, k));
        const std::uint64_t seen = it == stats.histogram.end() ? 0 : it->second;
        law = law && seen == stats.both_plus[k];
      }
      std::uint64_t powers = 0;
      for (std::size_t k = 0; k <= m; ++k) powers += stats.both_plus[k];
      law = law && powers == nonzero;
      out.push_back({"power_of_three", law, "|amplitude| = 3^k with k = bits whose rails are both +1"});
      const ChiSquareResult chi = chi_square_binomial(stats.both_plus, m, 0.25, sigmas);
      out.push_back({"binomial_k", chi.pass,
                     "chi2 = " + std::to_string(chi.statistic) + " on " + std::to_string(chi.dof) +
                         " dof, critical " + std::to_string(chi.critical)});
      break;
    }
    case UniverseKind::Total: {
      out.push_back({"nonzero_value", only_value(power(4, m)), "nonzero |amplitude| must be 4^" + std::to_string(m)});
      out.push_back({"nonzero_iff_all_plus", nonzero == stats.both_plus[m],
                     std::to_string(nonzero) + " nonzero ticks, " + std::to_string(stats.both_plus[m]) +
                         " ticks with every bit (+,+)"});
      const long double p_nonzero = std::ldexp(1.0L, -2 * static_cast<int>(m));
      out.push_back({"nonzero_fraction", binomial_within(nonzero, n, p_nonzero, sigmas),
                     std::to_string(nonzero) + " nonzero, expected fraction 4^-" + std::to_string(m)});
      break;
    }
  }
  return out;
}

}  // namespace tinbl
