#include "treatynet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/distributions/students_t.hpp>

namespace treatynet {

IndexedSeries IndexedSeries::make(std::string name,
                                  std::vector<std::pair<std::string, double>> values) {
  std::sort(values.begin(), values.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].second)) {
      throw ValidationError("series '" + name + "': non-finite value for key '" +
                            values[i].first + "'");
    }
    if (i > 0 && values[i].first == values[i - 1].first) {
      throw ValidationError("series '" + name + "': duplicate key '" + values[i].first + "'");
    }
  }
  return IndexedSeries{std::move(name), std::move(values)};
}

std::string_view pvalue_method_name(PValueMethod method) {
  return method == PValueMethod::TApprox ? "t" : "permutation";
}

PValueMethod parse_pvalue_method(std::string_view text) {
  if (text == "t") return PValueMethod::TApprox;
  if (text == "permutation") return PValueMethod::Permutation;
  throw ValidationError("unknown p-value method '" + std::string(text) +
                        "' (expected 't' or 'permutation')");
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    throw ValidationError("spearman: zero rank variance (correlation undefined)");
  }
  return sxy / std::sqrt(sxx * syy);
}

double t_approx_pvalue(double r, std::size_t n) {
  const double dof = static_cast<double>(n) - 2.0;
  const double denom = (1.0 - r) * (1.0 + r);
  if (denom <= 0.0) return 0.0;  // |r| == 1
  const double t = r * std::sqrt(dof / denom);
  boost::math::students_t_distribution<double> dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double permutation_pvalue(const std::vector<double>& ra, std::vector<double> rb,
                          double r_obs, std::size_t permutations, std::uint64_t seed) {
  // permuting raw values permutes their ranks identically, so shuffle ranks
  std::mt19937_64 rng(splitmix64(seed));
  std::size_t hits = 0;
  const double threshold = std::fabs(r_obs) - 1e-12;
  for (std::size_t p = 0; p < permutations; ++p) {
    for (std::size_t i = rb.size(); i > 1; --i) {
      std::swap(rb[i - 1], rb[rng() % i]);
    }
    if (std::fabs(pearson(ra, rb)) >= threshold) ++hits;
  }
  return static_cast<double>(hits + 1) / static_cast<double>(permutations + 1);
}

}  // namespace

CorrelationResult spearman(const IndexedSeries& a, const IndexedSeries& b,
                           PValueMethod method, std::size_t permutations,
                           std::uint64_t seed) {
  if (method == PValueMethod::Permutation && permutations < 1000) {
    throw ValidationError("spearman: permutation method requires >= 1000 permutations");
  }

  // key-overlap join; both series are key-sorted
  std::vector<double> va, vb;
  std::size_t i = 0, j = 0;
  while (i < a.values.size() && j < b.values.size()) {
    const auto& ka = a.values[i].first;
    const auto& kb = b.values[j].first;
    if (ka < kb) {
      ++i;
    } else if (kb < ka) {
      ++j;
    } else {
      va.push_back(a.values[i].second);
      vb.push_back(b.values[j].second);
      ++i;
      ++j;
    }
  }
  if (va.size() < 3) {
    throw ValidationError("spearman: key overlap of '" + a.name + "' and '" + b.name +
                          "' is " + std::to_string(va.size()) + ", need >= 3");
  }

  const std::vector<double> ra = average_ranks(va);
  const std::vector<double> rb = average_ranks(vb);
  const double r = pearson(ra, rb);

  CorrelationResult out;
  out.r = r;
  out.n = va.size();
  out.method = method;
  out.p = method == PValueMethod::TApprox
              ? t_approx_pvalue(r, va.size())
              : permutation_pvalue(ra, rb, r, permutations, seed);
  return out;
}

}  // namespace treatynet
