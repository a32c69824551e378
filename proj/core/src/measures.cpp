#include "shiftgeom/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {
namespace {

constexpr double kTolerance = 1e-14;

// Power iteration on (A + I)/2, which shares the Perron vector of A but is aperiodic.
std::vector<double> perron_vector(const ShiftPresentation& g, bool left, std::size_t& iterations) {
  const std::size_t n = g.state_count();
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  for (std::size_t it = 0; it < kPowerIterationCap; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (const auto& e : g.edges()) {
      if (left) next[e.to] += v[e.from];
      else next[e.from] += v[e.to];
    }
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += next[i] = (next[i] + v[i]) / 2;
    double diff = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      diff = std::max(diff, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    iterations = std::max(iterations, it + 1);
    if (diff < kTolerance) break;
  }
  return v;
}

std::optional<std::size_t> edge_with_label(const ShiftPresentation& g, std::size_t state, std::size_t label) {
  for (std::size_t e : g.out_edges()[state]) {
    if (g.edges()[e].label == label) return e;
  }
  return std::nullopt;
}

std::vector<double> step_distribution(const MarkovMeasure& mu, const std::vector<double>& pi) {
  std::vector<double> out(pi.size(), 0.0);
  const auto& edges = mu.presentation.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].to] += pi[edges[e].from] * mu.transition[e];
  return out;
}

double max_path_product(const MarkovMeasure& mu, std::size_t state, std::size_t t) {
  if (t == 0) return 1.0;
  double best = 0;
  for (std::size_t e : mu.presentation.out_edges()[state]) {
    best = std::max(best, mu.transition[e] * max_path_product(mu, mu.presentation.edges()[e].to, t - 1));
  }
  return best;
}

}  // namespace

double MarkovMeasure::stochasticity_residual() const {
  std::vector<double> rows(presentation.state_count(), 0.0);
  for (std::size_t e = 0; e < transition.size(); ++e) rows[presentation.edges()[e].from] += transition[e];
  double worst = 0;
  for (double r : rows) worst = std::max(worst, std::abs(r - 1));
  return worst;
}

double MarkovMeasure::stationarity_residual() const {
  auto next = step_distribution(*this, stationary);
  double worst = 0;
  for (std::size_t i = 0; i < next.size(); ++i) worst = std::max(worst, std::abs(next[i] - stationary[i]));
  return worst;
}

MarkovMeasure parry_measure(const ShiftPresentation& x) {
  ShiftPresentation cover = shannon_cover(x);
  if (!is_strongly_connected(cover)) throw PreconditionError("shift is reducible");
  MarkovMeasure mu{cover, {}, {}, 0, 0};
  auto r = perron_vector(cover, false, mu.iterations);
  auto l = perron_vector(cover, true, mu.iterations);

  double ar = 0, sr = 0;
  for (const auto& e : cover.edges()) ar += r[e.to];
  for (double v : r) sr += v;
  mu.eigenvalue = ar / sr;

  const auto& edges = cover.edges();
  mu.transition.resize(edges.size());
  std::vector<double> rows(cover.state_count(), 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    mu.transition[e] = r[edges[e].to] / (mu.eigenvalue * r[edges[e].from]);
    rows[edges[e].from] += mu.transition[e];
  }
  for (std::size_t e = 0; e < edges.size(); ++e) mu.transition[e] /= rows[edges[e].from];

  mu.stationary.resize(cover.state_count());
  double total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) total += mu.stationary[i] = l[i] * r[i];
  for (double& p : mu.stationary) p /= total;
  for (std::size_t it = 0; it < 10000 && mu.stationarity_residual() > 1e-15; ++it) {
    auto next = step_distribution(mu, mu.stationary);
    double sum = 0;
    for (std::size_t i = 0; i < next.size(); ++i) sum += mu.stationary[i] = (mu.stationary[i] + next[i]) / 2;
    for (double& p : mu.stationary) p /= sum;
  }
  return mu;
}

double cylinder(const MarkovMeasure& mu, std::string_view w) {
  const ShiftPresentation& g = mu.presentation;
  if (!g.alphabet().accepts(w)) return 0.0;
  double total = 0;
  for (std::size_t s = 0; s < g.state_count(); ++s) {
    double p = mu.stationary[s];
    std::size_t state = s;
    for (char c : w) {
      auto e = edge_with_label(g, state, g.alphabet().index(c));
      if (!e) {
        p = 0;
        break;
      }
      p *= mu.transition[*e];
      state = g.edges()[*e].to;
    }
    total += p;
  }
  return total;
}

BoundCertificate gamma_t_bound(const MarkovMeasure& mu, std::size_t max_length) {
  constexpr std::int64_t kScale = std::int64_t{1} << 30;
  for (std::size_t t = 1; t <= 4; ++t) {
    double gt = 0;
    for (std::size_t s = 0; s < mu.presentation.state_count(); ++s) gt = std::max(gt, max_path_product(mu, s, t));
    auto scaled = static_cast<std::int64_t>(std::ceil(gt * static_cast<double>(kScale)));
    if (scaled >= kScale) continue;
    BoundCertificate cert{Rational(scaled, kScale), t, max_length, 0};
    for (std::size_t n = 1; t * n <= max_length; ++n) cert.words_checked += language(mu.presentation, t * n).size();
    if (!verify_certificate(mu, cert)) throw std::logic_error("gamma_t_bound: certificate failed verification");
    return cert;
  }
  throw PreconditionError("no bound with t <= 4: the measure is degenerate");
}

bool verify_certificate(const MarkovMeasure& mu, const BoundCertificate& cert) {
  const double gamma = cert.gamma.to_double();
  for (std::size_t n = 1; cert.t * n <= cert.verified_length; ++n) {
    const double limit = std::pow(gamma, static_cast<double>(n)) * (1 + 1e-12);
    bool ok = true;
    for_each_factor(mu.presentation, cert.t * n, [&](const Word& w, const StateSet&) {
      ok = cylinder(mu, w) <= limit;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

Word bernoulli_prefix(const Alphabet& alphabet, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 gen(seed);
  const std::uint64_t k = alphabet.size();
  // 2^64 mod k; draws below it are rejected so the rest split evenly.
  const std::uint64_t reject = (0 - k) % k;
  Word out;
  out.reserve(n);
  while (out.size() < n) {
    std::uint64_t v = gen();
    if (v < reject) continue;
    out.push_back(alphabet.symbol(v % k));
  }
  return out;
}

}  // namespace shiftgeom
