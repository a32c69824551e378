#include "shiftgeom/approximation.hpp"

#include <algorithm>
#include <set>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {

PointedSet::PointedSet(ShiftPresentation shift)
    : shift_(std::move(shift)), anchors_(shift_.all_states()) {}

PointedSet::PointedSet(ShiftPresentation shift, StateSet anchors)
    : shift_(std::move(shift)), anchors_(std::move(anchors)) {
  if (anchors_.size() != shift_.state_count()) throw InputError("anchor set size mismatch");
}

PointedSet::PointedSet(ShiftPresentation shift, const std::vector<std::string>& anchor_names)
    : shift_(std::move(shift)), anchors_(shift_.state_count(), false) {
  for (const auto& name : anchor_names) {
    if (auto i = shift_.state_index(name)) anchors_[*i] = true;
  }
}

bool PointedSet::is_shift_invariant() const { return count(anchors_) == shift_.state_count(); }

bool PointedSet::contains(const Configuration& x) const { return contains_config(shift_, x, anchors_); }

std::vector<Configuration> PointedSet::periodic_points(std::size_t p) const {
  std::vector<Configuration> out;
  for (const auto& w : periodic_words(shift_, p)) {
    if (!is_primitive(w)) continue;
    Configuration c = Configuration::periodic(shift_.alphabet(), w);
    if (contains(c)) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<Configuration> candidates_up_to(const PointedSet& x, std::size_t period_bound) {
  std::vector<Configuration> out;
  for (std::size_t p = 1; p <= period_bound; ++p) {
    for (auto& c : x.periodic_points(p)) out.push_back(std::move(c));
  }
  if (out.empty()) throw PreconditionError("no periodic point of period <= " + std::to_string(period_bound));
  return out;
}

MinimizerSet minimize_over(const std::vector<Configuration>& candidates, const Configuration& y,
                           std::size_t period_bound) {
  MinimizerSet out;
  out.period_bound = period_bound;
  bool found = false;
  for (const auto& c : candidates) {
    Rational d = d_besicovitch(c, y);
    if (!found || d < out.distance) {
      out.distance = d;
      out.points.clear();
      found = true;
    }
    if (d == out.distance) out.points.push_back(c);
  }
  std::set<Word> seen;
  for (const auto& c : out.points) {
    Word rep = least_rotation(c.alphabet(), c.right_period());
    if (seen.insert(rep).second) out.orbit_representatives.push_back(Configuration::periodic(c.alphabet(), rep));
  }
  return out;
}

}  // namespace

MinimizerSet nearest_periodic(const PointedSet& x, const Configuration& y, std::size_t period_bound) {
  if (period_bound == 0) throw InputError("period bound must be positive");
  if (!y.is_periodic()) throw PreconditionError("y is not periodic");
  return minimize_over(candidates_up_to(x, period_bound), y, period_bound);
}

UapVerdict uap_search(const PointedSet& x, std::size_t period_bound) {
  UapVerdict out;
  out.period_bound = period_bound;
  if (period_bound == 0) throw InputError("period bound must be positive");
  const Alphabet& alphabet = x.shift().alphabet();
  const auto candidates = candidates_up_to(x, period_bound);
  std::uint64_t total = 1;
  for (std::size_t p = 1; p <= period_bound; ++p) {
    total *= alphabet.size();
    for (std::uint64_t i = 0; i < total; ++i) {
      Word w = alphabet.word_from_index(i, p);
      if (!is_primitive(w)) continue;
      Configuration y = Configuration::periodic(alphabet, w);
      MinimizerSet ms = minimize_over(candidates, y, period_bound);
      if (ms.points.size() >= 2) {
        out.violation = true;
        out.witness = std::move(y);
        out.minimizers = std::move(ms);
        return out;
      }
    }
  }
  return out;
}

}  // namespace shiftgeom
