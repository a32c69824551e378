#include "shiftgeom/configuration.hpp"

#include <algorithm>
#include <set>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Configuration::Configuration(Alphabet alphabet, Word left_period, Word left_finite,
                             Word right_finite, Word right_period)
    : alphabet_(std::move(alphabet)),
      left_period_(std::move(left_period)),
      left_finite_(std::move(left_finite)),
      right_finite_(std::move(right_finite)),
      right_period_(std::move(right_period)) {
  if (left_period_.empty() || right_period_.empty()) throw InputError("empty period");
  alphabet_.validate(left_period_);
  alphabet_.validate(left_finite_);
  alphabet_.validate(right_finite_);
  alphabet_.validate(right_period_);
  canonicalize();
}

void Configuration::canonicalize() {
  left_period_ = primitive_root(left_period_);
  right_period_ = primitive_root(right_period_);
  std::size_t drop = 0;
  while (drop < left_finite_.size() && left_finite_[drop] == left_period_[0]) {
    left_period_ = rotate_left(left_period_, 1);
    ++drop;
  }
  left_finite_.erase(0, drop);
  while (!right_finite_.empty() && right_finite_.back() == right_period_.back()) {
    right_period_ = rotate_left(right_period_, right_period_.size() - 1);
    right_finite_.pop_back();
  }
}

Configuration Configuration::periodic(const Alphabet& alphabet, std::string_view w) {
  return Configuration(alphabet, Word(w), "", "", Word(w));
}

Configuration Configuration::from_parts(const Alphabet& alphabet, std::string_view left_period,
                                        std::string_view center, std::int64_t start,
                                        std::string_view right_period) {
  if (left_period.empty() || right_period.empty()) throw InputError("empty period");
  const auto lp = static_cast<std::int64_t>(left_period.size());
  const auto rp = static_cast<std::int64_t>(right_period.size());
  const std::int64_t end = start + static_cast<std::int64_t>(center.size());
  auto symbol = [&](std::int64_t i) -> char {
    if (i < start) return left_period[mod(i - start, lp)];
    if (i < end) return center[i - start];
    return right_period[mod(i - end, rp)];
  };
  const std::int64_t a = std::min<std::int64_t>(start, 0);
  const std::int64_t b = std::max<std::int64_t>(end, 0);
  Word left, lf, rf, right;
  for (std::int64_t i = a - lp; i < a; ++i) left.push_back(symbol(i));
  for (std::int64_t i = a; i < 0; ++i) lf.push_back(symbol(i));
  for (std::int64_t i = 0; i < b; ++i) rf.push_back(symbol(i));
  for (std::int64_t i = b; i < b + rp; ++i) right.push_back(symbol(i));
  return Configuration(alphabet, std::move(left), std::move(lf), std::move(rf), std::move(right));
}

char Configuration::at(std::int64_t i) const {
  if (i >= 0) {
    const auto rf = static_cast<std::int64_t>(right_finite_.size());
    if (i < rf) return right_finite_[i];
    return right_period_[(i - rf) % static_cast<std::int64_t>(right_period_.size())];
  }
  const std::int64_t j = -1 - i;
  const auto lf = static_cast<std::int64_t>(left_finite_.size());
  if (j < lf) return left_finite_[lf - 1 - j];
  const auto lp = static_cast<std::int64_t>(left_period_.size());
  return left_period_[lp - 1 - (j - lf) % lp];
}

Word Configuration::window(std::int64_t a, std::int64_t b) const {
  Word w;
  if (b < a) return w;
  w.reserve(static_cast<std::size_t>(b - a + 1));
  for (std::int64_t i = a; i <= b; ++i) w.push_back(at(i));
  return w;
}

Configuration Configuration::shifted(std::int64_t k) const {
  Word center = left_finite_ + right_finite_;
  return from_parts(alphabet_, left_period_, center, left_boundary() - k, right_period_);
}

bool Configuration::is_periodic() const {
  return left_finite_.empty() && right_finite_.empty() && left_period_ == right_period_;
}

std::string Configuration::str() const { return format_config(*this); }

std::string format_config(const Configuration& x) {
  return "inf(" + x.left_period() + ")" + x.left_finite() + "." + x.right_finite() + "inf(" +
         x.right_period() + ")";
}

Configuration parse_config(std::string_view literal, const Alphabet& alphabet) {
  // Positions in error messages refer to the literal as given.
  std::string text;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    text.push_back(c);
    origin.push_back(i);
  }
  auto pos = [&](std::size_t k) { return k < origin.size() ? origin[k] : literal.size(); };
  auto fail = [&](std::size_t k, const std::string& what) {
    return InputError("position " + std::to_string(pos(k)) + ": " + what);
  };

  std::size_t k = 0;
  auto expect = [&](std::string_view token) {
    if (text.compare(k, token.size(), token) != 0) throw fail(k, "expected '" + std::string(token) + "'");
    k += token.size();
  };
  auto word_until = [&](std::size_t stop) {
    Word w = text.substr(k, stop - k);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!alphabet.contains(w[i])) {
        throw fail(k + i, std::string("symbol '") + w[i] + "' is not in alphabet \"" +
                              alphabet.symbols() + "\"");
      }
    }
    k = stop;
    return w;
  };

  expect("inf(");
  std::size_t close = text.find(')', k);
  if (close == std::string::npos) throw fail(text.size(), "unterminated left period");
  if (close == k) throw fail(k, "empty period");
  Word lp = word_until(close);
  expect(")");
  std::size_t dot = text.find('.', k);
  if (dot == std::string::npos) throw fail(text.size(), "missing '.'");
  Word lf = word_until(dot);
  expect(".");
  std::size_t right_inf = text.rfind("inf(");
  if (right_inf == std::string::npos || right_inf < k) throw fail(k, "missing right period 'inf('");
  Word rf = word_until(right_inf);
  expect("inf(");
  if (text.empty() || text.back() != ')' || text.size() - 1 < k) {
    throw fail(text.size(), "unterminated right period");
  }
  if (text.size() - 1 == k) throw fail(k, "empty period");
  Word rp = word_until(text.size() - 1);
  return Configuration(alphabet, lp, lf, rf, rp);
}

Alphabet infer_alphabet(std::string_view literal) {
  std::string text(literal);
  for (auto p = text.find("inf("); p != std::string::npos; p = text.find("inf(")) text.erase(p, 4);
  std::set<char> symbols;
  for (char c : text) {
    if (!is_reserved_symbol(c)) symbols.insert(c);
  }
  if (symbols.empty()) throw InputError("cannot infer an alphabet from '" + std::string(literal) + "'");
  return Alphabet(std::string(symbols.begin(), symbols.end()));
}

}  // namespace shiftgeom
