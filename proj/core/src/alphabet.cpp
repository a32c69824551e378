#include "shiftgeom/alphabet.hpp"

#include <algorithm>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {

bool is_reserved_symbol(char c) {
  return c == '(' || c == ')' || c == '.' || c == '*' || c == ' ' || c == '\t' || c == '\n' ||
         c == '\r' || c == '\f' || c == '\v';
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw InputError("alphabet is empty");
  if (symbols_.size() > kMaxSize) throw InputError("alphabet has more than 255 symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (c < 0x21 || c > 0x7e || is_reserved_symbol(symbols_[i])) {
      throw InputError(std::string("symbol not allowed in an alphabet: '") + symbols_[i] + "'");
    }
    if (index_[c] >= 0) throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    index_[c] = static_cast<std::int16_t>(i);
  }
}

std::size_t Alphabet::index(char c) const {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw InputError(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
  return static_cast<std::size_t>(i);
}

void Alphabet::validate(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!contains(word[i])) {
      throw InputError("position " + std::to_string(i) + ": symbol '" + word[i] +
                       "' is not in alphabet \"" + symbols_ + "\"");
    }
  }
}

bool Alphabet::accepts(std::string_view word) const {
  return std::all_of(word.begin(), word.end(), [&](char c) { return contains(c); });
}

bool Alphabet::less(std::string_view a, std::string_view b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto x = index_[static_cast<unsigned char>(a[i])];
    auto y = index_[static_cast<unsigned char>(b[i])];
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

bool Alphabet::shortlex_less(std::string_view a, std::string_view b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return less(a, b);
}

Word Alphabet::word_from_index(std::uint64_t n, std::size_t len) const {
  Word w(len, symbols_[0]);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = symbols_[n % symbols_.size()];
    n /= symbols_.size();
  }
  return w;
}

std::size_t hamming(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) {
    throw InputError("hamming: length mismatch (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  }
  std::size_t h = 0;
  for (std::size_t i = 0; i < u.size(); ++i) h += u[i] != v[i];
  return h;
}

std::size_t hamming(const Alphabet& alphabet, std::string_view u, std::string_view v) {
  alphabet.validate(u);
  alphabet.validate(v);
  return hamming(u, v);
}

bool occurs_in(std::string_view v, std::string_view w) { return w.find(v) != std::string_view::npos; }

std::size_t occurrence_count(std::string_view w, std::string_view v) {
  if (v.empty()) return w.size() + 1;
  std::size_t count = 0;
  for (auto pos = w.find(v); pos != std::string_view::npos; pos = w.find(v, pos + 1)) ++count;
  return count;
}

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

Word primitive_root(std::string_view w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return Word(w.substr(0, p));
  }
  return Word(w);
}

bool is_primitive(std::string_view w) { return primitive_root(w).size() == w.size(); }

bool is_unbordered(std::string_view w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.substr(0, k) == w.substr(w.size() - k)) return false;
  }
  return true;
}

Word rotate_left(std::string_view w, std::size_t k) {
  if (w.empty()) return Word();
  k %= w.size();
  return Word(w.substr(k)) + Word(w.substr(0, k));
}

Word least_rotation(const Alphabet& alphabet, std::string_view w) {
  Word best(w);
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = rotate_left(w, k);
    if (alphabet.less(r, best)) best = std::move(r);
  }
  return best;
}

Word cyclic_extend(std::string_view w, std::size_t len) {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(w[i % w.size()]);
  return out;
}

}  // namespace shiftgeom
