#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shiftgeom {

using Word = std::string;

/// Ordered set of single-character symbols.
///
/// The order given at construction is the order used for every
/// lexicographic tie-break in the library.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 255;

  explicit Alphabet(std::string_view symbols);
  static Alphabet binary() { return Alphabet("01"); }

  std::size_t size() const { return symbols_.size(); }
  char symbol(std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws InputError for symbols outside the alphabet.
  std::size_t index(char c) const;
  /// Throws InputError naming the first offending position.
  void validate(std::string_view word) const;
  bool accepts(std::string_view word) const;

  /// Lexicographic order by symbol rank, shorter first on a common prefix.
  bool less(std::string_view a, std::string_view b) const;
  /// Shorter words first, then lexicographic.
  bool shortlex_less(std::string_view a, std::string_view b) const;

  /// The `n`-th word of length `len` in lexicographic order.
  Word word_from_index(std::uint64_t n, std::size_t len) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// Symbols that may not appear in an alphabet because the literal grammar uses them.
bool is_reserved_symbol(char c);

std::size_t hamming(std::string_view u, std::string_view v);
std::size_t hamming(const Alphabet& alphabet, std::string_view u, std::string_view v);

bool occurs_in(std::string_view v, std::string_view w);
/// |w|_v: number of (possibly overlapping) occurrences of v in w.
std::size_t occurrence_count(std::string_view w, std::string_view v);
Word reversed(std::string_view w);
/// Shortest r with w = r^k.
Word primitive_root(std::string_view w);
bool is_primitive(std::string_view w);
bool is_unbordered(std::string_view w);
/// Lexicographically least rotation under the alphabet order.
Word least_rotation(const Alphabet& alphabet, std::string_view w);
Word rotate_left(std::string_view w, std::size_t k);
/// w repeated until it has exactly `len` symbols.
Word cyclic_extend(std::string_view w, std::size_t len);

}  // namespace shiftgeom
