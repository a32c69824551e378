#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "shiftgeom/classify.hpp"
#include "shiftgeom/io.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom::cli {

std::uint64_t fnv1a(std::string_view bytes);
std::string digest_string(std::string_view bytes);

/// {"value": "p/q", "decimal": 12 significant digits}
Json rational_json(const Rational& r);
Json rational_json(const BigRational& r);
Json witness_json(const Witness& w);
Json neighborhood_json(const Neighborhood& n);

/// Inputs named on the command line, with their content digests.
class Inputs {
 public:
  Json load_file(const std::string& role, const std::string& path);
  void literal(const std::string& role, const std::string& text);
  const Json& json() const { return digests_; }

 private:
  Json digests_ = Json::object();
};

/// One line per result key; rationals as "p/q (decimal)".
std::string render_text(const Json& results);

}  // namespace shiftgeom::cli
