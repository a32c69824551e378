#include "report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "shiftgeom/configuration.hpp"
#include "shiftgeom/errors.hpp"

namespace shiftgeom::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(bytes);
  return os.str();
}

Json rational_json(const Rational& r) {
  return Json{{"value", r.str()}, {"decimal", decimal_string(r.to_double())}};
}

Json rational_json(const BigRational& r) {
  std::string value = numerator(r).str();
  if (denominator(r) != 1) value += "/" + denominator(r).str();
  return Json{{"value", value}, {"decimal", decimal_string(r.convert_to<double>())}};
}

Json witness_json(const Witness& w) {
  return Json{{"x", format_config(w.x)},
              {"y", format_config(w.y)},
              {"d_in", rational_json(w.d_in)},
              {"d_out", rational_json(w.d_out)}};
}

Json neighborhood_json(const Neighborhood& n) {
  Json j{{"dependency_count", n.dependency_count()}};
  if (!n.interval) {
    j["interval"] = nullptr;
    return j;
  }
  j["interval"] = {n.interval->first, n.interval->second};
  std::string mask;
  for (bool b : n.essential) mask += b ? '1' : '0';
  j["essential"] = mask;
  return j;
}

Json Inputs::load_file(const std::string& role, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  digests_[role] = {{"path", path}, {"digest", digest_string(bytes.str())}};
  try {
    return Json::parse(bytes.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void Inputs::literal(const std::string& role, const std::string& text) {
  digests_[role] = {{"value", text}, {"digest", digest_string(text)}};
}

namespace {

bool is_rational(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("value") && v.contains("decimal");
}

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (is_rational(v)) return v["value"].get<std::string>() + " (" + v["decimal"].get<std::string>() + ")";
  return v.dump();
}

}  // namespace

std::string render_text(const Json& results) {
  std::string out;
  for (const auto& [key, value] : results.items()) {
    if (value.is_object() && !is_rational(value)) {
      for (const auto& [sub, inner] : value.items()) out += key + "." + sub + ": " + render_value(inner) + "\n";
    } else {
      out += key + ": " + render_value(value) + "\n";
    }
  }
  return out;
}

}  // namespace shiftgeom::cli
