#include "cli/config_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vortex::cli {

namespace {

double number_field(const json& entry, const char* key, std::size_t index) {
  if (!entry.contains(key) || !entry.at(key).is_number()) {
    std::ostringstream msg;
    msg << "vortex " << index << ": field \"" << key << "\" missing or not a number";
    throw ParseError(msg.str());
  }
  return entry.at(key).get<double>();
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot parse number '" + text + "'");
  }
  if (used != text.size()) throw ParseError("cannot parse number '" + text + "'");
  return value;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ConfigFile config_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vortices") || !doc.at("vortices").is_array()) {
    throw ParseError("configuration must be an object with a \"vortices\" array");
  }
  std::vector<Vortex> vortices;
  std::size_t index = 0;
  for (const auto& entry : doc.at("vortices")) {
    if (!entry.is_object()) throw ParseError("each vortex must be an object {x, y, d}");
    vortices.push_back({{number_field(entry, "x", index), number_field(entry, "y", index)},
                        number_field(entry, "d", index)});
    ++index;
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("\"label\" must be a string");
    label = doc.at("label").get<std::string>();
  }
  return {VortexConfiguration(std::move(vortices)), std::move(label)};
}

json config_to_json(const VortexConfiguration& config, const std::string& label) {
  json vortices = json::array();
  for (const auto& v : config) {
    vortices.push_back({{"x", v.position.real()}, {"y", v.position.imag()}, {"d", v.circulation}});
  }
  json doc = {{"vortices", std::move(vortices)}};
  if (!label.empty()) doc["label"] = label;
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') return {parse_real(text), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

Complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point '" + text + "' must be written x,y");
  return {parse_real(trim(text.substr(0, comma))), parse_real(trim(text.substr(comma + 1)))};
}

}  // namespace vortex::cli
