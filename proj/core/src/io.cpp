#include "lcmlat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("expected a JSON object");
  return doc;
}

Integer element_value(const json& v) {
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  throw ValidationError("elements must be decimal strings or integers");
}

GcdSet set_from(const json& doc) {
  const auto it = doc.find("elements");
  if (it == doc.end() || !it->is_array()) throw ValidationError("set file needs an 'elements' array");
  std::vector<Integer> values;
  for (const auto& v : *it) values.push_back(element_value(v));
  std::string name;
  if (const auto n = doc.find("name"); n != doc.end()) {
    if (!n->is_string()) throw ValidationError("'name' must be a string");
    name = n->get<std::string>();
  }
  return GcdSet::build(std::move(values), std::move(name));
}

Structure structure_from(const json& doc) {
  const auto n = doc.find("n");
  const auto covers = doc.find("covers");
  if (n == doc.end() || !n->is_number_integer()) throw ValidationError("structure file needs an integer 'n'");
  if (covers == doc.end() || !covers->is_array()) {
    throw ValidationError("structure file needs a 'covers' array");
  }
  std::vector<CoverPair> pairs;
  for (const auto& c : *covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw ValidationError("each cover must be a pair of integers");
    }
    pairs.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return Structure::from_covers(n->get<int>(), pairs);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string dot(const Structure& s, const std::string& name, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int x = 0; x < s.size(); ++x) out << "  n" << x << " [label=" << quoted(labels[x]) << "];\n";
  std::map<int, std::vector<int>> ranks;
  const auto heights = s.heights();
  for (int x = 0; x < s.size(); ++x) ranks[heights[x]].push_back(x);
  for (const auto& [h, members] : ranks) {
    out << "  { rank=same;";
    for (int x : members) out << " n" << x << ";";
    out << " }\n";
  }
  for (const auto& [a, b] : s.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

GcdSet parse_set_json(const std::string& text) { return set_from(parse_object(text)); }

std::string set_to_json(const GcdSet& s) {
  json doc;
  if (!s.name().empty()) doc["name"] = s.name();
  doc["elements"] = json::array();
  for (const auto& x : s.elements()) doc["elements"].push_back(to_string(x));
  return doc.dump(2) + "\n";
}

Structure parse_structure_json(const std::string& text) { return structure_from(parse_object(text)); }

std::string structure_to_json(const Structure& s) {
  json doc;
  doc["n"] = s.size();
  doc["covers"] = json::array();
  for (const auto& [a, b] : s.covers()) doc["covers"].push_back({a, b});
  return doc.dump() + "\n";
}

InputDocument parse_input_json(const std::string& text) {
  const json doc = parse_object(text);
  if (doc.contains("elements")) return set_from(doc);
  if (doc.contains("covers")) return structure_from(doc);
  throw ValidationError("file has neither 'elements' nor 'covers'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string to_dot(const GcdSet& s) {
  std::vector<std::string> labels;
  for (const auto& x : s.elements()) labels.push_back(to_string(x));
  return dot(s.order(), s.name().empty() ? "set" : s.name(), labels);
}

std::string to_dot(const Structure& s, const std::string& name) {
  std::vector<std::string> labels;
  for (int x = 0; x < s.size(); ++x) labels.push_back(std::to_string(x));
  return dot(s, name, labels);
}

}  // namespace lcmlat
