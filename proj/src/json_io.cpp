#include "quantoid/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace quantoid::io {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedDocument, what); }

const Json& member(const Json& document, const char* name) {
  if (!document.is_object()) malformed("expected a JSON object");
  const auto it = document.find(name);
  if (it == document.end()) malformed(std::string("missing \"") + name + "\"");
  return *it;
}

std::string label_text(const Json& label) {
  if (label.is_string()) return label.get<std::string>();
  if (label.is_number_integer()) return label.dump();
  malformed("ground set labels must be strings or integers");
}

std::vector<std::string> parse_labels(const Json& array, const char* name) {
  if (!array.is_array()) malformed(std::string("\"") + name + "\" must be an array");
  std::vector<std::string> labels;
  for (const auto& label : array) labels.push_back(label_text(label));
  return labels;
}

std::string rational_text(const std::string& key, const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw Error(Errc::MalformedRational, "value of \"" + key + "\" must be a string or integer");
}

std::vector<int> parse_sizes(const Json& array, const char* name) {
  if (!array.is_array()) malformed(std::string("\"") + name + "\" must be an array");
  std::vector<int> sizes;
  for (const auto& v : array) {
    if (!v.is_number_integer()) malformed(std::string("\"") + name + "\" must hold integers");
    sizes.push_back(v.get<int>());
  }
  return sizes;
}

Json labels_json(const GroundSet& ground, Mask subset) {
  Json out = Json::array();
  for_each_element(subset, [&](int i) { out.push_back(ground.label(i)); });
  return out;
}

}  // namespace

SetFunction parse_set_function(const Json& document) {
  auto labels = parse_labels(member(document, "ground_set"), "ground_set");
  const Json& values = member(document, "values");
  if (!values.is_object()) malformed("\"values\" must be an object");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [key, value] : values.items()) pairs.emplace_back(key, rational_text(key, value));
  return build(std::move(labels), pairs);
}

Json to_json(const SetFunction& f) {
  Json values = Json::object();
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    values[f.ground().key(static_cast<Mask>(m))] = to_string(f[static_cast<Mask>(m)]);
  }
  return Json{{"ground_set", f.ground().labels()}, {"values", std::move(values)}};
}

Json to_json(const ApproxSetFunction& f) {
  Json values = Json::object();
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    values[f.ground().key(static_cast<Mask>(m))] = f[static_cast<Mask>(m)];
  }
  return Json{{"ground_set", f.ground().labels()}, {"values", std::move(values)}, {"tol", f.tol}};
}

Json to_json(const Classification& c) {
  return Json{{"normalized", c.normalized},     {"nondecreasing", c.nondecreasing},
              {"submodular", c.submodular},     {"complementary", c.complementary},
              {"tight", c.tight},               {"integer", c.integer},
              {"selfdual", c.selfdual},         {"polymatroid", c.polymatroid},
              {"polyquantoid", c.polyquantoid}, {"matroid", c.matroid},
              {"quantoid", c.quantoid}};
}

Json family_to_json(const GroundSet& ground, const Family& family) {
  Json out = Json::array();
  for (Mask m : family) out.push_back(ground.key(m));
  return out;
}

Json to_json(const SharingReport& report, const GroundSet& ground) {
  Json out{{"dealer", ground.label(report.dealer)},
           {"kind", std::string(kind_name(report.kind))},
           {"perfect", report.perfect},
           {"authorized", family_to_json(ground, report.authorized)},
           {"minimal_authorized", family_to_json(ground, report.minimal_authorized)},
           {"essential", labels_json(ground, report.essential)},
           {"ideal", report.ideal}};
  if (report.extraction) {
    out["extraction"] = Json{{"t", to_string(report.extraction->t)},
                             {"rank", to_json(report.extraction->rank)}};
  } else {
    out["extraction"] = nullptr;
  }
  return out;
}

Json to_json(const Expansion& expansion) {
  Json blocks = Json::object();
  for (int i = 0; i < expansion.map.source.size(); ++i) {
    Json names = Json::array();
    for (int k : expansion.map.blocks[static_cast<std::size_t>(i)]) {
      names.push_back(expansion.map.expanded.label(k));
    }
    blocks[expansion.map.source.label(i)] = std::move(names);
  }
  Json out{{"mode", std::string(expansion_kind_name(expansion.kind))}, {"blocks", std::move(blocks)}};
  if (expansion.kind == ExpansionKind::two_factor) {
    Json pairs = Json::object();
    for (std::size_t b = 0; b < expansion.pairs.size(); ++b) {
      pairs[expansion.map.expanded.label(static_cast<int>(b))] =
          Json::array({expansion.pairs[b][0], expansion.pairs[b][1]});
    }
    out["pairs"] = std::move(pairs);
  }
  out["expansion"] = to_json(expansion.expanded);
  return out;
}

JointDistribution parse_distribution(const Json& document, double tol) {
  GroundSet parties(parse_labels(member(document, "parties"), "parties"));
  auto alphabets = parse_sizes(member(document, "alphabets"), "alphabets");
  const Json& probs = member(document, "probs");
  if (!probs.is_array()) malformed("\"probs\" must be an array");
  std::vector<double> values;
  for (const auto& p : probs) {
    if (!p.is_number()) malformed("\"probs\" must hold numbers");
    values.push_back(p.get<double>());
  }
  return JointDistribution(std::move(parties), std::move(alphabets), std::move(values), tol);
}

PureState parse_state(const Json& document, double tol) {
  GroundSet parties(parse_labels(member(document, "parties"), "parties"));
  auto dims = parse_sizes(member(document, "dims"), "dims");
  const Json& amplitudes = member(document, "amplitudes");
  if (!amplitudes.is_array()) malformed("\"amplitudes\" must be an array");
  Eigen::VectorXcd vec(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index k = 0;
  for (const auto& a : amplitudes) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      malformed("each amplitude must be a [re, im] pair");
    }
    vec(k++) = {a[0].get<double>(), a[1].get<double>()};
  }
  return PureState(std::move(parties), std::move(dims), std::move(vec), tol);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
}

Json read_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot read " + path);
    buffer << in.rdbuf();
  }
  return parse_text(buffer.str());
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace quantoid::io
