#include "rauszer/json_io.hpp"

#include <algorithm>

namespace rauszer {

using nlohmann::json;

namespace {

std::vector<int> flat_table(const json& t, const char* name) {
  if (!t.is_array()) throw InputError(std::string("table '") + name + "' must be an array");
  std::vector<int> out;
  if (!t.empty() && t[0].is_array()) {
    for (const auto& row : t) {
      if (!row.is_array()) throw InputError(std::string("table '") + name + "' mixes rows and scalars");
      for (const auto& v : row) out.push_back(v.get<int>());
    }
  } else {
    for (const auto& v : t) out.push_back(v.get<int>());
  }
  return out;
}

json square_table(const std::vector<int>& t, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(t[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json parse_json_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed JSON document");
  return doc;
}

Preorder preorder_from_json(const json& doc, BuildMode mode) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("pairs"))
    throw InputError("preorder document needs fields 'n' and 'pairs'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw InputError("'n' must be a nonnegative integer");
  const std::size_t n = doc["n"].get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& pr : doc["pairs"]) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer() ||
        pr[0].get<long long>() < 0 || pr[1].get<long long>() < 0)
      throw InputError("each pair must be [x,y] with nonnegative integers");
    pairs.emplace_back(pr[0].get<std::size_t>(), pr[1].get<std::size_t>());
  }
  return Preorder::build(n, pairs, mode);
}

json preorder_to_json(const Preorder& p) {
  json pairs = json::array();
  for (auto [x, y] : p.pairs())
    if (x != y) pairs.push_back(json::array({x, y}));
  return json{{"n", p.size()}, {"pairs", std::move(pairs)}};
}

FiniteAlgebra algebra_from_json(const json& doc) {
  for (const char* field : {"size", "meet", "join", "bot", "top"})
    if (!doc.is_object() || !doc.contains(field))
      throw InputError(std::string("algebra document is missing field '") + field + "'");
  const int n = doc["size"].get<int>();
  std::map<std::string, std::vector<int>> ops;
  if (doc.contains("ops")) {
    if (!doc["ops"].is_object()) throw InputError("'ops' must be an object of named tables");
    for (const auto& [name, tbl] : doc["ops"].items()) ops[name] = flat_table(tbl, name.c_str());
  }
  return FiniteAlgebra::make(n, flat_table(doc["meet"], "meet"), flat_table(doc["join"], "join"),
                             doc["bot"].get<int>(), doc["top"].get<int>(), std::move(ops));
}

json algebra_to_json(const FiniteAlgebra& a) {
  json ops = json::object();
  for (const auto& [name, tbl] : a.ops()) {
    bool binary = tbl.size() == static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(a.size());
    ops[name] = binary ? square_table(tbl, a.size()) : json(tbl);
  }
  json doc{{"size", a.size()},
           {"meet", square_table([&] {
              std::vector<int> t;
              for (int i = 0; i < a.size(); ++i)
                for (int j = 0; j < a.size(); ++j) t.push_back(a.meet(i, j));
              return t;
            }(), a.size())},
           {"join", square_table([&] {
              std::vector<int> t;
              for (int i = 0; i < a.size(); ++i)
                for (int j = 0; j < a.size(); ++j) t.push_back(a.join(i, j));
              return t;
            }(), a.size())},
           {"bot", a.bot()},
           {"top", a.top()}};
  if (!ops.empty()) doc["ops"] = std::move(ops);
  return doc;
}

json class_report_to_json(const ClassReport& r) {
  json doc{{"class", r.class_name}, {"holds", r.holds}};
  if (r.witness)
    doc["witness"] = json{{"axiom", r.witness->axiom}, {"tuple", r.witness->tuple}};
  else
    doc["witness"] = nullptr;
  return doc;
}

json approximation_to_json(const Approximation& ap, const InformationSystem& sys) {
  auto labels = [&](const Bits& b) {
    json arr = json::array();
    b.for_each([&](std::size_t i) { arr.push_back(sys.objects[i]); });
    return arr;
  };
  return json{{"lower", labels(ap.lower)}, {"upper", labels(ap.upper)}, {"definable", ap.definable}};
}

json embedding_report_to_json(const StoneEmbedding& emb, const PrimeFilterSpace& space) {
  json laws = json::object();
  json witness = nullptr;
  for (const auto& l : emb.laws) {
    laws[l.law] = l.ok;
    if (!l.ok && witness.is_null()) witness = json{{"law", l.law}, {"elements", l.witness}};
  }
  json points = json::array();
  for (const auto& p : space.points) points.push_back(p.members());
  json h = json::array();
  for (const auto& hx : emb.h) h.push_back(hx.members());
  json doc{{"points", std::move(points)}, {"h", std::move(h)}, {"laws", std::move(laws)}, {"witness", std::move(witness)}};
  if (space.phi) {
    json phi = json::array();
    for (std::size_t i = 0; i < space.phi->size(); ++i) phi.push_back((*space.phi)(i));
    doc["phi"] = std::move(phi);
  }
  return doc;
}

}  // namespace rauszer
