// Copyright 2026 The modsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modsym/serialize.h"

#include <sstream>

#include "modsym/errors.h"

namespace modsym {
namespace {

using nlohmann::json;

json factors_json(const Modulus& mod) {
  json f = json::array();
  for (const PrimePower& pp : mod.factors()) f.push_back({pp.p, pp.e});
  return f;
}

json set_json(const IndexSet& s) {
  json a = json::array();
  for (std::uint32_t i : s.members()) a.push_back(i);
  return a;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("field '") + key + "': " + e.what());
  }
}

IndexSet parse_set(const json& a, std::uint32_t n) {
  if (!a.is_array()) throw SchemaError("part is not an array");
  IndexSet s(n);
  for (const json& v : a) {
    if (!v.is_number_unsigned()) throw SchemaError("index is not an unsigned integer");
    const auto i = v.get<std::uint64_t>();
    if (i < 1 || i > n) {
      throw SchemaError("index " + std::to_string(i) + " outside 1.." +
                        std::to_string(n));
    }
    s.insert(static_cast<std::uint32_t>(i));
  }
  return s;
}

}  // namespace

json meta_for(const S2Construction& s) {
  return json{{"N", s.scheme.base},
              {"g", s.scheme.digits},
              {"initial_items", s.initial.size()},
              {"bbr_degree", s.f.degree()},
              {"bbr_coeffs", s.f.coeffs()},
              {"d", s.scheme.digits}};
}

json meta_for(const SkConstruction& s, const HashFamilyOptions& options) {
  return json{{"u", s.hash.u()},
              {"b", s.hash.b},
              {"strategy", to_string(options.strategy)},
              {"seed", options.seed},
              {"initial_items", s.initial.size()},
              {"bbr_degree", s.f.degree()},
              {"bbr_coeffs", s.f.coeffs()},
              {"d", s.hash.u()}};
}

json cover_to_json(const WeightedRectCover& cover, const json& meta) {
  json items = json::array();
  for (const WeightedRect& it : cover.items()) {
    items.push_back({{"parts", {set_json(it.rect.rows), set_json(it.rect.cols)}},
                     {"weight", it.weight}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "rect"},
              {"m", cover.mod().value()},
              {"factors", factors_json(cover.mod())},
              {"n", cover.n()},
              {"k", 2},
              {"items", std::move(items)},
              {"meta", meta}};
}

json cover_to_json(const WeightedBoxCover& cover, const json& meta) {
  json items = json::array();
  for (const WeightedBox& it : cover.items()) {
    json parts = json::array();
    for (const IndexSet& a : it.box.parts) parts.push_back(set_json(a));
    items.push_back({{"parts", std::move(parts)}, {"weight", it.weight}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "box"},
              {"m", cover.mod().value()},
              {"factors", factors_json(cover.mod())},
              {"n", cover.n()},
              {"k", cover.k()},
              {"items", std::move(items)},
              {"meta", meta}};
}

CoverFile cover_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("cover file is not a JSON object");
  const int version = field<int>(j, "schema_version");
  if (version != kSchemaVersion) {
    throw SchemaError("unsupported schema_version " + std::to_string(version));
  }
  const auto kind = field<std::string>(j, "kind");
  if (kind != "rect" && kind != "box") {
    throw SchemaError("kind must be 'rect' or 'box', got '" + kind + "'");
  }
  const auto m = field<std::uint64_t>(j, "m");
  const auto n = field<std::uint32_t>(j, "n");
  const auto k = field<std::uint32_t>(j, "k");
  if (n < 1) throw SchemaError("n must be >= 1");
  if (k < 1) throw SchemaError("k must be >= 1");
  if (kind == "rect" && k != 2) throw SchemaError("rect covers have k = 2");

  std::optional<Modulus> mod;
  try {
    mod.emplace(m);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  json stated = j.contains("factors") ? j.at("factors") : json();
  if (stated != factors_json(*mod)) {
    throw SchemaError("factors do not match m = " + std::to_string(m));
  }

  const json& items = j.contains("items") ? j.at("items") : json();
  if (!items.is_array()) throw SchemaError("items is not an array");
  WeightedBoxCover box(n, k, *mod);
  for (const json& item : items) {
    const json parts = field<json>(item, "parts");
    const auto weight = field<std::uint64_t>(item, "weight");
    if (weight < 1 || weight >= m) {
      throw SchemaError("weight " + std::to_string(weight) +
                        " is not canonical (1.." + std::to_string(m - 1) + ")");
    }
    if (!parts.is_array() || parts.size() != k) {
      throw SchemaError("item does not have " + std::to_string(k) + " parts");
    }
    Box b;
    for (const json& part : parts) b.parts.push_back(parse_set(part, n));
    if (b.empty()) throw SchemaError("item with an empty part");
    box.add(std::move(b), weight);
  }

  CoverFile file{kind, std::nullopt, std::nullopt,
                 j.contains("meta") ? j.at("meta") : json::object()};
  if (kind == "rect") file.rect = to_rect_cover(box);
  file.box = std::move(box);
  return file;
}

json circuit_to_json(const SigmaPiSigmaCircuit& c) {
  json gates = json::array();
  for (const ProductGate& gate : c.gates) {
    json forms = json::array();
    for (const LinearForm& form : gate.forms) {
      json terms = json::array();
      for (const Term& t : form.terms) {
        terms.push_back({c.vars.group_of(t.var), c.vars.index_of(t.var), t.coeff});
      }
      forms.push_back(std::move(terms));
    }
    gates.push_back({{"forms", std::move(forms)}, {"repetition", gate.repetition}});
  }
  const CircuitSize s = size(c);
  return json{{"schema_version", kSchemaVersion},
              {"kind", "circuit"},
              {"m", c.mod.value()},
              {"factors", factors_json(c.mod)},
              {"groups", c.vars.groups},
              {"n", c.vars.n},
              {"size", {{"gate_total", s.gate_total},
                        {"products", s.products},
                        {"graph_model_count", s.graph_model_count}}},
              {"gates", std::move(gates)}};
}

BipartiteExport make_bipartite_export(const WeightedRectCover& cover) {
  const Modulus& mod = cover.mod();
  if (!mod.is_odd()) {
    throw UnsupportedModulusError(
        "graph export halves the symmetrized edge counts, which needs an odd "
        "modulus; m = " + std::to_string(mod.value()));
  }
  const Residue half = mod_inverse(2, mod.value());
  const std::uint32_t n = cover.n();
  BipartiteExport out;
  std::vector<std::uint64_t> counts(std::size_t{n} * n, 0);
  for (const WeightedRect& it : cover.items()) {
    const std::uint64_t rep = mod.mul(it.weight, half);
    out.graphs.push_back({it.rect, rep});
    const auto cols = it.rect.cols.members();
    for (std::uint32_t i : it.rect.rows.members()) {
      for (std::uint32_t j : cols) {
        const auto lo = std::min(i, j), hi = std::max(i, j);
        counts[std::size_t{lo - 1} * n + (hi - 1)] += rep;
      }
    }
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      EdgeCount e{i, j, counts[std::size_t{i - 1} * n + (j - 1)], std::nullopt};
      for (std::size_t f = 0; f < mod.num_factors(); ++f) {
        if (e.count % mod.factors()[f].q == 1) {
          e.factor = f;
          break;
        }
      }
      out.edges.push_back(e);
    }
  }
  return out;
}

std::string to_dot(const BipartiteGraph& g, const std::string& name) {
  std::ostringstream os;
  auto side = [](const IndexSet& s) {
    std::string out = "{";
    bool first = true;
    for (std::uint32_t i : s.members()) {
      out += (first ? "v" : " v") + std::to_string(i);
      first = false;
    }
    return out + "}";
  };
  os << "graph " << name << " {\n"
     << "  label=\"repetition=" << g.repetition << "\";\n"
     << "  " << side(g.rect.rows) << " -- " << side(g.rect.cols) << ";\n"
     << "}\n";
  return os.str();
}

std::string edges_to_csv(const BipartiteExport& e, const Modulus& mod) {
  std::ostringstream os;
  os << "i,j,count,factor_index,prime_power\n";
  for (const EdgeCount& edge : e.edges) {
    os << edge.i << ',' << edge.j << ',' << edge.count << ',';
    if (edge.factor) {
      os << *edge.factor + 1 << ',' << mod.factors()[*edge.factor].q;
    } else {
      os << "0,";
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const S2Report& report) {
  std::ostringstream os;
  os << "properties " << (report.pass() ? "PASS" : "FAIL")
     << " cells=" << report.cells_checked
     << " violations=" << report.violations.size() << '\n';
  for (const CellViolation& v : report.violations) {
    os << "violation cell " << v.i << ' ' << v.j << " multiplicity="
       << v.multiplicity << (v.i == v.j ? " (diagonal)" : "") << '\n';
  }
  return os.str();
}

std::string to_text(const SkReport& report) {
  std::ostringstream os;
  os << "properties " << (report.pass() ? "PASS" : "FAIL")
     << " mode=" << (report.exhaustive ? "exhaustive" : "sampled")
     << " tuples=" << report.tuples_checked;
  if (!report.exhaustive) os << " seed=" << report.seed;
  os << " violations=" << report.violation_count << '\n';
  for (const TupleViolation& v : report.violations) {
    os << "violation tuple";
    for (std::uint32_t j : v.tuple) os << ' ' << j;
    os << " multiplicity=" << v.multiplicity << '\n';
  }
  return os.str();
}

}  // namespace modsym
