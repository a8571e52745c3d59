// Copyright 2026 The triqent authors
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

#pragma once

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "triqent/decompose.hpp"
#include "triqent/pencil.hpp"
#include "triqent/slocc.hpp"
#include "triqent/tensor_state.hpp"

namespace triqent {

using Json = nlohmann::ordered_json;

namespace detail {

inline Complex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
      !j["im"].is_number()) {
    throw InvalidStateError("expected a complex number object {\"re\": .., \"im\": ..}");
  }
  return {j["re"].get<double>(), j["im"].get<double>()};
}

inline Json complex_to_json(const Complex& c) {
  // + 0.0 normalizes negative zeros
  return Json{{"re", c.real() + 0.0}, {"im", c.imag() + 0.0}};
}

inline Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json point_to_json(const ProjectiveEigenvalue& p) {
  return Json{{"alpha0", complex_to_json(p.alpha0)}, {"alpha1", complex_to_json(p.alpha1)}};
}

/// Serializes with every floating-point number printed at 15 significant
/// digits, so reports are byte-identical across runs.
inline void dump_fixed(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(indent > 0 ? static_cast<std::size_t>(indent) * depth : 0, ' ');
  const std::string pad_in(indent > 0 ? static_cast<std::size_t>(indent) * (depth + 1) : 0, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  if (j.is_object()) {
    out += "{";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",";
      first = false;
      out += nl;
      out += pad_in;
      out += Json(key).dump();
      out += sep;
      dump_fixed(value, out, indent, depth + 1);
    }
    out += nl;
    if (!j.empty()) out += pad;
    out += "}";
  } else if (j.is_array()) {
    out += "[";
    bool first = true;
    for (const auto& value : j) {
      if (!first) out += ",";
      first = false;
      out += nl;
      out += pad_in;
      dump_fixed(value, out, indent, depth + 1);
    }
    out += nl;
    if (!j.empty()) out += pad;
    out += "]";
  } else if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", j.get<double>());
    out += buf;
  } else {
    out += j.dump();
  }
}

}  // namespace detail

inline std::string dump_report(const Json& j, bool pretty) {
  std::string out;
  detail::dump_fixed(j, out, pretty ? 2 : 0, 0);
  out += "\n";
  return out;
}

/// Parses the state file format:
///   { "dims": [da, db, dc],
///     "amplitudes": [ { "index": [i, j, k], "re": x, "im": y }, ... ],
///     "label": optional }
/// Unlisted entries are zero; duplicate indices are an error. The state is
/// normalized on load.
inline TripartiteState state_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amplitudes")) {
    throw InvalidStateError("state document needs \"dims\" and \"amplitudes\"");
  }
  const auto& jd = doc["dims"];
  if (!jd.is_array() || jd.size() != 3) {
    throw InvalidStateError("\"dims\" must be an array of three integers");
  }
  std::array<int, 3> dims{};
  for (int s = 0; s < 3; ++s) {
    if (!jd[s].is_number_integer() || jd[s].get<long long>() < 1) {
      throw InvalidStateError("dimensions must be positive integers");
    }
    dims[s] = jd[s].get<int>();
  }
  std::vector<Complex> amps(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2], Complex{0.0});
  std::set<std::size_t> seen;
  if (!doc["amplitudes"].is_array()) throw InvalidStateError("\"amplitudes\" must be an array");
  for (const auto& e : doc["amplitudes"]) {
    if (!e.is_object() || !e.contains("index") || !e["index"].is_array() ||
        e["index"].size() != 3) {
      throw InvalidStateError("amplitude entries need an \"index\" of three integers");
    }
    std::array<long long, 3> idx{};
    for (int s = 0; s < 3; ++s) {
      if (!e["index"][s].is_number_integer()) {
        throw InvalidStateError("amplitude indices must be integers");
      }
      idx[s] = e["index"][s].get<long long>();
      if (idx[s] < 0 || idx[s] >= dims[s]) throw InvalidStateError("index out of range");
    }
    const std::size_t flat =
        (static_cast<std::size_t>(idx[0]) * dims[1] + idx[1]) * dims[2] + idx[2];
    if (!seen.insert(flat).second) throw InvalidStateError("duplicate amplitude index");
    amps[flat] = detail::complex_from_json(e);
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InvalidStateError("\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return TripartiteState(dims, std::move(amps), std::move(label)).normalized();
}

inline Json state_to_json(const TripartiteState& state) {
  Json doc;
  doc["dims"] = {state.dims()[0], state.dims()[1], state.dims()[2]};
  Json amps = Json::array();
  const auto& d = state.dims();
  for (int i = 0; i < d[0]; ++i) {
    for (int j = 0; j < d[1]; ++j) {
      for (int k = 0; k < d[2]; ++k) {
        const Complex& a = state.at(i, j, k);
        if (a == Complex{0.0}) continue;
        amps.push_back(Json{{"index", {i, j, k}}, {"re", a.real()}, {"im", a.imag()}});
      }
    }
  }
  doc["amplitudes"] = std::move(amps);
  if (!state.label().empty()) doc["label"] = state.label();
  return doc;
}

/// Multi-factor variant used by grouping:
///   { "factor_dims": [d1, ..., dm],
///     "amplitudes": [ { "index": [i1, ..., im], "re": x, "im": y } ],
///     "groups": [[...], [...], [...]] }   (0-based factor indices)
struct GroupedDocument {
  MultiFactorTensor tensor;
  std::array<std::vector<int>, 3> groups;
  std::string label;
};

inline GroupedDocument grouped_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("factor_dims") || !doc.contains("amplitudes") ||
      !doc.contains("groups")) {
    throw InvalidStateError(
        "grouping document needs \"factor_dims\", \"amplitudes\" and \"groups\"");
  }
  GroupedDocument out;
  if (!doc["factor_dims"].is_array() || doc["factor_dims"].empty()) {
    throw InvalidStateError("\"factor_dims\" must be a nonempty array");
  }
  for (const auto& d : doc["factor_dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw InvalidStateError("factor dimensions must be positive integers");
    }
    out.tensor.factor_dims.push_back(d.get<int>());
  }
  const int m = static_cast<int>(out.tensor.factor_dims.size());
  out.tensor.amplitudes.assign(out.tensor.size(), Complex{0.0});
  std::set<std::size_t> seen;
  for (const auto& e : doc["amplitudes"]) {
    if (!e.is_object() || !e.contains("index") || !e["index"].is_array() ||
        static_cast<int>(e["index"].size()) != m) {
      throw InvalidStateError("amplitude entries need an \"index\" over every factor");
    }
    std::size_t flat = 0;
    for (int f = 0; f < m; ++f) {
      if (!e["index"][f].is_number_integer()) {
        throw InvalidStateError("amplitude indices must be integers");
      }
      const long long i = e["index"][f].get<long long>();
      if (i < 0 || i >= out.tensor.factor_dims[f]) throw InvalidStateError("index out of range");
      flat = flat * out.tensor.factor_dims[f] + static_cast<std::size_t>(i);
    }
    if (!seen.insert(flat).second) throw InvalidStateError("duplicate amplitude index");
    out.tensor.amplitudes[flat] = detail::complex_from_json(e);
  }
  if (!doc["groups"].is_array() || doc["groups"].size() != 3) {
    throw InvalidStateError("\"groups\" must be an array of three index lists");
  }
  for (int g = 0; g < 3; ++g) {
    if (!doc["groups"][g].is_array()) throw InvalidStateError("groups must be arrays");
    for (const auto& f : doc["groups"][g]) {
      if (!f.is_number_integer()) throw InvalidStateError("group members must be integers");
      out.groups[g].push_back(f.get<int>());
    }
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InvalidStateError("\"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

inline Json parse_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InvalidStateError("malformed JSON document");
  return doc;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidStateError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

inline Json tolerances_to_json(const Tolerances& tol) {
  return Json{{"rank", tol.rank},
              {"cluster", tol.cluster},
              {"recon", tol.recon},
              {"cert", tol.cert},
              {"sys", tol.sys}};
}

inline Json signature_to_json(const JordanFamilySignature& sig, const std::string& name) {
  Json towers = Json::array();
  for (const auto& t : sig.towers) towers.push_back(t.blocks);
  return Json{{"towers", std::move(towers)}, {"n", sig.n}, {"family_name", name}};
}

inline Json decomposition_to_json(const SubSchmidtDecomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    terms.push_back(Json{{"weight", detail::complex_to_json(t.weight)},
                         {"vec_a", detail::vector_to_json(t.vec_a)},
                         {"vec_b", detail::vector_to_json(t.vec_b)},
                         {"vec_c", detail::vector_to_json(t.vec_c)}});
  }
  Json pair = Json::array();
  for (const auto& p : dec.pair) {
    if (p.degenerate) {
      pair.push_back(detail::point_to_json(p.point));
    } else {
      pair.push_back("generic");
    }
  }
  return Json{{"term_count", dec.term_count},
              {"terms", std::move(terms)},
              {"pair", std::move(pair)},
              {"fidelity", dec.fidelity}};
}

inline Json certificate_to_json(const SloccDecision& decision) {
  Json doc;
  doc["equivalent"] = decision.equivalent;
  doc["reason"] = decision.reason;
  if (decision.certificate) {
    const auto& cert = *decision.certificate;
    doc["A"] = detail::matrix_to_json(cert.A);
    doc["B"] = detail::matrix_to_json(cert.B);
    doc["C"] = detail::matrix_to_json(cert.C);
    doc["moebius"] = Json{{"a", detail::complex_to_json(cert.moebius.a)},
                          {"b", detail::complex_to_json(cert.moebius.b)},
                          {"c", detail::complex_to_json(cert.moebius.c)},
                          {"d", detail::complex_to_json(cert.moebius.d)}};
    doc["labelling"] = cert.labelling.perm;
    doc["residual"] = cert.residual;
    doc["similarity_condition"] = cert.similarity_condition;
  }
  return doc;
}

}  // namespace triqent
