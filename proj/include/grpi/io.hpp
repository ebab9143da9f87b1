#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "grpi/algebra.hpp"
#include "grpi/engine.hpp"
#include "grpi/parse.hpp"

namespace grpi {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.3.0";
inline constexpr std::size_t kAssociativityCheckMaxDim = 200;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) schema_error(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, "missing key \"" + key + "\"");
  return *it;
}

inline std::string rational_text(const Json& v, const std::string& pointer) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema_error(pointer, "expected a rational string");
}

inline std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

inline std::size_t index_value(const Json& v, std::size_t bound, const std::string& pointer) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    schema_error(pointer, "expected a non-negative integer");
  auto i = v.get<std::size_t>();
  if (i >= bound) schema_error(pointer, "index " + std::to_string(i) + " out of range");
  return i;
}

}  // namespace detail

/// Field selection: rational, or F_p.
struct FieldChoice {
  std::uint64_t prime = 0;  // 0 = rational
  bool rational() const { return prime == 0; }
  std::string name() const { return rational() ? "rational" : "p:" + std::to_string(prime); }
};

inline FieldChoice parse_field_flag(std::string_view s) {
  if (s == "rational") return {};
  if (s.substr(0, 2) == "p:") {
    try {
      return {std::stoull(std::string(s.substr(2)))};
    } catch (const std::exception&) {
    }
  }
  throw InputError("field must be 'rational' or 'p:<prime>'");
}

inline FieldChoice field_from_json(const Json& doc) {
  if (!doc.contains("field")) return {};
  const auto& f = doc["field"];
  auto kind = detail::require(f, "kind", "/field");
  if (kind == "rational") return {};
  if (kind == "prime") {
    const auto& p = detail::require(f, "p", "/field");
    if (!p.is_number_integer() || p.get<long long>() < 2) detail::schema_error("/field/p", "expected a prime");
    return {p.get<std::uint64_t>()};
  }
  detail::schema_error("/field/kind", "expected \"rational\" or \"prime\"");
}

inline std::shared_ptr<const GroupTable> group_from_json(const Json& g, const std::string& pointer = "/group") {
  const auto& kind = detail::require(g, "kind", pointer);
  try {
    if (kind == "cyclic") {
      const auto& n = detail::require(g, "n", pointer);
      if (!n.is_number_integer() || n.get<long long>() < 1) detail::schema_error(pointer + "/n", "expected n >= 1");
      return std::make_shared<const GroupTable>(cyclic_group(n.get<std::size_t>()));
    }
    if (kind == "table") {
      auto labels = detail::require(g, "labels", pointer).get<std::vector<std::string>>();
      auto table = detail::require(g, "table", pointer).get<std::vector<std::vector<GroupElement>>>();
      return std::make_shared<const GroupTable>(GroupTable::from_table(std::move(labels), std::move(table)));
    }
  } catch (const nlohmann::json::exception& e) {
    detail::schema_error(pointer, e.what());
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind(pointer, 0) == 0) throw;
    detail::schema_error(pointer, e.what());
  }
  detail::schema_error(pointer + "/kind", "expected \"cyclic\" or \"table\"");
}

inline Json group_to_json(const GroupTable& g) {
  return {{"kind", "table"}, {"labels", g.labels()}, {"table", g.table()}};
}

template <Field F>
struct LoadedAlgebra {
  AlgebraPtr<F> algebra;
  std::optional<SubalgebraPair<F>> pair;
};

/// Builds and invariant-checks an algebra (and optional B, C) from the
/// algebra description document.
template <Field F>
LoadedAlgebra<F> algebra_from_json(const Json& doc, F field = F{}) {
  using V = typename F::value_type;
  if (!doc.is_object()) detail::schema_error("", "expected an object");
  auto group = group_from_json(detail::require(doc, "group", ""));

  const auto& basis = detail::require(doc, "basis", "");
  if (!basis.is_array() || basis.empty()) detail::schema_error("/basis", "expected a non-empty array of labels");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) detail::schema_error("/basis/" + std::to_string(i), "expected a string");
    labels.push_back(basis[i].get<std::string>());
    if (!index.emplace(labels.back(), i).second) detail::schema_error("/basis/" + std::to_string(i), "duplicate label");
  }
  const auto dim = labels.size();

  const auto& grading_json = detail::require(doc, "grading", "");
  if (!grading_json.is_object()) detail::schema_error("/grading", "expected an object");
  std::vector<GroupElement> grading(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto ptr = "/grading/" + detail::escape_pointer(labels[i]);
    auto it = grading_json.find(labels[i]);
    if (it == grading_json.end()) detail::schema_error("/grading", "missing degree for basis label \"" + labels[i] + "\"");
    if (!it->is_string()) detail::schema_error(ptr, "expected a degree label");
    auto g = group->find(it->get<std::string>());
    if (!g) detail::schema_error(ptr, "unknown degree label \"" + it->get<std::string>() + "\"");
    grading[i] = *g;
  }
  for (const auto& [k, v] : grading_json.items())
    if (!index.count(k)) detail::schema_error("/grading", "label \"" + k + "\" is not a basis label");

  const auto& mult = detail::require(doc, "mult", "");
  if (!mult.is_array()) detail::schema_error("/mult", "expected an array");
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, V>> acc;
  for (std::size_t e = 0; e < mult.size(); ++e) {
    auto ptr = "/mult/" + std::to_string(e);
    const auto& entry = mult[e];
    if (!entry.is_array() || entry.size() != 4) detail::schema_error(ptr, "expected [i, j, k, \"coeff\"]");
    auto i = detail::index_value(entry[0], dim, ptr + "/0");
    auto j = detail::index_value(entry[1], dim, ptr + "/1");
    auto k = detail::index_value(entry[2], dim, ptr + "/2");
    V c;
    try {
      c = field.parse(detail::rational_text(entry[3], ptr + "/3"));
    } catch (const InputError& err) {
      detail::schema_error(ptr + "/3", err.what());
    }
    if (grading[k] != group->mul(grading[i], grading[j]))
      detail::schema_error(ptr, "grading-incompatible product (i,j,k) = (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    auto [it, inserted] = acc[{i, j}].try_emplace(k, c);
    if (!inserted) it->second = it->second + c;
  }
  std::vector<typename GradedAlgebra<F>::Product> products;
  for (auto& [ij, coords] : acc) {
    std::vector<typename SparseVector<V>::Entry> entries;
    for (auto& [k, c] : coords)
      if (!field.is_zero(c)) entries.emplace_back(k, c);
    products.push_back({ij.first, ij.second, SparseVector<V>(std::move(entries))});
  }
  auto algebra = std::make_shared<const GradedAlgebra<F>>(group, field, labels, grading, std::move(products));
  if (dim <= kAssociativityCheckMaxDim)
    if (auto t = algebra->associativity_violation())
      detail::schema_error("/mult", "not associative at basis triple (" + std::to_string((*t)[0]) + "," +
                                        std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) + ")");

  LoadedAlgebra<F> out{algebra, std::nullopt};
  if (doc.contains("subalgebras")) {
    const auto& sub = doc["subalgebras"];
    auto read = [&](const std::string& key) {
      auto ptr = "/subalgebras/" + key;
      const auto& rows = detail::require(sub, key, "/subalgebras");
      if (!rows.is_array()) detail::schema_error(ptr, "expected an array of vectors");
      std::vector<SparseVector<V>> vs;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto rp = ptr + "/" + std::to_string(r);
        if (!rows[r].is_array() || rows[r].size() != dim)
          detail::schema_error(rp, "expected a vector of length " + std::to_string(dim));
        std::vector<typename SparseVector<V>::Entry> entries;
        for (std::size_t k = 0; k < dim; ++k) {
          V c;
          try {
            c = field.parse(detail::rational_text(rows[r][k], rp + "/" + std::to_string(k)));
          } catch (const InputError& err) {
            detail::schema_error(rp + "/" + std::to_string(k), err.what());
          }
          if (!field.is_zero(c)) entries.emplace_back(k, c);
        }
        vs.emplace_back(std::move(entries));
      }
      return Subspace<F>(algebra, vs);
    };
    bool ideal = false;
    if (sub.contains("b_is_ideal")) {
      if (!sub["b_is_ideal"].is_boolean()) detail::schema_error("/subalgebras/b_is_ideal", "expected a boolean");
      ideal = sub["b_is_ideal"].get<bool>();
    }
    SubalgebraPair<F> pair{read("B"), read("C"), ideal};
    if (auto problem = pair.validate(); !problem.empty()) detail::schema_error("/subalgebras", problem);
    out.pair = std::move(pair);
  }
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <Field F>
Json vector_to_json(const SparseVector<typename F::value_type>& v, std::size_t dim, const F& field) {
  Json row = Json::array();
  for (std::size_t k = 0; k < dim; ++k) {
    const auto* c = v.find(k);
    row.push_back(c ? field.format(*c) : std::string("0"));
  }
  return row;
}

/// Inverse of algebra_from_json (the group is always written as a table).
template <Field F>
Json algebra_to_json(const GradedAlgebra<F>& a, const SubalgebraPair<F>* pair = nullptr) {
  Json doc;
  if (a.field().characteristic() == 0)
    doc["field"] = {{"kind", "rational"}};
  else
    doc["field"] = {{"kind", "prime"}, {"p", a.field().characteristic()}};
  doc["group"] = group_to_json(a.group());
  doc["basis"] = a.labels();
  Json grading = Json::object();
  for (std::size_t i = 0; i < a.dim(); ++i) grading[a.label(i)] = a.group().label(a.degree(i));
  doc["grading"] = grading;
  Json mult = Json::array();
  for (const auto& p : a.products())
    for (const auto& [k, c] : p.value) mult.push_back({p.left, p.right, k, a.field().format(c)});
  doc["mult"] = mult;
  if (pair) {
    Json b = Json::array(), c = Json::array();
    for (const auto& v : pair->b.basis()) b.push_back(vector_to_json(v, a.dim(), a.field()));
    for (const auto& v : pair->c.basis()) c.push_back(vector_to_json(v, a.dim(), a.field()));
    doc["subalgebras"] = {{"B", b}, {"C", c}, {"b_is_ideal", pair->b_is_ideal}};
  }
  return doc;
}

template <Field F>
Json report_to_json(const IdentityReport<F>& r) {
  Json ids = Json::array();
  for (const auto& p : r.identities) ids.push_back(print_poly(p));
  return {{"signature", r.signature},       {"space_dim", r.space_dim}, {"codimension", r.codimension},
          {"identities", ids},              {"strategy", r.strategy},   {"tuples_evaluated", r.tuples_evaluated}};
}

}  // namespace grpi
