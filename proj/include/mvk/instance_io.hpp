#ifndef MVK_INSTANCE_IO_HPP
#define MVK_INSTANCE_IO_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvk/constructors.hpp"

namespace mvk {

using json = nlohmann::json;

inline json composition_to_json(const Composition& c) {
  json a = json::array();
  for (int p : c.parts()) a.push_back(p);
  return a;
}

inline Composition composition_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw input_error(std::string(what) + " must be a nonempty integer array");
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_integer())
      throw input_error(std::string(what) + " must contain integers only");
    parts.push_back(v.get<int>());
  }
  return Composition(std::move(parts));
}

template <class S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw input_error(std::string(what) + " must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw input_error(std::string(what) + " rows must be nonempty arrays");
  const int cols = static_cast<int>(j[0].size());
  Matrix<S> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw input_error(std::string(what) + " rows must have equal length");
    for (int c = 0; c < cols; ++c) {
      const json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_string())
        throw input_error(std::string(what) + " entries must be scalar strings");
      try {
        m(i, c) = parse_scalar<S>(cell.get<std::string>());
      } catch (const input_error& e) {
        throw input_error(std::string(what) + "[" + std::to_string(i) + "][" +
                          std::to_string(c) + "]: " + e.what());
      }
    }
  }
  return m;
}

template <class S>
std::vector<S> scalar_list_from_json(const json& j, const char* what) {
  if (!j.is_array())
    throw input_error(std::string(what) + " must be an array of scalar strings");
  std::vector<S> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw input_error(std::string(what) + " entries must be scalar strings");
    try {
      out.push_back(parse_scalar<S>(j[i].get<std::string>()));
    } catch (const input_error& e) {
      throw input_error(std::string(what) + "[" + std::to_string(i) +
                        "]: " + e.what());
    }
  }
  return out;
}

template <class S>
json scalar_list_to_json(const std::vector<S>& v) {
  json a = json::array();
  for (const S& s : v) a.push_back(format_scalar(s));
  return a;
}

template <class S>
json instance_to_json(const InstanceSpec<S>& spec) {
  json j;
  j["kind"] = instance_kind_name(spec.kind);
  j["parameters"] = scalar_list_to_json(spec.parameters);
  j["matrix"] = matrix_to_json(spec.A0.entries());
  if (spec.weights) {
    j["weights"] = {{"eta1", scalar_list_to_json(spec.weights->first.entries())},
                    {"eta2", scalar_list_to_json(spec.weights->second.entries())}};
  }
  return j;
}

template <class S>
InstanceSpec<S> instance_from_json(const json& j) {
  if (!j.is_object()) throw input_error("instance must be a JSON object");
  InstanceSpec<S> spec;
  if (j.contains("kind")) {
    if (!j["kind"].is_string())
      throw input_error("instance kind must be a string");
    spec.kind = instance_kind_from_name(j["kind"].get<std::string>());
  }
  if (j.contains("parameters"))
    spec.parameters = scalar_list_from_json<S>(j["parameters"], "parameters");
  if (!j.contains("matrix"))
    throw input_error("instance is missing the \"matrix\" field");
  spec.A0 = ParameterMatrix<S>(matrix_from_json<S>(j["matrix"], "matrix"));
  if (j.contains("weights")) {
    const json& w = j["weights"];
    if (!w.is_object() || !w.contains("eta1") || !w.contains("eta2"))
      throw input_error("weights must be an object with eta1 and eta2");
    std::vector<S> e1 = scalar_list_from_json<S>(w["eta1"], "weights.eta1");
    std::vector<S> e2 = scalar_list_from_json<S>(w["eta2"], "weights.eta2");
    if (static_cast<int>(e1.size()) != spec.A0.dim() ||
        static_cast<int>(e2.size()) != spec.A0.dim())
      throw input_error("weight vectors must match the matrix dimension");
    spec.weights = {WeightVector<S>(std::move(e1)),
                    WeightVector<S>(std::move(e2))};
  }
  return spec;
}

template <class S>
json certificate_to_json(const OrthogonalityCertificate<S>& cert,
                         std::optional<double> tolerance) {
  json j;
  j["method"] = check_method_name(cert.method);
  j["verdict"] = verdict_name(cert.verdict);
  j["zeta"] = cert.zeta ? json(format_scalar(*cert.zeta)) : json(nullptr);
  j["max_deviation"] = cert.max_deviation;
  j["witness"] = cert.witness
                     ? json::array({composition_to_json(cert.witness->first),
                                    composition_to_json(cert.witness->second)})
                     : json(nullptr);
  j["failing_entry"] = cert.failing_entry
                           ? json::array({cert.failing_entry->first,
                                          cert.failing_entry->second})
                           : json(nullptr);
  j["field"] = field_mode_name(field_traits<S>::mode);
  j["tolerance"] = tolerance ? json(*tolerance) : json(nullptr);
  return j;
}

template <class S>
json table_to_json(const PhiTable<S>& t) {
  json j;
  j["n"] = t.n;
  j["N"] = t.N;
  j["method"] = phi_method_name(t.method);
  j["field"] = field_mode_name(field_traits<S>::mode);
  json order = json::array();
  for (const Composition& c : t.order) order.push_back(composition_to_json(c));
  j["order"] = std::move(order);
  json values = json::array();
  for (int r = 0; r < t.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < t.size(); ++c) row.push_back(format_scalar(t.at(r, c)));
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  return j;
}

template <class S>
PhiTable<S> table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("N") ||
      !j.contains("order") || !j.contains("values"))
    throw input_error("table must be an object with n, N, order and values");
  PhiTable<S> t;
  t.n = j["n"].get<int>();
  t.N = j["N"].get<int>();
  if (j.contains("method")) {
    std::string m = j["method"].get<std::string>();
    if (m == "generating" || m == "both")
      t.method = PhiMethod::generating;
    else if (m == "hypergeometric")
      t.method = PhiMethod::hypergeometric;
    else
      throw input_error("unknown table method '" + m + "'");
  }
  if (!j["order"].is_array() || j["order"].empty())
    throw input_error("table order must be a nonempty array");
  for (const json& c : j["order"])
    t.order.push_back(composition_from_json(c, "order entry"));
  const int sz = t.size();
  Matrix<S> vals = matrix_from_json<S>(j["values"], "values");
  if (vals.rows() != sz || vals.cols() != sz)
    throw input_error("table values must be square and match the order");
  t.values.reserve(static_cast<std::size_t>(sz) * static_cast<std::size_t>(sz));
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) t.values.push_back(vals(r, c));
  return t;
}

// CSV with composition labels on both axes.  Labels contain commas, so they
// are double-quoted; scalar cells never contain commas.
template <class S>
void table_to_csv(const PhiTable<S>& t, std::ostream& os) {
  os << "\"x\\m\"";
  for (const Composition& c : t.order) os << ",\"" << c.to_string() << '"';
  os << '\n';
  for (int r = 0; r < t.size(); ++r) {
    os << '"' << t.order[static_cast<std::size_t>(r)].to_string() << '"';
    for (int c = 0; c < t.size(); ++c) os << ',' << format_scalar(t.at(r, c));
    os << '\n';
  }
}

}  // namespace mvk

#endif
