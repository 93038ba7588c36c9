#include "curvlab/json_io.hpp"

#include <cmath>
#include <cstdint>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

int int_field(const json& j, const std::string& path, const char* key) {
  const json& v = field(j, path, key);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  return v.get<int>();
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw SchemaError(where, "expected a number");
  return v.get<double>();
}

std::vector<double> number_array(const json& v, const std::string& where,
                                 std::int64_t expected) {
  if (!v.is_array()) throw SchemaError(where, "expected an array");
  if (static_cast<std::int64_t>(v.size()) != expected)
    throw SchemaError(where, "expected " + std::to_string(expected) + " entries, got " +
                                 std::to_string(v.size()));
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = number_at(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

}  // namespace

json tensor_to_json(const DenseTensor& t) {
  return json{{"dim", t.dim()}, {"order", t.order()}, {"components", t.components()}};
}

DenseTensor tensor_from_json(const json& j, const std::string& path) {
  const int n = int_field(j, path, "dim");
  if (n < 2) throw SchemaError(path + ".dim", "dimension must be at least 2");
  const int k = int_field(j, path, "order");
  if (k < 0 || k > 8) throw SchemaError(path + ".order", "order must lie in [0, 8]");
  Space space(n);
  DenseTensor t(space, k);
  std::vector<double> comps =
      number_array(field(j, path, "components"), path + ".components", t.size());
  for (double c : comps)
    if (!std::isfinite(c))
      throw SchemaError(path + ".components", "components must be finite");
  std::copy(comps.begin(), comps.end(), t.components().begin());
  return t;
}

json sym_form_to_json(const SymForm& h) {
  const int n = h.dim();
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(h(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"dim", n}, {"matrix", std::move(rows)}};
}

SymForm sym_form_from_json(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("matrix")) {
    const int n = int_field(j, path, "dim");
    if (n < 2) throw SchemaError(path + ".dim", "dimension must be at least 2");
    const json& rows = field(j, path, "matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw SchemaError(path + ".matrix", "expected " + std::to_string(n) + " rows");
    std::vector<double> m(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      std::vector<double> row =
          number_array(rows[static_cast<size_t>(i)],
                       path + ".matrix[" + std::to_string(i) + "]", n);
      for (int c = 0; c < n; ++c) {
        const double v = row[static_cast<size_t>(c)];
        if (!std::isfinite(v))
          throw SchemaError(path + ".matrix", "entries must be finite");
        m[static_cast<size_t>(i) * n + c] = v;
      }
    }
    return SymForm(Space(n), std::move(m));
  }
  DenseTensor t = tensor_from_json(j, path);
  if (t.order() != 2) throw SchemaError(path + ".order", "a symmetric form has order 2");
  return SymForm(t.space(), t.components());
}

AlgCurv alg_curv_from_json(const json& j, const std::string& path, double validate_tol) {
  DenseTensor t = tensor_from_json(j, path);
  if (t.order() != 4) throw SchemaError(path + ".order", "a curvature tensor has order 4");
  return AlgCurv::validate(std::move(t), validate_tol);
}

json decomposition_to_json(const CurvDecomposition& d) {
  return json{{"scal", d.scal},
              {"ric0", sym_form_to_json(d.ric0)},
              {"weyl", tensor_to_json(d.weyl.tensor())}};
}

json spectrum_to_json(const CurvSpectrum& s) {
  return json{{"eigenvalues", s.eigenvalues}, {"partial_sums", s.partial_sums()}};
}

json condition_report_to_json(const ConditionReport& r) {
  return json{{"p", r.p},
              {"l", r.l},
              {"partial_sum", r.partial_sum},
              {"verdict", vanishing_verdict_name(r.verdict)},
              {"weight_route", r.weight_route},
              {"strict", r.strict},
              {"tolerance", r.tolerance},
              {"passed", r.passed()}};
}

}  // namespace curvlab
