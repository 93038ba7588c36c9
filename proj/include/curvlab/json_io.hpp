#pragma once

#include <string>

#include <json.hpp>

#include "curvlab/alg_curv.hpp"
#include "curvlab/curv_operator.hpp"
#include "curvlab/dense_tensor.hpp"
#include "curvlab/sym_form.hpp"

namespace curvlab {

using json = nlohmann::json;

// Wire schema for tensors:
//   {"dim": n, "order": k, "components": [n^k numbers, row-major]}
// Symmetric forms may instead use {"dim": n, "matrix": [[...], ...]}.
// Parsers raise SchemaError with the offending field path.

json tensor_to_json(const DenseTensor& t);
DenseTensor tensor_from_json(const json& j, const std::string& path);

json sym_form_to_json(const SymForm& h);
SymForm sym_form_from_json(const json& j, const std::string& path);

AlgCurv alg_curv_from_json(const json& j, const std::string& path,
                           double validate_tol = tol::kValidateRel);

json decomposition_to_json(const CurvDecomposition& d);
json spectrum_to_json(const CurvSpectrum& s);
json condition_report_to_json(const ConditionReport& r);

}  // namespace curvlab
