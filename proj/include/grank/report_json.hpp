#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "grank/bounds.hpp"
#include "grank/classify.hpp"
#include "grank/genericity.hpp"
#include "grank/grank.hpp"
#include "grank/tensor.hpp"

namespace grank {

using Json = nlohmann::json;

Json int_to_json(const Int& v);  // number when it fits int64, decimal string otherwise

Json tensor_json(const Tensor3& t, const std::optional<std::string>& catalog_id);
Json mlranks_json(const MlRanks& ml);
Json flags_json(const GenericityFlags& fl);
Json gr_json(const GRReport& rep);
Json strata_json(const GRReport& rep, const Tensor3& t);
Json bounds_json(const BoundReport& rep);
Json classification_json(const GR2Class& cls);

// Deterministic serialization: keys sorted, two-space indent, trailing newline.
std::string emit_report(const Json& report);

}  // namespace grank
