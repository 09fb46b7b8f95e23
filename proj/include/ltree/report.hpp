#pragma once

#include <json.hpp>

#include "ltree/checker.hpp"

namespace ltree {

/// Witness / report serialization. nlohmann::json with the default (ordered
/// map) backend keeps keys sorted, which the byte-determinism contract needs.
nlohmann::json witness_to_json(const Witness& w, const SpacePtr& space);
nlohmann::json check_report_to_json(const CheckReport& r);

/// One human line per check; witnesses summarized with exact literals.
std::string check_report_to_text(const CheckReport& r);

}  // namespace ltree
