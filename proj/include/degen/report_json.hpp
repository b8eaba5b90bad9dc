#pragma once

#include <json.hpp>

#include "degen/algebra.hpp"
#include "degen/degeneration.hpp"

namespace degen {

/// Insertion-ordered JSON so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json report_to_json(const VerificationReport& rep);
VerificationReport report_from_json(const Json& j);

Json witness_to_json(const IdentityWitness& w);
IdentityWitness witness_from_json(const Json& j);

}  // namespace degen
