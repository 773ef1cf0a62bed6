#pragma once

#include <json.hpp>

#include "biord/certify.hpp"
#include "biord/complete.hpp"
#include "biord/order.hpp"

namespace biord::cli {

using Json = nlohmann::ordered_json;

// {"i0", "verdict", "orbits": [{"orbit", "h_values", "h_O", "gcd"}]}
Json to_json(const Certificate& c);
Json to_json(const OrderContext& ctx);
Json to_json(const CompletionResult& r);
Json to_json(const Decision& d);

}  // namespace biord::cli
