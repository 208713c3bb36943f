#pragma once

#include "brim/int_math.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace brim {

using Json = nlohmann::ordered_json;

// Big integers render as JSON numbers while they fit in 64 bits and as
// decimal strings beyond, keeping documents byte-stable and lossless.
Json json_int(const Int& value);
Json json_int_list(const std::vector<Int>& values);

}  // namespace brim
