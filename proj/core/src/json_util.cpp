#include "brim/json_util.hpp"

namespace brim {

Json json_int(const Int& value) {
  static const Int kMin = std::numeric_limits<long long>::min();
  static const Int kMax = std::numeric_limits<long long>::max();
  if (value >= kMin && value <= kMax) return Json(value.convert_to<long long>());
  return Json(value.str());
}

Json json_int_list(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(json_int(v));
  return out;
}

}  // namespace brim
