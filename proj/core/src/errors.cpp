#include "brim/errors.hpp"

namespace brim {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_ring: return "InvalidRing";
    case errc::invalid_ideal: return "InvalidIdeal";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::infinite_colength: return "InfiniteColength";
    case errc::resource_limit: return "ResourceLimit";
    case errc::unsupported: return "Unsupported";
    case errc::not_contained: return "NotContained";
    case errc::not_stabilized: return "NotStabilized";
    case errc::convention_mismatch: return "ConventionMismatch";
    case errc::not_a_reduction: return "NotAReduction";
    case errc::non_primary: return "NonPrimary";
    case errc::oracle_mismatch: return "OracleMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace brim
