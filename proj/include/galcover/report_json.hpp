#ifndef GALCOVER_REPORT_JSON_HPP
#define GALCOVER_REPORT_JSON_HPP

#include <string>

#include "galcover/covers.hpp"

namespace galcover {

// Deterministic serialization, schema "galcover/1": stable key order,
// polynomials as coefficient arrays lowest degree first, matrices as row
// arrays. Identical reports serialize to identical bytes.
std::string emit_report_json(const CoverReport& r);

} // namespace galcover

#endif // GALCOVER_REPORT_JSON_HPP
