#include "galcover/report_json.hpp"

#include <limits>

#include "json.hpp"

namespace galcover {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_to_json(const PolyFp& f) {
    ordered_json arr = ordered_json::array();
    for (u64 c : f.coeffs())
        arr.push_back(c);
    return arr;
}

ordered_json genus_to_json(u128 g) {
    if (g <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(g);
    return to_string_u128(g); // past 2^64, emitted as a decimal string
}

} // namespace

std::string emit_report_json(const CoverReport& r) {
    ordered_json j;
    j["schema"] = "galcover/1";
    j["p"] = r.params.p;
    j["l"] = r.params.l;
    j["a"] = r.a;

    ordered_json phi = ordered_json::array();
    for (const auto& part : r.phi_factors.factors)
        phi.push_back(poly_to_json(part.factor));
    j["phi_factors"] = phi;

    ordered_json tau = ordered_json::array();
    for (const auto& row : r.tau_matrix)
        tau.push_back(row);
    j["tau_matrix"] = tau;

    ordered_json blocks = ordered_json::array();
    for (const PolyFp& b : r.tau_blocks)
        blocks.push_back(poly_to_json(b));
    j["tau_blocks"] = blocks;

    j["g_y"] = r.g_y;
    j["g_z_min"] = genus_to_json(r.g_z_min);
    j["class_count_bound"] = r.class_count_bound;

    switch (r.quasi_p) {
    case CoverReport::QuasiPStatus::yes:
        j["quasi_p"] = true;
        break;
    case CoverReport::QuasiPStatus::no:
        j["quasi_p"] = false;
        break;
    case CoverReport::QuasiPStatus::skipped:
        j["quasi_p"] = "skipped";
        break;
    }

    j["jump"] = ordered_json{{"valuation", r.jump.valuation},
                             {"leading_coeff", r.jump.leading_coeff.value}};
    return j.dump() + "\n";
}

} // namespace galcover
