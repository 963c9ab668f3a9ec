#ifndef POLYVERIFY_REPORT_IO_HPP
#define POLYVERIFY_REPORT_IO_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polyverify/harness.hpp"

namespace polyverify {

using nlohmann::json;

/// Wire form {"coeffs": [[re, im], ...]}, ascending powers.
inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw EmptyInput{};
    std::vector<Complex> coeffs;
    for (const json& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw NonFiniteInput{};
        coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return make_polynomial(std::move(coeffs));
}

inline json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (Complex c : p.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return json{{"coeffs", coeffs}};
}

inline json to_json(const CircleExtremum& e) {
    return json{{"value", e.value},
                {"angle", e.angle},
                {"radius", e.radius},
                {"certified_error", e.certified_error},
                {"kind", e.kind == ExtremumKind::Max ? "max" : "min"}};
}

inline json to_json(const DiskHypothesisReport& r) {
    json zeros = json::array();
    for (Complex z : r.zeros) zeros.push_back({z.real(), z.imag()});
    return json{{"zeros", zeros},
                {"residuals", r.residuals},
                {"max_zero_modulus", r.max_zero_modulus},
                {"radius", r.radius},
                {"slack", r.slack},
                {"pass", r.pass}};
}

inline json to_json(const BoundBreakdown& b) {
    return json{{"bound_id", bound_name(b.id)},
                {"total", b.total},
                {"terms", b.terms},
                {"inputs",
                 {{"n", b.inputs.n},
                  {"k", b.inputs.k},
                  {"l", b.inputs.l},
                  {"M", b.inputs.M},
                  {"m", b.inputs.m},
                  {"a0", b.inputs.a0},
                  {"a1", b.inputs.a1},
                  {"an1", b.inputs.an1},
                  {"an", b.inputs.an}}}};
}

inline json to_json(const CaseReport& r) {
    json bounds = json::array();
    for (const BoundCheck& c : r.bounds) {
        json jc = to_json(c.breakdown);
        jc["measured"] = c.measured;
        jc["margin"] = c.margin;
        jc["tolerance"] = c.tolerance;
        jc["status"] = status_name(c.status);
        jc["observe_only"] = c.observe_only;
        bounds.push_back(std::move(jc));
    }
    json aux = json::array();
    for (const AuxCheck& c : r.aux)
        aux.push_back({{"name", c.name},
                       {"margin", c.margin},
                       {"tolerance", c.tolerance},
                       {"status", status_name(c.status)}});
    json coeffs = json::array();
    for (Complex c : r.coeffs) coeffs.push_back({c.real(), c.imag()});
    return json{{"polynomial", {{"coeffs", coeffs}}},
                {"n", r.n},
                {"k", r.k},
                {"l", r.l},
                {"hypothesis", to_json(r.hypothesis)},
                {"M", to_json(r.M)},
                {"m", to_json(r.m)},
                {"m1", to_json(r.m1)},
                {"lhs", to_json(r.lhs)},
                {"bounds", bounds},
                {"aux", aux},
                {"tolerance_budget_used", r.tolerance_budget_used},
                {"pass", r.pass}};
}

inline json to_json(const CampaignReport& r, bool include_wall_time = true) {
    json per_bound = json::object();
    for (const auto& [id, s] : r.per_bound)
        per_bound[id] = {{"count", s.count},
                         {"violations", s.violations},
                         {"inconclusive", s.inconclusive},
                         {"worst_margin", s.worst_margin}};
    json out{{"seed", r.seed},
             {"attempted", r.attempted},
             {"valid", r.valid},
             {"discarded", r.discarded},
             {"per_bound", per_bound},
             {"printed_discrepancies", r.printed_discrepancies},
             {"l_monotone", r.l_monotone},
             {"l_nonmonotone", r.l_nonmonotone},
             {"pass", r.pass}};
    if (include_wall_time) out["wall_seconds"] = r.wall_seconds;
    return out;
}

inline json to_json(const SharpnessReport& r) {
    json rows = json::array();
    for (const SharpnessRow& row : r.rows)
        rows.push_back({{"family", row.family},
                        {"bound_id", row.bound},
                        {"n", row.n},
                        {"k", row.k},
                        {"l", row.l},
                        {"lhs", row.lhs},
                        {"total", row.total},
                        {"gap", row.gap}});
    return json{{"rows", rows}, {"max_gap", r.max_gap}, {"pass", r.pass}};
}

inline constexpr const char* kCsvHeader =
    "bound_id,n,k,l,M,m,lhs,total,margin,tolerance,status";

inline void write_csv(std::ostream& os, const CaseReport& r) {
    os << kCsvHeader << '\n';
    os << std::setprecision(17);
    for (const BoundCheck& c : r.bounds) {
        const BoundInputs& in = c.breakdown.inputs;
        os << bound_name(c.breakdown.id) << ',' << in.n << ',' << in.k << ',' << in.l << ','
           << in.M << ',' << in.m << ',' << c.measured << ',' << c.breakdown.total << ','
           << c.margin << ',' << c.tolerance << ',' << status_name(c.status) << '\n';
    }
}

inline void write_text(std::ostream& os, const CaseReport& r) {
    os << "polynomial degree " << r.n << ", k = " << r.k << ", l = " << r.l << '\n';
    os << "hypothesis: " << (r.hypothesis.pass ? "pass" : "FAIL")
       << " (max zero modulus " << r.hypothesis.max_zero_modulus << ", slack "
       << r.hypothesis.slack << ")\n";
    os << "M = " << r.M.value << " +/- " << r.M.certified_error << ", m = " << r.m.value
       << ", m1 = " << r.m1.value << ", max|P'| = " << r.lhs.value << " +/- "
       << r.lhs.certified_error << "\n\n";
    os << std::left << std::setw(22) << "bound" << std::setw(16) << "total" << std::setw(16)
       << "measured" << std::setw(16) << "margin" << "status\n";
    for (const BoundCheck& c : r.bounds) {
        os << std::left << std::setw(22) << bound_name(c.breakdown.id) << std::setw(16)
           << c.breakdown.total << std::setw(16) << c.measured << std::setw(16) << c.margin
           << status_name(c.status) << (c.observe_only ? " (observe)" : "") << '\n';
    }
    for (const AuxCheck& c : r.aux)
        os << std::left << std::setw(22) << c.name << std::setw(16) << "" << std::setw(16) << ""
           << std::setw(16) << c.margin << status_name(c.status) << '\n';
    os << "\noverall: " << (r.pass ? "pass" : "FAIL") << '\n';
}

inline void write_text(std::ostream& os, const SharpnessReport& r) {
    os << std::left << std::setw(10) << "family" << std::setw(18) << "bound" << std::setw(4)
       << "n" << std::setw(6) << "k" << std::setw(6) << "l" << std::setw(14) << "lhs"
       << std::setw(14) << "total" << "gap\n";
    for (const SharpnessRow& row : r.rows)
        os << std::left << std::setw(10) << row.family << std::setw(18) << row.bound
           << std::setw(4) << row.n << std::setw(6) << row.k << std::setw(6) << row.l
           << std::setw(14) << row.lhs << std::setw(14) << row.total << row.gap << '\n';
    os << "max gap " << r.max_gap << ", " << (r.pass ? "pass" : "FAIL") << '\n';
}

}  // namespace polyverify

#endif
