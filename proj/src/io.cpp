#include "turanlab/io.hpp"

#include "turanlab/graph6.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace turanlab {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    if (x == std::floor(x) && std::fabs(x) < 1e15)
        std::snprintf(buf, sizeof buf, "%.0f", x);
    else
        std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

// Integral doubles serialise as JSON integers ("n": 8, not 8.0).
Json number(double x) {
    if (x == std::floor(x) && std::fabs(x) < 9e15) return static_cast<long long>(x);
    return x;
}

}  // namespace

Json to_json(const BoundReport& report) {
    Json params = Json::object();
    for (const auto& [name, value] : report.params) params[name] = number(value);
    return Json{{"name", report.name},
                {"params", params},
                {"value", number(report.value)},
                {"certified", report.certified},
                {"notes", report.notes}};
}

Json to_json(const ConstraintReport& report) {
    Json outcomes = Json::array();
    for (const auto& o : report.outcomes) {
        Json entry{{"constraint", o.spec.describe()}, {"satisfied", o.satisfied}};
        if (o.witness) entry["witness"] = *o.witness;
        outcomes.push_back(entry);
    }
    return Json{{"all_satisfied", report.all_satisfied()}, {"outcomes", outcomes}};
}

Json to_json(const VerificationRow& row) {
    Json bounds = Json::array();
    for (const auto& b : row.bounds) {
        Json entry{{"id", b.id}, {"value", number(b.value)}, {"kind", to_string(b.kind)}, {"certified", b.certified}};
        if (b.measured) entry["measured"] = number(*b.measured);
        entry["pass"] = b.passes(row.exact);
        bounds.push_back(entry);
    }
    return Json{{"n", row.n}, {"constraints", row.constraints}, {"exact", number(row.exact)}, {"bounds", bounds},
                {"pass", row.pass()}};
}

Json to_json(const SearchResult& result, bool include_timing) {
    Json stats{{"nodes", result.stats.nodes},
               {"pruned", result.stats.pruned},
               {"witness_overflow", result.stats.witness_overflow}};
    if (include_timing) stats["seconds"] = result.stats.seconds;
    return Json{{"n", result.n},
                {"constraints", describe(result.constraints)},
                {"max_edges", result.max_edges},
                {"witnesses", result.certificates},
                {"stats", stats}};
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string emit_csv(const std::vector<VerificationRow>& rows) {
    auto sorted_ids = [](const VerificationRow& row) {
        std::vector<std::string> ids;
        for (const auto& b : row.bounds) ids.push_back(b.id);
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    const std::vector<std::string> ids = rows.empty() ? std::vector<std::string>{} : sorted_ids(rows.front());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate bound id in verification row");

    std::string out = "n,constraints,exact";
    for (const auto& id : ids) out += "," + csv_field(id);
    for (const auto& id : ids) out += "," + csv_field("ratio_" + id);
    out += ",pass\n";

    for (const auto& row : rows) {
        if (sorted_ids(row) != ids) throw std::invalid_argument("verification rows have differing bound columns");
        auto column = [&](const std::string& id) -> const BoundColumn& {
            return *std::find_if(row.bounds.begin(), row.bounds.end(),
                                 [&](const BoundColumn& b) { return b.id == id; });
        };
        out += std::to_string(row.n) + "," + csv_field(row.constraints) + "," + format_number(row.exact);
        for (const auto& id : ids) out += "," + format_number(column(id).value);
        for (const auto& id : ids) {
            const BoundColumn& b = column(id);
            out += ",";
            if (b.value != 0) out += format_number(b.measured.value_or(row.exact) / b.value);
        }
        out += row.pass() ? ",pass\n" : ",fail\n";
    }
    return out;
}

}  // namespace turanlab
