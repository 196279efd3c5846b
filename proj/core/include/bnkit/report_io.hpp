#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bnkit/conjecture.hpp"
#include "bnkit/search.hpp"
#include "bnkit/stability.hpp"

namespace bnkit {

/// Writes one flat JSON object, fields in insertion order. Doubles use 17
/// significant digits so they round-trip exactly; non-finite values are
/// written as null.
class JsonObject {
public:
    JsonObject& field(std::string_view key, double value);
    JsonObject& field(std::string_view key, std::size_t value);
    JsonObject& field(std::string_view key, int value);
    JsonObject& field(std::string_view key, bool value);
    JsonObject& field(std::string_view key, std::string_view value);
    JsonObject& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
    JsonObject& field(std::string_view key, const std::vector<double>& values);
    JsonObject& field(std::string_view key, const std::vector<std::size_t>& values);
    /// Inserts pre-serialized JSON verbatim.
    JsonObject& raw(std::string_view key, std::string_view json);

    std::string str() const { return body_ + "}"; }

private:
    void key(std::string_view k);

    std::string body_ = "{";
    bool first_ = true;
};

std::string format_double(double value);
std::string json_escape(std::string_view s);

/// Fields: n, m, omega, lambda1, lambda2, lambda_n, bound, lhs, gap, holds,
/// equality, excluded, source.
std::string to_json(const BnReport& r);

inline constexpr std::string_view kStabilityCsvHeader =
    "n,k,sample,m,lambda1_sq_over_m,edits,edits_normalized,method";
void write_stability_csv(std::ostream& out, const std::vector<StabilityRow>& rows);

inline constexpr std::string_view kSummaryCsvHeader =
    "family,reports,holds,equality,excluded,out_of_domain,violations,min_gap,argmin_source";
void write_summary_csv(std::ostream& out, const std::vector<RunSummary>& summaries);

}  // namespace bnkit
