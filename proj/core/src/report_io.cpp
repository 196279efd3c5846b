#include "bnkit/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace bnkit {

std::string format_double(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
    return out;
}

void JsonObject::key(std::string_view k) {
    if (!first_) body_.push_back(',');
    first_ = false;
    body_ += json_escape(k);
    body_.push_back(':');
}

JsonObject& JsonObject::field(std::string_view k, double value) {
    key(k);
    body_ += format_double(value);
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, std::size_t value) {
    key(k);
    body_ += std::to_string(value);
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, int value) {
    key(k);
    body_ += std::to_string(value);
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, bool value) {
    key(k);
    body_ += value ? "true" : "false";
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, std::string_view value) {
    key(k);
    body_ += json_escape(value);
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, const std::vector<double>& values) {
    key(k);
    body_.push_back('[');
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) body_.push_back(',');
        body_ += format_double(values[i]);
    }
    body_.push_back(']');
    return *this;
}

JsonObject& JsonObject::field(std::string_view k, const std::vector<std::size_t>& values) {
    key(k);
    body_.push_back('[');
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) body_.push_back(',');
        body_ += std::to_string(values[i]);
    }
    body_.push_back(']');
    return *this;
}

JsonObject& JsonObject::raw(std::string_view k, std::string_view json) {
    key(k);
    body_ += json;
    return *this;
}

std::string to_json(const BnReport& r) {
    return JsonObject{}
        .field("n", r.n)
        .field("m", r.m)
        .field("omega", r.omega)
        .field("lambda1", r.lambda1)
        .field("lambda2", r.lambda2)
        .field("lambda_n", r.lambda_n)
        .field("bound", r.bound)
        .field("lhs", r.lhs)
        .field("gap", r.gap)
        .field("holds", r.holds)
        .field("equality", r.equality)
        .field("excluded", r.excluded)
        .field("source", r.source)
        .str();
}

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

void write_stability_csv(std::ostream& out, const std::vector<StabilityRow>& rows) {
    out << kStabilityCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.sample << ',' << r.m << ',' << format_double(r.lambda1_sq_over_m) << ','
            << r.edits << ',' << format_double(r.edits_normalized) << ',' << to_string(r.method) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<RunSummary>& summaries) {
    out << kSummaryCsvHeader << '\n';
    for (const auto& s : summaries) {
        out << csv_field(s.family) << ',' << s.reports << ',' << s.holds << ',' << s.equality << ',' << s.excluded
            << ',' << s.out_of_domain << ',' << s.violations << ',' << format_double(s.min_gap) << ','
            << csv_field(s.argmin_source) << '\n';
    }
}

}  // namespace bnkit
