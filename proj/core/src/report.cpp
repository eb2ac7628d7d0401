#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "resolvent/harness.hpp"

namespace resolvent {

namespace {

using nlohmann::ordered_json;

bool integral(const std::string& s)
{
    if (s.empty() || s.size() > 15)
        return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

std::string fixed(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string params_text(const Params& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        if (v.empty())
            continue;
        if (!out.empty())
            out += ' ';
        out += k + "=" + v;
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt(const std::optional<std::size_t>& v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string agree_text(Verdict v)
{
    return v == Verdict::pass ? "true" : v == Verdict::fail ? "false" : "skipped";
}

}  // namespace

std::string render_json(const VerificationReport& report)
{
    ordered_json caps = {{"size_cap", report.caps.size_cap}};
    caps["node_budget"] = report.caps.node_budget ? ordered_json(*report.caps.node_budget) : ordered_json(nullptr);
    caps["time_budget_ms"] =
        report.caps.time_budget ? ordered_json(report.caps.time_budget->count()) : ordered_json(nullptr);

    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : row.params) {
            if (v.empty())
                continue;
            params[k] = integral(v) ? ordered_json(std::stol(v)) : ordered_json(v);
        }
        ordered_json r = {{"params", params}};
        r["formula_value"] = row.formula_value ? ordered_json(*row.formula_value) : ordered_json(nullptr);
        r["oracle_value"] = row.oracle_value ? ordered_json(*row.oracle_value) : ordered_json(nullptr);
        r["agree"] = row.verdict == Verdict::skipped ? ordered_json("skipped") : ordered_json(row.verdict == Verdict::pass);
        r["elapsed_ms"] = ordered_json::parse(fixed(row.elapsed_ms));
        r["repro_cmd"] = row.repro_cmd;
        if (row.witness)
            r["witness"] = row.witness->members();
        if (!row.reason.empty())
            r["reason"] = row.reason;
        rows.push_back(std::move(r));
    }
    ordered_json doc = {
        {"suite", report.suite},
        {"config", {{"ranges", report.ranges}, {"seed", report.seed}, {"caps", caps}}},
        {"rows", rows},
        {"summary", {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}}},
    };
    return doc.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report)
{
    std::ostringstream out;
    out << "suite,params,formula_value,oracle_value,agree,elapsed_ms,repro_cmd,reason\n";
    for (const auto& row : report.rows) {
        std::string params;
        for (const auto& [k, v] : row.params) {
            if (v.empty())
                continue;
            if (!params.empty())
                params += ';';
            params += k + "=" + v;
        }
        out << csv_field(row.suite) << ',' << csv_field(params) << ',' << opt(row.formula_value) << ','
            << opt(row.oracle_value) << ',' << agree_text(row.verdict) << ',' << fixed(row.elapsed_ms) << ','
            << csv_field(row.repro_cmd) << ',' << csv_field(row.reason) << '\n';
    }
    return out.str();
}

std::string render_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << "suite " << report.suite << "  seed " << report.seed << "  size cap " << report.caps.size_cap << '\n';
    out << "ranges " << report.ranges << '\n';
    for (const auto& row : report.rows) {
        std::string verdict(to_string(row.verdict));
        for (auto& c : verdict)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out << verdict << "  " << params_text(row.params) << "  formula=" << (row.formula_value ? opt(row.formula_value) : "-")
            << " oracle=" << (row.oracle_value ? opt(row.oracle_value) : "-") << "  " << fixed(row.elapsed_ms) << " ms";
        if (!row.reason.empty())
            out << "  (" << row.reason << ")";
        out << '\n';
        if (row.verdict == Verdict::fail)
            out << "    repro: " << row.repro_cmd << '\n';
    }
    out << "summary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, "
        << report.summary.skipped << " skipped\n";
    return out.str();
}

}  // namespace resolvent
