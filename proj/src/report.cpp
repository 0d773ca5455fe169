#include "cptkit/report.hpp"

#include "cptkit/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace cptkit {

std::string to_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["timestamp"] = report.timestamp;
    j["seed"] = report.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["notes"] = c.notes;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_csv(const Report& report)
{
    std::string out = "suite,seed,name,pass,residual,tolerance,notes\n";
    for (const auto& c : report.checks) {
        out += csv_quote(report.suite);
        out += ',';
        out += std::to_string(report.seed);
        out += ',';
        out += csv_quote(c.name);
        out += ',';
        out += c.pass ? "1" : "0";
        out += ',';
        out += csv_number(c.residual);
        out += ',';
        out += csv_number(c.tolerance);
        out += ',';
        out += csv_quote(c.notes);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw LookupError("cannot open for writing: " + path);
    out << contents;
}

} // namespace cptkit
