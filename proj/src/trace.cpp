#include "acumen/trace.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include <json.hpp>

namespace acumen {

bool matches_any(const std::string& path, const std::vector<std::string>& patterns) {
    if (patterns.empty()) return true;
    for (const std::string& pattern : patterns)
        if (fnmatch(pattern.c_str(), path.c_str(), 0) == 0) return true;
    return false;
}

std::string trace_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string cell(const std::variant<double, std::string, bool>& v) {
    if (const double* d = std::get_if<double>(&v)) return trace_real(*d);
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

}  // namespace

TraceCsvWriter::TraceCsvWriter(std::ostream& out, std::vector<std::string> patterns)
    : out_(out), patterns_(std::move(patterns)) {}

void TraceCsvWriter::write(const TraceFrame& frame) {
    if (!header_written_) {
        for (const FlatEntry& entry : frame.entries)
            if (matches_any(entry.path, patterns_)) columns_.push_back(entry.path);
        std::sort(columns_.begin(), columns_.end());
        out_ << "time";
        for (const std::string& column : columns_) out_ << ',' << column;
        out_ << '\n';
        header_written_ = true;
    }
    std::map<std::string, const FlatEntry*> by_path;
    for (const FlatEntry& entry : frame.entries) by_path.emplace(entry.path, &entry);

    out_ << trace_real(frame.time);
    for (const std::string& column : columns_) {
        out_ << ',';
        auto it = by_path.find(column);
        if (it != by_path.end()) out_ << cell(it->second->value);
    }
    out_ << '\n';
    ++frames_;
}

TraceJsonlWriter::TraceJsonlWriter(std::ostream& out, std::vector<std::string> patterns)
    : out_(out), patterns_(std::move(patterns)) {}

void TraceJsonlWriter::write(const TraceFrame& frame) {
    std::map<std::string, const FlatEntry*> by_path;
    for (const FlatEntry& entry : frame.entries)
        if (matches_any(entry.path, patterns_)) by_path.emplace(entry.path, &entry);

    nlohmann::ordered_json line;
    line["time"] = frame.time;
    nlohmann::ordered_json vars = nlohmann::ordered_json::object();
    for (const auto& [path, entry] : by_path) {
        std::visit([&](const auto& v) { vars[path] = v; }, entry->value);
    }
    line["vars"] = std::move(vars);
    out_ << line.dump() << '\n';
    ++frames_;
}

}  // namespace acumen
