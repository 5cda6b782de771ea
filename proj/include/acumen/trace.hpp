#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "acumen/engine.hpp"

namespace acumen {

// Shell-style glob match (fnmatch): * ? and [...] classes. An empty pattern
// list keeps everything.
bool matches_any(const std::string& path, const std::vector<std::string>& patterns);

// CSV sink. The first frame fixes the header: its flattened paths, filtered
// by `patterns`, sorted lexicographically, with `time` first. Later frames
// fill the same columns; a path missing from a frame leaves an empty cell,
// and paths that appear only after the first frame are dropped.
class TraceCsvWriter {
public:
    explicit TraceCsvWriter(std::ostream& out, std::vector<std::string> patterns = {});
    void write(const TraceFrame& frame);
    std::size_t frames_written() const { return frames_; }

private:
    std::ostream& out_;
    std::vector<std::string> patterns_;
    std::vector<std::string> columns_;  // excluding the leading time column
    bool header_written_ = false;
    std::size_t frames_ = 0;
};

// JSONL sink: one {"time": t, "vars": {path: value}} object per line, vars
// keys sorted. Handles paths appearing and disappearing mid-run.
class TraceJsonlWriter {
public:
    explicit TraceJsonlWriter(std::ostream& out, std::vector<std::string> patterns = {});
    void write(const TraceFrame& frame);
    std::size_t frames_written() const { return frames_; }

private:
    std::ostream& out_;
    std::vector<std::string> patterns_;
    std::size_t frames_ = 0;
};

// 17-significant-digit decimal form used for CSV cells (round-trips doubles).
std::string trace_real(double v);

}  // namespace acumen
