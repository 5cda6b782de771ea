#pragma once

#include <map>
#include <string>
#include <vector>

#include "acumen/ast.hpp"
#include "acumen/value.hpp"

namespace acumen {

// One catalogued model: a parsed fixture file plus the metadata the test
// suites need to instantiate and interrogate it.
struct CorpusEntry {
    std::string name;        // catalog key, matches the fixture file stem
    std::string path;        // absolute path of the fixture file
    std::string section;     // listing label the fixture transcribes
    std::string fidelity;    // "verbatim" | "corrected" | "derived-from-prose"
    std::string note;        // for corrected entries: what deviates and why
    std::string root_class;  // class to instantiate for smoke runs
    std::string default_args;  // literal argument list for the root class
    std::map<std::string, std::string> symbols;  // symbol -> trace path
    Model model;
};

// Loads and parses every fixture under `dir`. A fixture that fails to parse
// is a catalog-integrity failure and raises EngineError.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

// Looks up an entry by name; throws EngineError if absent.
const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries,
                              const std::string& name);

// Closed-form accelerations of the rigid rod, used as an oracle against the
// simulated model: core'' = (fp+fq)/m and axis'' = 2*(fp_orth-fq_orth)/(m*length),
// where f*_orth is the force component orthogonal to the axis.
struct RodDerivatives {
    Value core_acc;
    Value axis_acc;
};
RodDerivatives rod_reference(const Value& fp, const Value& fq, double m,
                             const Value& axis, double length);

// floor(v/quantum)*quantum; quantum must be positive.
double quantize(double v, double quantum);

}  // namespace acumen
