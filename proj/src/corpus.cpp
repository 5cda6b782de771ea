#include "acumen/corpus.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "acumen/builtins.hpp"
#include "acumen/error.hpp"
#include "acumen/parser.hpp"

namespace acumen {
namespace {

struct CatalogRow {
    const char* name;
    const char* section;
    const char* fidelity;
    const char* note;
    const char* root_class;
    const char* default_args;
    std::vector<std::pair<const char*, const char*>> symbols;
};

// Static catalog: one row per fixture file, in presentation order.
const std::vector<CatalogRow>& catalog() {
    static const std::vector<CatalogRow> rows = {
        {"sphere", "2.2", "verbatim", "", "sphere", "5, [0,0,0]",
         {{"m", "m"}, {"D", "D"}, {"p", "p"}}},
        {"moving_sphere", "2.3", "verbatim", "", "moving_sphere", "5, [0,0,0]",
         {{"m", "m"}, {"D", "D"}, {"t", "t"}, {"p", "s.p"}}},
        {"display_bar", "2.3", "verbatim", "", "display_bar",
         "1, [0.5,0.5,0.9], [0,0,0]", {{"v", "v"}, {"D", "D"}}},
        {"cylinder", "2.4", "verbatim",
         "the cylinder_demo driver class is derived-from-prose (sweeps p on a "
         "circle above q)",
         "cylinder_demo", "[0,0,0]",
         {{"p", "c.p"},
          {"q", "c.q"},
          {"alpha", "c.alpha"},
          {"theta", "c.theta"},
          {"length", "c.length"},
          {"t", "t"},
          {"D", "D"}}},
        {"mass_1d", "3", "verbatim", "", "mass_1d", "10, 3, [0,0,0]",
         {{"m", "m"}, {"p", "p"}, {"f", "f"}, {"e_k", "e_k"}, {"D", "D"}}},
        {"mass", "3", "verbatim", "", "mass", "5, [0,0,1], [0,0,0]",
         {{"m", "m"}, {"p", "p"}, {"f", "f"}, {"e_k", "e_k"}, {"D", "D"}}},
        {"spring", "3", "verbatim",
         "the spring class is transcribed exactly, including the displacement "
         "expression whose standard precedence scales only p1; the spring_demo "
         "driver class is derived (holds the endpoints apart)",
         "spring_demo", "[0,0,0]",
         {{"k", "s.k"}, {"l0", "s.l0"}, {"dl", "s.dl"}, {"e_p", "s.e_p"}, {"D", "D"}}},
        {"spring_fixed", "3", "corrected",
         "displacement parenthesized as (p2-p1)*(1-l0/norm(p2-p1)) so the whole "
         "separation vector is scaled; rest length exposed as readable field l",
         "spring_fixed_demo", "[0,0,0]",
         {{"k", "s.k"}, {"l0", "s.l0"}, {"dl", "s.dl"}, {"e_p", "s.e_p"}, {"D", "D"}}},
        {"bouncing_ball", "3.1", "corrected",
         "display_bar color arguments normalized into [0,1]",
         "bouncing_ball", "[0,0,0]",
         {{"p", "m.p"},
          {"f", "m.f"},
          {"e_k", "m.e_k"},
          {"bk", "bk.v"},
          {"bp", "bp.v"},
          {"bt", "bt.v"},
          {"D", "D"}}},
        {"example_3", "4", "corrected",
         "display_bar color argument 0 replaced by the vector [1,1,1]; springs "
         "instantiated as spring_fixed so the assembly is physically meaningful",
         "example_3", "[0,0,0]",
         {{"p", "m1.p"},
          {"f", "m1.f"},
          {"e_k", "m1.e_k"},
          {"e_p", "s1.e_p"},
          {"k", "s1.k"},
          {"l0", "s1.l0"},
          {"dl", "s1.dl"},
          {"v", "b.v"},
          {"D", "D"}}},
        {"controlled_example_3", "5", "derived-from-prose",
         "wires a force_controller_pid into the three-mass assembly: goal is the "
         "springs' rest lengths, value is m1.p-m3.p, speed is m1.p'-m3.p', and "
         "c.f is added to m1.f and subtracted from m3.f; gains (2,0.5,4)",
         "controlled_example_3", "[0,0,0]",
         {{"g", "c.g"},
          {"v", "c.v"},
          {"s", "c.s"},
          {"f", "c.f"},
          {"i", "c.i"},
          {"k_p", "c.k_p"},
          {"k_i", "c.k_i"},
          {"k_d", "c.k_d"},
          {"p", "m1.p"},
          {"e_p", "s1.e_p"},
          {"e_k", "m1.e_k"},
          {"l0", "s1.l0"},
          {"D", "D"}}},
        {"force_controller_p", "5", "verbatim", "", "force_controller_p", "10",
         {{"k_p", "k_p"}, {"g", "g"}, {"v", "v"}, {"f", "f"}}},
        {"force_controller_pd", "5", "verbatim", "", "force_controller_pd", "10, 4",
         {{"k_p", "k_p"}, {"k_d", "k_d"}, {"g", "g"}, {"v", "v"}, {"s", "s"}, {"f", "f"}}},
        {"force_controller_pid", "5", "verbatim", "", "force_controller_pid",
         "10, 1, 4",
         {{"k_p", "k_p"},
          {"k_i", "k_i"},
          {"k_d", "k_d"},
          {"g", "g"},
          {"v", "v"},
          {"s", "s"},
          {"f", "f"},
          {"i", "i"}}},
        {"force_disturbance", "6", "verbatim", "", "force_disturbance", "1",
         {{"k", "k"}, {"t", "t"}, {"f", "f"}}},
        {"rod", "7", "verbatim",
         "the rod class is transcribed exactly; dumbbell (referenced but never "
         "defined) and the rod_demo driver are derived-from-prose",
         "rod_demo", "[0,0,0]",
         {{"m", "rod.m"},
          {"p", "rod.p"},
          {"q", "rod.q"},
          {"length", "rod.length"},
          {"axis", "rod.axis"},
          {"core", "rod.core"},
          {"fp", "rod.fp"},
          {"fq", "rod.fq"},
          {"fp_axis", "rod.fp_axis"},
          {"fp_orth", "rod.fp_orth"},
          {"fq_axis", "rod.fq_axis"},
          {"fq_orth", "rod.fq_orth"},
          {"sp", "rod.sp"},
          {"sq", "rod.sq"},
          {"k", "d.k"},
          {"t", "d.t"},
          {"D", "D"}}},
        {"dumbbell", "7", "derived-from-prose",
         "referenced as `create dumbbell (1,1,D)` without a definition; modeled "
         "as two sphere children plus one cylinder child tied to p and q",
         "dumbbell", "1, 1, [0,0,0]",
         {{"p", "p"},
          {"q", "q"},
          {"alpha", "c.alpha"},
          {"theta", "c.theta"},
          {"length", "c.length"},
          {"D", "D"}}},
        {"force_controller_pid_d", "8", "verbatim", "", "force_controller_pid_d",
         "10, 1, 4, 0.1",
         {{"k_p", "k_p"},
          {"k_i", "k_i"},
          {"k_d", "k_d"},
          {"period", "period"},
          {"g", "g"},
          {"v", "v"},
          {"s", "s"},
          {"f", "f"},
          {"i", "i"},
          {"t", "t"}}},
        {"quantizer", "8", "derived-from-prose",
         "a quantized tracker that jumps by whole quanta when the input ramp "
         "leaves the band [xq, xq+quantum)",
         "quantizer", "0.25",
         {{"x", "x"}, {"xq", "xq"}, {"err", "err"}}},
    };
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw EngineError("corpus integrity: missing fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    std::vector<CorpusEntry> entries;
    entries.reserve(catalog().size());
    for (const CatalogRow& row : catalog()) {
        CorpusEntry entry;
        entry.name = row.name;
        entry.path = dir + "/" + row.name + ".acm";
        entry.section = row.section;
        entry.fidelity = row.fidelity;
        entry.note = row.note;
        entry.root_class = row.root_class;
        entry.default_args = row.default_args;
        for (const auto& [sym, path] : row.symbols) entry.symbols[sym] = path;
        std::string source = read_file(entry.path);
        try {
            entry.model = parse_model(source);
        } catch (const std::exception& e) {
            throw EngineError("corpus integrity: " + entry.path + ": " + e.what());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries,
                              const std::string& name) {
    for (const CorpusEntry& e : entries)
        if (e.name == name) return e;
    throw EngineError("corpus entry '" + name + "' not found");
}

RodDerivatives rod_reference(const Value& fp, const Value& fq, double m,
                             const Value& axis, double length) {
    if (m <= 0.0) throw EngineError("rod_reference: mass must be positive");
    if (length <= 0.0) throw EngineError("rod_reference: length must be positive");
    // Evaluate exactly the operation tree the rod model uses, so the oracle
    // agrees with the simulation to the last bit.
    auto orth = [&](const Value& force) {
        Value dot = eval_call("dot", {force, axis});
        Value axial = eval_binary(BinaryOp::Div, eval_binary(BinaryOp::Mul, dot, axis),
                                  eval_call("norm", {axis}));
        return eval_binary(BinaryOp::Sub, force, axial);
    };
    Value fp_orth = orth(fp);
    Value fq_orth = orth(fq);
    RodDerivatives out;
    out.core_acc = eval_binary(BinaryOp::Div, eval_binary(BinaryOp::Add, fp, fq),
                               Value::real(m));
    out.axis_acc = eval_binary(
        BinaryOp::Div,
        eval_binary(BinaryOp::Mul, Value::real(2.0),
                    eval_binary(BinaryOp::Sub, fp_orth, fq_orth)),
        eval_binary(BinaryOp::Mul, Value::real(m), Value::real(length)));
    return out;
}

double quantize(double v, double quantum) {
    if (!(quantum > 0.0))
        throw EngineError("quantize: quantum must be positive");
    return std::floor(v / quantum) * quantum;
}

}  // namespace acumen
