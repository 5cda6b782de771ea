#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "acumen/ast.hpp"
#include "acumen/eval.hpp"
#include "acumen/scene.hpp"
#include "acumen/store.hpp"

namespace acumen {

struct SimConfig {
    double start_time = 0.0;
    double end_time = 10.0;
    double time_step = 0.015625;  // 2^-6
    int max_discrete_iterations = 1000;

    void validate() const;
};

// One active continuous equation: write `target` with the value of `rhs`,
// evaluated in the scope of `owner`.
struct PlanEntry {
    ObjectId owner;
    FieldPath target;
    ExprPtr rhs;
    SourcePos pos;
};

// Continuous equations ordered so every same-instant read happens after the
// equation that writes it.
struct EquationPlan {
    std::vector<PlanEntry> entries;
};

struct FixpointResult {
    bool fired = false;           // any iteration changed the store
    bool discrete_fired = false;  // a discrete assign/create/terminate took effect
    int iterations = 0;
    EquationPlan plan;  // equations active after convergence
};

struct DiscreteEvent {
    enum class Kind { Assign, Create, Terminate };
    Kind kind;
    double time;
    std::string path;
    Value before;
    Value after;
};

struct TraceFrame {
    double time;
    std::vector<FlatEntry> entries;  // depth-first object order, declaration order
};

struct SimSinks {
    std::function<void(const TraceFrame&)> trace;
    std::function<void(const SceneFrame&)> scene;
    std::function<void(const DiscreteEvent&)> event;
};

class Engine {
public:
    explicit Engine(Model model);

    const Model& model() const { return model_; }
    const ClassDef& class_def(const std::string& name) const;
    bool has_class(const std::string& name) const { return classes_.count(name) > 0; }

    // Creates the root object (and, recursively, children declared with
    // `create`) with private initializers evaluated top to bottom.
    ObjectStore instantiate(const std::string& root_class,
                            const std::vector<Value>& args) const;

    // Runs enabled discrete actions simultaneously and settles active
    // continuous equations, iterating until nothing changes. Returns the
    // equation plan that is active after convergence.
    FixpointResult discrete_fixpoint(
        ObjectStore& store, int max_iterations = 1000, double time = 0.0,
        const std::function<void(const DiscreteEvent&)>& on_event = {}) const;

    // Collects and topologically orders the currently active continuous
    // equations. Errors on multiple writers and algebraic cycles.
    EquationPlan plan_continuous(const ObjectStore& store) const;

    // One forward Euler step: evaluates the plan in order, then updates each
    // derivative chain x^(k) <- x^(k) + h * x^(k+1) (k = n-1 down to 0) from
    // pre-update values. Levels held by an active equation are not integrated.
    void continuous_step(ObjectStore& store, const EquationPlan& plan, double h) const;

    // Full run: initial fixpoint, then repeat [step; advance; fixpoint; emit]
    // until time reaches end_time. Frames are emitted post-fixpoint; the
    // initial frame is emitted at start_time.
    ObjectStore simulate(const std::string& root_class, const std::vector<Value>& args,
                         const SimConfig& config, const SimSinks& sinks = {}) const;

    // Flattens every live object's fields (depth-first, declaration order).
    TraceFrame trace_frame(const ObjectStore& store, double time) const;

private:
    struct DiscreteAct {
        ObjectId owner;
        const DiscreteAssign* stmt;
        SourcePos pos;
    };
    struct CreateAct {
        ObjectId owner;
        const CreateStmt* stmt;
        SourcePos pos;
    };
    struct TerminateAct {
        ObjectId owner;
        const TerminateStmt* stmt;
        SourcePos pos;
    };
    struct ActiveSet {
        std::vector<PlanEntry> continuous;
        std::vector<DiscreteAct> discrete;
        std::vector<CreateAct> creates;
        std::vector<TerminateAct> terminates;
    };

    void validate_classes() const;
    ObjectId instantiate_object(ObjectStore& store, const std::string& class_name,
                                const std::vector<Value>& args,
                                const ObjectInstance* parent,
                                const std::string& binder_name) const;
    ActiveSet collect_active(const ObjectStore& store) const;
    void walk_stmts(const std::vector<StmtPtr>& stmts, const EvalContext& ctx,
                    ActiveSet& out) const;
    EquationPlan order_equations(std::vector<PlanEntry> entries,
                                 const ObjectStore& store) const;
    void emit_frames(const ObjectStore& store, double time, const SimSinks& sinks) const;

    Model model_;
    std::map<std::string, const ClassDef*> classes_;
};

}  // namespace acumen
