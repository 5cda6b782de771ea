#include "acumen/engine.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace acumen {
namespace {

// Later error messages want "class c, field 'x'" context without repeating
// the plumbing at every call site.
std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

void SimConfig::validate() const {
    if (!(time_step > 0))
        throw EngineError("time_step must be positive, got " + std::to_string(time_step));
    if (!(end_time > start_time))
        throw EngineError("end_time (" + std::to_string(end_time) +
                          ") must be greater than start_time (" +
                          std::to_string(start_time) + ")");
    if (max_discrete_iterations < 1)
        throw EngineError("max_discrete_iterations must be at least 1");
}

Engine::Engine(Model model) : model_(std::move(model)) {
    for (const ClassDef& cls : model_.classes) {
        auto [it, inserted] = classes_.emplace(cls.name, &cls);
        if (!inserted)
            throw EngineError("duplicate class '" + cls.name + "'");
    }
    validate_classes();
}

const ClassDef& Engine::class_def(const std::string& name) const {
    auto it = classes_.find(name);
    if (it == classes_.end())
        throw EngineError("unknown class '" + name + "'");
    return *it->second;
}

namespace {

// Rejects primed create binders anywhere in a statement list.
void check_create_binders(const std::string& class_name,
                          const std::vector<StmtPtr>& stmts) {
    for (const StmtPtr& stmt : stmts) {
        if (const auto* create = std::get_if<CreateStmt>(&stmt->node)) {
            const Expr& binder = *create->binder;
            int primes = 0;
            if (const auto* var = std::get_if<VarRef>(&binder.node))
                primes = var->primes;
            else if (const auto* ref = std::get_if<FieldRef>(&binder.node))
                primes = ref->primes;
            if (primes > 0)
                throw EngineError("class " + class_name +
                                  ": create binder cannot be a derivative");
        } else if (const auto* branch = std::get_if<IfStmt>(&stmt->node)) {
            check_create_binders(class_name, branch->then_body);
            check_create_binders(class_name, branch->else_body);
        } else if (const auto* sw = std::get_if<SwitchStmt>(&stmt->node)) {
            for (const SwitchCase& c : sw->cases)
                check_create_binders(class_name, c.body);
        }
    }
}

}  // namespace

void Engine::validate_classes() const {
    for (const ClassDef& cls : model_.classes) {
        std::set<std::string> declared;
        std::map<std::string, int> highest;  // base name -> highest prime level

        for (const std::string& param : cls.params) {
            if (!declared.insert(param).second)
                throw EngineError("class " + cls.name + ": duplicate parameter '" +
                                  param + "'");
            highest.emplace(param, 0);
        }
        for (const PrivateDecl& decl : cls.privates) {
            std::string key = field_key(decl.name, decl.primes);
            if (!declared.insert(key).second)
                throw EngineError("class " + cls.name + ": duplicate declaration of '" +
                                  key + "'");
            auto [it, inserted] = highest.emplace(decl.name, decl.primes);
            if (!inserted && decl.primes > it->second) it->second = decl.primes;
            if (decl.primes > 0 && std::holds_alternative<CreateInit>(decl.init))
                throw EngineError("class " + cls.name + ": create binder '" + key +
                                  "' cannot be a derivative");
        }
        // Every prime level below the highest declared one must itself be
        // declared: p'' makes no sense without p' and p.
        for (const auto& [base, top] : highest) {
            for (int k = 0; k <= top; ++k) {
                if (!declared.count(field_key(base, k)))
                    throw EngineError("class " + cls.name + ": '" +
                                      field_key(base, top) + "' is declared but '" +
                                      field_key(base, k) + "' is not");
            }
        }
        check_create_binders(cls.name, cls.body);
    }
}

ObjectStore Engine::instantiate(const std::string& root_class,
                                const std::vector<Value>& args) const {
    ObjectStore store;
    ObjectId root = instantiate_object(store, root_class, args, nullptr, "");
    store.set_root(root);
    return store;
}

ObjectId Engine::instantiate_object(ObjectStore& store, const std::string& class_name,
                                    const std::vector<Value>& args,
                                    const ObjectInstance* parent,
                                    const std::string& binder_name) const {
    const ClassDef& cls = class_def(class_name);
    if (args.size() != cls.params.size())
        throw EngineError("class '" + class_name + "' expects " +
                          std::to_string(cls.params.size()) + " argument(s), got " +
                          std::to_string(args.size()));

    ObjectId parent_id = parent ? parent->id : ObjectId{};
    ObjectId id = store.allocate(class_name, parent, binder_name);
    if (parent_id.raw != 0) store.get(parent_id).children.push_back(id);

    ObjectInstance& inst = store.get(id);
    for (size_t i = 0; i < cls.params.size(); ++i)
        inst.declare_field(cls.params[i], 0, args[i]);

    // Initializers run top to bottom; later ones may read params and earlier
    // fields of the same object.
    for (const PrivateDecl& decl : cls.privates) {
        if (const auto* init = std::get_if<ExprPtr>(&decl.init)) {
            Value v;
            try {
                v = eval_expr(**init, EvalContext{&store, id});
            } catch (const EvalError& e) {
                throw EngineError("class " + class_name + ", initializer of '" +
                                  field_key(decl.name, decl.primes) + "': " + e.what());
            }
            store.get(id).declare_field(decl.name, decl.primes, std::move(v));
        } else {
            const CreateInit& create = std::get<CreateInit>(decl.init);
            std::vector<Value> child_args;
            child_args.reserve(create.args.size());
            try {
                for (const ExprPtr& a : create.args)
                    child_args.push_back(eval_expr(*a, EvalContext{&store, id}));
            } catch (const EvalError& e) {
                throw EngineError("class " + class_name + ", initializer of '" +
                                  decl.name + "': " + e.what());
            }
            ObjectId child = instantiate_object(store, create.class_name, child_args,
                                                &store.get(id), decl.name);
            store.get(id).declare_field(decl.name, 0, Value::object(child));
        }
    }
    return id;
}

Engine::ActiveSet Engine::collect_active(const ObjectStore& store) const {
    ActiveSet out;
    for (ObjectId id : store.creation_order()) {
        const ClassDef& cls = class_def(store.get(id).class_name);
        walk_stmts(cls.body, EvalContext{&store, id}, out);
    }
    return out;
}

void Engine::walk_stmts(const std::vector<StmtPtr>& stmts, const EvalContext& ctx,
                        ActiveSet& out) const {
    for (const StmtPtr& stmt : stmts) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ContinuousAssign>) {
                    out.continuous.push_back(PlanEntry{
                        ctx.self, resolve_target(*node.target, ctx), node.rhs,
                        stmt->pos});
                } else if constexpr (std::is_same_v<T, DiscreteAssign>) {
                    out.discrete.push_back(DiscreteAct{ctx.self, &node, stmt->pos});
                } else if constexpr (std::is_same_v<T, CreateStmt>) {
                    out.creates.push_back(CreateAct{ctx.self, &node, stmt->pos});
                } else if constexpr (std::is_same_v<T, TerminateStmt>) {
                    out.terminates.push_back(TerminateAct{ctx.self, &node, stmt->pos});
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    Value cond = eval_expr(node.condition, ctx);
                    if (!cond.is(ValueKind::Bool))
                        throw EvalError(std::string("if condition must be Bool, got ") +
                                            to_string(cond.kind()),
                                        node.condition->pos);
                    walk_stmts(cond.as_bool() ? node.then_body : node.else_body, ctx,
                               out);
                } else {  // SwitchStmt
                    Value subject = eval_expr(node.subject, ctx);
                    for (const SwitchCase& c : node.cases) {
                        Value lit = eval_expr(c.literal, ctx);
                        if (lit.kind() != subject.kind()) continue;
                        bool match = subject.is(ValueKind::Real)
                                         ? subject.as_real() == lit.as_real()
                                         : value_equal(subject, lit);
                        if (match) {
                            walk_stmts(c.body, ctx, out);
                            break;  // first matching case wins
                        }
                    }
                }
            },
            stmt->node);
    }
}

EquationPlan Engine::order_equations(std::vector<PlanEntry> entries,
                                     const ObjectStore& store) const {
    std::map<FieldPath, size_t> writer;
    for (size_t i = 0; i < entries.size(); ++i) {
        auto [it, inserted] = writer.emplace(entries[i].target, i);
        if (!inserted)
            throw EngineError("multiple continuous writers for '" +
                              store.path_string(entries[i].target) + "'");
    }

    // Edge writer -> reader for every same-instant read of a written path.
    // Reads of paths no equation writes are state reads and impose no order.
    std::vector<std::set<size_t>> successors(entries.size());
    std::vector<size_t> indegree(entries.size(), 0);
    for (size_t i = 0; i < entries.size(); ++i) {
        std::vector<FieldPath> reads;
        collect_reads(*entries[i].rhs, EvalContext{&store, entries[i].owner}, reads);
        for (const FieldPath& read : reads) {
            auto it = writer.find(read);
            if (it == writer.end()) continue;
            if (successors[it->second].insert(i).second) ++indegree[i];
        }
    }

    // Kahn's algorithm; the lowest collection index goes first among ready
    // equations so the order is deterministic.
    std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
    for (size_t i = 0; i < entries.size(); ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<size_t> order;
    order.reserve(entries.size());
    while (!ready.empty()) {
        size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (size_t j : successors[i])
            if (--indegree[j] == 0) ready.push(j);
    }
    if (order.size() != entries.size()) {
        std::vector<std::string> cycle;
        for (size_t i = 0; i < entries.size(); ++i)
            if (indegree[i] > 0) cycle.push_back(store.path_string(entries[i].target));
        throw EngineError("algebraic cycle among continuous equations: " +
                          join(cycle, ", "));
    }

    EquationPlan plan;
    plan.entries.reserve(entries.size());
    for (size_t i : order) plan.entries.push_back(std::move(entries[i]));
    return plan;
}

EquationPlan Engine::plan_continuous(const ObjectStore& store) const {
    return order_equations(collect_active(store).continuous, store);
}

FixpointResult Engine::discrete_fixpoint(
    ObjectStore& store, int max_iterations, double time,
    const std::function<void(const DiscreteEvent&)>& on_event) const {
    FixpointResult result;

    for (int iter = 1; iter <= max_iterations; ++iter) {
        result.iterations = iter;
        ActiveSet active = collect_active(store);
        bool changed = false;

        // All enabled discrete actions read the store as it stood at the top
        // of the iteration; only then is anything applied.
        struct PendingWrite {
            FieldPath target;
            Value value;
        };
        struct PendingCreate {
            const CreateAct* act;
            FieldPath binder;
            std::vector<Value> args;
        };
        std::vector<PendingWrite> writes;
        std::vector<PendingCreate> creates;
        std::vector<ObjectId> terminates;
        std::set<FieldPath> written;
        auto claim = [&](const FieldPath& target) {
            if (!written.insert(target).second)
                throw EngineError("conflicting discrete writers for '" +
                                  store.path_string(target) + "'");
        };

        for (const DiscreteAct& act : active.discrete) {
            EvalContext ctx{&store, act.owner};
            FieldPath target = resolve_target(*act.stmt->target, ctx);
            claim(target);
            writes.push_back({target, eval_expr(act.stmt->rhs, ctx)});
        }
        for (const CreateAct& act : active.creates) {
            EvalContext ctx{&store, act.owner};
            FieldPath binder = resolve_target(*act.stmt->binder, ctx);
            claim(binder);
            std::vector<Value> args;
            args.reserve(act.stmt->args.size());
            for (const ExprPtr& a : act.stmt->args) args.push_back(eval_expr(a, ctx));
            creates.push_back({&act, binder, std::move(args)});
        }
        for (const TerminateAct& act : active.terminates) {
            EvalContext ctx{&store, act.owner};
            Value v = eval_expr(act.stmt->object, ctx);
            if (!v.is(ValueKind::ObjRef))
                throw EvalError(std::string("terminate requires an object reference, "
                                            "got ") +
                                    to_string(v.kind()),
                                act.pos);
            if (v.as_object() == store.root())
                throw EngineError("root cannot be terminated");
            terminates.push_back(v.as_object());
        }

        for (PendingWrite& w : writes) {
            Value before = store.read(w.target);
            if (value_equal(before, w.value)) continue;
            if (on_event)
                on_event(DiscreteEvent{DiscreteEvent::Kind::Assign, time,
                                       store.path_string(w.target), before, w.value});
            store.write(w.target, std::move(w.value));
            changed = true;
            result.discrete_fired = true;
        }
        for (PendingCreate& c : creates) {
            Value before = store.read(c.binder);
            ObjectId child =
                instantiate_object(store, c.act->stmt->class_name, c.args,
                                   &store.get(c.binder.object), c.binder.field);
            Value ref = Value::object(child);
            if (on_event)
                on_event(DiscreteEvent{DiscreteEvent::Kind::Create, time,
                                       store.get(child).path, before, ref});
            store.write(c.binder, std::move(ref));
            changed = true;
            result.discrete_fired = true;
        }
        for (ObjectId target : terminates) {
            if (!store.alive(target)) continue;  // another action got there first
            if (on_event) {
                Value ref = Value::object(target);
                on_event(DiscreteEvent{DiscreteEvent::Kind::Terminate, time,
                                       store.get(target).path, ref, ref});
            }
            store.terminate(target);
            changed = true;
            result.discrete_fired = true;
        }

        // With the discrete effects in place, bring the continuous equations
        // that were active this iteration up to date at the same instant, so
        // that guards, frames, and scene shapes all see settled values. The
        // set was collected before the writes on purpose: an equation whose
        // guard a write just disabled still produces this instant's value
        // (sample-and-hold pattern), and stops holding next iteration.
        EquationPlan plan = order_equations(std::move(active.continuous), store);
        for (const PlanEntry& entry : plan.entries) {
            if (written.count(entry.target))
                throw EngineError("'" + store.path_string(entry.target) +
                                  "' is assigned both discretely and continuously at "
                                  "the same instant");
            Value v = eval_expr(*entry.rhs, EvalContext{&store, entry.owner});
            if (!value_equal(store.read(entry.target), v)) {
                store.write(entry.target, std::move(v));
                changed = true;
            }
        }

        result.plan = std::move(plan);
        if (!changed) return result;
        result.fired = true;
    }
    throw EngineError("non-convergent discrete behavior after " +
                      std::to_string(max_iterations) + " iteration(s)");
}

void Engine::continuous_step(ObjectStore& store, const EquationPlan& plan,
                             double h) const {
    // Phase 1: algebraic variables and driven derivatives, in plan order.
    std::set<FieldPath> held;
    for (const PlanEntry& entry : plan.entries) {
        held.insert(entry.target);
        Value v = eval_expr(*entry.rhs, EvalContext{&store, entry.owner});
        store.write(entry.target, std::move(v));
    }

    // Phase 2: explicit Euler on every derivative chain, from pre-update
    // values. A level an equation holds is not integrated (its value is the
    // equation's, not an accumulation).
    Value step = Value::real(h);
    for (ObjectId id : store.creation_order()) {
        ObjectInstance& inst = store.get(id);
        for (const auto& [base, top] : inst.deriv_order) {
            if (top == 0) continue;
            std::vector<Value> chain;
            chain.reserve(top + 1);
            for (int k = 0; k <= top; ++k) chain.push_back(inst.field(field_key(base, k)));
            for (int k = top - 1; k >= 0; --k) {
                std::string key = field_key(base, k);
                if (held.count(FieldPath{id, key})) continue;
                Value next = eval_binary(BinaryOp::Add, chain[k],
                                         eval_binary(BinaryOp::Mul, step, chain[k + 1]));
                inst.set_field(key, std::move(next));
            }
        }
    }
}

void Engine::emit_frames(const ObjectStore& store, double time,
                         const SimSinks& sinks) const {
    if (sinks.trace) sinks.trace(trace_frame(store, time));
    if (sinks.scene) sinks.scene(scene_frame(store, time));
}

ObjectStore Engine::simulate(const std::string& root_class,
                             const std::vector<Value>& args, const SimConfig& config,
                             const SimSinks& sinks) const {
    config.validate();
    double time = config.start_time;
    try {
        ObjectStore store = instantiate(root_class, args);
        FixpointResult fp = discrete_fixpoint(store, config.max_discrete_iterations,
                                              time, sinks.event);
        emit_frames(store, time, sinks);
        while (time < config.end_time) {
            continuous_step(store, fp.plan, config.time_step);
            time += config.time_step;
            fp = discrete_fixpoint(store, config.max_discrete_iterations, time,
                                   sinks.event);
            emit_frames(store, time, sinks);
        }
        return store;
    } catch (const SimulationError&) {
        throw;
    } catch (const std::exception& e) {
        throw SimulationError(time, e.what());
    }
}

TraceFrame Engine::trace_frame(const ObjectStore& store, double time) const {
    TraceFrame frame;
    frame.time = time;
    for (ObjectId id : store.depth_first()) {
        const ObjectInstance& inst = store.get(id);
        for (const std::string& key : inst.field_order) {
            std::string prefix = inst.path.empty() ? key : inst.path + "." + key;
            flatten(inst.fields.at(key), prefix, frame.entries);
        }
    }
    return frame;
}

}  // namespace acumen
