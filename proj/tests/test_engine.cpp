#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "acumen/engine.hpp"
#include "acumen/eval.hpp"
#include "acumen/parser.hpp"
#include "doctest.h"

using namespace acumen;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Model load_corpus_model(const std::string& name) {
    return parse_model(read_file(std::string(ACUMEN_CORPUS_DIR) + "/" + name));
}

ObjectId child_of(const ObjectStore& store, ObjectId parent, const std::string& binder) {
    return store.get(parent).field(binder).as_object();
}

double field_real(const ObjectStore& store, ObjectId obj, const std::string& key) {
    return store.get(obj).field(key).as_real();
}

// Index of the plan entry writing the given human-readable path, or -1.
int plan_index(const EquationPlan& plan, const ObjectStore& store,
               const std::string& path) {
    for (size_t i = 0; i < plan.entries.size(); ++i)
        if (store.path_string(plan.entries[i].target) == path)
            return static_cast<int>(i);
    return -1;
}

double frame_value(const TraceFrame& frame, const std::string& path) {
    for (const FlatEntry& e : frame.entries)
        if (e.path == path) return std::get<double>(e.value);
    FAIL("no entry '" << path << "' in frame at t=" << frame.time);
    return 0;
}

bool frame_has(const TraceFrame& frame, const std::string& path) {
    for (const FlatEntry& e : frame.entries)
        if (e.path == path) return true;
    return false;
}

}  // namespace

TEST_CASE("instantiation evaluates private initializers in order") {
    Engine engine(load_corpus_model("mass_1d.acm"));
    ObjectStore store = engine.instantiate(
        "mass_1d", eval_literal_list("10, 3, [0,0,0]"));
    ObjectId root = store.root();
    const ObjectInstance& obj = store.get(root);
    CHECK(obj.class_name == "mass_1d");
    CHECK(field_real(store, root, "m") == 10.0);
    CHECK(field_real(store, root, "p") == 3.0);
    CHECK(field_real(store, root, "p'") == 0.0);
    CHECK(field_real(store, root, "p''") == 0.0);
    CHECK(field_real(store, root, "f") == 0.0);
    CHECK(field_real(store, root, "e_k") == 0.0);
    CHECK(obj.deriv_order.at("p") == 2);

    REQUIRE(obj.children.size() == 1);
    ObjectId s = child_of(store, root, "s");
    CHECK(store.get(s).class_name == "sphere");
    CHECK(store.get(s).path == "s");
    CHECK(field_real(store, s, "m") == 10.0);
    CHECK(store.get(s).parent == root);
}

TEST_CASE("instantiation: a class with no members yields one bare object") {
    Engine engine(parse_model("class c () end"));
    ObjectStore store = engine.instantiate("c", {});
    CHECK(store.depth_first().size() == 1);
    CHECK(store.get(store.root()).fields.empty());
}

TEST_CASE("instantiation builds the whole tree") {
    Engine engine(load_corpus_model("bouncing_ball.acm"));
    ObjectStore store = engine.instantiate("bouncing_ball", eval_literal_list("[0,0,0]"));
    // bouncing_ball -> mass_1d (-> sphere) + three display bars
    CHECK(store.depth_first().size() == 6);
    ObjectId m = child_of(store, store.root(), "m");
    CHECK(store.get(m).class_name == "mass_1d");
    CHECK(store.get(child_of(store, m, "s")).class_name == "sphere");
    CHECK(store.get(child_of(store, store.root(), "bt")).class_name == "display_bar");
    // depth-first traversal puts the mass's sphere before the bars
    std::vector<ObjectId> order = store.depth_first();
    CHECK(store.get(order[1]).path == "m");
    CHECK(store.get(order[2]).path == "m.s");
    CHECK(store.get(order[3]).path == "bk");
}

TEST_CASE("instantiation errors: unknown class and arity") {
    Engine engine(load_corpus_model("mass_1d.acm"));
    CHECK_THROWS_WITH_AS(engine.instantiate("nope", {}), "unknown class 'nope'",
                         EngineError);
    try {
        engine.instantiate("mass_1d", eval_literal_list("10"));
        FAIL("expected an arity error");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()).find("expects 3 argument(s), got 1") !=
              std::string::npos);
    }
}

TEST_CASE("impact rule fires once and the fixpoint settles") {
    Engine engine(load_corpus_model("bouncing_ball.acm"));
    ObjectStore store = engine.instantiate("bouncing_ball", eval_literal_list("[0,0,0]"));
    engine.discrete_fixpoint(store);

    ObjectId m = child_of(store, store.root(), "m");
    store.write({m, "p"}, Value::real(-0.01));
    store.write({m, "p'"}, Value::real(-1.0));

    std::vector<DiscreteEvent> events;
    FixpointResult r = engine.discrete_fixpoint(
        store, 1000, 0.5, [&](const DiscreteEvent& e) { events.push_back(e); });
    CHECK(r.discrete_fired);
    CHECK(field_real(store, m, "p'") == 0.9);

    // One impact event; the display bars also refresh their _3D shapes
    // discretely once the recomputed energies reach them.
    int impacts = 0;
    for (const DiscreteEvent& e : events) {
        if (e.path != "m.p'") {
            CHECK(e.path.find("._3D") != std::string::npos);
            continue;
        }
        ++impacts;
        CHECK(e.time == 0.5);
        CHECK(e.before.as_real() == -1.0);
        CHECK(e.after.as_real() == 0.9);
    }
    CHECK(impacts == 1);

    // Velocity now points up, so the guard is disabled: nothing more fires.
    FixpointResult again = engine.discrete_fixpoint(store);
    CHECK_FALSE(again.fired);
    CHECK_FALSE(again.discrete_fired);
    CHECK(again.iterations == 1);
}

TEST_CASE("a quiescent model converges in one iteration") {
    Engine engine(load_corpus_model("bouncing_ball.acm"));
    ObjectStore store = engine.instantiate("bouncing_ball", eval_literal_list("[0,0,0]"));
    FixpointResult first = engine.discrete_fixpoint(store);
    CHECK(first.fired);  // continuous equations settle initial values
    FixpointResult second = engine.discrete_fixpoint(store);
    CHECK_FALSE(second.fired);
    CHECK(second.iterations == 1);
    CHECK_FALSE(second.plan.entries.empty());
}

TEST_CASE("sampled controller: reset and recomputation in the same instant") {
    Engine engine(load_corpus_model("force_controller_pid_d.acm"));
    ObjectStore store = engine.instantiate(
        "force_controller_pid_d", eval_literal_list("10, 1, 4, 0.1"));
    engine.discrete_fixpoint(store);
    ObjectId root = store.root();
    store.write({root, "t"}, Value::real(0.15));
    store.write({root, "g"}, vec3(1, 0, 0));

    FixpointResult r = engine.discrete_fixpoint(store);
    CHECK(r.discrete_fired);
    CHECK(field_real(store, root, "t") == 0.0);
    // f was recomputed at this instant even though the reset of t disabled
    // the guard for the next iteration: k_p*(g-v) = 10*[1,0,0].
    CHECK(value_equal(store.get(root).field("f"), vec3(10, 0, 0)));
    // The surviving plan no longer holds f (it is sampled, not tracking).
    CHECK(plan_index(r.plan, store, "f") == -1);
    CHECK(plan_index(r.plan, store, "t'") >= 0);

    // Between samples f keeps its value even as the goal moves.
    store.write({root, "g"}, vec3(2, 0, 0));
    engine.discrete_fixpoint(store);
    CHECK(value_equal(store.get(root).field("f"), vec3(10, 0, 0)));
}

TEST_CASE("equations are ordered writer-before-reader") {
    Engine engine(load_corpus_model("example_3.acm"));
    ObjectStore store = engine.instantiate("example_3", eval_literal_list("[0,0,0]"));
    EquationPlan plan = engine.plan_continuous(store);

    // spring endpoints <- spring displacement <- spring force <- mass force
    // <- mass acceleration; the energy bar reads every e_k and e_p.
    int s1_p1 = plan_index(plan, store, "s1.p1");
    int s1_dl = plan_index(plan, store, "s1.dl");
    int s1_f1 = plan_index(plan, store, "s1.f1");
    int m1_f = plan_index(plan, store, "m1.f");
    int m1_acc = plan_index(plan, store, "m1.p''");
    int bar = plan_index(plan, store, "b.v");
    int s1_ep = plan_index(plan, store, "s1.e_p");
    REQUIRE(s1_p1 >= 0);
    REQUIRE(s1_dl >= 0);
    REQUIRE(s1_f1 >= 0);
    REQUIRE(m1_f >= 0);
    REQUIRE(m1_acc >= 0);
    REQUIRE(bar >= 0);
    REQUIRE(s1_ep >= 0);
    CHECK(s1_p1 < s1_dl);
    CHECK(s1_dl < s1_f1);
    CHECK(s1_f1 < m1_f);
    CHECK(m1_f < m1_acc);
    CHECK(s1_ep < bar);
    // 3 masses x (p'', e_k, s.p), 3 spheres x _3D, 2 springs x (dl, f1, f2,
    // e_p), and 8 wiring equations in the assembly itself
    CHECK(plan.entries.size() == 9 + 3 + 8 + 8);
}

TEST_CASE("plan for a single clock equation") {
    Engine engine(parse_model("class c () private t=0; t'=0 end t' [=] 5 end"));
    ObjectStore store = engine.instantiate("c", {});
    EquationPlan plan = engine.plan_continuous(store);
    REQUIRE(plan.entries.size() == 1);
    CHECK(store.path_string(plan.entries[0].target) == "t'");
}

TEST_CASE("two equations for the same variable are rejected") {
    Engine engine(parse_model(
        "class c () private x=0; x'=0 end x' [=] 1; x' [=] 2 end"));
    ObjectStore store = engine.instantiate("c", {});
    try {
        engine.plan_continuous(store);
        FAIL("expected a writer conflict");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()).find("multiple continuous writers for 'x''") !=
              std::string::npos);
    }
}

TEST_CASE("conflicting discrete writers are rejected") {
    Engine engine(parse_model(
        "class c () private x=0; go=false end "
        "if go x = 1 end; if go x = 2 end end"));
    ObjectStore store = engine.instantiate("c", {});
    engine.discrete_fixpoint(store);
    store.write({store.root(), "go"}, Value::boolean(true));
    try {
        engine.discrete_fixpoint(store);
        FAIL("expected a discrete conflict");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()).find("conflicting discrete writers for 'x'") !=
              std::string::npos);
    }
    // Two writers agreeing on the value is still a conflict.
    Engine agree(parse_model(
        "class c () private x=0; go=false end "
        "if go x = 1 end; if go x = 1 end end"));
    ObjectStore st2 = agree.instantiate("c", {});
    agree.discrete_fixpoint(st2);
    st2.write({st2.root(), "go"}, Value::boolean(true));
    CHECK_THROWS_AS(agree.discrete_fixpoint(st2), EngineError);
}

TEST_CASE("a variable cannot be driven discretely and continuously at once") {
    Engine engine(parse_model(
        "class c () private x=0; go=false end "
        "x [=] 1; if go x = 5 end end"));
    ObjectStore store = engine.instantiate("c", {});
    engine.discrete_fixpoint(store);
    store.write({store.root(), "go"}, Value::boolean(true));
    try {
        engine.discrete_fixpoint(store);
        FAIL("expected a same-instant conflict");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()).find(
                  "'x' is assigned both discretely and continuously at the same "
                  "instant") != std::string::npos);
    }
}

TEST_CASE("algebraic cycles are rejected") {
    Engine engine(parse_model(
        "class c () private a=0; b=0 end a [=] b + 1; b [=] a + 1 end"));
    ObjectStore store = engine.instantiate("c", {});
    try {
        engine.plan_continuous(store);
        FAIL("expected a cycle error");
    } catch (const EngineError& e) {
        std::string msg = e.what();
        CHECK(msg.find("algebraic cycle among continuous equations") !=
              std::string::npos);
        CHECK(msg.find("a") != std::string::npos);
        CHECK(msg.find("b") != std::string::npos);
    }
}

TEST_CASE("oscillating discrete rules hit the iteration cap") {
    Engine engine(parse_model(
        "class c () private x=0 end "
        "if x == 0 x = 1 end; if x == 1 x = 0 end end"));
    ObjectStore store = engine.instantiate("c", {});
    try {
        engine.discrete_fixpoint(store, 25);
        FAIL("expected non-convergence");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()) ==
              "non-convergent discrete behavior after 25 iteration(s)");
    }
}

TEST_CASE("guards must evaluate to booleans") {
    Engine engine(parse_model("class c () private x=0 end if x x = 1 end end"));
    ObjectStore store = engine.instantiate("c", {});
    try {
        engine.discrete_fixpoint(store);
        FAIL("expected a guard kind error");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("if condition must be Bool") !=
              std::string::npos);
    }
}

TEST_CASE("switch dispatches on the literal value") {
    Engine engine(parse_model(
        "class c () private mode=\"up\"; x=0 end "
        "switch mode case \"up\" x = 1 case \"down\" x = 2 end end"));
    ObjectStore store = engine.instantiate("c", {});
    engine.discrete_fixpoint(store);
    CHECK(field_real(store, store.root(), "x") == 1.0);
    store.write({store.root(), "mode"}, Value::str("down"));
    engine.discrete_fixpoint(store);
    CHECK(field_real(store, store.root(), "x") == 2.0);
    // No matching case: nothing fires.
    store.write({store.root(), "mode"}, Value::str("sideways"));
    FixpointResult r = engine.discrete_fixpoint(store);
    CHECK_FALSE(r.fired);
}

TEST_CASE("create during the fixpoint attaches a live child") {
    Engine engine(parse_model(
        "class leaf (v) private w = v end end\n"
        "class c () private n=0; kid=0 end "
        "if n == 0 kid = create leaf (7); n = 1 end end"));
    ObjectStore store = engine.instantiate("c", {});
    std::vector<DiscreteEvent> events;
    engine.discrete_fixpoint(store, 1000, 0.0,
                             [&](const DiscreteEvent& e) { events.push_back(e); });
    ObjectId kid = child_of(store, store.root(), "kid");
    CHECK(store.alive(kid));
    CHECK(store.get(kid).class_name == "leaf");
    CHECK(field_real(store, kid, "w") == 7.0);
    CHECK(store.get(kid).parent == store.root());
    CHECK(store.get(kid).path == "kid");
    bool saw_create = false;
    for (const DiscreteEvent& e : events)
        if (e.kind == DiscreteEvent::Kind::Create && e.path == "kid") saw_create = true;
    CHECK(saw_create);
}

TEST_CASE("terminate detaches the object and its fields") {
    Engine engine(parse_model(
        "class leaf () private y=1 end end\n"
        "class c () private b = create leaf (); done=false end "
        "if done == false terminate b; done = true end end"));
    ObjectStore store = engine.instantiate("c", {});
    ObjectId b = child_of(store, store.root(), "b");
    CHECK(store.alive(b));

    engine.discrete_fixpoint(store);
    CHECK_FALSE(store.alive(b));
    CHECK(store.depth_first().size() == 1);
    CHECK(store.get(store.root()).children.empty());

    // The binder still holds a reference, but reading through it is an error.
    CHECK_THROWS_AS(store.read({b, "y"}), EvalError);
    try {
        store.read({b, "y"});
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("dangling object reference") !=
              std::string::npos);
    }
}

TEST_CASE("terminate rejects non-references and the root object") {
    Engine engine(parse_model("class c () private s = [0,0,0] end terminate s end"));
    ObjectStore store = engine.instantiate("c", {});
    try {
        engine.discrete_fixpoint(store);
        FAIL("expected a kind error");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("terminate requires an object reference") !=
              std::string::npos);
    }

    // Hand the root its own reference: the engine must refuse to kill it.
    Engine engine2(parse_model("class c (victim) terminate victim end"));
    ObjectStore store2 = engine2.instantiate("c", {Value::object(ObjectId{1})});
    REQUIRE(store2.root() == ObjectId{1});
    try {
        engine2.discrete_fixpoint(store2);
        FAIL("expected a root-termination error");
    } catch (const EngineError& e) {
        CHECK(std::string(e.what()) == "root cannot be terminated");
    }
}

TEST_CASE("integration matches the hand-rolled recurrence bit for bit") {
    Engine engine(parse_model(
        "class c () private x=1; x'=0 end x' [=] x end"));
    SimConfig config;
    config.end_time = 0.25;  // 16 steps at the default step size
    std::vector<TraceFrame> frames;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { frames.push_back(f); };
    engine.simulate("c", {}, config, sinks);

    REQUIRE(frames.size() == 17);
    double oracle = 1.0;
    for (size_t i = 0; i < frames.size(); ++i) {
        CHECK(frame_value(frames[i], "x") == oracle);  // exact equality
        oracle += config.time_step * oracle;
    }
}

TEST_CASE("a constant derivative accumulates exactly") {
    Engine engine(load_corpus_model("moving_sphere.acm"));
    SimConfig config;
    config.end_time = 1.0;
    std::vector<TraceFrame> frames;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { frames.push_back(f); };
    engine.simulate("moving_sphere", eval_literal_list("5, [0,0,0]"), config, sinks);
    REQUIRE(frames.size() == 65);
    CHECK(frames.back().time == 1.0);
    CHECK(frame_value(frames.back(), "t") == 5.0);  // 64 * (h * 5), exact
    CHECK(frame_value(frames.back(), "t'") == 5.0);
}

TEST_CASE("gravity integrates as the same float operations") {
    Engine engine(parse_model(
        "class c () private v=0; v'=0; f=0 end f [=] 10 * -9.81; v' [=] f / 10 end"));
    SimConfig config;
    config.end_time = 1.0;
    std::vector<TraceFrame> frames;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { frames.push_back(f); };
    engine.simulate("c", {}, config, sinks);

    double f = 10.0 * -9.81;
    double a = f / 10.0;
    double v = 0.0;
    for (const TraceFrame& frame : frames) {
        CHECK(frame_value(frame, "v") == v);
        v += config.time_step * a;
    }
}

TEST_CASE("declared-but-undriven top derivatives hold their value") {
    Engine engine(parse_model("class c () private x=1; x'=1 end end"));
    ObjectStore store = engine.instantiate("c", {});
    EquationPlan plan = engine.plan_continuous(store);
    CHECK(plan.entries.empty());
    engine.continuous_step(store, plan, 0.25);
    CHECK(field_real(store, store.root(), "x") == 1.25);
    CHECK(field_real(store, store.root(), "x'") == 1.0);
    engine.continuous_step(store, plan, 0.25);
    CHECK(field_real(store, store.root(), "x") == 1.5);
}

TEST_CASE("levels held by an equation are not integrated") {
    // t'' exists, so t' is not the top of the chain; but the plan drives t'
    // directly, so integration must leave it alone and only advance t.
    Engine engine(load_corpus_model("force_disturbance.acm"));
    ObjectStore store = engine.instantiate("force_disturbance", eval_literal_list("1"));
    FixpointResult r = engine.discrete_fixpoint(store);
    engine.continuous_step(store, r.plan, 0.25);
    CHECK(field_real(store, store.root(), "t") == 1.0);   // 0 + 0.25 * 4
    CHECK(field_real(store, store.root(), "t'") == 4.0);  // held, not integrated
    CHECK(field_real(store, store.root(), "t''") == 0.0);
    engine.continuous_step(store, r.plan, 0.25);
    CHECK(field_real(store, store.root(), "t") == 2.0);
}

TEST_CASE("derivative updates use pre-step values throughout the chain") {
    Engine engine(parse_model(
        "class c () private p=3; p'=2; p''=0; f=-4 end p'' [=] f end"));
    ObjectStore store = engine.instantiate("c", {});
    FixpointResult r = engine.discrete_fixpoint(store);
    engine.continuous_step(store, r.plan, 0.5);
    // p uses the old p' (2), p' uses p'' (-4): simultaneous update.
    CHECK(field_real(store, store.root(), "p") == 3.0 + 0.5 * 2.0);
    CHECK(field_real(store, store.root(), "p'") == 2.0 + 0.5 * -4.0);
}

TEST_CASE("a model with no dynamics emits identical frames") {
    Engine engine(parse_model("class c () private x=5; label=\"idle\" end end"));
    SimConfig config;
    config.end_time = 0.5;
    std::vector<TraceFrame> frames;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { frames.push_back(f); };
    engine.simulate("c", {}, config, sinks);
    REQUIRE(frames.size() == 33);
    for (const TraceFrame& f : frames) {
        CHECK(frame_value(f, "x") == 5.0);
        REQUIRE(f.entries.size() == 2);
        CHECK(f.entries[1].path == "label");
        CHECK(std::get<std::string>(f.entries[1].value) == "idle");
    }
}

TEST_CASE("frames flatten the object tree depth-first") {
    Engine engine(load_corpus_model("mass_1d.acm"));
    ObjectStore store = engine.instantiate("mass_1d", eval_literal_list("10, 3, [0,0,0]"));
    engine.discrete_fixpoint(store);
    TraceFrame frame = engine.trace_frame(store, 1.5);
    CHECK(frame.time == 1.5);
    CHECK(frame_has(frame, "p"));
    CHECK(frame_has(frame, "p''"));
    CHECK(frame_has(frame, "e_k"));
    CHECK(frame_has(frame, "s.p[2]"));
    CHECK(frame_has(frame, "s._3D[0][0]"));
    CHECK(frame_value(frame, "s.p[2]") == 3.0);  // settled by the fixpoint
    // the binder field holds an object reference
    bool found_ref = false;
    for (const FlatEntry& e : frame.entries)
        if (e.path == "s" && std::holds_alternative<std::string>(e.value)) {
            CHECK(std::get<std::string>(e.value).rfind("#", 0) == 0);
            found_ref = true;
        }
    CHECK(found_ref);
}

TEST_CASE("terminated objects vanish from subsequent frames") {
    Engine engine(parse_model(
        "class leaf () private y=1 end end\n"
        "class c () private b = create leaf (); t=0; t'=0; done=false end "
        "t' [=] 1; if (t > 0.1 && done == false) terminate b; done = true end end"));
    SimConfig config;
    config.end_time = 0.25;
    std::vector<TraceFrame> frames;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { frames.push_back(f); };
    engine.simulate("c", {}, config, sinks);
    CHECK(frame_has(frames.front(), "b.y"));
    CHECK_FALSE(frame_has(frames.back(), "b.y"));
    // the termination happened strictly after t passed 0.1
    for (const TraceFrame& f : frames)
        if (f.time <= 0.1) CHECK(frame_has(f, "b.y"));
}

TEST_CASE("simulation errors carry the failure time") {
    Engine engine(parse_model(
        "class c () private t=0; t'=0; x=1 end t' [=] 1; "
        "if (t > 0.5) x = 1/0 end end"));
    SimConfig config;
    config.end_time = 2.0;
    try {
        engine.simulate("c", {}, config, {});
        FAIL("expected a simulation error");
    } catch (const SimulationError& e) {
        CHECK(e.time() > 0.5);
        CHECK(e.time() < 0.6);
        std::string msg = e.what();
        CHECK(msg.rfind("t=", 0) == 0);
        CHECK(msg.find("division by zero") != std::string::npos);
    }
}

TEST_CASE("configuration validation") {
    SimConfig config;
    CHECK_NOTHROW(config.validate());
    config.time_step = 0;
    CHECK_THROWS_AS(config.validate(), EngineError);
    config.time_step = 0.015625;
    config.end_time = -1;
    CHECK_THROWS_AS(config.validate(), EngineError);
    config.end_time = 10;
    config.max_discrete_iterations = 0;
    CHECK_THROWS_AS(config.validate(), EngineError);
}

TEST_CASE("frame count and cadence for a default run") {
    Engine engine(parse_model("class c () private x=0 end end"));
    SimConfig config;  // 0 to 10 at 2^-6
    std::vector<double> times;
    SimSinks sinks;
    sinks.trace = [&](const TraceFrame& f) { times.push_back(f.time); };
    engine.simulate("c", {}, config, sinks);
    REQUIRE(times.size() == 641);
    CHECK(times.front() == 0.0);
    CHECK(times.back() == 10.0);
    for (size_t i = 1; i < times.size(); ++i)
        CHECK(times[i] - times[i - 1] == config.time_step);
}
