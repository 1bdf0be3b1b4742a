#include <doctest.h>

#include "sfgloc/sfg_builder.hpp"

#include <algorithm>
#include <set>

using namespace sfgloc;

namespace {

const SfgNode* var_occurrence(const SemanticFlowGraph& g, const std::string& name, int nth = 0) {
    int seen = 0;
    for (const SfgNode& n : g.nodes) {
        if (n.kind == SfgNodeKind::Variable && n.name == name) {
            if (seen == nth)
                return &n;
            ++seen;
        }
    }
    return nullptr;
}

const SfgNode* control_node(const SemanticFlowGraph& g, CtrlType t, int nth = 0) {
    int seen = 0;
    for (const SfgNode& n : g.nodes) {
        if (n.kind == SfgNodeKind::Control && n.ctrl_type == t) {
            if (seen == nth)
                return &n;
            ++seen;
        }
    }
    return nullptr;
}

bool has_edge(const SemanticFlowGraph& g, const SfgNode* a, const SfgNode* b, SfgEdgeKind k) {
    if (a == nullptr || b == nullptr)
        return false;
    return std::find(g.edges.begin(), g.edges.end(), SfgEdge{a->id, b->id, k}) != g.edges.end();
}

int count_kind(const SemanticFlowGraph& g, SfgNodeKind k) {
    int c = 0;
    for (const SfgNode& n : g.nodes)
        if (n.kind == k)
            ++c;
    return c;
}

int count_edges(const SemanticFlowGraph& g, SfgEdgeKind k) {
    int c = 0;
    for (const SfgEdge& e : g.edges)
        if (e.kind == k)
            ++c;
    return c;
}

} // namespace

TEST_SUITE_BEGIN("sfg");

TEST_CASE("empty method yields the empty graph") {
    SemanticFlowGraph g = build_sfg_from_source("void f(){}");
    CHECK(g.nodes.empty());
    CHECK(g.edges.empty());
}

TEST_CASE("if/else yields four control nodes plus one node per occurrence") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int a){ if (c) { a = 1; } else { a = 2; } }");
    CHECK(count_kind(g, SfgNodeKind::Control) == 4);
    CHECK(control_node(g, CtrlType::IfCondition) != nullptr);
    CHECK(control_node(g, CtrlType::IfThen) != nullptr);
    CHECK(control_node(g, CtrlType::IfElse) != nullptr);
    CHECK(control_node(g, CtrlType::IfCONVERGE) != nullptr);
    // params c and a, condition c, and both writes of a
    CHECK(count_kind(g, SfgNodeKind::Variable) == 5);
}

TEST_CASE("while yields condition, body and convergence nodes") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(int a, int n){ while (a < n) { a = a + 1; } }");
    CHECK(count_kind(g, SfgNodeKind::Control) == 3);
    CHECK(control_node(g, CtrlType::WhileCondition) != nullptr);
    CHECK(control_node(g, CtrlType::WhileBody) != nullptr);
    CHECK(control_node(g, CtrlType::WhileCONVERGE) != nullptr);
}

TEST_CASE("n+2 control nodes per construct") {
    struct Case {
        const char* src;
        int expected;
    };
    const Case cases[] = {
        {"void f(boolean c, int a){ if (c) { a = 1; } }", 3},                       // n=1
        {"void f(boolean c, int a){ if (c) { a = 1; } else { a = 2; } }", 4},       // n=2
        {"void f(int n){ for (int i = 0; i < n; i++) { n = n - 1; } }", 4},         // n=2
        {"void f(int n){ for (; n > 0;) { n = n - 1; } }", 3},                      // n=1
        {"void f(List ys, int s){ for (Object o : ys) { s = s + 1; } }", 3},        // n=1
        {"void f(int i){ do { i = i - 1; } while (i > 0); }", 3},                   // n=1
        {"void f(int k, int r){ switch (k) { case 1: r = 1; case 2: r = 2; } }", 4} // n=2
    };
    for (const Case& c : cases) {
        CAPTURE(c.src);
        SemanticFlowGraph g = build_sfg_from_source(c.src);
        CHECK(count_kind(g, SfgNodeKind::Control) == c.expected);
    }
}

TEST_CASE("data edges: call arguments flow into the assigned variable") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(int b, Foo c){ boolean a; a = m(b, c); }");
    const SfgNode* bp = var_occurrence(g, "b", 0);
    const SfgNode* cp = var_occurrence(g, "c", 0);
    const SfgNode* aw = var_occurrence(g, "a", 1); // the write, after the bare declaration
    REQUIRE(aw != nullptr);
    CHECK(aw->role == Role::Assigned);
    CHECK(has_edge(g, bp, aw, SfgEdgeKind::Data));
    CHECK(has_edge(g, cp, aw, SfgEdgeKind::Data));
    CHECK(count_edges(g, SfgEdgeKind::Data) == 2);
    // type labels from the paper's reading of the same snippet
    CHECK(aw->var_type == VarType::Boolean);
    CHECK(bp->var_type == VarType::Int);
    CHECK(cp->var_type == VarType::UserDefined);
}

TEST_CASE("data edges: chained assignment") {
    SemanticFlowGraph g = build_sfg_from_source("void f(int b){ int a = b; int c = a; }");
    const SfgNode* bp = var_occurrence(g, "b", 0);
    const SfgNode* ad = var_occurrence(g, "a", 0); // int a = b
    const SfgNode* cd = var_occurrence(g, "c", 0);
    CHECK(has_edge(g, bp, ad, SfgEdgeKind::Data));
    CHECK(has_edge(g, ad, cd, SfgEdgeKind::Data));
}

TEST_CASE("data edges: definitions merge at the if/else join") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean p, int a, int b){ int x = 0; if (p) { x = a; } else { x = b; } int y = x; }");
    const SfgNode* x1 = var_occurrence(g, "x", 1); // then-branch write
    const SfgNode* x2 = var_occurrence(g, "x", 2); // else-branch write
    const SfgNode* y = var_occurrence(g, "y", 0);
    const SfgNode* ap = var_occurrence(g, "a", 0);
    const SfgNode* bp = var_occurrence(g, "b", 0);
    CHECK(has_edge(g, ap, x1, SfgEdgeKind::Data));
    CHECK(has_edge(g, bp, x2, SfgEdgeKind::Data));
    CHECK(has_edge(g, x1, y, SfgEdgeKind::Data));
    CHECK(has_edge(g, x2, y, SfgEdgeKind::Data));
    // both branches write, so the initial write does not reach the join
    const SfgNode* x0 = var_occurrence(g, "x", 0);
    CHECK_FALSE(has_edge(g, x0, y, SfgEdgeKind::Data));
}

TEST_CASE("data edges: loop body reads its own previous iteration at fixpoint") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(int a, int n){ while (a < n) { a = a + 1; } }");
    const SfgNode* ap = var_occurrence(g, "a", 0);
    const SfgNode* aw = var_occurrence(g, "a", 2); // write inside the body
    REQUIRE(aw->role == Role::Assigned);
    CHECK(has_edge(g, ap, aw, SfgEdgeKind::Data));
    CHECK(has_edge(g, aw, aw, SfgEdgeKind::Data));
}

TEST_CASE("control edges: if/else template") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int a){ if (c) { a = 1; } else { a = 2; } }");
    const SfgNode* cond = control_node(g, CtrlType::IfCondition);
    const SfgNode* then = control_node(g, CtrlType::IfThen);
    const SfgNode* els = control_node(g, CtrlType::IfElse);
    const SfgNode* conv = control_node(g, CtrlType::IfCONVERGE);
    CHECK(has_edge(g, cond, then, SfgEdgeKind::Control));
    CHECK(has_edge(g, cond, els, SfgEdgeKind::Control));
    CHECK(has_edge(g, then, conv, SfgEdgeKind::Control));
    CHECK(has_edge(g, els, conv, SfgEdgeKind::Control));
    CHECK(count_edges(g, SfgEdgeKind::Control) == 4);
}

TEST_CASE("control edges: while template includes the back edge") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(int a, int n){ while (a < n) { a = a + 1; } }");
    const SfgNode* cond = control_node(g, CtrlType::WhileCondition);
    const SfgNode* body = control_node(g, CtrlType::WhileBody);
    const SfgNode* conv = control_node(g, CtrlType::WhileCONVERGE);
    CHECK(has_edge(g, cond, body, SfgEdgeKind::Control));
    CHECK(has_edge(g, body, cond, SfgEdgeKind::Control));
    CHECK(has_edge(g, cond, conv, SfgEdgeKind::Control));
    CHECK(count_edges(g, SfgEdgeKind::Control) == 3);
}

TEST_CASE("control edges: straight-line code has none") {
    SemanticFlowGraph g = build_sfg_from_source("void f(int b){ int a = b; a = a + 1; }");
    CHECK(count_edges(g, SfgEdgeKind::Control) == 0);
}

TEST_CASE("control edges: for template routes body through update") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(int n){ for (int i = 0; i < n; i++) { n = n - 1; } }");
    const SfgNode* cond = control_node(g, CtrlType::ForCondition);
    const SfgNode* body = control_node(g, CtrlType::ForBody);
    const SfgNode* upd = control_node(g, CtrlType::ForUpdate);
    const SfgNode* conv = control_node(g, CtrlType::ForCONVERGE);
    CHECK(has_edge(g, cond, body, SfgEdgeKind::Control));
    CHECK(has_edge(g, body, upd, SfgEdgeKind::Control));
    CHECK(has_edge(g, upd, cond, SfgEdgeKind::Control));
    CHECK(has_edge(g, cond, conv, SfgEdgeKind::Control));
}

TEST_CASE("sequential edges: the three inner rules on a simple if") {
    SemanticFlowGraph g = build_sfg_from_source("void f(boolean c, int a){ if (c) { a = 1; } }");
    const SfgNode* c1 = var_occurrence(g, "c", 1);
    const SfgNode* cond = control_node(g, CtrlType::IfCondition);
    const SfgNode* then = control_node(g, CtrlType::IfThen);
    const SfgNode* conv = control_node(g, CtrlType::IfCONVERGE);
    const SfgNode* aw = var_occurrence(g, "a", 1);
    CHECK(has_edge(g, c1, cond, SfgEdgeKind::Sequential)); // rule (i)
    CHECK(has_edge(g, then, aw, SfgEdgeKind::Sequential)); // rule (ii)
    CHECK(has_edge(g, aw, conv, SfgEdgeKind::Sequential)); // rule (iii)
    CHECK(count_edges(g, SfgEdgeKind::Sequential) == 3);
}

TEST_CASE("sequential edges: rule (iv) links convergence to the next block") {
    SemanticFlowGraph g =
        build_sfg_from_source("void f(boolean c, int a, int b){ if (c) { a = 1; } b = 2; }");
    const SfgNode* conv = control_node(g, CtrlType::IfCONVERGE);
    const SfgNode* bw = var_occurrence(g, "b", 1);
    CHECK(has_edge(g, conv, bw, SfgEdgeKind::Sequential));
}

TEST_CASE("sequential edges: empty branch produces only the condition edge") {
    SemanticFlowGraph g = build_sfg_from_source("void f(boolean c){ if (c) { } }");
    const SfgNode* c1 = var_occurrence(g, "c", 1);
    const SfgNode* cond = control_node(g, CtrlType::IfCondition);
    CHECK(has_edge(g, c1, cond, SfgEdgeKind::Sequential));
    CHECK(count_edges(g, SfgEdgeKind::Sequential) == 1);
}

TEST_CASE("sequential edges: statements without variables are skipped") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int a, int b){ while (c) { break; } m(); b = 1; }");
    const SfgNode* conv = control_node(g, CtrlType::WhileCONVERGE);
    const SfgNode* bw = var_occurrence(g, "b", 1);
    CHECK(has_edge(g, conv, bw, SfgEdgeKind::Sequential)); // skipped over m();
    // the break-only body contributes no rule (ii)/(iii) edges
    const SfgNode* body = control_node(g, CtrlType::WhileBody);
    for (const SfgEdge& e : g.edges)
        CHECK((e.from != body->id || e.kind != SfgEdgeKind::Sequential));
}

TEST_CASE("nested constructs link through structural control edges") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int n){ if (c) { while (n > 0) { n = n - 1; } } }");
    const SfgNode* then = control_node(g, CtrlType::IfThen);
    const SfgNode* wcond = control_node(g, CtrlType::WhileCondition);
    const SfgNode* wconv = control_node(g, CtrlType::WhileCONVERGE);
    const SfgNode* iconv = control_node(g, CtrlType::IfCONVERGE);
    CHECK(has_edge(g, then, wcond, SfgEdgeKind::Control));  // parent branch -> child cond
    CHECK(has_edge(g, wconv, iconv, SfgEdgeKind::Control)); // child CONVERGE -> parent CONVERGE
}

TEST_CASE("sibling constructs chain CONVERGE to the next condition") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int n){ if (c) { n = 1; } while (n > 0) { n = n - 1; } }");
    const SfgNode* iconv = control_node(g, CtrlType::IfCONVERGE);
    const SfgNode* wcond = control_node(g, CtrlType::WhileCondition);
    CHECK(has_edge(g, iconv, wcond, SfgEdgeKind::Control));
}

TEST_CASE("roles: assignment") {
    SemanticFlowGraph g = build_sfg_from_source("void f(int b){ int a; a = b; }");
    CHECK(var_occurrence(g, "a", 1)->role == Role::Assigned);
    CHECK(var_occurrence(g, "b", 1)->role == Role::Assignement);
}

TEST_CASE("roles: invocation") {
    SemanticFlowGraph g = build_sfg_from_source("void f(Service a, int b){ a.m(b); }");
    CHECK(var_occurrence(g, "a", 1)->role == Role::InvocationTarget);
    CHECK(var_occurrence(g, "b", 1)->role == Role::InvocationArgument);
}

TEST_CASE("roles: return") {
    SemanticFlowGraph g = build_sfg_from_source("int f(int x){ return x; }");
    CHECK(var_occurrence(g, "x", 1)->role == Role::Returned);
}

TEST_CASE("roles over the wider table") {
    SemanticFlowGraph g = build_sfg_from_source(
        "int g(Foo p, int[] xs, int i, boolean c){"
        "  int v = xs[i];"
        "  boolean b = !c;"
        "  Object o = (Object) p;"
        "  Foo q = new Foo(v);"
        "  int w = p.f;"
        "  v += i;"
        "  return v;"
        "}");
    CHECK(var_occurrence(g, "xs", 1)->role == Role::ArrayTarget);
    CHECK(var_occurrence(g, "i", 1)->role == Role::ArrayIndex);
    CHECK(var_occurrence(g, "v", 0)->role == Role::Declared);
    CHECK(var_occurrence(g, "c", 1)->role == Role::UnaryOperand);
    CHECK(var_occurrence(g, "p", 1)->role == Role::CastOperand);
    CHECK(var_occurrence(g, "v", 1)->role == Role::NewArgument);
    CHECK(var_occurrence(g, "p", 2)->role == Role::FieldTarget);
    CHECK(var_occurrence(g, "v", 2)->role == Role::CompoundAssigned);
    CHECK(var_occurrence(g, "i", 2)->role == Role::CompoundOperand);
    CHECK(var_occurrence(g, "v", 3)->role == Role::Returned);
}

TEST_CASE("roles: loops and switch") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(List ys, int s, int k){"
        "  for (Object o : ys) { s = s + 1; }"
        "  for (int i = 0; i < k; i++) { s = s + i; }"
        "  switch (k) { case s: k = 1; break; default: k = 2; }"
        "}");
    CHECK(var_occurrence(g, "o", 0)->role == Role::ForeachVariable);
    CHECK(var_occurrence(g, "ys", 1)->role == Role::ForeachSourceVar);
    CHECK(var_occurrence(g, "i", 0)->role == Role::Declared);
    // i++ sits at the root of the for-update clause
    const SfgNode* upd = nullptr;
    for (const SfgNode& n : g.nodes)
        if (n.kind == SfgNodeKind::Variable && n.name == "i" && n.role == Role::ForUpdateOperand)
            upd = &n;
    CHECK(upd != nullptr);
    CHECK(var_occurrence(g, "k", 2)->role == Role::SwitchSelector);
    CHECK(var_occurrence(g, "s", 5)->role == Role::CaseLabelVar);
}

TEST_CASE("invariant: edge-kind partition matches endpoint kinds") {
    const char* sources[] = {
        "void f(boolean c, int a){ if (c) { a = 1; } else { a = 2; } a = a + 1; }",
        "void f(int n){ for (int i = 0; i < n; i++) { n = n - 1; } }",
        "void f(List ys, int s){ for (Object o : ys) { s = s + 1; } }",
        "void f(int i, int d){ do { i -= d; } while (i > 0); }",
        "void f(int k, int r){ switch (k) { case 1: r = 1; break; default: r = 2; } r = r + 1; }",
    };
    for (const char* src : sources) {
        CAPTURE(src);
        SemanticFlowGraph g = build_sfg_from_source(src);
        for (const SfgEdge& e : g.edges) {
            const SfgNode& a = g.nodes[static_cast<std::size_t>(e.from)];
            const SfgNode& b = g.nodes[static_cast<std::size_t>(e.to)];
            switch (e.kind) {
            case SfgEdgeKind::Data:
                CHECK(a.kind == SfgNodeKind::Variable);
                CHECK(b.kind == SfgNodeKind::Variable);
                break;
            case SfgEdgeKind::Control:
                CHECK(a.kind == SfgNodeKind::Control);
                CHECK(b.kind == SfgNodeKind::Control);
                break;
            case SfgEdgeKind::Sequential:
                CHECK(a.kind != b.kind);
                break;
            }
        }
    }
}

TEST_CASE("invariant: build_sfg is deterministic including ids") {
    const char* src =
        "int f(int n){ int s = 0; for (int i = 0; i < n; i++) { s = s + i; } return s; }";
    SemanticFlowGraph a = build_sfg_from_source(src);
    SemanticFlowGraph b = build_sfg_from_source(src);
    CHECK(sfg_to_json(a) == sfg_to_json(b));
}

TEST_CASE("invariant: no duplicate edges, endpoints in range") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int a){ while (c) { if (c) { a = a + 1; } } a = a - 1; }");
    std::set<std::tuple<int, int, int>> seen;
    for (const SfgEdge& e : g.edges) {
        CHECK(e.from >= 0);
        CHECK(e.to >= 0);
        CHECK(e.from < static_cast<int>(g.nodes.size()));
        CHECK(e.to < static_cast<int>(g.nodes.size()));
        auto key = std::make_tuple(e.from, e.to, static_cast<int>(e.kind));
        CHECK(seen.insert(key).second);
    }
}

TEST_CASE("ids are dense and ordered by source position") {
    SemanticFlowGraph g = build_sfg_from_source(
        "void f(boolean c, int a){ if (c) { a = 1; } else { a = 2; } }");
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        CHECK(g.nodes[i].id == static_cast<int>(i));
    for (std::size_t i = 1; i < g.nodes.size(); ++i)
        CHECK(g.nodes[i - 1].span.offset <= g.nodes[i].span.offset);
}

TEST_CASE("dot export labels kinds and styles") {
    SemanticFlowGraph g = build_sfg_from_source("void f(boolean c, int a){ if (c) { a = 1; } }");
    std::string dot = sfg_to_dot(g);
    CHECK(dot.find("shape=ellipse") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("style=bold") != std::string::npos);
}

TEST_SUITE_END();
