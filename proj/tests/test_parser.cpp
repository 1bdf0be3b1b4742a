#include <doctest.h>

#include "sfgloc/ast.hpp"
#include "sfgloc/errors.hpp"
#include "sfgloc/parser.hpp"

using namespace sfgloc;

TEST_SUITE_BEGIN("parser");

TEST_CASE("minimal method parses to a MethodDecl with one VarDecl") {
    Ast ast = parse_method_source("void f(){ int a = 0; }");
    REQUIRE(ast.root != nullptr);
    CHECK(ast.root->kind == NodeKind::MethodDecl);
    CHECK(ast.root->name == "f");
    REQUIRE(ast.root->body->stmts.size() == 1);
    Node* d = ast.root->body->stmts[0];
    CHECK(d->kind == NodeKind::VarDecl);
    CHECK(d->name == "a");
    CHECK(d->type_name == "int");
    REQUIRE(d->init != nullptr);
    CHECK(d->init->kind == NodeKind::Literal);
}

TEST_CASE("if/else has then and else blocks") {
    Ast ast = parse_method_source("void f(int x, int y){ if (x) { y = 1; } else { y = 2; } }");
    Node* s = ast.root->body->stmts[0];
    REQUIRE(s->kind == NodeKind::If);
    REQUIRE(s->then_branch->kind == NodeKind::Block);
    REQUIRE(s->else_branch->kind == NodeKind::Block);
    CHECK(s->then_branch->stmts.size() == 1);
    CHECK(s->then_branch->stmts[0]->kind == NodeKind::Assign);
}

TEST_CASE("out-of-subset constructs raise UnsupportedConstruct") {
    CHECK_THROWS_AS(parse_method_source("void f(){ try {} catch(Exception e) {} }"),
                    UnsupportedConstruct);
    CHECK_THROWS_AS(parse_method_source("void f(List<String> xs){}"), UnsupportedConstruct);
    CHECK_THROWS_AS(parse_method_source("void f(int a){ int b = a > 0 ? 1 : 2; }"),
                    UnsupportedConstruct);
    CHECK_THROWS_AS(parse_method_source("void f(){ loop: while(true) { break loop; } }"),
                    UnsupportedConstruct);
    CHECK_THROWS_AS(parse_method_source("void f(){ synchronized(this) {} }"),
                    UnsupportedConstruct);
}

TEST_CASE("syntax errors raise ParseError") {
    CHECK_THROWS_AS(parse_method_source("void f( { }"), ParseError);
    CHECK_THROWS_AS(parse_method_source("void f(){ int = 3; }"), ParseError);
    CHECK_THROWS_AS(parse_method_source(""), ParseError);
    CHECK_THROWS_AS(parse_method_source("void f(){ } void g(){ }"), ParseError);
}

TEST_CASE("every non-root node has exactly one parent, tree is acyclic") {
    Ast ast = parse_method_source(
        "int f(int n){ int s = 0; for (int i = 0; i < n; i++) { s = s + i; } return s; }");
    int count = 0;
    walk(ast.root, [&](Node* n) {
        ++count;
        if (n != ast.root) {
            REQUIRE(n->parent != nullptr);
            // walking up terminates at the root (acyclicity)
            Node* p = n;
            int hops = 0;
            while (p->parent != nullptr && hops < 1000) {
                p = p->parent;
                ++hops;
            }
            CHECK(p == ast.root);
        }
    });
    CHECK(count > 10);
}

TEST_CASE("statement kinds of the subset all parse") {
    const char* src =
        "int f(int n, int[] xs, List ys){"
        "  int s = 0;"
        "  s = n;"
        "  s += 2;"
        "  m(s);"
        "  n.q(s);"
        "  while (s > 0) { s--; }"
        "  do { s++; } while (s < 3);"
        "  for (Object o : ys) { s = s + 1; }"
        "  switch (n) { case 1: s = 1; break; default: s = 2; }"
        "  if (s == 2) { return xs[0]; }"
        "  Foo g = new Foo(s);"
        "  Object o2 = (Object) g;"
        "  int w = g.field;"
        "  continue;"
        "  return s;"
        "}";
    Ast ast = parse_method_source(src);
    CHECK(ast.root->body->stmts.size() == 15);
}

TEST_CASE("cast vs parenthesized expression disambiguation") {
    Ast a = parse_method_source("void f(Foo p){ Object o = (Object) p; }");
    CHECK(a.root->body->stmts[0]->init->kind == NodeKind::Cast);
    Ast b = parse_method_source("void f(int x, int y){ int z = (x) + y; }");
    CHECK(b.root->body->stmts[0]->init->kind == NodeKind::Binary);
}

TEST_CASE("round-trip: parse(print(ast)) is structurally equal") {
    const char* sources[] = {
        "void f(){ int a = 0; }",
        "void f(int x, int y){ if (x > y) { y = x; } else { y = 0; } }",
        "int f(int n){ int s = 0; for (int i = 0; i < n; i++) { s = s + i; } return s; }",
        "void f(List ys, int s){ for (Object o : ys) { s++; } }",
        "void f(int k, int r){ switch (k) { case 1: r = 1; break; default: r = 0; } }",
        "void f(int i, int d){ do { i -= d; } while (i > 0); }",
        "int g(Foo p, int[] xs, int i, boolean c){ int v = xs[i]; boolean b = !c; return v; }",
    };
    for (const char* src : sources) {
        CAPTURE(src);
        Ast first = parse_method_source(src);
        Ast second = parse_method_source(print_source(first));
        CHECK(ast_equal(first, second));
    }
}

TEST_CASE("parser returns a value or a structured error on arbitrary bytes") {
    // tiny deterministic fuzz: mutated snippets must never crash
    std::string base = "void f(int a){ while (a > 0) { a = a - 1; } }";
    unsigned long rng = 12345;
    auto next = [&]() {
        rng = rng * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned>(rng >> 33);
    };
    for (int iter = 0; iter < 500; ++iter) {
        std::string s = base;
        int edits = 1 + static_cast<int>(next() % 4);
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = next() % s.size();
            s[pos] = static_cast<char>(next() % 256);
        }
        try {
            Ast ast = parse_method_source(s);
            CHECK(ast.root != nullptr);
        } catch (const InputError&) {
            // structured error: fine
        }
    }
}

TEST_SUITE_END();
