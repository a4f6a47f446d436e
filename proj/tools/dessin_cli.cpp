// Command-line front end; talks to the shared library through the C API only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dessin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int die(const std::string& context) {
    std::cerr << "error: " << context;
    const char* msg = dsn_last_error();
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return kExitUsage;
}

struct DessinPtr {
    dsn_dessin* p = nullptr;
    ~DessinPtr() { dsn_release(p); }
};

struct StringPtr {
    char* s = nullptr;
    ~StringPtr() { dsn_string_free(s); }
};

int cmd_list() {
    StringPtr names;
    if (dsn_catalog_names(&names.s) != DSN_OK) return die("list");
    std::cout << names.s;
    return kExitOk;
}

int cmd_info(const std::string& expr) {
    DessinPtr d;
    if (dsn_eval(expr.c_str(), &d.p) != DSN_OK) return die(expr);
    StringPtr text;
    if (dsn_info(d.p, &text.s) != DSN_OK) return die(expr);
    std::cout << "expression: " << expr << "\n" << text.s;
    return kExitOk;
}

int cmd_handles(const std::string& expr) {
    DessinPtr d;
    if (dsn_eval(expr.c_str(), &d.p) != DSN_OK) return die(expr);
    StringPtr text;
    if (dsn_handles_text(d.p, &text.s) != DSN_OK) return die(expr);
    std::cout << text.s;
    return kExitOk;
}

int cmd_verify(const std::string& tier, unsigned seed) {
    int failures = 0;
    auto print = [](const char* line, void*) { std::cout << line << "\n"; };
    if (dsn_verify(tier.c_str(), seed, print, nullptr, &failures) != DSN_OK)
        return die("verify");
    std::cout << (failures ? "FAILED" : "OK") << " (" << failures
              << " failing claims)\n";
    return failures ? kExitVerifyFailed : kExitOk;
}

int cmd_export(const std::string& expr, const std::string& format,
               const std::string& out_path) {
    DessinPtr d;
    if (dsn_eval(expr.c_str(), &d.p) != DSN_OK) return die(expr);
    StringPtr text;
    int rc = format == "dot" ? dsn_export_dot(d.p, &text.s)
                             : dsn_export_dsn(d.p, &text.s);
    if (rc != DSN_OK) return die(expr);
    if (out_path.empty()) {
        std::cout << text.s;
    } else {
        std::ofstream out(out_path);
        if (!out) return die("cannot write " + out_path);
        out << text.s;
    }
    return kExitOk;
}

int cmd_macbeath(long long q) {
    StringPtr text;
    if (dsn_macbeath(q, &text.s) != DSN_OK) return die("macbeath");
    std::cout << "PSL2(" << q << "): " << text.s << "\n";
    return kExitOk;
}

int cmd_covers(const std::string& ea, const std::string& eb) {
    DessinPtr a, b;
    if (dsn_eval(ea.c_str(), &a.p) != DSN_OK) return die(ea);
    if (dsn_eval(eb.c_str(), &b.p) != DSN_OK) return die(eb);
    int sheets = 0, proj = 0;
    if (dsn_covers(a.p, b.p, &sheets, &proj) != DSN_OK) return die("covers");
    if (sheets == 0) {
        std::cout << ea << " does not cover " << eb << "\n";
    } else {
        std::cout << ea << " covers " << eb << " with " << sheets
                  << " sheet(s); handle projection "
                  << (proj ? "holds" : "FAILS") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dessins d'enfants: handles, joins and monodromy verification"};
    app.require_subcommand(1);
    app.footer(
        "Join expressions: NAME, <file.dsn>, D1(k)D2, D1(k@i,j)D2 (handle\n"
        "selectors index the deterministic (k,a,b)-sorted enumeration),\n"
        "X(D1,D2,D3) with optional @i per part, TWIST(D1,D2).\n"
        "Catalog names: run 'list'; P<prime> builds the modular-group dessin.\n"
        "Set DESSIN_FIXTURES to override the fixture directory.");

    app.add_subcommand("list", "list catalog dessins");

    std::string expr;
    auto* info = app.add_subcommand("info", "degree, type, signature, handles, monodromy");
    info->add_option("expr", expr, "join expression")->required();

    auto* handles = app.add_subcommand("handles", "handle inventory of a dessin");
    handles->add_option("expr", expr, "join expression")->required();

    std::string tier = "core";
    unsigned seed = 0;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--tier", tier, "core or full")
        ->check(CLI::IsMember({"core", "full"}));
    verify->add_option("--seed", seed, "seed for randomised word searches");

    std::string format = "dot", out_path;
    auto* exp = app.add_subcommand("export", "write a dessin as DOT or .dsn");
    exp->add_option("--format", format, "dot or dsn")
        ->check(CLI::IsMember({"dot", "dsn"}));
    exp->add_option("expr", expr, "join expression")->required();
    exp->add_option("-o,--output", out_path, "output path (default stdout)");

    long long q = 0;
    auto* mac = app.add_subcommand("macbeath", "Hurwitz classification of PSL2(q)");
    mac->add_option("q", q, "prime power")->required();

    std::string expr_b;
    auto* covers = app.add_subcommand("covers", "test whether one dessin covers another");
    covers->add_option("cover", expr, "covering dessin expression")->required();
    covers->add_option("base", expr_b, "base dessin expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("info")) return cmd_info(expr);
    if (app.got_subcommand("handles")) return cmd_handles(expr);
    if (app.got_subcommand("verify")) return cmd_verify(tier, seed);
    if (app.got_subcommand("export")) return cmd_export(expr, format, out_path);
    if (app.got_subcommand("macbeath")) return cmd_macbeath(q);
    if (app.got_subcommand("covers")) return cmd_covers(expr, expr_b);
    return kExitUsage;
}
