// Command-line surface for generating, verifying, searching, and recording
// integer solutions of X^4 + Y^4 = 2(U^4 + V^4).
//
// Exit codes: 0 success / equation satisfied, 1 verification or audit
// failure, 2 usage or I/O error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quartic/divpoly.hpp"
#include "quartic/ledger.hpp"
#include "quartic/quartic_map.hpp"
#include "quartic/search.hpp"
#include "quartic/serialize.hpp"

namespace {

constexpr unsigned long kDefaultGenCap = 12;

const quartic::QuarticTuple& smallest_known() {
    static const quartic::QuarticTuple t{
        quartic::Integer(21), quartic::Integer(19), quartic::Integer(20),
        quartic::Integer(7)};
    return t;
}

std::string format_tuple(const quartic::QuarticTuple& t) {
    return "(" + quartic::to_string(t.X) + ", " + quartic::to_string(t.Y) +
           ", " + quartic::to_string(t.U) + ", " + quartic::to_string(t.V) + ")";
}

struct GenOptions {
    unsigned long n_start = 0;
    unsigned long n_end = 0;  // 0 means "same as n_start"
    std::string source = "both";
    std::string format = "json";
    bool include_raw = false;
    bool allow_large = false;
};

int cmd_gen(const GenOptions& opt) {
    unsigned long n_end = opt.n_end == 0 ? opt.n_start : opt.n_end;
    if (opt.n_start < 1 || n_end < opt.n_start) {
        std::cerr << "gen: need 1 <= n_start <= n_end\n";
        return 2;
    }
    if (n_end > kDefaultGenCap && !opt.allow_large) {
        std::cerr << "gen: n_end > " << kDefaultGenCap
                  << " needs --allow-large (psi_n digits grow quadratically)\n";
        return 2;
    }

    quartic::DivPolyContext ctx = quartic::DivPolyContext::e6_generator();
    if (opt.format == "csv")
        std::cout << quartic::csv_header(opt.include_raw) << '\n';
    for (unsigned long n = opt.n_start; n <= n_end; ++n) {
        quartic::SolutionRecord rec;
        std::string label = opt.source;
        if (opt.source == "divpoly") {
            rec = quartic::generate(n, quartic::Source::divpoly, ctx);
        } else if (opt.source == "grouplaw") {
            rec = quartic::generate(n, quartic::Source::group_law, ctx);
        } else {
            rec = quartic::generate(n, quartic::Source::divpoly, ctx);
            quartic::SolutionRecord cross =
                quartic::generate(n, quartic::Source::group_law, ctx);
            if (!(rec.primitive == cross.primitive) ||
                !(rec.canonical == cross.canonical)) {
                std::cerr << "gen: divpoly and group-law paths disagree at n="
                          << n << '\n';
                return 1;
            }
        }
        if (opt.format == "csv")
            std::cout << quartic::record_to_csv(rec, opt.include_raw, label)
                      << '\n';
        else
            std::cout << quartic::record_to_json(rec, opt.include_raw, label)
                             .dump()
                      << '\n';
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& args) {
    quartic::Integer parts[4];
    for (int i = 0; i < 4; ++i) {
        auto value = quartic::parse_integer(args[static_cast<size_t>(i)]);
        if (!value) {
            std::cerr << "verify: '" << args[static_cast<size_t>(i)]
                      << "' is not a decimal integer\n";
            return 2;
        }
        parts[i] = *value;
    }
    quartic::QuarticTuple t{parts[0], parts[1], parts[2], parts[3]};
    bool ok = quartic::verify(t);
    std::cout << "tuple: " << format_tuple(t) << '\n';
    std::cout << "satisfies X^4 + Y^4 = 2(U^4 + V^4): " << (ok ? "yes" : "no")
              << '\n';
    if (sgn(t.X) == 0 && sgn(t.Y) == 0 && sgn(t.U) == 0 && sgn(t.V) == 0) {
        std::cout << "gcd: undefined (zero tuple)\n";
        return ok ? 0 : 1;
    }
    auto [primitive, d] = quartic::reduce_primitive(t);
    std::cout << "gcd: " << quartic::to_string(d) << '\n';
    std::cout << "primitive: " << (d == 1 ? "yes" : "no")
              << (d == 1 ? "" : ", reduces to " + format_tuple(primitive))
              << '\n';
    std::cout << "canonical: " << format_tuple(quartic::canonicalize(t)) << '\n';
    auto factor = quartic::multiple_of(t, smallest_known());
    if (factor)
        std::cout << "multiple of (21, 19, 20, 7): factor "
                  << quartic::to_string(*factor) << '\n';
    else
        std::cout << "multiple of (21, 19, 20, 7): no\n";
    return ok ? 0 : 1;
}

int cmd_search(unsigned long bound) {
    quartic::SearchReport report = quartic::enumerate_solutions(bound);
    std::cout << quartic::report_to_json(report).dump() << '\n';
    return 0;
}

int cmd_point(unsigned long n) {
    quartic::DivPolyContext ctx = quartic::DivPolyContext::e6_generator();
    quartic::CurvePoint pt = ctx.point(static_cast<long>(n));
    quartic::NumeratorTriple tr = quartic::triple_from_point(pt);
    std::cout << "n = " << n << '\n';
    std::cout << "x = " << quartic::to_string(pt.x()) << '\n';
    std::cout << "y = " << quartic::to_string(pt.y()) << '\n';
    std::cout << "b = " << quartic::to_string(tr.b)
              << "  w = " << quartic::to_string(tr.w)
              << "  e = " << quartic::to_string(tr.e) << '\n';
    return 0;
}

int cmd_triangle(unsigned long k) {
    quartic::DivPolyContext ctx = quartic::DivPolyContext::e6_generator();
    quartic::CurvePoint pt = ctx.point(static_cast<long>(k));
    quartic::RationalTriangle tri =
        quartic::triangle_from_point(pt, quartic::Integer(6));
    std::cout << "k = " << k << '\n';
    std::cout << "legs = " << quartic::to_string(tri.leg_a) << ", "
              << quartic::to_string(tri.leg_b) << '\n';
    std::cout << "hypotenuse = " << quartic::to_string(tri.hypotenuse) << '\n';
    std::cout << "area = 6 (exact)\n";
    return 0;
}

std::optional<std::filesystem::path> resolve_ledger_path(
    const std::string& flag_value) {
    if (!flag_value.empty())
        return std::filesystem::path(flag_value);
    if (const char* env = std::getenv("QUARTIC_LEDGER"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

int cmd_ledger(const std::string& action, const std::string& flag_value) {
    auto path = resolve_ledger_path(flag_value);
    if (!path) {
        std::cerr << "ledger: no path given; use --ledger or set "
                     "QUARTIC_LEDGER\n";
        return 2;
    }
    if (action == "append") {
        std::vector<quartic::LedgerEntry> incoming;
        std::string line;
        std::string now = quartic::iso8601_utc_now();
        std::size_t lineno = 0;
        while (std::getline(std::cin, line)) {
            ++lineno;
            if (line.empty())
                continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) {
                std::cerr << "ledger append: stdin line " << lineno
                          << " is not JSON\n";
                return 2;
            }
            quartic::ParsedRecord rec = quartic::record_from_json(j);
            incoming.push_back(quartic::LedgerEntry{rec.canonical, rec.n, rec.d,
                                                    rec.source, now});
        }
        quartic::AppendResult result = quartic::ledger_append(*path, incoming);
        std::cout << "appended " << result.appended << " entries, "
                  << result.duplicates << " duplicates skipped\n";
        return 0;
    }
    if (action == "audit") {
        quartic::AuditResult result = quartic::ledger_audit(*path);
        for (const std::string& failure : result.failures)
            std::cerr << "audit: " << failure << '\n';
        if (!result.ok()) {
            std::cerr << "audit: " << result.failures.size() << " of "
                      << result.entries << " entries failed\n";
            return 1;
        }
        std::cout << "audited " << result.entries << " entries: OK\n";
        return 0;
    }
    // list
    for (const quartic::LedgerEntry& entry : quartic::ledger_read(*path))
        std::cout << quartic::entry_to_json(entry).dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact solutions of X^4 + Y^4 = 2(U^4 + V^4) from multiples of the "
        "generator (-3, 9) of y^2 = x^3 - 36x"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand(
        "gen", "generate solution records for a range of generator multiples");
    gen->add_option("n_start", gen_opt.n_start, "first multiple (>= 1)")
        ->required();
    gen->add_option("n_end", gen_opt.n_end, "last multiple (default n_start)");
    gen->add_option("--source", gen_opt.source,
                    "computation path; 'both' cross-checks the two")
        ->check(CLI::IsMember({"divpoly", "grouplaw", "both"}))
        ->capture_default_str();
    gen->add_option("--format", gen_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    gen->add_flag("--raw", gen_opt.include_raw,
                  "include the unreduced parametrization output");
    gen->add_flag("--allow-large", gen_opt.allow_large,
                  "lift the default n_end cap of 12");

    std::vector<std::string> verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "check one tuple against the equation");
    verify
        ->add_option("XYUV", verify_args,
                     "four decimal integers of arbitrary length")
        ->expected(4);

    unsigned long search_bound = 0;
    CLI::App* search = app.add_subcommand(
        "search", "exhaustive bounded search, reported as JSON");
    search->add_option("bound", search_bound, "component bound (>= 1)")
        ->required();

    unsigned long point_n = 0;
    CLI::App* point =
        app.add_subcommand("point", "print n*(-3, 9) and its (b, w, e) triple");
    point->add_option("n", point_n, "multiple of the generator (>= 1)")
        ->required();

    unsigned long triangle_k = 0;
    CLI::App* triangle = app.add_subcommand(
        "triangle", "rational right triangle of area 6 from k*(-3, 9)");
    triangle->add_option("k", triangle_k, "multiple of the generator (>= 1)")
        ->required();

    std::string ledger_action;
    std::string ledger_flag;
    CLI::App* ledger =
        app.add_subcommand("ledger", "append-only verified solution ledger");
    ledger->add_option("action", ledger_action, "append | audit | list")
        ->required()
        ->check(CLI::IsMember({"append", "audit", "list"}));
    ledger->add_option("--ledger", ledger_flag,
                       "ledger file (default: $QUARTIC_LEDGER)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_opt);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (search->parsed()) {
            if (search_bound < 1) {
                std::cerr << "search: bound must be >= 1\n";
                return 2;
            }
            return cmd_search(search_bound);
        }
        if (point->parsed()) {
            if (point_n < 1) {
                std::cerr << "point: n must be >= 1\n";
                return 2;
            }
            return cmd_point(point_n);
        }
        if (triangle->parsed()) {
            if (triangle_k < 1) {
                std::cerr << "triangle: k must be >= 1\n";
                return 2;
            }
            return cmd_triangle(triangle_k);
        }
        if (ledger->parsed())
            return cmd_ledger(ledger_action, ledger_flag);
    } catch (const quartic::VerificationError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    } catch (const quartic::ParseError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const quartic::LedgerIoError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        // logic_error here means an internal exactness assertion tripped
        std::cerr << "internal error: " << err.what() << '\n';
        return 1;
    }
    return 2;
}
