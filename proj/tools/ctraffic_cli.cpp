// ctraffic: top intersection numbers on the Grassmannian of lines and the
// Catalan traffic path counts that reproduce them.
//
// Exit status: 0 success, 1 verification disagreement, 2 usage or query error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctraffic/ctraffic.hpp"
#include "ctraffic/render.hpp"

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kLargeTable = 30;

void note_large(int n_max) {
    if (n_max > kLargeTable) {
        std::cerr << "note: n-max " << n_max << " is above " << kLargeTable
                  << "; this may take a while\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ctraffic;

    CLI::App app{
        "Top intersection numbers kappa_{a,b} on the Grassmannian of lines in P^{n+1},\n"
        "computed by derivations on the exterior square, closed forms, and Catalan traffic\n"
        "path counts. Tables put n down the rows and m across the columns, K(m, n) = kappa_{2m, n-m}."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "ascii";
    int n_max = 10;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"ascii", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--n-max", n_max, "Largest n for table, traffic and verify")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    KappaQuery query;
    auto* kappa_cmd = app.add_subcommand("kappa", "Degree of sigma_1^a sigma_2^b (needs a + 2b = 2n)");
    kappa_cmd->add_option("--a", query.a, "Exponent of sigma_1")->required()->check(CLI::NonNegativeNumber);
    kappa_cmd->add_option("--b", query.b, "Exponent of sigma_2")->required()->check(CLI::NonNegativeNumber);
    kappa_cmd->add_option("--n", query.n, "Ambient space is P^{n+1}")->required()->check(CLI::NonNegativeNumber);

    std::string route_text = "operator";
    auto* table_cmd = app.add_subcommand("table", "K(m, n) triangle for 0 <= m <= n <= n-max");
    table_cmd->add_option("--route", route_text, "Computation route")
        ->check(CLI::IsMember({"operator", "recursive", "simplified", "double-sum", "traffic"}))
        ->capture_default_str();

    auto* traffic_cmd = app.add_subcommand("traffic", "City map with path counts from the origin");

    std::string fault_text;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every route cell by cell");
    verify_cmd->add_option("--inject-fault", fault_text, "m,n: add 1 to the operator value (self-test)")
        ->group("");

    int count = 10;
    auto* catalan_cmd = app.add_subcommand("catalan", "First COUNT Catalan numbers");
    catalan_cmd->add_option("--count", count, "How many values")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const OutputFormat format = *parse_format(format_name);
    try {
        if (*kappa_cmd) {
            std::cout << render_kappa(query, kappa(query), format);
        } else if (*table_cmd) {
            note_large(n_max);
            const Route route = *parse_route(route_text);
            std::cout << render_table(k_table(route, n_max), route, format);
        } else if (*traffic_cmd) {
            note_large(n_max);
            std::cout << render_traffic(count_paths(sufficient_bounds(n_max)), n_max, format);
        } else if (*verify_cmd) {
            note_large(n_max);
            std::optional<FaultInjection> fault;
            if (!fault_text.empty()) {
                FaultInjection injected;
                if (std::sscanf(fault_text.c_str(), "%d,%d", &injected.m, &injected.n) != 2 ||
                    injected.m < 0 || injected.m > injected.n || injected.n > n_max) {
                    std::cerr << "error: --inject-fault expects m,n with 0 <= m <= n <= n-max\n";
                    return kExitUsage;
                }
                fault = injected;
            }
            const RouteReport report = cross_check(n_max, fault);
            std::cout << render_verify(report, format);
            if (!report.passed()) {
                for (const auto* cell : report.failures())
                    std::cerr << "disagreement at m=" << cell->m << ", n=" << cell->n << "\n";
                return kExitDisagree;
            }
        } else if (*catalan_cmd) {
            std::vector<BigInt> values;
            values.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i) values.push_back(catalan(i));
            std::cout << render_catalan(values, format);
        }
    } catch (const InvalidQuery& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
