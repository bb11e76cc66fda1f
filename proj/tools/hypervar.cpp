// hypervar: Betti sequences, homological support sets, and rank
// varieties for finite-dimensional modules over truncated polynomial
// rings, in exact finite-field arithmetic.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage
// error, 3 I/O or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypervar/io.hpp"
#include "hypervar/suites.hpp"

namespace hv = hypervar;

namespace {

hv::ModuleRep load_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hv::IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return hv::module_from_string(ss.str());
}

std::uint64_t enumeration_bound(bool force) {
    if (force) return UINT64_MAX;
    if (const char* env = std::getenv("HYPERVAR_MAX_POINTS")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw hv::IoError("HYPERVAR_MAX_POINTS is not a number");
        }
    }
    return 1000000;
}

std::vector<hv::felem> parse_point(const hv::Field& F, const std::string& text,
                                   std::size_t expect) {
    std::vector<hv::felem> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        unsigned long v;
        try {
            v = std::stoul(item);
        } catch (...) {
            throw hv::IoError("point coordinate is not a number: " + item);
        }
        if (v >= F.order()) throw hv::IoError("point coordinate out of field range: " + item);
        pt.push_back(static_cast<hv::felem>(v));
    }
    if (pt.size() != expect)
        throw hv::IoError("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                          std::to_string(expect));
    return pt;
}

std::string poly_matrix_table(const std::vector<std::vector<hv::MPoly>>& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& row : m) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.is_zero() ? "." : e.to_string());
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
        cells.push_back(std::move(r));
    }
    std::ostringstream os;
    for (const auto& r : cells) {
        os << "[ ";
        for (std::size_t j = 0; j < r.size(); ++j) {
            os << r[j] << std::string(width[j] - r[j].size() + 2, ' ');
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti sequences, support sets and rank varieties over truncated "
                 "polynomial rings (exact arithmetic)"};
    app.require_subcommand(1);

    std::string format = "table";
    std::uint64_t seed = 1;
    std::size_t trials = 25;
    bool force = false;
    app.add_option("--format", format, "Output format: json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--seed", seed, "Random seed for verification suites");
    app.add_option("--trials", trials, "Trial count for verification suites");
    app.add_flag("--force", force, "Bypass the enumeration point bound");

    // validate
    std::string validate_path;
    auto* cmd_validate = app.add_subcommand("validate", "Check a module file's invariants");
    cmd_validate->add_option("file", validate_path, "Module JSON file")->required();

    // betti
    std::string betti_path, betti_over = "hypersurface", betti_coeffs;
    std::size_t betti_maxdeg = 0;
    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers of a module");
    cmd_betti->add_option("--module", betti_path, "Module JSON file")->required();
    cmd_betti->add_option("--over", betti_over, "P (polynomial ring) or hypersurface")
        ->check(CLI::IsMember({"P", "hypersurface"}));
    cmd_betti->add_option("--coeffs", betti_coeffs,
                          "Semicolon-separated coefficient polynomials g1;...;gc");
    cmd_betti->add_option("--max-degree", betti_maxdeg, "Top homological degree (default 2d+4)");

    // support
    std::string support_path, support_point, support_method = "both";
    bool support_enum = false;
    std::uint64_t support_q = 0;
    auto* cmd_support = app.add_subcommand("support", "Homological support set membership");
    cmd_support->add_option("--module", support_path, "Module JSON file")->required();
    cmd_support->add_option("--point", support_point, "Comma-separated coordinates a1,...,ac");
    cmd_support->add_flag("--enumerate", support_enum, "Enumerate all points of k^c");
    cmd_support->add_option("--field-order", support_q, "Field order for enumeration");
    cmd_support->add_option("--method", support_method, "homology | rank | both")
        ->check(CLI::IsMember({"homology", "rank", "both"}));

    // rankvariety
    std::string rank_path;
    bool rank_enum = false;
    std::uint64_t rank_q = 0;
    auto* cmd_rank = app.add_subcommand("rankvariety", "Rank variety of a module "
                                                       "(elementary abelian rings)");
    cmd_rank->add_option("--module", rank_path, "Module JSON file")->required();
    cmd_rank->add_flag("--enumerate", rank_enum, "Enumerate all points of k^d");
    cmd_rank->add_option("--field-order", rank_q, "Field order for enumeration");

    // verify
    std::string verify_suite;
    auto* cmd_verify = app.add_subcommand("verify", "Run a seeded verification suite");
    cmd_verify->add_option("--suite", verify_suite, "Suite name or 'all'")->required();

    // example-matrices
    std::size_t ex_c = 2;
    std::uint32_t ex_p = 2;
    std::vector<std::uint32_t> ex_u;
    auto* cmd_ex = app.add_subcommand("example-matrices",
                                      "Symbolic stable matrix pair and fidelity check");
    cmd_ex->add_option("--c", ex_c, "Number of variables (= relations), at most 3");
    cmd_ex->add_option("--p", ex_p, "Field characteristic");
    cmd_ex->add_option("--exponents", ex_u, "Relation exponents u1..uc (default all p)");

    // let global options (--format, --seed, --trials, --force) appear after
    // the subcommand as well
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        hv::OutputFormat fmt = hv::parse_format(format);

        if (*cmd_validate) {
            hv::ModuleRep M = load_module_file(validate_path);
            hv::ValidationReport rep = M.validate();
            if (rep.ok) {
                std::cout << "ok\n";
                return 0;
            }
            std::cout << "invalid: " << rep.message << "\n";
            return 1;
        }

        if (*cmd_betti) {
            hv::ModuleRep M = load_module_file(betti_path);
            auto rep = M.validate();
            if (!rep.ok) throw hv::IoError("invalid module: " + rep.message);
            std::size_t N = betti_maxdeg ? betti_maxdeg : hv::default_max_degree(M.ring);
            hv::BettiTable table;
            if (betti_over == "P") {
                table = hv::betti_over_P(M, N);
            } else {
                if (betti_coeffs.empty())
                    throw hv::IoError("betti --over hypersurface requires --coeffs");
                auto ctx = M.ring.t_context();
                std::vector<hv::MPoly> g;
                std::stringstream ss(betti_coeffs);
                std::string item;
                while (std::getline(ss, item, ';')) g.push_back(hv::parse_poly(ctx, item));
                hv::HypersurfaceCoeffs coeffs(M.ring, std::move(g));
                table = hv::betti_over_hypersurface(M, coeffs, N);
            }
            std::cout << hv::betti_render(table, fmt);
            return 0;
        }

        if (*cmd_support) {
            hv::ModuleRep M = load_module_file(support_path);
            auto rep = M.validate();
            if (!rep.ok) throw hv::IoError("invalid module: " + rep.message);
            hv::MembershipMethod method = support_method == "homology"
                                              ? hv::MembershipMethod::homology
                                          : support_method == "rank" ? hv::MembershipMethod::rank
                                                                     : hv::MembershipMethod::both;
            if (support_enum == support_point.empty()) {
                // exactly one of --point / --enumerate
                if (support_enum) {
                    hv::FieldPtr F = support_q ? hv::Field::of_order(support_q) : M.ring.field;
                    M = hv::extend_scalars(M, F);
                    hv::SupportReport report =
                        hv::support_enumerate(M, F, enumeration_bound(force));
                    std::cout << hv::support_report_render(M, report, fmt);
                    return report.methods_agree ? 0 : 1;
                }
                auto pt = parse_point(*M.ring.field, support_point, M.ring.c);
                hv::PointEvidence ev = hv::support_membership(M, pt, method);
                hv::SupportReport report;
                report.field_order = M.ring.field->order();
                report.member_count = ev.member ? 1 : 0;
                report.methods_agree = ev.methods_agree;
                report.points.push_back(ev);
                std::cout << hv::support_report_render(M, report, fmt);
                return ev.methods_agree ? 0 : 1;
            }
            std::cerr << "error: use exactly one of --point or --enumerate\n";
            return 2;
        }

        if (*cmd_rank) {
            if (!rank_enum) {
                std::cerr << "error: rankvariety requires --enumerate\n";
                return 2;
            }
            hv::ModuleRep M = load_module_file(rank_path);
            auto rep = M.validate();
            if (!rep.ok) throw hv::IoError("invalid module: " + rep.message);
            hv::FieldPtr F = rank_q ? hv::Field::of_order(rank_q) : M.ring.field;
            M = hv::extend_scalars(M, F);
            hv::RankReport report = hv::rank_variety_enumerate(M, F, enumeration_bound(force));
            std::cout << hv::rank_report_render(M, report, fmt);
            return 0;
        }

        if (*cmd_verify) {
            std::vector<std::string> names;
            if (verify_suite == "all") names = hv::suite_names();
            else names.push_back(verify_suite);
            std::vector<hv::VerificationOutcome> outs;
            bool all = true;
            try {
                for (const auto& n : names) {
                    outs.push_back(hv::run_suite(n, seed, trials));
                    all = all && outs.back().passed;
                }
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            std::cout << hv::outcomes_render(outs, fmt);
            return all ? 0 : 1;
        }

        if (*cmd_ex) {
            if (ex_c < 1 || ex_c > 3) {
                std::cerr << "error: --c must be between 1 and 3\n";
                return 2;
            }
            hv::FieldPtr F = hv::Field::prime(ex_p);
            std::vector<std::uint32_t> u = ex_u.empty()
                                               ? std::vector<std::uint32_t>(ex_c, ex_p)
                                               : ex_u;
            hv::RingSpec ring(F, ex_c, ex_c, u);
            hv::SymbolicStablePair pair = hv::example_matrices(ring);
            bool agree = hv::example_matrices_agree(ring);
            if (fmt == hv::OutputFormat::json_fmt) {
                hv::json j;
                j["schema"] = 1;
                j["kind"] = "example_matrices";
                auto dump = [](const std::vector<std::vector<hv::MPoly>>& m) {
                    hv::json rows = hv::json::array();
                    for (const auto& row : m) {
                        hv::json r = hv::json::array();
                        for (const auto& e : row) r.push_back(e.to_string());
                        rows.push_back(std::move(r));
                    }
                    return rows;
                };
                j["A"] = dump(pair.A);
                j["B"] = dump(pair.B);
                j["matches_construction"] = agree;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "A (odd -> even weight rows/cols):\n" << poly_matrix_table(pair.A)
                          << "B:\n" << poly_matrix_table(pair.B)
                          << "matches construction: " << (agree ? "yes" : "no") << "\n";
            }
            return agree ? 0 : 1;
        }
    } catch (const hv::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
