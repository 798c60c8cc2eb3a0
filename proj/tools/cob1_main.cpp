// cob1: calculator for cobordism classes of k-fold simple branched coverings
// of surfaces. Exit codes: 0 success / positive decision, 1 negative
// decision, 2 usage error, 3 invalid input document.

#include "cob1/cob2.hpp"
#include "cob1/common.hpp"
#include "cob1/fgab.hpp"
#include "cob1/homology.hpp"
#include "cob1/hurwitz.hpp"
#include "cob1/io.hpp"
#include "cob1/ranks.hpp"
#include "cob1/search.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using cob1::Mode;
using json = cob1::io::json;

json json_int(const cob1::fgab::Int& value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

json group_json(const cob1::fgab::FGAbelianGroup& g)
{
    json orders = json::array();
    for (const auto& d : g.orders())
        orders.push_back(json_int(d));
    return json{{"group", g.to_string()}, {"orders", std::move(orders)}};
}

json rank_row_json(const cob1::ranks::RankQuery& q, const cob1::ranks::RankBreakdown& b)
{
    return json{{"n", q.n},
                {"k", q.k},
                {"mode", cob1::mode_name(q.mode)},
                {"total", json_int(b.total)},
                {"summands",
                 json{{"omega_n", json_int(b.omega_n)},
                      {"summand", json_int(b.summand)},
                      {"multiplicity", b.multiplicity}}}};
}

std::string boundary_row(const cob1::homology::BoundaryMap& map)
{
    std::string out = "[";
    for (int j = 0; j < map.hom.matrix.cols(); ++j) {
        if (j > 0)
            out += ' ';
        out += map.column_known[static_cast<std::size_t>(j)] ? map.hom.matrix.at(0, j).str()
                                                             : std::string("?");
    }
    out += ']';
    return out;
}

json boundary_json(const cob1::homology::BoundaryMap& map)
{
    json row = json::array();
    for (int j = 0; j < map.hom.matrix.cols(); ++j) {
        if (map.column_known[static_cast<std::size_t>(j)])
            row.push_back(json_int(map.hom.matrix.at(0, j)));
        else
            row.push_back("?");
    }
    return json{{"matrix", json::array({std::move(row)})}};
}

json invariant_json(const cob1::cob2::ClassVector& c)
{
    return json{{"degree", c.degree}, {"mode", cob1::mode_name(c.mode)}, {"c", c.entries}};
}

void emit(const json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run(int argc, char** argv)
{
    CLI::App app{"cobordism calculator for k-fold simple branched coverings of surfaces"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for searches (default 1, deterministic)")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;

    // ---- rank ----
    {
        auto* cmd = app.add_subcommand("rank", "rank of the cobordism group in dimension n");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "dimension")->required();
        cmd->add_option("--k", *k, "covering degree")->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                cob1::ranks::RankQuery q{*n, *k, cob1::parse_mode(*mode)};
                auto breakdown = cob1::ranks::rank_cob(q);
                if (*as_json)
                    emit(rank_row_json(q, breakdown));
                else
                    std::cout << breakdown.total.str() << "\n";
                return 0;
            };
        });
    }

    // ---- rank-table ----
    {
        auto* cmd = app.add_subcommand("rank-table", "ranks for all dimensions up to n-max");
        auto n_max = std::make_shared<int>(0);
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--n-max", *n_max, "largest dimension")->required();
        cmd->add_option("--k", *k, "covering degree")->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                json rows = json::array();
                if (!*as_json)
                    std::cout << std::setw(4) << "n" << std::setw(12) << "total" << std::setw(12)
                              << "omega_n" << std::setw(12) << "summand" << std::setw(8) << "x(k-1)"
                              << "\n";
                for (int n = 0; n <= *n_max; ++n) {
                    cob1::ranks::RankQuery q{n, *k, cob1::parse_mode(*mode)};
                    auto b = cob1::ranks::rank_cob(q);
                    if (*as_json) {
                        rows.push_back(rank_row_json(q, b));
                    } else {
                        std::cout << std::setw(4) << n << std::setw(12) << b.total.str()
                                  << std::setw(12) << b.omega_n.str() << std::setw(12)
                                  << b.summand.str() << std::setw(8) << b.multiplicity << "\n";
                    }
                }
                if (*as_json)
                    emit(rows);
                return 0;
            };
        });
    }

    // ---- group ----
    {
        auto* cmd = app.add_subcommand("group", "the 2-dimensional cobordism group and its basis rows");
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--k", *k, "covering degree")->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                Mode m = cob1::parse_mode(*mode);
                auto group = cob1::homology::h2_classifying(*k, m);
                const int first = m == Mode::SO ? 2 : 3;
                if (*as_json) {
                    json doc{{"k", *k}, {"mode", *mode}};
                    doc.update(group_json(group));
                    json basis = json::array();
                    for (int i = first; i <= *k; ++i)
                        basis.push_back(json{{"i", i}, {"vector", cob1::cob2::basis_row(i, *k, m).entries}});
                    doc["basis"] = std::move(basis);
                    emit(doc);
                } else {
                    std::cout << "Cob^1_" << (m == Mode::SO ? "SO" : "O") << "(2," << *k
                              << ") = " << group.to_string() << "\n";
                    for (int i = first; i <= *k; ++i)
                        std::cout << "g_" << i << " = "
                                  << cob1::cob2::format_class_vector(cob1::cob2::basis_row(i, *k, m))
                                  << "\n";
                }
                return 0;
            };
        });
    }

    // ---- homology ----
    {
        auto* cmd = app.add_subcommand("homology", "exact-sequence trace of the group computation");
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--k", *k, "covering degree")->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto trace = cob1::homology::exact_sequence(*k, cob1::parse_mode(*mode));
                if (*as_json) {
                    json doc{{"k", *k}, {"mode", *mode}};
                    doc["terms"] = json{{"rel3", trace.term_rel3.to_string()},
                                        {"h2_sym", trace.term_h2_sym.to_string()},
                                        {"middle", trace.result.to_string()},
                                        {"rel2", trace.term_rel2.to_string()},
                                        {"h1_sym", trace.term_h1_sym.to_string()}};
                    doc["d3"] = boundary_json(trace.d3);
                    doc["d2"] = boundary_json(trace.d2);
                    doc["result"] = group_json(trace.result);
                    emit(doc);
                } else {
                    std::cout << "five-term sequence for k=" << *k << ", mode " << *mode << "\n"
                              << "  (+)_j H_1(BS_{k-j})  = " << trace.term_rel3.to_string() << "\n"
                              << "  H_2(BS_k)            = " << trace.term_h2_sym.to_string() << "\n"
                              << "  middle group         = ?\n"
                              << "  (+)_j H_0(BS_{k-j})  = " << trace.term_rel2.to_string() << "\n"
                              << "  H_1(BS_k)            = " << trace.term_h1_sym.to_string() << "\n"
                              << "  d3, columns j=2..k   = " << boundary_row(trace.d3) << "\n"
                              << "  d2, columns j=2..k   = " << boundary_row(trace.d2) << "\n"
                              << "  middle group = Ker d2 = " << trace.result.to_string() << "\n";
                }
                return 0;
            };
        });
    }

    // ---- validate ----
    {
        auto* cmd = app.add_subcommand("validate", "check a covering document");
        auto file = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file, "document path or - for stdin")->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto set = cob1::io::load_document(*file);
                auto violations = cob1::validate(set);
                if (*as_json) {
                    emit(json{{"ok", violations.empty()}, {"violations", violations}});
                } else if (violations.empty()) {
                    std::cout << "ok\n";
                } else {
                    for (const auto& v : violations)
                        std::cout << v << "\n";
                }
                return violations.empty() ? 0 : 3;
            };
        });
    }

    // ---- invariants ----
    {
        auto* cmd = app.add_subcommand("invariants", "class vector c_2..c_k of a document");
        auto file = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file, "document path or - for stdin")->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto c = cob1::cob2::invariant(cob1::io::load_document(*file));
                if (*as_json)
                    emit(invariant_json(c));
                else
                    std::cout << cob1::cob2::format_class_vector(c) << "\n";
                return 0;
            };
        });
    }

    // ---- euler ----
    {
        auto* cmd = app.add_subcommand("euler", "per-component Euler characteristic and genus");
        auto file = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file, "document path or - for stdin")->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto set = cob1::io::load_document(*file);
                cob1::require_valid(set);
                json rows = json::array();
                for (std::size_t t = 0; t < set.components.size(); ++t) {
                    for (const auto& comp : cob1::euler_characteristics(set.components[t])) {
                        if (*as_json) {
                            rows.push_back(json{{"component", t},
                                                {"orbit", comp.orbit},
                                                {"chi", comp.euler_characteristic},
                                                {"genus", comp.genus}});
                        } else {
                            std::cout << "component " << t << " orbit {";
                            for (std::size_t s = 0; s < comp.orbit.size(); ++s)
                                std::cout << (s ? "," : "") << comp.orbit[s];
                            std::cout << "} chi=" << comp.euler_characteristic
                                      << " genus=" << comp.genus << "\n";
                        }
                    }
                }
                if (*as_json)
                    emit(rows);
                return 0;
            };
        });
    }

    // ---- cobordant ----
    {
        auto* cmd = app.add_subcommand("cobordant", "decide whether two documents are cobordant");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("fileA", *file_a)->required();
        cmd->add_option("fileB", *file_b)->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto a = cob1::io::load_document(*file_a);
                auto b = cob1::io::load_document(*file_b);
                bool same = cob1::cob2::cobordant(a, b);
                if (*as_json)
                    emit(json{{"cobordant", same},
                              {"invariant_a", cob1::cob2::invariant(a).entries},
                              {"invariant_b", cob1::cob2::invariant(b).entries}});
                else
                    std::cout << (same ? "cobordant" : "not cobordant") << "\n";
                return same ? 0 : 1;
            };
        });
    }

    // ---- decompose ----
    {
        auto* cmd = app.add_subcommand("decompose", "basis coefficients of a class vector");
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto csv = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_option("--c", *csv, "comma-separated c_2,...,c_k")->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                Mode m = cob1::parse_mode(*mode);
                auto c = cob1::cob2::parse_class_vector(*k, m, *csv);
                auto lambda = cob1::cob2::decompose(c);
                if (*as_json)
                    emit(json{{"k", *k},
                              {"mode", *mode},
                              {"c", c.entries},
                              {"first_index", m == Mode::SO ? 2 : 3},
                              {"coefficients", lambda.coeffs}});
                else
                    std::cout << cob1::cob2::format_basis_coeffs(lambda) << "\n";
                return 0;
            };
        });
    }

    // ---- realize ----
    {
        auto* cmd = app.add_subcommand("realize", "construct a witness document for a class vector");
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto csv = std::make_shared<std::string>();
        auto minimal = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_option("--c", *csv, "comma-separated c_2,...,c_k")->required();
        cmd->add_flag("--minimal", *minimal, "use minimal-branch-point witnesses where the search succeeds");
        cmd->add_option("-o,--output", *out, "output path (default stdout)");
        cmd->callback([=, &action, &threads]() {
            action = [=, &threads]() {
                Mode m = cob1::parse_mode(*mode);
                auto c = cob1::cob2::parse_class_vector(*k, m, *csv);
                cob1::BranchedCoveringSet set{*k, m, {}};
                if (*minimal) {
                    auto lambda = cob1::cob2::decompose(c);
                    const int first = m == Mode::SO ? 2 : 3;
                    for (int i = first; i <= *k; ++i) {
                        std::int64_t coeff = lambda.coeffs[static_cast<std::size_t>(i - first)];
                        if (coeff == 0)
                            continue;
                        cob1::cob2::MinimalSearchOptions opts;
                        opts.threads = threads;
                        auto witness = cob1::cob2::search_minimal(i, *k, m, opts);
                        auto piece = witness ? *witness : cob1::cob2::generator(i, *k, m);
                        if (coeff < 0)
                            piece = cob1::negate(piece);
                        for (std::int64_t copy = 0; copy < std::llabs(coeff); ++copy)
                            set = cob1::disjoint_union(set, piece);
                    }
                } else {
                    set = cob1::cob2::realize(c);
                }
                cob1::io::save_document(set, *out);
                return 0;
            };
        });
    }

    // ---- generator ----
    {
        auto* cmd = app.add_subcommand("generator", "canonical sphere witness of a basis class");
        auto i = std::make_shared<int>(2);
        auto k = std::make_shared<int>(2);
        auto mode = std::make_shared<std::string>("so");
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--i", *i, "basis index")->required();
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--mode", *mode, "so|o")->required()->check(CLI::IsMember({"so", "o"}));
        cmd->add_option("-o,--output", *out, "output path (default stdout)");
        cmd->callback([=, &action]() {
            action = [=]() {
                cob1::io::save_document(
                    cob1::cob2::generator(*i, *k, cob1::parse_mode(*mode)), *out);
                return 0;
            };
        });
    }

    // ---- enumerate ----
    {
        auto* cmd = app.add_subcommand("enumerate", "stream all valid data for a search cell");
        auto k = std::make_shared<int>(2);
        auto points = std::make_shared<int>(0);
        auto types = std::make_shared<std::vector<int>>();
        auto genus = std::make_shared<int>(0);
        auto transitive = std::make_shared<bool>(false);
        auto reduce = std::make_shared<bool>(false);
        auto count_only = std::make_shared<bool>(false);
        auto override_bounds = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--points", *points, "number of branch points")->required();
        cmd->add_option("--types", *types, "allowed branch types (default: all)")->delimiter(',');
        cmd->add_option("--genus", *genus, "target genus (default 0)");
        cmd->add_flag("--transitive", *transitive, "keep connected sources only");
        cmd->add_flag("--reduce", *reduce, "one representative per conjugacy class");
        cmd->add_flag("--count-only", *count_only);
        cmd->add_flag("--override-bounds", *override_bounds, "lift the k<=6, points<=4 guard");
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                cob1::search::EnumSpec spec;
                spec.degree = *k;
                spec.points = *points;
                spec.types = *types;
                spec.target_genus = *genus;
                spec.transitive_only = *transitive;
                spec.reduce_symmetry = *reduce;
                if (*override_bounds) {
                    spec.max_degree = std::max(spec.max_degree, *k);
                    spec.max_points = std::max(spec.max_points, *points);
                }
                if (*count_only) {
                    auto n = cob1::search::count(spec);
                    if (*as_json)
                        emit(json{{"count", n}});
                    else
                        std::cout << n << "\n";
                } else {
                    cob1::search::enumerate(spec, [&](const cob1::HurwitzData& d) {
                        cob1::BranchedCoveringSet set{d.degree, d.mode, {d}};
                        std::cout << cob1::io::serialize(set, false) << "\n";
                        return true;
                    });
                }
                return 0;
            };
        });
    }

    // ---- verify ----
    {
        auto* cmd = app.add_subcommand("verify", "exhaustive sphere oracles (non-existence and parity)");
        auto k = std::make_shared<int>(2);
        auto r_max = std::make_shared<int>(3);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--r-max", *r_max, "parity sweep bound (default 3)");
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                auto nonex = cob1::search::verify_nonexistence(*k);
                auto parity = cob1::search::verify_parity(*k, *r_max);
                bool ok = nonex.consistent() && parity.violations == 0;
                if (*as_json) {
                    json single = json::object();
                    for (const auto& [type, n] : nonex.single_point)
                        single[std::to_string(type)] = n;
                    json mixed = json::array();
                    for (const auto& [pair, n] : nonex.mixed_pairs)
                        mixed.push_back(json{{"types", {pair.first, pair.second}}, {"count", n}});
                    json equal = json::object();
                    for (const auto& [type, n] : nonex.equal_pairs)
                        equal[std::to_string(type)] = n;
                    emit(json{{"k", *k},
                              {"nonexistence",
                               json{{"single_point", std::move(single)},
                                    {"mixed_pairs", std::move(mixed)},
                                    {"equal_pairs", std::move(equal)},
                                    {"consistent", nonex.consistent()}}},
                              {"parity",
                               json{{"r_max", *r_max},
                                    {"instances", parity.instances},
                                    {"violations", parity.violations}}},
                              {"ok", ok}});
                } else {
                    std::cout << "sphere data, degree " << *k << "\n";
                    std::cout << "  one branch point:";
                    for (const auto& [type, n] : nonex.single_point)
                        std::cout << "  type " << type << ": " << n;
                    std::cout << "\n  two points, mixed types:";
                    if (nonex.mixed_pairs.empty())
                        std::cout << "  (none possible)";
                    for (const auto& [pair, n] : nonex.mixed_pairs)
                        std::cout << "  {" << pair.first << "," << pair.second << "}: " << n;
                    std::cout << "\n  two points, equal type:";
                    for (const auto& [type, n] : nonex.equal_pairs)
                        std::cout << "  type " << type << ": " << n;
                    std::cout << "\n  non-existence findings: "
                              << (nonex.consistent() ? "consistent" : "COUNTEREXAMPLE") << "\n";
                    std::cout << "parity sweep up to " << *r_max << " points\n"
                              << "  instances: " << parity.instances
                              << "  violations: " << parity.violations << "\n";
                }
                return ok ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const cob1::NotInImageError& e) {
        std::cerr << "NotInImage: " << e.what() << "\n";
        return 1;
    } catch (const cob1::InvalidDataError& e) {
        for (const auto& v : e.violations())
            std::cerr << v << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
