#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coverideal/betti.hpp"
#include "coverideal/chordal.hpp"
#include "coverideal/covers.hpp"
#include "coverideal/io.hpp"
#include "coverideal/linquo.hpp"
#include "coverideal/oracle.hpp"
#include "coverideal/random_chordal.hpp"

using nlohmann::ordered_json;
using namespace coverideal;

namespace {

// exit codes: 0 ok, 1 error, 2 not chordal where chordality is required,
// 3 cross-check mismatch
struct mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

graph_format format_from(const std::string& s) {
    if (s == "edges") return graph_format::edges;
    if (s == "dimacs") return graph_format::dimacs;
    return graph_format::autodetect;
}

pivot_rule pivot_from(const std::string& s, const graph& g) {
    if (s == "min") return pivot_rule::min_index();
    if (s == "max") return pivot_rule::max_index();
    if (s == "maxdeg") return pivot_rule::max_degree();
    std::unordered_map<std::string, int> index;
    for (int v = 0; v < g.n; ++v) index[g.label[v]] = v;
    std::vector<int> order;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto it = index.find(tok);
        if (it == index.end())
            throw std::invalid_argument("unknown vertex label '" + tok + "' in pivot list");
        order.push_back(it->second);
    }
    return pivot_rule::priority(order);
}

ordered_json set_json(const graph& g, vertex_set s) {
    ordered_json a = ordered_json::array();
    for (const std::string& l : label_list(g, s)) a.push_back(l);
    return a;
}

ordered_json betti_json(const betti_table& t) {
    ordered_json a = ordered_json::array();
    for (const auto& [key, v] : t.entries)
        a.push_back(ordered_json{{"i", key.first}, {"j", key.second}, {"v", v}});
    return a;
}

void print_betti_human(const betti_table& t) {
    for (const auto& [key, v] : t.entries)
        std::cout << "b_{" << key.first << "," << key.second << "} = " << v << "\n";
    std::cout << "totals:";
    for (const auto& [i, v] : t.totals()) std::cout << " b_" << i << "=" << v;
    std::cout << "\npd = " << t.pd() << "\n";
}

// cover ideal generators as an ordered monomial list; the edgeless graph has
// the single empty generator, which every downstream routine accepts
monomial_ordering ordering_for(const graph& g, ordering_method m, const pivot_rule& rule) {
    if (g.edge_count() == 0) return {g.n, ordering_method::user, {vertex_set{}}};
    return m == ordering_method::vv ? vv_ordering(g, rule) : fvt_ordering(g, rule);
}

struct command_io {
    std::string input = "-";
    std::string format = "auto";
    bool json = false;
};

// Shared driver: reads the graph, runs the body, assembles the report in the
// fixed field order n, chordal, <command sections>, digest.
int run_graph_command(const command_io& io,
                      const std::function<int(const graph&, ordered_json&)>& body) {
    parsed_input in = read_graph_file(io.input, format_from(io.format));
    ordered_json rep;
    rep["n"] = in.g.n;
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        code = body(in.g, rep);
    } catch (const not_chordal_error& e) {
        rep["chordal"] = false;
        rep["witness"] = in.g.label[e.witness];
        rep["digest"] = in.digest;
        if (io.json) {
            std::cout << rep.dump(2) << "\n";
        } else {
            std::cout << "graph: n=" << in.g.n << ", edges=" << in.g.edge_count() << "\n";
            std::cout << "not chordal (witness vertex " << in.g.label[e.witness] << ")\n";
        }
        return 2;
    }
    rep["digest"] = in.digest;
    if (io.json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "elapsed_ms: " << ms << "\n";
    }
    return code;
}

void human_header(const graph& g, const command_io& io) {
    if (io.json) return;
    std::cout << "graph: n=" << g.n << ", edges=" << g.edge_count() << ", chordal\n";
}

int cmd_check(const command_io& io) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        chordality_result r = elimination_ordering(g);
        rep["chordal"] = r.chordal;
        if (r.chordal) {
            ordered_json order = ordered_json::array();
            for (int v : r.order) order.push_back(g.label[v]);
            rep["order"] = order;
            if (!io.json) {
                std::cout << "graph: n=" << g.n << ", edges=" << g.edge_count() << "\n";
                std::cout << "chordal: yes\nelimination order:";
                for (int v : r.order) std::cout << " " << g.label[v];
                std::cout << "\n";
            }
        } else {
            rep["witness"] = g.label[r.witness];
            if (!io.json) {
                std::cout << "graph: n=" << g.n << ", edges=" << g.edge_count() << "\n";
                std::cout << "chordal: no (witness vertex " << g.label[r.witness] << ")\n";
            }
        }
        return 0;
    });
}

int cmd_covers(const command_io& io) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        cover_family f = minimal_covers_recursive(g);
        rep["chordal"] = true;
        ordered_json arr = ordered_json::array();
        for (vertex_set c : f.covers) arr.push_back(set_json(g, c));
        rep["covers"] = arr;
        if (!io.json) {
            human_header(g, io);
            std::cout << "minimal covers: " << f.covers.size() << "\n";
            for (vertex_set c : f.covers) std::cout << "  " << monomial_string(g, c) << "\n";
        }
        return 0;
    });
}

int cmd_ordering(const command_io& io, const std::string& method, const std::string& pivot) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        ordering_method m = method == "vv" ? ordering_method::vv : ordering_method::fvt;
        monomial_ordering o = ordering_for(g, m, pivot_from(pivot, g));
        std::vector<int> counts = colon_counts(o);
        rep["chordal"] = true;
        ordered_json gens = ordered_json::array();
        for (vertex_set s : o.gens) gens.push_back(monomial_string(g, s));
        rep["ordering"] = ordered_json{{"method", method}, {"gens", gens}, {"colon_counts", counts}};
        if (!io.json) {
            human_header(g, io);
            std::cout << "ordering (" << method << "): " << o.gens.size() << " generators\n";
            for (std::size_t p = 0; p < o.gens.size(); ++p)
                std::cout << "  " << p + 1 << ". " << monomial_string(g, o.gens[p])
                          << "  colon_count=" << counts[p] << "\n";
        }
        return 0;
    });
}

int cmd_shelling(const command_io& io, const std::string& method, const std::string& pivot,
                 bool verify) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        ordering_method m = method == "vv" ? ordering_method::vv : ordering_method::fvt;
        monomial_ordering o = ordering_for(g, m, pivot_from(pivot, g));
        simplicial_complex c = shelling_from_ordering(o);
        rep["chordal"] = true;
        ordered_json facets = ordered_json::array();
        for (vertex_set f : c.facets) facets.push_back(set_json(g, f));
        ordered_json sh{{"method", method}, {"facets", facets}};
        int code = 0;
        if (verify) {
            bool shell_ok = verify_shelling(c).ok;
            bool lq_ok = verify_linear_quotients(o.gens).ok;
            sh["verified"] = shell_ok && lq_ok;
            if (shell_ok != lq_ok || !shell_ok) {
                std::cerr << "cross-check mismatch: shelling " << (shell_ok ? "ok" : "fail")
                          << ", linear quotients " << (lq_ok ? "ok" : "fail") << "\n";
                code = 3;
            }
        }
        rep["shelling"] = sh;
        if (!io.json) {
            human_header(g, io);
            std::cout << "shelling (" << method << "): " << c.facets.size() << " facets\n  ";
            for (std::size_t i = 0; i < c.facets.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << monomial_string(g, c.facets[i]);
            }
            std::cout << "\n";
            if (verify) std::cout << "verified: " << (code == 0 ? "yes" : "NO") << "\n";
        }
        return code;
    });
}

int cmd_betti(const command_io& io, const std::string& method, const std::string& pivot) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        require_chordal(g);
        pivot_rule rule = pivot_from(pivot, g);
        std::vector<std::string> methods;
        std::vector<betti_table> tables;
        auto want = [&](const char* name) { return method == "all" || method == name; };
        if (want("lq")) {
            methods.emplace_back("lq");
            tables.push_back(betti_from_ordering(ordering_for(g, ordering_method::fvt, rule)));
        }
        if (want("recursive")) {
            methods.emplace_back("recursive");
            tables.push_back(graded_recursive(g, rule));
        }
        if (want("oracle")) {
            if (g.n <= 14) {
                methods.emplace_back("oracle");
                tables.push_back(hochster_betti(minimal_covers_recursive(g).covers, g.n));
            } else if (method == "oracle") {
                throw std::invalid_argument("homology oracle handles 0 <= n <= 14 vertices");
            }
        }
        bool agree = true;
        for (std::size_t k = 1; k < tables.size(); ++k)
            if (!(tables[k] == tables[0])) agree = false;
        rep["chordal"] = true;
        rep["betti"] = betti_json(tables[0]);
        if (method == "all") {
            rep["methods"] = methods;
            rep["crosscheck"] = agree ? "pass" : "fail";
        }
        if (!io.json) {
            human_header(g, io);
            print_betti_human(tables[0]);
            if (method == "all")
                std::cout << "methods agree: " << (agree ? "yes" : "NO") << "\n";
        }
        if (!agree) {
            std::cerr << "cross-check mismatch between Betti methods\n";
            for (std::size_t k = 0; k < tables.size(); ++k)
                std::cerr << "  " << methods[k] << ": " << betti_json(tables[k]).dump() << "\n";
            return 3;
        }
        return 0;
    });
}

int cmd_invariants(const command_io& io) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        graph_invariants r = invariants(g);
        rep["chordal"] = true;
        rep["invariants"] = ordered_json{{"pd", r.pd},
                                         {"im", r.im},
                                         {"reg_edge_ideal", r.reg_edge_ideal},
                                         {"b0", r.b0}};
        if (!io.json) {
            human_header(g, io);
            std::cout << "pd(cover ideal) = " << r.pd << "\n"
                      << "induced matching number = " << r.im << "\n"
                      << "reg(edge ideal) = " << r.reg_edge_ideal << "\n"
                      << "minimal covers = " << r.b0 << "\n";
        }
        return 0;
    });
}

int cmd_unmixed(const command_io& io) {
    return run_graph_command(io, [&](const graph& g, ordered_json& rep) {
        unmixed_result u = unmixed_certificate(g);
        rep["chordal"] = true;
        ordered_json facets = ordered_json::array();
        for (vertex_set f : u.free_facets) facets.push_back(set_json(g, f));
        rep["unmixed"] = ordered_json{{"verdict", u.unmixed}, {"free_facets", facets}};
        std::optional<unmixed_1dim_result> cf = unmixed_1dim_betti(g);
        if (cf)
            rep["betti_closed_form"] =
                ordered_json{{"b0", cf->b0}, {"b1", cf->b1}, {"b2", cf->b2}};
        if (!io.json) {
            human_header(g, io);
            std::cout << "unmixed: " << (u.unmixed ? "yes" : "no") << "\n";
            std::cout << "free facets:";
            for (vertex_set f : u.free_facets) std::cout << " " << monomial_string(g, f);
            std::cout << "\n";
            if (cf)
                std::cout << "closed form (dim 1): b0=" << cf->b0 << " b1=" << cf->b1
                          << " b2=" << cf->b2 << "\n";
        }
        return 0;
    });
}

int cmd_selftest(int max_n, int cases, std::uint64_t seed, bool json) {
    std::mt19937_64 rng(seed);
    long long checks = 0;
    auto fail = [&](int t, const graph& g, const std::string& what) {
        std::cerr << "selftest case " << t << " (n=" << g.n << ", edges=" << g.edge_count()
                  << "): " << what << "\n";
        for (auto [u, v] : g.edge_list())
            std::cerr << "  " << g.label[u] << " " << g.label[v] << "\n";
        return 3;
    };
    for (int t = 0; t < cases; ++t) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        graph g = random_chordal(n, rng());
        cover_family brute = minimal_covers_bruteforce(g);
        cover_family rec = minimal_covers_recursive(g);
        if (brute.covers != rec.covers) return fail(t, g, "cover families differ");
        ++checks;
        if (g.edge_count() == 0) continue;
        monomial_ordering ov = vv_ordering(g);
        monomial_ordering of = fvt_ordering(g);
        betti_table lv = betti_from_ordering(ov);
        betti_table lf = betti_from_ordering(of);
        betti_table gr = graded_recursive(g);
        if (!(lv == gr) || !(lf == gr)) return fail(t, g, "Betti tables differ across methods");
        ++checks;
        if (n <= 9) {
            betti_table orc = hochster_betti(rec.covers, g.n);
            if (!(orc == gr)) return fail(t, g, "homology oracle disagrees");
            ++checks;
        }
        if (!verify_shelling(shelling_from_ordering(of)).ok)
            return fail(t, g, "constructed ordering is not a shelling");
        ++checks;
        try {
            graph_invariants inv = invariants(g);
            if (inv.b0 != static_cast<long long>(rec.covers.size()))
                return fail(t, g, "b0 does not match cover count");
        } catch (const std::logic_error& e) {
            return fail(t, g, e.what());
        }
        ++checks;
        // a random generator order must look the same to both verifiers
        std::vector<vertex_set> shuffled = rec.covers;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        simplicial_complex sc{g.n, {}};
        for (vertex_set s : shuffled) sc.facets.push_back(s.complement_in(g.vertices()));
        if (verify_linear_quotients(shuffled).ok != verify_shelling(sc).ok)
            return fail(t, g, "shelling and linear quotients verdicts differ");
        ++checks;
        if (auto cf = unmixed_1dim_betti(g)) {
            auto tot = gr.totals();
            auto at = [&](int i) {
                auto it = tot.find(i);
                return it == tot.end() ? 0ll : it->second;
            };
            if (cf->b0 != at(0) || cf->b1 != at(1) || cf->b2 != at(2))
                return fail(t, g, "closed form Betti numbers disagree");
            ++checks;
        }
    }
    if (json) {
        ordered_json rep{{"selftest", ordered_json{{"max_n", max_n},
                                                   {"cases", cases},
                                                   {"seed", seed},
                                                   {"checks", checks},
                                                   {"ok", true}}}};
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "selftest: " << cases << " cases up to n=" << max_n << ", " << checks
                  << " checks, all ok (seed " << seed << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cover ideals of chordal graphs: minimal covers, linear quotients orderings, "
                 "shellings, Betti numbers"};
    app.require_subcommand(1);

    command_io io;
    std::string method = "fvt";
    std::string pivot = "min";
    bool verify = false;
    int st_n = 8, st_cases = 100;
    std::uint64_t st_seed = 1;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("input", io.input, "graph file, or - for stdin");
        sub->add_option("--format", io.format, "input format")
            ->check(CLI::IsMember({"auto", "edges", "dimacs"}))
            ->default_str("auto");
        sub->add_flag("--json", io.json, "machine readable report on stdout");
    };
    auto add_pivot = [&](CLI::App* sub) {
        sub->add_option("--pivot", pivot,
                        "pivot rule: min, max, maxdeg, or a comma separated vertex list");
    };

    CLI::App* c_check = app.add_subcommand("check", "chordality verdict and elimination order");
    add_io(c_check);
    CLI::App* c_covers = app.add_subcommand("covers", "minimal vertex covers, canonical order");
    add_io(c_covers);
    CLI::App* c_ord = app.add_subcommand("ordering", "linear quotients order of the cover ideal");
    add_io(c_ord);
    c_ord->add_option("--method", method, "construction")
        ->check(CLI::IsMember({"vv", "fvt"}))
        ->required();
    add_pivot(c_ord);
    CLI::App* c_shell = app.add_subcommand("shelling", "shelling of the independence complex");
    add_io(c_shell);
    c_shell->add_option("--method", method, "construction")->check(CLI::IsMember({"vv", "fvt"}));
    add_pivot(c_shell);
    c_shell->add_flag("--verify", verify, "run both verifiers on the result");
    CLI::App* c_betti = app.add_subcommand("betti", "graded Betti numbers of the cover ideal");
    add_io(c_betti);
    c_betti->add_option("--method", method, "lq, recursive, oracle, or all")
        ->check(CLI::IsMember({"lq", "recursive", "oracle", "all"}))
        ->default_str("all");
    add_pivot(c_betti);
    CLI::App* c_inv = app.add_subcommand("invariants", "pd, induced matching, reg, cover count");
    add_io(c_inv);
    CLI::App* c_unmix = app.add_subcommand("unmixed", "free facet certificate and verdict");
    add_io(c_unmix);
    CLI::App* c_self = app.add_subcommand("selftest", "random cross-checks of all pipelines");
    c_self->add_option("--n", st_n, "largest vertex count")->check(CLI::Range(1, 20));
    c_self->add_option("--cases", st_cases, "number of random graphs");
    c_self->add_option("--seed", st_seed, "random seed");
    c_self->add_flag("--json", io.json, "machine readable report on stdout");

    CLI11_PARSE(app, argc, argv);

    // betti defaults to the full cross-check, shelling to the fvt construction
    if (c_betti->parsed() && c_betti->count("--method") == 0) method = "all";

    try {
        if (c_check->parsed()) return cmd_check(io);
        if (c_covers->parsed()) return cmd_covers(io);
        if (c_ord->parsed()) return cmd_ordering(io, method, pivot);
        if (c_shell->parsed()) return cmd_shelling(io, method, pivot, verify);
        if (c_betti->parsed()) return cmd_betti(io, method, pivot);
        if (c_inv->parsed()) return cmd_invariants(io);
        if (c_unmix->parsed()) return cmd_unmixed(io);
        if (c_self->parsed()) return cmd_selftest(st_n, st_cases, st_seed, io.json);
    } catch (const mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
