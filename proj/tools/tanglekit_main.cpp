// Batch front end: every verb loads a matroid expression (file path or inline
// JSON), runs one engine operation, and prints a table or JSON report.
//
// Exit codes: 0 success, 1 domain/verification failure, 2 usage error,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tanglekit/connectivity.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/json_io.hpp"
#include "tanglekit/limits.hpp"
#include "tanglekit/minor_moves.hpp"
#include "tanglekit/suites.hpp"
#include "tanglekit/tangle.hpp"

namespace tk = tanglekit;

namespace {

tk::Matroid load_matroid(const std::string& input) {
    std::string text;
    if (!input.empty() && input.front() == '{') {
        text = input;
    } else {
        std::ifstream in(input);
        if (!in) throw tk::StructuralError("cannot open '" + input + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return tk::build_matroid(*tk::expr_from_json(text));
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string labels_line(const tk::Matroid& m, tk::Mask a) {
    std::string s;
    for (const auto& l : m.labels_of(a)) {
        if (!s.empty()) s += ",";
        s += l;
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"matroid tangle toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json = false;
    int threads = 0;
    int table_cap = 0, scan_cap = 0;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--threads", threads, "worker cap (0 = hardware)");
    app.add_option("--table-cap", table_cap, "max ground size for rank tables");
    app.add_option("--scan-cap", scan_cap, "max ground size for exhaustive scans");

    std::string input, set_csv, svec_csv, trace_path, out_dir, suite_id, example_key;
    int order = 4, to_order = 3;
    long budget = 400000;
    bool list_maximal = false, witness = false;
    bool f_weak4 = false, f_round = false;
    std::string f_titanic, f_solid, f_fclosed;

    auto* tangles_cmd = app.add_subcommand("tangles", "enumerate tangles of one order");
    tangles_cmd->add_option("--order", order, "tangle order")->required();
    tangles_cmd->add_flag("--list-maximal-small", list_maximal);
    tangles_cmd->add_option("input", input)->required();

    auto* tm_cmd = app.add_subcommand("tangle-matroid", "tangle matroid per tangle");
    tm_cmd->add_option("--order", order)->required();
    tm_cmd->add_option("input", input)->required();

    auto* breadth_cmd = app.add_subcommand("breadth", "breadth per tangle");
    breadth_cmd->add_option("--order", order)->required();
    breadth_cmd->add_flag("--witness", witness);
    breadth_cmd->add_option("input", input)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "breadth-preserving reduction");
    reduce_cmd->add_option("--order", order)->required();
    reduce_cmd->add_option("--trace", trace_path, "write the trace JSON here");
    reduce_cmd->add_option("input", input)->required();

    auto* check_cmd = app.add_subcommand("check", "connectivity and set predicates");
    check_cmd->add_flag("--weak4", f_weak4);
    check_cmd->add_flag("--round", f_round);
    check_cmd->add_option("--titanic", f_titanic, "comma-separated labels");
    check_cmd->add_option("--solid", f_solid, "comma-separated labels");
    check_cmd->add_option("--fully-closed", f_fclosed, "comma-separated labels");
    check_cmd->add_option("--svec", svec_csv, "s0,s1,... connectivity profile");
    check_cmd->add_option("input", input)->required();

    auto* kconn_cmd = app.add_subcommand("kconn", "k-connected set test");
    kconn_cmd->add_option("--set", set_csv, "comma-separated labels")->required();
    kconn_cmd->add_option("--order", order)->required();
    kconn_cmd->add_option("input", input)->required();

    auto* suite_cmd = app.add_subcommand("verify-suite", "run a property suite");
    suite_cmd->add_option("suite", suite_id, "suite id or 'all'")->required();
    suite_cmd->add_option("--budget", budget);

    auto* trunc_cmd = app.add_subcommand("truncate", "truncate a tangle");
    trunc_cmd->add_option("--order", order)->required();
    trunc_cmd->add_option("--to", to_order)->required();
    trunc_cmd->add_option("input", input)->required();

    auto* gen_cmd = app.add_subcommand("gen-example", "write corpus expressions");
    gen_cmd->add_option("key", example_key, "u37 | sec9:S | k4 | random:N,R,SEED | all")
        ->required();
    gen_cmd->add_option("--out", out_dir, "directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) tk::limits().threads = threads;
    if (table_cap > 0) tk::limits().table_bits = table_cap;
    if (scan_cap > 0) tk::limits().scan_bits = scan_cap;

    if (tangles_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto tangles = tk::enumerate_tangles(m, order);
        if (json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& t : tangles)
                j.push_back(nlohmann::ordered_json::parse(tk::tangle_to_json(t, true)));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << tangles.size() << " tangle" << (tangles.size() == 1 ? "" : "s")
                      << " found\n";
            for (const auto& t : tangles) {
                std::cout << "  order " << t.order << ", breadth " << tk::breadth(t).value
                          << ", " << t.maximal_small.size() << " maximal small sets\n";
                if (list_maximal)
                    for (tk::Mask h : t.maximal_small)
                        std::cout << "    {" << labels_line(m, h) << "}\n";
            }
        }
        return 0;
    }
    if (tm_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto tangles = tk::enumerate_tangles(m, order);
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : tangles) {
            auto tm = tk::tangle_matroid(t);
            nlohmann::ordered_json one;
            one["tangle"] = nlohmann::ordered_json::parse(tk::tangle_to_json(t));
            one["tangle_matroid"] =
                nlohmann::ordered_json::parse(tk::expr_to_json(tm.matroid.expr()));
            j.push_back(std::move(one));
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (breadth_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto tangles = tk::enumerate_tangles(m, order);
        for (const auto& t : tangles) {
            auto cert = tk::breadth(t);
            if (json) {
                std::cout << tk::report_json(m, cert.value,
                                             witness ? std::optional<tk::Mask>(cert.witness)
                                                     : std::nullopt,
                                             std::nullopt)
                          << "\n";
            } else {
                std::cout << "breadth " << cert.value;
                if (witness) std::cout << "  witness {" << labels_line(m, cert.witness) << "}";
                std::cout << "\n";
            }
        }
        if (tangles.empty()) {
            std::cout << (json ? "[]" : "no tangles of that order") << "\n";
            return 1;
        }
        return 0;
    }
    if (reduce_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto tangles = tk::enumerate_tangles(m, order);
        if (tangles.empty()) {
            std::cout << "no tangles of that order\n";
            return 1;
        }
        for (const auto& t : tangles) {
            auto red = tk::reduce_to_weakly_4_connected(m, t);
            std::string trace = tk::trace_to_json(red, !json);
            if (!trace_path.empty()) {
                std::ofstream out(trace_path);
                out << trace << "\n";
            }
            if (json) {
                std::cout << tk::trace_to_json(red) << "\n";
            } else if (red.steps.empty()) {
                std::cout << "already weakly 4-connected; breadth " << tk::breadth(t).value
                          << "\n";
            } else {
                std::cout << red.steps.size() << " step(s) to a weakly 4-connected minor on "
                          << red.final_matroid.size() << " elements; breadth "
                          << red.steps.front().breadth << " throughout\n";
                for (const auto& s : red.steps)
                    std::cout << "  " << tk::removal_kind_name(s.kind) << " " << s.element
                              << "  [" << s.rule << "]\n";
            }
        }
        return 0;
    }
    if (check_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        nlohmann::ordered_json j;
        bool verdict = true;
        if (!f_titanic.empty()) {
            bool v = tk::is_titanic(m, m.mask_of_labels(split_csv(f_titanic)));
            j["titanic"] = v;
            verdict = v;
        } else if (!f_solid.empty()) {
            bool v = tk::is_solid(m, m.mask_of_labels(split_csv(f_solid)));
            j["solid"] = v;
            verdict = v;
        } else if (!f_fclosed.empty()) {
            bool v = tk::is_fully_closed(m, m.mask_of_labels(split_csv(f_fclosed)));
            j["fully_closed"] = v;
            verdict = v;
        } else if (f_round) {
            bool v = tk::is_round(m);
            j["round"] = v;
            verdict = v;
        } else if (f_weak4) {
            bool v = tk::is_weakly_4_connected(m);
            j["weakly_4_connected"] = v;
            verdict = v;
        } else if (!svec_csv.empty()) {
            std::vector<int> svec;
            for (const auto& s : split_csv(svec_csv)) svec.push_back(std::stoi(s));
            auto rep = tk::connectivity_report(m, &svec);
            j["s_connected"] = *rep.s_connected;
            j["witness"] = labels_line(m, rep.s_witness);
            verdict = *rep.s_connected;
        } else {
            auto rep = tk::connectivity_report(m);
            j["connected"] = rep.connected;
            j["tutte_3_connected"] = rep.tutte_3_connected;
            j["weakly_4_connected"] = rep.weakly_4_connected;
        }
        if (json)
            std::cout << j.dump() << "\n";
        else
            for (auto& [key, val] : j.items()) std::cout << key << ": " << val << "\n";
        return verdict ? 0 : 1;
    }
    if (kconn_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto v = tk::is_k_connected_set(m, m.mask_of_labels(split_csv(set_csv)), order);
        if (json) {
            std::cout << tk::report_json(
                             m, v.ok ? 1 : 0,
                             v.ok ? std::nullopt : std::optional<tk::Mask>(v.witness),
                             std::nullopt)
                      << "\n";
        } else {
            std::cout << (v.ok ? "true" : "false");
            if (!v.ok) std::cout << "  violating side {" << labels_line(m, v.witness) << "}";
            std::cout << "\n";
        }
        return v.ok ? 0 : 1;
    }
    if (suite_cmd->parsed()) {
        tk::SuiteOptions opts;
        opts.budget = budget;
        std::vector<tk::SuiteReport> reports;
        if (suite_id == "all")
            reports = tk::run_all_suites(opts);
        else
            reports.push_back(tk::run_suite(suite_id, opts));
        long failures = 0;
        for (const auto& rep : reports) {
            failures += static_cast<long>(rep.failures.size());
            if (json) {
                std::cout << tk::suite_report_json(rep) << "\n";
            } else {
                std::cout << rep.suite << ": " << rep.checked << " checks, " << rep.skipped
                          << " skipped, " << rep.failures.size() << " failures"
                          << (rep.complete ? "" : " (budget exhausted)") << "\n";
                for (const auto& f : rep.failures)
                    std::cout << "  " << f.instance << ": " << f.detail << "\n";
            }
        }
        return failures == 0 ? 0 : 1;
    }
    if (trunc_cmd->parsed()) {
        tk::Matroid m = load_matroid(input);
        auto tangles = tk::enumerate_tangles(m, order);
        if (tangles.empty()) {
            std::cout << "no tangles of that order\n";
            return 1;
        }
        for (const auto& t : tangles)
            std::cout << tk::tangle_to_json(tk::truncate_tangle(t, to_order), false, !json)
                      << "\n";
        return 0;
    }
    if (gen_cmd->parsed()) {
        std::vector<std::pair<std::string, tk::Matroid>> outputs;
        auto gen_one = [&](const std::string& key) {
            if (key == "u37") return std::pair(std::string("u37"), tk::make_uniform(3, 7));
            if (key == "k4") return std::pair(std::string("k4"), tk::k4_labeled());
            if (key.rfind("sec9:", 0) == 0) {
                int s = std::stoi(key.substr(5));
                return std::pair("sec9_s" + std::to_string(s), tk::sec9_matroid(s));
            }
            if (key.rfind("random:", 0) == 0) {
                auto parts = split_csv(key.substr(7));
                if (parts.size() != 3) throw tk::DomainError("random wants N,R,SEED");
                int n = std::stoi(parts[0]), r = std::stoi(parts[1]);
                auto seed = static_cast<std::uint64_t>(std::stoull(parts[2]));
                return std::pair("random_" + parts[0] + "_" + parts[1] + "_" + parts[2],
                                 tk::random_binary_matroid(n, r, seed));
            }
            throw tk::DomainError("unknown example key '" + key + "'");
        };
        if (example_key == "all") {
            outputs.push_back(gen_one("u37"));
            outputs.push_back(gen_one("k4"));
            outputs.push_back(gen_one("sec9:6"));
            outputs.push_back(gen_one("random:7,3,1"));
        } else {
            outputs.push_back(gen_one(example_key));
        }
        for (const auto& [name, m] : outputs) {
            std::string text = tk::expr_to_json(m.expr(), true);
            if (out_dir.empty()) {
                std::cout << text << "\n";
            } else {
                std::string path = out_dir + "/" + name + ".json";
                std::ofstream out(path);
                if (!out) throw tk::StructuralError("cannot write '" + path + "'");
                out << text << "\n";
                std::cout << path << "\n";
            }
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tk::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const tk::InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
