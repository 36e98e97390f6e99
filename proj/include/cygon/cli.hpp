#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cygon/arboricity.hpp"
#include "cygon/density.hpp"
#include "cygon/io.hpp"
#include "cygon/orderings.hpp"
#include "cygon/push_engine.hpp"
#include "cygon/verify.hpp"

namespace cygon {
namespace cli {

struct CommonArgs {
    std::string input = "-";
    std::string format = "human";
    bool trace = false;
    std::size_t max_states = 1'000'000;
};

inline Matroid load_matroid(const std::string& path, std::istream& fallback) {
    if (path == "-") return parse_matroid(fallback);
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open input file '" + path + "'");
    return parse_matroid(f);
}

inline std::vector<long long> resolve_weights(const Matroid& m, const std::string& weights_path,
                                              long long uniform) {
    if (!weights_path.empty()) {
        std::ifstream f(weights_path);
        if (!f) throw PreconditionError("cannot open weights file '" + weights_path + "'");
        return parse_weights(f, m.size());
    }
    return std::vector<long long>(static_cast<std::size_t>(m.size()), uniform);
}

inline EngineOptions engine_options(const CommonArgs& args, std::ostream& err) {
    EngineOptions opts;
    opts.max_states = args.max_states;
    if (args.trace) opts.trace_stream = &err;
    return opts;
}

inline void emit(std::ostream& out, const CommonArgs& args, const nlohmann::json& j,
                 const std::string& text) {
    if (args.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

inline int emit_violation(std::ostream& out, const CommonArgs& args, const Violation& v) {
    emit(out, args, json_of(v), v.to_text() + "\n");
    return 1;
}

inline Subset subset_from_ids(const std::vector<int>& ids, const Matroid& m, const char* what) {
    Subset s = 0;
    for (int e : ids) {
        if (e < 0 || e >= m.size())
            throw PreconditionError(std::string(what) + ": element " + std::to_string(e) +
                                    " out of range");
        if (contains(s, e))
            throw PreconditionError(std::string(what) + ": repeated element " + std::to_string(e));
        s |= singleton(e);
    }
    return s;
}

inline int run_density(const CommonArgs& args, bool want_strength, std::istream& in,
                       std::ostream& out) {
    Matroid m = load_matroid(args.input, in);
    if (want_strength) {
        StrengthReport s = strength(m);
        emit(out, args,
             {{"d", format_rational(s.value)}, {"witness", json_of(s.witness)}, {"mode", "strength"}},
             "strength = " + format_rational(s.value) + "\nwitness = " + format_subset(s.witness) +
                 "\n");
    } else {
        DensityReport d = max_density(m);
        emit(out, args,
             {{"d", format_rational(d.gamma)}, {"witness", json_of(d.witness)}, {"mode", "density"}},
             "gamma = " + format_rational(d.gamma) + "\nwitness = " + format_subset(d.witness) +
                 "\n");
    }
    return 0;
}

inline int run_check(const CommonArgs& args, const std::string& weights_path, long long uniform,
                     long long gon, bool dual, std::istream& in, std::ostream& out) {
    Matroid m = load_matroid(args.input, in);
    WeightedInstance inst{m, resolve_weights(m, weights_path, uniform), gon};
    std::optional<Violation> violation = dual ? check_dual(inst) : check_weighted(inst);
    if (violation) return emit_violation(out, args, *violation);
    emit(out, args, {{"violation", nullptr}}, "ok\n");
    return 0;
}

inline int run_assign(const CommonArgs& args, const std::string& weights_path, long long uniform,
                      long long gon, std::istream& in, std::ostream& out, std::ostream& err) {
    Matroid m = load_matroid(args.input, in);
    WeightedInstance inst{m, resolve_weights(m, weights_path, uniform), gon};
    auto result = assign_intervals(inst, engine_options(args, err));
    if (auto* violation = std::get_if<Violation>(&result))
        return emit_violation(out, args, *violation);
    const GonMapping& mapping = std::get<GonMapping>(result);
    emit(out, args, json_of(mapping), format_text(mapping));
    return 0;
}

inline int run_ordering_result(const CommonArgs& args, const OrderingResult& result,
                               const std::string& mode, long long window, std::ostream& out,
                               std::ostream& err) {
    if (auto* violation = std::get_if<Violation>(&result))
        return emit_violation(out, args, *violation);
    if (auto* na = std::get_if<NotApplicable>(&result)) {
        err << "not applicable: " << na->reason
            << " (the explore subcommand searches exhaustively)\n";
        return 2;
    }
    const CyclicOrdering& ordering = std::get<CyclicOrdering>(result);
    nlohmann::json j = json_of(ordering);
    j["mode"] = mode;
    j["window"] = window;
    emit(out, args, j, format_text(ordering));
    return 0;
}

inline int run_cyclic_order(const CommonArgs& args, std::istream& in, std::ostream& out,
                            std::ostream& err) {
    Matroid m = load_matroid(args.input, in);
    return run_ordering_result(args, cyclic_base_ordering(m, engine_options(args, err)), "base",
                               m.rank(), out, err);
}

inline int run_cyclic_indep(const CommonArgs& args, long long window, std::istream& in,
                            std::ostream& out, std::ostream& err) {
    Matroid m = load_matroid(args.input, in);
    return run_ordering_result(
        args, cyclic_independent_ordering(m, static_cast<int>(window), engine_options(args, err)),
        "independent", window, out, err);
}

inline int run_exchange(const CommonArgs& args, const std::vector<int>& from,
                        const std::vector<int>& to, std::istream& in, std::ostream& out) {
    Matroid m = load_matroid(args.input, in);
    std::vector<int> seq = exchange_linear_sequence(m, subset_from_ids(from, m, "exchange"),
                                                    subset_from_ids(to, m, "exchange"));
    nlohmann::json j = {{"ordering", seq}, {"mode", "linear"}};
    std::string text;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) text += ' ';
        text += std::to_string(seq[i]);
    }
    text += '\n';
    emit(out, args, j, text);
    return 0;
}

inline int run_arboricity(const CommonArgs& args, bool cover, bool fractional,
                          const std::string& circle, std::istream& in, std::ostream& out,
                          std::ostream& err) {
    Matroid m = load_matroid(args.input, in);
    EngineOptions opts = engine_options(args, err);

    if (!circle.empty()) {
        Rational d = parse_rational(circle);
        std::vector<Rational> unit(static_cast<std::size_t>(m.size()), Rational(1));
        if (auto violation = check_rational(m, unit, d))
            return emit_violation(out, args, *violation);
        CircleMapping mapping = detail::independent_circle_mapping(m, d, opts);
        emit(out, args, json_of(mapping), format_text(mapping));
        return 0;
    }
    if (cover) {
        BaseCover bases = integral_arboricity_cover(m, opts);
        emit(out, args, json_of(bases), format_text(bases));
        return 0;
    }
    if (fractional) {
        FractionalWeights fw = fractional_weights(m, opts);
        emit(out, args, json_of(fw), format_text(fw));
        return 0;
    }
    CircularArboricity circ = circular_arboricity(m, opts);
    emit(out, args, json_of(circ.mapping), format_text(circ.mapping));
    return 0;
}

inline int run_spanning_windows(const CommonArgs& args, const std::string& circle,
                                std::istream& in, std::ostream& out, std::ostream& err) {
    Matroid m = load_matroid(args.input, in);
    auto result = spanning_windows(m, parse_rational(circle), engine_options(args, err));
    if (auto* violation = std::get_if<Violation>(&result))
        return emit_violation(out, args, *violation);
    const CircleMapping& mapping = std::get<CircleMapping>(result);
    emit(out, args, json_of(mapping), format_text(mapping));
    return 0;
}

inline int run_explore(const CommonArgs& args, long long window, std::istream& in,
                       std::ostream& out) {
    Matroid m = load_matroid(args.input, in);
    OrderingMode mode = window > 0 ? OrderingMode::Independent : OrderingMode::Base;
    int w = window > 0 ? static_cast<int>(window) : m.rank();
    auto found = explore_cyclic_ordering(m, w, mode);
    if (!found) {
        emit(out, args, {{"ordering", nullptr}}, "no cyclic ordering\n");
        return 1;
    }
    nlohmann::json j = json_of(*found);
    j["mode"] = mode == OrderingMode::Base ? "base" : "independent";
    j["window"] = w;
    emit(out, args, j, format_text(*found));
    return 0;
}

// Re-check a previously emitted certificate.  The JSON's own keys say what
// it claims to be; the checks run through the verifier routines, never the
// producing code.
inline int run_verify(const CommonArgs& args, const std::string& certificate_path,
                      std::istream& in, std::ostream& out) {
    Matroid m = load_matroid(args.input, in);
    std::ifstream f(certificate_path);
    if (!f) throw PreconditionError("cannot open certificate file '" + certificate_path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad certificate JSON: ") + e.what());
    }

    auto fail = [&](const std::string& message) {
        emit(out, args, {{"verified", false}, {"reason", message}}, "FAIL " + message + "\n");
        return 1;
    };
    auto pass = [&]() {
        emit(out, args, nlohmann::json{{"verified", true}}, "verified\n");
        return 0;
    };

    try {
        if (j.contains("D") && j.contains("mapping")) {
            GonMapping mapping;
            mapping.gon = j.at("D").get<long long>();
            mapping.position.assign(static_cast<std::size_t>(m.size()), 0);
            std::vector<bool> seen(static_cast<std::size_t>(m.size()), false);
            for (const auto& pair : j.at("mapping")) {
                long long e = pair.at(0).get<long long>();
                if (e < 0 || e >= m.size() || seen[static_cast<std::size_t>(e)])
                    return fail("mapping entries must cover each element once");
                seen[static_cast<std::size_t>(e)] = true;
                mapping.position[static_cast<std::size_t>(e)] = pair.at(1).get<long long>();
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end())
                return fail("mapping entries must cover each element once");
            mapping.weight = j.at("weights").get<std::vector<long long>>();
            WindowMode mode = j.value("mode", std::string("independent")) == "spanning"
                                  ? WindowMode::Spanning
                                  : WindowMode::Independent;
            if (auto failure = verify_gon_mapping(m, mapping, mode))
                return fail("window at point " + std::to_string(failure->point) + " = {" +
                            format_subset(failure->window) + "}");
            return pass();
        }

        if (j.contains("d") && j.contains("positions")) {
            CircleMapping mapping;
            mapping.circumference = parse_rational(j.at("d").get<std::string>());
            for (const auto& tok : j.at("positions"))
                mapping.position.push_back(parse_rational(tok.get<std::string>()));
            mapping.mode = j.value("mode", std::string("independent")) == "spanning"
                               ? WindowMode::Spanning
                               : WindowMode::Independent;
            if (auto failure = verify_circle_mapping(m, mapping))
                return fail("window at " + format_rational(failure->point) + " = {" +
                            format_subset(failure->window) + "}");
            return pass();
        }

        if (j.contains("cover")) {
            BaseCover cover;
            for (const auto& base : j.at("cover")) {
                Subset b = 0;
                for (const auto& e : base) b |= singleton(e.get<int>());
                cover.bases.push_back(b);
            }
            if (auto failure = verify_cover(m, cover)) return fail(failure->reason);
            return pass();
        }

        if (j.contains("weights") && j.contains("total")) {
            FractionalWeights fw;
            for (const auto& entry : j.at("weights")) {
                Subset b = 0;
                for (const auto& e : entry.at(0)) b |= singleton(e.get<int>());
                fw.entries.emplace_back(b, parse_rational(entry.at(1).get<std::string>()));
            }
            Rational total = parse_rational(j.at("total").get<std::string>());
            if (auto failure = verify_fractional(m, fw, total)) return fail(failure->reason);
            return pass();
        }

        if (j.contains("ordering")) {
            std::vector<int> seq = j.at("ordering").get<std::vector<int>>();
            std::string mode = j.value("mode", std::string("base"));
            if (mode == "linear") {
                if (auto failure = verify_linear_base_sequence(m, seq))
                    return fail("window at offset " + std::to_string(failure->start) +
                                " is not a base");
                return pass();
            }
            long long window = j.value("window", static_cast<long long>(m.rank()));
            OrderingMode omode =
                mode == "independent" ? OrderingMode::Independent : OrderingMode::Base;
            if (auto failure = verify_cyclic_ordering(m, CyclicOrdering{seq},
                                                      static_cast<int>(window), omode))
                return fail("window starting at offset " + std::to_string(failure->start) + " = {" +
                            format_subset(failure->window) + "}");
            return pass();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad certificate JSON: ") + e.what());
    }

    throw PreconditionError("certificate JSON matches no known certificate shape");
}

}  // namespace cli

// Entry point shared by the binary and the tests.  Streams are injected so
// tests can run fully in-process; `in` backs the "-" input path.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"cyclic interval toolkit for matroids"};
    app.require_subcommand(1);

    cli::CommonArgs common;
    auto add_common = [&common](CLI::App* cmd, bool engine) {
        cmd->add_option("-i,--input", common.input, "matroid description file, - for stdin");
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
        if (engine) {
            cmd->add_flag("--trace", common.trace, "log every push to stderr");
            cmd->add_option("--max-states", common.max_states,
                            "push state budget before giving up");
        }
    };

    bool want_strength = false;
    auto* density_cmd = app.add_subcommand("density", "densest-set ratio or strength");
    add_common(density_cmd, false);
    density_cmd->add_flag("--strength", want_strength, "report min |A|/(r(E)-r(E\\A)) instead");

    std::string weights_path;
    long long uniform_weight = 1;
    long long gon = 0;
    bool dual = false;
    auto* check_cmd = app.add_subcommand("check", "test the window counting condition");
    add_common(check_cmd, false);
    check_cmd->add_option("--weights", weights_path, "weights file, one integer per element");
    check_cmd->add_option("--uniform-weight", uniform_weight, "same weight for every element");
    check_cmd->add_option("--gon", gon, "number of points on the gon")->required();
    check_cmd->add_flag("--dual", dual, "check the spanning-side counting condition instead");

    auto* assign_cmd = app.add_subcommand("assign", "assign interval start points on a gon");
    add_common(assign_cmd, true);
    assign_cmd->add_option("--weights", weights_path, "weights file, one integer per element");
    assign_cmd->add_option("--uniform-weight", uniform_weight, "same weight for every element");
    assign_cmd->add_option("--gon", gon, "number of points on the gon")->required();

    auto* order_cmd = app.add_subcommand("cyclic-order", "cyclic ordering with base windows");
    add_common(order_cmd, true);

    long long window = 0;
    auto* indep_cmd =
        app.add_subcommand("cyclic-indep", "cyclic ordering with independent windows");
    add_common(indep_cmd, true);
    indep_cmd->add_option("--window", window, "window length")->required();

    std::vector<int> from_ids, to_ids;
    auto* exchange_cmd = app.add_subcommand("exchange", "linear exchange walk between two bases");
    add_common(exchange_cmd, false);
    exchange_cmd->add_option("--from", from_ids, "elements of the starting base")
        ->required()
        ->expected(-1);
    exchange_cmd->add_option("--to", to_ids, "elements of the target base")->required()->expected(
        -1);

    bool cover = false, fractional = false;
    std::string circle;
    auto* arb_cmd = app.add_subcommand("arboricity", "circular arboricity and base covers");
    add_common(arb_cmd, true);
    arb_cmd->add_flag("--cover", cover, "partition into ceil(gamma) bases");
    arb_cmd->add_flag("--fractional", fractional, "fractional base weights of total gamma");
    arb_cmd->add_option("--circle", circle, "independent unit windows on a P/Q circle");

    std::string span_circle;
    auto* span_cmd = app.add_subcommand("spanning-windows", "unit windows that all span");
    add_common(span_cmd, true);
    span_cmd->add_option("--circle", span_circle, "circle circumference P/Q")->required();

    long long explore_window = 0;
    auto* explore_cmd = app.add_subcommand("explore", "exhaustive cyclic ordering search");
    add_common(explore_cmd, false);
    explore_cmd->add_option("--window", explore_window,
                            "independent-window length, base windows when omitted");

    std::string certificate_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-check an emitted JSON certificate");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--certificate", certificate_path, "certificate JSON file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.push_back("cygon");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*density_cmd) return cli::run_density(common, want_strength, in, out);
        if (*check_cmd)
            return cli::run_check(common, weights_path, uniform_weight, gon, dual, in, out);
        if (*assign_cmd)
            return cli::run_assign(common, weights_path, uniform_weight, gon, in, out, err);
        if (*order_cmd) return cli::run_cyclic_order(common, in, out, err);
        if (*indep_cmd) return cli::run_cyclic_indep(common, window, in, out, err);
        if (*exchange_cmd) return cli::run_exchange(common, from_ids, to_ids, in, out);
        if (*arb_cmd) return cli::run_arboricity(common, cover, fractional, circle, in, out, err);
        if (*span_cmd) return cli::run_spanning_windows(common, span_circle, in, out, err);
        if (*explore_cmd) return cli::run_explore(common, explore_window, in, out);
        if (*verify_cmd) return cli::run_verify(common, certificate_path, in, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EngineDefect& e) {
        err << "internal defect: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace cygon
