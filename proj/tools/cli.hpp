#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <schurbound/schurbound.hpp>

namespace schurbound::cli {

// Exit status contract: 0 success / all-pass, 1 verification or domain
// failure (incomparable endpoints, failed sweep), 2 usage error (bad flags,
// malformed partitions, violated preconditions such as r < n), 3 resource
// limit hit.
enum ExitStatus : int {
    kOk = 0,
    kFailed = 1,
    kUsage = 2,
    kLimit = 3,
};

namespace detail {

inline std::string join_chain(const Chain& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
        if (i) s += " > ";
        s += to_string(chain.elements[i]);
    }
    return s;
}

inline std::string render_hasse(const HasseInterval& iv, const std::string& format) {
    if (format == "dot") return to_dot(iv);
    if (format == "json") return to_json(iv).dump(2) + "\n";
    std::string s = "interval " + to_string(iv.top()) + " .. " + to_string(iv.bottom()) +
                    " (rank " + std::to_string(iv.rank()) + "): " +
                    std::to_string(iv.node_count()) + " nodes, " +
                    std::to_string(iv.edge_count()) + " edges\n";
    for (const auto& [parent, child] : iv.edges())
        s += to_string(parent) + " > " + to_string(child) + "\n";
    return s;
}

inline std::string render_chains(const Partition& from, const Partition& to, int rank,
                                 bool longest_only, const std::vector<Chain>& chains,
                                 const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (const Chain& c : chains)
            arr.push_back(Json{{"length", c.length()}, {"elements", to_json(c)}});
        Json j{{"from", to_json(from)},
               {"to", to_json(to)},
               {"rank", rank},
               {"longest_only", longest_only},
               {"count", chains.size()},
               {"chains", std::move(arr)}};
        return j.dump(2) + "\n";
    }
    std::string s = std::to_string(chains.size()) + (longest_only ? " longest" : "") +
                    " chain" + (chains.size() == 1 ? "" : "s") + " from " + to_string(from) +
                    " to " + to_string(to) + " (rank " + std::to_string(rank) + ")\n";
    for (const Chain& c : chains)
        s += "length " + std::to_string(c.length()) + ": " + join_chain(c) + "\n";
    return s;
}

inline std::string render_bound(const BoundCertificate& cert, const std::string& format) {
    if (format == "json") return to_json(cert).dump(2) + "\n";
    std::string s = "B(" + to_string(cert.lambda) + ") = " + std::to_string(cert.bound_B) +
                    "\n";
    s += "floor 2^(l-1) = " + std::to_string(cert.floor_bound) + "\n";
    s += "longest chain length = " + std::to_string(cert.longest_length) + "\n";
    s += "best chain: " + join_chain(cert.best_chain) + "\n";
    if (!cert.per_step.empty()) {
        s += "B = 1";
        for (Int step : cert.per_step) s += " + " + std::to_string(step);
        s += " = " + std::to_string(cert.bound_B) + "\n";
    }
    return s;
}

inline std::string render_expand(const Partition& lambda, const SchurExpansion& e,
                                 const std::string& format) {
    if (format == "json") {
        Json j{{"partition", to_json(lambda)},
               {"expansion", to_json(e)},
               {"weight", weight(e)}};
        return j.dump(2) + "\n";
    }
    std::string s =
        "expansion of c_{" + to_string(lambda) + "} at rank " + std::to_string(e.rank()) + ":\n";
    for (const auto& [key, c] : e.coeffs())
        s += "  S_{" + to_string(key) + "}: " + std::to_string(c) + "\n";
    s += "W = " + std::to_string(weight(e)) + "\n";
    return s;
}

inline std::string render_verify(const VerificationReport& report, const std::string& format) {
    if (format == "json") return to_json(report).dump(2) + "\n";
    std::string s = "verify " + report.mode + ":";
    for (const auto& [name, value] : report.scope)
        s += " " + name + "=" + std::to_string(value);
    s += "\n";
    std::size_t passed = 0;
    for (const VerificationRecord& rec : report.records) {
        s += "  ";
        for (std::size_t i = 0; i < rec.partitions.size(); ++i) {
            if (i) s += " > ";
            s += to_string(rec.partitions[i]);
        }
        s += ":";
        for (const auto& [name, value] : rec.values)
            s += " " + name + "=" + std::to_string(value);
        s += rec.pass ? " PASS" : " FAIL";
        s += "\n";
        if (rec.pass) ++passed;
    }
    s += std::to_string(passed) + "/" + std::to_string(report.records.size()) +
         " records pass (" + std::to_string(report.elapsed_ms) + " ms)\n";
    return s;
}

inline void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << payload;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact dominance-order posets, Schur expansions, and Chern-number lower bounds"};
    app.require_subcommand(1);

    int n = 0, k = 0, rank = 0;
    std::string from_text, to_text, partition_text, mode;
    std::string format = "text", out_path;
    bool longest_only = false;
    std::uint64_t limit = kDefaultChainLimit;

    auto add_common = [&](CLI::App* cmd, bool with_dot) {
        std::vector<std::string> formats = {"text", "json"};
        if (with_dot) formats.push_back("dot");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* hasse = app.add_subcommand("hasse", "cover-relation diagram of Gamma(n, r)");
    hasse->add_option("--n", n, "partition size")->required();
    hasse->add_option("-r,--r,--rank", rank, "largest allowed part (default n)");
    add_common(hasse, true);

    CLI::App* chains = app.add_subcommand("chains", "chains between two partitions");
    chains->add_option("--from", from_text, "top partition")->required();
    chains->add_option("--to", to_text, "bottom partition")->required();
    chains->add_option("-r,--r,--rank", rank, "rank bound (default: size of --from)");
    chains->add_flag("--longest-only", longest_only, "only chains of maximal length");
    chains->add_option("--limit", limit, "refuse to enumerate more chains than this")
        ->capture_default_str();
    add_common(chains, false);

    CLI::App* bound = app.add_subcommand("bound", "lower-bound certificate B(lambda)");
    bound->add_option("partition", partition_text, "partition, e.g. 4,1,1,1 or 4111")
        ->required();
    add_common(bound, false);

    CLI::App* expand = app.add_subcommand("expand", "Schur expansion and weight of c_lambda");
    expand->add_option("partition", partition_text, "partition, e.g. 2,1 or 21")->required();
    expand->add_option("-r,--r,--rank", rank, "rank (default: size of the partition)");
    add_common(expand, false);

    CLI::App* verify =
        app.add_subcommand("verify", "run a verification sweep; exit 0 iff all records pass");
    verify->add_option("mode", mode, "weight-bound | dominance | cover-steps")
        ->required()
        ->check(CLI::IsMember({"weight-bound", "dominance", "cover-steps"}));
    verify->add_option("--n", n, "partition size (weight-bound, cover-steps)");
    verify->add_option("--k", k, "degree (dominance)");
    verify->add_option("-r,--r,--rank", rank, "rank (default n or k)");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (app.got_subcommand(hasse)) {
            if (rank == 0) rank = n;
            const HasseInterval iv =
                build_interval(max_element(n, rank), min_element(n), rank);
            detail::emit(detail::render_hasse(iv, format), out_path, out);
            return kOk;
        }

        if (app.got_subcommand(chains)) {
            if (format == "dot") {
                err << "--format dot is only available for 'hasse'\n";
                return kUsage;
            }
            const Partition from = parse_partition(from_text);
            const Partition to = parse_partition(to_text);
            if (rank == 0) rank = std::max(1, from.size());
            const HasseInterval iv = build_interval(from, to, rank);
            const std::vector<Chain> found =
                longest_only ? iv.longest_chains(limit) : iv.maximal_chains(limit);
            detail::emit(detail::render_chains(from, to, rank, longest_only, found, format),
                         out_path, out);
            return kOk;
        }

        if (app.got_subcommand(bound)) {
            const BoundCertificate cert = compute_B(parse_partition(partition_text));
            detail::emit(detail::render_bound(cert, format), out_path, out);
            return kOk;
        }

        if (app.got_subcommand(expand)) {
            const Partition lambda = parse_partition(partition_text);
            if (rank == 0) rank = std::max(1, lambda.size());
            const SchurExpansion e = expand_to_schur(monomial(lambda, rank));
            detail::emit(detail::render_expand(lambda, e, format), out_path, out);
            return kOk;
        }

        if (app.got_subcommand(verify)) {
            VerificationReport report;
            if (mode == "weight-bound") {
                if (n <= 0) {
                    err << "verify weight-bound needs --n\n";
                    return kUsage;
                }
                if (rank == 0) rank = n;
                report = verify_weight_bound(n, rank);
            } else if (mode == "cover-steps") {
                if (n <= 0) {
                    err << "verify cover-steps needs --n\n";
                    return kUsage;
                }
                if (rank == 0) rank = n;
                report = verify_cover_steps(n, rank);
            } else {
                if (k <= 0) {
                    err << "verify dominance needs --k\n";
                    return kUsage;
                }
                if (rank == 0) rank = k;
                report = verify_dominance(k, rank);
            }
            detail::emit(detail::render_verify(report, format), out_path, out);
            return report.all_pass ? kOk : kFailed;
        }
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const NotComparable& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const NotACover& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const ArithmeticOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

/// Convenience overload for tests: args without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"schurbound"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace schurbound::cli
