// collapsat: batch front end for collapse search, saturation reductions,
// bootstrap closure, brute-force weak saturation numbers, rank certificates,
// nerves and theorem audits. JSON in, JSON out, deterministic exit codes:
// 0 success/pass, 1 checked failure, 2 inconclusive, 64 usage error.

#include "collapsat/audit.hpp"
#include "collapsat/certificate.hpp"
#include "collapsat/collapse.hpp"
#include "collapsat/error.hpp"
#include "collapsat/geometry.hpp"
#include "collapsat/json_io.hpp"
#include "collapsat/reduction.hpp"
#include "collapsat/weak_saturation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace collapsat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(errc::bad_input, "cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(errc::bad_input, "malformed JSON in '" + path + "': " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(errc::bad_input, "malformed integer list '" + s + "'");
        }
    if (out.empty()) throw Error(errc::bad_input, "empty integer list");
    return out;
}

VertexPartition contiguous_partition(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    int v = 0;
    for (int s : sizes) {
        std::vector<int> part;
        for (int i = 0; i < s; ++i) part.push_back(v++);
        parts.push_back(std::move(part));
    }
    return VertexPartition(v, std::move(parts));
}

// Host shorthands: k<N> (graphs), k<N>u<U> (N vertices, uniformity U),
// k<N>x<N>... (complete multipartite); anything else is a JSON file path.
Hypergraph parse_host(const std::string& spec) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (spec.size() > 1 && spec[0] == 'k') {
        std::string body = spec.substr(1);
        if (all_digits(body)) return complete_host(std::stoi(body), 2);
        auto u = body.find('u');
        if (u != std::string::npos && all_digits(body.substr(0, u)) &&
            all_digits(body.substr(u + 1)))
            return complete_host(std::stoi(body.substr(0, u)), std::stoi(body.substr(u + 1)));
        if (body.find('x') != std::string::npos) {
            std::vector<int> sizes;
            std::stringstream ss(body);
            std::string tok;
            bool ok = true;
            while (std::getline(ss, tok, 'x')) {
                if (!all_digits(tok)) ok = false;
                else sizes.push_back(std::stoi(tok));
            }
            if (ok) return multipartite_host(contiguous_partition(sizes));
        }
    }
    return hypergraph_from_json(read_json(spec));
}

struct PatternFlags {
    std::optional<int> m;
    std::string r_vec;
    std::optional<int> r;
    std::string patterns_path;
};

std::vector<StarPattern> resolve_patterns(const Hypergraph& host, const PatternFlags& pf) {
    int given = int(pf.m.has_value()) + int(!pf.r_vec.empty()) + int(pf.r.has_value()) +
                int(!pf.patterns_path.empty());
    if (given != 1)
        throw Error(errc::bad_input, "give exactly one of --m, --r, --r-vec, --patterns");
    if (pf.m) return {StarPattern{host.uniformity, *pf.m, std::nullopt}};
    if (pf.r) {
        int m = host.n - (host.uniformity - 1) - *pf.r + 1;
        if (m < 1) throw Error(errc::parameter_range, "r too large for this host");
        return {StarPattern{host.uniformity, m, std::nullopt}};
    }
    if (!pf.r_vec.empty()) {
        if (!host.parts) throw Error(errc::bad_input, "--r-vec needs a partite host");
        auto r = parse_int_list(pf.r_vec);
        if (static_cast<int>(r.size()) != host.parts->part_count())
            throw Error(errc::part_count_mismatch, "r vector length differs from part count");
        std::vector<StarPattern> fam;
        for (int i = 0; i < host.parts->part_count(); ++i) {
            int m = host.parts->part_size(i) - r[i] + 1;
            if (m < 1) throw Error(errc::parameter_range, "r_i too large for part " + std::to_string(i));
            fam.push_back(StarPattern{host.uniformity, m, i});
        }
        return fam;
    }
    std::vector<StarPattern> fam;
    for (const auto& p : read_json(pf.patterns_path))
        fam.push_back(pattern_from_json(p, host.uniformity));
    return fam;
}

CollapseSequence obtain_sequence(const SimplicialComplex& K, int d,
                                 const std::string& sequence_path, std::uint64_t budget) {
    if (!sequence_path.empty()) {
        // Accept raw arrays as well as the `collapse` verb's output object.
        Json j = read_json(sequence_path);
        if (j.is_object() && j.contains("sequence")) j = j.at("sequence");
        return sequence_from_json(j);
    }
    AuditOptions opts;
    opts.budget = budget;
    auto greedy = find_collapse_sequence(K, d, SearchMode::Greedy, budget);
    if (greedy.status == CollapseStatus::Collapsible) return greedy.sequence;
    auto full = find_collapse_sequence(K, d, SearchMode::Exhaustive, budget);
    if (full.status == CollapseStatus::Collapsible) return full.sequence;
    if (full.status == CollapseStatus::NotCollapsible)
        throw Error(errc::not_collapsible, "complex is not " + std::to_string(d) + "-collapsible");
    throw Error(errc::inconclusive, "collapse search exhausted its budget");
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case errc::inconclusive:
        return kExitInconclusive;
    case errc::bad_input:
    case errc::index_out_of_range:
    case errc::duplicate_vertex:
    case errc::parameter_range:
    case errc::part_count_mismatch:
        return kExitUsage;
    default:
        return kExitFail;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"collapse sequences, weak saturation and rank certificates"};
    app.require_subcommand(1);

    // collapse
    auto* collapse_cmd = app.add_subcommand("collapse", "search for a d-collapse sequence");
    std::string complex_path, mode = "exhaustive";
    int opt_d = 1;
    std::uint64_t budget = kDefaultSearchBudget;
    collapse_cmd->add_option("--complex", complex_path, "complex JSON (- for stdin)")->required();
    collapse_cmd->add_option("--d", opt_d, "collapse dimension")->required();
    collapse_cmd->add_option("--mode", mode, "exhaustive|greedy")
        ->check(CLI::IsMember({"exhaustive", "greedy"}));
    collapse_cmd->add_option("--budget", budget, "search node limit");

    // reduce / reduce-colorful
    auto* reduce_cmd = app.add_subcommand("reduce", "collapse sequence -> saturation sequence");
    std::string sequence_path;
    std::optional<int> opt_r;
    reduce_cmd->add_option("--complex", complex_path, "complex JSON")->required();
    reduce_cmd->add_option("--d", opt_d, "collapse dimension")->required();
    reduce_cmd->add_option("--r", opt_r, "bound parameter (default dim(K)+1-d)");
    reduce_cmd->add_option("--sequence", sequence_path, "collapse sequence JSON (found if omitted)");
    reduce_cmd->add_option("--budget", budget, "search node limit");

    auto* reducec_cmd =
        app.add_subcommand("reduce-colorful", "collapse sequence -> directed saturation sequence");
    std::string partition_path, r_vec_str;
    reducec_cmd->add_option("--complex", complex_path, "complex JSON")->required();
    reducec_cmd->add_option("--partition", partition_path, "partition JSON")->required();
    reducec_cmd->add_option("--r-vec", r_vec_str, "comma list (default dim(K[V_i])+1)");
    reducec_cmd->add_option("--sequence", sequence_path, "collapse sequence JSON (found if omitted)");
    reducec_cmd->add_option("--budget", budget, "search node limit");

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "bootstrap closure of a start hypergraph");
    std::string start_path, host_spec;
    PatternFlags pf;
    closure_cmd->add_option("--start", start_path, "start hypergraph JSON")->required();
    closure_cmd->add_option("--host", host_spec, "host (k4, k5u3, k3x3 or JSON path)")->required();
    closure_cmd->add_option("--m", pf.m, "single star pattern big part");
    closure_cmd->add_option("--r", pf.r, "derive pattern from r");
    closure_cmd->add_option("--r-vec", pf.r_vec, "derive colored family from comma list");
    closure_cmd->add_option("--patterns", pf.patterns_path, "pattern family JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a saturation instance");
    std::string instance_path;
    verify_cmd->add_option("--instance", instance_path, "saturation instance JSON")->required();

    // wsat-min
    auto* wsat_cmd = app.add_subcommand("wsat-min", "brute-force weak saturation number");
    std::size_t edge_cap = kDefaultWsatEdgeCap;
    int jobs = 1;
    wsat_cmd->add_option("--host", host_spec, "host (k4, k5u3, k3x3 or JSON path)")->required();
    wsat_cmd->add_option("--m", pf.m, "single star pattern big part");
    wsat_cmd->add_option("--r", pf.r, "derive pattern from r");
    wsat_cmd->add_option("--r-vec", pf.r_vec, "derive colored family from comma list");
    wsat_cmd->add_option("--patterns", pf.patterns_path, "pattern family JSON");
    wsat_cmd->add_option("--cap", edge_cap, "maximum host edge count");
    wsat_cmd->add_option("--jobs", jobs, "parallel scan width")->check(CLI::PositiveNumber);

    // certificate
    auto* cert_cmd = app.add_subcommand("certificate", "exact rank lower-bound certificate");
    std::optional<int> cert_n, cert_d, cert_r;
    std::string n_vec_str;
    cert_cmd->add_option("--n", cert_n, "vertex count (complete host)");
    cert_cmd->add_option("--d", cert_d, "dimension (uniformity d+1)");
    cert_cmd->add_option("--r", cert_r, "bound parameter");
    cert_cmd->add_option("--n-vec", n_vec_str, "part sizes (complete multipartite host)");
    cert_cmd->add_option("--r-vec", r_vec_str, "per-part bound parameters");

    // replay-lemma
    auto* replay_cmd = app.add_subcommand("replay-lemma", "span replay over a saturation instance");
    replay_cmd->add_option("--instance", instance_path, "saturation instance JSON")->required();

    // nerve
    auto* nerve_cmd = app.add_subcommand("nerve", "nerve complex of a box family");
    std::string family_path;
    std::optional<int> cap;
    nerve_cmd->add_option("--family", family_path, "box family JSON (- for stdin)")->required();
    nerve_cmd->add_option("--cap", cap, "largest allowed intersecting subfamily (default n)");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "seeded box/interval family");
    std::string kind = "intervals";
    int gen_k = 1, gen_n = 4;
    std::uint64_t seed = 0;
    std::optional<int> max_overlap;
    int rejection_budget = kRejectionBudget;
    gen_cmd->add_option("--kind", kind, "intervals|boxes")
        ->check(CLI::IsMember({"intervals", "boxes"}));
    gen_cmd->add_option("--k", gen_k, "axes (boxes)");
    gen_cmd->add_option("--n", gen_n, "family size")->required();
    gen_cmd->add_option("--seed", seed, "RNG seed");
    gen_cmd->add_option("--max-overlap", max_overlap, "largest allowed intersecting subfamily");
    gen_cmd->add_option("--rejection-budget", rejection_budget, "resampling attempts");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "theorem-level checks on an instance");
    std::string theorem;
    audit_cmd->add_option("--theorem", theorem, "frac-helly|colorful-frac-helly|colorful-helly")
        ->required()
        ->check(CLI::IsMember({"frac-helly", "colorful-frac-helly", "colorful-helly"}));
    audit_cmd->add_option("--complex", complex_path, "complex JSON")->required();
    audit_cmd->add_option("--partition", partition_path, "partition JSON (colorful audits)");
    audit_cmd->add_option("--d", opt_d, "dimension (frac-helly)");
    audit_cmd->add_option("--r", opt_r, "bound parameter");
    audit_cmd->add_option("--r-vec", r_vec_str, "per-part bound parameters");
    audit_cmd->add_option("--sequence", sequence_path, "collapse sequence JSON");
    audit_cmd->add_option("--budget", budget, "search node limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*collapse_cmd) {
            auto K = complex_from_json(read_json(complex_path));
            auto out = find_collapse_sequence(
                K, opt_d, mode == "greedy" ? SearchMode::Greedy : SearchMode::Exhaustive, budget);
            Json j;
            switch (out.status) {
            case CollapseStatus::Collapsible:
                j["status"] = "collapsible";
                j["sequence"] = sequence_to_json(out.sequence);
                break;
            case CollapseStatus::NotCollapsible:
                j["status"] = "not-collapsible";
                break;
            case CollapseStatus::Unknown:
                j["status"] = "unknown";
                break;
            }
            j["stats"] = Json{{"nodes_explored", out.stats.nodes_explored},
                              {"states_memoized", out.stats.states_memoized}};
            emit(j);
            if (out.status == CollapseStatus::Collapsible) return kExitPass;
            return out.status == CollapseStatus::NotCollapsible ? kExitFail : kExitInconclusive;
        }

        if (*reduce_cmd) {
            auto K = complex_from_json(read_json(complex_path));
            auto seq = obtain_sequence(K, opt_d, sequence_path, budget);
            int r = opt_r ? *opt_r : infer_r(K, opt_d);
            auto inst = reduce_fractional(K, opt_d, r, seq);
            emit(instance_to_json(inst));
            return kExitPass;
        }

        if (*reducec_cmd) {
            auto K = complex_from_json(read_json(complex_path));
            auto P = partition_from_json(read_json(partition_path));
            int d = P.part_count() - 1;
            auto seq = obtain_sequence(K, d, sequence_path, budget);
            auto r = r_vec_str.empty() ? infer_r_vec(K, P) : parse_int_list(r_vec_str);
            auto inst = reduce_colorful(K, P, r, seq);
            emit(instance_to_json(inst));
            return kExitPass;
        }

        if (*closure_cmd) {
            auto host = parse_host(host_spec);
            auto start = hypergraph_from_json(read_json(start_path));
            if (!start.parts && host.parts) start.parts = host.parts;
            auto fam = resolve_patterns(host, pf);
            emit(hypergraph_to_json(closure(start, fam, host)));
            return kExitPass;
        }

        if (*verify_cmd) {
            auto inst = instance_from_json(read_json(instance_path));
            auto res = verify_saturation_sequence(inst);
            Json j{{"ok", res.ok}};
            if (res.failed_index) j["failed_index"] = *res.failed_index;
            if (!res.reason.empty()) j["reason"] = res.reason;
            emit(j);
            return res.ok ? kExitPass : kExitFail;
        }

        if (*wsat_cmd) {
            auto host = parse_host(host_spec);
            auto fam = resolve_patterns(host, pf);
            bool directed = !fam.empty() && fam.front().color.has_value();
            auto res = wsat_bruteforce(host, fam, directed, edge_cap, jobs);
            emit(Json{{"k", res.k}, {"optimal_start", res.optimal_start.edges}});
            return kExitPass;
        }

        if (*cert_cmd) {
            if (!n_vec_str.empty()) {
                if (r_vec_str.empty())
                    throw Error(errc::bad_input, "--n-vec needs --r-vec");
                auto sizes = parse_int_list(n_vec_str);
                auto host = multipartite_host(contiguous_partition(sizes));
                emit(certificate_to_json(certificate_rank_colorful(host, parse_int_list(r_vec_str))));
                return kExitPass;
            }
            if (!cert_n || !cert_d || !cert_r)
                throw Error(errc::bad_input, "give --n --d --r or --n-vec --r-vec");
            auto host = complete_host(*cert_n, *cert_d + 1);
            emit(certificate_to_json(certificate_rank(host, *cert_r)));
            return kExitPass;
        }

        if (*replay_cmd) {
            auto inst = instance_from_json(read_json(instance_path));
            auto res = replay_lemma(inst);
            Json j{{"ok", res.ok}};
            if (res.failed_index) j["failed_index"] = *res.failed_index;
            emit(j);
            return res.ok ? kExitPass : kExitFail;
        }

        if (*nerve_cmd) {
            auto family = family_from_json(read_json(family_path));
            int c = cap ? *cap : static_cast<int>(family.size());
            emit(complex_to_json(nerve(family, c)));
            return kExitPass;
        }

        if (*gen_cmd) {
            auto family = gen_family(kind == "boxes" ? FamilyKind::Boxes : FamilyKind::Intervals,
                                     gen_k, gen_n, seed, max_overlap, rejection_budget);
            emit(family_to_json(family));
            return kExitPass;
        }

        if (*audit_cmd) {
            auto K = complex_from_json(read_json(complex_path));
            AuditOptions opts;
            opts.budget = budget;
            CollapseSequence seq;
            if (!sequence_path.empty()) {
                seq = sequence_from_json(read_json(sequence_path));
                opts.sequence = &seq;
            }
            AuditReport rep;
            if (theorem == "frac-helly") {
                rep = fractional_helly_audit(K, opt_d, opt_r, opts);
            } else {
                if (partition_path.empty())
                    throw Error(errc::bad_input, "colorful audits need --partition");
                auto P = partition_from_json(read_json(partition_path));
                if (theorem == "colorful-frac-helly") {
                    std::optional<std::vector<int>> r;
                    if (!r_vec_str.empty()) r = parse_int_list(r_vec_str);
                    rep = colorful_fractional_audit(K, P, r, opts);
                } else {
                    rep = colorful_helly_audit(K, P, opts);
                }
            }
            emit(audit_to_json(rep));
            return rep.pass ? kExitPass : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return kExitFail;
    }
    return kExitUsage;
}
