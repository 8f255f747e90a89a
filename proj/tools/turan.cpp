// Command-line front end: every library operation behind a subcommand, with
// file-based inputs, JSON artifacts, and explicit seeds.
//
// Exit codes: 0 = property holds / requested witness found, 1 = refuted
// (witness artifact where applicable), 2 = unknown (budget exhausted),
// 64 = usage error, 65 = input format error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"
#include "turan/conditions.hpp"
#include "turan/density.hpp"
#include "turan/hypergraph.hpp"
#include "turan/palette.hpp"
#include "turan/rational.hpp"
#include "turan/reduced.hpp"
#include "turan/vanishing.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;

using nlohmann::json;

std::pair<int, int> parse_pair(const std::string& s) {
    std::istringstream in(s);
    int a, b;
    char comma;
    if (!(in >> a >> comma >> b) || comma != ',')
        throw std::invalid_argument("expected two comma-separated integers, got '" + s + "'");
    return {a, b};
}

turan::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return turan::Rational(std::stoll(s));
    return turan::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

// Collects artifacts under --out with a manifest of inputs and seeds.
struct ArtifactSink {
    std::string dir;
    json manifest = json::object();

    explicit ArtifactSink(std::vector<std::string> argv_tail) {
        manifest["argv"] = std::move(argv_tail);
        manifest["artifacts"] = json::array();
    }

    bool active() const { return !dir.empty(); }

    void save(const std::string& name, const json& content) {
        if (!active()) return;
        std::filesystem::create_directories(dir);
        std::ofstream out(std::filesystem::path(dir) / name);
        out << content.dump(2) << '\n';
        manifest["artifacts"].push_back(name);
    }

    void save_text(const std::string& name, const std::string& content) {
        if (!active()) return;
        std::filesystem::create_directories(dir);
        std::ofstream out(std::filesystem::path(dir) / name);
        out << content;
        manifest["artifacts"].push_back(name);
    }

    void finish(std::uint64_t seed) {
        if (!active()) return;
        manifest["seed"] = seed;
        std::ofstream out(std::filesystem::path(dir) / "manifest.json");
        out << manifest.dump(2) << '\n';
    }
};

// Shared hypergraph input flags: a file (text or .json) or a generator.
struct GraphSource {
    std::string in_path;
    std::string family, path, cycle;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option_group("input", "hypergraph input (exactly one)");
        g->add_option("--in", in_path, "hypergraph file (text 'k n' format, or .json)");
        g->add_option("--family", family, "generate the three-path family, as k,t");
        g->add_option("--path", path, "generate a tight path, as k,length");
        g->add_option("--cycle", cycle, "generate a tight cycle, as k,length");
        g->require_option(1);
    }

    turan::Hypergraph load() const {
        if (!in_path.empty()) {
            if (in_path.size() > 5 && in_path.substr(in_path.size() - 5) == ".json")
                return load_json(in_path).get<turan::Hypergraph>();
            std::ifstream in(in_path);
            if (!in) throw std::invalid_argument("cannot open '" + in_path + "'");
            return turan::hypergraph_from_text(in);
        }
        if (!family.empty()) {
            auto [k, t] = parse_pair(family);
            return turan::family_F(k, t);
        }
        if (!path.empty()) {
            auto [k, len] = parse_pair(path);
            return turan::tight_path(k, len);
        }
        auto [k, len] = parse_pair(cycle);
        return turan::tight_cycle(k, len);
    }
};

// Shared palette input flags.
struct PaletteSource {
    int vanishing_k = 0;
    std::string conj;
    std::string in_path;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option_group("palette", "palette input (exactly one)");
        g->add_option("--vanishing-palette", vanishing_k, "single-tuple palette for uniformity k");
        g->add_option("--conj-palette", conj, "three-tuple palette, as k,i,j");
        g->add_option("--palette", in_path, "palette JSON file");
        g->require_option(1);
    }

    turan::Palette load() const {
        if (vanishing_k > 0) return turan::vanishing_palette(vanishing_k);
        if (!conj.empty()) {
            std::istringstream in(conj);
            int k, i, j;
            char c1, c2;
            if (!(in >> k >> c1 >> i >> c2 >> j) || c1 != ',' || c2 != ',')
                throw std::invalid_argument("expected k,i,j for --conj-palette");
            return turan::conj_palette(k, i, j);
        }
        return load_json(in_path).get<turan::Palette>();
    }
};

std::string ordering_str(const turan::Ordering& o) {
    std::ostringstream os;
    for (size_t i = 0; i < o.perm.size(); ++i) os << (i ? " " : "") << o.perm[i];
    return os.str();
}

turan::Ordering load_ordering(const std::string& path) {
    return load_json(path).get<turan::Ordering>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision and verification tools for uniform-density hypergraph certificates"};
    app.require_subcommand(1);

    // Options shared across subcommands; registered per-subcommand so that
    // help stays local, but stored once.
    std::uint64_t seed = 0;
    int threads = 1;
    long long budget = -1;
    ArtifactSink sink(std::vector<std::string>(argv + 1, argv + argc));
    auto add_common = [&](CLI::App* cmd, bool with_seed = false) {
        cmd->add_option("--out", sink.dir, "artifact directory (with manifest.json)");
        cmd->add_option("--threads", threads, "worker threads (results are thread-count independent)");
        if (with_seed) cmd->add_option("--seed", seed, "RNG seed (default 0; always printed)");
    };

    int rc = kExitHolds;

    // ---- vanish ----
    auto* vanish = app.add_subcommand("vanish", "vanishing orderings and their digraphs");
    vanish->require_subcommand(1);

    GraphSource vf_src;
    auto* vfind = vanish->add_subcommand("find", "search for a vanishing ordering");
    vf_src.attach(vfind);
    vfind->add_option("--budget", budget, "node budget for the search (-1 = unbounded)");
    add_common(vfind);
    vfind->callback([&] {
        auto F = vf_src.load();
        auto res = turan::find_vanishing_ordering(F, budget);
        std::cout << "nodes = " << res.nodes << "\n";
        if (res.status == turan::SearchStatus::found) {
            std::cout << "ordering: " << ordering_str(*res.ordering) << "\n";
            sink.save("ordering.json", json(*res.ordering));
            rc = kExitHolds;
        } else if (res.status == turan::SearchStatus::exhausted) {
            std::cout << "no vanishing ordering\n";
            rc = kExitRefuted;
        } else {
            std::cout << "budget exhausted, undecided\n";
            rc = kExitUnknown;
        }
    });

    GraphSource vv_src;
    std::string vv_ordering;
    auto* vverify = vanish->add_subcommand("verify", "check an ordering for the vanishing property");
    vv_src.attach(vverify);
    vverify->add_option("--ordering", vv_ordering, "ordering JSON file")->required();
    add_common(vverify);
    vverify->callback([&] {
        auto F = vv_src.load();
        auto tau = load_ordering(vv_ordering);
        bool ok = turan::is_vanishing(F, tau);
        std::cout << (ok ? "vanishing\n" : "not vanishing\n");
        rc = ok ? kExitHolds : kExitRefuted;
    });

    GraphSource vd_src;
    std::string vd_ordering;
    int vd_beta = 0;
    bool vd_noncyclic = false;
    auto* vdigraph = vanish->add_subcommand(
        "digraph", "colored digraph of a vanishing ordering, plus the round-trip check");
    vd_src.attach(vdigraph);
    vdigraph->add_option("--ordering", vd_ordering, "ordering JSON file")->required();
    vdigraph->add_option("--beta", vd_beta, "color pair (beta, beta+1) for the transitive digraph");
    vdigraph->add_flag("--noncyclic", vd_noncyclic, "do not wrap the color pair modulo k");
    add_common(vdigraph);
    vdigraph->callback([&] {
        auto F = vd_src.load();
        auto tau = load_ordering(vd_ordering);
        auto D = turan::build_type_digraph(F, tau);
        std::cout << "arcs = " << D.arcs.size() << "\n";
        sink.save("digraph.json", json(D));
        auto back = turan::digraph_to_ordering(F, D, vd_beta, !vd_noncyclic);
        if (back) {
            std::cout << "recovered ordering: " << ordering_str(*back) << "\n";
            sink.save("recovered_ordering.json", json(*back));
            rc = kExitHolds;
        } else {
            std::cout << "transitive digraph is cyclic\n";
            rc = kExitRefuted;
        }
    });

    // ---- club ----
    GraphSource club_src;
    auto* club = app.add_subcommand("club", "decide the no-vanishing-ordering condition");
    club_src.attach(club);
    club->add_option("--budget", budget, "node budget (-1 = unbounded)");
    add_common(club);
    club->callback([&] {
        auto F = club_src.load();
        auto res = turan::find_vanishing_ordering(F, budget);
        std::cout << "nodes = " << res.nodes << "\n";
        if (res.status == turan::SearchStatus::exhausted) {
            std::cout << "club = true (no vanishing ordering)\n";
            rc = kExitHolds;
        } else if (res.status == turan::SearchStatus::found) {
            std::cout << "club = false; ordering: " << ordering_str(*res.ordering) << "\n";
            sink.save("ordering.json", json(*res.ordering));
            rc = kExitRefuted;
        } else {
            std::cout << "club = unknown (budget)\n";
            rc = kExitUnknown;
        }
    });

    // ---- spade ----
    GraphSource spade_src;
    bool spade_star = false;
    std::string spade_pair;
    auto* spade = app.add_subcommand("spade", "search split certificates for every pair i<j");
    spade_src.attach(spade);
    spade->add_flag("--star", spade_star, "relaxed mode: equal types allowed across the split");
    spade->add_option("--pair", spade_pair, "restrict to one pair, as i,j");
    spade->add_option("--budget", budget, "ordering-search node budget per pair (-1 = unbounded)");
    add_common(spade);
    spade->callback([&] {
        auto F = spade_src.load();
        std::optional<std::pair<int, int>> only;
        if (!spade_pair.empty()) only = parse_pair(spade_pair);
        auto res = turan::check_spade(F, spade_star, budget, only);
        int found = 0;
        json certs = json::array();
        for (const auto& [p, c] : res.certs) {
            std::cout << "pair (" << p.first << "," << p.second << "): "
                      << (c ? "certificate" : (res.complete ? "none" : "unknown")) << "\n";
            if (c) {
                ++found;
                certs.push_back(json(*c));
            }
        }
        sink.save("certificates.json", certs);
        std::cout << found << "/" << res.certs.size() << " pairs certified\n";
        if (found == static_cast<int>(res.certs.size()))
            rc = kExitHolds;
        else
            rc = res.complete ? kExitRefuted : kExitUnknown;
    });

    // ---- verdict ----
    GraphSource verdict_src;
    auto* verdict = app.add_subcommand("verdict", "combined report with density conclusions");
    verdict_src.attach(verdict);
    verdict->add_option("--budget", budget, "search budget (-1 = unbounded)");
    add_common(verdict);
    verdict->callback([&] {
        auto F = verdict_src.load();
        auto v = turan::compute_verdict(F, budget);
        auto tri = [](turan::Tri t) {
            return t == turan::Tri::yes ? "true" : (t == turan::Tri::no ? "false" : "unknown");
        };
        std::cout << "club = " << tri(v.club) << "\n";
        int have = 0;
        for (const auto& [p, c] : v.spade)
            if (c) ++have;
        std::cout << "spade = " << have << "/" << v.spade.size() << " pairs\n";
        int have_star = 0;
        for (const auto& [p, c] : v.spade_star)
            if (c) ++have_star;
        std::cout << "spade* = " << have_star << "/" << v.spade_star.size() << " pairs\n";
        if (v.claimed_density)
            std::cout << "claimed density = " << turan::to_string(*v.claimed_density) << "\n";
        if (v.lower_bound_density)
            std::cout << "lower bound = " << turan::to_string(*v.lower_bound_density) << "\n";
        std::cout << v.note << "\n";
        sink.save("verdict.json", json(v));
        if (v.claimed_density)
            rc = kExitHolds;
        else if (!v.spade_complete || !v.spade_star_complete || v.club == turan::Tri::unknown)
            rc = kExitUnknown;
        else
            rc = kExitRefuted;
    });

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate standard hypergraphs");
    gen->require_subcommand(1);
    std::string gen_params;
    bool gen_json = false;
    auto make_gen = [&](const char* name, const char* desc, auto maker) {
        auto* cmd = gen->add_subcommand(name, desc);
        cmd->add_option("params", gen_params, "parameters as a,b")->required();
        cmd->add_flag("--json", gen_json, "emit JSON instead of text");
        add_common(cmd);
        cmd->callback([&, maker] {
            auto [a, b] = parse_pair(gen_params);
            auto H = maker(a, b);
            if (gen_json)
                std::cout << json(H).dump(2) << "\n";
            else
                std::cout << turan::to_text(H);
            sink.save("hypergraph.json", json(H));
            rc = kExitHolds;
        });
    };
    make_gen("family", "three tight paths with a shared prefix; params k,t",
             [](int k, int t) { return turan::family_F(k, t); });
    make_gen("path", "tight path; params k,length",
             [](int k, int len) { return turan::tight_path(k, len); });
    make_gen("cycle", "tight cycle; params k,length",
             [](int k, int len) { return turan::tight_cycle(k, len); });

    // ---- palette ----
    auto* palette = app.add_subcommand("palette", "color-signature constructions");
    palette->require_subcommand(1);

    PaletteSource pb_src;
    auto* pbound = palette->add_subcommand("bound", "edge-probability lower bound of a palette");
    pb_src.attach(pbound);
    add_common(pbound);
    pbound->callback([&] {
        auto P = pb_src.load();
        auto lb = turan::lower_bound(P);
        std::cout << turan::to_string(lb) << " ~= " << turan::to_double(lb) << "\n";
        sink.save("palette.json", json(P));
        rc = kExitHolds;
    });

    PaletteSource pg_src;
    int pg_n = 0;
    bool pg_json = false;
    auto* pbuild = palette->add_subcommand("build", "sample a coloring and build the graph");
    pg_src.attach(pbuild);
    pbuild->add_option("--n", pg_n, "number of vertices")->required();
    pbuild->add_flag("--json", pg_json, "emit JSON instead of text");
    add_common(pbuild, true);
    pbuild->callback([&] {
        auto P = pg_src.load();
        std::cout << "seed = " << seed << "\n";
        auto psi = turan::sample_psi(pg_n, P.r, P.k, seed);
        auto H = turan::build_H(pg_n, psi, P);
        if (pg_json)
            std::cout << json(H).dump(2) << "\n";
        else
            std::cout << turan::to_text(H);
        sink.save("hypergraph.json", json(H));
        sink.save("psi.json", json(psi));
        rc = kExitHolds;
    });

    PaletteSource pa_src;
    GraphSource pa_f;
    int pa_n = 0, pa_trials = 20;
    auto* pavoid = palette->add_subcommand("avoid", "test generated graphs for F-freeness");
    pa_src.attach(pavoid);
    pa_f.attach(pavoid);
    pavoid->add_option("--n", pa_n, "number of vertices")->required();
    pavoid->add_option("--trials", pa_trials, "independent colorings to test");
    add_common(pavoid, true);
    pavoid->callback([&] {
        auto P = pa_src.load();
        auto F = pa_f.load();
        std::cout << "seed = " << seed << "\n";
        auto rep = turan::verify_palette_avoids(P, F, pa_n, pa_trials, seed);
        for (const auto& t : rep.trials)
            std::cout << "trial seed " << t.seed << ": density "
                      << turan::to_double(t.density) << ", "
                      << (t.f_free ? "F-free" : "CONTAINS F") << "\n";
        sink.save("report.json", json(rep));
        rc = rep.all_f_free ? kExitHolds : kExitRefuted;
    });

    // ---- density ----
    auto* density = app.add_subcommand("density", "denseness inequalities and concentration");
    density->require_subcommand(1);

    GraphSource dc_src;
    double dc_d = 0, dc_mu = 0;
    int dc_j = 1;
    std::string dc_mode = "sampled";
    long long dc_budget = 100;
    auto* dcheck = density->add_subcommand("check", "witness-graph denseness inequality");
    dc_src.attach(dcheck);
    dcheck->add_option("--d", dc_d, "density threshold")->required();
    dcheck->add_option("--mu", dc_mu, "slack coefficient")->required();
    dcheck->add_option("--j", dc_j, "witness uniformity");
    dcheck->add_option("--mode", dc_mode, "exact | sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    dcheck->add_option("--budget", dc_budget, "exact: max witness-set count; sampled: samples");
    add_common(dcheck, true);
    dcheck->callback([&] {
        auto H = dc_src.load();
        std::cout << "seed = " << seed << "\n";
        auto res = turan::check_j_dense(
            H, {dc_d, dc_mu, dc_j},
            dc_mode == "exact" ? turan::DenseMode::exact : turan::DenseMode::sampled, dc_budget,
            seed);
        sink.save("result.json", json(res));
        if (res.verdict == turan::DenseVerdict::holds) {
            std::cout << "holds (exact enumeration, " << res.witnesses_tried << " witnesses)\n";
            rc = kExitHolds;
        } else if (res.verdict == turan::DenseVerdict::violated) {
            std::cout << "violated, margin " << res.margin << "\n";
            rc = kExitRefuted;
        } else {
            std::cout << "unknown after " << res.witnesses_tried << " witnesses\n";
            rc = kExitUnknown;
        }
    });

    GraphSource dk_src;
    double dk_d = 0, dk_mu = 0;
    int dk_j = 1, dk_samples = 100;
    auto* dkj = density->add_subcommand("kj", "directed-family denseness over sampled families");
    dk_src.attach(dkj);
    dkj->add_option("--d", dk_d, "density threshold")->required();
    dkj->add_option("--mu", dk_mu, "slack coefficient")->required();
    dkj->add_option("--j", dk_j, "tuple arity");
    dkj->add_option("--samples", dk_samples, "random families to test");
    add_common(dkj, true);
    dkj->callback([&] {
        auto H = dk_src.load();
        std::cout << "seed = " << seed << "\n";
        auto res = turan::check_kj_dense(H, {dk_d, dk_mu, dk_j}, dk_samples, seed);
        sink.save("result.json", json(res));
        if (res.verdict == turan::DenseVerdict::violated) {
            std::cout << "violated at sample " << res.sample_index << ", margin " << res.margin
                      << "\n";
            rc = kExitRefuted;
        } else {
            std::cout << "no violation in " << res.samples_tried << " samples\n";
            rc = kExitUnknown;
        }
    });

    GraphSource de_src;
    auto* dedge = density->add_subcommand("edge", "exact edge density |E| / C(n,k)");
    de_src.attach(dedge);
    add_common(dedge);
    dedge->callback([&] {
        auto H = de_src.load();
        auto d = turan::edge_density(H);
        std::cout << turan::to_string(d) << " ~= " << turan::to_double(d) << "\n";
        rc = kExitHolds;
    });

    PaletteSource co_src;
    int co_k = 3, co_n = 30, co_trials = 100, co_witnesses = 50;
    double co_mu = 0.02;
    auto* dconc = density->add_subcommand("concentrate", "empirical concentration experiment");
    co_src.attach(dconc);
    dconc->add_option("--k", co_k, "uniformity");
    dconc->add_option("--n", co_n, "vertices per generated graph");
    dconc->add_option("--mu", co_mu, "slack coefficient");
    dconc->add_option("--trials", co_trials, "generated graphs");
    dconc->add_option("--witnesses", co_witnesses, "random witnesses per graph");
    add_common(dconc, true);
    dconc->callback([&] {
        auto P = co_src.load();
        std::cout << "seed = " << seed << "\n";
        auto rep = turan::concentration_experiment(co_k, co_n, P, co_trials, co_witnesses, co_mu,
                                                   seed);
        std::cout << "checks = " << rep.checks << ", violations = " << rep.violations
                  << " (rate " << rep.violation_rate << ")\n"
                  << "worst margin = " << rep.worst_margin << "\n"
                  << "martingale tail bound = " << rep.azuma_bound << "\n";
        sink.save("report.json", json(rep));
        rc = rep.violations == 0 ? kExitHolds : kExitRefuted;
    });

    // ---- reduced ----
    auto* reduced = app.add_subcommand("reduced", "reduced-graph certificates");
    reduced->require_subcommand(1);

    std::string ra_path, rf_path, rmap_path, ranchors_path, rcert_path, rrho, rq, rt;
    std::string rd_d;

    auto* rdense = reduced->add_subcommand("dense", "constituent density threshold check");
    rdense->add_option("--a", ra_path, "reduced graph JSON")->required();
    rdense->add_option("--d", rd_d, "threshold as p/q")->required();
    add_common(rdense);
    rdense->callback([&] {
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        bool ok = turan::is_d_dense(A, parse_rational(rd_d));
        std::cout << (ok ? "dense\n" : "not dense\n");
        rc = ok ? kExitHolds : kExitRefuted;
    });

    GraphSource rmf_f;
    auto* rmapfind = reduced->add_subcommand("map-find", "search for a reduced map");
    rmf_f.attach(rmapfind);
    rmapfind->add_option("--a", ra_path, "reduced graph JSON")->required();
    rmapfind->add_option("--budget", budget, "node budget (-1 = unbounded)");
    add_common(rmapfind);
    rmapfind->callback([&] {
        auto F = rmf_f.load();
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        auto res = turan::find_reduced_map(F, A, budget);
        std::cout << "nodes = " << res.nodes << "\n";
        if (res.status == turan::SearchStatus::found) {
            std::cout << "map found\n";
            sink.save("map.json", json(*res.map));
            rc = kExitHolds;
        } else if (res.status == turan::SearchStatus::exhausted) {
            std::cout << "no reduced map\n";
            rc = kExitRefuted;
        } else {
            std::cout << "budget exhausted, undecided\n";
            rc = kExitUnknown;
        }
    });

    GraphSource rmv_f;
    auto* rmapverify = reduced->add_subcommand("map-verify", "check a reduced map");
    rmv_f.attach(rmapverify);
    rmapverify->add_option("--a", ra_path, "reduced graph JSON")->required();
    rmapverify->add_option("--map", rmap_path, "reduced map JSON")->required();
    add_common(rmapverify);
    rmapverify->callback([&] {
        auto F = rmv_f.load();
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        auto rm = load_json(rmap_path).get<turan::ReducedMap>();
        bool ok = turan::verify_reduced_map(F, A, rm);
        std::cout << (ok ? "valid map\n" : "invalid map\n");
        rc = ok ? kExitHolds : kExitRefuted;
    });

    auto* ranchverify = reduced->add_subcommand("anchors-verify", "check an anchor family");
    ranchverify->add_option("--a", ra_path, "reduced graph JSON")->required();
    ranchverify->add_option("--anchors", ranchors_path, "anchor family JSON")->required();
    add_common(ranchverify);
    ranchverify->callback([&] {
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        auto an = load_json(ranchors_path).get<turan::AnchorFamily>();
        bool ok = turan::verify_anchors(A, an);
        std::cout << (ok ? "anchors valid\n" : "anchors invalid\n");
        rc = ok ? kExitHolds : kExitRefuted;
    });

    GraphSource ram_f;
    auto* ranchmap = reduced->add_subcommand(
        "anchors-map", "build a reduced map from anchors and a split certificate");
    ram_f.attach(ranchmap);
    ranchmap->add_option("--a", ra_path, "reduced graph JSON")->required();
    ranchmap->add_option("--anchors", ranchors_path, "anchor family JSON")->required();
    ranchmap->add_option("--cert", rcert_path, "split certificate JSON")->required();
    add_common(ranchmap);
    ranchmap->callback([&] {
        auto F = ram_f.load();
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        auto an = load_json(ranchors_path).get<turan::AnchorFamily>();
        auto cert = load_json(rcert_path).get<turan::SplitCertificate>();
        auto rm = turan::build_reduced_map_from_anchors(F, A, an, cert);
        std::cout << "map built and verified\n";
        sink.save("map.json", json(rm));
        rc = kExitHolds;
    });

    auto* ralg1 = reduced->add_subcommand("alg1", "first high-overlap pair in scan order");
    ralg1->add_option("--a", ra_path, "reduced graph JSON")->required();
    ralg1->add_option("--q", rq, "comma-separated sorted (2k-1)-index-set")->required();
    ralg1->add_option("--rho", rrho, "threshold as p/q")->required();
    add_common(ralg1);
    ralg1->callback([&] {
        auto A = load_json(ra_path).get<turan::ReducedGraph>();
        turan::IndexSet Q;
        std::istringstream in(rq);
        std::string tok;
        while (std::getline(in, tok, ',')) Q.push_back(std::stoi(tok));
        auto res = turan::algorithm1_color(A, Q, parse_rational(rrho));
        if (res) {
            std::cout << "pair (" << res->first << "," << res->second << ")\n";
            rc = kExitHolds;
        } else {
            std::cout << "no qualifying pair\n";
            rc = kExitRefuted;
        }
    });

    auto* rlem5 = reduced->add_subcommand("lemma5", "partite extension counting property");
    rlem5->add_option("--in", rf_path, "k-partite graph JSON")->required();
    rlem5->add_option("--tuple", rt, "comma-separated prefix tuple (may be empty)");
    rlem5->add_option("--rho", rrho, "threshold as p/q")->required();
    add_common(rlem5);
    rlem5->callback([&] {
        auto G = load_json(rf_path).get<turan::KPartiteGraph>();
        std::vector<int> T;
        std::istringstream in(rt);
        std::string tok;
        while (std::getline(in, tok, ',')) T.push_back(std::stoi(tok));
        auto res = turan::lemma5_bound_check(G, T, parse_rational(rrho));
        if (res == turan::Lemma5Status::holds) {
            std::cout << "holds\n";
            rc = kExitHolds;
        } else if (res == turan::Lemma5Status::fails) {
            std::cout << "fails\n";
            rc = kExitRefuted;
        } else {
            std::cout << "precondition not met\n";
            rc = kExitUnknown;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    sink.finish(seed);
    return rc;
}
