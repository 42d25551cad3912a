// progen: batch front door for the library. Job configs are strict JSON
// (unknown keys rejected), all outputs are deterministic for a fixed config
// and seed, and artifact writes are atomic.
//
// Exit codes: 0 ok, 2 config error, 3 cap exceeded, 4 compute failure,
// 5 verify suite reported failures, 1 unexpected error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "progen/verify.hpp"

using namespace progen;
namespace fs = std::filesystem;

namespace {

constexpr uint64_t kDefaultSeed = 2024;

struct JobEnv {
    fs::path out_dir = ".";
    std::optional<uint64_t> seed;
    uint64_t seed_or_default() const { return seed.value_or(kDefaultSeed); }
};

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw ConfigError("config: unknown key '" + it.key() + "'");
    }
}

ordered_json load_config(const std::string& path) {
    if (path.empty()) return ordered_json::object();
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: bad JSON: ") + e.what());
    }
}

void emit(const JobEnv& env, const std::string& name, const std::string& content) {
    fs::create_directories(env.out_dir);
    atomic_write(env.out_dir / name, content);
    std::cout << "wrote " << (env.out_dir / name).string() << "\n";
}

GModule module_from_config(const ordered_json& m) {
    reject_unknown_keys(m, {"source", "group", "q", "path"});
    std::string source = m.at("source").get<std::string>();
    if (source == "file") {
        std::ifstream in(m.at("path").get<std::string>());
        if (!in) throw ConfigError("module: cannot open " + m.at("path").get<std::string>());
        return read_module(in);
    }
    PermGroup G = resolve_group(m.at("group").get<std::string>());
    const Field& F = Field::for_q(m.at("q").get<uint32_t>());
    if (source == "regular") return regular_module(G, F);
    if (source == "augmentation") return augmentation_module(G, F);
    if (source == "trivial") return trivial_module(G, F);
    throw ConfigError("module: unknown source '" + source + "'");
}

int cmd_genprob(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"mode", "group", "k", "mc_trials", "module", "enum_oracle", "subgroup"});
    std::string mode = cfg.value("mode", std::string("group"));
    unsigned k = cfg.at("k").get<unsigned>();
    ordered_json out;
    out["mode"] = mode;
    out["k"] = k;
    unsigned long long trials = cfg.value("mc_trials", 0ull);
    if (trials && !env.seed) throw ConfigError("genprob: --seed is mandatory for Monte-Carlo jobs");

    if (mode == "group") {
        PermGroup G = resolve_group(cfg.at("group").get<std::string>());
        out["group"] = cfg.at("group").get<std::string>();
        out["probability"] = gen_prob_exact(G, k).str();
        if (trials) {
            McEstimate mc = gen_prob_mc(G, k, trials, *env.seed);
            ordered_json mj;
            mj["trials"] = trials;
            mj["seed"] = *env.seed;
            mj["estimate"] = mc.estimate;
            mj["sigma"] = mc.sigma;
            mj["ci_low"] = mc.ci_low;
            mj["ci_high"] = mc.ci_high;
            mj["successes"] = mc.successes;
            out["mc"] = mj;
        }
    } else if (mode == "module") {
        GModule M = module_from_config(cfg.at("module"));
        out["dim"] = M.dim();
        out["q"] = M.field().q();
        out["probability"] = module_gen_prob(M, k, env.seed_or_default()).str();
        out["min_generators"] = min_generators(M, env.seed_or_default());
        if (cfg.value("enum_oracle", false))
            out["probability_enumerated"] = module_gen_prob_enum(M, k).str();
        if (trials) {
            ModuleMcEstimate mc = module_gen_prob_mc(M, k, trials, *env.seed);
            ordered_json mj;
            mj["trials"] = trials;
            mj["seed"] = *env.seed;
            mj["estimate"] = mc.estimate;
            mj["sigma"] = mc.sigma;
            mj["successes"] = mc.successes;
            out["mc"] = mj;
        }
    } else if (mode == "normal") {
        PermGroup G = resolve_group(cfg.at("group").get<std::string>());
        out["group"] = cfg.at("group").get<std::string>();
        std::vector<uint32_t> seed_elems;
        const ElementTable& T = G.elements();
        for (const auto& s : cfg.at("subgroup")) {
            Perm p = Perm::parse_cycles(s.get<std::string>(), G.degree());
            auto idx = T.index_of(p);
            if (!idx) throw ConfigError("genprob: subgroup generator not in group");
            seed_elems.push_back(*idx);
        }
        Subgroup A = normal_closure_elems(G, T, seed_elems);
        out["subgroup_order"] = A.elems.size();
        out["probability"] = normal_gen_prob(G, A, k).str();
        if (trials) {
            McEstimate mc = normal_gen_prob_mc(G, A, k, trials, *env.seed);
            ordered_json mj;
            mj["trials"] = trials;
            mj["seed"] = *env.seed;
            mj["estimate"] = mc.estimate;
            mj["sigma"] = mc.sigma;
            mj["successes"] = mc.successes;
            out["mc"] = mj;
        }
    } else {
        throw ConfigError("genprob: unknown mode '" + mode + "'");
    }
    emit(env, "genprob.json", out.dump(1) + "\n");
    return 0;
}

int cmd_lattice(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group"});
    PermGroup G = resolve_group(cfg.at("group").get<std::string>());
    SubgroupLattice L(G);
    auto maxs = L.maximal_subgroups();
    std::vector<bool> is_max(L.size(), false);
    for (size_t i : maxs) is_max[i] = true;
    std::ostringstream csv;
    csv << "index,order,mobius,normal,maximal\n";
    for (size_t i = 0; i < L.size(); ++i)
        csv << i << "," << L.at(i).order() << "," << L.mobius(i) << "," << (L.is_normal(i) ? 1 : 0)
            << "," << (is_max[i] ? 1 : 0) << "\n";
    emit(env, "lattice.csv", csv.str());
    ordered_json out;
    out["group"] = cfg.at("group").get<std::string>();
    out["subgroups"] = L.size();
    out["maximal"] = maxs.size();
    out["mobius_bottom"] = L.mobius(L.bottom());
    emit(env, "lattice.json", out.dump(1) + "\n");
    return 0;
}

int cmd_frattini(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group"});
    PermGroup G = resolve_group(cfg.at("group").get<std::string>());
    SubgroupLattice L(G);
    Subgroup phi = L.frattini();
    ordered_json out;
    out["group"] = cfg.at("group").get<std::string>();
    out["order"] = phi.order();
    ordered_json elems = ordered_json::array();
    for (uint32_t e : phi.elems) elems.push_back(L.table().perm(e).cycles());
    out["elements"] = elems;
    emit(env, "frattini.json", out.dump(1) + "\n");
    return 0;
}

int cmd_census(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group", "p", "splitting_field", "include_matrices"});
    std::string gid = cfg.at("group").get<std::string>();
    PermGroup G = resolve_group(gid);
    uint32_t p = cfg.at("p").get<uint32_t>();
    bool with_mats = cfg.value("include_matrices", false);
    if (cfg.value("splitting_field", false)) {
        IrrCensus base = irr_census_cached(G, Field::get(p), gid, env.seed_or_default());
        uint32_t f = 1;
        for (const IrrClass& c : base.classes) f = std::lcm(f, c.f);
        const Field& E = Field::get(p, f);
        std::vector<IrrClass> split;
        for (const IrrClass& c : base.classes) {
            auto parts = (f == 1 && c.f == 1) ? std::vector<IrrClass>{c}
                                              : splitting_classes(c, E, env.seed_or_default());
            for (auto& s : parts) split.push_back(std::move(s));
        }
        sort_and_label(split, E.q());
        IrrCensus sc;
        sc.q = E.q();
        sc.classes = std::move(split);
        sc.complete = true;
        emit(env, "census.json", census_json(sc, gid, with_mats).dump(1) + "\n");
    } else {
        IrrCensus c = irr_census_cached(G, Field::get(p), gid, env.seed_or_default());
        emit(env, "census.json", census_json(c, gid, with_mats).dump(1) + "\n");
    }
    return 0;
}

int cmd_resolution(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group", "p", "length", "module"});
    PermGroup G = resolve_group(cfg.at("group").get<std::string>());
    uint32_t p = cfg.at("p").get<uint32_t>();
    size_t length = cfg.value("length", static_cast<size_t>(2));
    ProjectiveContext ctx(G, Field::get(p), env.seed_or_default());
    GModule N = cfg.contains("module") ? module_from_config(cfg.at("module"))
                                       : trivial_module(G, Field::get(p));
    Resolution res = minimal_resolution_of(ctx, N, length);
    ordered_json out;
    out["group"] = cfg.at("group").get<std::string>();
    out["p"] = p;
    out["length"] = length;
    ordered_json terms = ordered_json::array();
    for (size_t i = 0; i < res.terms.size(); ++i) {
        ordered_json t;
        t["dim"] = res.terms[i].dim();
        ordered_json sum = ordered_json::array();
        for (size_t s : res.summands[i]) sum.push_back(ctx.census().classes[s].label);
        t["summands"] = sum;
        t["kernel_dim"] = res.kernel_modules[i].dim();
        if (i > 0) t["boundary_rank"] = res.boundary[i - 1].rank();
        terms.push_back(t);
    }
    out["terms"] = terms;
    emit(env, "resolution.json", out.dump(1) + "\n");
    return 0;
}

int cmd_cohom(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group", "p", "degrees", "module", "decomposition"});
    PermGroup G = resolve_group(cfg.at("group").get<std::string>());
    uint32_t p = cfg.at("p").get<uint32_t>();
    std::vector<size_t> degrees{0, 1, 2};
    if (cfg.contains("degrees")) degrees = cfg.at("degrees").get<std::vector<size_t>>();
    ordered_json out;
    out["group"] = cfg.at("group").get<std::string>();
    out["p"] = p;
    ordered_json rows = ordered_json::array();
    auto run_one = [&](const std::string& label, const GModule& M) {
        ordered_json r;
        r["module"] = label;
        r["dim"] = M.dim();
        for (size_t n : degrees) r["h" + std::to_string(n)] = h_dim(M, n);
        if (cfg.value("decomposition", false)) {
            H1Decomposition d = h1_decomposition(G, M, env.seed_or_default());
            r["h1_over_endo"] = d.h1;
            r["delta"] = d.delta;
            r["h_prime"] = d.h_prime;
            r["h1_equals_delta_plus_hprime"] = d.consistent;
        }
        rows.push_back(r);
    };
    if (cfg.contains("module")) {
        run_one("input", module_from_config(cfg.at("module")));
    } else {
        IrrCensus c = irr_census_cached(G, Field::get(p), cfg.at("group").get<std::string>(),
                                        env.seed_or_default());
        for (const IrrClass& cls : c.classes) run_one(cls.label, cls.module);
    }
    out["modules"] = rows;
    emit(env, "cohom.json", out.dump(1) + "\n");
    return 0;
}

int cmd_growth(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"group", "p", "degree"});
    std::string gid = cfg.at("group").get<std::string>();
    PermGroup G = resolve_group(gid);
    uint32_t p = cfg.at("p").get<uint32_t>();
    size_t degree = cfg.value("degree", static_cast<size_t>(1));
    IrrCensus c = irr_census_cached(G, Field::get(p), gid, env.seed_or_default());
    GrowthTable t = growth_sums(G, p, degree, c);
    emit(env, "growth.csv", growth_csv(t));
    emit(env, "growth.json", growth_json(t).dump(1) + "\n");
    return 0;
}

int cmd_tower(const ordered_json& cfg, const JobEnv& env) {
    reject_unknown_keys(cfg, {"spec", "spec_file", "p", "order_cap", "levels"});
    TowerSpec spec;
    if (cfg.contains("spec_file")) {
        std::ifstream in(cfg.at("spec_file").get<std::string>());
        if (!in) throw ConfigError("tower: cannot open spec file");
        spec = parse_tower_spec(ordered_json::parse(in));
    } else if (cfg.contains("spec")) {
        spec = parse_tower_spec(cfg.at("spec"));
    } else {
        throw ConfigError("tower: need 'spec' or 'spec_file'");
    }
    uint32_t p = cfg.at("p").get<uint32_t>();
    size_t cap = cfg.value("order_cap", static_cast<size_t>(16));
    size_t lo = 0, hi = spec.levels.size();
    if (cfg.contains("levels")) {
        auto lv = cfg.at("levels").get<std::vector<size_t>>();
        if (lv.size() != 2 || lv[0] < 1 || lv[1] > spec.levels.size() || lv[0] > lv[1])
            throw ConfigError("tower: 'levels' must be [first,last], 1-based");
        lo = lv[0] - 1;
        hi = lv[1];
    }
    std::vector<LevelReport> reports;
    for (size_t level = lo; level < hi; ++level)
        reports.push_back(growth_report_level(spec, level, p, cap, env.seed_or_default()));
    emit(env, "tower.csv", tower_csv(reports));
    ordered_json fits = ordered_json::array();
    for (const LevelReport& r : reports) {
        for (const GrowthSeries* s : {&r.total, &r.h1_sum, &r.h1_nonzero}) {
            ordered_json f;
            f["level"] = s->level + 1;
            f["statistic"] = s->statistic;
            if (s->fitted_slope) f["slope"] = *s->fitted_slope;
            else f["slope"] = nullptr;
            f["superpolynomial"] = s->superpolynomial;
            fits.push_back(f);
        }
    }
    emit(env, "tower_fits.json", fits.dump(1) + "\n");
    for (const LevelReport& r : reports) {
        std::string suffix = "level" + std::to_string(r.total.level + 1) + ".dat";
        emit(env, "plot_total_" + suffix, tower_plot_data(r.total));
        emit(env, "plot_h1sum_" + suffix, tower_plot_data(r.h1_sum));
    }
    return 0;
}

int cmd_verify(const ordered_json& cfg, const JobEnv& env, const std::string& suite_flag) {
    reject_unknown_keys(cfg, {"suite", "include_heavy"});
    std::string suite = !suite_flag.empty() ? suite_flag : cfg.value("suite", std::string("all"));
    bool heavy = cfg.value("include_heavy", false);
    std::vector<std::string> ids =
        suite == "all" ? verify_suite_ids() : std::vector<std::string>{suite};
    ordered_json out = ordered_json::array();
    size_t failures = 0;
    for (const std::string& id : ids) {
        VerifyReport rep = run_verify_suite(id, env.seed_or_default(), heavy);
        for (const VerifyItem& item : rep.items) {
            std::cout << (item.pass ? "PASS" : "FAIL") << " [" << rep.suite << "] " << item.invariant
                      << " :: " << item.instance;
            if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
            std::cout << "\n";
            ordered_json j;
            j["suite"] = rep.suite;
            j["invariant"] = item.invariant;
            j["instance"] = item.instance;
            j["pass"] = item.pass;
            j["detail"] = item.detail;
            out.push_back(j);
            if (!item.pass) ++failures;
        }
    }
    emit(env, "verify.json", out.dump(1) + "\n");
    std::cout << (failures ? "FAILURES: " : "all passed: ") << out.size() - failures << "/" << out.size()
              << " checks\n";
    return failures ? 5 : 0;
}

void apply_cap_override(const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--cap-override expects KEY=VAL");
    std::string key = kv.substr(0, eq);
    unsigned long long val = std::stoull(kv.substr(eq + 1));
    Caps& caps = Caps::global();
    if (key == "lattice") caps.lattice = val;
    else if (key == "element-enum") caps.element_enum = val;
    else if (key == "chop") caps.chop = val;
    else if (key == "projective") caps.projective = val;
    else if (key == "bar-columns") caps.bar_columns = val;
    else if (key == "tuple-enum") caps.tuple_enum = val;
    else if (key == "extension-order") caps.extension_order = val;
    else throw ConfigError("--cap-override: unknown key '" + key + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"progen: exact generation probabilities, module censuses, cohomology and growth reports for finite groups"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", suite_flag;
    std::optional<uint64_t> seed;
    std::vector<std::string> cap_overrides;
    app.add_option("--config", config_path, "job config JSON path")->expected(1);
    app.add_option("--seed", seed, "master seed (mandatory for stochastic jobs)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--cap-override", cap_overrides, "override a cap, KEY=VAL");

    auto* genprob = app.add_subcommand("genprob", "generation probabilities (group|module|normal)");
    auto* lattice = app.add_subcommand("lattice", "subgroup lattice with Mobius values");
    auto* frattini = app.add_subcommand("frattini", "Frattini subgroup");
    auto* census = app.add_subcommand("census", "irreducible module census");
    auto* resolution = app.add_subcommand("resolution", "minimal projective resolution");
    auto* cohom = app.add_subcommand("cohom", "bar-resolution cohomology dimensions");
    auto* growth = app.add_subcommand("growth", "cohomology growth table over a census");
    auto* tower = app.add_subcommand("tower", "tower census and growth report");
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("--suite", suite_flag, "suite id (default: all)");
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const std::string& kv : cap_overrides) apply_cap_override(kv);
        ordered_json cfg = load_config(config_path);
        JobEnv env{out_dir, seed};
        if (genprob->parsed()) return cmd_genprob(cfg, env);
        if (lattice->parsed()) return cmd_lattice(cfg, env);
        if (frattini->parsed()) return cmd_frattini(cfg, env);
        if (census->parsed()) return cmd_census(cfg, env);
        if (resolution->parsed()) return cmd_resolution(cfg, env);
        if (cohom->parsed()) return cmd_cohom(cfg, env);
        if (growth->parsed()) return cmd_growth(cfg, env);
        if (tower->parsed()) return cmd_tower(cfg, env);
        if (verify->parsed()) return cmd_verify(cfg, env, suite_flag);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ComputeError& e) {
        std::cerr << "compute failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
