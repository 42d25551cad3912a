// File formats and report emission. All artifacts are plain text, all
// rationals are "num/den" strings, and every writer is deterministic so that
// identical inputs produce byte-identical files. Writes go through a
// temp-then-rename step.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "progen/census.hpp"
#include "progen/cohomology.hpp"
#include "progen/tower.hpp"

namespace progen {

using ordered_json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// ---- matrix text format -------------------------------------------------------
// First line "q rows cols", then one line per row of space-separated integer
// entry codes (base-p digit i = coefficient of the i-th generator power).

inline std::string write_matrix(const Mat& m) {
    std::ostringstream os;
    os << m.field().q() << " " << m.rows() << " " << m.cols() << "\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.get(i, j);
        os << "\n";
    }
    return os.str();
}

inline Mat read_matrix(std::istream& in) {
    uint32_t q;
    size_t rows, cols;
    if (!(in >> q >> rows >> cols)) throw ConfigError("matrix: bad header line");
    const Field& F = Field::for_q(q);
    Mat m(F, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            long long v;
            if (!(in >> v) || v < 0 || v >= q) throw ConfigError("matrix: bad entry");
            m.set(i, j, static_cast<fel>(v));
        }
    return m;
}

// ---- group file format ----------------------------------------------------------
// Line 1: "degree n"; each further nonempty line one permutation in cycle form.

inline std::string write_group(const PermGroup& G) {
    std::ostringstream os;
    os << "degree " << G.degree() << "\n";
    for (const Perm& g : G.gens()) os << g.cycles() << "\n";
    return os.str();
}

inline PermGroup read_group(std::istream& in, const std::string& name = "") {
    std::string word;
    size_t degree;
    if (!(in >> word >> degree) || word != "degree") throw ConfigError("group: bad header");
    std::string line;
    std::getline(in, line);
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        gens.push_back(Perm::parse_cycles(line, degree));
    }
    return PermGroup(degree, std::move(gens), name);
}

// Group by registry id or by file path.
inline PermGroup resolve_group(const std::string& id_or_path) {
    if (std::filesystem::exists(id_or_path)) {
        std::ifstream in(id_or_path);
        return read_group(in, id_or_path);
    }
    return named_group(id_or_path);
}

// ---- module file format ----------------------------------------------------------
// Header "group <id-or-path> q <q> dim <d>", then one matrix block per
// generator in the matrix text format.

inline std::string write_module(const GModule& M, const std::string& group_ref) {
    std::ostringstream os;
    os << "group " << group_ref << " q " << M.field().q() << " dim " << M.dim() << "\n";
    for (size_t gi = 0; gi < M.num_gens(); ++gi) os << write_matrix(M.gen_matrix(gi));
    return os.str();
}

inline GModule read_module(std::istream& in) {
    std::string kw1, group_ref, kw2, kw3;
    uint32_t q;
    size_t dim;
    if (!(in >> kw1 >> group_ref >> kw2 >> q >> kw3 >> dim) || kw1 != "group" || kw2 != "q" || kw3 != "dim")
        throw ConfigError("module: bad header");
    PermGroup G = resolve_group(group_ref);
    const Field& F = Field::for_q(q);
    std::vector<Mat> action;
    for (size_t gi = 0; gi < G.gens().size(); ++gi) {
        Mat m = read_matrix(in);
        if (m.rows() != dim || m.cols() != dim || m.field().q() != q)
            throw ConfigError("module: generator matrix block mismatch");
        action.push_back(std::move(m));
    }
    return GModule(G, F, dim, std::move(action));
}

// ---- census serialization ----------------------------------------------------------

inline ordered_json census_json(const IrrCensus& c, const std::string& group_ref,
                                bool with_matrices = false) {
    ordered_json out = ordered_json::array();
    for (const IrrClass& cls : c.classes) {
        ordered_json e;
        e["label"] = cls.label;
        e["dim"] = cls.module.dim();
        e["q_M"] = cls.endo_size;
        e["r"] = cls.r;
        if (with_matrices) e["module"] = write_module(cls.module, group_ref);
        out.push_back(e);
    }
    return out;
}

inline IrrCensus census_from_json(const ordered_json& j, uint32_t q) {
    IrrCensus c;
    c.q = q;
    c.complete = true;
    for (const auto& e : j) {
        std::istringstream ms(e.at("module").get<std::string>());
        GModule m = read_module(ms);
        IrrClass cls{std::move(m), e.at("q_M").get<unsigned long long>(), 0, e.at("r").get<uint32_t>(),
                     e.at("label").get<std::string>(), ""};
        unsigned long long t = cls.endo_size;
        while (t > 1) { t /= q; ++cls.f; }
        cls.fingerprint = module_fingerprint(cls.module);
        c.classes.push_back(std::move(cls));
    }
    return c;
}

// ---- growth table ----------------------------------------------------------

namespace detail_io {
inline std::vector<std::string> numeric_sorted_keys(const std::map<std::string, GrowthTable::Row>& rows) {
    std::vector<std::string> keys;
    for (const auto& [k, row] : rows) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
        return BigInt::from_string(a) < BigInt::from_string(b);
    });
    return keys;
}
}  // namespace detail_io

inline std::string growth_csv(const GrowthTable& t) {
    std::ostringstream os;
    os << "prime,degree,order_k,sum,nonzero_count,total_classes\n";
    for (const std::string& k : detail_io::numeric_sorted_keys(t.rows)) {
        const auto& row = t.rows.at(k);
        os << t.prime << "," << t.degree << "," << k << "," << row.sum.str() << "," << row.nonzero << ","
           << row.total << "\n";
    }
    return os.str();
}

inline ordered_json growth_json(const GrowthTable& t) {
    ordered_json out;
    out["prime"] = t.prime;
    out["degree"] = t.degree;
    ordered_json rows = ordered_json::array();
    for (const std::string& k : detail_io::numeric_sorted_keys(t.rows)) {
        const auto& row = t.rows.at(k);
        ordered_json r;
        r["order"] = k;
        r["sum"] = row.sum.str();
        r["nonzero_count"] = row.nonzero;
        r["total_classes"] = row.total;
        r["nonzero_labels"] = row.nonzero_labels;
        rows.push_back(r);
    }
    out["rows"] = rows;
    return out;
}

// ---- tower spec and reports ----------------------------------------------------------
// Spec file: {"levels": [[{"factor": "A5", "mult": 2}], ...]}

inline TowerSpec parse_tower_spec(const ordered_json& j) {
    TowerSpec spec;
    if (!j.contains("levels")) throw ConfigError("tower spec: missing 'levels'");
    for (const auto& lvl : j.at("levels")) {
        TowerLevel level;
        for (const auto& f : lvl) {
            for (auto it = f.begin(); it != f.end(); ++it)
                if (it.key() != "factor" && it.key() != "mult")
                    throw ConfigError("tower spec: unknown key '" + it.key() + "'");
            level.push_back(TowerFactor{f.at("factor").get<std::string>(),
                                        f.value("mult", static_cast<size_t>(1))});
        }
        spec.levels.push_back(std::move(level));
    }
    spec.validate();
    return spec;
}

inline std::string tower_csv(const std::vector<LevelReport>& reports) {
    std::ostringstream os;
    os << "level,prime,order,total,h1_sum,h1_nonzero\n";
    for (const LevelReport& rep : reports) {
        for (size_t i = 0; i < rep.total.points.size(); ++i)
            os << rep.total.level + 1 << "," << rep.total.prime << "," << rep.total.points[i].first.str()
               << "," << rep.total.points[i].second.str() << "," << rep.h1_sum.points[i].second.str()
               << "," << rep.h1_nonzero.points[i].second.str() << "\n";
    }
    return os.str();
}

// Plot data: two-column log-log pairs (log2 order, log2 cumulative count).
inline std::string tower_plot_data(const GrowthSeries& s) {
    std::ostringstream os;
    BigInt cum(0);
    os.precision(8);
    os << std::fixed;
    for (const auto& [k, v] : s.points) {
        cum += v;
        if (cum.is_zero()) continue;
        double lk = k.fits_u64() ? std::log2(static_cast<double>(k.to_u64()))
                                 : (static_cast<double>(k.str().size()) - 1) * 3.3219280948873623;
        os << lk << " " << std::log2(cum.to_double()) << "\n";
    }
    return os.str();
}

// ---- atomic write + cache ----------------------------------------------------------

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

// FNV-1a content hash; cache keys only, no cryptographic claims.
inline std::string content_hash(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Census memoized under PROGEN_CACHE_DIR, keyed by the group encoding and q.
inline IrrCensus irr_census_cached(const PermGroup& G, const Field& F, const std::string& group_ref,
                                   uint64_t seed = 2024, size_t cap = Caps::global().chop) {
    const char* dir = std::getenv("PROGEN_CACHE_DIR");
    if (!dir || !*dir) return irr_census(G, F, seed, cap);
    std::string key = content_hash(write_group(G) + "#q" + std::to_string(F.q()));
    std::filesystem::path path = std::filesystem::path(dir) / ("census-" + key + ".json");
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        ordered_json j = ordered_json::parse(in);
        return census_from_json(j, F.q());
    }
    IrrCensus c = irr_census(G, F, seed, cap);
    std::filesystem::create_directories(dir);
    atomic_write(path, census_json(c, group_ref, /*with_matrices=*/true).dump(1));
    return c;
}

}  // namespace progen
