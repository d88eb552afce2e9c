#include "sixvertex/enumerate.hpp"

#include <map>
#include <mutex>

namespace sixvertex {

namespace {

// key = W<<3 | E<<2 | N<<1 | S with the edge encoding of Configuration
// (W,E: 1 = east; N,S: 1 = south). Ice-rule-violating keys map to 0.
constexpr std::array<int, 16> kTypeTable = [] {
    std::array<int, 16> t{};
    t[0b1100] = 1;
    t[0b0011] = 2;
    t[0b1111] = 3;
    t[0b0000] = 4;
    t[0b0110] = 5;
    t[0b1001] = 6;
    return t;
}();

struct Dfs {
    int n;
    Configuration cfg;
    TypeCounts counts;
    const std::function<void(const Configuration&)>* visit;

    std::uint8_t& h(int i, int j) { return cfg.h[i * (n + 1) + j]; }
    std::uint8_t& v(int i, int j) { return cfg.v[i * n + j]; }

    void run() {
        for (int j = 0; j < n; ++j) v(0, j) = 1;
        for (int i = 0; i < n; ++i) {
            h(i, 0) = 0;
            h(i, n) = 1;
        }
        walk(0, 0);
    }

    // Fix vertex (i, j): W and N edges are already assigned; enumerate the
    // admissible (E, S) pairs.
    void walk(int i, int j) {
        if (j == n) {
            if (i + 1 == n) {
                (*visit)(cfg);
                return;
            }
            walk(i + 1, 0);
            return;
        }
        int w = h(i, j), nn = v(i, j);
        int known_in = w + nn;  // W in iff east, N in iff south
        for (int e = 0; e <= 1; ++e) {
            for (int s = 0; s <= 1; ++s) {
                // E in iff west (e == 0), S in iff north (s == 0)
                if (known_in + (1 - e) + (1 - s) != 2) continue;
                if (j == n - 1 && e != 1) continue;      // right boundary out
                if (i == n - 1 && s != 0) continue;      // bottom boundary in
                h(i, j + 1) = static_cast<std::uint8_t>(e);
                v(i + 1, j) = static_cast<std::uint8_t>(s);
                int type = kTypeTable[w << 3 | e << 2 | nn << 1 | s];
                ++counts.n[type];
                walk(i, j + 1);
                --counts.n[type];
            }
        }
    }
};

// Under DWBC the counts obey N2 = N1, N4 = N3, N6 = N5 - n, so a weighted sum
// only needs the multiplicity of each (N1, N3, N5) triple. Tables are cached
// per (n, symmetric) since enumeration dominates repeated evaluations.
struct TripleTable {
    std::map<std::array<int, 3>, long long> mult;
};

const TripleTable& triple_table(int n, bool symmetric_only, int n_max) {
    static std::map<std::pair<int, bool>, TripleTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, symmetric_only);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    TripleTable table;
    Dfs dfs;
    dfs.n = n;
    dfs.cfg.n = n;
    dfs.cfg.h.assign(n * (n + 1), 0);
    dfs.cfg.v.assign((n + 1) * n, 0);
    std::function<void(const Configuration&)> visit = [&](const Configuration& cfg) {
        if (symmetric_only && !is_half_turn_symmetric(cfg)) return;
        const auto& c = dfs.counts;
        ++table.mult[{static_cast<int>(c.n[1]), static_cast<int>(c.n[3]),
                      static_cast<int>(c.n[5])}];
    };
    dfs.visit = &visit;
    if (n < 1) throw DomainError("lattice size must be >= 1");
    if (n > n_max) throw ResourceLimitError("lattice size exceeds enumeration limit");
    dfs.run();
    return cache.emplace(key, std::move(table)).first->second;
}

template <typename T>
T weighted_sum(int n, const std::array<T, 6>& w, bool symmetric_only, int n_max) {
    for (const T& wi : w)
        if (!(wi > 0)) throw DomainError("vertex weights must be positive");
    const TripleTable& table = triple_table(n, symmetric_only, n_max);
    T z(0);
    for (const auto& [key, mult] : table.mult) {
        auto [n1, n3, n5] = key;
        int n6 = n5 - n;
        T term = pow(w[0], n1) * pow(w[1], n1) * pow(w[2], n3) * pow(w[3], n3) *
                 pow(w[4], n5) * pow(w[5], n6);
        z += term * T(mult);
    }
    return z;
}

}  // namespace

int vertex_type(const Configuration& cfg, int i, int j) {
    int key = cfg.hedge(i, j) << 3 | cfg.hedge(i, j + 1) << 2 | cfg.vedge(i, j) << 1 |
              cfg.vedge(i + 1, j);
    int type = kTypeTable[key];
    if (type == 0) throw DomainError("configuration violates the ice rule");
    return type;
}

TypeCounts type_counts(const Configuration& cfg) {
    TypeCounts counts;
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j) ++counts.n[vertex_type(cfg, i, j)];
    return counts;
}

bool is_half_turn_symmetric(const Configuration& cfg) {
    const int n = cfg.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j)
            if (cfg.hedge(i, j) != 1 - cfg.hedge(n - 1 - i, n - j)) return false;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j)
            if (cfg.vedge(i, j) != 1 - cfg.vedge(n - i, n - 1 - j)) return false;
    return true;
}

void enumerate_dwbc(int n, const std::function<void(const Configuration&)>& visit,
                    int n_max) {
    if (n < 1) throw DomainError("lattice size must be >= 1");
    if (n > n_max) throw ResourceLimitError("lattice size exceeds enumeration limit");
    Dfs dfs;
    dfs.n = n;
    dfs.cfg.n = n;
    dfs.cfg.h.assign(n * (n + 1), 0);
    dfs.cfg.v.assign((n + 1) * n, 0);
    dfs.visit = &visit;
    dfs.run();
}

std::uint64_t count_dwbc(int n, bool symmetric_only, int n_max) {
    std::uint64_t count = 0;
    for (const auto& [key, mult] : triple_table(n, symmetric_only, n_max).mult)
        count += static_cast<std::uint64_t>(mult);
    return count;
}

Eigen::MatrixXi config_to_asm(const Configuration& cfg) {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(cfg.n, cfg.n);
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j) {
            int type = vertex_type(cfg, i, j);
            if (type == 5) a(i, j) = 1;
            if (type == 6) a(i, j) = -1;
        }
    return a;
}

Real partition_ht(int n, const std::array<Real, 6>& w, int n_max) {
    if (n % 2 != 0) throw DomainError("half-turn partition sum requires even lattice size");
    return weighted_sum(n, w, true, n_max);
}

Real partition_dwbc(int n, const std::array<Real, 6>& w, int n_max) {
    return weighted_sum(n, w, false, n_max);
}

Rational partition_ht(int n, const std::array<Rational, 6>& w, int n_max) {
    if (n % 2 != 0) throw DomainError("half-turn partition sum requires even lattice size");
    return weighted_sum(n, w, true, n_max);
}

Rational partition_dwbc(int n, const std::array<Rational, 6>& w, int n_max) {
    return weighted_sum(n, w, false, n_max);
}

}  // namespace sixvertex
