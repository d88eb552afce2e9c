#ifndef SIXVERTEX_ENUMERATE_HPP
#define SIXVERTEX_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "sixvertex/real.hpp"

namespace sixvertex {

// Full arrow assignment on an N x N vertex lattice. Rows run top to bottom.
//
//   h(i, j), j = 0..N: horizontal edge left of column j in row i
//            (j = 0 left boundary, j = N right boundary); 1 = arrow east.
//   v(i, j), i = 0..N: vertical edge above row i in column j
//            (i = 0 top boundary, i = N bottom boundary); 1 = arrow south.
//
// DWBC: h(i,0) = 0 (out, west), h(i,N) = 1 (out, east),
//       v(0,j) = 1 (in, south), v(N,j) = 0 (in, north).
struct Configuration {
    int n = 0;
    std::vector<std::uint8_t> h;  // n * (n+1)
    std::vector<std::uint8_t> v;  // (n+1) * n

    std::uint8_t hedge(int i, int j) const { return h[i * (n + 1) + j]; }
    std::uint8_t vedge(int i, int j) const { return v[i * n + j]; }
};

struct TypeCounts {
    std::array<long, 7> n{};  // n[1]..n[6]; n[0] unused

    long total() const { return n[1] + n[2] + n[3] + n[4] + n[5] + n[6]; }
};

// Vertex types, Figure-2 labeling. Edge picture at a vertex (W,E horizontal;
// N,S vertical), arrows drawn as they point:
//
//   type 1      type 2      type 3      type 4      type 5      type 6
//     ^           |           |           ^           |           ^
//   ->+->       <-+<-       ->+->       <-+<-       <-+->       ->+<-
//     ^           |           |           ^           ^           |
//
//  1: all horizontals east, all verticals north     (a-type)
//  2: all horizontals west, all verticals south     (a-type)
//  3: all horizontals east, all verticals south     (b-type)
//  4: all horizontals west, all verticals north     (b-type)
//  5: in from N and S, out W and E                  (c-type)
//  6: in from W and E, out N and S                  (c-type)
int vertex_type(const Configuration& cfg, int i, int j);

TypeCounts type_counts(const Configuration& cfg);

// True iff the configuration is fixed by a 180-degree rotation of the lattice
// (edges map to their rotated images with the arrow direction reversed).
bool is_half_turn_symmetric(const Configuration& cfg);

// Calls visit for every DWBC ice configuration exactly once. The reference is
// to DFS-internal state; copy it if it must outlive the call.
void enumerate_dwbc(int n, const std::function<void(const Configuration&)>& visit,
                    int n_max = 8);

std::uint64_t count_dwbc(int n, bool symmetric_only = false, int n_max = 8);

// The +-1 matrix of c-vertices: type 5 -> +1, type 6 -> -1.
Eigen::MatrixXi config_to_asm(const Configuration& cfg);

// Weighted partition sums, Z = sum over configurations of prod w_i^{N_i}.
// partition_ht keeps only half-turn-symmetric configurations and requires n
// even. Exact-rational overloads give bit-exact values at rational weights.
Real partition_ht(int n, const std::array<Real, 6>& w, int n_max = 8);
Real partition_dwbc(int n, const std::array<Real, 6>& w, int n_max = 8);
Rational partition_ht(int n, const std::array<Rational, 6>& w, int n_max = 8);
Rational partition_dwbc(int n, const std::array<Rational, 6>& w, int n_max = 8);

}  // namespace sixvertex

#endif
