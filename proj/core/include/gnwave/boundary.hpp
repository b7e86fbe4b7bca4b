#pragma once

#include <vector>

namespace gnwave {

enum class Bc { periodic, wall, open };

/// Reflection parity of a field at a wall: water height is even (Neumann
/// image), discharge is odd (Dirichlet image). Open boundaries always use
/// the even image; periodic wraps and ignores parity.
enum class Parity { even, odd };

struct BcPair {
    Bc left = Bc::periodic;
    Bc right = Bc::periodic;
};

bool is_periodic(BcPair bc); // validates that periodic is two-sided

/// Pad a cell-average field with k ghost layers per side.
/// Ghost relations (1-based cells w_1..w_N, k >= 1):
///   periodic: w_{1-k} = w_{N+1-k},  w_{N+k} = w_k
///   even:     w_{1-k} = w_k,        w_{N+k} = w_{N+1-k}
///   odd:      w_{1-k} = -w_k,       w_{N+k} = -w_{N+1-k}
std::vector<double> extend_cells(const std::vector<double>& w, int k, BcPair bc, Parity p);

/// Pad a nodal field (w_0..w_N) with k ghost layers per side.
///   periodic: w_{-k} = w_{N-k},  w_{N+k} = w_k
///   even:     w_{-k} = w_k,      w_{N+k} = w_{N-k}
///   odd:      w_{-k} = -w_k,     w_{N+k} = -w_{N-k}
std::vector<double> extend_nodes(const std::vector<double>& w, int k, BcPair bc, Parity p);

/// Fold an out-of-range nodal index back into the unknown range, mirroring
/// the ghost relations above so stencil coefficients can be reflected into
/// matrix rows. For periodic boundaries the unknowns are nodes 0..N-1 (node
/// N is identified with node 0) and the index wraps mod N; otherwise the
/// unknowns are 0..N and the index reflects with a parity sign.
struct Folded {
    int index;
    double sign;
};
Folded fold_node_index(int j, int n_cells, BcPair bc, Parity p);

} // namespace gnwave
