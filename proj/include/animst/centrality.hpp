#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "animst/graph.hpp"
#include "animst/mst.hpp"

namespace animst {

/// C_D(v) = deg(v) / (k - 1).
std::vector<double> degree_centrality(const SpanningTree& tree);

struct EigenOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
};

struct EigenResult {
  std::vector<double> vector;  // unit norm, non-negative
  double eigenvalue = 0.0;
  double residual = 0.0;       // ||R e - lambda e||
  std::size_t iterations = 0;
};

/// Dominant eigenvector of the adjacency matrix by power iteration on
/// R + I. Trees are bipartite, so R alone has eigenvalues ±lambda_max and
/// the unshifted iteration would oscillate. Throws a computation error
/// naming the residual if `tol` is not reached within `max_iter` steps.
EigenResult eigenvector_centrality(const SpanningTree& tree,
                                   const EigenOptions& options = {});

/// ||R e - lambda e|| for the tree's adjacency R.
double eigen_residual(const SpanningTree& tree, std::span<const double> e,
                      double lambda);

struct Betweenness {
  std::vector<std::uint64_t> raw;  // unordered (s, t) pairs routed through v
  std::vector<double> normalized;  // 2 raw / ((k-1)(k-2))
};

/// Tree betweenness from subtree sizes: removing v splits the tree into
/// components of sizes n_a, and C_B(v) = sum over a < b of n_a n_b. O(k).
Betweenness betweenness_centrality(const SpanningTree& tree);

/// Brandes' algorithm on an arbitrary unweighted undirected graph, counting
/// unordered pairs with fractional path shares.
std::vector<double> brandes_betweenness(
    std::span<const std::vector<Vertex>> adjacency);

/// Freeman normalization 2 C_B / (k^2 - 3k + 2); 0 when k = 2.
double normalize_betweenness(double raw, std::size_t k);

/// C_C(v) = (k - 1) / sum of hop distances, by two-pass subtree
/// aggregation in O(k).
std::vector<double> closeness_centrality(const SpanningTree& tree);
/// Same quantity from one breadth-first sweep per source, O(k^2).
std::vector<double> closeness_centrality_bfs(const SpanningTree& tree);

double total_centrality(double degree, double eigen, double betweenness,
                        double closeness);

struct CentralityReport {
  std::vector<double> degree;
  std::vector<double> eigen;
  std::vector<std::uint64_t> betweenness_raw;
  std::vector<double> betweenness;
  std::vector<double> closeness;
  std::vector<double> total;
  double eigenvalue = 0.0;
  double eigen_residual = 0.0;
  std::size_t eigen_iterations = 0;
};

CentralityReport compute_centrality(const SpanningTree& tree,
                                    const EigenOptions& options = {});

}  // namespace animst
