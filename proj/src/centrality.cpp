#include "animst/centrality.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include "animst/error.hpp"

namespace animst {
namespace {

// BFS from vertex 0: visiting order and parent of every vertex.
struct RootedTree {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

RootedTree root_tree(const SpanningTree& tree) {
  const std::size_t k = tree.size();
  RootedTree r;
  r.order.reserve(k);
  r.parent.assign(k, 0);
  std::vector<bool> seen(k, false);
  r.order.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex v = r.order[head];
    for (const auto& a : tree.neighbors(v)) {
      if (seen[a.vertex]) continue;
      seen[a.vertex] = true;
      r.parent[a.vertex] = v;
      r.order.push_back(a.vertex);
    }
  }
  return r;
}

std::vector<std::uint64_t> subtree_sizes(const RootedTree& r) {
  std::vector<std::uint64_t> size(r.order.size(), 1);
  for (std::size_t n = r.order.size(); n-- > 1;) size[r.parent[r.order[n]]] += size[r.order[n]];
  return size;
}

std::vector<std::uint64_t> bfs_hops(const SpanningTree& tree, Vertex source) {
  constexpr auto kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> hops(tree.size(), kUnseen);
  std::vector<Vertex> queue{source};
  hops[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const auto& a : tree.neighbors(v)) {
      if (hops[a.vertex] != kUnseen) continue;
      hops[a.vertex] = hops[v] + 1;
      queue.push_back(a.vertex);
    }
  }
  return hops;
}

// y = R x for the tree adjacency R.
void adjacency_multiply(const SpanningTree& tree, std::span<const double> x,
                        std::vector<double>& y) {
  y.assign(x.size(), 0.0);
  for (std::size_t v = 0; v < x.size(); ++v) {
    double s = 0.0;
    for (const auto& a : tree.neighbors(static_cast<Vertex>(v))) s += x[a.vertex];
    y[v] = s;
  }
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> degree_centrality(const SpanningTree& tree) {
  const double denom = static_cast<double>(tree.size() - 1);
  std::vector<double> out(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v)
    out[v] = static_cast<double>(tree.degree(static_cast<Vertex>(v))) / denom;
  return out;
}

double eigen_residual(const SpanningTree& tree, std::span<const double> e, double lambda) {
  std::vector<double> re;
  adjacency_multiply(tree, e, re);
  double s = 0.0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    const double d = re[v] - lambda * e[v];
    s += d * d;
  }
  return std::sqrt(s);
}

EigenResult eigenvector_centrality(const SpanningTree& tree, const EigenOptions& options) {
  const std::size_t k = tree.size();
  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> rx;
  double residual = 0.0;
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    adjacency_multiply(tree, x, rx);
    double lambda = 0.0;
    for (std::size_t v = 0; v < k; ++v) lambda += x[v] * rx[v];
    double r2 = 0.0;
    for (std::size_t v = 0; v < k; ++v) {
      const double d = rx[v] - lambda * x[v];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= options.tol) return {std::move(x), lambda, residual, iter};

    // Shifted step: x <- (R + I) x, renormalized.
    for (std::size_t v = 0; v < k; ++v) rx[v] += x[v];
    const double n = norm2(rx);
    for (std::size_t v = 0; v < k; ++v) x[v] = rx[v] / n;
  }
  std::ostringstream msg;
  msg << "eigenvector centrality did not converge in " << options.max_iter
      << " iterations (residual " << residual << ", tolerance " << options.tol << ")";
  throw Error(ErrorKind::computation, msg.str());
}

double normalize_betweenness(double raw, std::size_t k) {
  const double kk = static_cast<double>(k);
  const double denom = kk * kk - 3.0 * kk + 2.0;
  return denom > 0.0 ? 2.0 * raw / denom : 0.0;
}

Betweenness betweenness_centrality(const SpanningTree& tree) {
  const std::size_t k = tree.size();
  const auto rooted = root_tree(tree);
  const auto size = subtree_sizes(rooted);

  Betweenness b;
  b.raw.assign(k, 0);
  b.normalized.assign(k, 0.0);
  const std::uint64_t others = k - 1;
  for (std::size_t v = 0; v < k; ++v) {
    // Components left after deleting v: each child subtree plus the part
    // above v. sum_{a<b} n_a n_b = ((sum n)^2 - sum n^2) / 2.
    std::uint64_t squares = 0;
    for (const auto& a : tree.neighbors(static_cast<Vertex>(v))) {
      const std::uint64_t n =
          (v != 0 && a.vertex == rooted.parent[v]) ? k - size[v] : size[a.vertex];
      squares += n * n;
    }
    b.raw[v] = (others * others - squares) / 2;
    b.normalized[v] = normalize_betweenness(static_cast<double>(b.raw[v]), k);
  }
  return b;
}

std::vector<double> brandes_betweenness(std::span<const std::vector<Vertex>> adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<double> cb(n, 0.0);
  std::vector<std::vector<Vertex>> pred(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long long> dist(n);
  std::vector<Vertex> stack;
  std::deque<Vertex> queue;

  for (Vertex s = 0; s < n; ++s) {
    for (auto& p : pred) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    stack.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      stack.push_back(v);
      for (Vertex w : adjacency[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      for (Vertex v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  // Every unordered pair was counted from both endpoints.
  for (auto& c : cb) c /= 2.0;
  return cb;
}

std::vector<double> closeness_centrality(const SpanningTree& tree) {
  const std::size_t k = tree.size();
  const auto rooted = root_tree(tree);
  const auto size = subtree_sizes(rooted);

  // Distance sums: depth total at the root, then moving the root across an
  // edge brings size[child] vertices one hop closer and the rest one further.
  std::vector<std::uint64_t> depth(k, 0);
  std::vector<std::uint64_t> sum(k, 0);
  for (std::size_t n = 1; n < k; ++n) {
    const Vertex v = rooted.order[n];
    depth[v] = depth[rooted.parent[v]] + 1;
    sum[0] += depth[v];
  }
  for (std::size_t n = 1; n < k; ++n) {
    const Vertex v = rooted.order[n];
    sum[v] = sum[rooted.parent[v]] + k - 2 * size[v];
  }
  std::vector<double> out(k);
  for (std::size_t v = 0; v < k; ++v)
    out[v] = static_cast<double>(k - 1) / static_cast<double>(sum[v]);
  return out;
}

std::vector<double> closeness_centrality_bfs(const SpanningTree& tree) {
  const std::size_t k = tree.size();
  std::vector<double> out(k);
  for (std::size_t v = 0; v < k; ++v) {
    std::uint64_t total = 0;
    for (auto h : bfs_hops(tree, static_cast<Vertex>(v))) total += h;
    out[v] = static_cast<double>(k - 1) / static_cast<double>(total);
  }
  return out;
}

double total_centrality(double degree, double eigen, double betweenness, double closeness) {
  return std::sqrt(degree * degree + eigen * eigen + betweenness * betweenness +
                   closeness * closeness);
}

CentralityReport compute_centrality(const SpanningTree& tree, const EigenOptions& options) {
  CentralityReport r;
  r.degree = degree_centrality(tree);
  auto eigen = eigenvector_centrality(tree, options);
  r.eigen = std::move(eigen.vector);
  r.eigenvalue = eigen.eigenvalue;
  r.eigen_residual = eigen.residual;
  r.eigen_iterations = eigen.iterations;
  auto between = betweenness_centrality(tree);
  r.betweenness_raw = std::move(between.raw);
  r.betweenness = std::move(between.normalized);
  r.closeness = closeness_centrality(tree);
  r.total.resize(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v)
    r.total[v] = total_centrality(r.degree[v], r.eigen[v], r.betweenness[v], r.closeness[v]);
  return r;
}

}  // namespace animst
