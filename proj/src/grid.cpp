#include "ffl/grid.hpp"

#include <sstream>
#include <stdexcept>

#include "ffl/typecheck.hpp"

namespace ffl {

std::string InputGrid::to_string() const {
  std::ostringstream os;
  os << "int " << int_lo << ".." << int_hi << ", len<=" << max_len
     << " (nested " << nested_int_lo << ".." << nested_int_hi << ", len<="
     << nested_max_len << "), fuel " << fuel;
  return os.str();
}

std::vector<TermPtr> enumerate_values(const TypePtr& ty, const InputGrid& grid,
                                      int depth) {
  long long lo = depth == 0 ? grid.int_lo : grid.nested_int_lo;
  long long hi = depth == 0 ? grid.int_hi : grid.nested_int_hi;
  int maxlen = depth == 0 ? grid.max_len : grid.nested_max_len;
  switch (ty->kind()) {
    case TypeKind::Int: {
      std::vector<TermPtr> out;
      for (long long i = lo; i <= hi; ++i) out.push_back(int_lit(i));
      return out;
    }
    case TypeKind::Bool: return {bool_lit(false), bool_lit(true)};
    case TypeKind::Unit: return {unit()};
    case TypeKind::Prod: {
      auto as = enumerate_values(ty->arg(0), grid, depth + 1);
      auto bs = enumerate_values(ty->arg(1), grid, depth + 1);
      std::vector<TermPtr> out;
      out.reserve(as.size() * bs.size());
      for (const auto& a : as)
        for (const auto& b : bs) out.push_back(pair(a, b));
      return out;
    }
    case TypeKind::Sum: {
      auto as = enumerate_values(ty->arg(0), grid, depth + 1);
      auto bs = enumerate_values(ty->arg(1), grid, depth + 1);
      std::vector<TermPtr> out;
      out.reserve(as.size() + bs.size());
      for (const auto& a : as) out.push_back(inl(a));
      for (const auto& b : bs) out.push_back(inr(b));
      return out;
    }
    case TypeKind::List: {
      auto elems = enumerate_values(ty->arg(0), grid, depth + 1);
      std::vector<TermPtr> out;
      std::vector<std::vector<TermPtr>> current{{}};
      out.push_back(array_lit({}));
      for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<TermPtr>> next;
        for (const auto& prefix : current) {
          for (const auto& e : elems) {
            auto arr = prefix;
            arr.push_back(e);
            out.push_back(array_lit(arr));
            next.push_back(std::move(arr));
          }
        }
        current = std::move(next);
        if (current.empty()) break;
      }
      return out;
    }
    case TypeKind::Arrow:
      throw std::invalid_argument("cannot enumerate function type " +
                                  type_to_string(ty));
    case TypeKind::TVar:
      throw std::invalid_argument("cannot enumerate unresolved type");
  }
  return {};
}

GridArgs::GridArgs(std::vector<TypePtr> param_types, const InputGrid& grid) {
  grid_desc_ = grid.to_string();
  for (const auto& ty : param_types) {
    domains_.push_back(enumerate_values(ty, grid));
    total_ *= domains_.back().size();
  }
  if (domains_.empty()) total_ = 1;
}

ArgTuple GridArgs::at(std::size_t i) const {
  ArgTuple out(domains_.size());
  for (std::size_t d = domains_.size(); d-- > 0;) {
    const auto& dom = domains_[d];
    out[d] = dom[i % dom.size()];
    i /= dom.size();
  }
  return out;
}

std::string GridArgs::describe() const {
  return "grid: " + grid_desc_ + ", " + std::to_string(total_) + " tuples";
}

PageRankArgs::PageRankArgs(int max_nodes, int max_iters)
    : max_nodes_(max_nodes), max_iters_(max_iters) {
  for (int n = 0; n <= max_nodes; ++n) {
    // Every map from node to subset of nodes.
    std::vector<TermPtr> graphs;
    std::function<void(int, std::vector<TermPtr>&)> build =
        [&](int node, std::vector<TermPtr>& acc) {
          if (node == n) {
            graphs.push_back(array_lit(acc));
            return;
          }
          for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<TermPtr> links;
            for (int t = 0; t < n; ++t)
              if (mask & (1u << t)) links.push_back(int_lit(t));
            acc.push_back(array_lit(std::move(links)));
            build(node + 1, acc);
            acc.pop_back();
          }
        };
    std::vector<TermPtr> acc;
    build(0, acc);
    for (const auto& g : graphs)
      for (int it = 1; it <= max_iters; ++it)
        tuples_.push_back({g, int_lit(n), int_lit(it)});
  }
}

std::string PageRankArgs::describe() const {
  return "pagerank family: all directed graphs with <=" +
         std::to_string(max_nodes_) + " nodes, iterations 1.." +
         std::to_string(max_iters_) + ", " + std::to_string(tuples_.size()) +
         " tuples";
}

KMeansArgs::KMeansArgs(int max_points, int point_hi, int max_k, int max_iters) {
  InputGrid g;
  g.int_lo = 0;
  g.int_hi = point_hi;
  g.max_len = max_points;
  g.nested_int_lo = 0;
  g.nested_int_hi = point_hi;
  g.nested_max_len = max_points;
  points_ = enumerate_values(t_list(t_int()), g);
  InputGrid gc = g;
  gc.max_len = max_k;
  for (const auto& c : enumerate_values(t_list(t_int()), gc))
    if (c->arity() >= 1) cents_.push_back(c);
  for (int i = 1; i <= max_iters; ++i) iters_.push_back(int_lit(i));
}

std::size_t KMeansArgs::size() const {
  return points_.size() * cents_.size() * iters_.size();
}

ArgTuple KMeansArgs::at(std::size_t i) const {
  std::size_t pi = i / (cents_.size() * iters_.size());
  std::size_t rest = i % (cents_.size() * iters_.size());
  std::size_t ci = rest / iters_.size();
  std::size_t ii = rest % iters_.size();
  return {points_[pi], cents_[ci], iters_[ii]};
}

std::string KMeansArgs::describe() const {
  return "kmeans family: " + std::to_string(size()) + " tuples";
}

}  // namespace ffl
