#ifndef FFL_GRID_HPP
#define FFL_GRID_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ffl/eval.hpp"
#include "ffl/term.hpp"
#include "ffl/type.hpp"

namespace ffl {

// Finite per-type enumeration bounds for the exhaustive-input oracle.
struct InputGrid {
  long long int_lo = -2;
  long long int_hi = 2;   // inclusive
  int max_len = 3;        // arrays enumerate lengths 0..max_len
  Fuel fuel = 100000;

  // Bounds applied one nesting level down (arrays inside arrays, pairs inside
  // arrays); keeps nested domains finite without starving scalar ones.
  int nested_max_len = 2;
  long long nested_int_lo = 0;
  long long nested_int_hi = 1;

  std::string to_string() const;
};

// All values of the given type within the grid, in a fixed deterministic
// order (ints ascending; arrays by length then lexicographic; false before
// true; inl before inr).
std::vector<TermPtr> enumerate_values(const TypePtr& ty, const InputGrid& grid,
                                      int depth = 0);

// An argument tuple for a program (one value per parameter).
using ArgTuple = std::vector<TermPtr>;

// Deterministic stream of argument tuples; either a grid cross-product or a
// structured family (case-study input shapes).
class ArgSource {
 public:
  virtual ~ArgSource() = default;
  virtual std::size_t size() const = 0;
  virtual ArgTuple at(std::size_t i) const = 0;
  virtual std::string describe() const = 0;
};

// Cross product of per-parameter grid enumerations.
class GridArgs : public ArgSource {
 public:
  GridArgs(std::vector<TypePtr> param_types, const InputGrid& grid);
  std::size_t size() const override { return total_; }
  ArgTuple at(std::size_t i) const override;
  std::string describe() const override;

 private:
  std::vector<std::vector<TermPtr>> domains_;
  std::size_t total_ = 1;
  std::string grid_desc_;
};

// All directed graphs with up to max_nodes nodes, as PageRank arguments
// (adjacency lists, node count, iteration count 1..max_iters).
class PageRankArgs : public ArgSource {
 public:
  PageRankArgs(int max_nodes, int max_iters);
  std::size_t size() const override { return tuples_.size(); }
  ArgTuple at(std::size_t i) const override { return tuples_[i]; }
  std::string describe() const override;

 private:
  std::vector<ArgTuple> tuples_;
  int max_nodes_, max_iters_;
};

// K-means arguments: point arrays up to max_points over 0..point_hi, initial
// centroid arrays of length 1..max_k over the same domain, 1..max_iters
// iterations.
class KMeansArgs : public ArgSource {
 public:
  KMeansArgs(int max_points, int point_hi, int max_k, int max_iters);
  std::size_t size() const override;
  ArgTuple at(std::size_t i) const override;
  std::string describe() const override;

 private:
  std::vector<TermPtr> points_;
  std::vector<TermPtr> cents_;
  std::vector<TermPtr> iters_;
};

}  // namespace ffl

#endif
