#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eta {

/*****************************************************************************
 * Typed k-strict partitions: weakly decreasing parts, no part > k repeated,
 * type in {0,1,2}, positive type iff some part equals k.
 *****************************************************************************/

struct TypedPartition {
  std::vector<int> parts;  // weakly decreasing, no zeros stored
  int k = 1;
  int type = 0;

  int length() const { return static_cast<int>(parts.size()); }
  int part(int j) const {  // 1-based, 0 beyond the length
    return (j >= 1 && j <= length()) ? parts[j - 1] : 0;
  }
  int weight() const;
  int ell_k() const;  // number of parts > k
  bool has_k_part() const;

  bool operator==(const TypedPartition& o) const {
    return k == o.k && type == o.type && parts == o.parts;
  }
  bool operator!=(const TypedPartition& o) const { return !(*this == o); }
};

// throws std::invalid_argument on malformed input
void validate(const TypedPartition& la);
TypedPartition make_typed(std::vector<int> parts, int k, int type);

// ordering: weight, then partial sums lexicographically (larger first,
// refining dominance), then type
bool typed_less(const TypedPartition& a, const TypedPartition& b);

// strict dominance on shapes of equal weight: every partial sum of a is >=
// that of b, with at least one strict
bool dominates_strictly(const std::vector<int>& a, const std::vector<int>& b);

// the pair set: all (i,j), i<j, with lambda_i + lambda_j >= 2k + j - i
// (parts beyond the length count as 0; j can exceed the length)
std::set<std::pair<int, int>> c_set(const TypedPartition& la);
bool c_set_contains(const std::vector<int>& parts, int k, int i, int j);

// beta_bar: the shape-level characteristic sequence (independent of type)
std::vector<int> beta_bar(const std::vector<int>& parts, int k, int len);

// all typed k-strict partitions fitting in rows x cols, in typed_less order
std::vector<TypedPartition> enumerate_typed(int k, int rows, int cols);
// all k-strict shapes fitting in rows x cols
std::vector<std::vector<int>> enumerate_shapes(int k, int rows, int cols);
// typed lifts of a shape (one for no k-part, two otherwise)
std::vector<TypedPartition> typed_lifts(const std::vector<int>& parts, int k);

// "7,4,3,3,1:t2"; "-", "", and "0:t0" denote the empty partition; bare
// parts mean type 0 when that is legal
TypedPartition parse_partition(const std::string& text, int k);
// shape only, for the hatted class: bare parts, no :t suffix allowed
std::vector<int> parse_shape(const std::string& text, int k);
std::string format_partition(const TypedPartition& la);
std::string format_shape(const std::vector<int>& parts);

}  // namespace eta
