#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace quadra {

enum class Role : std::uint8_t { Opener, Closer, Middle, Singleton };
using RoleVector = std::vector<Role>;

// Consecutive elements of one block, left < right.
struct Arc {
  int left, right;
};

// Set partition of {0..n-1}; blocks sorted internally and by minimum.
// Text form is 1-based: "1 3 5 | 2 4".
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition from_rgs(const std::vector<int>& rgs);
  static SetPartition parse(std::string_view text);
  static SetPartition one(int n);   // single block
  static SetPartition zero(int n);  // all singletons

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool max_block_at_most(std::size_t k) const;
  std::vector<int> rgs() const;
  std::string str() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.rgs() < b.rgs(); }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Pair (top on [n], bar on [n-bar]) with identical role vectors.
struct DiagonalPartition {
  SetPartition top, bar;
  std::string str() const { return top.str() + " || " + bar.str(); }
  static DiagonalPartition parse(std::string_view text);
  friend bool operator==(const DiagonalPartition&, const DiagonalPartition&) = default;
};

constexpr int kMaxSetPartitionN = 14;
constexpr int kMaxDiagonalN = 10;

// Restricted-growth-string order. Visitor form avoids storing Bell(n) items.
void for_each_set_partition(int n, int min_block_size,
                            const std::function<void(const std::vector<int>& rgs)>& visit);
std::vector<SetPartition> enumerate_set_partitions(int n, int min_block_size);

RoleVector roles(const SetPartition& p);
std::vector<Arc> arcs(const SetPartition& p);

std::vector<DiagonalPartition> enumerate_diagonal_partitions(int n, int min_block_size);
// Both parts perfect matchings.
std::vector<DiagonalPartition> enumerate_diagonal_pair_partitions(int n);
// Blocks of size <= 2, same pair openers; singleton positions may differ.
std::vector<DiagonalPartition> enumerate_ps12(int n);

// Pair statistics; blocks of size >= 3 are a contract violation.
int stat_cr(const SetPartition& p);
int stat_nest(const SetPartition& p);
int stat_cs(const SetPartition& p);
int stat_sr(const SetPartition& p);
// Arc statistics between distinct non-singleton blocks.
int stat_rc(const SetPartition& p);
int stat_rnest(const SetPartition& p);

SetPartition kernel(const std::vector<int>& indices);
bool is_noncrossing(const SetPartition& p);

// Number of diagonal pair partitions of [n] computed by grouping matchings
// by their opener set and summing squared class sizes.
std::uint64_t count_diagonal_pairings_by_openers(int n);

// Restriction of a partition of a word's positions to a subset, relabelled.
SetPartition restrict_to(const SetPartition& p, const std::vector<int>& positions);

// --- cached enumeration tables used by the Wick kernels -------------------

struct PartitionStats {
  int rc = 0, rnest = 0;
  int cr = -1, nest = -1;  // -1 when some block has size >= 3
};

struct PartitionTable {
  int n = 0;
  std::vector<SetPartition> parts;
  std::vector<PartitionStats> stats;
  // diagonal partitions as (top index, bar index) into parts
  std::vector<std::pair<std::uint32_t, std::uint32_t>> diagonal;
};

// Thread-safe, built once per (n, min, max). max_block_size 0 means unbounded.
const PartitionTable& partition_table(int n, int min_block_size, int max_block_size = 0);

}  // namespace quadra
