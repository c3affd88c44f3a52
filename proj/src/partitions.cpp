#include "quadra/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "quadra/errors.hpp"

namespace quadra {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  require(n >= 0, "negative partition size");
  std::vector<int> seen(n, 0);
  for (auto& b : blocks_) {
    require(!b.empty(), "empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      require(x >= 0 && x < n, "block element out of range");
      require(!seen[x]++, "blocks overlap");
    }
  }
  for (int x = 0; x < n; ++x) require(seen[x] == 1, "blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
    int b = rgs[i];
    require(b >= 0 && b <= static_cast<int>(blocks.size()), "not a restricted growth string");
    if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[b].push_back(i);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  int n = 0;
  std::string s(text);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "|") {
      blocks.emplace_back();
      continue;
    }
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ContractViolation("bad partition token '" + tok + "'");
    }
    require(pos == tok.size() && v >= 1, "bad partition token '" + tok + "'");
    blocks.back().push_back(v - 1);
    n = std::max(n, v);
  }
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one(int n) {
  std::vector<std::vector<int>> b;
  if (n > 0) {
    b.emplace_back();
    for (int i = 0; i < n; ++i) b[0].push_back(i);
  }
  return SetPartition(n, std::move(b));
}

SetPartition SetPartition::zero(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 0; i < n; ++i) b.push_back({i});
  return SetPartition(n, std::move(b));
}

bool SetPartition::max_block_at_most(std::size_t k) const {
  for (const auto& b : blocks_)
    if (b.size() > k) return false;
  return true;
}

std::vector<int> SetPartition::rgs() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) out[x] = static_cast<int>(i);
  return out;
}

std::string SetPartition::str() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(blocks_[i][j] + 1);
    }
  }
  return out;
}

DiagonalPartition DiagonalPartition::parse(std::string_view text) {
  auto sep = text.find("||");
  require(sep != std::string_view::npos, "diagonal partition needs 'top || bar'");
  DiagonalPartition d{SetPartition::parse(text.substr(0, sep)),
                      SetPartition::parse(text.substr(sep + 2))};
  require(d.top.size() == d.bar.size() && roles(d.top) == roles(d.bar),
          "top and bar role vectors differ");
  return d;
}

void for_each_set_partition(int n, int min_block_size,
                            const std::function<void(const std::vector<int>&)>& visit) {
  guard(n <= kMaxSetPartitionN, "set partition enumeration capped at n = 14");
  require(n >= 0 && min_block_size >= 1, "bad enumeration arguments");
  std::vector<int> rgs(n), sizes;
  sizes.reserve(n);
  // deficit = elements still needed to bring every open block up to the minimum
  std::function<void(int, int)> rec = [&](int i, int deficit) {
    if (deficit > n - i) return;
    if (i == n) {
      visit(rgs);
      return;
    }
    const int blocks = static_cast<int>(sizes.size());
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      int d = deficit;
      if (b == blocks) {
        sizes.push_back(1);
        d += min_block_size - 1;
      } else {
        if (sizes[b] < min_block_size) --d;
        ++sizes[b];
      }
      rec(i + 1, d);
      if (b == blocks)
        sizes.pop_back();
      else
        --sizes[b];
    }
  };
  rec(0, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int n, int min_block_size) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, min_block_size,
                         [&](const std::vector<int>& r) { out.push_back(SetPartition::from_rgs(r)); });
  return out;
}

RoleVector roles(const SetPartition& p) {
  RoleVector r(p.size(), Role::Singleton);
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) continue;
    r[b.front()] = Role::Opener;
    r[b.back()] = Role::Closer;
    for (std::size_t i = 1; i + 1 < b.size(); ++i) r[b[i]] = Role::Middle;
  }
  return r;
}

std::vector<Arc> arcs(const SetPartition& p) {
  std::vector<Arc> out;
  for (const auto& b : p.blocks())
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back({b[i], b[i + 1]});
  return out;
}

namespace {

bool crosses(const Arc& a, const Arc& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

// a covers both endpoints of b
bool nests(const Arc& a, const Arc& b) { return a.left < b.left && b.right < a.right; }

void require_pairs(const SetPartition& p, const char* name) {
  if (!p.max_block_at_most(2))
    throw ContractViolation(std::string(name) + " is defined for blocks of size <= 2; use rc/rnest");
}

std::vector<Arc> pair_blocks(const SetPartition& p) {
  std::vector<Arc> out;
  for (const auto& b : p.blocks())
    if (b.size() == 2) out.push_back({b[0], b[1]});
  return out;
}

template <class Pred>
int count_arc_pairs_across_blocks(const SetPartition& p, Pred pred) {
  std::vector<std::vector<Arc>> per_block;
  for (const auto& b : p.blocks()) {
    if (b.size() < 2) continue;
    per_block.emplace_back();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) per_block.back().push_back({b[i], b[i + 1]});
  }
  int count = 0;
  for (std::size_t i = 0; i < per_block.size(); ++i)
    for (std::size_t j = i + 1; j < per_block.size(); ++j)
      for (const Arc& a : per_block[i])
        for (const Arc& b : per_block[j])
          if (pred(a, b)) ++count;
  return count;
}

}  // namespace

int stat_cr(const SetPartition& p) {
  require_pairs(p, "cr");
  auto pairs = pair_blocks(p);
  int c = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) c += crosses(pairs[i], pairs[j]);
  return c;
}

int stat_nest(const SetPartition& p) {
  require_pairs(p, "nest");
  auto pairs = pair_blocks(p);
  int c = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      c += nests(pairs[i], pairs[j]) || nests(pairs[j], pairs[i]);
  return c;
}

int stat_cs(const SetPartition& p) {
  require_pairs(p, "CS");
  int c = 0;
  for (const auto& s : p.blocks())
    if (s.size() == 1)
      for (const Arc& w : pair_blocks(p)) c += w.left < s[0] && s[0] < w.right;
  return c;
}

int stat_sr(const SetPartition& p) {
  require_pairs(p, "SR");
  int c = 0;
  for (const auto& s : p.blocks())
    if (s.size() == 1)
      for (const Arc& w : pair_blocks(p)) c += s[0] > w.right;
  return c;
}

int stat_rc(const SetPartition& p) { return count_arc_pairs_across_blocks(p, crosses); }

int stat_rnest(const SetPartition& p) {
  return count_arc_pairs_across_blocks(
      p, [](const Arc& a, const Arc& b) { return nests(a, b) || nests(b, a); });
}

SetPartition kernel(const std::vector<int>& indices) {
  require(!indices.empty(), "kernel of an empty index list");
  std::map<int, int> label;
  std::vector<int> rgs;
  for (int x : indices) {
    auto [it, fresh] = label.try_emplace(x, static_cast<int>(label.size()));
    rgs.push_back(it->second);
  }
  return SetPartition::from_rgs(rgs);
}

bool is_noncrossing(const SetPartition& p) { return stat_rc(p) == 0; }

SetPartition restrict_to(const SetPartition& p, const std::vector<int>& positions) {
  auto lab = p.rgs();
  std::vector<int> sub;
  for (int x : positions) sub.push_back(lab.at(x));
  return kernel(sub);
}

namespace {

template <class Key, class KeyFn>
std::vector<DiagonalPartition> pair_by_key(const std::vector<SetPartition>& parts, KeyFn key) {
  std::map<Key, std::vector<std::size_t>> classes;
  std::vector<Key> keys;
  keys.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    keys.push_back(key(parts[i]));
    classes[keys.back()].push_back(i);
  }
  std::vector<DiagonalPartition> out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j : classes[keys[i]]) out.push_back({parts[i], parts[j]});
  return out;
}

std::vector<int> pair_openers(const SetPartition& p) {
  std::vector<int> o;
  for (const auto& b : p.blocks())
    if (b.size() >= 2) o.push_back(b.front());
  return o;
}

}  // namespace

std::vector<DiagonalPartition> enumerate_diagonal_partitions(int n, int min_block_size) {
  guard(n <= kMaxDiagonalN, "diagonal partition enumeration capped at n = 10");
  return pair_by_key<RoleVector>(enumerate_set_partitions(n, min_block_size), roles);
}

std::vector<DiagonalPartition> enumerate_diagonal_pair_partitions(int n) {
  guard(n <= kMaxDiagonalN, "diagonal partition enumeration capped at n = 10");
  std::vector<SetPartition> parts;
  for (auto& p : enumerate_set_partitions(n, 2))
    if (p.max_block_at_most(2)) parts.push_back(std::move(p));
  return pair_by_key<RoleVector>(parts, roles);
}

std::vector<DiagonalPartition> enumerate_ps12(int n) {
  guard(n <= kMaxDiagonalN, "PS(1,2) enumeration capped at n = 10");
  std::vector<SetPartition> parts;
  for (auto& p : enumerate_set_partitions(n, 1))
    if (p.max_block_at_most(2)) parts.push_back(std::move(p));
  // equal opener sets already force equal singleton counts
  return pair_by_key<std::vector<int>>(parts, pair_openers);
}

std::uint64_t count_diagonal_pairings_by_openers(int n) {
  guard(n <= kMaxSetPartitionN, "matching enumeration capped at n = 14");
  if (n % 2) return 0;
  std::uint64_t total = 0;
  std::map<std::vector<int>, std::uint64_t> matchings;
  for_each_set_partition(n, 2, [&](const std::vector<int>& rgs) {
    std::vector<int> sizes;
    for (int x : rgs) {
      if (x >= static_cast<int>(sizes.size())) sizes.resize(x + 1, 0);
      ++sizes[x];
    }
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s != 2; })) return;
    // opener = first occurrence of a label
    std::vector<int> openers;
    int next = 0;
    for (int i = 0; i < n; ++i)
      if (rgs[i] == next) {
        openers.push_back(i);
        ++next;
      }
    ++matchings[openers];
  });
  for (const auto& [k, c] : matchings) total += c * c;
  return total;
}

namespace {

std::unique_ptr<PartitionTable> build_table(int n, int min_block_size, int max_block_size) {
  auto t = std::make_unique<PartitionTable>();
  t->n = n;
  for (auto& p : enumerate_set_partitions(n, min_block_size))
    if (max_block_size <= 0 || p.max_block_at_most(max_block_size)) t->parts.push_back(std::move(p));
  std::map<RoleVector, std::vector<std::uint32_t>> classes;
  std::vector<RoleVector> keys;
  for (std::uint32_t i = 0; i < t->parts.size(); ++i) {
    const auto& p = t->parts[i];
    PartitionStats s;
    s.rc = stat_rc(p);
    s.rnest = stat_rnest(p);
    if (p.max_block_at_most(2)) {
      s.cr = stat_cr(p);
      s.nest = stat_nest(p);
    }
    t->stats.push_back(s);
    keys.push_back(roles(p));
    classes[keys.back()].push_back(i);
  }
  for (std::uint32_t i = 0; i < t->parts.size(); ++i)
    for (std::uint32_t j : classes[keys[i]]) t->diagonal.emplace_back(i, j);
  return t;
}

}  // namespace

const PartitionTable& partition_table(int n, int min_block_size, int max_block_size) {
  guard(n <= kMaxDiagonalN, "diagonal partition table capped at n = 10");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<PartitionTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, min_block_size, max_block_size}];
  if (!slot) slot = build_table(n, min_block_size, max_block_size);
  return *slot;
}

}  // namespace quadra
