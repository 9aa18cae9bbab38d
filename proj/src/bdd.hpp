#pragma once

// Minimal reduced ordered BDD package: hash-consed nodes, memoized if-then-else.
// Variables are ordered by index, smaller first.

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace nzt::detail {

class BddManager {
 public:
  using Ref = std::uint32_t;
  static constexpr Ref kFalse = 0;
  static constexpr Ref kTrue = 1;

  explicit BddManager(std::size_t max_nodes);

  Ref var(std::uint32_t v);
  Ref ite(Ref f, Ref g, Ref h);
  Ref land(Ref f, Ref g) { return ite(f, g, kFalse); }
  Ref lor(Ref f, Ref g) { return ite(f, kTrue, g); }
  Ref lnot(Ref f) { return ite(f, kFalse, kTrue); }
  Ref restrict(Ref f, std::uint32_t v, bool value);

  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  static constexpr std::uint32_t kTerminalVar = UINT32_MAX;

  struct Node {
    std::uint32_t var;
    Ref lo;
    Ref hi;
  };

  struct Triple {
    std::uint32_t a, b, c;
    bool operator==(const Triple&) const = default;
  };
  struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
      std::uint64_t h = t.a;
      h = h * 0x9E3779B97F4A7C15ULL + t.b;
      h = h * 0x9E3779B97F4A7C15ULL + t.c;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  Ref mk(std::uint32_t v, Ref lo, Ref hi);
  std::uint32_t top(Ref f) const { return nodes_[f].var; }
  Ref cofactor(Ref f, std::uint32_t v, bool value) const;

  std::size_t max_nodes_;
  std::vector<Node> nodes_;
  std::unordered_map<Triple, Ref, TripleHash> unique_;
  std::unordered_map<Triple, Ref, TripleHash> ite_cache_;
};

}  // namespace nzt::detail
