#include "bdd.hpp"

#include <algorithm>

#include "nzt/error.hpp"

namespace nzt::detail {

BddManager::BddManager(std::size_t max_nodes) : max_nodes_(max_nodes) {
  nodes_.push_back({kTerminalVar, kFalse, kFalse});
  nodes_.push_back({kTerminalVar, kTrue, kTrue});
}

BddManager::Ref BddManager::mk(std::uint32_t v, Ref lo, Ref hi) {
  if (lo == hi) return lo;
  const Triple key{v, lo, hi};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  if (nodes_.size() >= max_nodes_) throw CapExceeded("BDD node limit exceeded");
  const Ref r = static_cast<Ref>(nodes_.size());
  nodes_.push_back({v, lo, hi});
  unique_.emplace(key, r);
  return r;
}

BddManager::Ref BddManager::var(std::uint32_t v) { return mk(v, kFalse, kTrue); }

BddManager::Ref BddManager::cofactor(Ref f, std::uint32_t v, bool value) const {
  if (top(f) != v) return f;
  return value ? nodes_[f].hi : nodes_[f].lo;
}

BddManager::Ref BddManager::ite(Ref f, Ref g, Ref h) {
  if (f == kTrue) return g;
  if (f == kFalse) return h;
  if (g == h) return g;
  if (g == kTrue && h == kFalse) return f;
  const Triple key{f, g, h};
  if (auto it = ite_cache_.find(key); it != ite_cache_.end()) return it->second;
  const std::uint32_t v = std::min({top(f), top(g), top(h)});
  const Ref lo = ite(cofactor(f, v, false), cofactor(g, v, false), cofactor(h, v, false));
  const Ref hi = ite(cofactor(f, v, true), cofactor(g, v, true), cofactor(h, v, true));
  const Ref r = mk(v, lo, hi);
  ite_cache_.emplace(key, r);
  return r;
}

BddManager::Ref BddManager::restrict(Ref f, std::uint32_t v, bool value) {
  std::unordered_map<Ref, Ref> memo;
  auto go = [&](auto&& self, Ref g) -> Ref {
    if (g <= kTrue || top(g) > v) return g;
    if (top(g) == v) return value ? nodes_[g].hi : nodes_[g].lo;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    const Ref r = mk(top(g), self(self, nodes_[g].lo), self(self, nodes_[g].hi));
    memo.emplace(g, r);
    return r;
  };
  return go(go, f);
}

}  // namespace nzt::detail
