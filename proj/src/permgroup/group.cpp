#include "vdw/permgroup/group.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "vdw/core/error.hpp"

namespace vdw::perm {

struct PermGroup::Cache {
  std::mutex mutex;
  std::unique_ptr<const std::vector<Permutation>> elements;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    require(g.degree() == degree_, ErrorCode::kInvalidArgument, "generator degree mismatch");
  }
}

const std::vector<Permutation>& PermGroup::elements(std::size_t cap) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->elements) {
    require(cache_->elements->size() <= cap, ErrorCode::kGroupTooLarge,
            "closure exceeds cap " + std::to_string(cap));
    return *cache_->elements;
  }
  std::vector<Permutation> found{Permutation(degree_)};
  std::unordered_set<Permutation, PermutationHash> seen{found.front()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : generators_) {
      Permutation next = found[head].then(s);
      if (seen.insert(next).second) {
        require(found.size() < cap, ErrorCode::kGroupTooLarge,
                "closure exceeds cap " + std::to_string(cap));
        found.push_back(std::move(next));
      }
    }
  }
  cache_->elements = std::make_unique<const std::vector<Permutation>>(std::move(found));
  return *cache_->elements;
}

std::vector<Letter> orbit_of(const PermGroup& group, Letter start) {
  std::vector<bool> seen(group.degree(), false);
  std::vector<Letter> orbit{start};
  seen[start] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : group.generators()) {
      Letter y = g(orbit[head]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return orbit_of(*this, 0).size() == degree_;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

bool PermGroup::is_primitive() const {
  require(is_transitive(), ErrorCode::kNotTransitive, "primitivity needs a transitive group");
  // Finest invariant partition joining 0 and a; primitive iff it is always the full set.
  for (Letter a = 1; a < degree_; ++a) {
    UnionFind uf(degree_);
    uf.parent[a] = 0;
    std::deque<std::pair<Letter, Letter>> pending{{0, a}};
    std::size_t merges = 1;
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      for (const auto& g : generators_) {
        std::size_t u = uf.find(g(x)), v = uf.find(g(y));
        if (u != v) {
          uf.parent[v] = u;
          ++merges;
          pending.emplace_back(g(x), g(y));
        }
      }
    }
    if (merges + 1 < degree_) return false;
  }
  return true;
}

std::size_t PermGroup::ind(std::size_t cap) const {
  const auto& all = elements(cap);
  require(all.size() > 1, ErrorCode::kTrivialGroup, "ind of the trivial group");
  std::size_t best = degree_;
  for (std::size_t i = 1; i < all.size(); ++i) best = std::min(best, all[i].ind());
  return best;
}

std::size_t PermGroup::min_moved_points(std::size_t cap) const {
  const auto& all = elements(cap);
  require(all.size() > 1, ErrorCode::kTrivialGroup, "min moved points of the trivial group");
  std::size_t best = degree_;
  for (std::size_t i = 1; i < all.size(); ++i) best = std::min(best, all[i].moved_points());
  return best;
}

std::set<std::vector<std::size_t>> PermGroup::cycle_types(std::size_t cap) const {
  std::set<std::vector<std::size_t>> out;
  for (const auto& g : elements(cap)) out.insert(g.cycle_type());
  return out;
}

bool PermGroup::contains(const Permutation& g, std::size_t cap) const {
  for (const auto& h : elements(cap)) {
    if (h == g) return true;
  }
  return false;
}

}  // namespace vdw::perm
