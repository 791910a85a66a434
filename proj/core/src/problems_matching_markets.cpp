#include <deque>

#include "latdet/error.hpp"
#include "latdet/problems.hpp"

namespace latdet {

namespace {

void check_state(const ChainPoset& poset, const GlobalState& g) {
  if (g.size() != poset.chains()) throw InvalidInput("state dimension does not match instance");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] > poset.height(i)) throw InvalidInput("state component out of range");
  }
}

std::vector<std::vector<int>> positions(const std::vector<std::vector<int>>& pref) {
  std::vector<std::vector<int>> pos(pref.size(), std::vector<int>(pref.size(), 0));
  for (std::size_t i = 0; i < pref.size(); ++i) {
    for (std::size_t k = 0; k < pref[i].size(); ++k) {
      pos[i][static_cast<std::size_t>(pref[i][k])] = static_cast<int>(k);
    }
  }
  return pos;
}

// ---------------------------------------------------------------------------
// Stable marriage

class StableMarriageAdapter final : public PredicateAdapter {
 public:
  explicit StableMarriageAdapter(MarriageInstance inst)
      : inst_(std::move(inst)),
        poset_(std::vector<int>(static_cast<std::size_t>(std::max(inst_.n, 1)), std::max(inst_.n - 1, 0))) {
    inst_.validate();
    pos_ = positions(inst_.mpref);
  }

  std::string_view name() const override { return "marriage"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden | Hook::DualForbidden; }

  bool evaluate(const GlobalState& g) const override {
    check_state(poset_, g);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (forbidden(j, g)) return false;
    }
    return true;
  }

  // Man j's current woman z has received a proposal, at or before the
  // proposer's current choice, from a man she ranks above j.
  bool forbidden(std::size_t j, const GlobalState& g) const override {
    const int z = inst_.mpref[j][static_cast<std::size_t>(g[j])];
    const auto& zrank = inst_.rank[static_cast<std::size_t>(z)];
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == j || zrank[i] >= zrank[j]) continue;
      for (int k = 0; k <= g[i]; ++k) {
        if (inst_.mpref[i][static_cast<std::size_t>(k)] == z) return true;
      }
    }
    return false;
  }

  // Mirror of forbidden from above. Below g, man i can only be with a woman
  // at or before position g[i] of his list. If some woman w that j prefers
  // to his current choice ranks j above every other man still able to reach
  // her, then (j, w) blocks every assignment below g that keeps j in place.
  bool dual_forbidden(std::size_t j, const GlobalState& g) const override {
    for (int k = 0; k < g[j]; ++k) {
      const auto w = static_cast<std::size_t>(inst_.mpref[j][static_cast<std::size_t>(k)]);
      const auto& wrank = inst_.rank[w];
      bool someone_better = false;
      for (std::size_t i = 0; i < g.size() && !someone_better; ++i) {
        someone_better = i != j && pos_[i][w] <= g[i] && wrank[i] < wrank[j];
      }
      if (!someone_better) return true;
    }
    return false;
  }

 private:
  MarriageInstance inst_;
  ChainPoset poset_;
  std::vector<std::vector<int>> pos_;
};

// ---------------------------------------------------------------------------
// Housing market

class HousingAdapter final : public PredicateAdapter {
 public:
  explicit HousingAdapter(HousingInstance inst)
      : inst_(std::move(inst)),
        n_(static_cast<std::size_t>(std::max(inst_.n, 1))),
        poset_(std::vector<int>(n_, std::max(inst_.n - 1, 0))) {
    inst_.validate();
  }

  std::string_view name() const override { return "housing"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden; }

  // Every agent proposes a distinct house, and no earlier state F < g has a
  // submatching that g abandons.
  bool evaluate(const GlobalState& g) const override {
    check_state(poset_, g);
    std::vector<char> taken(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto& t = taken[target(i, g)];
      if (t) return false;
      t = 1;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (abandons_submatching(i, g)) return false;
    }
    return true;
  }

  bool forbidden(std::size_t i, const GlobalState& g) const override {
    return points_into_foreign_cycle(i, g) || abandons_submatching(i, g);
  }

 private:
  // Owner of the house agent i currently proposes to (house h is owned by h).
  std::size_t target(std::size_t i, const GlobalState& g) const {
    return static_cast<std::size_t>(inst_.pref[i][static_cast<std::size_t>(g[i])]);
  }

  bool on_cycle(std::size_t i, const GlobalState& g) const {
    std::size_t x = i;
    for (std::size_t step = 0; step < n_; ++step) {
      x = target(x, g);
      if (x == i) return true;
    }
    return false;
  }

  // The agents on a cycle of the proposal graph form a submatching; anyone
  // else proposing to one of their houses can never be matched there.
  bool points_into_foreign_cycle(std::size_t i, const GlobalState& g) const {
    return !on_cycle(i, g) && on_cycle(target(i, g), g);
  }

  // Agent i is on a cycle of some F <= g that uses an earlier proposal of i:
  // that submatching of F is not kept by any state with H[i] = g[i].
  bool abandons_submatching(std::size_t i, const GlobalState& g) const {
    for (int k = 0; k < g[i]; ++k) {
      const auto start = static_cast<std::size_t>(inst_.pref[i][static_cast<std::size_t>(k)]);
      if (reaches(start, i, g)) return true;
    }
    return false;
  }

  // Path from `from` to `to` using any proposal at or before each agent's
  // current one.
  bool reaches(std::size_t from, std::size_t to, const GlobalState& g) const {
    if (from == to) return true;
    std::vector<char> seen(n_, 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int k = 0; k <= g[x]; ++k) {
        const auto y = static_cast<std::size_t>(inst_.pref[x][static_cast<std::size_t>(k)]);
        if (y == to) return true;
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  HousingInstance inst_;
  std::size_t n_;
  ChainPoset poset_;
};

}  // namespace

std::unique_ptr<PredicateAdapter> stable_marriage_adapter(MarriageInstance inst) {
  return std::make_unique<StableMarriageAdapter>(std::move(inst));
}

std::unique_ptr<PredicateAdapter> housing_adapter(HousingInstance inst) {
  return std::make_unique<HousingAdapter>(std::move(inst));
}

}  // namespace latdet
