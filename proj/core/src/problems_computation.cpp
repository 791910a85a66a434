#include <optional>

#include "latdet/error.hpp"
#include "latdet/problems.hpp"

namespace latdet {

namespace {

class ConjunctiveAdapter final : public PredicateAdapter {
 public:
  explicit ConjunctiveAdapter(Computation c) : comp_(std::move(c)), poset_(comp_.poset()) {}

  std::string_view name() const override { return "conjunctive"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden | Hook::DualForbidden | Hook::Rejection; }

  bool evaluate(const GlobalState& g) const override {
    if (!is_ideal(poset_, g)) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!holds(i, g[i])) return false;
    }
    return true;
  }

  // l_i is false here, or some process has executed an event whose causal
  // past needs more of process i than g has.
  bool forbidden(std::size_t i, const GlobalState& g) const override {
    if (!holds(i, g[i])) return true;
    if (poset_.is_product()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] > 0 && poset_.clock(j, g[j])[i] > g[i]) return true;
    }
    return false;
  }

  // l_i is false here, or process i's last event needs more of some other
  // process than g has.
  bool dual_forbidden(std::size_t i, const GlobalState& g) const override {
    if (!holds(i, g[i])) return true;
    if (poset_.is_product() || g[i] == 0) return false;
    const auto clock = poset_.clock(i, g[i]);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (clock[j] > g[j]) return true;
    }
    return false;
  }

  // Eliminating every state of P_i up to j puts event j+1 of P_i in the cut.
  // That is forced onward when l_i fails at j+1, and it drags in the causal
  // past of the event on every other process.
  RejectionGraph rejection_graph() const override {
    const std::size_t n = comp_.process_count();
    RejectionGraph r;
    r.heights.assign(poset_.heights().begin(), poset_.heights().end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!holds(i, 0)) r.seeds.push_back({i, 0});
      for (int j = 0; j < comp_.events(i); ++j) {
        if (!holds(i, j + 1)) r.edges.push_back({{i, j}, {i, j + 1}});
        const auto& vc = comp_.clocks[i][static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < n; ++k) {
          if (k != i && vc[k] > 0) r.edges.push_back({{i, j}, {k, vc[k] - 1}});
        }
      }
    }
    return r;
  }

 private:
  bool holds(std::size_t i, int state) const {
    return comp_.local_predicate[i][static_cast<std::size_t>(state)];
  }

  Computation comp_;
  ChainPoset poset_;
};

}  // namespace

std::unique_ptr<PredicateAdapter> conjunctive_adapter(Computation c) {
  return std::make_unique<ConjunctiveAdapter>(std::move(c));
}

DetectionOutcome level_k_conjunctive_detect(const Computation& c, std::int64_t k,
                                            std::uint64_t budget) {
  const ChainPoset poset = c.poset();
  std::optional<GlobalState> hit;
  for_each_ideal(
      poset,
      [&](const GlobalState& g) {
        if (c.level(g) != k) return true;
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!c.local_predicate[i][static_cast<std::size_t>(g[i])]) return true;
        }
        hit = g;
        return false;
      },
      budget);
  if (!hit) return DetectionOutcome::not_found(0, 0);
  return DetectionOutcome::found_at(std::move(*hit), 0, 0);
}

}  // namespace latdet
