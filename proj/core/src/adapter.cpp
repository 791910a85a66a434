#include "latdet/adapter.hpp"

#include <string>

#include "latdet/error.hpp"
#include "latdet/parallel.hpp"

namespace latdet {

namespace {

[[noreturn]] void missing(const PredicateAdapter& a, const char* hook) {
  throw Unsupported(std::string(a.name()) + " does not provide " + hook);
}

IndexSet collect(const PredicateAdapter& adapter, const GlobalState& g, unsigned workers,
                 bool dual) {
  const std::size_t n = adapter.poset().chains();
  std::vector<char> flags(n, 0);
  parallel_for(n, workers, [&](std::size_t i) {
    flags[i] = dual ? adapter.dual_forbidden(i, g) : adapter.forbidden(i, g);
  });
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

IndexSet PredicateAdapter::helpful_set(const GlobalState&) const { missing(*this, "helpful_set"); }
IndexSet PredicateAdapter::independent_set(const GlobalState&) const {
  missing(*this, "independent_set");
}
bool PredicateAdapter::forbidden(std::size_t, const GlobalState&) const {
  missing(*this, "forbidden");
}
bool PredicateAdapter::dual_forbidden(std::size_t, const GlobalState&) const {
  missing(*this, "dual_forbidden");
}
RejectionGraph PredicateAdapter::rejection_graph() const { missing(*this, "rejection_graph"); }

IndexSet forbidden_set(const PredicateAdapter& adapter, const GlobalState& g, unsigned workers) {
  return collect(adapter, g, workers, false);
}

IndexSet dual_forbidden_set(const PredicateAdapter& adapter, const GlobalState& g,
                            unsigned workers) {
  return collect(adapter, g, workers, true);
}

}  // namespace latdet
