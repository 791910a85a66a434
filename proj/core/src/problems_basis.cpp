#include <boost/multiprecision/cpp_int.hpp>

#include "latdet/error.hpp"
#include "latdet/problems.hpp"

namespace latdet {

namespace {

using boost::multiprecision::cpp_int;
using Row = std::vector<cpp_int>;

// Integer row echelon form built by fraction-free elimination. Each stored
// row is zero at the pivots of the rows stored before it.
class Echelon {
 public:
  /// Residue of v after elimination against the stored rows, scaled to
  /// primitive form. Zero iff v lies in their rational span.
  Row reduce(Row v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const cpp_int a = row[pivot];
      const cpp_int b = v[pivot];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = a * v[c] - b * row[c];
      normalize(v);
    }
    return v;
  }

  /// False if v was dependent (nothing stored).
  bool insert(Row v) {
    v = reduce(std::move(v));
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        rows_.emplace_back(c, std::move(v));
        return true;
      }
    }
    return false;
  }

  static bool is_zero(const Row& v) {
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  static void normalize(Row& v) {
    cpp_int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1) {
      for (auto& x : v) x /= g;
    }
  }

  std::vector<std::pair<std::size_t, Row>> rows_;
};

class BasisAdapter final : public PredicateAdapter {
 public:
  explicit BasisAdapter(VectorSet s)
      : set_(std::move(s)),
        poset_(set_.vectors.empty() ? ChainPoset(std::vector<int>{0})
                                    : ChainPoset::boolean(set_.vectors.size())) {
    set_.validate();
    for (const auto& v : set_.vectors) rows_.emplace_back(v.begin(), v.end());
    committed_ = build(poset_.bottom());
  }

  std::string_view name() const override { return "basis"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Helpful; }

  bool evaluate(const GlobalState& g) const override {
    const Span s = span_for(g);
    return s.independent && outside(s, g).empty();
  }

  IndexSet helpful_set(const GlobalState& g) const override {
    const Span s = span_for(g);
    if (!s.independent) return unchosen(g);
    return outside(s, g);
  }

  void commit(const GlobalState& g) override {
    auto& prev = committed_.state;
    if (committed_.independent && prev.size() == g.size() && prev.precedes_or_equals(g)) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != prev[i] && i < rows_.size()) {
          committed_.independent &= committed_.echelon.insert(rows_[i]);
        }
      }
      committed_.state = g;
      return;
    }
    committed_ = build(g);
  }

 private:
  struct Span {
    GlobalState state;
    Echelon echelon;
    bool independent = true;
  };

  Span build(const GlobalState& g) const {
    if (g.size() != poset_.chains()) throw InvalidInput("basis: state dimension mismatch");
    Span s{g, {}, true};
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (g[i]) s.independent &= s.echelon.insert(rows_[i]);
    }
    return s;
  }

  Span span_for(const GlobalState& g) const {
    if (g == committed_.state) return committed_;
    return build(g);
  }

  IndexSet unchosen(const GlobalState& g) const {
    IndexSet out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!g[i]) out.push_back(i);
    }
    return out;
  }

  IndexSet outside(const Span& s, const GlobalState& g) const {
    IndexSet out;
    for (std::size_t i : unchosen(g)) {
      if (!Echelon::is_zero(s.echelon.reduce(rows_[i]))) out.push_back(i);
    }
    return out;
  }

  VectorSet set_;
  ChainPoset poset_;
  std::vector<Row> rows_;
  Span committed_;
};

}  // namespace

std::unique_ptr<PredicateAdapter> basis_adapter(VectorSet s) {
  return std::make_unique<BasisAdapter>(std::move(s));
}

}  // namespace latdet
