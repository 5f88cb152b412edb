#include "sn/fredholm.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "sn/ideal.hpp"
#include "sn/linalg.hpp"

namespace sn {

namespace {

// Multi-indices of the cube {alpha <= d} with max entry exactly d.
std::vector<MultiIndex> shell(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  for (;;) {
    if (cur.max_entry() == d) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == d) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::int64_t box_size(int n, int d) {
  std::int64_t s = 1;
  for (int i = 0; i < n; ++i) s *= d + 1;
  return s;
}

SparseVector<MultiIndex> to_sparse(const PolyElement& p) { return {p.terms().begin(), p.terms().end()}; }

int resolve_cap(const Element& a, const Stabilization& opts) { return opts.cap < 0 ? default_cap(a) : opts.cap; }

void check_window(const Stabilization& opts) {
  if (opts.window < 1) throw ArgumentError("stabilization window must be positive");
}

// For n = 1 a kernel vector of a has degree below 3 * support_degree, so a
// window that long forces the last box past it.
int effective_window(const Element& a, const Stabilization& opts) {
  const int m = a.support_degree();
  return std::max(opts.window, a.n() == 1 ? 3 * m : m + 1);
}

// Tracks the last `window` values of a truncated dimension sequence.
class Settler {
 public:
  explicit Settler(int window) : window_(static_cast<std::size_t>(window)) {}
  bool push(int v) {
    recent_.push_back(v);
    if (recent_.size() > window_) recent_.pop_front();
    return recent_.size() == window_ && std::all_of(recent_.begin(), recent_.end(), [&](int x) { return x == v; });
  }
  [[nodiscard]] int last() const { return recent_.empty() ? 0 : recent_.back(); }

 private:
  std::size_t window_;
  std::deque<int> recent_;
};

// Orders monomials by descending max entry, so an echelon pivot is the
// highest-degree term of its row.
struct GradedKey {
  int neg_degree;
  MultiIndex m;
  friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
};

// Codimension of (image of a) within each box {max entry <= d}. Rows whose
// pivot lies in the box span the part of the image inside it.
KernelResult direct_cokernel(const Element& a, const Stabilization& opts) {
  check_window(opts);
  const int n = a.n();
  const int cap = resolve_cap(a, opts);
  const int reach = a.support_degree();
  Settler settle(effective_window(a, opts));
  EchelonBasis<GradedKey> images;
  int fed = -1;
  for (int d = 0; d <= cap; ++d) {
    for (; fed < d + reach; ++fed) {
      for (const MultiIndex& g : shell(n, fed + 1)) {
        const PolyElement image = apply(a, g);
        SparseVector<GradedKey> v;
        for (const auto& [k, q] : image.terms()) v.emplace(GradedKey{-k.max_entry(), k}, q);
        images.insert(std::move(v));
      }
    }
    const auto& rows = images.rows();
    const auto inside = std::distance(rows.lower_bound(GradedKey{-d, MultiIndex(n)}), rows.end());
    if (settle.push(static_cast<int>(box_size(n, d) - inside))) {
      KernelResult r;
      r.dim = settle.last();
      r.stabilized_at = d;
      return r;
    }
  }
  throw NotStabilized(cap, settle.last());
}

}  // namespace

int default_cap(const Element& a) { return a.support_degree() * 4 + 8; }

KernelResult truncated_kernel(const Element& a, Stabilization opts, bool want_basis) {
  check_window(opts);
  const int n = a.n();
  const int cap = resolve_cap(a, opts);
  EchelonBasis<MultiIndex> images;
  std::vector<MultiIndex> columns;
  std::vector<EchelonBasis<MultiIndex>::Combination> nulls;
  Settler settle(effective_window(a, opts));
  for (int d = 0; d <= cap; ++d) {
    for (const MultiIndex& g : shell(n, d)) {
      const int tag = static_cast<int>(columns.size());
      columns.push_back(g);
      EchelonBasis<MultiIndex>::Combination combo;
      if (!images.insert(to_sparse(apply(a, g)), want_basis ? tag : -1, want_basis ? &combo : nullptr) &&
          want_basis) {
        nulls.push_back(std::move(combo));
      }
    }
    const int dim = static_cast<int>(box_size(n, d) - images.rank());
    if (settle.push(dim)) {
      KernelResult r;
      r.dim = dim;
      r.stabilized_at = d;
      for (const auto& combo : nulls) {
        PolyElement p(n);
        for (const auto& [tag, q] : combo) p.add_term(columns[static_cast<std::size_t>(tag)], q);
        r.basis.push_back(std::move(p));
      }
      return r;
    }
  }
  throw NotStabilized(cap, settle.last());
}

int kernel_dim(const Element& a, Stabilization opts) { return truncated_kernel(a, opts).dim; }

IndexReport index(const Element& a, Stabilization opts) {
  const KernelResult k = truncated_kernel(a, opts);
  const KernelResult c = direct_cokernel(a, opts);
  IndexReport r;
  r.ker = k.dim;
  r.coker = c.dim;
  r.index = k.dim - c.dim;
  r.stabilized_at = std::max(k.stabilized_at, c.stabilized_at);
  return r;
}

int direct_coker_dim(const Element& a, Stabilization opts) { return direct_cokernel(a, opts).dim; }

bool perturb_invariance_check(const Element& a, const Element& f, Stabilization opts) {
  if (!ideal_member(f, IdealSpec::matrix_ideal())) throw MembershipError("perturbation is not in F_n");
  return index(a + f, opts).index == index(a, opts).index;
}

namespace {

std::vector<MultiIndex> rref_pivots(const std::vector<PolyElement>& vectors) {
  EchelonBasis<MultiIndex> basis;
  for (const auto& p : vectors) basis.insert(to_sparse(p));
  std::vector<MultiIndex> pivots;
  for (const auto& [pivot, row] : basis.reduced_rows()) pivots.push_back(pivot);
  return pivots;
}

}  // namespace

Element fredholm_correction(const Element& a, Stabilization opts) {
  const int n = a.n();
  const KernelResult ker = truncated_kernel(a, opts, true);
  const KernelResult coker = truncated_kernel(involution(a), opts, true);
  if (ker.dim != coker.dim) throw ArgumentError("fredholm_correction needs index 0");
  const std::vector<MultiIndex> from = rref_pivots(ker.basis);
  const std::vector<MultiIndex> to = rref_pivots(coker.basis);
  Element f(n);
  const CoordSet full = CoordSet::full(n);
  for (std::size_t k = 0; k < from.size(); ++k) f += matrix_unit(n, full, to[k], from[k]);
  const Element fixed = a + f;
  if (kernel_dim(fixed, opts) != 0 || direct_coker_dim(fixed, opts) != 0) {
    throw FactorizationError("fredholm_correction", "a + f is not bijective on the truncations");
  }
  return f;
}

int ind_i(const Element& u, int i, Stabilization opts) {
  if (i < 1 || i > u.n()) throw ArgumentError("coordinate out of range");
  const std::vector<Element> parts = corank_one_components(u);
  return index(Element::one(u.n()) + parts[static_cast<std::size_t>(i - 1)], opts).index;
}

std::vector<int> ind_vector(const Element& u, Stabilization opts) {
  const std::vector<Element> parts = corank_one_components(u);
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(index(Element::one(u.n()) + p, opts).index);
  return out;
}

}  // namespace sn
