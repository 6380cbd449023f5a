#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "reflex/errors.hpp"
#include "reflex/lattice.hpp"
#include "reflex/numeric.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// Canonical key of a unimodular equivalence class.
///
/// The vertex-facet pairing matrix M[F][v] = <normal_F, v> is maximized
/// lexicographically (row-major) over all row and column permutations. Every
/// column order attaining the maximum is applied to the d x n vertex matrix,
/// which is then brought into row-style Hermite normal form; the largest of
/// those forms is the key. Two polytopes are unimodularly equivalent iff
/// their keys are equal.
struct NormalForm {
  IntMatrix matrix;                       // d x n, column j is a vertex
  std::vector<std::size_t> column_order;  // vertex indices of the winning order
  std::size_t maximizing_orders = 0;      // maximizing column orders found; symmetric ones are pruned when the vertices span

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.matrix == b.matrix; }

  /// Columns of the key matrix, which form an equivalent lattice polytope.
  std::vector<IntVector> vertices() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < matrix.cols(); ++j) out.push_back(matrix.column(j));
    return out;
  }
};

namespace detail {

template <class V>
class PairingSearch {
 public:
  PairingSearch(std::vector<V> pairing, std::size_t rows, std::size_t cols)
      : m_(std::move(pairing)), rows_(rows), cols_(cols) {}

  /// Column permutations preserving the matrix up to a row permutation.
  /// Branches related by one of them have identical futures, so only one
  /// row per orbit of the path stabilizer is tried. The search then finds
  /// some, not all, maximizing orders.
  void set_automorphisms(const std::vector<std::vector<std::uint32_t>>& column_maps) {
    std::map<std::vector<V>, std::uint32_t> index;
    for (std::uint32_t r = 0; r < rows_; ++r) index.emplace(std::vector<V>(&m_[r * cols_], &m_[(r + 1) * cols_]), r);
    if (index.size() != rows_) return;  // repeated rows: no row map
    std::vector<V> w(cols_);
    for (const auto& sigma : column_maps) {
      std::vector<std::uint32_t> tau(rows_);
      for (std::uint32_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols_; ++j) w[sigma[j]] = at(r, j);
        const auto it = index.find(w);
        if (it == index.end()) throw InternalError("normal_form: column map is not a pairing automorphism");
        tau[r] = it->second;
      }
      row_maps_.push_back(std::move(tau));
    }
  }

  /// All column orders attaining the lexicographic maximum.
  std::vector<std::vector<std::uint32_t>> run() {
    std::vector<State> states(1);
    states[0].order.resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) states[0].order[j] = static_cast<std::uint32_t>(j);
    states[0].starts.assign(cols_, 0);
    states[0].starts[0] = 1;
    states[0].used.assign(rows_, 0);
    for (std::uint32_t h = 0; h < row_maps_.size(); ++h) states[0].stab.push_back(h);
    if (cols_ == 1) make_discrete(states[0], 0);

    std::vector<V> best, row;
    std::vector<std::uint8_t> minimal;
    std::vector<std::pair<std::size_t, std::uint32_t>> winners;
    std::size_t step = 0;
    for (; step < rows_; ++step) {
      if (std::all_of(states.begin(), states.end(), [](const State& st) { return st.discrete; })) break;
      // Surviving states share their prefix rows, hence their block boundaries.
      blocks_.clear();
      for (std::size_t b = 0; b < cols_;) {
        std::size_t e = b + 1;
        while (e < cols_ && !states.front().starts[e]) ++e;
        blocks_.emplace_back(b, e);
        b = e;
      }
      best.clear();
      winners.clear();
      auto offer = [&](std::size_t s, std::uint32_t r) {
        if (best.empty() || best < row) {
          best = row;
          winners.clear();
          winners.emplace_back(s, r);
        } else if (row == best) {
          winners.emplace_back(s, r);
        }
      };
      for (std::size_t s = 0; s < states.size(); ++s) {
        const State& st = states[s];
        if (st.discrete) {
          permuted_row(st.tail[step - st.tail_from], st.order, row);
          offer(s, st.tail[step - st.tail_from]);
          continue;
        }
        // Rows mapped below themselves by the stabilizer are redundant.
        minimal.assign(rows_, 1);
        for (auto h : st.stab)
          for (std::uint32_t r = 0; r < rows_; ++r)
            if (row_maps_[h][r] < r) minimal[r] = 0;
        for (std::uint32_t r = 0; r < rows_; ++r) {
          if (st.used[r] || !minimal[r]) continue;
          if (!block_sorted_row(r, st, best, row)) continue;
          offer(s, r);
        }
      }

      std::vector<State> next;
      std::set<std::vector<std::uint32_t>> keys;
      for (auto [s, r] : winners) {
        if (states[s].discrete) {
          // A discrete state offers exactly one row per step.
          keys.insert(key_of(states[s]));
          next.push_back(std::move(states[s]));
          continue;
        }
        State ns = refine(states[s], r, step);
        if (keys.insert(key_of(ns)).second) next.push_back(std::move(ns));
      }
      states = std::move(next);
    }

    // Every survivor is discrete: its remaining rows are fixed, so compare
    // the tails wholesale and keep the maxima.
    auto tail_cmp = [&](const State& x, const State& y) {
      for (std::size_t k = step; k < rows_; ++k) {
        std::uint32_t rx = x.tail[k - x.tail_from], ry = y.tail[k - y.tail_from];
        for (std::size_t j = 0; j < cols_; ++j) {
          const V& a = at(rx, x.order[j]);
          const V& b = at(ry, y.order[j]);
          if (a != b) return a < b ? -1 : 1;
        }
      }
      return 0;
    };
    std::vector<std::size_t> top;
    for (std::size_t s = 0; s < states.size(); ++s) {
      int c = top.empty() ? 1 : tail_cmp(states[s], states[top.front()]);
      if (c > 0) top.assign(1, s);
      else if (c == 0) top.push_back(s);
    }

    std::vector<std::vector<std::uint32_t>> orders;
    for (std::size_t s : top) orders.push_back(std::move(states[s].order));
    return orders;
  }

 private:
  struct State {
    std::vector<std::uint32_t> order;
    std::vector<std::uint8_t> starts;  // 1 where a block of equal columns starts
    std::vector<std::uint8_t> used;
    std::vector<std::uint32_t> stab;   // automorphisms fixing every chosen row
    std::vector<std::uint32_t> tail;   // remaining rows in emission order, once discrete
    std::size_t tail_from = 0;
    bool discrete = false;
  };

  const V& at(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }

  void permuted_row(std::uint32_t r, const std::vector<std::uint32_t>& order, std::vector<V>& out) const {
    out.resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, order[j]);
  }

  /// Row r with every block sorted descending. Returns false as soon as
  /// the partial result falls below `bound`, leaving `out` incomplete.
  bool block_sorted_row(std::uint32_t r, const State& st, const std::vector<V>& bound, std::vector<V>& out) const {
    out.resize(cols_);
    const V* src = &m_[r * cols_];
    bool tied = !bound.empty();
    for (auto [b, e] : blocks_) {
      for (std::size_t j = b; j < e; ++j) {
        // insertion sort, descending; blocks are short
        V x = src[st.order[j]];
        std::size_t i = j;
        while (i > b && out[i - 1] < x) {
          out[i] = out[i - 1];
          --i;
        }
        out[i] = x;
      }
      if (tied) {
        for (std::size_t j = b; j < e; ++j) {
          if (out[j] < bound[j]) return false;
          if (bound[j] < out[j]) {
            tied = false;
            break;
          }
        }
      }
    }
    return true;
  }

  State refine(const State& st, std::uint32_t r, std::size_t step) const {
    State ns;
    ns.order = st.order;
    ns.starts.assign(cols_, 0);
    ns.used = st.used;
    ns.used[r] = 1;
    for (auto h : st.stab)
      if (row_maps_[h][r] == r) ns.stab.push_back(h);
    std::size_t b = 0;
    bool discrete = true;
    while (b < cols_) {
      std::size_t e = b + 1;
      while (e < cols_ && !st.starts[e]) ++e;
      auto first = ns.order.begin() + static_cast<std::ptrdiff_t>(b);
      auto last = ns.order.begin() + static_cast<std::ptrdiff_t>(e);
      // Descending by the new row; ascending vertex index inside ties keeps
      // equal states byte-identical for deduplication.
      std::sort(first, last, [&](std::uint32_t x, std::uint32_t y) {
        if (at(r, x) != at(r, y)) return at(r, y) < at(r, x);
        return x < y;
      });
      ns.starts[b] = 1;
      for (std::size_t j = b + 1; j < e; ++j) {
        if (at(r, ns.order[j]) != at(r, ns.order[j - 1]))
          ns.starts[j] = 1;
        else
          discrete = false;
      }
      b = e;
    }
    if (discrete) make_discrete(ns, step + 1);
    return ns;
  }

  void make_discrete(State& st, std::size_t from) const {
    st.discrete = true;
    st.stab.clear();
    st.tail_from = from;
    st.tail.clear();
    for (std::uint32_t r = 0; r < rows_; ++r)
      if (!st.used[r]) st.tail.push_back(r);
    std::sort(st.tail.begin(), st.tail.end(), [&](std::uint32_t x, std::uint32_t y) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const V& a = at(x, st.order[j]);
        const V& b = at(y, st.order[j]);
        if (a != b) return b < a;
      }
      return false;
    });
  }

  std::vector<std::uint32_t> key_of(const State& st) const {
    std::vector<std::uint32_t> key;
    key.push_back(st.discrete ? 1u : 0u);
    key.insert(key.end(), st.order.begin(), st.order.end());
    if (!st.discrete) {
      key.insert(key.end(), st.starts.begin(), st.starts.end());
      for (std::uint32_t r = 0; r < rows_; ++r)
        if (st.used[r]) key.push_back(r);
    }
    return key;
  }

  std::vector<V> m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> row_maps_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
};

inline std::vector<Integer> pairing_matrix(const LatticePolytope& p) {
  std::vector<Integer> m;
  m.reserve(p.facets().size() * p.num_vertices());
  for (const auto& f : p.facets())
    for (const auto& v : p.vertices()) m.push_back(dot(f.normal, v));
  return m;
}

/// Linear maps permuting the vertices, as column permutations. A linearly
/// independent set of vertices is sent to every tuple with the same Gram
/// entries of pairing columns, and the induced map is kept when it permutes
/// the vertex set. Gives up (returning what it has) after `limit` maps, or
/// returns nothing when coordinates are large.
inline std::vector<std::vector<std::uint32_t>> vertex_automorphisms(const LatticePolytope& p, const std::vector<std::int16_t>& m,
                                                                    std::size_t limit) {
  using I = std::int64_t;
  constexpr I bound = I{1} << 20;
  const std::size_t n = p.num_vertices(), d = p.dim(), rows = m.size() / n;
  auto small = [&](const Integer& x) { return x < bound && x > -bound; };

  std::vector<std::size_t> base;
  std::vector<IntVector> chosen;
  for (std::size_t j = 0; j < n && base.size() < d; ++j) {
    chosen.push_back(p.vertex(j));
    if (rank(IntMatrix::from_rows(chosen)) == chosen.size())
      base.push_back(j);
    else
      chosen.pop_back();
  }
  // v_j = sum_k mu[j][k] b_k / D
  const IntMatrix bt = IntMatrix::from_columns(chosen);
  const Integer big_d = det(bt);
  if (!small(big_d)) return {};
  const I den = static_cast<I>(big_d);
  std::vector<std::vector<I>> mu(n, std::vector<I>(d)), vs(n, std::vector<I>(d));
  std::map<std::vector<I>, std::uint32_t> index;
  for (std::size_t j = 0; j < n; ++j) {
    const RatVector lam = solve_rational(bt, p.vertex(j));
    for (std::size_t k = 0; k < d; ++k) {
      const Rational x = lam[k] * big_d;
      if (denominator(x) != 1 || !small(numerator(x)) || !small(p.vertex(j)[k])) return {};
      mu[j][k] = static_cast<I>(numerator(x));
      vs[j][k] = static_cast<I>(p.vertex(j)[k]);
    }
    index.emplace(vs[j], static_cast<std::uint32_t>(j));
  }

  std::vector<I> gram(n * n, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram[i * n + j] += I{m[r * n + i]} * m[r * n + j];

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> img(d);
  std::vector<std::uint8_t> taken(n, 0), seen(n);
  std::vector<I> w(d);
  auto leaf = [&] {
    std::vector<std::uint32_t> sigma(n);
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(w.begin(), w.end(), 0);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) w[i] += mu[j][k] * vs[img[k]][i];
      for (auto& x : w) {
        if (x % den != 0) return;
        x /= den;
      }
      const auto it = index.find(w);
      if (it == index.end() || seen[it->second]) return;
      seen[it->second] = 1;
      sigma[j] = it->second;
    }
    out.push_back(std::move(sigma));
  };
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= limit) return;
    if (k == d) return leaf();
    const std::size_t b = base[k];
    for (std::size_t c = 0; c < n; ++c) {
      if (taken[c] || gram[c * n + c] != gram[b * n + b]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) ok = gram[c * n + img[l]] == gram[b * n + base[l]];
      if (!ok) continue;
      img[k] = c;
      taken[c] = 1;
      self(self, k + 1);
      taken[c] = 0;
    }
  };
  extend(extend, 0);
  return out;
}

/// Column orders attaining the lexicographic maximum of the pairing matrix.
/// With `all` false, branches related by a lattice automorphism are pruned
/// and only some maximizing orders are returned.
inline std::vector<std::vector<std::uint32_t>> maximizing_orders(const LatticePolytope& p, bool all = true) {
  auto m = pairing_matrix(p);
  const std::size_t rows = p.facets().size(), cols = p.num_vertices();
  auto fits = [&](auto limit_type) {
    using L = decltype(limit_type);
    return std::all_of(m.begin(), m.end(), [](const Integer& x) {
      return x <= std::numeric_limits<L>::max() && x >= std::numeric_limits<L>::min();
    });
  };
  auto narrow = [&](auto limit_type) {
    using L = decltype(limit_type);
    std::vector<L> out;
    out.reserve(m.size());
    for (const auto& x : m) out.push_back(static_cast<L>(x));
    return out;
  };
  if (fits(std::int16_t{})) {
    auto small = narrow(std::int16_t{});
    PairingSearch<std::int16_t> search(small, rows, cols);
    if (!all) search.set_automorphisms(vertex_automorphisms(p, small, 4096));
    return search.run();
  }
  if (fits(std::int64_t{})) return PairingSearch<std::int64_t>(narrow(std::int64_t{}), rows, cols).run();
  return PairingSearch<Integer>(std::move(m), rows, cols).run();
}

}  // namespace detail

namespace detail {

/// True when the vertices generate Z^d as a group.
inline bool vertices_span_lattice(const LatticePolytope& p) {
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(p.vertices())).h;
  Integer index = 1;
  for (std::size_t i = 0; i < p.dim(); ++i) index *= h(i, i);
  return abs_value(index) == 1;
}

}  // namespace detail

inline NormalForm normal_form(const LatticePolytope& p) {
  // Two maximizing orders differ by a linear automorphism of the vertex set.
  // It is unimodular when the vertices span the lattice, so one order suffices.
  const bool spanning = detail::vertices_span_lattice(p);
  const auto orders = detail::maximizing_orders(p, !spanning);
  const std::size_t d = p.dim(), n = p.num_vertices();
  const std::size_t tried = spanning ? 1 : orders.size();
  return detail::with_fast_path([&]<class T>() {
    std::vector<std::vector<T>> columns(n, std::vector<T>(d));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < d; ++i) columns[j][i] = detail::convert<T>(p.vertex(j)[i]);
    std::vector<T> best;
    std::size_t best_index = 0;
    std::vector<T> a(d * n);
    for (std::size_t k = 0; k < tried; ++k) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = columns[orders[k][j]][i];
      detail::hermite_in_place<T>(a, d, n, nullptr);
      if (best.empty() || best < a) {
        best.swap(a);
        a.resize(d * n);
        best_index = k;
      }
    }
    NormalForm nf{detail::to_matrix(best, d, n), {}, orders.size()};
    for (auto j : orders[best_index]) nf.column_order.push_back(j);
    return nf;
  });
}

namespace detail {

/// Cheap isomorphism invariant: sorted multiset of sorted pairing rows.
inline std::vector<std::vector<Integer>> pairing_profile(const LatticePolytope& p) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& f : p.facets()) {
    std::vector<Integer> r;
    for (const auto& v : p.vertices()) r.push_back(dot(f.normal, v));
    std::sort(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace detail

inline bool is_isomorphic(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices()) return false;
  if (p.facets().size() != q.facets().size()) return false;
  if (detail::pairing_profile(p) != detail::pairing_profile(q)) return false;
  return normal_form(p).matrix == normal_form(q).matrix;
}

/// One representative per normal form, first occurrence kept, order preserved.
inline std::vector<LatticePolytope> dedupe(const std::vector<LatticePolytope>& classes) {
  std::set<IntMatrix> seen;
  std::vector<LatticePolytope> out;
  for (const auto& p : classes)
    if (seen.insert(normal_form(p).matrix).second) out.push_back(p);
  return out;
}

}  // namespace reflex
