#pragma once

// Linear substitution in multihomogeneous polynomials, generic in the
// coefficient ring (field scalars or polynomials in a parameter).

#include <map>
#include <vector>

#include "svt/tensor.hpp"

namespace svt::detail {

template <class C>
using SparsePoly = std::map<std::vector<int>, C, KeyOrder>;

/// prod_i (sum_k lin[i][k] y_k)^{m_i} in out_dim variables.
template <class C>
SparsePoly<C> expand_power_product(const std::vector<std::vector<C>>& lin, const std::vector<int>& m,
                                   int out_dim, const C& one) {
  SparsePoly<C> cur;
  cur.emplace(std::vector<int>(out_dim, 0), one);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int r = 0; r < m[i]; ++r) {
      SparsePoly<C> next;
      for (const auto& [key, c] : cur) {
        for (int k = 0; k < out_dim; ++k) {
          const C& a = lin[i][k];
          if (a.is_zero()) continue;
          std::vector<int> nk = key;
          ++nk[k];
          auto it = next.find(nk);
          if (it == next.end()) next.emplace(std::move(nk), c * a);
          else it->second += c * a;
        }
      }
      cur.clear();
      for (auto& [k, c] : next)
        if (!c.is_zero()) cur.emplace(k, std::move(c));
    }
  }
  return cur;
}

/// Substitutes x_i -> sum_k lin[j][i][k] y_k in slot j of every term.
/// in_dims/out_dims give the per-slot variable counts.
template <class C, class Terms>
SparsePoly<C> substitute(const Terms& terms, const std::vector<int>& in_dims, const std::vector<int>& out_dims,
                         const std::vector<std::vector<std::vector<C>>>& lin, const C& one) {
  const std::size_t e = in_dims.size();
  std::vector<std::map<std::vector<int>, SparsePoly<C>>> cache(e);
  SparsePoly<C> out;
  std::vector<const SparsePoly<C>*> parts(e);
  for (const auto& [key, coeff] : terms) {
    int off = 0;
    for (std::size_t j = 0; j < e; ++j) {
      std::vector<int> m(key.begin() + off, key.begin() + off + in_dims[j]);
      off += in_dims[j];
      auto it = cache[j].find(m);
      if (it == cache[j].end())
        it = cache[j].emplace(m, expand_power_product(lin[j], m, out_dims[j], one)).first;
      parts[j] = &it->second;
    }
    // Cartesian product of the per-slot expansions.
    std::vector<std::pair<std::vector<int>, C>> acc{{{}, one * coeff}};
    for (std::size_t j = 0; j < e; ++j) {
      std::vector<std::pair<std::vector<int>, C>> next;
      next.reserve(acc.size() * parts[j]->size());
      for (const auto& [k, c] : acc)
        for (const auto& [pk, pc] : *parts[j]) {
          std::vector<int> nk = k;
          nk.insert(nk.end(), pk.begin(), pk.end());
          next.emplace_back(std::move(nk), c * pc);
        }
      acc = std::move(next);
    }
    for (auto& [k, c] : acc) {
      auto it = out.find(k);
      if (it == out.end()) out.emplace(std::move(k), std::move(c));
      else it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

}  // namespace svt::detail
