#pragma once

// Test-only helpers: random instances and the worked examples.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "svt/matrix.hpp"
#include "svt/tensor.hpp"

namespace svt::testing {

inline const Field Q = Field::rationals();

inline Scalar small_scalar(std::mt19937_64& rng, const Field& f, int range = 5) {
  return Scalar(f, static_cast<long>(rng() % (2 * range + 1)) - range);
}

inline Vector random_vector(std::mt19937_64& rng, const Field& f, int n) {
  Vector v;
  for (int i = 0; i < n; ++i) v.push_back(small_scalar(rng, f));
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, int r, int c) {
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = small_scalar(rng, f, 3);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, const Field& f, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, f, n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

inline Format random_format(std::mt19937_64& rng, const Field& f, int max_e, int max_dim, int max_deg) {
  int e = 1 + static_cast<int>(rng() % max_e);
  std::vector<Factor> fs;
  for (int j = 0; j < e; ++j)
    fs.push_back({1 + static_cast<int>(rng() % max_dim), 1 + static_cast<int>(rng() % max_deg)});
  return Format(f, fs);
}

inline SVTensor random_tensor(std::mt19937_64& rng, const Format& f, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  SVTensor t(f);
  for (const auto& k : all_keys(f))
    if (u(rng) < density) t.add_unchecked(k, small_scalar(rng, f.field()));
  return t;
}

/// Every slot dimension is at most the dimension of the complementary space.
inline bool concise_possible(const Format& f) {
  for (int j = 0; j < f.e(); ++j)
    if (flattening(SVTensor(f), j).cols() < static_cast<std::size_t>(f.dim(j))) return false;
  return true;
}

inline Format random_concise_format(std::mt19937_64& rng, const Field& field, int max_e, int max_dim, int max_deg,
                                    int min_total_degree = 1) {
  for (;;) {
    Format f = random_format(rng, field, max_e, max_dim, max_deg);
    if (concise_possible(f) && f.total_degree() >= min_total_degree) return f;
  }
}

/// Random tensor that is concise (retries until it is).
inline SVTensor random_concise(std::mt19937_64& rng, const Format& f, double density = 0.6) {
  if (!concise_possible(f)) throw std::logic_error("no concise tensor exists in this format");
  for (;;) {
    SVTensor t = random_tensor(rng, f, density);
    if (is_concise(t)) return t;
  }
}

inline SVTensor two_by_two_by_two(const Field& f = Q) {
  Format fm(f, {{2, 1}, {2, 1}, {2, 1}});
  return parse_expression(fm, "a1*b1*c1 + a1*b2*c2 + a2*b1*c2 + a2*b2*c1");
}

/// Cubic in six variables x1..x6 standing for the Jordan basis
/// x(3,2), x(3,1), x(3,0), x(2,1), x(2,0), x(1,0).
inline SVTensor jordan_cubic(const Field& f = Q) {
  Format fm(f, {{6, 3}});
  return parse_expression(fm, "x1*x4*x6 - 2*x2*x1*x4 - x1^2*x5 + 3*x3*x1^2 + 3*x2^2*x1");
}

/// The nilpotent L of jordan_cubic: x3 -> x2 -> x1 -> 0, x5 -> x4 -> 0, x6 -> 0.
inline Matrix jordan_cubic_l(const Field& f = Q) {
  return Matrix::from_ints(f, {{0, 1, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0}});
}

/// T = sum_k h_{k-1}(T_k), a nilpotent tuple L in its centroid, and the
/// generating data. Built in Jordan coordinates, then disguised by a random
/// change of basis in every slot.
struct NilpotentInstance {
  SVTensor t;
  EndoTuple l;
  int n = 1;
  std::vector<std::vector<int>> heights;  // per slot, Jordan column heights
};

/// Complete homogeneous sum of the leg actions of M_j^i, via Newton's
/// identities h_m = (1/m) sum_i p_i h_{m-i} with p_i = sum_j M_j^i contracted into slot j.
inline SVTensor newton_layer(const SVTensor& tk, int k, const std::vector<Matrix>& m) {
  const Field& field = tk.field();
  std::vector<SVTensor> h{tk};
  for (int deg = 1; deg < k; ++deg) {
    SVTensor acc(tk.format());
    for (int i = 1; i <= deg; ++i)
      for (int j = 0; j < tk.format().e(); ++j) acc += contract_op(h[deg - i], j, m[j].pow(i));
    h.push_back(acc * Scalar(field, mpq_class(1, deg)));
  }
  return h.back();
}

inline NilpotentInstance nilpotent_instance(std::mt19937_64& rng, const Field& field, const std::vector<int>& degrees,
                                            int n, int max_dim, double density = 0.5, bool concise = false) {
  const int e = static_cast<int>(degrees.size());
  std::uniform_real_distribution<double> u(0, 1);
  // Some Jordan shapes admit no concise tensor; draw a new shape after a few misses.
  for (;;) {
    NilpotentInstance out;
    out.n = n;
    std::vector<Factor> fs;
    std::vector<std::vector<std::pair<int, int>>> labels(e);
    std::vector<Matrix> lj, mj;
    for (int j = 0; j < e; ++j) {
      std::vector<int> hs{n};
      int dim = n;
      for (;;) {
        int h = 1 + static_cast<int>(rng() % n);
        if (dim + h > max_dim || rng() % 3 == 0) break;
        hs.push_back(h);
        dim += h;
      }
      std::sort(hs.rbegin(), hs.rend());
      out.heights.push_back(hs);
      fs.push_back({dim, degrees[j]});
      Matrix l(field, dim, dim), m(field, dim, dim);
      int pos = 0;
      for (int q : hs) {
        // Positions x^{(q,q-1)}, ..., x^{(q,0)}.
        for (int r = q - 1; r >= 0; --r, ++pos) {
          labels[j].emplace_back(q, r);
          if (r > 0) {
            m(pos + 1, pos) = Scalar::one(field);
            l(pos, pos + 1) = Scalar::one(field);
          }
        }
      }
      lj.push_back(l);
      mj.push_back(m);
    }
    Format f(field, fs);
    if (concise && !concise_possible(f)) continue;
    for (int attempt = 0; attempt < 20; ++attempt) {
      SVTensor tj(f);
      bool top_nonzero = false;
      for (int k = 1; k <= n; ++k) {
        SVTensor tk(f);
        for (const auto& key : all_keys(f)) {
          bool ok = true;
          for (int j = 0; j < e && ok; ++j)
            for (int i = 0; i < f.dim(j) && ok; ++i)
              if (key[f.offset(j) + i] != 0) {
                auto [q, r] = labels[j][i];
                ok = r == q - 1 && q >= k;
              }
          if (ok && u(rng) < density) tk.add_unchecked(key, small_scalar(rng, field));
        }
        if (k == n) top_nonzero = !tk.is_zero();
        tj += newton_layer(tk, k, mj);
      }
      if (!top_nonzero || (concise && !is_concise(tj))) continue;
      std::vector<Matrix> g;
      EndoTuple l;
      for (int j = 0; j < e; ++j) {
        g.push_back(random_invertible(rng, field, f.dim(j)));
        l.mats.push_back(g.back() * lj[j] * inverse(g.back()));
      }
      out.t = push_forward(tj, g);
      out.l = l;
      return out;
    }
  }
}

// The symmetric tensor in V^{(x)d} that a form of degree d corresponds to.
inline SVTensor polarize(const SVTensor& f) {
  const int n = f.format().dim(0), d = f.format().degree(0);
  Format seg(f.field(), std::vector<Factor>(d, Factor{n, 1}));
  SVTensor out(seg);
  mpz_class dfact;
  mpz_fac_ui(dfact.get_mpz_t(), d);
  std::vector<int> idx(d, 0);
  for (;;) {
    Key m(n, 0), k(static_cast<std::size_t>(n) * d, 0);
    for (int s = 0; s < d; ++s) {
      ++m[idx[s]];
      k[s * n + idx[s]] = 1;
    }
    mpz_class mf = 1;
    for (int v : m) {
      mpz_class x;
      mpz_fac_ui(x.get_mpz_t(), v);
      mf *= x;
    }
    out.add_unchecked(k, f.coeff(m) * Scalar(f.field(), mpq_class(mf, dfact)));
    int s = d - 1;
    while (s >= 0 && ++idx[s] == n) idx[s--] = 0;
    if (s < 0) break;
  }
  return out;
}

}  // namespace svt::testing
