#include "akchar/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "akchar/parallel.hpp"

namespace akchar {

namespace {

using Matrix = std::vector<std::vector<MultiPoly>>;

MultiPoly determinant(const Matrix& a, std::size_t num_u) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly::constant(1, num_u);
  if (n == 1) return a[0][0];
  MultiPoly det(num_u);
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(a[r][c]);
      }
      minor.push_back(std::move(row));
    }
    MultiPoly term = a[0][col] * determinant(minor, num_u);
    if (col % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

Matrix delete_row_col(const Matrix& a, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == row) continue;
    std::vector<MultiPoly> line;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (c != col) line.push_back(a[r][c]);
    }
    out.push_back(std::move(line));
  }
  return out;
}

class ExprBuilder {
 public:
  explicit ExprBuilder(std::size_t m) : m_(m) {}

  MultiPoly one() const { return MultiPoly::constant(1, m_); }
  MultiPoly u(std::size_t i) const { return MultiPoly::u_power(i, 1, m_); }
  MultiPoly q() const { return MultiPoly::q_power(1, m_); }

  OpPoly word(OperatorWord w) const { return {{one(), std::move(w)}}; }
  OpPoly scalar(const MultiPoly& c) const { return {{c, {}}}; }
  /// x - c where x is the single-symbol word.
  OpPoly minus(OperatorSymbol x, const MultiPoly& c) const { return {{one(), {x}}, {-c, {}}}; }

  OpExpr product(std::vector<OpPoly> factors, MultiPoly coeff) const { return {{std::move(coeff), std::move(factors)}}; }
  OpExpr product(std::vector<OpPoly> factors) const { return product(std::move(factors), one()); }
  OpExpr words(OperatorWord w) const { return product({word(std::move(w))}); }
  OpExpr zero() const { return {}; }

 private:
  std::size_t m_;
};

}  // namespace

bool RelationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.passed; });
}

std::size_t RelationReport::num_failed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const RelationResult& r) { return !r.passed; }));
}

TensorState apply_expr(const SuperRep& rep, const OpExpr& expr, const TensorState& state) {
  TensorState total(state.n(), state.num_u());
  for (const auto& prod : expr) {
    TensorState s = state;
    for (auto f = prod.factors.rbegin(); f != prod.factors.rend(); ++f) {
      TensorState next(state.n(), state.num_u());
      for (const auto& [c, word] : *f) {
        TensorState part = rep.apply(word, s);
        part *= c;
        next += part;
      }
      s = std::move(next);
    }
    s *= prod.coeff;
    total += s;
  }
  return total;
}

RelationResult check_identity(const SuperRep& rep, std::string name, const OpExpr& lhs, const OpExpr& rhs,
                              unsigned jobs) {
  const std::size_t dim = rep.dimension();
  const std::size_t chunks = std::max(1u, jobs);
  const std::size_t per_chunk = (dim + chunks - 1) / chunks;
  auto firsts = parallel_map(chunks, jobs, [&](std::size_t c) -> std::optional<std::size_t> {
    const std::size_t begin = c * per_chunk;
    const std::size_t end = std::min(dim, begin + per_chunk);
    for (std::size_t i = begin; i < end; ++i) {
      const TensorState v = TensorState::basis(rep.basis_word(i), rep.num_u());
      if (!(apply_expr(rep, lhs, v) == apply_expr(rep, rhs, v))) return i;
    }
    return std::nullopt;
  });
  RelationResult result{std::move(name), true, std::nullopt};
  for (const auto& f : firsts) {
    if (f) {
      result.passed = false;
      result.witness = rep.basis_word(*f);
      break;
    }
  }
  return result;
}

VandermondeData vandermonde_data(std::size_t m) {
  if (m == 0) throw std::invalid_argument("vandermonde_data: m must be positive");
  Matrix v(m, std::vector<MultiPoly>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) v[a][b] = MultiPoly::u_power(b + 1, static_cast<int>(a), m);
  }
  VandermondeData data;
  data.delta = determinant(v, m);
  data.f.assign(m, std::vector<MultiPoly>(m));
  // adj(V)[c][i] = (-1)^{c+i} det(V without row i and column c)
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < m; ++i) {
      MultiPoly minor = determinant(delete_row_col(v, i, c), m);
      data.f[c][i] = (c + i) % 2 ? -minor : minor;
    }
  }
  return data;
}

MultiPoly evaluate_f(const VandermondeData& data, std::size_t c, std::size_t d) {
  const std::size_t m = data.f.size();
  MultiPoly value(m);
  for (std::size_t i = 0; i < m; ++i) {
    value += data.f.at(c - 1)[i] * MultiPoly::u_power(d, static_cast<int>(i), m);
  }
  return value;
}

RelationReport check_ak_presentation(int n, const std::vector<int>& k, const std::vector<int>& l, unsigned jobs) {
  const SuperRep rep(GradedAlphabet(k, l), n);
  const std::size_t m = rep.num_u();
  const ExprBuilder b(m);
  using Op = OperatorSymbol;
  RelationReport report;
  auto check = [&](std::string name, const OpExpr& lhs, const OpExpr& rhs) {
    report.results.push_back(check_identity(rep, std::move(name), lhs, rhs, jobs));
  };

  std::vector<OpPoly> cyclo;
  for (std::size_t i = 1; i <= m; ++i) cyclo.push_back(b.minus(Op::T0(), b.u(i)));
  check("(T0-u1)...(T0-um)=0", b.product(cyclo), b.zero());

  if (n >= 2) {
    check("T0 T1 T0 T1=T1 T0 T1 T0", b.words({Op::T0(), Op::T(1), Op::T0(), Op::T(1)}),
          b.words({Op::T(1), Op::T0(), Op::T(1), Op::T0()}));
  }
  for (int i = 1; i <= n - 1; ++i) {
    const OpExpr rhs = {{b.one(), {{{b.one() - b.q(), {Op::T(i)}}, {b.q(), {}}}}}};
    check("T" + std::to_string(i) + "^2=(1-q)T" + std::to_string(i) + "+q", b.words({Op::T(i), Op::T(i)}), rhs);
  }
  for (int j = 2; j <= n - 1; ++j) {
    check("T0 T" + std::to_string(j) + "=T" + std::to_string(j) + " T0", b.words({Op::T0(), Op::T(j)}),
          b.words({Op::T(j), Op::T0()}));
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      check("T" + std::to_string(i) + " T" + std::to_string(j) + "=T" + std::to_string(j) + " T" + std::to_string(i),
            b.words({Op::T(i), Op::T(j)}), b.words({Op::T(j), Op::T(i)}));
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    const std::string a = "T" + std::to_string(i);
    const std::string c = "T" + std::to_string(i + 1);
    check(a + " " + c + " " + a + "=" + c + " " + a + " " + c, b.words({Op::T(i), Op::T(i + 1), Op::T(i)}),
          b.words({Op::T(i + 1), Op::T(i), Op::T(i + 1)}));
  }
  return report;
}

RelationReport check_shoji_presentation(int n, const std::vector<int>& k, const std::vector<int>& l,
                                        unsigned jobs) {
  const SuperRep rep(GradedAlphabet(k, l), n);
  const std::size_t m = rep.num_u();
  const ExprBuilder b(m);
  const VandermondeData vd = vandermonde_data(m);
  const MultiPoly delta2 = vd.delta * vd.delta;
  using Op = OperatorSymbol;
  RelationReport report;
  auto check = [&](std::string name, const OpExpr& lhs, const OpExpr& rhs) {
    report.results.push_back(check_identity(rep, std::move(name), lhs, rhs, jobs));
  };
  auto xi = [](int j) { return "xi" + std::to_string(j); };
  auto g = [](int j) { return "g" + std::to_string(j); };
  // g_j of the presentation acts on positions (j-1, j)
  auto gop = [](int j) { return Op::T(j - 1); };
  auto f_of_xi = [&](std::size_t c, int j) {
    OpPoly p;
    for (std::size_t i = 0; i < m; ++i) {
      if (vd.f[c - 1][i].is_zero()) continue;
      OperatorWord w;
      if (i > 0) w.push_back(Op::omega(j, static_cast<int>(i)));
      p.emplace_back(vd.f[c - 1][i], std::move(w));
    }
    return p;
  };

  for (int j = 2; j <= n; ++j) {
    const OpExpr rhs = {{b.one(), {{{b.one() - b.q(), {gop(j)}}, {b.q(), {}}}}}};
    check(g(j) + "^2=(1-q)" + g(j) + "+q", b.words({gop(j), gop(j)}), rhs);
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<OpPoly> cyclo;
    for (std::size_t c = 1; c <= m; ++c) cyclo.push_back(b.minus(Op::omega(i, 1), b.u(c)));
    check("(" + xi(i) + "-u1)...(" + xi(i) + "-um)=0", b.product(cyclo), b.zero());
  }
  for (int j = 2; j + 1 <= n; ++j) {
    check(g(j) + " " + g(j + 1) + " " + g(j) + "=" + g(j + 1) + " " + g(j) + " " + g(j + 1),
          b.words({gop(j), gop(j + 1), gop(j)}), b.words({gop(j + 1), gop(j), gop(j + 1)}));
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      check(g(i) + " " + g(j) + "=" + g(j) + " " + g(i), b.words({gop(i), gop(j)}), b.words({gop(j), gop(i)}));
    }
  }
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (std::abs(i - j) < 2) continue;
      check(g(j) + " " + xi(i) + "=" + xi(i) + " " + g(j), b.words({gop(j), Op::omega(i, 1)}),
            b.words({Op::omega(i, 1), gop(j)}));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      check(xi(i) + " " + xi(j) + "=" + xi(j) + " " + xi(i), b.words({Op::omega(i, 1), Op::omega(j, 1)}),
            b.words({Op::omega(j, 1), Op::omega(i, 1)}));
    }
  }
  for (int j = 2; j <= n; ++j) {
    // sum_{a<b} (u_a - u_b)(1-q) F_a(xi_{j-1}) F_b(xi_j)
    OpExpr correction;
    for (std::size_t a = 1; a <= m; ++a) {
      for (std::size_t c = a + 1; c <= m; ++c) {
        correction.push_back({(b.u(a) - b.u(c)) * (b.one() - b.q()), {f_of_xi(a, j - 1), f_of_xi(c, j)}});
      }
    }
    auto scaled = [&](OperatorWord w, const OpExpr& extra, int sign) {
      OpExpr e = b.product({b.word(std::move(w))}, delta2);
      for (auto p : extra) {
        if (sign < 0) p.coeff = -p.coeff;
        e.push_back(std::move(p));
      }
      return e;
    };
    check("D^2 " + g(j) + " " + xi(j) + "=D^2 " + xi(j - 1) + " " + g(j) + "-sum", scaled({gop(j), Op::omega(j, 1)}, {}, 1),
          scaled({Op::omega(j - 1, 1), gop(j)}, correction, -1));
    check("D^2 " + g(j) + " " + xi(j - 1) + "=D^2 " + xi(j) + " " + g(j) + "+sum",
          scaled({gop(j), Op::omega(j - 1, 1)}, {}, 1), scaled({Op::omega(j, 1), gop(j)}, correction, 1));
  }
  return report;
}

}  // namespace akchar
