#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akchar/multipoly.hpp"
#include "akchar/superrep.hpp"

namespace akchar {

/// Linear combination sum_i c_i * word_i of operator words.
using OpPoly = std::vector<std::pair<MultiPoly, OperatorWord>>;

/// c * P_1 * P_2 * ... * P_r; the rightmost factor acts first.
struct OpProduct {
  MultiPoly coeff;
  std::vector<OpPoly> factors;
};

/// Sum of products, one side of an operator identity.
using OpExpr = std::vector<OpProduct>;

struct RelationResult {
  std::string relation;
  bool passed = false;
  /// First basis word (lexicographic) on which the two sides differ.
  std::optional<BasisWord> witness;
};

struct RelationReport {
  std::vector<RelationResult> results;

  bool all_passed() const;
  std::size_t num_failed() const;
};

TensorState apply_expr(const SuperRep& rep, const OpExpr& expr, const TensorState& state);

/// Compares lhs and rhs on every basis word of V^{tensor n}.
RelationResult check_identity(const SuperRep& rep, std::string name, const OpExpr& lhs, const OpExpr& rhs,
                              unsigned jobs = 1);

/// Vandermonde determinant Delta of the matrix (u_b^a), rows a = 0..m-1,
/// columns b = 1..m, and F_c(x) = sum_i F[c-1][i] x^i with F_c(u_d) = delta_cd Delta.
struct VandermondeData {
  MultiPoly delta;
  std::vector<std::vector<MultiPoly>> f;
};

VandermondeData vandermonde_data(std::size_t m);

/// Evaluates F_c at x = u_d (c, d 1-based).
MultiPoly evaluate_f(const VandermondeData& data, std::size_t c, std::size_t d);

/// Cyclotomic relation on T0, T0 T1 T0 T1 = T1 T0 T1 T0, the quadratic
/// relation, far commutation (including T0 with T_j, j >= 2) and the braid
/// relations, all as operator identities on V^{tensor n}.
RelationReport check_ak_presentation(int n, const std::vector<int>& k, const std::vector<int>& l,
                                     unsigned jobs = 1);

/// Shoji's presentation with xi_j -> omega_j and g_j -> T_{j-1} (2 <= j <= n).
/// The xi-exchange relations are checked with Delta^2 multiplied through.
RelationReport check_shoji_presentation(int n, const std::vector<int>& k, const std::vector<int>& l,
                                        unsigned jobs = 1);

}  // namespace akchar
