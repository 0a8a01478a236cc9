#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bordercert/borderbasis.hpp"
#include "bordercert/linalg.hpp"
#include "bordercert/modification.hpp"

namespace bordercert {

// Column of the unknown a_ij: i fast, j slow, both 1-based.
inline int tangent_column(const OrderIdealData& oid, int i, int j) {
  return (j - 1) * oid.mu + (i - 1);
}

struct TangentSystemStats {
  std::size_t pairs = 0;
  std::size_t rows = 0;         // after deduplication
  std::size_t columns = 0;
  int rank = 0;
};

// Deduplicated linearized neighbor relations, each row scaled to a leading 1.
std::vector<SparseRow<RationalField>> tangent_equations(const BorderSystem<Rational>& sys);
std::vector<SparseRow<ModpField>> tangent_equations(const BorderSystem<Fp>& sys);

// mu * nu - rank of the linearized neighbor relations. Throws ArgumentError
// unless sys is a border basis, and InternalError if the result falls below
// dim_U of the order ideal.
int tangent_dimension(const BorderSystem<Rational>& sys, TangentSystemStats* stats = nullptr);
int tangent_dimension(const BorderSystem<Fp>& sys, TangentSystemStats* stats = nullptr);

long dim_U(const OrderIdealData& oid);

struct ExactTangentResult {
  int dimension = 0;
  // "certificate": the rank modulo a prime of the integer-scaled equations
  // gives dim <= dim_U, and the coordinate tuples are exact solutions of rank
  // dim_U over Q, so dim = dim_U. "elimination": full rational elimination.
  std::string method;
  TangentSystemStats stats;
};

// Exact tangent dimension at the rational point given by the assignment.
ExactTangentResult exact_tangent_dimension(const GenericModification& gm, const Assignment& point,
                                           std::uint64_t prime = Fp::kDefaultPrime);

struct Coordinate {
  enum class Kind { C, Theta, Z };
  Kind kind = Kind::C;
  int a = 0;  // C: i, Theta: q, Z: alpha
  int b = 0;  // C: j, Theta: unused, Z: lambda

  std::string name() const;  // "C[i,j]", "theta[q]", "Z[alpha,lambda]"
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// All of D u Theta u Z in registry order, then Z by (alpha, lambda).
std::vector<Coordinate> all_coordinates(const GenericModification& gm);

// Key component (i_{alpha,lambda}, j_alpha) of a Z direction.
std::pair<int, int> key_component(const OrderIdealData& oid, const TranslationFrame& frame,
                                  int alpha, int lambda);

using TangentTuple = std::vector<Rational>;

// Tangent tuple of the curve in the chi direction through the point given by
// the assignment (all Z coordinates at 0).
TangentTuple coordinate_tangent_tuple(const GenericModification& gm, const Assignment& point,
                                      const Coordinate& chi);

// The same for every coordinate, sharing the normal-form cache.
std::vector<TangentTuple> all_coordinate_tuples(const GenericModification& gm,
                                                const Assignment& point);

// Z tuple through the formal partial derivative, without substitution.
TangentTuple z_tuple_by_derivative(const GenericModification& gm, const Assignment& point,
                                   int alpha, int lambda);

int independence_rank(const GenericModification& gm, const Assignment& point);

// Checks that a tuple solves the linearized neighbor relations exactly.
bool satisfies_tangent_equations(const BorderSystem<Rational>& sys, const TangentTuple& tuple);

}  // namespace bordercert
