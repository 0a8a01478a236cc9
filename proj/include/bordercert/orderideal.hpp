#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bordercert/monomial.hpp"

namespace bordercert {

struct Signature {
  int n = 0;
  int r = 0;
  int s = 0;
  int delta = 0;
  int w = 0;

  void validate() const;
  std::string to_string() const;  // "n,r,s,delta,w"
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Parses "n,r,s,delta,w" and validates it.
Signature parse_signature(const std::string& text);

// The lex-segment complement O(n, kappa, r, s) = O(n, r, s, n - kappa, r - 1).
Signature shape_to_signature(int n, int kappa, int r, int s);
Signature parse_shape(const std::string& text);

// A next-door pair has beta == 0 (x_0 = 1): x_alpha b_j1 = b_j2.
// An across-the-street pair has x_alpha b_j1 = x_beta b_j2, alpha != beta.
struct NeighborPair {
  int j1 = 0;
  int j2 = 0;
  int alpha = 0;
  int beta = 0;

  bool next_door() const { return beta == 0; }
  friend bool operator==(const NeighborPair&, const NeighborPair&) = default;
};

// One step x_alpha * from = x_beta * to.
struct PathStep {
  Monomial from;
  Monomial to;
  int alpha = 0;
  int beta = 0;
};

class OrderIdealData {
 public:
  Signature signature;
  int n = 0;

  std::vector<Monomial> basis;   // t_1..t_mu
  std::vector<Monomial> border;  // b_1..b_nu
  int mu = 0;
  int nu = 0;
  std::vector<int> hilbert;

  Monomial b_ell{1};
  std::vector<Monomial> leading;           // W
  std::vector<Monomial> trailing;          // T = O_s
  std::vector<Monomial> tar_all;           // degrees r..s
  std::vector<Monomial> tar_prime;         // degrees r..s-1
  std::vector<Monomial> tar_double_prime;  // tar_prime elements divisible by x_{delta+1}^w
  std::vector<Monomial> s_l;
  std::vector<Monomial> s_d;
  int gamma = 0;
  int ell = 0;
  int tau = 0;

  // 1-based indices, 0 when absent.
  int basis_index(const Monomial& m) const;
  int border_index(const Monomial& m) const;
  bool in_basis(const Monomial& m) const { return basis_index(m) != 0; }
  bool in_border(const Monomial& m) const { return border_index(m) != 0; }

  const Monomial& t(int i) const { return basis.at(i - 1); }
  const Monomial& b(int j) const { return border.at(j - 1); }

  // x_alpha * t_i encoded as +i' when it is the basis monomial t_i', or -j
  // when it is the border monomial b_j.
  int times_var_slot(int i, int alpha) const { return mult_[(i - 1) * n + (alpha - 1)]; }

  bool is_leading(int j) const { return leading_flag_[j - 1]; }
  bool is_trailing(int i) const { return t(i).degree() == signature.s; }
  bool in_s_l(int j) const { return s_l_flag_[j - 1]; }
  bool in_s_d(int j) const { return s_d_flag_[j - 1]; }

  friend OrderIdealData build_order_ideal(const Signature& sig);

 private:
  std::unordered_map<Monomial, int, MonomialHash> basis_idx_;
  std::unordered_map<Monomial, int, MonomialHash> border_idx_;
  std::vector<int> mult_;
  std::vector<bool> leading_flag_, s_l_flag_, s_d_flag_;
};

OrderIdealData build_order_ideal(const Signature& sig);

long long gamma_formula(const Signature& sig);

std::vector<NeighborPair> neighbor_pairs(const OrderIdealData& oid);

// Canonical chain from x_delta^{r-s0} x_{delta+1}^{s0} to a degree-r monomial
// in x_delta..x_n whose x_delta-degree is at most r - s0.
std::vector<PathStep> across_street_path(const OrderIdealData& oid, const Monomial& from,
                                         const Monomial& to);

struct TranslationFrame {
  std::map<int, Monomial> anchor;                     // b_{j_alpha}
  std::map<int, std::vector<Monomial>> delta_sets;    // Delta_alpha
  int eta = 0;
};

TranslationFrame translation_frame(const OrderIdealData& oid);

}  // namespace bordercert
