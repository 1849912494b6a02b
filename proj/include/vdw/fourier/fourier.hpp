#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/polyarith/splitting_type.hpp"

namespace vdw::fourier {

enum class SpaceKind { kMonic, kBinary };

std::string to_string(SpaceKind kind);
SpaceKind parse_space_kind(const std::string& text);

// Monic points are (a_1..a_n) for x^n + a_1 x^(n-1) + ... + a_n.
// Binary points are (c_0..c_n) for sum c_i x^(n-i) y^i.
// Points are encoded as sum_j v_j p^(N-1-j), coordinate 0 most significant.
struct WeightSpace {
  SpaceKind kind = SpaceKind::kMonic;
  std::uint64_t p = 2;
  unsigned n = 1;

  unsigned dimension() const { return kind == SpaceKind::kMonic ? n : n + 1; }
  std::uint64_t size() const;
  std::uint64_t encode(const std::vector<std::uint64_t>& point) const;
  std::vector<std::uint64_t> decode(std::uint64_t index) const;
};

// Irreducibles available to a tuple: monic ones of degree d, plus y when binary and d = 1.
std::uint64_t irreducible_count(const WeightSpace& space, unsigned d);

// Number of sigma-patterned tuples of distinct irreducibles whose product with multiplicity divides
// the point, modulo permutations of identical parts. Computed from the factorization of the point.
std::uint64_t weight(const WeightSpace& space, const std::vector<std::uint64_t>& point,
                     const poly::SplittingType& sigma);

// The weight at every point, built by enumerating tuples and marking their multiples.
std::vector<std::uint64_t> weight_table(const WeightSpace& space, const poly::SplittingType& sigma);

enum class DftMethod { kAxis, kDirect };

// values[g] = p^(-N) sum_f w(f) exp(2 pi i [f, g] / p), [f, g] the coordinatewise dot product.
struct FourierTable {
  WeightSpace space;
  poly::SplittingType sigma;
  std::vector<std::uint64_t> weights;
  std::vector<std::complex<double>> values;
  unsigned k = 0;
  unsigned d = 0;
  BigInt aut_count;

  // |sum_g |w^(g)|^2 - p^(-N) sum_f w(f)^2| relative to the right-hand side.
  double parseval_relative_error() const;
  // Absolute rounding bound on each value: N * eps * max_f w(f).
  double error_budget() const;
};

// Axis: N length-p transforms, table size p^N <= 2*10^7. Direct: p <= 5 and N <= 6. TooLarge otherwise.
FourierTable fourier_table(const WeightSpace& space, const poly::SplittingType& sigma,
                           DftMethod method = DftMethod::kAxis);

struct DecayReport {
  WeightSpace space;
  std::string sigma;
  unsigned k = 0;
  unsigned d = 0;
  double main_term_error = 0;      // |w^(0) - p^-k / #Aut| p^(k+1)
  double max_nonzero_scaled = 0;   // max_{g != 0} |w^(g)| p^e
  std::string exponent_used;       // "k+1", "k+1/2", or "empty" when deg sigma > n
  double parseval_error = 0;

  std::string to_json() const;
};

DecayReport verify_decay(const FourierTable& table);

// Points of the integer box [-H, H]^N whose reduction mod p has index >= k, via residue-class
// precount. The zero binary form is divisible by every tuple and counts for every k.
std::uint64_t box_count_index(SpaceKind kind, std::uint64_t p, unsigned n, unsigned k, std::uint64_t H);
// Same count for monic space by scanning every box point and calling index_mod_p.
std::uint64_t box_count_index_direct(std::uint64_t p, unsigned n, unsigned k, std::uint64_t H);

// Monic f in [-H, H]^n with index >= k_i mod p_i for every i. Requires prod p_i <= 10^5.
std::uint64_t multi_prime_box_count(const std::vector<std::pair<std::uint64_t, unsigned>>& conditions,
                                    unsigned n, std::uint64_t H);

}  // namespace vdw::fourier
