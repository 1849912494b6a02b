#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vdw::perm {

using Letter = std::uint32_t;

// Bijection of {0,...,n-1}. External text forms use 1-indexed letters.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Letter> images);

  // Cycles use 1-indexed letters, e.g. {{1,2},{3,4,5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Letter>>& cycles);
  // Parses "(1 2)(3 4 5)" or "(1,2)(3,4,5)"; "()" is the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Letter operator()(Letter x) const { return images_[x]; }
  const std::vector<Letter>& images() const { return images_; }

  bool is_identity() const;
  // Apply *this first, then rhs.
  Permutation then(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  // Cycle lengths sorted in descending order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::size_t orbit_count() const;
  std::size_t moved_points() const;
  // n - #orbits
  std::size_t ind() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Letter> images_;
};

// Sum of (cycle length - 1); must agree with Permutation::ind.
std::size_t ind_from_cycle_type(const std::vector<std::size_t>& cycle_type);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace vdw::perm
